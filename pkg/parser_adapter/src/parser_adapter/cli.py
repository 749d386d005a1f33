"""Command-line entry point: abstract text on stdin, CoNLL-U on stdout.

One process per invocation with no shared state, so callers may run any
number of adapter processes concurrently.  Exit status is 0 on success
(including empty input, which produces empty output without starting a
backend) and 1 on any failure, with the diagnostic on standard error.
"""

from __future__ import annotations

import argparse
import sys

from .backends import BackendError, load_backend
from .config import AdapterConfig, DEFAULT_BACKEND, DIALECTS
from .emit import render_conllu

EXIT_OK = 0
EXIT_ERROR = 1


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parser-adapter",
        description="Parse one English abstract (standard input) into "
                    "CoNLL-U (standard output) with a neural dependency "
                    "parser.")
    parser.add_argument("--backend", default=DEFAULT_BACKEND,
                        help=f"parser library to use (default: {DEFAULT_BACKEND})")
    parser.add_argument("--model", default="",
                        help="backend model identifier "
                             "(default: the backend's pinned model)")
    parser.add_argument("--dialect", choices=DIALECTS, default=DIALECTS[0],
                        help="label spelling: the backend's native labels, "
                             "or renamed to the downstream reader's "
                             "canonical forms (default: %(default)s)")
    return parser


def _read_stdin() -> str:
    # Honor the UTF-8 contract regardless of locale when a byte stream is
    # available; redirected text streams (tests) are read as-is.
    stream = getattr(sys.stdin, "buffer", None)
    if stream is None:
        return sys.stdin.read()
    return stream.read().decode("utf-8")


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    config = AdapterConfig(backend=args.backend, model=args.model,
                           dialect=args.dialect)
    try:
        text = _read_stdin()
    except UnicodeDecodeError as exc:
        print(f"error: standard input is not UTF-8 text: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if not text.strip():
        return EXIT_OK
    try:
        parse = load_backend(config)
    except BackendError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        sentences = parse(text)
    except Exception as exc:
        print(f"error: backend {config.backend!r} failed while parsing: {exc}",
              file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render_conllu(sentences, config.dialect))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
