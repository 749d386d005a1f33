"""Command-line front end: extraction inspection, classification, evaluation.

Exit codes: 0 success, 1 for I/O and subprocess failures (including manifest
problems), 2 for malformed content.  `--format json` output carries a
top-level ``"schema": 1`` marker and full float precision; the default table
output rounds similarities to one decimal percent and accuracies to integer
percent.  Identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .classify import classify_document
from .corpus_io import (
    CorpusFormatError,
    Document,
    DomainModel,
    Lexicon,
    ManifestEntry,
    ManifestError,
    load_default_domain_model,
    load_default_lexicon,
    load_domain_model,
    load_lexicon,
    load_manifest,
    parse_conllu,
)
from .patterns import ALL_PATTERNS, get_pattern_result

EXIT_OK = 0
EXIT_IO = 1
EXIT_FORMAT = 2

PARSER_CMD_ENV = "VDNN_PARSER_CMD"


class AdapterError(Exception):
    """Spawning or running the external raw-text parser command failed."""


# ---------------------------------------------------------------------------
# Evaluation report

@dataclass(frozen=True)
class EvalRow:
    """Outcome for one evaluated document."""
    document_id: str
    gold: str
    predicted: tuple[str, ...]   # ranked domain names, best first

    @property
    def top1(self) -> bool:
        return bool(self.predicted) and self.predicted[0] == self.gold

    @property
    def top2(self) -> bool:
        return self.gold in self.predicted[:2]


@dataclass(frozen=True)
class DomainAccuracy:
    domain: str
    documents: int
    top1_correct: int
    top2_correct: int

    @property
    def top1_accuracy(self) -> float:
        return self.top1_correct / self.documents if self.documents else 0.0

    @property
    def top2_accuracy(self) -> float:
        return self.top2_correct / self.documents if self.documents else 0.0


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[EvalRow, ...]
    domains: tuple[DomainAccuracy, ...]

    @property
    def documents(self) -> int:
        return len(self.rows)

    @property
    def top1_correct(self) -> int:
        return sum(1 for row in self.rows if row.top1)

    @property
    def top2_correct(self) -> int:
        return sum(1 for row in self.rows if row.top2)

    @property
    def top1_accuracy(self) -> float:
        return self.top1_correct / self.documents if self.rows else 0.0

    @property
    def top2_accuracy(self) -> float:
        return self.top2_correct / self.documents if self.rows else 0.0


def compute_accuracy(rows: Iterable[EvalRow],
                     domain_order: Sequence[str] = ()) -> EvalReport:
    """Aggregate per-document outcomes into per-domain and overall ratios.

    Domains appear in `domain_order` (zero-count domains included); gold
    labels outside that order are appended in first-seen order so the
    per-domain counts always partition the rows.  Ratios are exact; rounding
    happens only at display time.
    """
    rows = tuple(rows)
    order = list(domain_order)
    known = set(order)
    for row in rows:
        if row.gold not in known:
            order.append(row.gold)
            known.add(row.gold)
    domains = []
    for name in order:
        group = [row for row in rows if row.gold == name]
        domains.append(DomainAccuracy(
            domain=name,
            documents=len(group),
            top1_correct=sum(1 for row in group if row.top1),
            top2_correct=sum(1 for row in group if row.top2),
        ))
    return EvalReport(rows=rows, domains=tuple(domains))


# ---------------------------------------------------------------------------
# Shared option handling

def _pattern_ids(text: str) -> tuple[int, ...]:
    ids = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            number = int(piece)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"pattern id {piece!r} is not an integer") from None
        if number not in ALL_PATTERNS:
            raise argparse.ArgumentTypeError(
                f"pattern id {number} is out of range "
                f"{ALL_PATTERNS[0]}..{ALL_PATTERNS[-1]}")
        if number not in ids:
            ids.append(number)
    return tuple(ids)


def _positive_int(text: str) -> int:
    try:
        number = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if number < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return number


def _add_model_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", metavar="PATH",
                        help="domain model JSON (default: bundled model)")
    parser.add_argument("--lexicon", metavar="PATH",
                        help="trigger lexicon JSON (default: bundled lexicon)")
    parser.add_argument("--format", choices=("json", "table"), default="table",
                        help="output format (default: table)")


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", nargs="?", metavar="FILE",
                        help="input file; omit or use '-' for standard input")
    parser.add_argument("--raw", action="store_true",
                        help="input is plain abstract text; route it through "
                             "the external parser command first")
    parser.add_argument("--parser-cmd", metavar="CMD",
                        help=f"parser command for --raw "
                             f"(fallback: ${PARSER_CMD_ENV})")
    _add_model_options(parser)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vdnn",
        description="Label the application domain of a computer-vision "
                    "abstract from its dependency parse.")
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser(
        "extract", help="list the phrases each extraction rule finds")
    _add_input_options(extract)
    extract.add_argument("--patterns", type=_pattern_ids, default=ALL_PATTERNS,
                         metavar="LIST",
                         help="comma-separated rule numbers, e.g. 1,3,7")
    extract.set_defaults(func=cmd_extract)

    classify = sub.add_parser(
        "classify", help="rank application domains for one abstract")
    _add_input_options(classify)
    classify.add_argument("--top-k", type=_positive_int, default=6, metavar="N",
                          help="maximum ranking length (default: 6)")
    classify.add_argument("--include-zero", action="store_true",
                          help="keep zero-similarity domains in the ranking")
    classify.set_defaults(func=cmd_classify)

    evaluate = sub.add_parser(
        "eval", help="score a labeled corpus and report Top1/Top2 accuracy")
    evaluate.add_argument("--manifest", required=True, metavar="PATH",
                          help="JSON array of {file, label} entries")
    evaluate.add_argument("--corpus-dir", required=True, metavar="PATH",
                          help="directory the manifest's files live in")
    _add_model_options(evaluate)
    evaluate.set_defaults(func=cmd_eval)

    model = sub.add_parser("model", help="inspect the domain model")
    model_sub = model.add_subparsers(dest="model_command", required=True)
    show = model_sub.add_parser("show", help="print every domain's keywords "
                                             "and weights")
    _add_model_options(show)
    show.set_defaults(func=cmd_model_show)

    return parser


# ---------------------------------------------------------------------------
# Input plumbing

def _load_model(args: argparse.Namespace) -> DomainModel:
    if args.model:
        with open(args.model, encoding="utf-8") as fh:
            return load_domain_model(fh)
    return load_default_domain_model()


def _load_lexicon(args: argparse.Namespace) -> Lexicon:
    if args.lexicon:
        with open(args.lexicon, encoding="utf-8") as fh:
            return load_lexicon(fh)
    return load_default_lexicon()


def _read_source(args: argparse.Namespace) -> tuple[str, str]:
    """Read the input file (or stdin) and name it for error messages."""
    if args.path in (None, "-"):
        return sys.stdin.read(), "<stdin>"
    return Path(args.path).read_text(encoding="utf-8"), args.path


def _parser_command(args: argparse.Namespace) -> str:
    command = args.parser_cmd or os.environ.get(PARSER_CMD_ENV, "")
    if not command.strip():
        raise AdapterError(
            f"--raw needs a parser command: pass --parser-cmd or set "
            f"${PARSER_CMD_ENV}")
    return command


def _run_parser_command(command: str, text: str) -> str:
    """Feed abstract text to the external parser, return its CoNLL-U output."""
    try:
        proc = subprocess.run(shlex.split(command), input=text,
                              capture_output=True, text=True)
    except OSError as exc:
        raise AdapterError(f"cannot run parser command {command!r}: {exc}") from exc
    if proc.returncode != 0:
        detail = proc.stderr.strip().splitlines()
        suffix = f": {detail[-1]}" if detail else ""
        raise AdapterError(
            f"parser command exited with status {proc.returncode}{suffix}")
    return proc.stdout


def _load_single_document(args: argparse.Namespace) -> Document:
    text, name = _read_source(args)
    if args.raw:
        text = _run_parser_command(_parser_command(args), text)
    if not text.strip():
        raise CorpusFormatError(f"{name}: empty input")
    documents = parse_conllu(text, default_id=name)
    if len(documents) != 1:
        raise CorpusFormatError(
            f"{name}: expected one document, found {len(documents)}")
    return documents[0]


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _number(value: float) -> str:
    """Render a weight/component without trailing zeros (0.8, 0, 0.55)."""
    return f"{value:g}"


# ---------------------------------------------------------------------------
# Subcommands

def cmd_extract(args: argparse.Namespace) -> int:
    document = _load_single_document(args)
    lexicon = _load_lexicon(args)
    phrases = get_pattern_result(document, lexicon, patterns=args.patterns)

    if args.format == "json":
        _print_json({
            "schema": 1,
            "document": document.id,
            "phrases": [
                {
                    "pattern_id": phrase.pattern_id,
                    "head": phrase.head.form,
                    "head_index": phrase.head.index,
                    "text": phrase.text,
                }
                for phrase in phrases
            ],
        })
        return EXIT_OK

    lines = []
    for pattern_id in args.patterns:
        group = [p for p in phrases if p.pattern_id == pattern_id]
        if not group:
            continue
        lines.append(f"pattern {pattern_id}:")
        lines.extend(f"  [{p.head.form}] {p.text}" for p in group)
    print("\n".join(lines) if lines else "no phrases extracted")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    document = _load_single_document(args)
    model = _load_model(args)
    lexicon = _load_lexicon(args)
    bag, match_vectors, ranking = classify_document(
        document, model, lexicon, top_k=args.top_k,
        include_zero=args.include_zero)
    vocabulary = model.vocabulary()
    keywords = [word for word in bag if word.casefold() in vocabulary]

    if args.format == "json":
        _print_json({
            "schema": 1,
            "document": document.id,
            "keywords": keywords,
            "match_vectors": [
                {
                    "domain": mv.domain,
                    "components": list(mv.components),
                    "matched": list(mv.matched),
                }
                for mv in match_vectors
            ],
            "ranking": [
                {
                    "rank": position,
                    "domain": result.domain,
                    "similarity": result.similarity,
                    "matched": list(result.matched),
                }
                for position, result in enumerate(ranking, start=1)
            ],
            "no_match": len(ranking) == 0,
        })
        return EXIT_OK

    width = max(len(mv.domain) for mv in match_vectors)
    print(f"document: {document.id}")
    print(f"keywords: {' '.join(keywords) if keywords else '(none)'}")
    print()
    print("match vectors:")
    for mv in match_vectors:
        components = " ".join(_number(z) for z in mv.components)
        print(f"  {mv.domain:<{width}}  {components}")
    print()
    if not ranking:
        print("ranking: no match")
        return EXIT_OK
    print("ranking:")
    for position, result in enumerate(ranking, start=1):
        matched = " ".join(result.matched)
        line = (f"  {position}. {result.domain:<{width}}  "
                f"{result.similarity * 100:.1f}%  {matched}")
        print(line.rstrip())
    return EXIT_OK


def _evaluate_entry(entry: ManifestEntry, corpus_dir: Path, model: DomainModel,
                    lexicon: Lexicon) -> EvalRow:
    text = (corpus_dir / entry.file).read_text(encoding="utf-8")
    try:
        documents = parse_conllu(text, default_id=entry.file)
    except CorpusFormatError as exc:
        raise CorpusFormatError(f"{entry.file}: {exc}") from None
    if len(documents) != 1:
        raise CorpusFormatError(
            f"{entry.file}: expected one document, found {len(documents)}")
    _, _, ranking = classify_document(documents[0], model, lexicon)
    return EvalRow(document_id=entry.file, gold=entry.label,
                   predicted=tuple(result.domain for result in ranking))


def cmd_eval(args: argparse.Namespace) -> int:
    model = _load_model(args)
    lexicon = _load_lexicon(args)
    with open(args.manifest, encoding="utf-8") as fh:
        manifest = load_manifest(fh, model)
    corpus_dir = Path(args.corpus_dir)

    # Files are classified concurrently; map() yields in manifest order, so
    # the report is deterministic regardless of scheduling.
    with ThreadPoolExecutor(max_workers=min(8, len(manifest))) as pool:
        rows = list(pool.map(
            lambda entry: _evaluate_entry(entry, corpus_dir, model, lexicon),
            manifest))
    report = compute_accuracy(rows, domain_order=model.domain_names())

    if args.format == "json":
        _print_json({
            "schema": 1,
            "overall": {
                "documents": report.documents,
                "top1_correct": report.top1_correct,
                "top2_correct": report.top2_correct,
                "top1_accuracy": report.top1_accuracy,
                "top2_accuracy": report.top2_accuracy,
            },
            "domains": [
                {
                    "domain": acc.domain,
                    "documents": acc.documents,
                    "top1_correct": acc.top1_correct,
                    "top2_correct": acc.top2_correct,
                    "top1_accuracy": acc.top1_accuracy,
                    "top2_accuracy": acc.top2_accuracy,
                }
                for acc in report.domains
            ],
            "documents": [
                {
                    "id": row.document_id,
                    "gold": row.gold,
                    "predicted": list(row.predicted[:2]),
                    "top1": row.top1,
                    "top2": row.top2,
                }
                for row in report.rows
            ],
        })
        return EXIT_OK

    width = max(len(acc.domain) for acc in report.domains)
    width = max(width, len("overall"), len("domain"))
    print(f"{'domain':<{width}}  {'docs':>4}  {'top1':>10}  {'top2':>10}")
    for acc in report.domains:
        print(f"{acc.domain:<{width}}  {acc.documents:>4}  "
              f"{_count_percent(acc.top1_correct, acc.top1_accuracy):>10}  "
              f"{_count_percent(acc.top2_correct, acc.top2_accuracy):>10}")
    print(f"{'overall':<{width}}  {report.documents:>4}  "
          f"{_count_percent(report.top1_correct, report.top1_accuracy):>10}  "
          f"{_count_percent(report.top2_correct, report.top2_accuracy):>10}")
    return EXIT_OK


def _count_percent(count: int, ratio: float) -> str:
    return f"{count} ({ratio * 100:.0f}%)"


def cmd_model_show(args: argparse.Namespace) -> int:
    model = _load_model(args)

    if args.format == "json":
        _print_json({
            "schema": 1,
            "domains": [
                {
                    "name": domain.name,
                    "entries": [[kw, weight] for kw, weight in domain.entries],
                }
                for domain in model.domains
            ],
        })
        return EXIT_OK

    for domain in model.domains:
        print(f"{domain.name} ({len(domain.entries)} entries)")
        for keyword, weight in domain.entries:
            print(f"  {keyword:<18} {_number(weight)}")
    total = sum(len(domain.entries) for domain in model.domains)
    print(f"total keywords: {total}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point

def main(argv: Sequence[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CorpusFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except AdapterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    raise SystemExit(main())
