"""Shared fixtures: an in-process CLI runner and a stub backend.

The stub is a deterministic toy segmenter/tokenizer (sentences end at a
period, tokens split on whitespace, punctuation kept as its own token)
registered under the backend name "stub".  It exercises every piece of
adapter plumbing — flag handling, rendering, dialects, exit codes —
without any parsing library installed.
"""

from __future__ import annotations

import io
import re
import sys

import pytest

pytest.importorskip(
    "parser_adapter",
    reason="install the adapter first: pip install -e parser_adapter/")

from parser_adapter import backends  # noqa: E402


def stub_parse(text: str) -> list[list[backends.Row]]:
    tokens = re.findall(r"[^\s.]+|\.", text)
    sentences: list[list[str]] = []
    current: list[str] = []
    for form in tokens:
        current.append(form)
        if form == ".":
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)

    parsed = []
    for forms in sentences:
        rows: list[backends.Row] = []
        for index, form in enumerate(forms, start=1):
            if index == 1:
                head, deprel = 0, "root"
            elif index == 2:
                head, deprel = 1, "obj"  # a renameable label for dialect tests
            else:
                head, deprel = 1, "dep"
            rows.append((index, form, form.lower(), "X", head, deprel))
        parsed.append(rows)
    return parsed


@pytest.fixture
def stub_backend(monkeypatch):
    """Register the stub backend; returns a dict recording loader calls."""
    calls: dict[str, str] = {}

    def loader(model: str) -> backends.ParseFn:
        calls["model"] = model
        return stub_parse

    monkeypatch.setitem(backends.LOADERS, "stub", loader)
    return calls


@pytest.fixture
def failing_backend(monkeypatch):
    """A backend that loads fine but blows up while parsing."""

    def loader(model: str) -> backends.ParseFn:
        def parse(text: str):
            raise RuntimeError("gpu on fire")
        return parse

    monkeypatch.setitem(backends.LOADERS, "failing", loader)


@pytest.fixture
def run_cli(monkeypatch, capsys):
    """Run the adapter CLI in-process with the given stdin text and flags."""

    def run(stdin_text: str, *argv: str) -> tuple[int, str, str]:
        from parser_adapter import cli

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
        code = cli.main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
