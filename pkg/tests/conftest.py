"""Shared test fixtures: bundled data and the hand-annotated demo abstract."""

from __future__ import annotations

from importlib import resources

import pytest

from vdnn import (
    Document,
    DomainModel,
    Lexicon,
    load_default_domain_model,
    load_default_lexicon,
    parse_conllu,
)


@pytest.fixture(scope="session")
def model() -> DomainModel:
    return load_default_domain_model()


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    return load_default_lexicon()


@pytest.fixture(scope="session")
def demo_document() -> Document:
    text = resources.files("vdnn").joinpath(
        "data", "sample_abstract.conllu").read_text(encoding="utf-8")
    [document] = parse_conllu(text)
    return document
