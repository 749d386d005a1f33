"""Builders shared across test modules.

The compact token table format used here keeps hand-written parses readable:
one token per line, six whitespace-separated fields
(index form lemma upos head deprel), blank lines between sentences.
"""

from __future__ import annotations

import json
from pathlib import Path

from vdnn import Document, parse_conllu

FIXTURES = Path(__file__).parent / "fixtures"


def conllu(table: str) -> str:
    """Expand a compact token table into CoNLL-U text."""
    lines = []
    for row in table.strip("\n").splitlines():
        if not row.strip():
            lines.append("")
            continue
        index, form, lemma, upos, head, deprel = row.split()
        lines.append("\t".join(
            [index, form, lemma, upos, "_", "_", head, deprel, "_", "_"]))
    return "\n".join(lines) + "\n"


def doc_of(table: str) -> Document:
    """Parse a compact token table into a single Document."""
    [document] = parse_conllu(conllu(table))
    return document


def load_fixture(name: str) -> Document:
    [document] = parse_conllu(
        (FIXTURES / name).read_text(encoding="utf-8"), default_id=name)
    return document


def normalize(text: str) -> str:
    """Comparison form for extracted phrases: casefold, split hyphens."""
    return " ".join(text.lower().replace("-", " ").split())


def focus_conllu(*keywords: str) -> str:
    """A minimal "We focus on <kw> ." parse; two keywords coordinate."""
    rows = [
        "1 We we PRON 2 nsubj",
        "2 focus focus VERB 0 root",
        "3 on on ADP 4 case",
        f"4 {keywords[0]} {keywords[0]} NOUN 2 obl",
    ]
    if len(keywords) == 1:
        rows.append("5 . . PUNCT 2 punct")
    else:
        rows += [
            "5 and and CCONJ 6 cc",
            f"6 {keywords[1]} {keywords[1]} NOUN 4 conj",
            "7 . . PUNCT 2 punct",
        ]
    return conllu("\n".join(rows))


def write_corpus(tmp_path: Path,
                 entries: list[tuple[str, tuple[str, ...], str]],
                 ) -> tuple[Path, Path]:
    """Write one-sentence corpus files plus a manifest.

    `entries` holds (filename, keywords, gold label) triples; returns the
    manifest path and the corpus directory.
    """
    corpus_dir = tmp_path / "corpus"
    corpus_dir.mkdir(exist_ok=True)
    for filename, keywords, _ in entries:
        (corpus_dir / filename).write_text(
            focus_conllu(*keywords), encoding="utf-8")
    manifest_path = tmp_path / "manifest.json"
    manifest_path.write_text(
        json.dumps([{"file": f, "label": label} for f, _, label in entries]),
        encoding="utf-8")
    return manifest_path, corpus_dir


# One document per domain, each holding only that domain's strongest keyword;
# every keyword below occurs in exactly one domain's list, so the gold domain
# is the lone nonzero similarity and rank 1 is forced.
TOP_KEYWORDS = (
    ("object_detection", "recognizing"),
    ("target_tracking", "track"),
    ("super_resolution", "superpixels"),
    ("image_generation", "generation"),
    ("3d_modeling", "3D"),
    ("human_pose", "pose"),
)


def perfect_corpus_entries(per_domain: int = 2
                           ) -> list[tuple[str, tuple[str, ...], str]]:
    return [
        (f"{domain}-{i}.conllu", (keyword,), domain)
        for domain, keyword in TOP_KEYWORDS
        for i in range(1, per_domain + 1)
    ]


def tracking_corpus_entries() -> list[tuple[str, tuple[str, ...], str]]:
    """Eleven tracking documents: 7 hit rank 1, 2 rank 2, 2 miss entirely.

    "pose" outscores "track" whenever both occur (0.8/sqrt(2.76) vs
    0.8/sqrt(3.14)), which pins gold to rank 2; "pose" alone leaves the gold
    domain out of the ranking altogether.
    """
    entries: list[tuple[str, tuple[str, ...], str]] = []
    for i in range(1, 8):
        entries.append((f"hit-{i}.conllu", ("track",), "target_tracking"))
    for i in range(1, 3):
        entries.append((f"near-{i}.conllu", ("pose", "track"), "target_tracking"))
    for i in range(1, 3):
        entries.append((f"miss-{i}.conllu", ("pose",), "target_tracking"))
    return entries


def max_oracle_error(cases: int, seed: int) -> float:
    """Worst disagreement between the cosine and its closed form.

    The matched vector only ever copies or zeroes domain weights, so the
    cosine must equal sqrt(matched weight energy / total weight energy).
    This recomputes that closed form with compensated summation over `cases`
    randomly drawn domains and reports the largest absolute difference.
    """
    import math
    import random

    from vdnn import WordBag
    from vdnn.classify import DomainVector, build_match_vector, cosine_similarity

    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        n = rng.randint(1, 20)
        keywords = tuple(f"kw{i}" for i in range(n))
        weights = tuple(rng.uniform(0.01, 1.0) for _ in range(n))
        flags = tuple(rng.random() < 0.5 for _ in range(n))
        bag = WordBag([k for k, hit in zip(keywords, flags) if hit]
                      + [f"noise{i}" for i in range(rng.randint(0, 3))])
        vector = DomainVector(domain="d", keywords=keywords, weights=weights)
        got = cosine_similarity(vector, build_match_vector(vector, bag))
        hit_energy = math.fsum(w * w for w, hit in zip(weights, flags) if hit)
        want = math.sqrt(hit_energy / math.fsum(w * w for w in weights))
        worst = max(worst, abs(got - want))
    return worst
