"""Render parsed sentences as ten-column CoNLL-U.

Only the columns the downstream reader consumes are filled (ID, FORM,
LEMMA, UPOS, HEAD, DEPREL); XPOS, FEATS, DEPS, and MISC are written as
"_".  One blank line separates sentence blocks, so the block count equals
the backend's sentence segmentation.
"""

from __future__ import annotations

from .backends import Row
from .config import CORE_RENAMES, DIALECT_CORE

# The Universal Dependencies v2 relation inventory (base labels, before any
# ":subtype").  A UD-native backend stays inside this set; the downstream
# reader additionally accepts the alias spellings dobj and nsbj.
UNIVERSAL_RELATIONS = frozenset((
    "acl", "advcl", "advmod", "amod", "appos", "aux", "case", "cc", "ccomp",
    "clf", "compound", "conj", "cop", "csubj", "dep", "det", "discourse",
    "dislocated", "expl", "fixed", "flat", "goeswith", "iobj", "list",
    "mark", "nmod", "nsubj", "nummod", "obj", "obl", "orphan", "parataxis",
    "punct", "reparandum", "root", "vocative", "xcomp",
))

ACCEPTED_RELATIONS = UNIVERSAL_RELATIONS | frozenset(CORE_RENAMES.values()) \
    | frozenset(CORE_RENAMES)


def _field(value: str) -> str:
    """A column value: never empty, never containing a tab or newline."""
    value = value.replace("\t", " ").replace("\n", " ").strip()
    return value or "_"


def _label(deprel: str, dialect: str) -> str:
    if dialect == DIALECT_CORE:
        base, colon, subtype = deprel.partition(":")
        return CORE_RENAMES.get(base, base) + colon + subtype
    return deprel


def render_conllu(sentences: list[list[Row]], dialect: str) -> str:
    """Serialize sentences; empty input renders as the empty string."""
    blocks = []
    for rows in sentences:
        lines = []
        for index, form, lemma, upos, head, deprel in rows:
            lines.append("\t".join((
                str(index), _field(form), _field(lemma), _field(upos),
                "_", "_", str(head), _field(_label(deprel, dialect)),
                "_", "_",
            )))
        if lines:
            blocks.append("\n".join(lines))
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"
