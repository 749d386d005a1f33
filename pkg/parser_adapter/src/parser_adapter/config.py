"""Adapter configuration: which backend parses, and how labels are spelled.

Extraction results are parse-sensitive, so reproducibility requires pinning
the parser model: the defaults below name the exact versions this adapter
was written against, and a configuration may carry its own pin (the spaCy
backend verifies a ``name-version`` pin against the installed model).
"""

from __future__ import annotations

from dataclasses import dataclass

# Label dialects.  The adapter emits the backend's native labels by default;
# "core" additionally applies CORE_RENAMES so the output uses the downstream
# reader's canonical spellings.  Renaming only — tree structure is never
# edited, so a backend whose analysis differs from Universal Dependencies by
# more than spelling stays different (see the README's backend notes).
DIALECT_NATIVE = "native"
DIALECT_CORE = "core"
DIALECTS = (DIALECT_NATIVE, DIALECT_CORE)

CORE_RENAMES = {"obj": "dobj", "nsbj": "nsubj"}

# Pinned default model identifier per backend.
DEFAULT_MODELS = {
    "stanza": "en",
    "spacy": "en_core_web_sm-3.7.1",
}

DEFAULT_BACKEND = "stanza"


@dataclass(frozen=True)
class AdapterConfig:
    """What to run: backend name, its model identifier, and the label dialect."""

    backend: str = DEFAULT_BACKEND
    model: str = ""  # empty means the backend's pinned default
    dialect: str = DIALECT_NATIVE

    def resolved_model(self) -> str:
        return self.model or DEFAULT_MODELS.get(self.backend, "")
