"""Parser backends and the registry that selects one at startup.

A backend loader takes a model identifier and returns a parse function
mapping text to sentences, each sentence a list of
``(index, form, lemma, upos, head, deprel)`` rows with indices starting at
1 and head 0 marking the root.  Loaders fail fast with :class:`BackendError`
when their library or model is missing, so a misconfigured installation is
diagnosed before any text is read, not in the middle of a corpus run.

The parsing libraries are deliberately not install-time dependencies: the
classifier itself never needs one, and which parser to install is the
caller's choice.  Each loader therefore imports its library lazily and
turns an ImportError into install instructions.
"""

from __future__ import annotations

from typing import Callable

from .config import AdapterConfig

Row = tuple[int, str, str, str, int, str]
ParseFn = Callable[[str], list[list[Row]]]

STANZA_PIN = "stanza==1.8.2"
SPACY_PIN = "spacy==3.7.4"


class BackendError(Exception):
    """The backend cannot be loaded or cannot parse; message says why."""


def _load_stanza(model: str) -> ParseFn:
    try:
        import stanza
    except ImportError:
        raise BackendError(
            "backend 'stanza' is not installed; install the pinned version:\n"
            f"  pip install {STANZA_PIN}\n"
            "  python3 -c \"import stanza; stanza.download('en')\""
        ) from None
    # The identifier is "lang" or "lang:package" (e.g. "en", "en:default").
    lang, _, package = model.partition(":")
    try:
        pipeline = stanza.Pipeline(
            lang=lang or "en",
            package=package or "default",
            processors="tokenize,pos,lemma,depparse",
            download_method=None,  # pinned resources only; never fetch at parse time
            logging_level="WARN",
        )
    except Exception as exc:
        raise BackendError(
            f"stanza could not start with model {model!r}: {exc}\n"
            "  (download resources once with: "
            "python3 -c \"import stanza; stanza.download('en')\")"
        ) from exc

    def parse(text: str) -> list[list[Row]]:
        document = pipeline(text)
        return [
            [
                (word.id, word.text, word.lemma or word.text,
                 word.upos or "_", word.head, word.deprel or "dep")
                for word in sentence.words
            ]
            for sentence in document.sentences
        ]

    return parse


def _split_pin(identifier: str) -> tuple[str, str]:
    """Split "en_core_web_sm-3.7.1" into name and wanted version ("" if unpinned)."""
    name, dash, version = identifier.rpartition("-")
    if dash and version and version[0].isdigit():
        return name, version
    return identifier, ""


def _load_spacy(model: str) -> ParseFn:
    try:
        import spacy
    except ImportError:
        raise BackendError(
            "backend 'spacy' is not installed; install the pinned version:\n"
            f"  pip install {SPACY_PIN}\n"
            "  python3 -m spacy download en_core_web_sm"
        ) from None
    name, wanted = _split_pin(model)
    try:
        nlp = spacy.load(name)
    except OSError:
        raise BackendError(
            f"spaCy model {name!r} is not installed; fetch it with:\n"
            f"  python3 -m spacy download {name}"
        ) from None
    found = nlp.meta.get("version", "")
    if wanted and found != wanted:
        raise BackendError(
            f"spaCy model {name!r} is version {found}, "
            f"but the configuration pins {wanted}"
        )

    def parse(text: str) -> list[list[Row]]:
        document = nlp(text)
        sentences = []
        for sentence in document.sents:
            rows: list[Row] = []
            for offset, token in enumerate(sentence, start=1):
                head = 0 if token.head is token else token.head.i - sentence.start + 1
                rows.append((offset, token.text, token.lemma_ or token.text,
                             token.pos_ or "_", head, token.dep_.lower() or "dep"))
            sentences.append(rows)
        return sentences

    return parse


LOADERS: dict[str, Callable[[str], ParseFn]] = {
    "stanza": _load_stanza,
    "spacy": _load_spacy,
}


def load_backend(config: AdapterConfig) -> ParseFn:
    """Resolve the configured backend or raise :class:`BackendError`."""
    try:
        loader = LOADERS[config.backend]
    except KeyError:
        known = ", ".join(sorted(LOADERS))
        raise BackendError(
            f"unknown backend {config.backend!r} (known backends: {known})"
        ) from None
    return loader(config.resolved_model())
