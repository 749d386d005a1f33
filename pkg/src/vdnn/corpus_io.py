"""Readers and writers for the on-disk formats.

Three kinds of input feed the pipeline: dependency-parsed documents in
CoNLL-U form, a JSON domain model (weighted keyword lists), and a JSON
trigger lexicon for the extraction rules.  Evaluation additionally takes a
JSON manifest mapping corpus files to gold labels.  Everything in here is a
pure function of its input stream.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from typing import IO, Iterable

log = logging.getLogger(__name__)

# CoNLL-U column offsets.
ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL, DEPS, MISC = range(10)

N_COLUMNS = 10

# Dependency labels arrive in more than one dialect spelling; downstream code
# only ever sees the canonical form.
DEPREL_ALIASES = {"obj": "dobj", "nsbj": "nsubj"}

_RANGE_ID = re.compile(r"^\d+-\d+$")   # multiword range lines, e.g. "3-4"
_EMPTY_ID = re.compile(r"^\d+\.\d+$")  # empty nodes, e.g. "3.1"
_NEWDOC = re.compile(r"^newdoc(?:\s+id\s*=\s*(.*))?$")


class CorpusFormatError(ValueError):
    """Malformed input content; the message names the offending location."""


class ManifestError(ValueError):
    """A manifest that cannot drive an evaluation run."""


def canonical_deprel(label: str) -> str:
    """Normalize a dependency label: lowercase, drop subtypes, map aliases."""
    label = label.strip().lower().split(":", 1)[0]
    return DEPREL_ALIASES.get(label, label)


@dataclass(frozen=True)
class Token:
    index: int    # 1-based position within the sentence
    form: str
    lemma: str    # falls back to the form when the input leaves it blank
    upos: str
    head: int     # 0 marks the root
    deprel: str   # canonical label


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    root_index: int

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        """Return the token with the given 1-based index."""
        return self.tokens[index - 1]

    @property
    def root(self) -> Token:
        return self.tokens[self.root_index - 1]

    @property
    def text(self) -> str:
        return " ".join(t.form for t in self.tokens)


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]
    gold_label: str | None = None


def parse_conllu(source: str | IO[str] | Iterable[str],
                 default_id: str = "<input>") -> list[Document]:
    """Parse CoNLL-U text (a string or a line stream) into documents.

    Sentences end at blank lines; ``# newdoc`` comments open a new document
    (everything before the first marker, or an unmarked stream, is one
    document).  Multiword range lines and empty-node lines are skipped.
    Raises CorpusFormatError with a line number for anything malformed.
    """
    if isinstance(source, str):
        source = source.splitlines()
    documents: list[Document] = []
    sentences: list[Sentence] = []
    rows: list[tuple[int, list[str]]] = []
    doc_id = default_id

    def close_sentence() -> None:
        if rows:
            sentences.append(_build_sentence(rows))
            rows.clear()

    def close_document() -> None:
        close_sentence()
        if sentences:
            documents.append(Document(id=doc_id, sentences=tuple(sentences)))
            sentences.clear()

    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            close_sentence()
            continue
        if line.startswith("#"):
            marker = _NEWDOC.match(line[1:].strip())
            if marker:
                close_document()
                name = (marker.group(1) or "").strip()
                doc_id = name or f"{default_id}#{len(documents) + 1}"
            continue
        cols = line.split("\t")
        if len(cols) != N_COLUMNS:
            raise CorpusFormatError(
                f"line {line_no}: expected {N_COLUMNS} tab-separated columns, got {len(cols)}"
            )
        if _RANGE_ID.match(cols[ID]) or _EMPTY_ID.match(cols[ID]):
            continue
        rows.append((line_no, cols))
    close_document()
    return documents


def _build_sentence(rows: list[tuple[int, list[str]]]) -> Sentence:
    tokens: list[tuple[int, Token]] = []
    for line_no, cols in rows:
        try:
            index = int(cols[ID])
        except ValueError:
            raise CorpusFormatError(f"line {line_no}: token id {cols[ID]!r} is not an integer") from None
        try:
            head = int(cols[HEAD])
        except ValueError:
            raise CorpusFormatError(f"line {line_no}: head {cols[HEAD]!r} is not an integer") from None
        # "_" marks an unspecified column; an edge without a label is useless
        # to every downstream rule, so refuse it here.
        deprel = "" if cols[DEPREL] == "_" else canonical_deprel(cols[DEPREL])
        if not deprel:
            raise CorpusFormatError(f"line {line_no}: empty dependency label")
        lemma = cols[FORM] if cols[LEMMA] == "_" else cols[LEMMA]
        tokens.append((line_no, Token(index, cols[FORM], lemma, cols[UPOS], head, deprel)))

    for position, (line_no, tok) in enumerate(tokens, start=1):
        if tok.index != position:
            raise CorpusFormatError(
                f"line {line_no}: token ids must run 1..n without gaps "
                f"(saw {tok.index}, expected {position})"
            )
    n = len(tokens)
    lines = {tok.index: line_no for line_no, tok in tokens}
    heads = {tok.index: tok.head for _, tok in tokens}
    for line_no, tok in tokens:
        if not 0 <= tok.head <= n:
            raise CorpusFormatError(
                f"line {line_no}: head {tok.head} out of range for a {n}-token sentence"
            )

    # Every parent chain must reach the root marker; a chain that revisits an
    # in-progress node is a cycle.
    color = {0: 2}
    for start in heads:
        path = []
        node = start
        while color.get(node, 0) == 0:
            color[node] = 1
            path.append(node)
            node = heads[node]
        if color[node] == 1:
            raise CorpusFormatError(f"line {lines[node]}: cyclic head references")
        for visited in path:
            color[visited] = 2

    roots = [tok.index for _, tok in tokens if tok.head == 0]
    if len(roots) > 1:
        log.warning(
            "sentence at line %d: %d tokens marked as root; keeping token %d",
            tokens[0][0], len(roots), roots[0],
        )
    return Sentence(tokens=tuple(tok for _, tok in tokens), root_index=roots[0])


def serialize_sentence(sentence: Sentence) -> str:
    """Render a sentence back to CoNLL-U (supported columns only, ``_`` elsewhere)."""
    out = []
    for tok in sentence.tokens:
        out.append("\t".join([
            str(tok.index), tok.form, tok.lemma, tok.upos or "_",
            "_", "_", str(tok.head), tok.deprel, "_", "_",
        ]))
    return "\n".join(out) + "\n"


def serialize_document(document: Document) -> str:
    """Render a document, leading with its id so a re-parse keeps the name."""
    body = "\n".join(serialize_sentence(s) for s in document.sentences)
    return f"# newdoc id = {document.id}\n{body}"


# ---------------------------------------------------------------------------
# Domain model

@dataclass(frozen=True)
class Domain:
    name: str
    entries: tuple[tuple[str, float], ...]  # (keyword, weight), file order

    def keywords(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.entries)

    def weights(self) -> tuple[float, ...]:
        return tuple(w for _, w in self.entries)


@dataclass(frozen=True)
class DomainModel:
    domains: tuple[Domain, ...]  # file order; this order breaks ranking ties

    def domain_names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.domains)

    def vocabulary(self) -> frozenset[str]:
        """Case-folded union of every domain's keywords."""
        return frozenset(k.casefold() for d in self.domains for k, _ in d.entries)


def load_domain_model(source: IO[str]) -> DomainModel:
    """Load and validate a JSON domain model."""
    data = _read_json(source, "domain model")
    if not isinstance(data, dict) or not isinstance(data.get("domains"), list):
        raise CorpusFormatError('domain model: expected an object with a "domains" array')
    if not data["domains"]:
        raise CorpusFormatError("domain model: no domains defined")
    domains = []
    seen_names = set()
    for obj in data["domains"]:
        if not isinstance(obj, dict) or not isinstance(obj.get("name"), str) or not obj.get("name"):
            raise CorpusFormatError("domain model: every domain needs a non-empty name")
        name = obj["name"]
        if name in seen_names:
            raise CorpusFormatError(f"domain model: duplicate domain name {name!r}")
        seen_names.add(name)
        raw = obj.get("keywords")
        if not isinstance(raw, list) or not raw:
            raise CorpusFormatError(f"domain model: domain {name!r} has no keywords")
        entries = []
        seen_keywords = set()
        for pair in raw:
            if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                    or not isinstance(pair[0], str) or not pair[0]
                    or isinstance(pair[1], bool) or not isinstance(pair[1], (int, float))):
                raise CorpusFormatError(
                    f"domain model: domain {name!r} has a malformed [keyword, weight] pair: {pair!r}"
                )
            keyword, weight = pair[0], float(pair[1])
            if not 0.0 < weight <= 1.0:
                raise CorpusFormatError(
                    f"domain model: weight for {keyword!r} in {name!r} must be in (0, 1], got {weight}"
                )
            folded = keyword.casefold()
            if folded in seen_keywords:
                raise CorpusFormatError(f"domain model: duplicate keyword {keyword!r} in {name!r}")
            seen_keywords.add(folded)
            entries.append((keyword, weight))
        domains.append(Domain(name=name, entries=tuple(entries)))
    return DomainModel(domains=tuple(domains))


# ---------------------------------------------------------------------------
# Trigger lexicon

_LEXICON_KEYS = ("pattern2", "pattern3", "pattern4", "pattern5", "pattern7", "pattern8")


@dataclass(frozen=True)
class Lexicon:
    pattern2: tuple[str, ...]
    pattern3: tuple[str, ...]
    pattern4: tuple[str, ...]
    pattern5: tuple[str, ...]
    pattern7: tuple[str, ...]
    pattern8: tuple[str, ...]

    def triggers(self, pattern_id: int) -> frozenset[str]:
        """Trigger words for one extraction rule (rules 1 and 6 have none)."""
        return frozenset(getattr(self, f"pattern{pattern_id}"))


def load_lexicon(source: IO[str]) -> Lexicon:
    """Load and validate a JSON trigger lexicon."""
    data = _read_json(source, "lexicon")
    if not isinstance(data, dict):
        raise CorpusFormatError("lexicon: expected a JSON object")
    for key in _LEXICON_KEYS:
        if key not in data:
            raise CorpusFormatError(f"lexicon: missing key {key!r}")
    for key in data:
        if key not in _LEXICON_KEYS:
            raise CorpusFormatError(f"lexicon: unexpected key {key!r}")
    lists = {}
    for key in _LEXICON_KEYS:
        raw = data[key]
        if not isinstance(raw, list) or not raw:
            raise CorpusFormatError(f"lexicon: {key!r} must be a non-empty array")
        seen = set()
        for word in raw:
            if not isinstance(word, str) or not word:
                raise CorpusFormatError(f"lexicon: {key!r} contains a non-string entry: {word!r}")
            if word != word.casefold():
                raise CorpusFormatError(f"lexicon: {key!r} entry {word!r} must be lowercase")
            if word in seen:
                raise CorpusFormatError(f"lexicon: duplicate entry {word!r} in {key!r}")
            seen.add(word)
        lists[key] = tuple(raw)
    return Lexicon(**lists)


# ---------------------------------------------------------------------------
# Evaluation manifest

@dataclass(frozen=True)
class ManifestEntry:
    file: str
    label: str


def load_manifest(source: IO[str], model: DomainModel) -> tuple[ManifestEntry, ...]:
    """Load a corpus manifest, validating every label against the model."""
    try:
        data = json.load(source)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest: not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ManifestError("manifest: expected a JSON array")
    if not data:
        raise ManifestError("manifest: empty; evaluation needs at least one document")
    names = set(model.domain_names())
    entries = []
    for i, obj in enumerate(data):
        if (not isinstance(obj, dict) or not isinstance(obj.get("file"), str)
                or not obj.get("file") or not isinstance(obj.get("label"), str)):
            raise ManifestError(f'manifest: entry {i} must be an object with "file" and "label"')
        if obj["label"] not in names:
            raise ManifestError(
                f"manifest: entry {i} ({obj['file']!r}) has unknown label {obj['label']!r}"
            )
        entries.append(ManifestEntry(file=obj["file"], label=obj["label"]))
    return tuple(entries)


def _read_json(source: IO[str], what: str):
    try:
        return json.load(source)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"{what}: not valid JSON: {exc}") from None


# ---------------------------------------------------------------------------
# Bundled defaults

def _data_stream(name: str):
    from importlib import resources
    return resources.files(__package__).joinpath("data", name).open("r", encoding="utf-8")


def load_default_domain_model() -> DomainModel:
    with _data_stream("domain_model.json") as fh:
        return load_domain_model(fh)


def load_default_lexicon() -> Lexicon:
    with _data_stream("lexicon.json") as fh:
        return load_lexicon(fh)
