"""The eight extraction rules that turn dependency trees into key phrases.

Each rule scans one sentence for a structural cue — a subject, a trigger word
from the lexicon, a "for"-marked adjunct, a first-person transitive — and
expands an entity phrase around the anchor it finds.  Rule 1 only ever applies
to a document's first sentence; the others run everywhere.  Trigger words
match case-insensitively against both the surface form and the lemma.
"""

from __future__ import annotations

import string
from typing import Iterable

from .corpus_io import Document, Lexicon, Token
from .deptree import (
    DepTree,
    ExpansionPolicy,
    Phrase,
    build_tree,
    children_by_rel,
    expansion_tokens,
    make_phrase,
    verb_phrase,
)

WordList = list[str]

ALL_PATTERNS = (1, 2, 3, 4, 5, 6, 7, 8)


def _matches(token: Token, triggers: frozenset[str]) -> bool:
    return token.form.lower() in triggers or token.lemma.lower() in triggers


def _trigger_tokens(tree: DepTree, triggers: frozenset[str]) -> list[Token]:
    return [t for t in tree.sentence.tokens if _matches(t, triggers)]


def _is_we_subject(tree: DepTree, verb: Token) -> bool:
    return any(c.deprel == "nsubj" and c.form.lower() == "we" for c in tree.children(verb))


def p1_first_sentence_subject(tree: DepTree) -> list[Phrase]:
    """Rule 1: the sentence's subject (or, failing that, its object), fully expanded."""
    order = []
    level = [tree.root]
    while level:
        order.extend(level)
        level = sorted(
            (c for parent in level for c in tree.children(parent)),
            key=lambda t: t.index)
    anchor = next((t for t in order if t.deprel == "nsubj"), None)
    if anchor is None:
        anchor = next((t for t in order if t.deprel == "dobj"), None)
    if anchor is None:
        return []
    return [make_phrase(1, anchor, expansion_tokens(tree, anchor, ExpansionPolicy.FULL))]


def p2_specific_noun_modifiers(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 2: a trigger noun with its pre-modifiers plus one level of marked suffixes."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(2)):
        selected = expansion_tokens(tree, trigger, ExpansionPolicy.CORE)
        for child in tree.children(trigger):
            if child.deprel in ("nmod", "obl"):
                markers = children_by_rel(tree, child, "case")
                if markers:
                    selected.update(markers)
                    selected |= expansion_tokens(tree, child, ExpansionPolicy.CORE)
        phrases.append(make_phrase(2, trigger, selected))
    return phrases


def p3_case_mark_target(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 3: what a trigger noun's marked complement or trailing clause is about."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(3)):
        # Marked nominal complement ("the problem of X"-shaped attachment):
        # take the complement itself, fully expanded.
        for child in tree.children(trigger):
            if child.deprel in ("nmod", "obl") and any(
                    m.index > trigger.index for m in children_by_rel(tree, child, "case")):
                phrases.append(make_phrase(
                    3, child, expansion_tokens(tree, child, ExpansionPolicy.FULL)))
                break
        # Marked clause: walk from the clause verb to its object and emit the
        # connected span between them.
        for clause in children_by_rel(tree, trigger, "acl"):
            if not children_by_rel(tree, clause, "mark"):
                continue
            span = _clause_object_span(tree, clause)
            if span:
                phrases.append(make_phrase(3, clause, span))
            break
    return phrases


def _clause_object_span(tree: DepTree, verb: Token) -> set[Token] | None:
    objects = children_by_rel(tree, verb, "dobj")
    conjunct = verb
    while not objects:
        conjuncts = children_by_rel(tree, conjunct, "conj")
        if not conjuncts:
            return None
        conjunct = conjuncts[0]
        objects = children_by_rel(tree, conjunct, "dobj")
    selected = {verb} | expansion_tokens(tree, objects[0], ExpansionPolicy.CORE)
    lo = verb.index
    hi = max(t.index for t in selected)
    # Pull in everything between the clause verb and the object that hangs off
    # the span itself (this is what keeps coordinated verbs together).
    grew = True
    while grew:
        grew = False
        members = {t.index for t in selected}
        for tok in tree.sentence.tokens:
            if lo <= tok.index <= hi and tok not in selected and tok.head in members:
                selected.add(tok)
                grew = True
    return selected


def p4_transitive_dobj(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 4: the direct object of a trigger verb, with its "of"-chain."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(4)):
        for obj in children_by_rel(tree, trigger, "dobj")[:1]:
            phrases.append(make_phrase(
                4, obj, expansion_tokens(tree, obj, ExpansionPolicy.OF_ONLY)))
    return phrases


def p5_object_clause_verb(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 5: the clause a trigger verb's object governs, as a verb phrase."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(5)):
        for obj in children_by_rel(tree, trigger, "dobj")[:1]:
            clause = next(
                (c for c in children_by_rel(tree, obj, "acl") if c.index > obj.index), None)
            if clause is not None:
                phrases.append(verb_phrase(tree, clause, pattern_id=5))
    return phrases


def p6_for_guided(tree: DepTree) -> list[Phrase]:
    """Rule 6: the purpose a "for"-marked adjunct introduces, fully expanded."""
    tokens = tree.sentence.tokens
    anchor = None
    first = tokens[0]
    if first.form.lower() == "for" and first.deprel in ("case", "mark"):
        anchor = first
    else:
        anchor = next(
            (t for t in tokens if t.form.lower() == "for" and t.deprel == "case"), None)
    if anchor is None or anchor.head == 0:
        return []
    head = tree.sentence.token(anchor.head)
    return [make_phrase(6, head, expansion_tokens(tree, head, ExpansionPolicy.FULL))]


def p7_we_transitive(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 7: what "we <verb>" announces, one clause deep."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(7)):
        if not _is_we_subject(tree, trigger):
            continue
        for obj in children_by_rel(tree, trigger, "dobj")[:1]:
            phrases.append(make_phrase(
                7, obj, expansion_tokens(tree, obj, ExpansionPolicy.SHALLOW_ACL)))
    return phrases


def p8_we_intransitive(tree: DepTree, lexicon: Lexicon) -> list[Phrase]:
    """Rule 8: what "we <verb> on/at/…" points at, with its "of"-chain."""
    phrases = []
    for trigger in _trigger_tokens(tree, lexicon.triggers(8)):
        if not _is_we_subject(tree, trigger):
            continue
        complement = next(
            (c for c in tree.children(trigger)
             if c.deprel in ("nmod", "obl") and children_by_rel(tree, c, "case")),
            None)
        if complement is not None:
            phrases.append(make_phrase(
                8, complement, expansion_tokens(tree, complement, ExpansionPolicy.OF_ONLY)))
    return phrases


def get_pattern_result(document: Document, lexicon: Lexicon,
                       patterns: Iterable[int] = ALL_PATTERNS) -> list[Phrase]:
    """Run the selected rules over a document, in (sentence, rule) order."""
    wanted = set(patterns)
    unknown = wanted - set(ALL_PATTERNS)
    if unknown:
        raise ValueError(f"unknown pattern ids: {sorted(unknown)}")
    phrases: list[Phrase] = []
    for position, sentence in enumerate(document.sentences):
        tree = build_tree(sentence)
        if 1 in wanted and position == 0:
            phrases.extend(p1_first_sentence_subject(tree))
        if 2 in wanted:
            phrases.extend(p2_specific_noun_modifiers(tree, lexicon))
        if 3 in wanted:
            phrases.extend(p3_case_mark_target(tree, lexicon))
        if 4 in wanted:
            phrases.extend(p4_transitive_dobj(tree, lexicon))
        if 5 in wanted:
            phrases.extend(p5_object_clause_verb(tree, lexicon))
        if 6 in wanted:
            phrases.extend(p6_for_guided(tree))
        if 7 in wanted:
            phrases.extend(p7_we_transitive(tree, lexicon))
        if 8 in wanted:
            phrases.extend(p8_we_intransitive(tree, lexicon))
    return phrases


# ---------------------------------------------------------------------------
# Words and bags

def phrase_to_words(phrase: Phrase) -> WordList:
    """Split a phrase into words.

    Edge punctuation is stripped (internal hyphens survive), casing is kept,
    and any word of four or more letters ending in "s" is followed by its
    bare singular so inflection never hides a keyword match.
    """
    words: WordList = []
    for chunk in phrase.text.split(" "):
        word = chunk.strip(string.punctuation)
        if not word:
            continue
        words.append(word)
        if len(word) >= 4 and word.lower().endswith("s"):
            words.append(word[:-1])
    return words


class WordBag:
    """A case-insensitive set of words that remembers first-seen casing."""

    def __init__(self, words: Iterable[str] = ()):
        self._words: dict[str, str] = {}
        for word in words:
            self.add(word)

    def add(self, word: str) -> None:
        self._words.setdefault(word.casefold(), word)

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self._words

    def __iter__(self):
        return iter(self._words.values())

    def __len__(self) -> int:
        return len(self._words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordBag):
            return NotImplemented
        return set(self._words) == set(other._words)

    def __repr__(self) -> str:
        return f"WordBag({list(self._words.values())!r})"

    def words(self) -> tuple[str, ...]:
        """All words, first-seen casing, insertion order."""
        return tuple(self._words.values())


def build_word_bag(phrases: Iterable[Phrase]) -> WordBag:
    """Union of phrase words; duplicates collapse case-insensitively."""
    bag = WordBag()
    for phrase in phrases:
        for word in phrase_to_words(phrase):
            bag.add(word)
    return bag
