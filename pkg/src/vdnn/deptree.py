"""Dependency-tree views of parsed sentences and entity-phrase expansion.

A phrase is grown outward from a head token by following selected dependency
relations.  Four policies of increasing reach are defined; their token sets
nest (CORE <= OF_ONLY <= SHALLOW_ACL <= FULL for the same head), which the
test suite checks over randomly generated trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .corpus_io import Sentence, Token, canonical_deprel


class ExpansionPolicy(Enum):
    CORE = "core"                # nominal modifiers and coordination only
    OF_ONLY = "of_only"          # CORE plus "of"-marked complements, recursively
    SHALLOW_ACL = "shallow_acl"  # OF_ONLY plus one clause, one level deep
    FULL = "full"                # every supported relation, recursively


# Relation classes the policies draw from.
NOMINAL_CORE = frozenset({"det", "amod", "compound", "nummod", "flat", "fixed", "neg"})
COORD = frozenset({"cc", "conj"})
PREP = frozenset({"nmod", "obl"})
CLAUSAL = frozenset({"acl"})

# Relative reach, used to pick the wider of two policies when recursing.
_RANK = {
    ExpansionPolicy.CORE: 0,
    ExpansionPolicy.OF_ONLY: 1,
    ExpansionPolicy.SHALLOW_ACL: 2,
    ExpansionPolicy.FULL: 3,
}


@dataclass(frozen=True)
class DepTree:
    """A sentence indexed for child lookup."""
    sentence: Sentence
    _children: dict[int, tuple[Token, ...]]

    @property
    def root(self) -> Token:
        return self.sentence.root

    def children(self, token: Token) -> tuple[Token, ...]:
        """All dependents of a token, in surface order."""
        return self._children.get(token.index, ())


def build_tree(sentence: Sentence) -> DepTree:
    """Index a sentence by head for constant-time child lookups."""
    children: dict[int, list[Token]] = {}
    for tok in sentence.tokens:
        if tok.head != 0:
            children.setdefault(tok.head, []).append(tok)
    return DepTree(sentence=sentence, _children={k: tuple(v) for k, v in children.items()})


def children_by_rel(tree: DepTree, token: Token, rel: str) -> tuple[Token, ...]:
    """Dependents of `token` bearing the given (canonicalized) relation."""
    wanted = canonical_deprel(rel)
    return tuple(c for c in tree.children(token) if c.deprel == wanted)


@dataclass(frozen=True)
class Phrase:
    pattern_id: int            # extraction rule that produced it, 1..8
    head: Token                # expansion head; always a member of tokens
    tokens: tuple[Token, ...]  # strictly increasing by index
    text: str                  # forms joined by single spaces


def make_phrase(pattern_id: int, head: Token, tokens) -> Phrase:
    ordered = tuple(sorted(set(tokens), key=lambda t: t.index))
    return Phrase(
        pattern_id=pattern_id,
        head=head,
        tokens=ordered,
        text=" ".join(t.form for t in ordered),
    )


def expand_entity_phrase(tree: DepTree, head: Token, policy: ExpansionPolicy,
                         *, pattern_id: int) -> Phrase:
    """Grow a phrase from `head` following the relations the policy admits."""
    selected: set[Token] = set()
    _collect(tree, head, policy, selected)
    return make_phrase(pattern_id, head, selected)


def expansion_tokens(tree: DepTree, head: Token, policy: ExpansionPolicy) -> set[Token]:
    """The raw token set an expansion would select (no Phrase wrapper)."""
    selected: set[Token] = set()
    _collect(tree, head, policy, selected)
    return selected


def _case_markers(tree: DepTree, token: Token) -> tuple[Token, ...]:
    return tuple(c for c in tree.children(token) if c.deprel == "case")


def _collect(tree: DepTree, node: Token, policy: ExpansionPolicy, out: set[Token]) -> None:
    out.add(node)
    clause_taken = False
    for child in tree.children(node):
        rel = child.deprel
        if rel in NOMINAL_CORE or rel in COORD:
            _collect(tree, child, policy, out)
        elif rel in PREP:
            markers = _case_markers(tree, child)
            if policy is ExpansionPolicy.FULL:
                out.update(markers)
                _collect(tree, child, policy, out)
            elif _RANK[policy] >= _RANK[ExpansionPolicy.OF_ONLY] and any(
                    m.form.lower() == "of" for m in markers):
                out.update(markers)
                _collect(tree, child, policy, out)
        elif rel in CLAUSAL:
            if policy is ExpansionPolicy.FULL:
                _collect_clause(tree, child, ExpansionPolicy.FULL, out)
            elif policy is ExpansionPolicy.SHALLOW_ACL and not clause_taken:
                # One clause, and its complements only one level deep: CORE
                # expansion never follows a further PREP edge.
                clause_taken = True
                _collect_clause(tree, child, ExpansionPolicy.CORE, out)


def _collect_clause(tree: DepTree, verb: Token, comp_policy: ExpansionPolicy,
                    out: set[Token]) -> None:
    """Include a clause verb plus its object and case-marked complements.

    Markers, subjects, auxiliaries and adverbials of the clause are left out;
    only what the clause is *about* survives into the phrase.
    """
    out.add(verb)
    for child in tree.children(verb):
        rel = child.deprel
        if rel == "dobj":
            _collect(tree, child, comp_policy, out)
        elif rel in PREP:
            out.update(_case_markers(tree, child))
            _collect(tree, child, comp_policy, out)
        elif rel == "conj":
            _collect_clause(tree, child, comp_policy, out)
        elif rel == "cc":
            out.add(child)


def verb_phrase(tree: DepTree, verb: Token, *, pattern_id: int = 5) -> Phrase:
    """A verb plus the CORE expansion of its direct object, if it has one.

    Adverbials and negation on the verb are deliberately not part of the
    phrase; a bare verb stands alone.
    """
    selected: set[Token] = {verb}
    objects = children_by_rel(tree, verb, "dobj")
    if objects:
        _collect(tree, objects[0], ExpansionPolicy.CORE, selected)
    return make_phrase(pattern_id, verb, selected)
