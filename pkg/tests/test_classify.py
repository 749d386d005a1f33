"""Weighted-keyword cosine scoring and domain ranking."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vdnn import (
    Document,
    Domain,
    DomainModel,
    WordBag,
    build_domain_vectors,
    build_match_vector,
    classify_document,
    cosine_similarity,
    rank,
)
from vdnn.classify import DomainVector, MatchVector

from helpers import max_oracle_error

# The bag the bundled sample abstract produces, restricted to model keywords.
DEMO_BAG = ("tracking", "human", "body", "keypoint", "pose", "3D")

EXPECTED_RANKING = (
    ("human_pose", 0.737, ("pose", "human", "keypoint", "body")),
    ("3d_modeling", 0.482, ("3D",)),
    ("target_tracking", 0.451, ("tracking",)),
)


def single_domain(*entries: tuple[str, float]) -> DomainModel:
    return DomainModel(domains=(Domain(name="d", entries=entries),))


# ---------------------------------------------------------------------------
# The published scores

def test_demo_bag_reproduces_the_published_scores(model):
    ranking = rank(model, WordBag(DEMO_BAG))
    assert [(r.domain, round(r.similarity, 3), r.matched) for r in ranking] \
        == list(EXPECTED_RANKING)


def test_demo_document_reproduces_the_published_scores(demo_document, model, lexicon):
    bag, match_vectors, ranking = classify_document(demo_document, model, lexicon)
    assert tuple(w for w in bag if w.casefold() in model.vocabulary()) == DEMO_BAG
    assert [m.domain for m in match_vectors] == list(model.domain_names())
    for domain, score, matched in EXPECTED_RANKING:
        [result] = [r for r in ranking if r.domain == domain]
        assert result.similarity == pytest.approx(score, abs=1e-3)
        assert result.matched == matched
    assert [r.domain for r in ranking] == [d for d, _, _ in EXPECTED_RANKING]


# ---------------------------------------------------------------------------
# The cosine agrees with its closed form

def test_similarity_matches_the_closed_form():
    assert max_oracle_error(cases=1200, seed=20260816) <= 1e-12


def test_full_match_is_exactly_one(model):
    for vector in build_domain_vectors(model):
        match = build_match_vector(vector, WordBag(vector.keywords))
        assert cosine_similarity(vector, match) == 1.0


def test_empty_bag_scores_zero_everywhere(model):
    ranking = rank(model, WordBag(), include_zero=True)
    assert [r.similarity for r in ranking] == [0.0] * 6
    # All-equal scores keep the model's own domain order.
    assert [r.domain for r in ranking] == list(model.domain_names())
    assert len(rank(model, WordBag())) == 0


def test_each_new_matched_keyword_raises_the_score():
    keywords = ("alpha", "beta", "gamma", "delta", "epsilon")
    model = single_domain(*((k, w) for k, w in zip(keywords, (0.9, 0.7, 0.5, 0.3, 0.2))))
    scores = [
        rank(model, WordBag(keywords[:hits]), include_zero=True)[0].similarity
        for hits in range(len(keywords) + 1)
    ]
    assert scores[0] == 0.0
    assert scores[-1] == 1.0
    assert all(a < b for a, b in zip(scores, scores[1:]))


def test_words_outside_the_vocabulary_change_nothing(model):
    plain = rank(model, WordBag(DEMO_BAG), include_zero=True)
    padded = rank(model, WordBag(DEMO_BAG + ("zebra", "Quux", "37")), include_zero=True)
    assert [(r.domain, r.similarity) for r in plain] \
        == [(r.domain, r.similarity) for r in padded]


weight_lists = st.lists(
    st.floats(min_value=0.01, max_value=1.0, allow_nan=False), min_size=1, max_size=12)


@given(data=st.data(), weights=weight_lists,
       scale=st.floats(min_value=1e-3, max_value=1e3, allow_nan=False))
def test_similarity_is_scale_invariant(data, weights, scale):
    flags = data.draw(st.lists(st.booleans(), min_size=len(weights),
                               max_size=len(weights)))
    keywords = tuple(f"kw{i}" for i in range(len(weights)))

    def score(values: list[float]) -> float:
        vector = DomainVector(domain="d", keywords=keywords, weights=tuple(values))
        match = MatchVector(
            domain="d",
            components=tuple(w if hit else 0.0 for w, hit in zip(values, flags)),
            matched=tuple(k for k, hit in zip(keywords, flags) if hit))
        return cosine_similarity(vector, match)

    before = score(weights)
    after = score([w * scale for w in weights])
    if any(flags):
        assert math.isclose(before, after, rel_tol=1e-12)
    else:
        assert before == after == 0.0


@given(data=st.data(), weights=weight_lists)
def test_similarity_ignores_keyword_order(data, weights):
    flags = data.draw(st.lists(st.booleans(), min_size=len(weights),
                               max_size=len(weights)))
    order = data.draw(st.permutations(range(len(weights))))

    def score(indices) -> float:
        vector = DomainVector(
            domain="d",
            keywords=tuple(f"kw{i}" for i in indices),
            weights=tuple(weights[i] for i in indices))
        match = MatchVector(
            domain="d",
            components=tuple(weights[i] if flags[i] else 0.0 for i in indices),
            matched=tuple(f"kw{i}" for i in indices if flags[i]))
        return cosine_similarity(vector, match)

    assert abs(score(range(len(weights))) - score(order)) <= 1e-12


def test_equal_scores_keep_model_order():
    shared = ("shared", 0.5)
    forward = DomainModel(domains=(Domain(name="alpha", entries=(shared,)),
                                   Domain(name="beta", entries=(shared,))))
    backward = DomainModel(domains=tuple(reversed(forward.domains)))
    bag = WordBag(["shared"])
    assert [r.domain for r in rank(forward, bag)] == ["alpha", "beta"]
    assert [r.domain for r in rank(backward, bag)] == ["beta", "alpha"]


def test_mismatched_vector_lengths_are_rejected():
    vector = DomainVector(domain="d", keywords=("a", "b"), weights=(0.5, 0.5))
    match = MatchVector(domain="d", components=(0.5,), matched=("a",))
    with pytest.raises(ValueError, match="length mismatch"):
        cosine_similarity(vector, match)


# ---------------------------------------------------------------------------
# Matching and ranking mechanics

def test_match_vector_zeroes_missing_keywords_case_insensitively():
    vector = DomainVector(domain="d", keywords=("alpha", "Beta", "gamma"),
                          weights=(0.5, 0.25, 0.125))
    match = build_match_vector(vector, WordBag(["BETA", "gamma", "noise"]))
    assert match.components == (0.0, 0.25, 0.125)
    assert match.matched == ("Beta", "gamma")


def test_domain_vectors_follow_model_order(model):
    vectors = build_domain_vectors(model)
    assert [v.domain for v in vectors] == list(model.domain_names())
    assert all(len(v.keywords) == len(v.weights) for v in vectors)


def test_rank_truncates_to_top_k(model):
    bag = WordBag(DEMO_BAG)
    full = rank(model, bag)
    assert [r.domain for r in rank(model, bag, top_k=1)] == [full[0].domain]
    assert len(rank(model, bag, top_k=2, include_zero=True)) == 2
    everything = rank(model, bag, include_zero=True)
    assert len(everything) == 6
    assert all(a.similarity >= b.similarity
               for a, b in zip(everything, everything[1:]))


def test_ranking_is_a_sequence(model):
    ranking = rank(model, WordBag(DEMO_BAG))
    assert len(ranking) == 3
    assert list(ranking)[0] is ranking[0]
    assert ranking[0].domain == "human_pose"


def test_documents_without_sentences_are_rejected(model, lexicon):
    empty = Document(id="hollow", sentences=())
    with pytest.raises(ValueError, match="hollow"):
        classify_document(empty, model, lexicon)
