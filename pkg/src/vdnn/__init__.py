"""Label the application domain of a computer-vision abstract.

The pipeline: read a dependency-parsed abstract (CoNLL-U), match eight
syntactic extraction rules against each sentence tree, collect the extracted
phrases into a word bag, and rank six application domains by weighted-keyword
cosine similarity.
"""

from __future__ import annotations

from .classify import (
    DomainVector,
    MatchVector,
    Ranking,
    SimilarityResult,
    build_domain_vectors,
    build_match_vector,
    classify_document,
    cosine_similarity,
    rank,
)
from .corpus_io import (
    CorpusFormatError,
    Document,
    Domain,
    DomainModel,
    Lexicon,
    ManifestEntry,
    ManifestError,
    Sentence,
    Token,
    canonical_deprel,
    load_default_domain_model,
    load_default_lexicon,
    load_domain_model,
    load_lexicon,
    load_manifest,
    parse_conllu,
    serialize_document,
    serialize_sentence,
)
from .deptree import (
    DepTree,
    ExpansionPolicy,
    Phrase,
    build_tree,
    expand_entity_phrase,
    verb_phrase,
)
from .patterns import (
    ALL_PATTERNS,
    WordBag,
    build_word_bag,
    get_pattern_result,
    phrase_to_words,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PATTERNS",
    "CorpusFormatError",
    "DepTree",
    "Document",
    "Domain",
    "DomainModel",
    "DomainVector",
    "ExpansionPolicy",
    "Lexicon",
    "ManifestEntry",
    "ManifestError",
    "MatchVector",
    "Phrase",
    "Ranking",
    "Sentence",
    "SimilarityResult",
    "Token",
    "WordBag",
    "build_domain_vectors",
    "build_match_vector",
    "build_tree",
    "build_word_bag",
    "canonical_deprel",
    "classify_document",
    "cosine_similarity",
    "expand_entity_phrase",
    "get_pattern_result",
    "load_default_domain_model",
    "load_default_lexicon",
    "load_domain_model",
    "load_lexicon",
    "load_manifest",
    "parse_conllu",
    "phrase_to_words",
    "rank",
    "serialize_document",
    "serialize_sentence",
    "verb_phrase",
    "__version__",
]
