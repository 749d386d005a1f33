"""
Ranking application domains for one abstract
============================================

Extraction gives a bag of words; classification turns that bag into a
ranking over six application domains.  Each domain is a fixed weight
vector over its keywords, the bag selects which weights survive, and the
cosine between the two vectors scores the domain.  This script walks the
whole pipeline on the bundled sample abstract.
"""

from importlib import resources

from vdnn import (
    build_word_bag,
    classify_document,
    get_pattern_result,
    load_default_domain_model,
    load_default_lexicon,
    parse_conllu,
)

sample = (resources.files("vdnn") / "data" / "sample_abstract.conllu").read_text()
[document] = parse_conllu(sample)
model = load_default_domain_model()
lexicon = load_default_lexicon()

# Step 1: the extraction rules produce phrases, and the phrases dissolve
# into a case-insensitive word bag.  Plural words also contribute their
# bare singular so inflection never hides a keyword.
bag = build_word_bag(get_pattern_result(document, lexicon))
print(f"bag: {' '.join(bag.words())}")

# Step 2: only words that appear in some domain's keyword list matter.
keywords = [word for word in bag if word.casefold() in model.vocabulary()]
print(f"keywords in vocabulary: {' '.join(keywords)}")
print()

# Steps 1+2+3 in one call: bag, per-domain match vectors, and the ranking.
bag, match_vectors, ranking = classify_document(document, model, lexicon)

# A match vector holds the domain's weight wherever the bag contains the
# keyword and zero elsewhere — sparse bags mean mostly zeros.
for vector in match_vectors:
    rendered = " ".join(f"{z:g}" for z in vector.components)
    print(f"{vector.domain:<18} {rendered}")
print()

# The cosine against each domain's full weight vector gives the scores.
# Zero-similarity domains are dropped; ties would keep model order.
for position, result in enumerate(ranking, start=1):
    print(f"{position}. {result.domain:<18} {result.similarity * 100:5.1f}%  "
          f"({' '.join(result.matched)})")
