"""
Scoring a labeled corpus with Top1/Top2 accuracy
================================================

Given a directory of parsed abstracts and a manifest of gold labels, the
evaluation harness classifies every document and reports how often the
gold domain lands at rank 1 (Top1) and within the first two ranks (Top2).
This script builds a small corpus by hand — including two documents
designed to confuse the classifier — and aggregates the outcomes.
"""

import json
import tempfile
from pathlib import Path

from vdnn import classify_document, load_default_domain_model, load_default_lexicon, parse_conllu
from vdnn.cli import EvalRow, compute_accuracy

model = load_default_domain_model()
lexicon = load_default_lexicon()


def focus_sentence(*nouns: str) -> str:
    """A minimal parse of "We focus on <nouns> ." — rule 8 bait."""
    rows = [
        "1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_",
        "2\tfocus\tfocus\tVERB\t_\t_\t0\troot\t_\t_",
        "3\ton\ton\tADP\t_\t_\t4\tcase\t_\t_",
        f"4\t{nouns[0]}\t{nouns[0]}\tNOUN\t_\t_\t2\tobl\t_\t_",
    ]
    if len(nouns) == 2:
        rows += [
            "5\tand\tand\tCCONJ\t_\t_\t6\tcc\t_\t_",
            f"6\t{nouns[1]}\t{nouns[1]}\tNOUN\t_\t_\t4\tconj\t_\t_",
            "7\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_",
        ]
    else:
        rows.append("5\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_")
    return "\n".join(rows) + "\n"


# One easy document per domain: each mentions only a keyword unique to its
# gold domain, so rank 1 is forced.  Then two tracking documents that are
# not easy: "pose" outweighs "track" when both occur (rank 2), and a
# document that never mentions tracking at all leaves the gold domain
# unranked (a miss for both metrics).
corpus = [
    ("detection.conllu", ("recognizing",), "object_detection"),
    ("tracking.conllu", ("track",), "target_tracking"),
    ("sr.conllu", ("superpixels",), "super_resolution"),
    ("generation.conllu", ("generation",), "image_generation"),
    ("modeling.conllu", ("3D",), "3d_modeling"),
    ("pose.conllu", ("pose",), "human_pose"),
    ("tracking-hard.conllu", ("pose", "track"), "target_tracking"),
    ("tracking-miss.conllu", ("pose",), "target_tracking"),
]

with tempfile.TemporaryDirectory() as scratch:
    corpus_dir = Path(scratch)
    for filename, nouns, _ in corpus:
        (corpus_dir / filename).write_text(focus_sentence(*nouns))
    manifest = [{"file": filename, "label": label} for filename, _, label in corpus]
    (corpus_dir / "manifest.json").write_text(json.dumps(manifest, indent=2))

    # Classify every manifest entry and keep (gold, predicted ranking) rows.
    rows = []
    for entry in manifest:
        [document] = parse_conllu((corpus_dir / entry["file"]).read_text(),
                                  default_id=entry["file"])
        _, _, ranking = classify_document(document, model, lexicon)
        rows.append(EvalRow(document_id=entry["file"], gold=entry["label"],
                            predicted=tuple(r.domain for r in ranking)))

report = compute_accuracy(rows, domain_order=model.domain_names())

# Per-domain and overall, counts with display-rounded percentages.  Exactly
# this table (plus JSON) is what `vdnn eval` prints:
#
#   vdnn eval --manifest manifest.json --corpus-dir .

def cell(count: int, ratio: float) -> str:
    return f"{count} ({ratio * 100:.0f}%)"

print(f"{'domain':<16}  {'docs':>4}  {'top1':>9}  {'top2':>9}")
for acc in report.domains:
    print(f"{acc.domain:<16}  {acc.documents:>4}  "
          f"{cell(acc.top1_correct, acc.top1_accuracy):>9}  "
          f"{cell(acc.top2_correct, acc.top2_accuracy):>9}")
print(f"{'overall':<16}  {report.documents:>4}  "
      f"{cell(report.top1_correct, report.top1_accuracy):>9}  "
      f"{cell(report.top2_correct, report.top2_accuracy):>9}")
