"""
Smoke run: raw abstracts through the adapter and the classifier
===============================================================

Parses every abstract in ``abstracts/`` with the adapter, evaluates the
resulting corpus against the gold labels in ``labels.json``, and prints
the classifier's Top1/Top2 accuracy table.  This is a smoke run, not a
benchmark: parses from a live backend differ from hand annotation, so the
table has no pass/fail threshold — it exists to show the whole pipeline
running end to end on raw text.

Requires a parser backend (see the adapter README) and both console
scripts on PATH; override their invocations with --adapter-cmd and
--classifier-cmd.
"""

import argparse
import json
import shlex
import subprocess
import sys
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent

args_parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[1])
args_parser.add_argument("--adapter-cmd", default="parser-adapter",
                         help="command that turns text into CoNLL-U "
                              "(default: %(default)s)")
args_parser.add_argument("--classifier-cmd", default="vdnn",
                         help="classifier CLI to evaluate with "
                              "(default: %(default)s)")
args = args_parser.parse_args()

labels = json.loads((HERE / "labels.json").read_text(encoding="utf-8"))
abstracts = sorted((HERE / "abstracts").glob("*.txt"))
missing = [path.stem for path in abstracts if path.stem not in labels]
if missing:
    sys.exit(f"abstracts without a gold label: {', '.join(missing)}")

# Parse each abstract into its own corpus file.  Any adapter failure (most
# likely a missing backend) aborts the run with the adapter's diagnostic.
with tempfile.TemporaryDirectory() as scratch:
    corpus_dir = Path(scratch) / "corpus"
    corpus_dir.mkdir()
    manifest = []
    for path in abstracts:
        result = subprocess.run(
            shlex.split(args.adapter_cmd),
            input=path.read_text(encoding="utf-8"),
            capture_output=True, text=True)
        if result.returncode != 0:
            sys.stderr.write(result.stderr)
            sys.exit(result.returncode)
        (corpus_dir / f"{path.stem}.conllu").write_text(result.stdout,
                                                        encoding="utf-8")
        manifest.append({"file": f"{path.stem}.conllu",
                         "label": labels[path.stem]})

    manifest_path = Path(scratch) / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2), encoding="utf-8")

    report = subprocess.run(
        shlex.split(args.classifier_cmd)
        + ["eval", "--manifest", str(manifest_path),
           "--corpus-dir", str(corpus_dir), "--format", "table"],
        capture_output=True, text=True)
    sys.stderr.write(report.stderr)
    print(f"{len(manifest)} abstracts parsed with: {args.adapter_cmd}\n")
    print(report.stdout, end="")
    sys.exit(report.returncode)
