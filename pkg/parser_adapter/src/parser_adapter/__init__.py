"""Raw abstract text in, CoNLL-U out.

The classifier CLI consumes dependency parses; producing them from plain
English is delegated to an off-the-shelf neural parser.  This package wraps
such a parser behind the one-command contract the classifier expects on
``--raw`` input: abstract text on standard input, CoNLL-U on standard
output, diagnostics on standard error.
"""

from .backends import BackendError, load_backend
from .config import AdapterConfig, DIALECT_CORE, DIALECT_NATIVE
from .emit import UNIVERSAL_RELATIONS, render_conllu

__all__ = [
    "AdapterConfig",
    "BackendError",
    "DIALECT_CORE",
    "DIALECT_NATIVE",
    "UNIVERSAL_RELATIONS",
    "load_backend",
    "render_conllu",
]
