"""Python bindings for the hct proof checker.

The heavy lifting lives in the compiled extension ``hct._core``:
bidirectional type checking, normalization by evaluation, and the corpus
runner. This package re-exports those operations.
"""

from hct._core import CheckFailure, check_files, check_source, corpus, normalize

__all__ = [
    "CheckFailure",
    "check_files",
    "check_source",
    "corpus",
    "normalize",
]
