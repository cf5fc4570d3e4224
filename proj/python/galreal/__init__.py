"""Exact Lie algebra realizations by vector fields."""

import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if _data.is_dir():
    os.environ.setdefault("GALREAL_DATA", str(_data))

from ._galreal import (  # noqa: E402
    Error,
    algebra_ids,
    canonicalize,
    check_algebra,
    check_relations,
    check_symmetry,
    data_dir,
    deform,
    evaluate,
    family_ids,
    latex,
    realize,
    table_ids,
    verify,
)

__all__ = [
    "Error",
    "algebra_ids",
    "canonicalize",
    "check_algebra",
    "check_relations",
    "check_symmetry",
    "data_dir",
    "deform",
    "evaluate",
    "family_ids",
    "latex",
    "realize",
    "table_ids",
    "verify",
]
