"""Exact character theory of the octonionic signed-permutation groups.

Thin wrapper over the C++ core: every call returns plain Python data decoded
from the same JSON documents the command-line tool prints.
"""

import json
from pathlib import Path

from . import _core
from ._core import UsageError, claim_ids, group_order, roster

__all__ = [
    "UsageError",
    "branch",
    "character_table",
    "claim_ids",
    "group_order",
    "octmul",
    "roster",
    "tensor",
    "verify",
]

# Reference tables shipped inside a wheel; otherwise the build-time data directory is used.
_BUNDLED = Path(__file__).resolve().parent / "data" / "golden"
_DEFAULT_DIR = str(_BUNDLED) if _BUNDLED.is_dir() else ""


def _dir(golden_dir):
    return _DEFAULT_DIR if golden_dir is None else str(golden_dir)


def character_table(group, golden_dir=None):
    """Classes and irreps of a roster group, labeled as in the reference tables when they align."""
    return json.loads(_core.chartab_json(group, _dir(golden_dir)))


def tensor(group, left, right, golden_dir=None):
    """Decomposition of left x right, e.g. tensor("7:3", "3_1", "3_2")["decomposition"]."""
    return json.loads(_core.tensor_json(group, left, right, _dir(golden_dir)))


def branch(group, subgroup, golden_dir=None):
    """Restriction of every irrep of group to subgroup."""
    return json.loads(_core.branch_json(group, subgroup, _dir(golden_dir)))


def verify(filter=None, golden_dir=None):
    """Returns (results, exit_code); exit_code is 0 unless some claim fails."""
    payload, code = _core.verify_json(filter, _dir(golden_dir))
    return json.loads(payload), code


def octmul(*factors):
    """Left-to-right product of octonion expressions such as "e1" or "1/2 + 1/2*e3"."""
    return json.loads(_core.octmul_json(list(factors)))["product"]
