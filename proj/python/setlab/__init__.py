"""Finite set-system topologies, hitting-set combinatorics, and
block-permutation symmetry.

The compiled extension ``_core`` does all the work; this package adds a
dict-based convenience wrapper around the JSON command runner so Python
callers get the exact same reports the command-line tool prints.
"""

from __future__ import annotations

import json
from typing import Any

try:  # installed layout: extension lives inside the package
    from . import _core  # type: ignore[attr-defined]
except ImportError:  # in-tree build layout: extension sits on sys.path
    import _core  # type: ignore[no-redef]

min_hitting = _core.min_hitting
orbit = _core.orbit
invariant_subsets = _core.invariant_subsets

__all__ = ["run", "min_hitting", "orbit", "invariant_subsets"]


def run(config: dict[str, Any]) -> dict[str, Any]:
    """Run a verification command and return its structured report.

    ``config`` uses the same schema as the command-line tool's
    ``--config`` file; it must contain a ``command`` key naming one of
    the supported commands (``space``, ``cantor``, ``hitting``,
    ``thm39``, ``ps0``, ``trace``, ``symmetry``, ``battery-sweep``).
    """
    return json.loads(_core.run_json(json.dumps(config)))
