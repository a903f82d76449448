"""Inscribed squares of plane algebraic curves.

Thin wrapper over the compiled extension. Curves are passed as text in the
same ``i j coeff`` line format the CLI reads; solve results come back as the
CLI's JSON report, decoded here into a dict.
"""

import json as _json

try:
    from ._squarepeg import (
        BudgetExceeded,
        bezout,
        generators,
        inscribed_bound,
        mixed_volume,
        newton_check,
        render_svg,
        solve_json,
        volume_polynomial,
    )
except ImportError:  # build tree: the extension sits next to the package
    from _squarepeg import (
        BudgetExceeded,
        bezout,
        generators,
        inscribed_bound,
        mixed_volume,
        newton_check,
        render_svg,
        solve_json,
        volume_polynomial,
    )

__all__ = [
    "BudgetExceeded",
    "bezout",
    "generators",
    "inscribed_bound",
    "mixed_volume",
    "newton_check",
    "render_svg",
    "solve",
    "solve_json",
    "volume_polynomial",
]


def solve(curve, seed=0, budget=625, rotate=True):
    """Count the squares inscribed in ``curve``; returns the report as a dict."""
    return _json.loads(solve_json(curve, seed=seed, budget=budget, rotate=rotate))
