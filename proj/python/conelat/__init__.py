"""Verification library for the facial geometry of psd cones.

Thin wrappers over the compiled core; suite entry points return the same
structured records the ``conelat`` CLI emits with ``--json``.
"""

import json

from ._core import (
    chart_idempotent_residual,
    combined_condition_str,
    factor_condition_strs,
    herm_dim,
    incidence_reference,
    incidence_triples,
    predicted_dimension,
)
from . import _core

__all__ = [
    "chart_idempotent_residual",
    "combined_condition_str",
    "factor_condition_strs",
    "herm_dim",
    "incidence_reference",
    "incidence_triples",
    "modularity",
    "predicted_dimension",
    "run",
    "sections_demo",
]

__version__ = "0.1.0"


def run(subcommand, field="", n=0, trials=0, tol=0.0, seed=20260815, shape=""):
    """Run one verification suite; returns the structured run record."""
    return json.loads(
        _core.run_json(subcommand, field, n, trials, tol, seed, shape)
    )


def modularity(shape):
    """Modularity report (with witness triple when non-modular)."""
    return json.loads(_core.modularity_json(shape))


def sections_demo(field="R", n=3, trials=40, seed=20260815):
    """Walk the non-compact E11 section of C_n(field)."""
    return json.loads(_core.sections_demo_json(field, n, trials, seed))
