"""Symmetric functions over Z[q]: bases, omega, positivity and z-series."""

from ._base import (
    BASES,
    Basis,
    PositivityReport,
    SymFunc,
    SymFuncJson,
    evaluate_q,
    from_basis,
    from_json,
    is_positive_in,
    omega,
    omega_schur_check,
    poincare_polynomial,
    render_expansion,
    sf_add,
    sf_basis_element,
    sf_mul,
    to_basis,
    to_json,
)
from .series import SFSeries, series_inverse, series_mul
from .transitions import (
    get_transitions,
    kostka_matrix,
    load_transition_cache,
    save_transition_cache,
)

__all__ = [
    "BASES",
    "Basis",
    "PositivityReport",
    "SymFunc",
    "SymFuncJson",
    "SFSeries",
    "evaluate_q",
    "from_basis",
    "from_json",
    "get_transitions",
    "is_positive_in",
    "kostka_matrix",
    "load_transition_cache",
    "omega",
    "omega_schur_check",
    "poincare_polynomial",
    "render_expansion",
    "save_transition_cache",
    "series_inverse",
    "series_mul",
    "sf_add",
    "sf_basis_element",
    "sf_mul",
    "to_basis",
    "to_json",
]
