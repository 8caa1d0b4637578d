"""Rado numbers of Diophantine equations by exhaustive coloring search."""

from ._rado import (
    BoundOverflowError,
    Equation,
    EquationError,
    LimitError,
    ParseError,
    RadoError,
    __version__,
    compute_rado,
    dp_feasible,
    export_cnf,
    family_equation,
    find_coloring,
    hyperedges,
    model_to_certificate,
    oracle_colorable,
    parse_equation,
    solutions,
    table,
    verify_certificate,
    write_certificate,
)

__all__ = [
    "BoundOverflowError",
    "Equation",
    "EquationError",
    "LimitError",
    "ParseError",
    "RadoError",
    "__version__",
    "compute_rado",
    "dp_feasible",
    "export_cnf",
    "family_equation",
    "find_coloring",
    "hyperedges",
    "model_to_certificate",
    "oracle_colorable",
    "parse_equation",
    "solutions",
    "table",
    "verify_certificate",
    "write_certificate",
]
