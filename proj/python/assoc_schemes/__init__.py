"""Symmetric association schemes: parameters, eigenmatrices, Krein
parameters and self-duality classification.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    InternalInconsistency,
    SchemeError,
    ScmParseError,
    Scheme,
    SpectralError,
    __version__,
    analyze,
    closed_form_eigenmatrix,
    cycle_scheme,
    gl2_classify,
    group_scheme,
    hamming_scheme,
    parse_scm,
    poly_check,
    selfdual,
    verify,
)

__all__ = [
    "InternalInconsistency",
    "SchemeError",
    "ScmParseError",
    "Scheme",
    "SpectralError",
    "__version__",
    "analyze",
    "closed_form_eigenmatrix",
    "cycle_scheme",
    "gl2_classify",
    "group_scheme",
    "hamming_scheme",
    "parse_scm",
    "poly_check",
    "selfdual",
    "verify",
]
