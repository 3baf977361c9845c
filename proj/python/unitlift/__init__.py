"""Exact unit construction in finite rings.

Thin wrapper over the native module; see the project README for the JSON
formats accepted by the string-based entry points.
"""

from ._core import (
    NotAUnitError,
    ResourceError,
    ShapeError,
    UnsupportedError,
    ValidationError,
    bench_csv,
    count_units,
    enumerate_units,
    invert,
    invert_matrix_mod,
    invert_zmod,
    verify,
)

__all__ = [
    "NotAUnitError",
    "ResourceError",
    "ShapeError",
    "UnsupportedError",
    "ValidationError",
    "bench_csv",
    "count_units",
    "enumerate_units",
    "invert",
    "invert_matrix_mod",
    "invert_zmod",
    "verify",
]
