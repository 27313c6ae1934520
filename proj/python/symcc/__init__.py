"""Python bindings for the symcc library."""

from ._core import (
    ArgumentError,
    InternalError,
    PreconditionError,
    acyclicity,
    count_m,
    critical_point,
    index_check,
    infer_degrees,
    mtable,
    product,
    selftest,
    series,
    structure_constants,
)

__all__ = [
    "ArgumentError",
    "InternalError",
    "PreconditionError",
    "acyclicity",
    "count_m",
    "critical_point",
    "index_check",
    "infer_degrees",
    "mtable",
    "product",
    "selftest",
    "series",
    "structure_constants",
]
