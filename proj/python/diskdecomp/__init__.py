"""Decompose landmark-count functions on S1 into sums of disk indicators."""

from ._core import (
    DEFAULT_CAP,
    DEFAULT_TOL,
    RNG_ALGORITHM,
    Error,
    FormatError,
    analyze,
    canonicalize,
    check,
    count,
    decompose,
    forward,
    parse_sequence,
    perturb,
    render_svg,
)

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_TOL",
    "RNG_ALGORITHM",
    "Error",
    "FormatError",
    "analyze",
    "canonicalize",
    "check",
    "count",
    "decompose",
    "forward",
    "parse_sequence",
    "perturb",
    "render_svg",
]
