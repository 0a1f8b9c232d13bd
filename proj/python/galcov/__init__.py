"""Galois cover fundamental groups: degeneration, braid monodromy, presentations and certificates."""

import json as _json

from ._galcov import (
    GalcovError,
    Presentation,
    abelianize,
    braid_presentation,
    census,
    coset_count,
    delta_square,
    factorization,
    finite_quotient,
    galois,
    incidental_pairs,
    kernel,
    lines,
    model_check,
    model_order,
    phi,
    pitilde,
    pres1,
    psi,
    simplify,
    smith,
    tau,
    theorem100,
    version,
)
from ._galcov import verify as _verify

__version__ = version()


def verify(n, mod=2, depth=0, window=2, max_cosets=4_000_000, cache_dir=""):
    """Full certificate as a dict (the same report as ``galcov verify --format json``)."""
    return _json.loads(_verify(n, mod, depth, window, max_cosets, cache_dir))


__all__ = [
    "GalcovError",
    "Presentation",
    "abelianize",
    "braid_presentation",
    "census",
    "coset_count",
    "delta_square",
    "factorization",
    "finite_quotient",
    "galois",
    "incidental_pairs",
    "kernel",
    "lines",
    "model_check",
    "model_order",
    "phi",
    "pitilde",
    "pres1",
    "psi",
    "simplify",
    "smith",
    "tau",
    "theorem100",
    "verify",
    "version",
]
