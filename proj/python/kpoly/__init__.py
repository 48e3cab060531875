"""Exact K-stability certificate engine.

Thin wrapper over the compiled extension; every value crosses the boundary
as an exact fraction string such as "43/60".
"""

from _kpoly import (  # noqa: F401
    Corpus,
    integrate_chamber,
    integrate_uni,
    pfaffian_relations,
    pfaffians,
    sign_on_interval,
)

__all__ = [
    "Corpus",
    "integrate_chamber",
    "integrate_uni",
    "pfaffian_relations",
    "pfaffians",
    "sign_on_interval",
]
