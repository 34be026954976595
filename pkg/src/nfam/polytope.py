"""Lattice points of the polytope cut out by

    x_i >= 0,   sum_{i in I} x_i <= sum_{i in I} a_i + d   for 1 <= |I| <= u,

with ``u = n - r + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .construct import Params
from .seqcore import DimensionError, Family, box


@dataclass(frozen=True)
class PolytopeSpec:
    params: Params

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def u(self) -> int:
        return self.params.u

    @property
    def upper(self) -> tuple[int, ...]:
        """Per-coordinate bound from the singleton inequalities."""
        return tuple(v + self.params.d for v in self.params.a)


def contains(x, spec: PolytopeSpec) -> bool:
    """Membership test.

    For a fixed subset size k the tightest inequality is the one over the k
    largest deltas ``x_i - a_i``, so it is enough to check the running sums
    of the sorted deltas for k = 1..u.
    """
    p = spec.params
    if len(x) != p.n:
        raise DimensionError(f"point has dimension {len(x)}, expected {p.n}")
    if any(v < 0 for v in x):
        return False
    deltas = sorted((xi - ai for xi, ai in zip(x, p.a)), reverse=True)
    total = 0
    for delta in deltas[: spec.u]:
        total += delta
        if total > p.d:
            return False
    return True


def enumerate_L(spec: PolytopeSpec) -> Family:
    """All lattice points, found by scanning the box ``prod [0, a_i + d]``."""
    return Family((x for x in box(spec.upper) if contains(x, spec)), spec.n)
