"""Exact sizes: elementary symmetric polynomials and the closed forms for |K|."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .construct import Params, balanced_partition
from .seqcore import IntSeq, as_seq


def binom(m: int, k: int) -> int:
    """C(m, k), taken to be 0 whenever ``k < 0`` or ``m < k``.

    The zero case covers negative *m* too: it counts solutions to a
    non-negative system whose cap is already exceeded.
    """
    if k < 0 or m < k:
        return 0
    return comb(m, k)


def elementary_symmetric(a, k: int) -> int:
    a = as_seq(a)
    if not 0 <= k <= len(a):
        raise ValueError(f"k={k} out of range for n={len(a)}")
    return _esp_all(a)[k]


def _esp_all(a) -> list[int]:
    # coefficients of prod (1 + a_i t), lowest degree first
    e = [1] + [0] * len(a)
    for i, v in enumerate(a, 1):
        for k in range(i, 0, -1):
            e[k] += v * e[k - 1]
    return e


@dataclass(frozen=True)
class SizeBreakdown:
    base_term: int
    layer_terms: tuple[int, ...] = ()
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.base_term + sum(self.layer_terms))


def closed_form_K_size(p: Params) -> SizeBreakdown:
    n, u, d = p.n, p.u, p.d
    e = _esp_all(p.a)
    base = sum(binom(d + j, j) * e[n - j] for j in range(n + 1))
    layers = []
    for i in range(1, p.layers + 1):
        e = _esp_all(tuple(v + i for v in p.a))
        rad = d - u * i
        layers.append(sum(
            (binom(rad + j, j) - binom(rad + u, j)) * e[n - j]
            for j in range(u + 1, n + 1)
        ))
    return SizeBreakdown(base, tuple(layers))


def reference_size(n: int, p: int, d: int) -> int:
    """``sum_j C(p, j) C(n - j + d, d)``, the size of ``D(U(e_p, d))``."""
    if p < 0 or d < 0:
        raise ValueError("p and d must be non-negative")
    if p > n:
        raise ValueError(f"need p <= n, got p={p}, n={n}")
    return sum(comb(p, j) * comb(n - j + d, d) for j in range(p + 1))


@dataclass(frozen=True)
class BalancedOptimum:
    """Best ``|K(r, n, a, d)|`` over d with ``a`` balanced.

    ``optima`` lists every maximizing ``(d, a)``, smallest d first;
    ``sizes`` maps each admissible d to its size.
    """

    n: int
    r: int
    s: int
    size: int
    optima: tuple[tuple[int, IntSeq], ...]
    sizes: dict[int, int]

    @property
    def d(self) -> int:
        return self.optima[0][0]

    @property
    def a(self) -> IntSeq:
        return self.optima[0][1]


def best_balanced_size(n: int, r: int, s: int) -> BalancedOptimum:
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if n < r:
        raise ValueError(f"K is only defined for n >= r (got n={n}, r={r})")
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    sizes = {}
    for d in range(s // r + 1):
        sizes[d] = closed_form_K_size(Params(r, n, balanced_partition(n, s - r * d), d)).total
    best = max(sizes.values())
    optima = tuple(
        (d, balanced_partition(n, s - r * d)) for d in sorted(sizes) if sizes[d] == best
    )
    return BalancedOptimum(n, r, s, best, optima, sizes)
