"""The candidate extremal families.

``build_K`` assembles the layered family

    K(r, n, a, d) = union over i = 0..floor(d/u) of D(U(a + i*1, d - u*i)),
    u = n - r + 1,

where ``U(c, t)`` is the shell of sequences sitting exactly ``t`` above ``c``
and ``D`` is down-closure.  Layers overlap; the union is a plain set union.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .seqcore import (
    Family,
    IntSeq,
    add,
    as_seq,
    compositions,
    downset_of,
    prefix_ones,
    weight,
)


@dataclass(frozen=True)
class Params:
    """One instance ``(r, n, a, d)``; ``s`` defaults to ``|a| + r*d``.

    Construction fails unless ``r >= 2``, ``n >= r``, ``d >= 0`` and
    ``|a| == s - r*d``.
    """

    r: int
    n: int
    a: IntSeq
    d: int
    s: int | None = None

    def __post_init__(self):
        a = as_seq(self.a)
        object.__setattr__(self, "a", a)
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.n < self.r:
            raise ValueError(f"K is only defined for n >= r (got n={self.n}, r={self.r})")
        if len(a) != self.n:
            raise ValueError(f"a has length {len(a)}, expected n={self.n}")
        if self.d < 0:
            raise ValueError(f"d must be non-negative, got {self.d}")
        s = weight(a) + self.r * self.d
        if self.s is None:
            object.__setattr__(self, "s", s)
        elif self.s != s:
            raise ValueError(f"|a| = {weight(a)} but s - r*d = {self.s - self.r * self.d}")

    @property
    def u(self) -> int:
        return self.n - self.r + 1

    @property
    def layers(self) -> int:
        """Index of the last layer, ``floor(d / u)``."""
        return self.d // self.u


def sphere(a, d: int) -> Family:
    """``{a + e : e >= 0, |e| = d}``; has ``C(d+n-1, n-1)`` members."""
    a = as_seq(a)
    if d < 0:
        raise ValueError(f"radius must be non-negative, got {d}")
    return Family((add(a, eps) for eps in compositions(d, len(a))), len(a))


def build_K(p: Params) -> Family:
    gens: set[IntSeq] = set()
    for i in range(p.layers + 1):
        centre = tuple(v + i for v in p.a)
        gens.update(sphere(centre, p.d - p.u * i))
    return downset_of(gens, p.n)


def balanced_partition(n: int, total: int) -> IntSeq:
    """The descending balanced split of *total* into *n* parts, e.g. (3, 4) -> (2, 1, 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if total < 0:
        raise ValueError(f"total must be non-negative, got {total}")
    q, rem = divmod(total, n)
    return (q + 1,) * rem + (q,) * (n - rem)


def is_balanced(a) -> bool:
    return not a or max(a) - min(a) <= 1


def reference_family(r: int, s: int, n: int) -> Family:
    """``D(U(e_p, d))`` with ``s = d*r + p``, ``0 <= p < r``.

    ``e_p`` has ones in its first p coordinates.  Only ``n >= p`` is
    required here, so this also covers ``n < r`` where ``build_K`` refuses.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    d, p = divmod(s, r)
    if n < p:
        raise ValueError(f"need n >= p = s mod r, got n={n}, p={p}")
    return downset_of(sphere(prefix_ones(n, p), d), n)


def sphere_size(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1)
