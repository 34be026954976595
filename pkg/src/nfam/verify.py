"""Property checks for arbitrary families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .construct import Params
from .polytope import PolytopeSpec
from .seqcore import Family, IntSeq, join, maximal_elements, weight


def is_downset(A: Family) -> bool:
    for x in A:
        for i, v in enumerate(x):
            if v and x[:i] + (v - 1,) + x[i + 1:] not in A:
                return False
    return True


@dataclass(frozen=True)
class UnionViolation:
    members: tuple[IntSeq, ...]
    join: IntSeq

    @property
    def weight(self) -> int:
        return weight(self.join)


def find_union_violation(A: Family, r: int, s: int) -> UnionViolation | None:
    """First r-multiset of maximal elements whose join outweighs *s*, if any.

    Joins only grow along the order, so maximal elements are the only ones
    that need checking; multisets suffice because the join is idempotent.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if not len(A):
        return None
    gens = maximal_elements(A).members
    for combo in combinations_with_replacement(gens, r):
        j = join(combo)
        if weight(j) > s:
            return UnionViolation(combo, j)
    return None


def is_r_wise_s_union(A: Family, r: int, s: int) -> bool:
    return find_union_violation(A, r, s) is None


class ProfileUndefined(ValueError):
    """The profile of a family cannot be formed; ``reason`` says why.

    Reasons: ``"divisor"`` (n <= r), ``"nondivisible"`` (n - r does not
    divide |m| - s), ``"negative_d"``, ``"negative_a"``.
    """

    def __init__(self, reason: str, message: str, m: IntSeq | None = None):
        super().__init__(message)
        self.reason = reason
        self.m = m


@dataclass(frozen=True)
class Profile:
    r: int
    s: int
    m: IntSeq
    d: int
    a: IntSeq
    P: tuple[IntSeq, ...]
    assumption_holds: bool

    def spec(self) -> PolytopeSpec:
        return PolytopeSpec(Params(self.r, len(self.m), self.a, self.d, self.s))


def derive_profile(A: Family, r: int, s: int) -> Profile:
    """Coordinate maxima ``m``, ``d = (|m| - s)/(n - r)``, ``a = m - d`` and the
    points ``P_i = a + d e_i``; ``assumption_holds`` says whether every P_i is in A.

    Raises :class:`ProfileUndefined` when any of these is ill-defined.
    """
    n = A.n
    if n <= r:
        raise ProfileUndefined("divisor", f"need n > r to divide by n - r (n={n}, r={r})")
    if not len(A):
        raise ValueError("profile of an empty family is undefined")
    m = tuple(map(max, *A.members)) if len(A) > 1 else A.members[0]
    q, rem = divmod(weight(m) - s, n - r)
    if rem:
        raise ProfileUndefined(
            "nondivisible", f"n - r = {n - r} does not divide |m| - s = {weight(m) - s}", m)
    if q < 0:
        raise ProfileUndefined("negative_d", f"d = {q} is negative", m)
    a = tuple(v - q for v in m)
    if min(a) < 0:
        raise ProfileUndefined("negative_a", f"a = m - d = {a} has a negative entry", m)
    P = tuple(a[:i] + (a[i] + q,) + a[i + 1:] for i in range(n))
    return Profile(r, s, m, q, a, P, all(x in A for x in P))


def subset_max(A: Family, I) -> int:
    """Largest coordinate sum over index set *I* (0-based) among members of A."""
    I = sorted(set(I))
    if not I:
        raise ValueError("index set must be nonempty")
    if I[0] < 0 or I[-1] >= A.n:
        raise IndexError(f"indices {I} out of range for n={A.n}")
    if not len(A):
        raise ValueError("subset_max of an empty family is undefined")
    return max(sum(x[i] for i in I) for x in A)
