"""Sequences in N^n and finite families of them.

Sequences are plain tuples of non-negative ints.  A :class:`Family` is an
immutable set of equal-length sequences that always iterates in
lexicographic order, so anything printed or serialized from it is stable.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import product

IntSeq = tuple[int, ...]


class DimensionError(ValueError):
    pass


def as_seq(x: Iterable[int]) -> IntSeq:
    """Coerce *x* to an ``IntSeq``, rejecting negative or non-integer entries."""
    t = tuple(x)
    for v in t:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"entries must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"entries must be non-negative, got {t}")
    return t


def _same_dim(*xs: Sequence[int]) -> int:
    n = len(xs[0])
    for x in xs[1:]:
        if len(x) != n:
            raise DimensionError(f"dimension mismatch: {len(x)} != {n}")
    return n


def zeros(n: int) -> IntSeq:
    return (0,) * n


def ones(n: int) -> IntSeq:
    return (1,) * n


def unit(n: int, i: int) -> IntSeq:
    """The standard basis vector with a 1 at (0-based) position *i*."""
    if not 0 <= i < n:
        raise IndexError(f"coordinate {i} out of range for n={n}")
    return tuple(1 if j == i else 0 for j in range(n))


def prefix_ones(n: int, p: int) -> IntSeq:
    """First *p* coordinates 1, the rest 0 (so ``prefix_ones(n, n) == ones(n)``)."""
    if not 0 <= p <= n:
        raise ValueError(f"need 0 <= p <= n, got p={p}, n={n}")
    return (1,) * p + (0,) * (n - p)


def weight(x: Sequence[int]) -> int:
    return sum(x)


def join(xs: Iterable[Sequence[int]]) -> IntSeq:
    """Componentwise maximum of a nonempty collection of sequences."""
    xs = list(xs)
    if not xs:
        raise ValueError("join of an empty collection is undefined")
    _same_dim(*xs)
    return tuple(map(max, *xs)) if len(xs) > 1 else tuple(xs[0])


def leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise order: true iff ``x[i] <= y[i]`` for every i."""
    _same_dim(x, y)
    return all(a <= b for a, b in zip(x, y))


def setminus(a: Sequence[int], b: Sequence[int]) -> IntSeq:
    """Truncated difference ``max(a[i] - b[i], 0)``; its weight is ``|a v b| - |b|``."""
    _same_dim(a, b)
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> IntSeq:
    _same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def compositions(total: int, parts: int) -> Iterable[IntSeq]:
    """All ways to write *total* as an ordered sum of *parts* non-negative ints.

    Yielded in lexicographic order.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def box(upper: Sequence[int]) -> Iterable[IntSeq]:
    """Every sequence componentwise below *upper*, in lexicographic order."""
    return product(*(range(v + 1) for v in upper))


class Family:
    """A finite set of sequences of a common dimension ``n``.

    Members are held sorted lexicographically.  Equality and hashing are
    extensional; two families with the same members and dimension are equal
    regardless of how they were built.
    """

    __slots__ = ("n", "members", "_set")

    def __init__(self, vectors: Iterable[Iterable[int]] = (), n: int | None = None):
        uniq = {as_seq(v) for v in vectors}
        dims = {len(v) for v in uniq}
        if n is None:
            if not dims:
                raise ValueError("dimension must be given for an empty family")
            if len(dims) > 1:
                raise DimensionError(f"members of mixed dimension {sorted(dims)}")
            n = dims.pop()
        elif dims - {n}:
            raise DimensionError(f"members of dimension {sorted(dims)} in family of dimension {n}")
        self.n = n
        self.members: tuple[IntSeq, ...] = tuple(sorted(uniq))
        self._set = frozenset(uniq)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.n == other.n and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.n, self._set))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {list(self.members)})"

    def issubset(self, other: Family) -> bool:
        return self.n == other.n and self._set <= other._set

    def union(self, other: Family) -> Family:
        if self.n != other.n:
            raise DimensionError(f"dimension mismatch: {self.n} != {other.n}")
        return Family(self._set | other._set, self.n)

    def permuted(self, perm: Sequence[int]) -> Family:
        """Apply a coordinate permutation: new coordinate i is old ``perm[i]``."""
        return Family((tuple(x[j] for j in perm) for x in self.members), self.n)

    def to_lists(self) -> list[list[int]]:
        return [list(x) for x in self.members]


class Antichain(Family):
    """A family whose members are pairwise incomparable."""

    __slots__ = ()

    def __init__(self, vectors: Iterable[Iterable[int]] = (), n: int | None = None):
        super().__init__(vectors, n)
        ms = self.members
        for i, x in enumerate(ms):
            for y in ms[i + 1:]:
                if leq(x, y) or leq(y, x):
                    raise ValueError(f"{x} and {y} are comparable")


def maximal_elements(A: Family) -> Antichain:
    """Members of *A* not strictly below another member."""
    if not len(A):
        raise ValueError("maximal elements of an empty family are undefined")
    # Heavier members first: a member can only be dominated by a heavier one.
    order = sorted(A.members, key=lambda x: -weight(x))
    kept: list[IntSeq] = []
    for x in order:
        if not any(leq(x, g) for g in kept):
            kept.append(x)
    return Antichain(kept, A.n)


def downset_of(gens: Iterable[Sequence[int]], n: int | None = None) -> Family:
    """All sequences below some generator.

    *gens* may be any iterable of sequences (an :class:`Antichain`, a
    :class:`Family`, or a plain list).  The closure is built by walking
    one-step decrements, so each member is visited once regardless of how
    much the generator boxes overlap.
    """
    if isinstance(gens, Family):
        n = gens.n if n is None else n
        stack = list(gens.members)
    else:
        stack = [as_seq(g) for g in gens]
    if n is None:
        if not stack:
            raise ValueError("dimension must be given for an empty generator set")
        n = len(stack[0])
    if stack:
        _same_dim(*stack)
        if len(stack[0]) != n:
            raise DimensionError(f"generators have dimension {len(stack[0])}, expected {n}")
    seen = set(stack)
    while stack:
        x = stack.pop()
        for i, v in enumerate(x):
            if v:
                y = x[:i] + (v - 1,) + x[i + 1:]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return Family(seen, n)
