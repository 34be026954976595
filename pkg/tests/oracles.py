"""Brute-force reference implementations.

Nothing here imports from ``nfam``: every routine works from the bare
definitions by exhaustive enumeration, so agreement with the package is a
genuine cross-check rather than a re-run of the same code.
"""
from __future__ import annotations

from itertools import chain, combinations, combinations_with_replacement, product
from math import prod


def vec_leq(x, y):
    return all(a <= b for a, b in zip(x, y))


def vec_join(xs):
    return tuple(max(col) for col in zip(*xs))


def compositions(total, parts):
    return [x for x in product(range(total + 1), repeat=parts) if sum(x) == total]


def universe(n, s):
    return [x for x in product(range(s + 1), repeat=n) if sum(x) <= s]


def sphere(a, d):
    return {tuple(ai + ei for ai, ei in zip(a, eps)) for eps in compositions(d, len(a))}


def downset(gens):
    out = set()
    for g in gens:
        out.update(product(*(range(v + 1) for v in g)))
    return out


def K(r, n, a, d):
    u = n - r + 1
    out = set()
    for i in range(d // u + 1):
        out |= downset(sphere(tuple(v + i for v in a), d - u * i))
    return out


def in_polytope(x, a, d, u):
    """Checks every index set of size 1..u explicitly."""
    if any(v < 0 for v in x):
        return False
    idx = range(len(x))
    return all(
        sum(x[i] for i in I) <= sum(a[i] for i in I) + d
        for k in range(1, u + 1)
        for I in combinations(idx, k)
    )


def esp(a, k):
    return sum(prod(c) for c in combinations(a, k))


def is_union_family(A, r, s):
    """All ordered r-tuples, with repetition."""
    A = list(A)
    return all(sum(vec_join(t)) <= s for t in product(A, repeat=r))


def is_downset(A):
    A = set(A)
    return all(y in A for x in A for y in downset([x]))


def maximal(A):
    return {x for x in A if not any(x != y and vec_leq(x, y) for y in A)}


def exhaustive_max(n, r, s):
    """Largest r-wise s-union family over ALL subsets of {x : |x| <= s}.

    Returns ``(size, optima)``.  Exponential in the universe size; meant for
    universes of at most ~16 vectors.
    """
    U = universe(n, s)
    best, optima = 0, []
    for k in range(len(U), 0, -1):
        if k < best:
            break
        for A in combinations(U, k):
            if is_union_family(A, r, s):
                best = k
                optima.append(frozenset(A))
    return best, optima


def antichains(U):
    """Every antichain of U, by plain recursion with no pruning."""
    U = list(U)

    def rec(start, chosen):
        yield chosen
        for i in range(start, len(U)):
            x = U[i]
            if all(not vec_leq(x, y) and not vec_leq(y, x) for y in chosen):
                yield from rec(i + 1, chosen + [x])

    return rec(0, [])


def antichain_max(n, r, s):
    """Maximum over down-sets, via every antichain of the universe."""
    best, optima = 0, []
    for ac in antichains(universe(n, s)):
        if not all(sum(vec_join(t)) <= s for t in combinations_with_replacement(ac, r)):
            continue
        size = len(downset(ac))
        if size > best:
            best, optima = size, [frozenset(ac)]
        elif size == best:
            optima.append(frozenset(ac))
    return best, optima


def permutations_of(a):
    from itertools import permutations
    return set(permutations(a))


def powerset(it):
    it = list(it)
    return chain.from_iterable(combinations(it, k) for k in range(len(it) + 1))
