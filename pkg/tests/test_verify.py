from itertools import combinations

import pytest

from nfam.construct import Params, build_K
from nfam.seqcore import Family, downset_of, unit, zeros
from nfam.verify import (
    ProfileUndefined,
    derive_profile,
    find_union_violation,
    is_downset,
    is_r_wise_s_union,
    subset_max,
)

import oracles

K = build_K(Params(2, 3, (1, 0, 0), 1))


def test_is_downset():
    assert is_downset(Family([zeros(2), unit(2, 0)]))
    assert not is_downset(Family([unit(2, 0)]))
    assert is_downset(Family([], n=3))
    assert is_downset(K)


def test_union_examples():
    assert is_r_wise_s_union(K, 2, 3)
    assert not is_r_wise_s_union(K, 2, 2)
    bad = find_union_violation(Family([(2, 0), (0, 2)]), 2, 3)
    assert bad.join == (2, 2) and bad.weight == 4
    assert set(bad.members) == {(2, 0), (0, 2)}
    for s in range(6):
        assert is_r_wise_s_union(Family([(1, 2, 1)]), 3, s) == (s >= 4)
    assert is_r_wise_s_union(Family([], n=2), 2, 0)


def test_union_matches_all_tuples(rng):
    for _ in range(300):
        n = rng.randint(1, 4)
        s = rng.randint(0, 4)
        r = rng.randint(1, 3)
        U = oracles.universe(n, s + 1)
        A = Family(rng.sample(U, rng.randint(1, min(6, len(U)))), n)
        assert is_r_wise_s_union(A, r, s) == oracles.is_union_family(A, r, s), (A, r, s)


def test_profile_example():
    pr = derive_profile(K, 2, 3)
    assert pr.m == (2, 1, 1)
    assert pr.d == 1
    assert pr.a == (1, 0, 0)
    assert pr.P == ((2, 0, 0), (1, 1, 0), (1, 0, 1))
    assert pr.assumption_holds
    assert pr.spec().params == Params(2, 3, (1, 0, 0), 1)


@pytest.mark.parametrize("fam, r, s, reason", [
    (Family([(0, 0, 0)]), 2, 1, "negative_d"),
    (Family([(1, 1)]), 2, 2, "divisor"),
    (Family([(1, 0, 0, 0)]), 2, 0, "nondivisible"),
    (downset_of([(2, 0, 0)]), 2, 1, "negative_a"),
])
def test_profile_failures(fam, r, s, reason):
    with pytest.raises(ProfileUndefined) as exc:
        derive_profile(fam, r, s)
    assert exc.value.reason == reason


def test_profile_assumption_can_fail():
    # m = (1, 1, 1), d = 1, a = 0: the P_i are the unit vectors, missing here
    A = Family([(0, 0, 0), (1, 1, 1)])
    pr = derive_profile(A, 2, 2)
    assert pr.d == 1 and pr.a == (0, 0, 0)
    assert not pr.assumption_holds


def test_subset_max_examples():
    assert subset_max(K, {0}) == 2
    # every member of this K weighs at most |a| + d = 2
    assert subset_max(K, range(3)) == max(sum(x) for x in oracles.K(2, 3, (1, 0, 0), 1)) == 2
    for I in oracles.powerset(range(3)):
        if I:
            assert subset_max(Family([zeros(3)]), I) == 0
    with pytest.raises(ValueError):
        subset_max(K, [])


def test_subset_max_claim_on_K():
    for r in (2, 3):
        for n in range(r + 1, r + 3):
            for d in range(3):
                for total in range(4):
                    for a in oracles.compositions(total, n):
                        p = Params(r, n, a, d)
                        A = build_K(p)
                        pr = derive_profile(A, r, p.s)
                        assert pr.assumption_holds and pr.d == d and pr.a == a
                        for k in range(1, p.u + 1):
                            for I in combinations(range(n), k):
                                assert subset_max(A, I) == sum(a[i] for i in I) + d
