"""Exact maximum r-wise s-union families by branch-and-bound.

A largest family can always be taken down-closed, and a down-set is fixed by
its antichain of maximal elements, so the search runs over antichains of the
finite universe ``{x : |x| <= s}``.  Down-sets are bitmasks over that
universe; the size of a family is a popcount.

Candidates are ordered by descending weight, then descending lexicographic
order.  A later candidate therefore never dominates an earlier one, and each
antichain is reached exactly once, as an increasing sequence of positions.
"""
from __future__ import annotations

import logging
import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import comb

from .census import BalancedOptimum, best_balanced_size
from .construct import Params, build_K
from .seqcore import (
    Antichain,
    Family,
    IntSeq,
    compositions,
    downset_of,
    maximal_elements,
    weight,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_UNIVERSE = 10_000
DEFAULT_MAX_DEPTH = 64


class SearchLimitExceeded(RuntimeError):
    """The instance is too large for exact search under the current caps."""


def default_max_universe() -> int:
    env = os.environ.get("NFAM_MAX_UNIVERSE")
    return int(env) if env else DEFAULT_MAX_UNIVERSE


def universe_size(n: int, s: int) -> int:
    return comb(s + n, n)


def _join_weight(x: IntSeq, y: IntSeq) -> int:
    return sum(a if a > b else b for a, b in zip(x, y))


def _join2(x: IntSeq, y: IntSeq) -> IntSeq:
    return tuple(a if a > b else b for a, b in zip(x, y))


def _prune_dominated(vs) -> list[IntSeq]:
    vs = sorted(set(vs), key=lambda x: -weight(x))
    kept: list[IntSeq] = []
    for v in vs:
        if not any(all(a <= b for a, b in zip(v, w)) for w in kept):
            kept.append(v)
    return kept


class _Search:
    def __init__(self, n: int, r: int, s: int, all_optima: bool, max_depth: int, floor: int):
        self.n, self.r, self.s = n, r, s
        self.all_optima = all_optima
        self.max_depth = max_depth
        universe = [x for w in range(s + 1) for x in compositions(w, n)]
        universe.sort(key=lambda x: (-weight(x), tuple(-v for v in x)))
        self.universe = universe
        index = {x: i for i, x in enumerate(universe)}
        down = [0] * len(universe)
        for i in sorted(range(len(universe)), key=lambda i: weight(universe[i])):
            x = universe[i]
            m = 1 << i
            for j, v in enumerate(x):
                if v:
                    m |= down[index[x[:j] + (v - 1,) + x[j + 1:]]]
            down[i] = m
        self.down = down
        self.best = floor
        self.optima: list[tuple[int, ...]] = []
        self.nodes = 0
        self.shared = None

    def _publish(self):
        if self.shared is not None and self.best > self.shared.value:
            with self.shared.get_lock():
                if self.best > self.shared.value:
                    self.shared.value = self.best

    def _sync(self):
        if self.shared is not None and self.shared.value > self.best:
            # Never lower than what this worker has witnessed itself.
            self.best = self.shared.value

    def _record(self, size: int, chosen: tuple[int, ...]):
        if size > self.best:
            self.best = size
            self.optima = [chosen]
            self._publish()
        elif size == self.best and (self.all_optima or not self.optima):
            self.optima.append(chosen)

    def _beaten(self, bound: int) -> bool:
        return bound < self.best or (bound == self.best and not self.all_optima and bool(self.optima))

    def root_branches(self, symmetric: bool) -> list[int]:
        """Positions allowed as the first chosen element."""
        ks = range(len(self.universe))
        if symmetric:
            return [k for k in ks if list(self.universe[k]) == sorted(self.universe[k], reverse=True)]
        return list(ks)

    def child(self, mask: int, levels, cands: list[int], k: int):
        c = self.universe[cands[k]]
        new_mask = mask | self.down[cands[k]]
        fresh = [_join2(v, c) for v in levels[-1]] if levels else []
        # joins of subsets of size <= r-2 are needed to extend the state later
        new_levels = []
        for lvl in range(len(levels)):
            prev = levels[lvl - 1] if lvl else []
            new_levels.append(_prune_dominated(levels[lvl] + [_join2(v, c) for v in prev]))
        new_cands = []
        s, universe = self.s, self.universe
        for c2 in cands[k + 1:]:
            if (new_mask >> c2) & 1:
                continue
            y = universe[c2]
            if all(_join_weight(v, y) <= s for v in fresh):
                new_cands.append(c2)
        return new_mask, new_levels, new_cands

    def initial_levels(self):
        # levels[k]: maximal joins over subsets of size <= k of the chosen set,
        # k = 0..r-2; the empty subset joins to zero.
        return [[tuple([0] * self.n)] for _ in range(self.r - 1)]

    def explore(self, mask: int, levels, cands: list[int], chosen: tuple[int, ...]):
        self.nodes += 1
        if len(chosen) > self.max_depth:
            raise SearchLimitExceeded(f"antichain depth exceeds {self.max_depth}")
        self._record(mask.bit_count(), chosen)
        if not cands:
            return
        suffix = [0] * (len(cands) + 1)
        for k in range(len(cands) - 1, -1, -1):
            suffix[k] = suffix[k + 1] | self.down[cands[k]]
        for k in range(len(cands)):
            self._sync()
            if self._beaten((mask | suffix[k]).bit_count()):
                break
            new_mask, new_levels, new_cands = self.child(mask, levels, cands, k)
            self.explore(new_mask, new_levels, new_cands, chosen + (cands[k],))

    def run_branch(self, cands: list[int], k: int):
        """Explore the subtree whose first chosen element is ``cands[k]``."""
        bound = 0
        for c in cands[k:]:
            bound |= self.down[c]
        self._sync()
        if self._beaten(bound.bit_count()):
            return
        mask, levels, sub = self.child(0, self.initial_levels(), cands, k)
        self.explore(mask, levels, sub, (cands[k],))

    def antichain(self, chosen: tuple[int, ...]) -> Antichain:
        return Antichain((self.universe[i] for i in chosen), self.n)


_worker: _Search | None = None


def _init_worker(n, r, s, all_optima, max_depth, floor, shared):
    global _worker
    _worker = _Search(n, r, s, all_optima, max_depth, floor)
    _worker.shared = shared


def _run_worker_branch(k: int):
    w = _worker
    w.optima = []
    w.run_branch(list(range(len(w.universe))), k)
    return w.best, [w.antichain(c).to_lists() for c in w.optima]


@dataclass
class SearchReport:
    n: int
    r: int
    s: int
    search_max: int
    optima: list[Antichain]
    conjectured: BalancedOptimum | None = None
    match: bool | None = None
    uniqueness: bool | None = None
    strict_uniqueness: bool | None = None
    all_optima: bool = False
    nodes: int = field(default=0, compare=False)

    def families(self) -> list[Family]:
        return [downset_of(g) for g in self.optima]

    def to_dict(self) -> dict:
        conj = None
        if self.conjectured is not None:
            c = self.conjectured
            conj = {
                "size": c.size,
                "optima": [{"d": d, "a": list(a)} for d, a in c.optima],
                "sizes": {str(d): v for d, v in sorted(c.sizes.items())},
            }
        return {
            "n": self.n,
            "r": self.r,
            "s": self.s,
            "search_max": self.search_max,
            "all_optima": self.all_optima,
            "optima": [g.to_lists() for g in self.optima],
            "conjectured": conj,
            "match": self.match,
            "uniqueness": self.uniqueness,
            "strict_uniqueness": self.strict_uniqueness,
            "nodes": self.nodes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SearchReport:
        conj = None
        if d["conjectured"] is not None:
            c = d["conjectured"]
            conj = BalancedOptimum(
                d["n"], d["r"], d["s"], c["size"],
                tuple((o["d"], tuple(o["a"])) for o in c["optima"]),
                {int(k): v for k, v in c["sizes"].items()},
            )
        return cls(
            n=d["n"], r=d["r"], s=d["s"], search_max=d["search_max"],
            optima=[Antichain(g, d["n"]) for g in d["optima"]],
            conjectured=conj, match=d["match"], uniqueness=d["uniqueness"],
            strict_uniqueness=d["strict_uniqueness"], all_optima=d["all_optima"],
            nodes=d["nodes"],
        )


def equal_up_to_permutation(F: Family, G: Family) -> bool:
    """True iff some coordinate permutation maps F onto G (exhaustive over n!)."""
    if F.n != G.n or len(F) != len(G):
        return False
    if not len(F):
        return True
    Fm, Gm = maximal_elements(F), maximal_elements(G)
    if len(Fm) != len(Gm):
        return False
    return any(Fm.permuted(p) == Gm for p in permutations(range(F.n)))


def max_family_search(
    n: int,
    r: int,
    s: int,
    *,
    all_optima: bool = False,
    max_universe: int | None = None,
    max_depth: int = DEFAULT_MAX_DEPTH,
    threads: int = 1,
    symmetry: bool = False,
    floor: int = 0,
) -> SearchReport:
    """Largest r-wise s-union family in N^n, found exactly.

    With *all_optima* every optimal family is returned (as its antichain of
    maximal elements); otherwise one witness.  *symmetry* restricts the
    first chosen maximal element to non-increasing vectors, which keeps one
    representative per coordinate-permutation orbit reachable; it cannot be
    combined with *all_optima*.  *floor* is a size known to be achievable;
    it only strengthens pruning, and the search falls back to ``floor=0``
    if nothing reaching it is found.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    if symmetry and all_optima:
        raise ValueError("symmetry breaking cannot be combined with all_optima")
    cap = default_max_universe() if max_universe is None else max_universe
    size = universe_size(n, s)
    if size > cap:
        raise SearchLimitExceeded(f"universe has {size} vectors, cap is {cap}")

    if threads == 1:
        search = _Search(n, r, s, all_optima, max_depth, floor)
        cands = list(range(len(search.universe)))
        if floor <= 0:
            search._record(0, ())
        for k in search.root_branches(symmetry):
            search.run_branch(cands, k)
        best = search.best
        optima = [search.antichain(c) for c in search.optima]
        nodes = search.nodes
    else:
        best, optima, nodes = _parallel_search(n, r, s, all_optima, max_depth, threads, symmetry, floor)

    if not optima:
        log.info("floor %d not reached for n=%d r=%d s=%d; retrying without it", floor, n, r, s)
        return max_family_search(
            n, r, s, all_optima=all_optima, max_universe=cap, max_depth=max_depth,
            threads=threads, symmetry=symmetry, floor=0)

    optima = sorted(set(optima), key=lambda g: g.members)
    report = SearchReport(n, r, s, best, optima, all_optima=all_optima, nodes=nodes)
    if n >= r:
        _compare(report)
    return report


def _parallel_search(n, r, s, all_optima, max_depth, threads, symmetry, floor):
    roots = _Search(n, r, s, all_optima, max_depth, floor).root_branches(symmetry)
    shared = multiprocessing.Value("i", floor)
    best, found = floor, []
    with ProcessPoolExecutor(
        max_workers=threads, initializer=_init_worker,
        initargs=(n, r, s, all_optima, max_depth, floor, shared),
    ) as pool:
        for local_best, local_optima in pool.map(_run_worker_branch, roots):
            if not local_optima:
                continue
            if local_best > best:
                best, found = local_best, []
            if local_best == best:
                found.extend(local_optima)
    optima = [Antichain(g, n) for g in found]
    if not all_optima and optima:
        optima = [min(optima, key=lambda g: g.members)]
    # per-worker node counters overlap across branches; not reported
    return best, optima, -1


def _compare(report: SearchReport) -> None:
    n, r, s = report.n, report.r, report.s
    conj = best_balanced_size(n, r, s)
    report.conjectured = conj
    report.match = report.search_max == conj.size
    if not report.all_optima:
        return
    if not report.match:
        report.uniqueness = report.strict_uniqueness = False
        return
    targets = [build_K(Params(r, n, a, d)) for d, a in conj.optima]
    fams = report.families()
    report.strict_uniqueness = all(F in targets for F in fams)
    report.uniqueness = all(any(equal_up_to_permutation(F, K) for K in targets) for F in fams)


def check_conjecture(n: int, r: int, s: int, **opts) -> SearchReport:
    """Exact search with every optimum collected, compared against the best
    balanced candidate.  For ``n < r`` there is no candidate and the
    comparison fields stay ``None``.
    """
    opts.setdefault("all_optima", True)
    report = max_family_search(n, r, s, **opts)
    if n >= r and report.match is False:
        level = logging.ERROR if n == r + 1 else logging.WARNING
        log.log(level, "search max %d differs from conjectured %d for n=%d r=%d s=%d",
                report.search_max, report.conjectured.size, n, r, s)
    return report
