"""Exact minimum hitting set by branch and bound on bitsets.

Search scheme
-------------
* Unit propagation: an uncovered set with one free element forces it.
* Branching on the smallest uncovered set (fail-first); its elements are
  tried in descending coverage order, later siblings exclude earlier ones.
* When the family is invariant under permutations of a point set (Johnson
  families), elements of the branching set are grouped into orbits of the
  Young subgroup that fixes every branched-on element setwise; one
  representative per orbit is included, and the whole orbit is excluded for
  the remaining siblings (orbital branching).
* Lower bound: the best of a greedy disjoint packing, a coverage-degree
  bound and, for each grouped family, the grouped bound
  ceil(sum of per-group optima / max groups per element).  Grouped families
  are the instance family itself and any ``implied`` families: families that
  every hitting set of the instance family is known to hit as well.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from johnsondim.family import SetFamily, bits_of, remove_supersets

STATUSES = ("optimal", "upper_bound_only", "infeasible", "timeout")


@dataclass(frozen=True)
class HittingInstance:
    family: SetFamily
    upper_bound: Optional[int] = None
    time_budget: Optional[float] = None
    implied: tuple[SetFamily, ...] = ()


@dataclass
class SolveResult:
    status: str
    cardinality: Optional[int]
    witness: tuple[int, ...]
    nodes_explored: int = 0
    elapsed: float = 0.0
    lower_bound: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Timeout(Exception):
    pass


def greedy_hitting_set(family: SetFamily) -> Optional[tuple[int, ...]]:
    """Repeatedly take the element hitting the most remaining sets.

    Returns ``None`` when the family contains an empty set.
    """
    if family.infeasible:
        return None
    return _greedy(family.sets)


def _greedy(sets: Sequence[int]) -> tuple[int, ...]:
    unc = list(sets)
    chosen = []
    while unc:
        cov: dict[int, int] = {}
        for s in unc:
            for e in bits_of(s):
                cov[e] = cov.get(e, 0) + 1
        best = min(cov, key=lambda e: (-cov[e], e))
        chosen.append(best)
        b = 1 << best
        unc = [s for s in unc if not s & b]
    return tuple(sorted(chosen))


def _packing_bound(unc: Sequence[int]) -> int:
    used = 0
    count = 0
    for s in sorted(unc, key=int.bit_count):
        if not s & used:
            used |= s
            count += 1
    return count


def _degree_bound(unc: Sequence[int]) -> int:
    cov: dict[int, int] = {}
    for s in unc:
        while s:
            low = s & -s
            s ^= low
            cov[low] = cov.get(low, 0) + 1
    need = len(unc)
    t = 0
    for c in sorted(cov.values(), reverse=True):
        need -= c
        t += 1
        if need <= 0:
            break
    return t


def small_exact(sets: Sequence[int]) -> int:
    """Optimum of a small instance; plain include/exclude recursion."""
    if not sets:
        return 0
    if any(s == 0 for s in sets):
        return sys.maxsize
    best = [len(sets)]

    def rec(size: int, unc: list[int], excl: int) -> None:
        rest = []
        for s in unc:
            s &= ~excl
            if not s:
                return
            rest.append(s)
        if not rest:
            best[0] = min(best[0], size)
            return
        if size + max(_packing_bound(rest), 1) >= best[0]:
            return
        pivot = min(rest, key=int.bit_count)
        cov = {e: sum(1 for s in rest if s >> e & 1) for e in bits_of(pivot)}
        for e in sorted(cov, key=lambda e: (-cov[e], e)):
            b = 1 << e
            rec(size + 1, [s for s in rest if not s & b], excl)
            excl |= b
            if size + 1 >= best[0]:
                return

    rec(0, list(sets), 0)
    return best[0]


def _group_system(family: SetFamily) -> tuple[list[list[int]], int]:
    groups = [[family.sets[i] for i in g] for g in family.groups]
    load: dict[int, int] = {}
    for g in groups:
        u = 0
        for s in g:
            u |= s
        for e in bits_of(u):
            load[e] = load.get(e, 0) + 1
    return groups, max(load.values(), default=1)


class _Search:
    def __init__(self, family: SetFamily, limit: int, deadline: Optional[float],
                 implied: Sequence[SetFamily] = ()):
        self.sets = remove_supersets(family.sets)
        self.labels = family.point_labels
        self.deadline = deadline
        self.nodes = 0
        self.best_size = limit
        self.best: Optional[int] = None
        # one (groups, weight) pair per grouped family
        self.systems: list[tuple[list[list[int]], int]] = []
        self.memo: dict[tuple, int] = {}
        for fam in (family, *implied):
            if fam.groups:
                self.systems.append(_group_system(fam))
        if self.labels is not None:
            full = 0
            for lab in self.labels:
                full |= lab
            self.root_part: tuple[int, ...] = (full,)
        else:
            self.root_part = ()

    # lower bounds ------------------------------------------------------

    def grouped_bound(self, chosen: int, free: int, room: int) -> int:
        best = 0
        memo = self.memo
        if len(memo) > 2_000_000:
            memo.clear()
        for si, (groups, weight) in enumerate(self.systems):
            total = 0
            for gi, g in enumerate(groups):
                res = set()
                for s in g:
                    if not s & chosen:
                        res.add(s & free)
                key = (si, gi, *sorted(res))
                v = memo.get(key)
                if v is None:
                    v = small_exact(remove_supersets(res)) if res else 0
                    memo[key] = v
                total += v
            best = max(best, -(-total // weight))
            if best >= room:
                break
        return best

    def lower_bound(self, unc: list[int], chosen: int, free: int, room: int) -> int:
        lb = _packing_bound(unc)
        if lb >= room:
            return lb
        lb = max(lb, _degree_bound(unc))
        if lb >= room or not self.systems:
            return lb
        return max(lb, self.grouped_bound(chosen, free, room))

    # symmetry ----------------------------------------------------------

    def orbits(self, part: tuple[int, ...], elems: list[int]) -> list[list[int]]:
        if self.labels is None:
            return [[e] for e in elems]
        out: dict[tuple, list[int]] = {}
        for e in elems:
            lab = self.labels[e]
            out.setdefault(tuple((lab & c).bit_count() for c in part), []).append(e)
        return list(out.values())

    def refine(self, part: tuple[int, ...], e: int) -> tuple[int, ...]:
        if self.labels is None:
            return part
        lab = self.labels[e]
        out = []
        for c in part:
            a, b = c & lab, c & ~lab
            if a:
                out.append(a)
            if b:
                out.append(b)
        return tuple(out)

    # search ------------------------------------------------------------

    def run(self, incumbent: Optional[int]) -> None:
        if incumbent is not None and incumbent.bit_count() < self.best_size:
            self.best, self.best_size = incumbent, incumbent.bit_count()
        self.rec(0, 0, self.sets, self.root_part)

    def rec(self, chosen: int, excl: int, unc: list[int], part: tuple[int, ...]) -> None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout
        free = ~(chosen | excl)
        while True:
            rest = []
            forced = 0
            for s in unc:
                if s & chosen:
                    continue
                s &= free
                if not s:
                    return
                if not s & (s - 1):
                    forced |= s
                rest.append(s)
            unc = rest
            if not forced:
                break
            chosen |= forced
            free &= ~forced
        size = chosen.bit_count()
        if not unc:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        room = self.best_size - size
        if room <= 0 or self.lower_bound(unc, chosen, free, room) >= room:
            return

        smallest = min(s.bit_count() for s in unc)
        pivot, orbits = None, None
        for s in unc:
            if s.bit_count() != smallest:
                continue
            orb = self.orbits(part, bits_of(s))
            if orbits is None or len(orb) < len(orbits):
                pivot, orbits = s, orb
            if len(orb) == 1 or self.labels is None:
                break
        cov = dict.fromkeys(bits_of(pivot), 0)
        for s in unc:
            common = s & pivot
            while common:
                low = common & -common
                common ^= low
                cov[low.bit_length() - 1] += 1
        orbits.sort(key=lambda o: (-cov[o[0]], o[0]))
        for orb in orbits:
            e = orb[0]
            self.rec(chosen | (1 << e), excl, unc, self.refine(part, e))
            for x in orb:
                excl |= 1 << x
            if size + 1 >= self.best_size:
                return


def min_hitting_set(instance: HittingInstance) -> SolveResult:
    """Exact minimum hitting set of ``instance.family``.

    With ``upper_bound`` only hitting sets of at most that size are sought
    (status ``infeasible`` if none exists).  If ``time_budget`` runs out the
    best set found so far is returned as ``upper_bound_only``.
    """
    family = instance.family
    start = time.monotonic()
    if family.infeasible:
        return SolveResult("infeasible", None, (), 0, 0.0)
    limit = family.ground_size + 1
    if instance.upper_bound is not None:
        limit = min(limit, instance.upper_bound + 1)
    deadline = start + instance.time_budget if instance.time_budget is not None else None
    search = _Search(family, limit, deadline, instance.implied)
    # hitting the inclusion-minimal sets hits the whole family
    seed = sum(1 << e for e in _greedy(search.sets))
    root_lb = 0
    if search.sets:
        root_lb = search.lower_bound(search.sets, 0, ~0, sys.maxsize)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, family.ground_size + 200))
    status = "optimal"
    try:
        search.run(seed)
    except _Timeout:
        status = "upper_bound_only"
    finally:
        sys.setrecursionlimit(old_limit)
    elapsed = time.monotonic() - start
    if search.best is None:
        if status == "optimal":
            return SolveResult("infeasible", None, (), search.nodes, elapsed, root_lb)
        return SolveResult("timeout", None, (), search.nodes, elapsed, root_lb)
    witness = tuple(bits_of(search.best))
    return SolveResult(status, len(witness), witness, search.nodes, elapsed, root_lb)


def brute_force_hitting_set(family: SetFamily, max_cardinality: Optional[int] = None) -> Optional[int]:
    """Smallest hitting set size by enumerating subsets in increasing size."""
    from itertools import combinations

    if family.infeasible:
        return None
    elems = sorted({e for s in family.sets for e in bits_of(s)})
    top = len(elems) if max_cardinality is None else max_cardinality
    for c in range(0, top + 1):
        for combo in combinations(elems, c):
            h = 0
            for e in combo:
                h |= 1 << e
            if all(s & h for s in family.sets):
                return c
    return None
