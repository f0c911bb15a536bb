"""Johnson graphs J(n, k) and the explicit vertex-set constructions used on them.

Vertices are k-subsets of {1..n}, stored as bitmasks (bit ``e-1`` for element
``e``) and indexed in colexicographic order, which for bitmasks is plain
numeric order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from johnsondim.graph import Graph, GraphError, build_graph, label_elements

MAX_GROUND = 64


@dataclass(frozen=True, order=True)
class KSubset:
    mask: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.n > MAX_GROUND:
            raise GraphError(f"ground size must lie in 1..{MAX_GROUND}")
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError("subset has elements outside 1..n")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "KSubset":
        return cls(subset_mask(elements), n)

    @property
    def k(self) -> int:
        return self.mask.bit_count()

    @property
    def elements(self) -> list[int]:
        return label_elements(self.mask)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class JohnsonParams:
    """Normalized parameters; ``requested_k`` differs from ``k`` after an n < 2k remap."""

    n: int
    k: int
    requested_k: int

    @property
    def remapped(self) -> bool:
        return self.k != self.requested_k


def johnson_params(n: int, k: int) -> JohnsonParams:
    if k < 1:
        raise GraphError("k must be at least 1")
    if n <= k:
        raise GraphError(f"J(n, k) needs n > k, got n={n}, k={k}")
    if n > MAX_GROUND:
        raise GraphError(f"n is limited to {MAX_GROUND}")
    return JohnsonParams(n, min(k, n - k), k)


def subset_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise GraphError("ground elements are 1-based")
        m |= 1 << (e - 1)
    return m


def k_subsets(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as bitmasks, colexicographic order."""
    masks = [sum(1 << e for e in c) for c in combinations(range(n), k)]
    masks.sort()
    return masks


def johnson_graph(n: int, k: int, remap: bool = True) -> Graph:
    """J(n, k); with ``remap`` the isomorphic J(n, n-k) is built when n < 2k."""
    params = johnson_params(n, k)
    kk = params.k if remap else k
    masks = k_subsets(n, kk)
    index = {m: i for i, m in enumerate(masks)}
    full = (1 << n) - 1
    edges = []
    for i, m in enumerate(masks):
        outside = full & ~m
        a_bits = m
        while a_bits:
            a = a_bits & -a_bits
            a_bits ^= a
            b_bits = outside
            while b_bits:
                b = b_bits & -b_bits
                b_bits ^= b
                j = index[m ^ a ^ b]
                if j > i:
                    edges.append((i, j))
    return build_graph(len(masks), edges, masks, johnson=(n, kk))


def subset_distance(a: KSubset, b: KSubset) -> int:
    """Hop distance in J(n, k): k - |A ∩ B|."""
    if a.n != b.n or a.k != b.k:
        raise GraphError("subsets must share n and k")
    return a.k - (a.mask & b.mask).bit_count()


def _check_triple(n: int, k: int, x: int, y: int, z: int) -> None:
    if k < 2:
        raise GraphError("the construction needs k >= 2")
    if n <= k:
        raise GraphError(f"J(n, k) needs n > k, got n={n}, k={k}")
    if len({x, y, z}) != 3:
        raise GraphError("x, y, z must be mutually distinct")
    for e in (x, y, z):
        if not 1 <= e <= n:
            raise GraphError(f"element {e} outside 1..{n}")


def sprime(n: int, k: int, x: int, y: int, z: int) -> frozenset[int]:
    """All k-subsets except {x,z}∪T and {y,z}∪T with T avoiding x, y, z.

    A vertex is dropped exactly when it contains z and exactly one of x, y.
    """
    _check_triple(n, k, x, y, z)
    bx, by, bz = 1 << (x - 1), 1 << (y - 1), 1 << (z - 1)
    return frozenset(
        m for m in k_subsets(n, k) if not (m & bz and (bool(m & bx) != bool(m & by)))
    )


def sprime_size(n: int, k: int) -> int:
    return comb(n, k) - 2 * comb(n - 3, k - 2)


def lemma1_witness(
    n: int, k: int, x: int, y: int, z: int, t_star: Iterable[int]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """The edge pair AB, AC that no vertex of ``sprime(n, k, x, y, z)`` separates.

    A = {x,y}∪T*, B = {x,z}∪T*, C = {y,z}∪T*.
    """
    _check_triple(n, k, x, y, z)
    t = subset_mask(t_star)
    if t >> n:
        raise GraphError("T* has elements outside 1..n")
    xyz = subset_mask((x, y, z))
    if t & xyz:
        raise GraphError("T* must avoid x, y and z")
    if t.bit_count() != k - 2:
        raise GraphError(f"T* must have exactly k-2 = {k - 2} elements")
    bx, by, bz = 1 << (x - 1), 1 << (y - 1), 1 << (z - 1)
    a, b, c = t | bx | by, t | bx | bz, t | by | bz
    return (a, b), (a, c)


def theorem2_value(n: int) -> int:
    """C(n, 2) - floor(n/2): edge and mixed metric dimension of J(n, 2), n >= 5."""
    if n < 5:
        raise GraphError("closed form holds for n >= 5; J(4, 2) has value 5 by enumeration")
    return comb(n, 2) - n // 2


def theorem2_set(n: int) -> frozenset[int]:
    """Mixed resolving set of J(n, 2): every pair except {1,2}, {3,4}, ..."""
    if n < 5:
        raise GraphError("construction holds for n >= 5")
    matching = {subset_mask((2 * i - 1, 2 * i)) for i in range(1, n // 2 + 1)}
    return frozenset(m for m in k_subsets(n, 2) if m not in matching)


# mixed metric basis of J(4, 2) found by total enumeration
OBSERVATION1_BASIS = frozenset(
    subset_mask(p) for p in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
)


def describe(masks: Iterable[int]) -> list[list[int]]:
    """Sorted element lists, for reports and JSON."""
    return [label_elements(m) for m in sorted(masks)]


def parse_subsets(text: Optional[str]) -> list[int]:
    """Parse ``"1,2;1,3;2,4"`` into label bitmasks."""
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(subset_mask(int(e) for e in chunk.split(",")))
    return out
