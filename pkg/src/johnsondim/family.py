"""Set families over a finite ground set: the input to every hitting-set search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional


@dataclass(frozen=True)
class SetFamily:
    """Indexed collection of subsets of ``range(ground_size)``, as bitmasks.

    ``provenance[i]`` lists every tag that produced ``sets[i]`` (duplicates are
    merged).  ``point_labels``, when given, assigns each ground element a
    bitmask over a set of points and asserts that the family is invariant
    under every permutation of those points; the solver uses that to prune
    symmetric branches.  ``groups`` partitions (or covers) set indices for the
    grouped lower bound.
    """

    ground_size: int
    sets: tuple[int, ...]
    provenance: tuple[tuple, ...]
    point_labels: Optional[tuple[int, ...]] = None
    groups: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        full = (1 << self.ground_size) - 1
        for s in self.sets:
            if s & ~full:
                raise ValueError("set contains elements outside the ground set")
        if len(self.provenance) != len(self.sets):
            raise ValueError("one provenance entry per set required")

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def infeasible(self) -> bool:
        return any(s == 0 for s in self.sets)

    def is_hit_by(self, elements: Iterable[int]) -> bool:
        h = 0
        for e in elements:
            h |= 1 << e
        return all(s & h for s in self.sets)

    def members(self, i: int) -> list[int]:
        return bits_of(self.sets[i])

    @classmethod
    def build(
        cls,
        ground_size: int,
        tagged: Iterable[tuple[int, Hashable]],
        point_labels: Optional[Iterable[int]] = None,
        group_key: Optional[Callable[[Hashable], Hashable]] = None,
    ) -> "SetFamily":
        """Deduplicate ``(mask, tag)`` pairs, keeping first-seen order."""
        order: dict[int, list] = {}
        for mask, tag in tagged:
            order.setdefault(mask, []).append(tag)
        sets = tuple(order)
        provenance = tuple(tuple(tags) for tags in order.values())
        groups = None
        if group_key is not None:
            by_key: dict[Hashable, list[int]] = {}
            for i, tags in enumerate(provenance):
                for key in dict.fromkeys(group_key(t) for t in tags):
                    by_key.setdefault(key, []).append(i)
            groups = tuple(tuple(v) for v in by_key.values())
        labels = tuple(point_labels) if point_labels is not None else None
        return cls(ground_size, sets, provenance, labels, groups)


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << int(e)
    return m


def remove_supersets(sets: Iterable[int]) -> list[int]:
    """Drop duplicates and every set that contains another set of the family.

    Survivors are returned smallest first (ties by value).  For each ground
    element e, ``absent[e]`` is a bitset over the survivors that miss e; a
    set s contains some survivor iff the AND of ``absent[e]`` over e not in
    s is non-zero.  Sets of equal size never contain one another, so each
    size class is tested against the smaller survivors only.
    """
    ordered = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    if len(ordered) <= 64:
        kept = []
        for s in ordered:
            if all(t & s != t for t in kept):
                kept.append(s)
        return kept
    width = max(ordered).bit_length()
    full = (1 << width) - 1
    absent = [0] * width
    everyone = 0
    kept: list[int] = []
    i = 0
    while i < len(ordered):
        size = ordered[i].bit_count()
        j = i
        while j < len(ordered) and ordered[j].bit_count() == size:
            j += 1
        fresh = []
        for s in ordered[i:j]:
            acc = everyone
            out = full & ~s
            while acc and out:
                low = out & -out
                out ^= low
                acc &= absent[low.bit_length() - 1]
            if not acc:
                fresh.append(s)
        for s in fresh:
            bit = 1 << len(kept)
            kept.append(s)
            everyone |= bit
            for e in bits_of(full & ~s):
                absent[e] |= bit
        i = j
    return kept
