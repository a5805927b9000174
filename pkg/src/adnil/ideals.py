"""Ad-nilpotent ideals as bit masks over the positive roots.

An ideal is a set of positive roots closed upward in dominance order
(its root spaces span an ideal of the Borel subalgebra).  Ideals are in
bijection with antichains via their minimal elements.  Both sets are
stored as integer bit masks, bit i marking positive_roots[i].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .rootsys import RootSystem


@dataclass(frozen=True)
class IdealSet:
    """Upward-closed set of positive roots, as a bit mask."""

    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> list[int]:
        return mask_indices(self.mask)


@dataclass(frozen=True)
class Antichain:
    """Pairwise incomparable set of positive roots, as a bit mask."""

    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> list[int]:
        return mask_indices(self.mask)


def mask_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_upward_closed(rs: RootSystem, mask: int) -> bool:
    return all(rs.filter_masks[i] & ~mask == 0 for i in mask_indices(mask))


def antichain_to_ideal(rs: RootSystem, antichain: Antichain) -> IdealSet:
    """Union of the principal filters over the antichain's elements."""
    mask = 0
    for i in antichain.indices():
        mask |= rs.filter_masks[i]
    return IdealSet(mask)


def ideal_minimal_elements(rs: RootSystem, ideal: IdealSet) -> Antichain:
    """The antichain of roots in the ideal with nothing below them in it."""
    mask = 0
    for i in ideal.indices():
        if not ideal.mask & rs.below_masks[i]:
            mask |= 1 << i
    return Antichain(mask)


def ideal_dimension(ideal: IdealSet) -> int:
    """Dimension of the ideal as a subspace: one per root space."""
    return len(ideal)


def _dfs_masks(rs: RootSystem, start: int, ideal: int, blocked: int) -> Iterator[int]:
    """All ideals whose antichain extends the current choice using indices
    >= start; `blocked` holds everything comparable to a chosen root."""
    yield ideal
    filters = rs.filter_masks
    comparable = rs.comparable_masks
    for i in range(start, len(filters)):
        if not (blocked >> i) & 1:
            yield from _dfs_masks(rs, i + 1, ideal | filters[i], blocked | comparable[i])


def partition_seeds(rs: RootSystem, depth: int) -> list[tuple[int, int, int]]:
    """Split the antichain search into independent subtrees by fixing the
    membership of the first `depth` roots.  Each seed is a DFS state
    (start, ideal mask, blocked mask); the subtrees cover every ideal
    exactly once."""
    depth = max(0, min(depth, len(rs)))
    seeds = [(depth, 0, 0)]
    for i in range(depth):
        extended = [
            (depth, ideal | rs.filter_masks[i], blocked | rs.comparable_masks[i])
            for _, ideal, blocked in seeds
            if not (blocked >> i) & 1
        ]
        seeds += extended
    return seeds


def enumerate_ideal_masks(rs: RootSystem) -> list[int]:
    """Every ideal of the root system as a bit mask, ascending."""
    masks = list(_dfs_masks(rs, 0, 0, 0))
    masks.sort()
    return masks


def enumerate_ideals(rs: RootSystem) -> Iterator[IdealSet]:
    """All ideals in a deterministic order (ascending membership mask)."""
    for mask in enumerate_ideal_masks(rs):
        yield IdealSet(mask)
