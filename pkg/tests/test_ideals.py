from __future__ import annotations

from hypothesis import given, strategies as st

from adnil import (
    Antichain,
    IdealSet,
    antichain_to_ideal,
    build_root_system,
    enumerate_ideals,
    ideal_dimension,
    ideal_minimal_elements,
    total_count_formula,
)
from adnil.ideals import (
    enumerate_ideal_masks,
    is_upward_closed,
    mask_indices,
    partition_seeds,
)
from adnil.rootsys import root_leq

COUNT_LABELS = (
    ["A1", "A2", "A3", "A4", "A5"]
    + ["B2", "B3", "B4", "C2", "C3", "C4", "D2", "D3", "D4"]
    + ["G2", "F4"]
)


def test_mask_indices() -> None:
    assert mask_indices(0) == []
    assert mask_indices(0b101101) == [0, 2, 3, 5]


def test_counts_match_product_formula() -> None:
    for label in COUNT_LABELS:
        rs = build_root_system(label)
        assert len(enumerate_ideal_masks(rs)) == total_count_formula(rs.lie_type), label


def test_every_enumerated_mask_is_upward_closed() -> None:
    for label in ["A3", "B3", "G2"]:
        rs = build_root_system(label)
        for mask in enumerate_ideal_masks(rs):
            assert is_upward_closed(rs, mask), (label, mask)


def test_masks_are_ascending_and_unique() -> None:
    rs = build_root_system("C3")
    masks = enumerate_ideal_masks(rs)
    assert masks == sorted(set(masks))
    assert masks[0] == 0


def test_antichain_ideal_bijection_exhaustive() -> None:
    for label in ["A4", "B3", "D4", "G2"]:
        rs = build_root_system(label)
        seen = set()
        for ideal in enumerate_ideals(rs):
            antichain = ideal_minimal_elements(rs, ideal)
            # minimal elements really are pairwise incomparable
            idx = antichain.indices()
            for a in idx:
                for b in idx:
                    if a != b:
                        ra, rb = rs.positive_roots[a], rs.positive_roots[b]
                        assert not root_leq(ra, rb)
            assert antichain_to_ideal(rs, antichain) == ideal
            seen.add(antichain.mask)
        assert len(seen) == total_count_formula(rs.lie_type)


_B4 = build_root_system("B4")


@given(st.integers(min_value=0, max_value=(1 << 16) - 1))
def test_minimal_elements_of_any_filter_union(bits: int) -> None:
    # the up-closure of the minimal elements of any root subset is an
    # ideal whose minimal elements form exactly that antichain
    rs = _B4
    subset = IdealSet(bits)
    antichain = ideal_minimal_elements(rs, subset)
    ideal = antichain_to_ideal(rs, antichain)
    assert is_upward_closed(rs, ideal.mask)
    assert ideal_minimal_elements(rs, ideal) == antichain


def test_ideal_dimension() -> None:
    assert ideal_dimension(IdealSet(0)) == 0
    assert ideal_dimension(IdealSet(0b1011)) == 3


def test_empty_antichain_gives_zero_ideal() -> None:
    rs = build_root_system("A2")
    assert antichain_to_ideal(rs, Antichain(0)) == IdealSet(0)


def test_partition_seeds_cover_exactly_once() -> None:
    from adnil.ideals import _dfs_masks

    for label, depth in [("A3", 2), ("B3", 3), ("C4", 5)]:
        rs = build_root_system(label)
        combined: list[int] = []
        for start, ideal, blocked in partition_seeds(rs, depth):
            combined.extend(_dfs_masks(rs, start, ideal, blocked))
        assert sorted(combined) == enumerate_ideal_masks(rs), label
        assert len(combined) == len(set(combined)), label


def test_partition_depth_extremes() -> None:
    rs = build_root_system("A2")
    assert partition_seeds(rs, 0) == [(0, 0, 0)]
    full = partition_seeds(rs, len(rs))
    assert len(full) == total_count_formula(rs.lie_type)
