from __future__ import annotations

import pytest

from adnil import (
    build_root_system,
    class_distribution,
    classify_ideal,
    joint_histogram,
    nilpotence_from_partition,
    nilpotence_oracle,
    nilpotence_via_completion,
    staircase_filling,
    symmetric_completion,
    two_ray_classify,
    upward_ray_bound,
    zigzag_class,
)
from adnil.ideals import enumerate_ideal_masks
from adnil.nilpotence import ideal_partition_a, ideal_to_shifted, resolve_workers


def test_hand_counted_distributions() -> None:
    # small enough to enumerate by hand
    assert class_distribution(build_root_system("A1"), workers=1) == {0: 1, 1: 1}
    assert class_distribution(build_root_system("A2"), workers=1) == {0: 1, 1: 3, 2: 1}
    assert class_distribution(build_root_system("C2"), workers=1) == {
        0: 1, 1: 3, 2: 1, 3: 1,
    }
    assert class_distribution(build_root_system("D2"), workers=1) == {0: 1, 1: 3}


def test_low_rank_coincidences() -> None:
    # B2 = C2 and D3 = A3 as root systems, so the statistics must agree
    b2 = class_distribution(build_root_system("B2"), workers=1)
    c2 = class_distribution(build_root_system("C2"), workers=1)
    assert b2 == c2
    d3 = class_distribution(build_root_system("D3"), workers=1)
    a3 = class_distribution(build_root_system("A3"), workers=1)
    assert d3 == a3


def test_oracle_requires_ideal_through_highest_root() -> None:
    rs = build_root_system("A2")
    assert nilpotence_oracle(rs, 0) == 0
    assert nilpotence_oracle(rs, 7) == 2
    # bracketing the two simple roots reaches the highest root
    assert nilpotence_oracle(rs, 1) == 1


def test_staircase_partition_of_full_ideal() -> None:
    rs = build_root_system("A2")
    assert ideal_partition_a(rs, 0b111) == (2, 1)
    assert ideal_partition_a(rs, 0b001) == (1, 0)
    assert ideal_partition_a(rs, 0) == (0, 0)


def test_staircase_filling_hand_example() -> None:
    # corners get 1, the inner cell adds the best hook split
    assert staircase_filling((2, 1), 2) == [[2, 1], [1]]
    assert staircase_filling((1,), 1) == [[1]]


def test_truncation_recursion_agrees_with_filling() -> None:
    for n in range(1, 6):
        rs = build_root_system(f"A{n}")
        for mask in enumerate_ideal_masks(rs):
            parts = ideal_partition_a(rs, mask)
            want = staircase_filling(parts, n)[0][0] if mask else 0
            assert nilpotence_from_partition(parts, n) == want


def test_zigzag_large_diagram() -> None:
    parts = (10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1)
    assert zigzag_class(parts, 13) == 3
    assert nilpotence_from_partition(parts, 13) == 3


def test_zigzag_empty_and_full() -> None:
    assert zigzag_class((), 4) == 0
    assert zigzag_class((4, 3, 2, 1), 4) == 4


def test_type_a_methods_agree_with_oracle() -> None:
    for n in range(1, 6):
        rs = build_root_system(f"A{n}")
        for mask in enumerate_ideal_masks(rs):
            want = nilpotence_oracle(rs, mask)
            for method in ("filling", "recursion", "zigzag"):
                assert classify_ideal(rs, mask, method) == want, (n, mask, method)


def test_completion_agrees_with_oracle() -> None:
    for label in ["B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4"]:
        rs = build_root_system(label)
        for mask in enumerate_ideal_masks(rs):
            want = nilpotence_oracle(rs, mask)
            assert nilpotence_via_completion(rs, mask) == want, (label, mask)


def test_ray_methods_agree_with_oracle() -> None:
    for label in ["C2", "C3", "C4", "C5"]:
        rs = build_root_system(label)
        for mask in enumerate_ideal_masks(rs):
            assert classify_ideal(rs, mask, "ray") == nilpotence_oracle(rs, mask)
    for label in ["B2", "B3", "B4", "D3", "D4", "D5"]:
        rs = build_root_system(label)
        for mask in enumerate_ideal_masks(rs):
            assert classify_ideal(rs, mask, "tworay") == nilpotence_oracle(rs, mask)


def test_two_ray_cases_are_total() -> None:
    seen = set()
    for label in ["B4", "D4", "B5", "D5"]:
        rs = build_root_system(label)
        n, family = rs.lie_type.rank, rs.lie_type.family
        for mask in enumerate_ideal_masks(rs):
            parts, _ = ideal_to_shifted(rs, mask)
            res = two_ray_classify(parts, n, family)
            seen.add(res.case_id)
            assert res.nilpotence >= 0
    assert seen == set(range(8))


def test_two_ray_small_diagrams() -> None:
    assert two_ray_classify((), 3, "D").nilpotence == 0
    assert two_ray_classify((4,), 3, "B").nilpotence == 1
    assert two_ray_classify((3, 1), 2, "B").nilpotence == 3


def test_symmetric_completion_type_c_mirrors() -> None:
    # type C completes by reflecting cells across the diagonal
    assert symmetric_completion((2,), "C", 2) == (2, 1)
    assert symmetric_completion((3,), "C", 2) == (3, 1, 1)
    assert symmetric_completion((3, 1), "C", 2) == (3, 2, 1)
    assert symmetric_completion((), "C", 3) == ()


def test_shifted_diagrams_exist_for_all_ideals() -> None:
    for label in ["B3", "C3", "D4", "D5"]:
        rs = build_root_system(label)
        swapped = 0
        for mask in enumerate_ideal_masks(rs):
            parts, star = ideal_to_shifted(rs, mask)
            assert sum(parts) == mask.bit_count()
            swapped += star
        if rs.lie_type.family == "D":
            assert swapped > 0, "some D ideal needs the column swap"


def test_upward_ray_is_class_rounded_up_to_even() -> None:
    for label in ["C2", "C3", "C4", "C5"]:
        rs = build_root_system(label)
        n = rs.lie_type.rank
        for mask in enumerate_ideal_masks(rs):
            parts, _ = ideal_to_shifted(rs, mask)
            k = nilpotence_oracle(rs, mask)
            assert upward_ray_bound(parts, n) == k + (k % 2)


def test_method_family_validation() -> None:
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        classify_ideal(rs, 0, "ray")
    with pytest.raises(ValueError):
        classify_ideal(rs, 0, "completion")
    with pytest.raises(ValueError):
        classify_ideal(build_root_system("C2"), 0, "tworay")
    with pytest.raises(ValueError):
        classify_ideal(rs, 0, "nonsense")


def test_ideal_argument_forms() -> None:
    from adnil import IdealSet

    rs = build_root_system("B2")
    for mask in enumerate_ideal_masks(rs):
        assert nilpotence_oracle(rs, IdealSet(mask)) == nilpotence_oracle(rs, mask)


def test_parallel_distribution_matches_serial() -> None:
    rs = build_root_system("C4")
    assert class_distribution(rs, workers=2) == class_distribution(rs, workers=1)


def test_budget_timeout() -> None:
    rs = build_root_system("E6")
    with pytest.raises(TimeoutError):
        class_distribution(rs, workers=1, budget=1e-9)


def test_resolve_workers(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ADNIL_WORKERS", "3")
    assert resolve_workers(None) == 3
    assert resolve_workers(2) == 2
    monkeypatch.delenv("ADNIL_WORKERS")
    assert resolve_workers(None) >= 1


def test_joint_histogram_marginals() -> None:
    rs = build_root_system("C3")
    joint = joint_histogram(rs)
    by_class: dict[int, int] = {}
    for (_, k), c in joint.items():
        by_class[k] = by_class.get(k, 0) + c
    assert by_class == class_distribution(rs, workers=1)
    assert sum(joint.values()) == 20
    # one full-dimensional ideal of maximal class, one empty of class 0
    assert joint[(0, 0)] == 1
    assert joint[(9, 5)] == 1
