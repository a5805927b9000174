"""Class of nilpotence of an ad-nilpotent ideal, several ways.

The reference computation ("oracle") iterates the bracket filtration
directly on root bit masks.  Independent routes recover the same number
from diagram combinatorics: a staircase filling, a truncation recursion,
and broken-ray walks on (shifted) Ferrers diagrams.  Types B, C and D
are routed through a symmetric completion of the shifted diagram.
"""
from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool

from .ideals import IdealSet, enumerate_ideal_masks, mask_indices, partition_seeds
from .rootsys import RootSystem, build_root_system

Partition = tuple[int, ...]

WORKER_ENV = "ADNIL_WORKERS"


def _as_mask(ideal: IdealSet | int) -> int:
    return ideal.mask if isinstance(ideal, IdealSet) else ideal


def nilpotence_oracle(rs: RootSystem, ideal: IdealSet | int) -> int:
    """Largest k such that the k-fold sum set of the ideal is nonempty.

    Stage k+1 is (stage k + ideal) intersected with the positive roots,
    computed through the precomputed sum table.  Every nonempty stage
    must contain the highest root; this is asserted as a guard (skipped
    for reducible D2, which has no highest root).
    """
    mask = _as_mask(ideal)
    if mask == 0:
        return 0
    pairs = rs.sum_pairs
    sums: list[int] = [0] * len(pairs)
    for i in mask_indices(mask):
        acc = 0
        for j, sbit in pairs[i]:
            if (mask >> j) & 1:
                acc |= sbit
        sums[i] = acc
    theta_bit = rs.highest_bit
    k = 0
    cur = mask
    while cur:
        if theta_bit is not None and not cur & theta_bit:
            raise AssertionError("nonempty sum stage without the highest root")
        k += 1
        nxt = 0
        for i in mask_indices(cur):
            nxt |= sums[i]
        cur = nxt
    return k


# ---------------------------------------------------------------------------
# type A: staircase diagrams


def _pad(parts: tuple[int, ...] | list[int], n: int) -> list[int]:
    parts = [p for p in parts]
    if len(parts) < n:
        parts += [0] * (n - len(parts))
    if len(parts) > n and any(parts[n:]):
        raise ValueError(f"partition {parts} has more than {n} parts")
    parts = parts[:n]
    for i in range(1, n):
        if parts[i] > parts[i - 1]:
            raise ValueError(f"{parts} is not weakly decreasing")
    for i, p in enumerate(parts, start=1):
        if p > n - i + 1:
            raise ValueError(f"{parts} does not fit inside the {n}-staircase")
    return parts


def ideal_partition_a(rs: RootSystem, ideal: IdealSet | int) -> Partition:
    """Row lengths of an ideal of type A in its staircase arrangement."""
    if rs.lie_type.family != "A":
        raise ValueError("staircase partitions require type A")
    n = rs.lie_type.rank
    counts = [0] * n
    for k in mask_indices(_as_mask(ideal)):
        counts[rs.cells[k][0] - 1] += 1
    # upward closure makes each row a prefix of its staircase row
    parts = tuple(counts)
    _pad(parts, n)
    return parts


def staircase_filling(parts: Partition, n: int) -> list[list[int]]:
    """Fill the n-staircase: cells outside the diagram get 0, outer corners
    get 1, and every other diagram cell takes the best split
    t[i][k] + t[n-k+2][j] over k > j.  Entry (1,1) is the class of
    nilpotence of the corresponding type-A ideal.
    """
    lam = _pad(parts, n)
    t = [[0] * (n - i + 1) for i in range(1, n + 1)]

    def lam_at(i: int) -> int:
        return lam[i - 1] if i <= n else 0

    for s in range(n + 1, 1, -1):
        for i in range(max(1, s - n), n + 1):
            j = s - i
            if j < 1 or j > n - i + 1:
                continue
            if j > lam_at(i):
                continue
            if lam_at(i) == j and lam_at(i + 1) < j:
                t[i - 1][j - 1] = 1
                continue
            best = 0
            for k in range(j + 1, n - i + 2):
                cand = t[i - 1][k - 1] + t[n - k + 2 - 1][j - 1]
                if cand > best:
                    best = cand
            t[i - 1][j - 1] = best
    return t


def nilpotence_from_partition(parts: Partition, n: int) -> int:
    """Truncation recursion: drop the first n+1-p rows of a diagram with
    first part p, shrink the ambient staircase to p-1, and count steps."""
    lam = _pad(parts, n)
    steps = 0
    while any(lam):
        first = lam[0]
        lam = _pad(lam[n + 1 - first :], first - 1)
        n = first - 1
        steps += 1
    return steps


def zigzag_class(parts: Partition, n: int) -> int:
    """Broken-ray count on the staircase: drop from the right edge of the
    first row, bounce between the long diagonal x+y=n+1 and the vertical
    border of the diagram, and count the diagonal touchings."""
    lam = _pad(parts, n)
    col = lam[0] if lam else 0
    touches = 0
    while col > 0:
        touches += 1
        row = n + 2 - col
        col = lam[row - 1] if row <= n else 0
    return touches


# ---------------------------------------------------------------------------
# types B, C, D: shifted diagrams and symmetric completions


def _rows_to_shifted(rows: dict[int, set[int]]) -> Partition | None:
    """Row lengths if the cells form a shifted diagram (row i a prefix of
    columns i, i+1, ...; lengths strictly decreasing), else None."""
    if not rows:
        return ()
    depth = max(rows)
    parts = []
    for i in range(1, depth + 1):
        cols = rows.get(i, set())
        if cols != set(range(i, i + len(cols))):
            return None
        parts.append(len(cols))
    for i in range(depth - 1):
        if parts[i] <= parts[i + 1]:
            return None
    if parts[-1] == 0:
        return None
    return tuple(parts)


def ideal_to_shifted(
    rs: RootSystem, ideal: IdealSet | int
) -> tuple[Partition, bool]:
    """Shifted diagram of a B/C/D ideal in its staircase arrangement.

    In type D the two columns through the fork nodes are incomparable, so
    the raw cell set may fail to be a diagram; swapping those two columns
    always repairs it.  The flag reports whether the swap was applied.
    """
    family = rs.lie_type.family
    if family not in "BCD":
        raise ValueError("shifted diagrams require type B, C or D")
    n = rs.lie_type.rank
    rows: dict[int, set[int]] = {}
    for k in mask_indices(_as_mask(ideal)):
        i, j = rs.cells[k]
        rows.setdefault(i, set()).add(j)
    parts = _rows_to_shifted(rows)
    if parts is not None:
        return parts, False
    if family != "D":
        raise AssertionError(f"{rs.lie_type} ideal is not a shifted diagram")
    swap = {n - 1: n, n: n - 1}
    swapped = {
        i: {swap.get(j, j) for j in cols} for i, cols in rows.items()
    }
    parts = _rows_to_shifted(swapped)
    if parts is None:
        raise AssertionError("column swap did not produce a shifted diagram")
    return parts, True


def symmetric_completion(parts: Partition, family: str, n: int) -> Partition:
    """Complete a shifted diagram to the ordinary diagram matching the
    mirror pairing of the staircase arrangement.

    Type C mirrors across the main diagonal.  Types B and D mirror cell
    (i, j) to (j+1, i-1) and add the off-diagonal cell (i, i-1) to every
    nonempty row below the first.
    """
    if family not in "BCD":
        raise ValueError(f"no completion for family {family!r}")
    cells = set()
    for i, a in enumerate(parts, start=1):
        for j in range(i, i + a):
            cells.add((i, j))
    if family == "C":
        cells |= {(j, i) for i, j in list(cells)}
    else:
        cells |= {(j + 1, i - 1) for i, j in list(cells) if i >= 2}
        cells |= {(i, i - 1) for i, a in enumerate(parts, start=1) if a and i >= 2}
    size = 2 * n - 1 if family in "BC" else 2 * n - 2
    lam = [0] * size
    for i, j in cells:
        lam[i - 1] += 1
    for i, j in cells:  # completions of ideals are left-justified
        if j > lam[i - 1]:
            raise AssertionError("completion is not a Ferrers diagram")
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def nilpotence_via_completion(rs: RootSystem, ideal: IdealSet | int) -> int:
    """Class of a B/C/D ideal through its completed ordinary diagram."""
    family = rs.lie_type.family
    n = rs.lie_type.rank
    parts, _ = ideal_to_shifted(rs, ideal)
    lam = symmetric_completion(parts, family, n)
    size = 2 * n - 1 if family in "BC" else 2 * n - 2
    return nilpotence_from_partition(lam, size)


# ---------------------------------------------------------------------------
# type C: single broken ray


def single_ray_class(parts: Partition, n: int) -> int:
    """Class of a type-C ideal read off its shifted diagram.

    A ray drops from the right edge of the first row, bouncing between
    the diagonal x+y=2n and the vertical diagram border.  Meeting x=y
    mid-drop gives class 2k+1, mid-sweep gives 2k, where k counts the
    x+y=2n touchings."""
    if not parts or parts[0] == 0:
        return 0
    col = parts[0]
    k = 0
    while True:
        if col <= n:
            return 2 * k + 1
        k += 1
        row = 2 * n - col + 1
        a = parts[row - 1] if row <= len(parts) else 0
        if a == 0:
            return 2 * k
        col = 2 * n - col + a


def upward_ray_bound(parts: Partition, n: int) -> int:
    """Least even upper bound for the class of a type-C ideal: shoot a ray
    right from the lowest diagonal point of the shifted diagram, bounce
    up off x+y=2n to the next blocking row, and double the touchings."""
    parts = tuple(p for p in parts if p)
    if not parts:
        return 0
    row = len(parts)
    touches = 0
    while True:
        touches += 1
        reach = 2 * n - row
        blocking = 0
        for i in range(row - 1, 0, -1):
            if i - 1 + parts[i - 1] > reach:
                blocking = i
                break
        if blocking == 0:
            return 2 * touches
        row = blocking


# ---------------------------------------------------------------------------
# types B and D: two broken rays


@dataclass(frozen=True)
class TwoRayResult:
    """Outcome of the two-ray walk: matched case (0 = handled directly),
    touch count of the deciding ray, and the class of nilpotence."""

    case_id: int
    touch_count: int
    nilpotence: int


def _bounce_ray(parts: Partition, start_col: int, mirror: int) -> tuple[str, int, int]:
    """Walk one ray: drop along a column, bounce off x+y=mirror, sweep left
    to the diagram border, repeat; stop on the line x=y-1.  Returns the
    travel direction at the stop, the stop's x-coordinate, and the number
    of x+y=mirror touchings.  A drop that reaches x=y-1 on the mirror line
    itself counts as stopping mid-drop."""
    col = start_col
    touches = 0
    while True:
        if 2 * col <= mirror - 1:
            return "down", col, touches
        touches += 1
        row = mirror - col + 1
        a = parts[row - 1] if row <= len(parts) else 0
        if a == 0:
            return "left", mirror - col - 1, touches
        col = mirror - col + a


def two_ray_classify(parts: Partition, n: int, family: str) -> TwoRayResult:
    """Class of a B/D ideal from two rays on its shifted diagram.

    Ray 1 starts right of the first row, ray 2 right of the second; both
    bounce off x+y=2n (type B) or x+y=2n-1 (type D) and stop at x=y-1.
    The stop directions, relative positions and touch counts select one
    of seven cases, each with its own class formula.  Diagrams with fewer
    than two rows are abelian and handled directly (case_id 0)."""
    if family not in "BD":
        raise ValueError("two-ray classification applies to types B and D")
    parts = tuple(p for p in parts if p)
    if not parts:
        return TwoRayResult(0, 0, 0)
    if len(parts) == 1:
        return TwoRayResult(0, 0, 1)
    mirror = 2 * n if family == "B" else 2 * n - 1
    d1, t1, k1 = _bounce_ray(parts, parts[0], mirror)
    d2, t2, k2 = _bounce_ray(parts, parts[1] + 1, mirror)
    if d2 == "left":
        if d1 == "left" and t1 >= t2 and k1 == k2 + 1:
            return TwoRayResult(1, k2, 2 * k2 + 1)
        if d1 == "down" and t1 > t2:
            return TwoRayResult(1, k2, 2 * k2 + 1)
        if d1 == "down" and t1 <= t2:
            return TwoRayResult(2, k2, 2 * k2)
        if d1 == "left" and t1 <= t2 and k1 == k2:
            return TwoRayResult(7, k2, 2 * k2)
    else:
        if d1 == "left" and t1 < t2:
            return TwoRayResult(3, k1, 2 * k1)
        if d1 == "down" and t1 <= t2 and k1 == k2 + 1:
            return TwoRayResult(4, k1, 2 * k1)
        if d1 == "left" and t1 >= t2:
            return TwoRayResult(5, k1, 2 * k1 - 1)
        if d1 == "down" and t1 >= t2 and k1 == k2:
            return TwoRayResult(6, k1, 2 * k1 + 1)
    raise AssertionError(
        f"unclassifiable ray data {parts}: {(d1, t1, k1)} vs {(d2, t2, k2)}"
    )


# ---------------------------------------------------------------------------
# distributions


def _class_function(rs: RootSystem, method: str):
    family = rs.lie_type.family
    n = rs.lie_type.rank

    if method == "oracle":
        return lambda mask: nilpotence_oracle(rs, mask)
    if method in ("filling", "recursion", "zigzag"):
        if family != "A":
            raise ValueError(f"method {method!r} requires type A")
        if method == "filling":
            return lambda mask: (
                staircase_filling(ideal_partition_a(rs, mask), n)[0][0] if mask else 0
            )
        if method == "recursion":
            return lambda mask: nilpotence_from_partition(ideal_partition_a(rs, mask), n)
        return lambda mask: zigzag_class(ideal_partition_a(rs, mask), n)
    if method == "completion":
        if family not in "BCD":
            raise ValueError("method 'completion' requires type B, C or D")
        return lambda mask: nilpotence_via_completion(rs, mask)
    if method == "ray":
        if family != "C":
            raise ValueError("method 'ray' requires type C")
        return lambda mask: single_ray_class(ideal_to_shifted(rs, mask)[0], n)
    if method == "tworay":
        if family not in "BD":
            raise ValueError("method 'tworay' requires type B or D")
        return lambda mask: two_ray_classify(
            ideal_to_shifted(rs, mask)[0], n, family
        ).nilpotence
    raise ValueError(f"unknown method {method!r}")


def classify_ideal(rs: RootSystem, ideal: IdealSet | int, method: str = "oracle") -> int:
    """Class of nilpotence of a single ideal by the chosen algorithm."""
    return _class_function(rs, method)(_as_mask(ideal))


_WORKER_STATE: tuple[RootSystem, str] | None = None


def _worker_init(label: str, method: str) -> None:
    global _WORKER_STATE
    _WORKER_STATE = (build_root_system(label), method)


def _worker_run(seed: tuple[int, int, int]) -> Counter:
    rs, method = _WORKER_STATE
    return _seed_histogram(rs, method, seed)


def _seed_histogram(rs: RootSystem, method: str, seed: tuple[int, int, int]) -> Counter:
    classify = _class_function(rs, method)
    hist: Counter = Counter()
    filters = rs.filter_masks
    comparable = rs.comparable_masks
    size = len(filters)
    stack = [seed]
    while stack:
        start, ideal, blocked = stack.pop()
        hist[classify(ideal)] += 1
        for i in range(start, size):
            if not (blocked >> i) & 1:
                stack.append((i + 1, ideal | filters[i], blocked | comparable[i]))
    return hist


def resolve_workers(requested: int | None) -> int:
    """Worker count: explicit request, then the environment, then all cores."""
    if requested is not None:
        return max(1, requested)
    env = os.environ.get(WORKER_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def class_distribution(
    rs: RootSystem,
    method: str = "oracle",
    workers: int | None = None,
    budget: float | None = None,
    progress=None,
) -> dict[int, int]:
    """Histogram {class: count} over every ideal of the root system.

    The antichain search is split into independent subtrees (seeds) so it
    can fan out across processes; results merge by addition, so the
    histogram is deterministic for any worker count.  `budget` caps wall
    time in seconds; `progress` is called with (done, total) seed counts.
    """
    nworkers = resolve_workers(workers)
    depth = min(rs.lie_type.rank, 8) if nworkers > 1 or len(rs) >= 100 else 0
    seeds = partition_seeds(rs, depth)
    started = time.monotonic()
    hist: Counter = Counter()
    done = 0

    def check_budget() -> None:
        if budget is not None and time.monotonic() - started > budget:
            raise TimeoutError(f"class distribution exceeded budget of {budget}s")

    if nworkers > 1 and len(seeds) > 1:
        label = str(rs.lie_type)
        with Pool(nworkers, initializer=_worker_init, initargs=(label, method)) as pool:
            for part in pool.imap_unordered(_worker_run, seeds):
                hist.update(part)
                done += 1
                check_budget()
                if progress:
                    progress(done, len(seeds))
    else:
        for seed in seeds:
            hist.update(_seed_histogram(rs, method, seed))
            done += 1
            check_budget()
            if progress:
                progress(done, len(seeds))
    return dict(sorted(hist.items()))


def joint_histogram(rs: RootSystem, method: str = "oracle") -> dict[tuple[int, int], int]:
    """Histogram {(dimension, class): count} over every ideal."""
    classify = _class_function(rs, method)
    hist: Counter = Counter()
    for mask in enumerate_ideal_masks(rs):
        hist[(mask.bit_count(), classify(mask))] += 1
    return dict(hist)
