"""Empirical verification: net property, strict t, sequence blocks, discrepancy.

Everything here works on stored digit expansions and exact rationals; no
floats enter any decision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapacityError
from .points import PointSet, digits_to_int
from .sequences import SeqSpec, generate_sequence_points

#: Guard for corner-grid sizes in the exact discrepancy engine.
DISCREPANCY_CAP = 1 << 22


@dataclass(frozen=True)
class NetCheckReport:
    """Outcome of the elementary-interval test at one quality level t."""

    passed: bool
    t_tested: int
    failing_shape: tuple[int, ...] | None = None
    failing_box: tuple[int, ...] | None = None
    observed: int | None = None

    def lines(self) -> list[str]:
        out = [f"RESULT {'pass' if self.passed else 'fail'}",
               f"T_TESTED {self.t_tested}"]
        if self.failing_shape is not None:
            out.append("FAIL_SHAPE " + ",".join(str(d) for d in self.failing_shape))
        if self.failing_box is not None:
            out.append("FAIL_BOX " + ",".join(str(a) for a in self.failing_box))
        if self.observed is not None:
            out.append(f"OBSERVED {self.observed}")
        return out


def _shapes(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _shapes(total - first, parts - 1):
            yield (first,) + rest


def check_tms_net(points: PointSet, m: int, t: int) -> NetCheckReport:
    """Test the digital net property at quality t on q^m stored points.

    Every elementary box of volume q^(t-m) — shape (d_1..d_s) with
    sum d_i = m - t, box index a_i in 0..q^(d_i)-1 — must contain exactly
    q^t of the points.  Counting buckets points by their digit prefixes,
    one dictionary pass per shape.
    """
    q = points.q
    if not 0 <= t <= m:
        raise ValueError(f"t must be in 0..{m}")
    if m > points.precision:
        raise ValueError(
            f"m = {m} exceeds the stored digit precision {points.precision}"
        )
    if len(points) != q**m:
        raise ValueError(f"expected q^m = {q ** m} points, got {len(points)}")
    expected = q**t
    for shape in _shapes(m - t, points.s):
        buckets: dict[tuple, int] = {}
        for pt in points.points:
            key = tuple(coord[: shape[i]] for i, coord in enumerate(pt))
            buckets[key] = buckets.get(key, 0) + 1
        bad = _first_bad_box(q, shape, buckets, expected)
        if bad is not None:
            box, observed = bad
            return NetCheckReport(False, t, shape, box, observed)
    return NetCheckReport(True, t)


def _first_bad_box(
    q: int,
    shape: tuple[int, ...],
    buckets: dict[tuple, int],
    expected: int,
) -> tuple[tuple[int, ...], int] | None:
    total_boxes = q ** sum(shape)
    if len(buckets) == total_boxes and all(
        v == expected for v in buckets.values()
    ):
        return None
    # Walk boxes in lexicographic index order so reports are deterministic.
    for key in itertools.product(
        *(itertools.product(range(q), repeat=d) for d in shape)
    ):
        observed = buckets.get(key, 0)
        if observed != expected:
            box = tuple(digits_to_int(q, coord) for coord in key)
            return box, observed
    return None


def strict_t(points: PointSet, m: int) -> int:
    """The smallest t at which the net property holds (monotone in t)."""
    for t in range(m + 1):
        if check_tms_net(points, m, t).passed:
            return t
    raise AssertionError("the net property always holds at t = m")


@dataclass(frozen=True)
class BlockFailure:
    m: int
    k: int
    report: NetCheckReport


@dataclass(frozen=True)
class SequenceCheckReport:
    """Blockwise verification of a quality profile."""

    passed: bool
    m_max: int
    k_max: int
    profile: tuple[int, ...]
    failure: BlockFailure | None = None


def check_T_sequence(
    spec: SeqSpec, profile: Sequence[int], m_max: int, k_max: int
) -> SequenceCheckReport:
    """Check blocks k*q^m .. (k+1)*q^m - 1 against the given T profile.

    For every m <= m_max and block index k <= k_max the truncated block
    must be a digital net at quality t = profile[m-1].  Stops and reports
    the first failing block.
    """
    if len(profile) < m_max:
        raise ValueError("profile shorter than m_max")
    q = spec.field.q
    if (k_max + 1) * q**m_max > q**spec.precision:
        raise CapacityError(
            "index range needs more digits than the stored precision provides"
        )
    for m in range(1, m_max + 1):
        for k in range(k_max + 1):
            block = generate_sequence_points(
                spec, k * q**m, (k + 1) * q**m - 1, render_precision=m
            )
            report = check_tms_net(block, m, profile[m - 1])
            if not report.passed:
                return SequenceCheckReport(
                    False, m_max, k_max, tuple(profile[:m_max]),
                    BlockFailure(m, k, report),
                )
    return SequenceCheckReport(True, m_max, k_max, tuple(profile[:m_max]))


# -- star discrepancy ------------------------------------------------------------


@dataclass(frozen=True)
class DiscrepancyReport:
    value: Fraction
    corner: tuple[Fraction, ...]

    def lines(self) -> list[str]:
        corner = ",".join(str(c) for c in self.corner)
        return [
            f"DSTAR {self.value.numerator}/{self.value.denominator}",
            f"CORNER {corner}",
        ]


def star_discrepancy_exact(points: PointSet) -> DiscrepancyReport:
    """Exact star discrepancy of the stored points.

    The supremum of |A([0,a))/N - vol| over anchored half-open boxes is
    attained against the finite grid built from the distinct coordinate
    values and 1: while a_j moves between consecutive coordinate values the
    count A([0,a)) is constant and the volume grows, so signed deviations
    are extremal at grid values, and the volume-side extremum at a corner
    is approached from below, which turns the open count into the closed
    count there.  It therefore suffices to take, at every grid corner, the
    larger of (vol - open/N) and (closed/N - vol).

    Counting uses one rank table per axis and an s-dimensional prefix-sum
    cube; the plain corners-times-points loop lives in
    :func:`star_discrepancy_oracle` as an independent cross-check.
    """
    n = len(points)
    values = points.fractions()
    s = points.s
    if n == 0:
        raise ValueError("discrepancy of an empty point set")
    axes: list[list[Fraction]] = []
    for j in range(s):
        grid = sorted({v[j] for v in values} | {Fraction(1)})
        axes.append(grid)
    sizes = [len(g) for g in axes]
    cells = 1
    for size in sizes:
        cells *= size
    if cells > DISCREPANCY_CAP:
        raise CapacityError(
            f"corner grid of {cells} cells exceeds the cap {DISCREPANCY_CAP}; "
            "use the lower-bound mode on a coarser grid"
        )
    ranks = [
        {v: i for i, v in enumerate(grid)} for grid in axes
    ]
    counts = _Cube(sizes)
    for v in values:
        counts.add(tuple(ranks[j][v[j]] for j in range(s)), 1)
    prefix = counts.prefix_sums()

    best: tuple[Fraction, tuple[Fraction, ...]] | None = None
    for idx in itertools.product(*(range(size) for size in sizes)):
        vol = Fraction(1)
        for j, i in enumerate(idx):
            vol *= axes[j][i]
        closed = prefix.get(idx)
        open_count = prefix.get(tuple(i - 1 for i in idx))
        dev = max(vol - Fraction(open_count, n), Fraction(closed, n) - vol)
        if best is None or dev > best[0]:
            best = (dev, tuple(axes[j][i] for j, i in enumerate(idx)))
    assert best is not None
    return DiscrepancyReport(best[0], best[1])


class _Cube:
    """A tiny dense s-dimensional integer array with prefix sums."""

    def __init__(self, sizes: Sequence[int]):
        self.sizes = tuple(sizes)
        total = 1
        for size in sizes:
            total *= size
        self.data = [0] * total

    def _offset(self, idx: Sequence[int]) -> int:
        off = 0
        for size, i in zip(self.sizes, idx):
            off = off * size + i
        return off

    def add(self, idx: Sequence[int], value: int) -> None:
        self.data[self._offset(idx)] += value

    def prefix_sums(self) -> "_Cube":
        out = _Cube(self.sizes)
        out.data = list(self.data)
        stride_block = 1
        for axis in reversed(range(len(self.sizes))):
            size = self.sizes[axis]
            outer = len(out.data) // (size * stride_block)
            for o in range(outer):
                base = o * size * stride_block
                for i in range(1, size):
                    for r in range(stride_block):
                        out.data[base + i * stride_block + r] += out.data[
                            base + (i - 1) * stride_block + r
                        ]
            stride_block *= size
        return out

    def get(self, idx: Sequence[int]) -> int:
        if any(i < 0 for i in idx):
            return 0
        return self.data[self._offset(idx)]


def star_discrepancy_oracle(points: PointSet) -> Fraction:
    """Reference implementation: plain double loop over grid corners and points."""
    n = len(points)
    values = points.fractions()
    s = points.s
    axes = [sorted({v[j] for v in values} | {Fraction(1)}) for j in range(s)]
    best = Fraction(0)
    for corner in itertools.product(*axes):
        vol = Fraction(1)
        for a in corner:
            vol *= a
        open_count = sum(
            1 for v in values if all(x < a for x, a in zip(v, corner))
        )
        closed_count = sum(
            1 for v in values if all(x <= a for x, a in zip(v, corner))
        )
        best = max(
            best, vol - Fraction(open_count, n), Fraction(closed_count, n) - vol
        )
    return best


def star_discrepancy_lower_bound(points: PointSet, grid: int) -> Fraction:
    """Max deviation over the uniform grid {i/grid}: a certified lower bound."""
    if grid < 1:
        raise ValueError("grid must be >= 1")
    n = len(points)
    values = points.fractions()
    s = points.s
    axis = [Fraction(i, grid) for i in range(1, grid + 1)]
    best = Fraction(0)
    for corner in itertools.product(axis, repeat=s):
        vol = Fraction(1)
        for a in corner:
            vol *= a
        open_count = sum(
            1 for v in values if all(x < a for x, a in zip(v, corner))
        )
        closed_count = sum(
            1 for v in values if all(x <= a for x, a in zip(v, corner))
        )
        best = max(
            best, vol - Fraction(open_count, n), Fraction(closed_count, n) - vol
        )
    return best
