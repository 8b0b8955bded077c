"""Exact point sets in the unit cube, stored as base-q digit grids.

A point never exists as a float: coordinate i of point k is the digit
tuple (y_1, ..., y_P) meaning sum_j y_j * q^(-j).  Truncation to fewer
digits slices the stored expansion; values are materialized as
``fractions.Fraction`` only on demand (verification, rendering).

On-disk format (shared by the generation and verification commands):
a header line ``# hyperseq points q=<q> s=<s> m=<digits> render=<how>``
followed by one point per line, coordinates separated by single spaces.
``render=digits`` writes each coordinate as its digit string (most
significant digit first, e.g. "011" in base q); ``render=rational``
writes the unreduced fraction a/q^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence


@dataclass(frozen=True)
class PointSet:
    """An ordered list of s-dimensional points with fixed digit precision."""

    q: int
    s: int
    precision: int
    points: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        for pt in self.points:
            if len(pt) != self.s:
                raise ValueError("point dimension mismatch")
            for coord in pt:
                if len(coord) != self.precision:
                    raise ValueError("digit precision mismatch")

    def __len__(self) -> int:
        return len(self.points)

    def truncate(self, m: int) -> "PointSet":
        """Keep the first m digits of every stored expansion."""
        if m > self.precision:
            raise ValueError(
                f"cannot truncate to {m} digits, stored precision is {self.precision}"
            )
        return PointSet(
            self.q,
            self.s,
            m,
            tuple(tuple(coord[:m] for coord in pt) for pt in self.points),
        )

    def fractions(self) -> list[tuple[Fraction, ...]]:
        return [
            tuple(digits_to_fraction(self.q, coord) for coord in pt)
            for pt in self.points
        ]


def truncate_point(
    point: Sequence[Sequence[int]], m: int
) -> tuple[tuple[int, ...], ...]:
    """Digitwise truncation of a single point to m digits per coordinate."""
    if any(len(coord) < m for coord in point):
        raise ValueError("stored expansion shorter than the truncation order")
    return tuple(tuple(coord[:m]) for coord in point)


def digits_to_fraction(q: int, digits: Sequence[int]) -> Fraction:
    num = 0
    for d in digits:
        num = num * q + d
    return Fraction(num, q ** len(digits))


def digits_to_int(q: int, digits: Sequence[int]) -> int:
    """Digit string (most significant first) as the box index a in a/q^m."""
    num = 0
    for d in digits:
        num = num * q + d
    return num


def int_to_digits(q: int, a: int, m: int) -> tuple[int, ...]:
    digits = []
    for _ in range(m):
        digits.append(a % q)
        a //= q
    if a:
        raise ValueError("value does not fit in the requested digit count")
    return tuple(reversed(digits))


def from_fractions(
    q: int, s: int, precision: int, values: Iterable[Sequence[Fraction]]
) -> PointSet:
    """Build a point set from exact rationals with denominator q^precision."""
    pts = []
    for val in values:
        coords = []
        for x in val:
            scaled = x * q**precision
            if scaled.denominator != 1 or not 0 <= scaled.numerator < q**precision:
                raise ValueError(f"{x} is not an m-digit base-{q} value in [0,1)")
            coords.append(int_to_digits(q, scaled.numerator, precision))
        pts.append(tuple(coords))
    return PointSet(q, s, precision, tuple(pts))


# -- text format ---------------------------------------------------------------


def render_coordinate(
    q: int, digits: Sequence[int], render: str, decimals: int | None = None
) -> str:
    if render == "digits":
        return "".join(str(d) for d in digits)
    if render == "rational":
        return f"{digits_to_int(q, digits)}/{q ** len(digits)}"
    if render == "decimal":
        k = 6 if decimals is None else decimals
        value = digits_to_fraction(q, digits)
        scaled = value * 10**k
        whole = scaled.numerator // scaled.denominator
        return f"0.{whole:0{k}d}" if k else str(whole)
    raise ValueError(f"unknown render mode {render!r}")


def write_points(
    ps: PointSet, stream: IO[str], render: str = "digits", decimals: int | None = None
) -> None:
    stream.write(
        f"# hyperseq points q={ps.q} s={ps.s} m={ps.precision} render={render}\n"
    )
    for pt in ps.points:
        stream.write(
            " ".join(render_coordinate(ps.q, c, render, decimals) for c in pt) + "\n"
        )


def parse_points(stream: IO[str]) -> PointSet:
    """Read a point file as written by :func:`write_points`.

    Only the exact renders round-trip; decimal files are display-only and
    rejected here.
    """
    header: dict[str, str] = {}
    rows: list[tuple[tuple[int, ...], ...]] = []
    for raw in stream:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    key, val = tok.split("=", 1)
                    header.setdefault(key, val)
            continue
        rows.append(_parse_point_line(header, line))
    for key in ("q", "s", "m"):
        if key not in header:
            raise ValueError(f"point file header is missing {key}=")
    q, s, m = int(header["q"]), int(header["s"]), int(header["m"])
    return PointSet(q, s, m, tuple(rows))


def _parse_point_line(header: dict[str, str], line: str) -> tuple[tuple[int, ...], ...]:
    if not header:
        raise ValueError("point data before the header line")
    q, m = int(header["q"]), int(header["m"])
    render = header.get("render", "digits")
    coords = []
    for tok in line.split():
        if render == "digits":
            digits = tuple(int(ch) for ch in tok)
            if len(digits) != m or any(not 0 <= d < q for d in digits):
                raise ValueError(f"bad digit coordinate {tok!r}")
        elif render == "rational":
            num_text, den_text = tok.split("/")
            if int(den_text) != q**m:
                raise ValueError(f"coordinate {tok!r} has denominator != q^m")
            digits = int_to_digits(q, int(num_text), m)
        else:
            raise ValueError(f"render mode {render!r} cannot be parsed back")
        coords.append(digits)
    return tuple(coords)
