"""Counting bounds and generating-vector search.

``delta_bound`` evaluates, in exact integer arithmetic, the count

    Delta_q(s, rho) = sum_{d=0}^{s-1} C(s,d) (q-1)^(s-d)
                      sum_{gamma=0}^{rho+d} C(s-d+gamma-1, gamma) q^gamma
                      + 1 - q^(rho+s),

an upper bound on the number of admissible generating vectors whose merit
is *defeated* at level rho.  Whenever Delta_q(s, rho) < beta q^m ((q-1)/q)^(s-1),
more than (1-beta) of the ((q-1) q^(m-1))^(s-1) admissible alpha (first
coordinate 1, all coordinates coprime to x) reach rho(alpha) >= s + rho.
``rho_threshold`` inverts this with the concrete beta-dependent floor
expression; both feed the exhaustive search report.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable

from .duality import MeritReport, figure_of_merit
from .errors import CapacityError
from .fields import Field
from .poly import Poly, SeriesPrefix
from .sequences import QualityProfile, SeqSpec, quality_function_T

#: Cap on the number of candidates an exhaustive sweep may enumerate.
SEARCH_CAP = 1 << 20


def delta_bound(q: int, s: int, rho: int) -> int:
    """Exact integer value of Delta_q(s, rho); empty inner sums vanish."""
    if s < 1 or q < 2:
        raise ValueError("need s >= 1 and q >= 2")
    if rho + s < 0:
        raise ValueError("rho must be >= -s")
    total = 0
    for d in range(s):
        inner = 0
        for gamma in range(rho + d + 1):
            inner += math.comb(s - d + gamma - 1, gamma) * q**gamma
        total += math.comb(s, d) * (q - 1) ** (s - d) * inner
    return total + 1 - q ** (rho + s)


def _floor_log_q(q: int, num: int, den: int) -> int:
    """Exact floor(log_q(num/den)) for positive integers by pure comparison."""
    if num <= 0 or den <= 0:
        raise ValueError("floor log of a nonpositive rational")
    e = 0
    if num >= den:
        while num >= den * q:
            den *= q
            e += 1
    else:
        while num < den:
            num *= q
            e -= 1
    return e


def rho_threshold(q: int, s: int, m: int, beta: Fraction) -> int:
    """floor(m + log_q(beta) - (s-1)(log_q(m) - 1) + log_q((s-1)!/q^(s-1))).

    The argument of the combined logarithm is the rational
    beta*(s-1)!/m^(s-1), so the floor is computed exactly with integer
    comparisons — no rounding ambiguity can arise.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if beta <= 0:
        raise ValueError("beta must be positive")
    beta = Fraction(beta)
    num = beta.numerator * math.factorial(s - 1)
    den = beta.denominator * m ** (s - 1)
    return m + _floor_log_q(q, num, den)


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a generating-vector search over GF(q)[x]/(x^m)."""

    field: Field
    s: int
    m: int
    beta: Fraction = Fraction(1, 2)
    rho_star: int | None = None
    mode: str = "exhaustive"
    sample_size: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.s < 2 or self.m < 1:
            raise ValueError("need s >= 2 and m >= 1")
        if not 0 < self.beta <= 1:
            raise ValueError("beta must lie in (0, 1]")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown search mode {self.mode!r}")


@dataclass(frozen=True)
class SearchReport:
    """Merit distribution over the admissible candidates, plus bound data."""

    config: SearchConfig
    total: int
    histogram: dict[int, int]
    best_alpha: tuple[Poly, ...]
    best_merit: MeritReport
    rho_star: int | None
    delta_value: int | None
    hypothesis_bound: Fraction | None
    hypothesis_met: bool | None
    count_at_threshold: int | None
    required_count: Fraction | None
    claim_holds: bool | None


def _admissible_count(q: int, m: int) -> int:
    return (q - 1) * q ** (m - 1)


def _unit_by_index(field: Field, m: int, idx: int) -> Poly:
    """The idx-th residue coprime to x, in counting order of the digits."""
    const = idx % (field.q - 1) + 1
    rest = idx // (field.q - 1)
    digits = [const]
    for _ in range(m - 1):
        digits.append(rest % field.q)
        rest //= field.q
    return Poly(field, digits)


def _candidate_by_index(field: Field, s: int, m: int, idx: int) -> tuple[Poly, ...]:
    per = _admissible_count(field.q, m)
    alphas = [Poly.one(field)]
    for _ in range(s - 1):
        alphas.append(_unit_by_index(field, m, idx % per))
        idx //= per
    return tuple(alphas)


def _merit_sweep(
    field: Field, s: int, m: int, indices: Iterable[int]
) -> tuple[dict[int, int], int | None, int | None]:
    """Histogram plus (best index, best rho) over the given candidate indices."""
    f = Poly.x_pow(field, m)
    hist: dict[int, int] = {}
    best_idx: int | None = None
    best_rho: int | None = None
    for idx in indices:
        alphas = _candidate_by_index(field, s, m, idx)
        rho = figure_of_merit(alphas, f).rho
        hist[rho] = hist.get(rho, 0) + 1
        if best_rho is None or rho > best_rho:
            best_idx, best_rho = idx, rho
    return hist, best_idx, best_rho


def _merit_sweep_args(args: tuple[int, int, int, int, int]) -> tuple[dict[int, int], int | None, int | None]:
    q, s, m, start, stop = args
    from .fields import field as get_field

    return _merit_sweep(get_field(q), s, m, range(start, stop))


def exhaustive_search(cfg: SearchConfig, jobs: int = 1) -> SearchReport:
    """Evaluate every admissible alpha (first coordinate fixed to 1).

    With ``jobs > 1`` the index space is chunked over worker processes; the
    merged result is independent of the chunking because ties are broken by
    the smallest candidate index.
    """
    F, s, m = cfg.field, cfg.s, cfg.m
    total = _admissible_count(F.q, m) ** (s - 1)
    if total > SEARCH_CAP:
        raise CapacityError(
            f"{total} candidates exceed the exhaustive-search cap {SEARCH_CAP}"
        )
    if jobs > 1 and total >= 64:
        chunk = (total + jobs - 1) // jobs
        tasks = [
            (F.q, s, m, start, min(start + chunk, total))
            for start in range(0, total, chunk)
        ]
        hist: dict[int, int] = {}
        best_idx: int | None = None
        best_rho: int | None = None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_hist, part_idx, part_rho in pool.map(_merit_sweep_args, tasks):
                for rho, count in part_hist.items():
                    hist[rho] = hist.get(rho, 0) + count
                if part_rho is not None and (
                    best_rho is None
                    or part_rho > best_rho
                    or (part_rho == best_rho and part_idx < best_idx)
                ):
                    best_idx, best_rho = part_idx, part_rho
    else:
        hist, best_idx, best_rho = _merit_sweep(F, s, m, range(total))
    assert best_idx is not None
    best_alpha = _candidate_by_index(F, s, m, best_idx)
    best_merit = figure_of_merit(best_alpha, Poly.x_pow(F, m))
    return _attach_bound_data(cfg, total, hist, best_alpha, best_merit)


def random_search(cfg: SearchConfig) -> SearchReport:
    """Evaluate ``sample_size`` candidates drawn with the seeded generator."""
    if cfg.sample_size < 1:
        raise ValueError("random mode needs sample_size >= 1")
    F, s, m = cfg.field, cfg.s, cfg.m
    per = _admissible_count(F.q, m)
    rng = Random(cfg.seed)
    f = Poly.x_pow(F, m)
    hist: dict[int, int] = {}
    best: tuple[int, int] | None = None  # (-rho, index) minimized
    for _ in range(cfg.sample_size):
        idx = 0
        for _ in range(s - 1):
            idx = idx * per + rng.randrange(per)
        rho = figure_of_merit(_candidate_by_index(F, s, m, idx), f).rho
        hist[rho] = hist.get(rho, 0) + 1
        if best is None or (-rho, idx) < best:
            best = (-rho, idx)
    assert best is not None
    best_alpha = _candidate_by_index(F, s, m, best[1])
    best_merit = figure_of_merit(best_alpha, f)
    return _attach_bound_data(cfg, cfg.sample_size, hist, best_alpha, best_merit)


def _attach_bound_data(
    cfg: SearchConfig,
    total: int,
    hist: dict[int, int],
    best_alpha: tuple[Poly, ...],
    best_merit: MeritReport,
) -> SearchReport:
    F, s, m = cfg.field, cfg.s, cfg.m
    bound = Fraction(cfg.beta) * F.q**m * Fraction(F.q - 1, F.q) ** (s - 1)
    rho_star = cfg.rho_star
    if rho_star is None:
        # Largest level at which the counting hypothesis still holds.
        candidate = None
        for rho in range(-s, m + 1):
            if delta_bound(F.q, s, rho) < bound:
                candidate = rho
        rho_star = candidate
    if rho_star is None:
        return SearchReport(
            cfg, total, hist, best_alpha, best_merit,
            None, None, bound, None, None, None, None,
        )
    delta_value = delta_bound(F.q, s, rho_star)
    hypothesis_met = delta_value < bound
    count = sum(c for rho, c in hist.items() if rho >= s + rho_star)
    admissible_total = _admissible_count(F.q, m) ** (s - 1)
    required = (1 - Fraction(cfg.beta)) * admissible_total
    claim = count > required if (hypothesis_met and cfg.mode == "exhaustive") else None
    return SearchReport(
        cfg, total, hist, best_alpha, best_merit,
        rho_star, delta_value, bound, hypothesis_met, count, required, claim,
    )


# -- greedy digitwise extension ----------------------------------------------------


@dataclass(frozen=True)
class ExtendReport:
    """Result of the digit-by-digit greedy construction."""

    spec: SeqSpec
    profile: QualityProfile
    target: tuple[float | None, ...]


def reference_quality_curve(q: int, s: int, m_max: int) -> tuple[float | None, ...]:
    """Display-only reference curve log_q(m^(s-1)/beta_m) with beta_m = 1/(m ln^2 m).

    Defined for m >= 2 (the m = 1 entry is None).  Purely for visual
    comparison of greedy profiles; no exactness or guarantee is attached.
    """
    out: list[float | None] = []
    for m in range(1, m_max + 1):
        if m < 2:
            out.append(None)
            continue
        beta_m = 1.0 / (m * math.log(m) ** 2)
        out.append(math.log(m ** (s - 1) / beta_m) / math.log(q))
    return tuple(out)


def greedy_extend(field: Field, s: int, m_max: int) -> ExtendReport:
    """Grow (alpha_2..alpha_s) one digit per level, keeping alpha_1 = 1.

    At each level every combination of next digits is scored by the merit
    of the truncated vector; the best (ties: lexicographically smallest
    digit tuple) is kept.  The construction is deterministic, and its
    prefixes are stable: rerunning with a smaller m_max reproduces the
    leading digits.
    """
    if s < 2 or m_max < 1:
        raise ValueError("need s >= 2 and m_max >= 1")
    coeffs = [[1] for _ in range(s - 1)]  # constant terms: units, all 1
    for m in range(2, m_max + 1):
        best_digits: tuple[int, ...] | None = None
        best_rho = -1
        f = Poly.x_pow(field, m)
        for digits in _digit_tuples(field.q, s - 1):
            alphas = [Poly.one(field)]
            for row, d in zip(coeffs, digits):
                alphas.append(Poly(field, row + [d]))
            rho = figure_of_merit(tuple(alphas), f).rho
            if rho > best_rho:
                best_rho = rho
                best_digits = digits
        assert best_digits is not None
        for row, d in zip(coeffs, best_digits):
            row.append(d)
    alphas = [SeriesPrefix.from_poly(Poly.one(field), m_max)]
    alphas += [SeriesPrefix(field, row) for row in coeffs]
    spec = SeqSpec(field, s, tuple(alphas))
    profile = quality_function_T(spec, m_max)
    return ExtendReport(spec, profile, reference_quality_curve(field.q, s, m_max))


def _digit_tuples(q: int, length: int) -> Iterable[tuple[int, ...]]:
    """All digit tuples in lexicographic order."""
    if length == 0:
        yield ()
        return
    for first in range(q):
        for rest in _digit_tuples(q, length - 1):
            yield (first,) + rest
