"""Dual-space machinery: NRT weights, kernel matrices, figures of merit.

A vector in GF(q)^(s*m) is read as s blocks of m coordinates.  The weight
of a block is the position of its last nonzero coordinate (1-based; 0 for
the zero block) and the weight of the vector is the sum over blocks.  The
minimum weight over the nonzero vectors of a subspace controls the quality
parameter of the digital net whose generating matrices annihilate that
subspace: t = m - delta + 1.

The figure of merit rho of a generating vector alpha modulo f is computed
independently of that matrix route, directly over polynomials:
rho = s - 1 + min of sum(deg k_i) over nonzero solutions of
sum_i alpha_i * k_i = 0 (mod f).  For admissible alpha the two routes are
tied together by delta = rho + 1, which the test suite checks exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .errors import CapacityError
from .fields import Field
from .poly import Poly

#: Default cap on explicit span/solution enumerations.
SPAN_CAP = 1 << 20

#: Below this span size the exhaustive engine is used automatically.
AUTO_ENUMERATE_LIMIT = 4096


def block_weight(block: Sequence[int]) -> int:
    """Position of the last nonzero coordinate, 1-based; 0 for a zero block."""
    w = 0
    for j, c in enumerate(block, start=1):
        if c:
            w = j
    return w


def nrt_weight(vec: Sequence[int], m: int, s: int) -> int:
    """Blockwise sum of last-nonzero positions of an s x m coordinate vector."""
    if len(vec) != s * m:
        raise ValueError(f"vector length {len(vec)} != s*m = {s * m}")
    return sum(block_weight(vec[i * m : (i + 1) * m]) for i in range(s))


@dataclass(frozen=True)
class DualSpaceBasis:
    """A basis of a subspace of GF(q)^(s*m) in blockwise coordinates."""

    field: Field
    s: int
    m: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.s * self.m
        for v in self.vectors:
            if len(v) != n:
                raise ValueError(f"basis vector length {len(v)} != s*m = {n}")

    @property
    def dim(self) -> int:
        return len(self.vectors)


def dual_kernel_matrix(
    alphas: Sequence[Poly], f: Poly, m: int | None = None
) -> linalg.Matrix:
    """Coefficient matrix of the map k -> sum_i alpha_i * k_i mod f.

    Row j (j = 0..m-1) expresses coefficient j of the product sum in terms
    of the canonical coordinates of (k_1, ..., k_s), each k_i of degree < m;
    column (i-1)*m + l belongs to the coefficient of x^l in k_i.  The right
    kernel of the matrix is the dual space of the hyperplane net of alpha
    in canonical-basis coordinates.
    """
    if m is None:
        m = f.deg
    if f.deg != m or m < 1:
        raise ValueError("modulus degree must equal m >= 1")
    F = f.field
    cols = []
    for a in alphas:
        if a.field is not F:
            raise ValueError("alpha and modulus live in different fields")
        shifted = a.mod(f)
        for _ in range(m):
            cols.append(shifted.padded(m))
            shifted = shifted.shifted(1).mod(f)
    return linalg.transpose(cols)


def kernel_space(alphas: Sequence[Poly], f: Poly, m: int | None = None) -> DualSpaceBasis:
    """Dual space of the hyperplane net as a :class:`DualSpaceBasis`."""
    if m is None:
        m = f.deg
    mat = dual_kernel_matrix(alphas, f, m)
    return DualSpaceBasis(f.field, len(alphas), m, linalg.kernel_basis(f.field, mat))


def _compositions(total: int, parts: int, part_max: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` entries in 0..part_max summing to ``total``."""
    if parts == 1:
        if 0 <= total <= part_max:
            yield (total,)
        return
    for first in range(min(total, part_max) + 1):
        for rest in _compositions(total - first, parts - 1, part_max):
            yield (first,) + rest


def _span_min_weight(space: DualSpaceBasis, cap: int) -> tuple[int, tuple[int, ...]]:
    F, m, s = space.field, space.m, space.s
    dim = space.dim
    if F.q**dim - 1 > cap:
        raise CapacityError(
            f"span of {F.q}^{dim} vectors exceeds the enumeration cap {cap}"
        )
    best: tuple[int, tuple[int, ...]] | None = None
    for combo in itertools.product(F.elements(), repeat=dim):
        if not any(combo):
            continue
        vec = [0] * (s * m)
        for c, bvec in zip(combo, space.vectors):
            if c:
                for j, x in enumerate(bvec):
                    if x:
                        vec[j] = F.add(vec[j], F.mul(c, x))
        w = nrt_weight(vec, m, s)
        key = (w, tuple(vec))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _shape_min_weight(space: DualSpaceBasis) -> tuple[int, tuple[int, ...]]:
    # Walk weight compositions in increasing total weight.  For each shape
    # (v_1..v_s) restrict the span to vectors that vanish outside block
    # windows 1..v_i; any nonzero vector found at the first successful total
    # V has weight exactly V: a lighter one would have produced a nonzero
    # restricted span at some earlier, strictly smaller shape.
    F, m, s = space.field, space.m, space.s
    basis = space.vectors
    for total in range(1, s * m + 1):
        for shape in _compositions(total, s, m):
            banned = [
                i * m + j
                for i in range(s)
                for j in range(shape[i], m)
            ]
            if banned:
                constraint = tuple(tuple(v[c] for c in banned) for v in basis)
                combos = linalg.kernel_basis(F, linalg.transpose(constraint))
                if not combos:
                    continue
                vec = linalg.vec_mat(F, combos[0], basis)
            else:
                # the full shape bans nothing; any basis vector qualifies
                vec = basis[0]
            return total, vec
    raise AssertionError("nonzero space without a minimum weight")


def min_nrt_distance(
    space: DualSpaceBasis, engine: str = "auto", span_cap: int = SPAN_CAP
) -> int:
    """Minimum NRT weight over the nonzero vectors of ``space``.

    The trivial space has no nonzero vector; its distance is s*m + 1 by
    convention.  ``engine`` selects between explicit span enumeration
    ("enumerate"), the shape-restricted linear-algebra search ("shapes"),
    or size-based dispatch ("auto").
    """
    if space.dim == 0:
        return space.s * space.m + 1
    if engine == "auto":
        engine = (
            "enumerate"
            if space.field.q**space.dim <= AUTO_ENUMERATE_LIMIT
            else "shapes"
        )
    if engine == "enumerate":
        return _span_min_weight(space, span_cap)[0]
    if engine == "shapes":
        return _shape_min_weight(space)[0]
    raise ValueError(f"unknown engine {engine!r}")


@dataclass(frozen=True)
class MeritReport:
    """Figure of merit of a generating vector, with a minimizing witness."""

    rho: int
    t: int
    witness: tuple[Poly, ...]

    def witness_str(self) -> str:
        return "(" + "|".join(str(p) for p in self.witness) + ")"


def figure_of_merit(
    alphas: Sequence[Poly], f: Poly, m: int | None = None, cap: int = SPAN_CAP
) -> MeritReport:
    """Figure of merit rho = s - 1 + min sum(deg k_i), and t = m - rho.

    The minimum runs over nonzero tuples (k_1..k_s) of polynomials of
    degree < m with sum_i alpha_i k_i = 0 modulo f.  If some coordinate of
    alpha is invertible modulo f the solution space is enumerated directly
    over the remaining coordinates by polynomial arithmetic; otherwise it
    falls back to the canonical kernel of :func:`dual_kernel_matrix`.  The
    reported witness is the first minimizer in enumeration order.
    """
    if m is None:
        m = f.deg
    if f.deg != m or m < 1:
        raise ValueError("modulus degree must equal m >= 1")
    s = len(alphas)
    if s < 2:
        raise ValueError("at least two coordinates are required")
    F = f.field
    reduced = [a.mod(f) for a in alphas]
    if all(a.is_zero for a in reduced):
        raise ValueError("alpha must be nonzero modulo f")

    unit_idx = None
    for i, a in enumerate(reduced):
        if not a.is_zero and a.gcd(f).deg == 0:
            unit_idx = i
            break

    best: tuple[int, tuple[Poly, ...]] | None = None
    if unit_idx is not None:
        neg_inv = (-reduced[unit_idx]).inverse_mod(f)
        free_idx = [i for i in range(s) if i != unit_idx]
        count = F.q ** ((s - 1) * m)
        if count > cap:
            raise CapacityError(
                f"merit enumeration of {count} candidates exceeds the cap {cap}"
            )
        for digits in _counting_tuples(F.q, (s - 1) * m):
            ks: list[Poly | None] = [None] * s
            acc = Poly.zero(F)
            for slot, i in enumerate(free_idx):
                ki = Poly(F, digits[slot * m : (slot + 1) * m])
                ks[i] = ki
                if not ki.is_zero:
                    acc = acc + reduced[i].mul_mod(ki, f)
            ks[unit_idx] = neg_inv.mul_mod(acc, f)
            witness = tuple(k for k in ks if k is not None)
            if all(k.is_zero for k in witness):
                continue
            total = sum(k.deg for k in witness)  # deg(0) = -1 by convention
            if best is None or total < best[0]:
                best = (total, witness)
    else:
        space = kernel_space(reduced, f, m)
        if F.q**space.dim - 1 > cap:
            raise CapacityError(
                f"kernel span of {F.q}^{space.dim} vectors exceeds the cap {cap}"
            )
        for combo in itertools.product(F.elements(), repeat=space.dim):
            if not any(combo):
                continue
            vec = linalg.vec_mat(F, combo, space.vectors)
            witness = tuple(
                Poly(F, vec[i * m : (i + 1) * m]) for i in range(s)
            )
            total = sum(k.deg for k in witness)
            if best is None or total < best[0]:
                best = (total, witness)

    assert best is not None, "the solution space always has nonzero elements"
    total, witness = best
    check = Poly.zero(F)
    for a, k in zip(reduced, witness):
        check = check + a.mul_mod(k, f)
    assert check.is_zero, "merit witness fails the defining congruence"
    rho = s - 1 + total
    return MeritReport(rho=rho, t=m - rho, witness=witness)


def _counting_tuples(q: int, length: int) -> Iterator[tuple[int, ...]]:
    """Digit tuples of 0..q^length-1, low digit first (counting order)."""
    for n in range(q**length):
        digits = []
        for _ in range(length):
            digits.append(n % q)
            n //= q
        yield tuple(digits)
