"""Hyperplane nets: generating matrices and point generation.

The net of a generating vector alpha = (alpha_1..alpha_s) modulo f with
deg f = m consists of the q^m points whose coordinate digits are produced
by the matrices C_i = (Psi(alpha_i) B_i)^T, where Psi embeds the residue
ring GF(q)[x]/(f) into m x m matrices via the companion matrix of f and
B_i is the basis-change matrix of the chosen ordered basis into the
canonical basis 1, x, ..., x^(m-1).

Quality guarantee: with degree-graded bases (deg b_j = j-1; the canonical
basis in particular) coordinate expansions preserve NRT weights, so the
net attains t = m - rho(alpha) and strict t is invariant under the basis
choice.  Ungraded bases change the dual space and with it strict t; the
duality identity strict_t = m - delta(dual) + 1 still holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .fields import Field
from .points import PointSet
from .poly import Poly


class OrderedBasis:
    """An ordered basis of GF(q)[x]/(f) given by m polynomials of degree < m."""

    def __init__(self, field: Field, m: int, elems: Sequence[Poly]):
        if len(elems) != m:
            raise ValueError(f"expected {m} basis polynomials, got {len(elems)}")
        self.field = field
        self.m = m
        self.elems = tuple(elems)
        # Columns carry the canonical coordinates of the basis polynomials.
        self.matrix = linalg.transpose(tuple(b.padded(m) for b in elems))
        self.inverse = linalg.inverse(field, self.matrix)  # raises if dependent

    @classmethod
    def canonical(cls, field: Field, m: int) -> "OrderedBasis":
        return cls(field, m, tuple(Poly.x_pow(field, j) for j in range(m)))

    @property
    def is_canonical(self) -> bool:
        return self.matrix == linalg.identity(self.m)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OrderedBasis)
            and self.field.q == other.field.q
            and self.elems == other.elems
        )

    def __repr__(self) -> str:
        return f"OrderedBasis({self.field!r}, {self.m}, {list(map(str, self.elems))})"


def theta_encode(
    ks: Sequence[Poly], bases: Sequence[OrderedBasis]
) -> tuple[int, ...]:
    """Coordinates of (k_1..k_s) w.r.t. the per-coordinate ordered bases."""
    out: list[int] = []
    for k, basis in zip(ks, bases, strict=True):
        canon = k.padded(basis.m)
        out.extend(linalg.mat_vec(basis.field, basis.inverse, canon))
    return tuple(out)


def theta_decode(
    vec: Sequence[int], bases: Sequence[OrderedBasis]
) -> tuple[Poly, ...]:
    ks = []
    pos = 0
    for basis in bases:
        chunk = tuple(vec[pos : pos + basis.m])
        pos += basis.m
        ks.append(Poly(basis.field, linalg.mat_vec(basis.field, basis.matrix, chunk)))
    if pos != len(vec):
        raise ValueError("vector length does not match the bases")
    return tuple(ks)


def companion_psi(g: Poly, f: Poly) -> linalg.Matrix:
    """Image of g under the companion-matrix embedding of GF(q)[x]/(f).

    ``g`` must already be reduced (deg g < deg f).  For f = x^m the result
    is filled directly as the lower-triangular Toeplitz matrix of the
    coefficients of g; otherwise Psi(g) is evaluated by a Horner scheme in
    the companion matrix of (monic-normalized) f.
    """
    F = f.field
    m = f.deg
    if m < 1:
        raise ValueError("modulus must have degree >= 1")
    if g.field is not F:
        raise ValueError("g and f live in different fields")
    if g.deg >= m:
        raise ValueError("g must be reduced modulo f before embedding")
    if f.coeffs == (0,) * m + (f.coeffs[-1],):
        # x^m times a unit: column j of Psi(g) is g shifted down by j.
        return tuple(
            tuple(g.coeff(r - c) if r >= c else 0 for c in range(m))
            for r in range(m)
        )
    monic = f.scaled(F.inv(f.coeffs[-1]))
    psi_x = tuple(
        tuple(
            F.neg(monic.coeff(r)) if c == m - 1 else (1 if r == c + 1 else 0)
            for c in range(m)
        )
        for r in range(m)
    )
    acc = linalg.zeros(m, m)
    for coeff in reversed(g.padded(m)):
        acc = linalg.mat_mul(F, acc, psi_x)
        if coeff:
            acc = tuple(
                tuple(F.add(x, coeff) if r == c else x for c, x in enumerate(row))
                for r, row in enumerate(acc)
            )
    return acc


def toeplitz_psi_prefix(field: Field, coeffs: Sequence[int], m: int) -> linalg.Matrix:
    """m x m prefix of the infinite lower-triangular Toeplitz matrix of a series."""
    if len(coeffs) < m:
        raise ValueError("series prefix shorter than the requested matrix size")
    return tuple(
        tuple(coeffs[r - c] if r >= c else 0 for c in range(m)) for r in range(m)
    )


@dataclass(frozen=True)
class NetSpec:
    """A hyperplane net: modulus f of degree m, generating vector, bases."""

    field: Field
    s: int
    m: int
    f: Poly
    alphas: tuple[Poly, ...]
    bases: tuple[OrderedBasis, ...] | None = None

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("hyperplane nets need at least two coordinates")
        if len(self.alphas) != self.s:
            raise ValueError("alpha count does not match s")
        if self.f.deg != self.m:
            raise ValueError("modulus degree must equal m")
        if all(a.mod(self.f).is_zero for a in self.alphas):
            raise ValueError("alpha must be nonzero modulo f")
        if self.bases is not None and len(self.bases) != self.s:
            raise ValueError("basis count does not match s")

    def resolved_bases(self) -> tuple[OrderedBasis, ...]:
        if self.bases is not None:
            return self.bases
        return tuple(
            OrderedBasis.canonical(self.field, self.m) for _ in range(self.s)
        )


@dataclass(frozen=True)
class GeneratorFamily:
    """Per-coordinate generating matrices of a digital construction."""

    field: Field
    matrices: tuple[linalg.Matrix, ...]

    @property
    def s(self) -> int:
        return len(self.matrices)

    @property
    def size(self) -> int:
        return len(self.matrices[0])

    def overall(self) -> linalg.Matrix:
        """The stacked block matrix (C_1^T | ... | C_s^T)."""
        return linalg.hstack([linalg.transpose(c) for c in self.matrices])


def net_generator_matrices(spec: NetSpec) -> GeneratorFamily:
    """Generating matrices C_i = (Psi(alpha_i) B_i)^T of the hyperplane net."""
    mats = []
    for alpha, basis in zip(spec.alphas, spec.resolved_bases()):
        psi = companion_psi(alpha.mod(spec.f), spec.f)
        mats.append(
            linalg.transpose(linalg.mat_mul(spec.field, psi, basis.matrix))
        )
    return GeneratorFamily(spec.field, tuple(mats))


def generate_net_points(gens: GeneratorFamily) -> PointSet:
    """All q^m points, in the order k = 0, 1, ..., q^m - 1.

    The digit vector of k (least significant digit first) is multiplied by
    each C_i; row j of the product is digit j of coordinate i, i.e. the
    coefficient of q^(-j-1).
    """
    F = gens.field
    m = gens.size
    pts = []
    for k in range(F.q**m):
        kvec = []
        n = k
        for _ in range(m):
            kvec.append(n % F.q)
            n //= F.q
        pts.append(
            tuple(linalg.mat_vec(F, c, kvec) for c in gens.matrices)
        )
    return PointSet(F.q, gens.s, m, tuple(pts))
