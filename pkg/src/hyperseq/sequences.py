"""Hyperplane sequences: prefixes, quality function and related checks.

A hyperplane sequence is driven by a vector of power series with nonzero
constant term (stored as finite prefixes) together with a compatible chain
of ordered bases: the basis polynomial for column j has degree < j, so the
basis-change matrices of successive sizes are nested upper-triangular
prefixes of one infinite matrix.  The first q^m points of the sequence,
truncated to m digits, form the hyperplane net of the degree-m truncation
of the series vector modulo x^m; the quality function is
T(m) = m - rho(alpha mod x^m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Sequence

from . import linalg
from .duality import MeritReport, dual_kernel_matrix, figure_of_merit
from .errors import CapacityError, PrecisionError
from .fields import Field, field as get_field
from .nets import GeneratorFamily, toeplitz_psi_prefix
from .points import PointSet
from .poly import Poly, SeriesPrefix


class BasisChain:
    """A compatible chain of basis polynomials b_1, b_2, ... (deg b_j < j).

    Column j of every basis-change prefix holds the coefficients of b_j;
    the leading (degree j-1) coefficient must be nonzero so the prefixes
    are upper triangular with nonzero diagonal and nested.
    """

    def __init__(self, field: Field, polys: Sequence[Poly]):
        self.field = field
        self.polys = tuple(polys)
        for j, b in enumerate(self.polys, start=1):
            if b.deg != j - 1:
                raise ValueError(
                    f"chain polynomial {j} must have degree exactly {j - 1}"
                )

    @classmethod
    def canonical(cls, field: Field, length: int) -> "BasisChain":
        return cls(field, tuple(Poly.x_pow(field, j) for j in range(length)))

    @property
    def length(self) -> int:
        return len(self.polys)

    @property
    def is_canonical(self) -> bool:
        return all(
            b.coeffs == (0,) * j + (1,) for j, b in enumerate(self.polys)
        )

    def matrix(self, m: int) -> linalg.Matrix:
        """The m x m upper-triangular basis-change prefix."""
        if m > self.length:
            raise PrecisionError(
                f"chain of length {self.length} cannot produce a {m}x{m} prefix"
            )
        return linalg.transpose(tuple(b.padded(m) for b in self.polys[:m]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BasisChain)
            and self.field.q == other.field.q
            and self.polys == other.polys
        )


@dataclass(frozen=True)
class SeqSpec:
    """A hyperplane sequence at finite precision M."""

    field: Field
    s: int
    alphas: tuple[SeriesPrefix, ...]
    chains: tuple[BasisChain, ...] | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("at least one coordinate is required")
        if len(self.alphas) != self.s:
            raise ValueError("alpha count does not match s")
        precisions = {a.precision for a in self.alphas}
        if len(precisions) != 1:
            raise ValueError("all series prefixes must share one precision")
        for a in self.alphas:
            if not a.in_y:
                raise ValueError(
                    "series must have nonzero constant term (unit condition)"
                )
        if self.chains is not None:
            if len(self.chains) != self.s:
                raise ValueError("chain count does not match s")
            for c in self.chains:
                if c.length < self.precision:
                    raise ValueError("basis chain shorter than the precision")

    @property
    def precision(self) -> int:
        return self.alphas[0].precision

    def resolved_chains(self) -> tuple[BasisChain, ...]:
        if self.chains is not None:
            return self.chains
        return tuple(
            BasisChain.canonical(self.field, self.precision) for _ in range(self.s)
        )

    def truncated_alphas(self, m: int) -> tuple[Poly, ...]:
        return tuple(a.truncate_poly(m) for a in self.alphas)


def seq_generator_prefix(spec: SeqSpec, m: int) -> GeneratorFamily:
    """The m x m generating-matrix prefixes C_i = (Psi(alpha_i) B_i)^T."""
    if m > spec.precision:
        raise PrecisionError(
            f"prefix size {m} exceeds stored precision {spec.precision}"
        )
    mats = []
    for alpha, chain in zip(spec.alphas, spec.resolved_chains()):
        psi = toeplitz_psi_prefix(spec.field, alpha.coeffs, m)
        mats.append(linalg.transpose(linalg.mat_mul(spec.field, psi, chain.matrix(m))))
    return GeneratorFamily(spec.field, tuple(mats))


def generate_sequence_points(
    spec: SeqSpec, k_from: int, k_to: int, render_precision: int | None = None
) -> PointSet:
    """Points k_from..k_to, each stored with ``render_precision`` digits.

    Requires k_to < q^M: every index must be expressible in the M digits
    the stored series prefixes can drive.  Digits are produced from the
    full M x M generator prefixes, which is sound for any basis chain.
    """
    F = spec.field
    M = spec.precision
    render = M if render_precision is None else render_precision
    if render > M:
        raise PrecisionError(f"render precision {render} exceeds precision {M}")
    if k_from < 0 or k_to < k_from:
        raise ValueError("bad index range")
    if k_to >= F.q**M:
        raise CapacityError(
            f"index {k_to} needs more than {M} digits; extend the stored prefixes"
        )
    gens = seq_generator_prefix(spec, M)
    rows = [c[:render] for c in gens.matrices]
    pts = []
    for k in range(k_from, k_to + 1):
        kvec = []
        n = k
        for _ in range(M):
            kvec.append(n % F.q)
            n //= F.q
        pts.append(tuple(linalg.mat_vec(F, rowblock, kvec) for rowblock in rows))
    return PointSet(F.q, spec.s, render, tuple(pts))


@dataclass(frozen=True)
class QualityProfile:
    """The quality function T(1..m_max) of a sequence, with merit witnesses."""

    values: tuple[int, ...]
    merits: tuple[MeritReport, ...]

    def T(self, m: int) -> int:
        return self.values[m - 1]

    @property
    def m_max(self) -> int:
        return len(self.values)


def quality_function_T(spec: SeqSpec, m_max: int) -> QualityProfile:
    """T(m) = m - rho(alpha mod x^m) for m = 1..m_max."""
    values = []
    merits = []
    for m in range(1, m_max + 1):
        report = figure_of_merit(
            spec.truncated_alphas(m), Poly.x_pow(spec.field, m)
        )
        values.append(report.t)
        merits.append(report)
    return QualityProfile(tuple(values), tuple(merits))


@dataclass(frozen=True)
class UdCertificate:
    """Outcome of the linear-dependence search behind the u.d. test.

    ``dependent`` means the witness polynomials p_i satisfy
    sum_i p_i alpha_i = 0 modulo x^M — an exact statement about the stored
    prefixes, which caps rho(alpha mod x^m) at s - 1 + sum(deg p_i) for all
    max(deg p_i) < m <= M.  Otherwise the report only claims independence
    up to the searched degree bound.
    """

    dependent: bool
    degree_bound: int
    precision: int
    witness: tuple[Poly, ...] | None = None

    @property
    def rho_cap(self) -> int | None:
        if not self.dependent or self.witness is None:
            return None
        s = len(self.witness)
        return s - 1 + sum(p.deg for p in self.witness)  # deg(0) = -1


def ud_certificate(spec: SeqSpec, degree_bound: int) -> UdCertificate:
    """Search for polynomials p_i, deg <= bound, with sum p_i alpha_i = 0 mod x^M.

    The search is a kernel computation: unknowns are the s*(bound+1)
    coefficients, constraints the M prefix coefficients of the sum.  The
    bound must satisfy s*(bound+1) <= M, otherwise spurious solutions are
    guaranteed by dimension count and the answer would say nothing.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    F = spec.field
    M = spec.precision
    s = spec.s
    width = degree_bound + 1
    if s * width > M:
        raise PrecisionError(
            f"degree bound {degree_bound} too large for precision {M}: "
            f"need s*(bound+1) <= M"
        )
    # Row r: coefficient of x^r in sum_i p_i * alpha_i, for r = 0..M-1.
    matrix = []
    for r in range(M):
        row = []
        for i in range(s):
            for j in range(width):
                row.append(spec.alphas[i].coeffs[r - j] if r >= j else 0)
        matrix.append(tuple(row))
    kernel = linalg.kernel_basis(F, tuple(matrix))
    if not kernel:
        return UdCertificate(False, degree_bound, M)
    vec = kernel[0]
    witness = tuple(
        Poly(F, vec[i * width : (i + 1) * width]) for i in range(s)
    )
    return UdCertificate(True, degree_bound, M, witness)


def chain_projection_matrix(alphas_next: Sequence[Poly], m: int) -> linalg.Matrix:
    """(m+1) x s*m matrix whose kernel is the zero-padded projected dual space.

    ``alphas_next`` are the degree-(m+1) truncations; row j (j = 0..m) is
    coefficient j of sum_i alpha_i k_i for k_i of degree < m, i.e. the
    convolution entry alpha_{i, j-l} in column (i-1)*m + l.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    cols = []
    for a in alphas_next:
        if a.deg > m:
            raise ValueError("alpha truncation degree exceeds m")
        for l in range(m):
            cols.append(tuple(a.coeff(j - l) if j >= l else 0 for j in range(m + 1)))
    return linalg.transpose(cols)


@dataclass(frozen=True)
class DualChainReport:
    """Nesting data of the dual spaces at consecutive precisions."""

    m: int
    contained: bool
    dim_net: int
    dim_projected: int

    @property
    def codim(self) -> int:
        return self.dim_net - self.dim_projected

    @property
    def passed(self) -> bool:
        return self.contained and 0 <= self.codim <= 1


def dual_chain_report(spec: SeqSpec, m: int) -> DualChainReport:
    """Check N_(m+1,m) <= N_m with codimension at most 1 (canonical bases).

    N_m is the kernel of the coefficient matrix of alpha mod x^m; the
    projected space N_(m+1,m) is cut out by one extra coefficient row built
    from alpha mod x^(m+1).
    """
    F = spec.field
    truncs_m = spec.truncated_alphas(m)
    truncs_next = spec.truncated_alphas(m + 1)
    net_matrix = dual_kernel_matrix(truncs_m, Poly.x_pow(F, m))
    proj_matrix = chain_projection_matrix(truncs_next, m)
    net_kernel = linalg.kernel_basis(F, net_matrix)
    proj_kernel = linalg.kernel_basis(F, proj_matrix)
    contained = all(
        not any(linalg.mat_vec(F, net_matrix, v)) for v in proj_kernel
    )
    return DualChainReport(
        m=m,
        contained=contained,
        dim_net=len(net_kernel),
        dim_projected=len(proj_kernel),
    )


# -- spec files -----------------------------------------------------------------


def parse_seq_spec(stream: IO[str]) -> SeqSpec:
    """Read the line-oriented sequence description format.

    Required keys: ``q=``, ``s=``, ``M=`` and one ``alpha_i=<comma digits>``
    per coordinate with exactly M digits.  Optional ``chain_i=<poly;poly;...>``
    lines override the canonical basis chain of coordinate i.
    """
    entries: dict[str, str] = {}
    for raw in stream:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad spec line: {line!r}")
        key, val = line.split("=", 1)
        entries[key.strip()] = val.strip()
    try:
        q = int(entries.pop("q"))
        s = int(entries.pop("s"))
        M = int(entries.pop("M"))
    except KeyError as exc:
        raise ValueError(f"spec file is missing {exc.args[0]}=") from None
    F = get_field(q)
    alphas = []
    for i in range(1, s + 1):
        key = f"alpha_{i}"
        if key not in entries:
            raise ValueError(f"spec file is missing {key}=")
        alphas.append(SeriesPrefix.parse(F, entries.pop(key), precision=M))
    chains: list[BasisChain] | None = None
    chain_keys = [k for k in entries if k.startswith("chain_")]
    if chain_keys:
        chains = [BasisChain.canonical(F, M) for _ in range(s)]
        for key in chain_keys:
            i = int(key.split("_", 1)[1])
            if not 1 <= i <= s:
                raise ValueError(f"chain index out of range: {key}")
            polys = [Poly.parse(F, tok) for tok in entries.pop(key).split(";")]
            chains[i - 1] = BasisChain(F, polys)
    if entries:
        raise ValueError(f"unrecognized spec keys: {sorted(entries)}")
    return SeqSpec(F, s, tuple(alphas), tuple(chains) if chains else None)


def write_seq_spec(spec: SeqSpec, stream: IO[str]) -> None:
    stream.write(f"q={spec.field.q}\n")
    stream.write(f"s={spec.s}\n")
    stream.write(f"M={spec.precision}\n")
    for i, a in enumerate(spec.alphas, start=1):
        stream.write(f"alpha_{i}={a.digits_str()}\n")
    if spec.chains is not None:
        for i, chain in enumerate(spec.chains, start=1):
            if not chain.is_canonical:
                polys = ";".join(b.digits_str() for b in chain.polys)
                stream.write(f"chain_{i}={polys}\n")
