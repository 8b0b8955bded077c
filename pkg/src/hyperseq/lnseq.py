"""Hankel-generated digital sequences and comparison with hyperplane ones.

A Hankel family is driven per coordinate by a power series with zero
constant term, g_i = c_1 z + c_2 z^2 + ...; the m x m generating matrix has
entry (j, k) = c_(j+k-1) in 1-based indexing, so skew-diagonals are
constant.  Two structural tools connect these to the upper-triangular
hyperplane generators:

* ``rank_condition`` — the stacked one-column-wider prefixes
  (C_1^(m,m+1)T | ... | C_s^(m,m+1)T) must reach rank m + 1 while the
  square stack has rank m; this pins down the generated sequence up to a
  nonsingular upper-triangular (NUT) column transform.
* ``nut_equivalence`` — search for a single NUT matrix P with
  B_i = A_i P for all coordinates; ``None`` means the two families cannot
  generate the same sequence in the sense above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Sequence

from . import linalg
from .errors import CapacityError, PrecisionError
from .fields import Field, field as get_field
from .nets import GeneratorFamily


@dataclass(frozen=True)
class LNSpec:
    """Per-coordinate Hankel coefficient prefixes c_1..c_M (c_0 = 0 implied)."""

    field: Field
    s: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.coeffs) != self.s:
            raise ValueError("coefficient row count does not match s")
        lengths = {len(row) for row in self.coeffs}
        if len(lengths) != 1:
            raise ValueError("all coefficient prefixes must share one precision")
        for row in self.coeffs:
            for c in row:
                if not 0 <= c < self.field.q:
                    raise ValueError(f"coefficient {c} out of range")

    @property
    def precision(self) -> int:
        return len(self.coeffs[0])


def hankel_matrix(field: Field, coeffs: Sequence[int], m: int) -> linalg.Matrix:
    """The m x m Hankel matrix with entry (j, k) = coeffs[j + k - 2] (1-based)."""
    if len(coeffs) < 2 * m - 1:
        raise PrecisionError(
            f"need {2 * m - 1} coefficients for an {m}x{m} Hankel matrix"
        )
    return tuple(
        tuple(coeffs[j + k] for k in range(m)) for j in range(m)
    )


def ln_generator_matrices(spec: LNSpec, m: int) -> GeneratorFamily:
    """The m x m Hankel generating matrices of the family."""
    return GeneratorFamily(
        spec.field,
        tuple(hankel_matrix(spec.field, row, m) for row in spec.coeffs),
    )


@dataclass(frozen=True)
class RankWitness:
    """Rank data of the stacked prefixes at one level m."""

    m: int
    rank_wide: int
    rank_square: int

    @property
    def passed(self) -> bool:
        return self.rank_wide == self.rank_square + 1 == self.m + 1


def _stack_prefixes(
    field: Field, matrices: Sequence[linalg.Matrix], rows: int, cols: int
) -> linalg.Matrix:
    blocks = [
        linalg.transpose(tuple(row[:cols] for row in mat[:rows]))
        for mat in matrices
    ]
    return linalg.hstack(blocks)


def rank_condition(gens: GeneratorFamily, m_max: int) -> list[RankWitness]:
    """Rank witnesses for m = 1..m_max from the family's M x M prefixes.

    Requires stored prefixes of size at least m_max + 1 so the wide stack
    (one extra matrix column, transposed to one extra row) is available.
    """
    if gens.size < m_max + 1:
        raise PrecisionError(
            f"stored prefixes of size {gens.size} cannot drive m_max = {m_max}"
        )
    F = gens.field
    out = []
    for m in range(1, m_max + 1):
        wide = _stack_prefixes(F, gens.matrices, m, m + 1)
        square = _stack_prefixes(F, gens.matrices, m, m)
        out.append(
            RankWitness(m, linalg.rank(F, wide), linalg.rank(F, square))
        )
    return out


def is_nut(field: Field, a: linalg.Matrix) -> bool:
    """Nonsingular upper triangular: zero below the diagonal, units on it."""
    n = len(a)
    for r in range(n):
        if len(a[r]) != n or a[r][r] == 0:
            return False
        if any(a[r][c] for c in range(r)):
            return False
    return True


#: Cap on the affine solution spaces enumerated for a unit diagonal.
NUT_ENUM_CAP = 1 << 16


def nut_equivalence(
    gens_a: GeneratorFamily, gens_b: GeneratorFamily, cap: int = NUT_ENUM_CAP
) -> linalg.Matrix | None:
    """Find a NUT matrix P with B_i = A_i P for every coordinate, if one exists.

    The unknowns are the upper-triangular entries of P; the equations say
    each product matches B_i entrywise.  Among the solutions of that linear
    system one with an everywhere-nonzero diagonal is searched (singular
    inputs are fine — they simply may yield ``None``).
    """
    F = gens_a.field
    if gens_b.field.q != F.q:
        raise ValueError("families live in different fields")
    m = gens_a.size
    if gens_b.size != m or gens_a.s != gens_b.s:
        raise ValueError("families have mismatched shapes")
    upper = [(r, c) for c in range(m) for r in range(c + 1)]
    col_of = {rc: i for i, rc in enumerate(upper)}
    rows = []
    rhs = []
    for a_mat, b_mat in zip(gens_a.matrices, gens_b.matrices):
        for r in range(m):
            for c in range(m):
                row = [0] * len(upper)
                for l in range(c + 1):
                    row[col_of[(l, c)]] = a_mat[r][l]
                rows.append(tuple(row))
                rhs.append(b_mat[r][c])
    particular = linalg.solve(F, tuple(rows), tuple(rhs))
    if particular is None:
        return None
    kernel = linalg.kernel_basis(F, tuple(rows))
    if F.q ** len(kernel) > cap:
        raise CapacityError(
            f"NUT solution space of dimension {len(kernel)} exceeds the cap"
        )
    diag_cols = [col_of[(d, d)] for d in range(m)]
    for combo in itertools.product(F.elements(), repeat=len(kernel)):
        entries = list(particular)
        for coeff, kvec in zip(combo, kernel):
            if coeff:
                for j, x in enumerate(kvec):
                    if x:
                        entries[j] = F.add(entries[j], F.mul(coeff, x))
        if all(entries[dc] for dc in diag_cols):
            p = [[0] * m for _ in range(m)]
            for (r, c), val in zip(upper, entries):
                p[r][c] = val
            pm = tuple(tuple(row) for row in p)
            assert all(
                linalg.mat_mul(F, a_mat, pm) == b_mat
                for a_mat, b_mat in zip(gens_a.matrices, gens_b.matrices)
            )
            return pm
    return None


def parse_ln_spec(stream: IO[str]) -> LNSpec:
    """Read the Hankel description format: q=, s=, M=, g_i=<comma digits>.

    The digits of g_i are the coefficients c_1..c_M (the z^0 coefficient is
    structurally zero and not written).
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
    rows = []
    for i in range(1, s + 1):
        key = f"g_{i}"
        if key not in entries:
            raise ValueError(f"spec file is missing {key}=")
        digits = tuple(int(tok) for tok in entries.pop(key).split(","))
        if len(digits) != M:
            raise ValueError(f"{key} must carry exactly M = {M} digits")
        rows.append(digits)
    if entries:
        raise ValueError(f"unrecognized spec keys: {sorted(entries)}")
    return LNSpec(F, s, tuple(rows))
