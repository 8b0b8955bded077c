"""Hankel-generated families: rank condition and NUT equivalence search."""

from __future__ import annotations

import io
import itertools
import random

import pytest

from hyperseq import linalg
from hyperseq.errors import CapacityError, PrecisionError
from hyperseq.fields import field
from hyperseq.lnseq import (
    LNSpec,
    hankel_matrix,
    is_nut,
    ln_generator_matrices,
    nut_equivalence,
    parse_ln_spec,
    rank_condition,
)
from hyperseq.nets import (
    GeneratorFamily,
    NetSpec,
    generate_net_points,
    net_generator_matrices,
)
from hyperseq.poly import Poly, SeriesPrefix
from hyperseq.sequences import SeqSpec, seq_generator_prefix
from hyperseq.verify import strict_t


def P(q, text):
    return Poly.parse(field(q), text)


def hyperplane_gens(q, polys, M):
    F = field(q)
    spec = SeqSpec(
        F, len(polys), tuple(SeriesPrefix.from_poly(p, M) for p in polys)
    )
    return seq_generator_prefix(spec, M)


# -- Hankel matrices ---------------------------------------------------------------


def test_hankel_all_ones():
    F = field(2)
    mat = hankel_matrix(F, (1, 1, 1, 1, 1), 3)
    assert mat == ((1, 1, 1), (1, 1, 1), (1, 1, 1))


def test_hankel_single_leading_coefficient():
    F = field(2)
    assert hankel_matrix(F, (1, 0, 0), 2) == ((1, 0), (0, 0))


def test_hankel_skew_diagonals_constant():
    F = field(5)
    coeffs = (3, 1, 4, 1, 2, 0, 3)
    mat = hankel_matrix(F, coeffs, 4)
    for j in range(4):
        for k in range(4):
            assert mat[j][k] == coeffs[j + k]


def test_hankel_needs_enough_coefficients():
    F = field(2)
    with pytest.raises(PrecisionError):
        hankel_matrix(F, (1, 1), 2)  # needs 2m-1 = 3


def test_ln_spec_validation():
    F = field(3)
    with pytest.raises(ValueError):
        LNSpec(F, 2, ((1, 2),))
    with pytest.raises(ValueError):
        LNSpec(F, 2, ((1, 2), (1, 2, 0)))
    with pytest.raises(ValueError):
        LNSpec(F, 1, ((3, 0),))
    spec = LNSpec(F, 2, ((1, 2, 0), (0, 1, 1)))
    assert spec.precision == 3
    gens = ln_generator_matrices(spec, 2)
    assert gens.matrices[0] == ((1, 2), (2, 0))


# -- Hankel families reproduce hyperplane nets --------------------------------------


def test_reversed_coefficients_reproduce_hyperplane_net():
    # Loading coefficient l with the degree-(m-l) coefficient of alpha_i
    # makes the Hankel matrix equal C_i J (J = index reversal), so the two
    # constructions emit the same point multiset and the same strict t.
    F = field(2)
    for m in range(1, 5):
        f = Poly.x_pow(F, m)
        for tail in itertools.product(range(2), repeat=m):
            a2 = Poly(F, tail)
            alphas = (Poly.one(F), a2)
            net = generate_net_points(
                net_generator_matrices(NetSpec(F, 2, m, f, alphas))
            )
            rows = []
            for a in alphas:
                padded = a.padded(m)
                rows.append(
                    tuple(padded[m - 1 - l] for l in range(m))
                    + (0,) * (m - 1)
                )
            ln = LNSpec(F, 2, tuple(rows))
            gens = ln_generator_matrices(ln, m)
            pts = generate_net_points(gens)
            assert sorted(pts.points) == sorted(net.points)
            assert strict_t(pts, m) == strict_t(net, m)


# -- rank condition ----------------------------------------------------------------


def test_rank_condition_reference_pass():
    gens = hyperplane_gens(2, (P(2, "1"), P(2, "1,1")), 3)
    witnesses = rank_condition(gens, 2)
    assert [w.passed for w in witnesses] == [True, True]
    assert witnesses[0].rank_wide == 2
    assert witnesses[0].rank_square == 1
    assert witnesses[1].rank_wide == 3
    assert witnesses[1].rank_square == 2


def test_rank_condition_proportional_coordinates_fail():
    gens = hyperplane_gens(2, (P(2, "1"), P(2, "1")), 3)
    witnesses = rank_condition(gens, 2)
    assert witnesses[0].rank_wide == 1
    assert not witnesses[0].passed


def test_rank_condition_needs_wide_prefix():
    gens = hyperplane_gens(2, (P(2, "1"), P(2, "1,1")), 3)
    with pytest.raises(PrecisionError):
        rank_condition(gens, 3)


def test_rank_condition_hankel_family():
    F = field(2)
    spec = LNSpec(F, 2, ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0)))
    gens = ln_generator_matrices(spec, 3)
    witnesses = rank_condition(gens, 2)
    assert witnesses[0].passed  # wide stack of g=z and g=z^2 has rank 2
    assert not witnesses[1].passed  # singular square stack at m = 2


# -- NUT equivalence ---------------------------------------------------------------


def test_is_nut():
    F = field(3)
    assert is_nut(F, ((1, 2), (0, 2)))
    assert not is_nut(F, ((1, 0), (1, 1)))
    assert not is_nut(F, ((0, 1), (0, 1)))
    assert not is_nut(F, ((1, 1, 0), (0, 1, 0)))  # not square


def test_nut_equivalence_identity():
    gens = hyperplane_gens(2, (P(2, "1"), P(2, "1,1")), 3)
    p = nut_equivalence(gens, gens)
    assert p is not None
    assert is_nut(field(2), p)
    assert all(
        linalg.mat_mul(field(2), a, p) == a for a in gens.matrices
    )


def test_nut_equivalence_recovers_transform():
    rng = random.Random(31)
    for q in (2, 3):
        F = field(q)
        for _ in range(8):
            m = 3
            planted = tuple(
                tuple(
                    rng.randrange(1, q) if r == c
                    else (rng.randrange(q) if c > r else 0)
                    for c in range(m)
                )
                for r in range(m)
            )
            a = hyperplane_gens(
                q,
                (
                    P(q, "1"),
                    Poly(F, [rng.randrange(1, q)]
                         + [rng.randrange(q) for _ in range(m - 1)]),
                ),
                m,
            )
            b = GeneratorFamily(
                F,
                tuple(linalg.mat_mul(F, mat, planted) for mat in a.matrices),
            )
            found = nut_equivalence(a, b)
            assert found is not None
            assert is_nut(F, found)
            for mat, target in zip(a.matrices, b.matrices):
                assert linalg.mat_mul(F, mat, found) == target
            # Equivalence is idempotent: re-running on (b, b) still works.
            again = nut_equivalence(b, b)
            assert again is not None and is_nut(F, again)


def test_no_hankel_family_matches_the_reference_hyperplane_net():
    # At m = 2 any NUT-equivalent partner of (I, C_2) would need P itself
    # to be Hankel and NUT, forcing P = I and C_2 Hankel — which it is not.
    F = field(2)
    hyper = GeneratorFamily(
        F, (((1, 0), (0, 1)), ((1, 1), (0, 1)))
    )
    for bits in itertools.product(range(2), repeat=6):
        ln = LNSpec(F, 2, (bits[:3], bits[3:]))
        gens = ln_generator_matrices(ln, 2)
        assert nut_equivalence(gens, hyper) is None


def test_nut_equivalence_validation_and_capacity():
    F = field(2)
    a = GeneratorFamily(F, (((1, 0), (0, 1)),))
    with pytest.raises(ValueError):
        nut_equivalence(a, GeneratorFamily(field(3), (((1, 0), (0, 1)),)))
    with pytest.raises(ValueError):
        nut_equivalence(a, GeneratorFamily(F, (((1,),),)))
    zero4 = tuple(tuple(0 for _ in range(4)) for _ in range(4))
    zeros = GeneratorFamily(F, (zero4,))
    with pytest.raises(CapacityError):
        nut_equivalence(zeros, zeros, cap=512)  # 2^10 solutions


# -- spec files --------------------------------------------------------------------


def test_parse_ln_spec():
    text = "# family\nq=2\ns=2\nM=3\ng_1=1,0,0\ng_2=0,1,0\n"
    spec = parse_ln_spec(io.StringIO(text))
    assert spec.field.q == 2
    assert spec.s == 2
    assert spec.coeffs == ((1, 0, 0), (0, 1, 0))

    with pytest.raises(ValueError):
        parse_ln_spec(io.StringIO("q=2\ns=1\nM=2\ng_1=1\n"))
    with pytest.raises(ValueError):
        parse_ln_spec(io.StringIO("q=2\ns=1\nM=2\n"))
    with pytest.raises(ValueError):
        parse_ln_spec(io.StringIO("q=2\ns=1\nM=1\ng_1=1\nextra=2\n"))
