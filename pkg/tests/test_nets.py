"""Net construction: Psi embedding, bases, generator matrices, point sets."""

from __future__ import annotations

import io
import itertools
import random
from fractions import Fraction

import pytest

from hyperseq import linalg
from hyperseq.duality import figure_of_merit, kernel_space
from hyperseq.fields import field
from hyperseq.nets import (
    GeneratorFamily,
    NetSpec,
    OrderedBasis,
    companion_psi,
    generate_net_points,
    net_generator_matrices,
    theta_decode,
    theta_encode,
)
from hyperseq.points import (
    PointSet,
    digits_to_fraction,
    parse_points,
    truncate_point,
    write_points,
)
from hyperseq.poly import Poly
from hyperseq.verify import strict_t


def P(q, text):
    return Poly.parse(field(q), text)


def units_mod_xm(q, m):
    F = field(q)
    for coeffs in itertools.product(range(q), repeat=m):
        if coeffs[0] != 0:
            yield Poly(F, coeffs)


# -- companion embedding -----------------------------------------------------------


def test_psi_of_x_for_power_modulus():
    F = field(2)
    assert companion_psi(P(2, "0,1"), Poly.x_pow(F, 2)) == ((0, 0), (1, 0))


def test_psi_toeplitz_pattern():
    F = field(2)
    mat = companion_psi(P(2, "1,0,1"), Poly.x_pow(F, 3))
    assert mat == ((1, 0, 0), (0, 1, 0), (1, 0, 1))


def test_psi_homomorphism_for_general_modulus():
    F = field(2)
    f = P(2, "1,0,1")  # x^2 + 1
    x = P(2, "0,1")
    psi_x = companion_psi(x, f)
    assert psi_x == ((0, 1), (1, 0))
    square = linalg.mat_mul(F, psi_x, psi_x)
    assert square == linalg.identity(2)
    assert square == companion_psi(x.mul_mod(x, f), f)


def test_psi_requires_reduced_input():
    F = field(2)
    with pytest.raises(ValueError):
        companion_psi(P(2, "0,0,1"), Poly.x_pow(F, 2))


@pytest.mark.parametrize("q", [2, 3])
def test_psi_is_multiplicative_random(q):
    F = field(q)
    rng = random.Random(31 + q)
    f = Poly(F, (1, 1, 0, 1)) if q == 2 else Poly(F, (2, 1, 0, 1))
    for _ in range(20):
        a = Poly(F, tuple(rng.randrange(q) for _ in range(3)))
        b = Poly(F, tuple(rng.randrange(q) for _ in range(3)))
        lhs = linalg.mat_mul(F, companion_psi(a, f), companion_psi(b, f))
        assert lhs == companion_psi(a.mul_mod(b, f), f)


def test_psi_fast_path_matches_general_path():
    # f = x^m hits the Toeplitz shortcut; 1*x^m takes the Horner route.
    F = field(3)
    g = P(3, "1,2,0,1")
    fast = companion_psi(g, Poly.x_pow(F, 4))
    slow = companion_psi(g, Poly(F, (0, 0, 0, 0, 2)))  # 2x^4, same ideal
    assert fast == slow


# -- ordered bases and theta -------------------------------------------------------


def test_theta_canonical():
    F = field(2)
    basis = OrderedBasis.canonical(F, 2)
    assert theta_encode((P(2, "1,1"),), (basis,)) == (1, 1)


def test_theta_shifted_basis():
    F = field(2)
    basis = OrderedBasis(F, 2, (P(2, "1,1"), P(2, "0,1")))
    assert theta_encode((P(2, "1,1"),), (basis,)) == (1, 0)


def test_theta_concatenates_blocks():
    F = field(2)
    basis = OrderedBasis.canonical(F, 2)
    assert theta_encode((P(2, "1"), P(2, "0,1")), (basis, basis)) == (1, 0, 0, 1)


def test_singular_basis_rejected():
    F = field(2)
    with pytest.raises(ValueError):
        OrderedBasis(F, 2, (P(2, "1,1"), P(2, "1,1")))


def test_theta_round_trip_exhaustive():
    F = field(2)
    for m in (1, 2, 3):
        bases = (
            OrderedBasis.canonical(F, m),
            OrderedBasis(F, m, tuple(
                Poly(F, tuple(1 for _ in range(j + 1))) for j in range(m)
            )),
        )
        for digits in itertools.product(range(2), repeat=2 * m):
            ks = theta_decode(digits, bases)
            assert theta_encode(ks, bases) == tuple(digits)


# -- generator matrices ------------------------------------------------------------


def test_reference_generator_matrices():
    F = field(2)
    spec = NetSpec(F, 2, 2, Poly.x_pow(F, 2), (P(2, "1"), P(2, "1,1")))
    gens = net_generator_matrices(spec)
    assert gens.matrices[0] == linalg.identity(2)
    assert gens.matrices[1] == ((1, 1), (0, 1))


def test_canonical_basis_change_is_identity():
    F = field(2)
    assert OrderedBasis.canonical(F, 3).matrix == linalg.identity(3)


def test_overall_matrix_shape():
    F = field(2)
    spec = NetSpec(F, 2, 2, Poly.x_pow(F, 2), (P(2, "1"), P(2, "1,1")))
    overall = net_generator_matrices(spec).overall()
    assert len(overall) == 2 and len(overall[0]) == 4


# -- point generation --------------------------------------------------------------


def test_reference_point_set():
    F = field(2)
    spec = NetSpec(F, 2, 2, Poly.x_pow(F, 2), (P(2, "1"), P(2, "1,1")))
    pts = generate_net_points(net_generator_matrices(spec))
    assert pts.fractions() == [
        (Fraction(0), Fraction(0)),
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(1, 4), Fraction(3, 4)),
        (Fraction(3, 4), Fraction(1, 4)),
    ]


def test_zero_matrices_collapse_to_origin():
    F = field(2)
    gens = GeneratorFamily(F, (linalg.zeros(2, 2), linalg.zeros(2, 2)))
    pts = generate_net_points(gens)
    assert all(pt == ((0, 0), (0, 0)) for pt in pts.points)


def test_identity_generators_yield_radical_inverse():
    F = field(2)
    m = 3
    gens = GeneratorFamily(F, (linalg.identity(m), linalg.identity(m)))
    pts = generate_net_points(gens)
    for k, pt in enumerate(pts.points):
        digits = [(k >> j) & 1 for j in range(m)]
        value = sum(d * Fraction(1, 2 ** (j + 1)) for j, d in enumerate(digits))
        assert pt[0] == pt[1]
        assert digits_to_fraction(2, pt[0]) == value


def test_duality_contract_exhaustive():
    # row space of the overall generating matrix annihilates the dual basis
    F = field(2)
    for s in (2, 3):
        for m in range(1, 6):
            f = Poly.x_pow(F, m)
            one = Poly.one(F)
            pool = list(units_mod_xm(2, m))
            for rest in itertools.product(pool, repeat=s - 1):
                alphas = (one,) + rest
                spec = NetSpec(F, s, m, f, alphas)
                overall = net_generator_matrices(spec).overall()
                for avec in kernel_space(alphas, f).vectors:
                    assert all(
                        x == 0 for x in linalg.mat_vec(F, overall, avec)
                    )


def test_strictness_small_exhaustive():
    from hyperseq.verify import check_tms_net

    F = field(2)
    for m in range(1, 5):
        f = Poly.x_pow(F, m)
        for a2 in units_mod_xm(2, m):
            alphas = (Poly.one(F), a2)
            spec = NetSpec(F, 2, m, f, alphas)
            pts = generate_net_points(net_generator_matrices(spec))
            t = m - figure_of_merit(alphas, f).rho
            assert check_tms_net(pts, m, t).passed
            if t >= 1:
                assert not check_tms_net(pts, m, t - 1).passed


def _random_graded_basis(F, m, rng):
    """Random ordered basis with deg(b_j) = j-1 (upper-triangular matrix).

    Graded bases relabel point digits through a lower-triangular map, which
    preserves every digit-prefix partition and hence all elementary-box
    counts; strict t is exactly invariant for them.
    """
    elems = []
    for j in range(m):
        coeffs = tuple(rng.randrange(F.q) for _ in range(j)) + (
            rng.randrange(1, F.q),
        )
        elems.append(Poly(F, coeffs))
    return OrderedBasis(F, m, tuple(elems))


def test_strict_t_invariant_under_graded_basis_change():
    F = field(2)
    rng = random.Random(2024)
    for m in range(1, 5):
        f = Poly.x_pow(F, m)
        for a2 in units_mod_xm(2, m):
            alphas = (Poly.one(F), a2)
            base_spec = NetSpec(F, 2, m, f, alphas)
            reference = strict_t(
                generate_net_points(net_generator_matrices(base_spec)), m
            )
            for _ in range(3):
                bases = (
                    _random_graded_basis(F, m, rng),
                    _random_graded_basis(F, m, rng),
                )
                spec = NetSpec(F, 2, m, f, alphas, bases=bases)
                pts = generate_net_points(net_generator_matrices(spec))
                assert strict_t(pts, m) == reference


def test_arbitrary_bases_obey_duality_identity():
    # Ungraded bases change the dual space, so strict t can move in either
    # direction; what always holds is the duality identity
    # strict_t = m - (min NRT distance of the overall matrix's kernel) + 1.
    from hyperseq.duality import DualSpaceBasis, min_nrt_distance

    F = field(2)
    rng = random.Random(77)

    def random_basis(m):
        while True:
            elems = tuple(
                Poly(F, tuple(rng.randrange(2) for _ in range(m)))
                for _ in range(m)
            )
            mat = linalg.transpose(tuple(p.padded(m) for p in elems))
            if linalg.is_nonsingular(F, mat):
                return OrderedBasis(F, m, elems)

    for m in range(1, 5):
        f = Poly.x_pow(F, m)
        for a2 in units_mod_xm(2, m):
            alphas = (Poly.one(F), a2)
            for _ in range(2):
                bases = (random_basis(m), random_basis(m))
                spec = NetSpec(F, 2, m, f, alphas, bases=bases)
                fam = net_generator_matrices(spec)
                pts = generate_net_points(fam)
                kernel = linalg.kernel_basis(F, fam.overall())
                space = DualSpaceBasis(F, 2, m, tuple(kernel))
                delta = min_nrt_distance(space)
                assert strict_t(pts, m) == m - delta + 1


def test_ungraded_basis_change_can_move_strict_t_both_ways():
    # Why the invariance test above restricts to graded bases: with the
    # ungraded basis (x, 1) the coordinate expansion no longer encodes
    # degree, and strict t genuinely moves.
    F = field(2)
    f = Poly.x_pow(F, 2)
    swap = OrderedBasis(F, 2, (P(2, "0,1"), P(2, "1")))
    rev = OrderedBasis(F, 2, (P(2, "1"), P(2, "0,1")))

    improves = NetSpec(F, 2, 2, f, (P(2, "1"), P(2, "1")), bases=(swap, rev))
    assert strict_t(
        generate_net_points(
            net_generator_matrices(NetSpec(F, 2, 2, f, (P(2, "1"), P(2, "1"))))
        ),
        2,
    ) == 1
    assert strict_t(generate_net_points(net_generator_matrices(improves)), 2) == 0

    degrades = NetSpec(F, 2, 2, f, (P(2, "1"), P(2, "1,1")), bases=(swap, swap))
    assert strict_t(
        generate_net_points(
            net_generator_matrices(NetSpec(F, 2, 2, f, (P(2, "1"), P(2, "1,1"))))
        ),
        2,
    ) == 0
    assert strict_t(generate_net_points(net_generator_matrices(degrades)), 2) == 1


def test_net_spec_validation():
    F = field(2)
    with pytest.raises(ValueError):
        NetSpec(F, 2, 2, P(2, "1,1"), (P(2, "1"), P(2, "1")))  # deg f != m
    with pytest.raises(ValueError):
        NetSpec(F, 2, 2, Poly.x_pow(F, 2), (Poly.zero(F), Poly.zero(F)))


# -- point sets on disk ------------------------------------------------------------


def test_truncate_point_keeps_stored_expansion():
    assert truncate_point(((0, 1, 1),), 2) == ((0, 1),)
    assert digits_to_fraction(2, (0, 1)) == Fraction(1, 4)
    # 1/2 stored as (1,0,0): truncation reads the expansion, not the value
    assert truncate_point(((1, 0, 0),), 1) == ((1,),)
    assert digits_to_fraction(2, (1,)) == Fraction(1, 2)


def test_truncate_at_full_precision_is_identity():
    pts = PointSet(2, 1, 3, (((0, 1, 1),),))
    assert pts.truncate(3) == pts


def test_write_parse_round_trip_digits():
    F = field(2)
    spec = NetSpec(F, 2, 2, Poly.x_pow(F, 2), (P(2, "1"), P(2, "1,1")))
    pts = generate_net_points(net_generator_matrices(spec))
    buf = io.StringIO()
    write_points(pts, buf, render="digits")
    parsed = parse_points(io.StringIO(buf.getvalue()))
    assert parsed == pts


def test_write_parse_round_trip_rational():
    pts = PointSet(3, 2, 2, (((0, 1), (2, 2)), ((1, 0), (0, 1))))
    buf = io.StringIO()
    write_points(pts, buf, render="rational")
    parsed = parse_points(io.StringIO(buf.getvalue()))
    assert parsed == pts


def test_decimal_render_is_display_only():
    pts = PointSet(2, 1, 2, (((0, 1),),))
    buf = io.StringIO()
    write_points(pts, buf, render="decimal", decimals=3)
    assert "0.250" in buf.getvalue()
    with pytest.raises(ValueError):
        parse_points(io.StringIO(buf.getvalue()))
