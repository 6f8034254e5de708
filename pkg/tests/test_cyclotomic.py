import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymrep.cyclotomic import (
    CycInt,
    ParseError,
    conj,
    cyclotomic_poly,
    euler_phi,
    eval_real_basis,
    is_real,
    one,
    parse_ring_literal,
    render_poly,
    solve_real_basis,
    unit_exponent,
    zeta_pow,
)


def test_cyclotomic_polynomials():
    # constant-first coefficient tuples
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_zeta_pow_examples():
    assert zeta_pow(5, 0).coeffs == (1, 0, 0, 0)
    # x^4 mod (1 + x + x^2 + x^3 + x^4), by polynomial division
    assert zeta_pow(5, 4).coeffs == (-1, -1, -1, -1)
    # x^2 mod (x^2 + 1)
    assert zeta_pow(4, 2).coeffs == (-1, 0)


def test_zeta_pow_reduces_mod_d():
    for d in (2, 3, 5, 8, 12):
        for k in range(-2 * d, 2 * d):
            assert zeta_pow(d, k) == zeta_pow(d, k % d)
            assert zeta_pow(d, k).coeffs == zeta_pow(d, k % d).coeffs


def test_d_below_two_rejected():
    with pytest.raises(ValueError):
        zeta_pow(1, 0)
    with pytest.raises(ValueError):
        CycInt(0, ())


def test_modulus_mismatch_rejected():
    with pytest.raises(ValueError):
        zeta_pow(5, 1) + zeta_pow(7, 1)
    with pytest.raises(ValueError):
        zeta_pow(5, 1) * zeta_pow(4, 1)


def test_mul_examples():
    z = zeta_pow(4, 1)
    assert (1 + z) * (1 - z) == 2
    z = zeta_pow(3, 1)
    assert z * z == -1 - z


def test_unit_law():
    for d in (2, 5, 9):
        phi = euler_phi(d)
        for k in range(phi):
            x = CycInt(d, [1 if m == k else -2 for m in range(phi)])
            assert one(d) * x == x
            assert x * one(d) == x


def test_conj_examples():
    assert conj(zeta_pow(5, 1)) == zeta_pow(5, 4)
    assert conj(CycInt.from_int(7, 5)) == 5
    assert conj(CycInt.from_literal(4, "1+z")) == CycInt.from_literal(4, "1-z")


def test_is_real():
    for d in (3, 5, 8):
        assert is_real(zeta_pow(d, 1) + zeta_pow(d, -1))
        assert not is_real(zeta_pow(d, 1))
    assert is_real(CycInt.from_int(5, 5))


def test_unit_exponent_examples():
    assert unit_exponent(zeta_pow(7, 3)) == (1, 3)
    assert unit_exponent(-zeta_pow(5, 2)) == (-1, 2)
    assert unit_exponent(1 + zeta_pow(5, 1)) is None


def test_unit_exponent_shift():
    for d in (4, 5, 12):
        phi = euler_phi(d)
        a = CycInt(d, [2] + [1] * (phi - 1))
        for j in range(d):
            shifted = zeta_pow(d, j) * a
            assert (unit_exponent(shifted) is None) == (unit_exponent(a) is None)
        u = -zeta_pow(d, 1)
        for j in range(d):
            assert unit_exponent(zeta_pow(d, j) * u) is not None


coeff_lists = st.integers(-8, 8)


@st.composite
def cycints(draw, ds=(3, 4, 5, 7, 12)):
    d = draw(st.sampled_from(ds))
    coeffs = draw(st.lists(coeff_lists, min_size=euler_phi(d), max_size=euler_phi(d)))
    return CycInt(d, coeffs)


@st.composite
def cycint_pairs(draw):
    a = draw(cycints())
    coeffs = draw(st.lists(coeff_lists, min_size=len(a.coeffs), max_size=len(a.coeffs)))
    return a, CycInt(a.d, coeffs)


@given(cycint_pairs())
def test_conj_is_a_ring_involution(pair):
    a, b = pair
    assert conj(a * b) == conj(a) * conj(b)
    assert conj(conj(a)) == a
    assert conj(a + b) == conj(a) + conj(b)


@given(cycints())
def test_conj_fixes_exactly_the_reals(a):
    r = a + conj(a)
    assert is_real(r)
    assert conj(r) == r


@given(cycints())
@settings(max_examples=60)
def test_solve_real_basis_reconstructs(a):
    for r in (a + conj(a), a * conj(a)):
        n0, nk = solve_real_basis(r)
        assert eval_real_basis(r.d, n0, nk) == r


def test_solve_real_basis_examples():
    n0, nk = solve_real_basis(one(5))
    assert eval_real_basis(5, n0, nk) == 1
    r = zeta_pow(5, 1) + zeta_pow(5, 4)
    n0, nk = solve_real_basis(r)
    assert eval_real_basis(5, n0, nk) == r
    # (z + z^4)^2 expands to 2 + (z^2 + z^-2)
    r2 = r * r
    assert r2 == CycInt.from_int(5, 2) + zeta_pow(5, 2) + zeta_pow(5, 3)
    n0, nk = solve_real_basis(r2)
    assert eval_real_basis(5, n0, nk) == r2


def test_solve_real_basis_rejects_non_real():
    with pytest.raises(ValueError):
        solve_real_basis(zeta_pow(5, 1))


def test_inverse():
    for d in (3, 5, 7, 12):
        for k in range(d):
            for s in (1, -1):
                u = zeta_pow(d, k) * s
                assert u * u.inverse() == 1
    u = 1 + zeta_pow(5, 1)  # a non-torsion unit: (1+z)(-z-z^3) = 1
    assert u * u.inverse() == 1
    with pytest.raises(ValueError):
        (1 + zeta_pow(4, 1)).inverse()  # norm 2, not a unit


def test_pow():
    z = zeta_pow(7, 1)
    assert z ** 7 == 1
    assert z ** -1 == zeta_pow(7, 6)
    assert (1 + z) ** 0 == 1


def test_ring_literals():
    assert parse_ring_literal("1 - z^3 + 2*z") == (1, 2, 0, -1)
    assert parse_ring_literal("0") == (0,)
    assert parse_ring_literal("-z^2") == (0, 0, -1)
    assert parse_ring_literal("  2*z + 1 ") == (1, 2)
    assert CycInt.from_literal(5, "z^5") == 1
    for text in ("", "z +", "z^", "q", "1 1"):
        with pytest.raises(ParseError):
            parse_ring_literal(text)


@given(cycints())
def test_literal_round_trip(a):
    assert CycInt.from_literal(a.d, a.literal()) == a


def test_render_poly():
    assert render_poly((0,)) == "0"
    assert render_poly((1, 0, -1)) == "1-z^2"
    assert render_poly((0, 1)) == "z"
    assert render_poly((-2, 3)) == "-2+3*z"
