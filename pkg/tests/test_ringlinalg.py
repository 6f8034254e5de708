import random

import pytest

from prymrep.cyclotomic import CycInt, euler_phi, zeta_pow
from prymrep.ringlinalg import (
    BlockMat,
    RingMatrix,
    basis_vector,
    form_eval,
    omega,
    parse_matrix,
    preserves_form,
)


def rand_matrix(rng, d, n, lo=-4, hi=4):
    phi = euler_phi(d)
    return RingMatrix(d, [
        [CycInt(d, [rng.randint(lo, hi) for _ in range(phi)]) for _ in range(n)]
        for _ in range(n)
    ])


def test_adjoint_examples():
    assert RingMatrix.identity(5, 3).adjoint() == RingMatrix.identity(5, 3)
    z = zeta_pow(3, 1)
    m = RingMatrix.from_rows(3, [[z, 0], [1, 1]])
    assert m.adjoint() == RingMatrix.from_rows(3, [[z * z, 1], [0, 1]])


def test_adjoint_antihomomorphism():
    rng = random.Random(2)
    for d in (3, 5, 8):
        for _ in range(10):
            m = rand_matrix(rng, d, 3)
            n = rand_matrix(rng, d, 3)
            assert (m * n).adjoint() == n.adjoint() * m.adjoint()
            assert m.adjoint().adjoint() == m


def test_det_examples():
    for n in (1, 2, 5):
        assert RingMatrix.identity(7, n).det() == 1
    m = RingMatrix.from_rows(5, [[zeta_pow(5, 1), 0], [0, zeta_pow(5, 2)]])
    assert m.det() == zeta_pow(5, 3)
    # det(Omega) = 1 for g = 3, cross-checked by cofactor expansion
    om = omega(3, 5)
    assert om.mat.det() == 1
    assert om.mat.det_cofactor() == 1


def test_det_bareiss_matches_cofactor():
    rng = random.Random(3)
    for d in (2, 3, 4, 5, 12):
        for n in (1, 2, 3, 4):
            for _ in range(6):
                m = rand_matrix(rng, d, n, -3, 3)
                assert m.det() == m.det_cofactor(), (d, n, m)


def test_det_singular():
    z = CycInt.from_int(5, 0)
    m = RingMatrix.from_rows(5, [[1, 1], [1, 1]])
    assert m.det() == z
    assert m.det_cofactor() == z


def test_det_cofactor_agreement_at_5x5():
    rng = random.Random(7)
    for d in (3, 8):
        for _ in range(3):
            m = rand_matrix(rng, d, 5, -2, 2)
            assert m.det() == m.det_cofactor()


def test_det_multiplicative():
    rng = random.Random(8)
    for d in (2, 5, 12):
        for n in (2, 4, 6):
            a = rand_matrix(rng, d, n, -2, 2)
            b = rand_matrix(rng, d, n, -2, 2)
            assert (a * b).det() == a.det() * b.det()


def test_omega():
    assert omega(2, 5).to_text() == "0, 1 ; -1, 0"
    om3 = omega(3, 5)
    assert om3.to_text() == "0, 0, 1, 0 ; 0, 0, 0, 1 ; -1, 0, 0, 0 ; 0, -1, 0, 0"
    for g in (2, 3, 4, 5):
        om = omega(g, 7)
        n = 2 * (g - 1)
        assert om.mat * om.mat == RingMatrix.identity(7, n) * CycInt.from_int(7, -1)


def test_form_eval_basis_pairs():
    for g in (2, 3, 4):
        d = 5
        for i in range(1, g):
            ei = basis_vector(d, g, i)
            emi = basis_vector(d, g, -i)
            assert form_eval(ei, emi, g) == 1
            assert form_eval(emi, ei, g) == -1
            assert form_eval(ei, ei, g).is_zero()


def test_form_sesquilinearity_and_antisymmetry():
    rng = random.Random(4)
    d, g = 5, 3
    phi = euler_phi(d)
    z = zeta_pow(d, 1)
    for _ in range(20):
        u = [CycInt(d, [rng.randint(-4, 4) for _ in range(phi)]) for _ in range(4)]
        v = [CycInt(d, [rng.randint(-4, 4) for _ in range(phi)]) for _ in range(4)]
        assert form_eval([z * x for x in u], v, g) == z * form_eval(u, v, g)
        assert form_eval(u, [z * x for x in v], g) == z.conj() * form_eval(u, v, g)
        assert form_eval(u, v, g) == -form_eval(v, u, g).conj()


def test_preserves_form():
    assert preserves_form(BlockMat.identity(5, 3))
    z = zeta_pow(5, 1)
    scalar = BlockMat(RingMatrix.identity(5, 4) * z, 3)
    assert preserves_form(scalar)
    bad = BlockMat(RingMatrix.identity(5, 4) * CycInt.from_int(5, 2), 3)
    assert not preserves_form(bad)


def test_preservation_matches_random_vector_spotcheck():
    # full matrix identity vs 20 random evaluation pairs
    rng = random.Random(5)
    d, g = 4, 3
    phi = euler_phi(d)
    z = zeta_pow(d, 1)
    mats = [
        BlockMat.identity(d, g),
        BlockMat(RingMatrix.identity(d, 4) * z, g),
        BlockMat(RingMatrix.from_rows(d, [[1, 0, 2, 0], [0, 1, 0, 0],
                                          [0, 0, 1, 0], [0, 0, 0, 1]]), g),
        BlockMat(RingMatrix.from_rows(d, [[2, 0, 0, 0], [0, 1, 0, 0],
                                          [0, 0, 1, 0], [0, 0, 0, 1]]), g),
    ]
    for m in mats:
        spot = True
        for _ in range(20):
            u = [CycInt(d, [rng.randint(-3, 3) for _ in range(phi)]) for _ in range(4)]
            v = [CycInt(d, [rng.randint(-3, 3) for _ in range(phi)]) for _ in range(4)]
            if form_eval(m.mat.apply(u), m.mat.apply(v), g) != form_eval(u, v, g):
                spot = False
                break
        assert spot == preserves_form(m)


def rand_unit_det_matrix(rng, d, n):
    # product of elementary row additions and unit scalings: determinant
    # stays +-zeta^k, so the inverse exists over the ring
    phi = euler_phi(d)
    m = RingMatrix.identity(d, n)
    for _ in range(8):
        kind = rng.randrange(3)
        rows = [list(r) for r in m.entries]
        if kind == 0:
            i, j = rng.sample(range(n), 2)
            c = CycInt(d, [rng.randint(-2, 2) for _ in range(phi)])
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1:
            i = rng.randrange(n)
            u = zeta_pow(d, rng.randrange(d)) * rng.choice((1, -1))
            rows[i] = [u * a for a in rows[i]]
        else:
            i, j = rng.sample(range(n), 2)
            rows[i], rows[j] = rows[j], rows[i]
        m = RingMatrix(d, rows)
    return m


def test_inverse_round_trip():
    rng = random.Random(6)
    for d in (3, 5, 8):
        ident = RingMatrix.identity(d, 3)
        for _ in range(5):
            m = rand_unit_det_matrix(rng, d, 3)
            inv = m.inverse()
            assert m * inv == ident
            assert inv * m == ident


def test_inverse_failures():
    m = RingMatrix.from_rows(5, [[1, 1], [1, 1]])
    with pytest.raises(ZeroDivisionError):
        m.inverse()
    m = RingMatrix.from_rows(5, [[2, 0], [0, 1]])
    with pytest.raises(ArithmeticError):
        m.inverse()  # invertible over Q(zeta) but not over the ring


def test_matrix_pow():
    z = zeta_pow(6, 1)
    m = RingMatrix.from_rows(6, [[z, 1], [0, 1]])
    assert m ** 0 == RingMatrix.identity(6, 2)
    assert m ** 3 == m * m * m
    assert m ** -2 == (m * m).inverse()


def test_matrix_text_round_trip():
    m = parse_matrix("1, 1-z ; 0, 1", 5)
    assert m.to_text() == "1, 1-z ; 0, 1"
    assert m[0, 1] == 1 - zeta_pow(5, 1)
    again = parse_matrix(m.to_text(), 5)
    assert again == m


def test_matrix_parse_errors():
    from prymrep.cyclotomic import ParseError
    with pytest.raises(ParseError):
        parse_matrix("1, z ; 0", 5)
    with pytest.raises(ParseError):
        parse_matrix("1, q ; 0, 1", 5)


def test_blockmat_size_validation():
    with pytest.raises(ValueError):
        BlockMat(RingMatrix.identity(5, 3), 2)
    with pytest.raises(ValueError):
        BlockMat(RingMatrix.identity(5, 2), 1)


def test_blockmat_blocks():
    m = parse_matrix("1, 2, 3, 4 ; 5, 6, 7, 8 ; 9, 10, 11, 12 ; 13, 14, 15, 16", 5)
    b = BlockMat(m, 3)
    ul, ur, ll, lr = b.blocks()
    assert ul.to_text() == "1, 2 ; 5, 6"
    assert ur.to_text() == "3, 4 ; 7, 8"
    assert ll.to_text() == "9, 10 ; 13, 14"
    assert lr.to_text() == "11, 12 ; 15, 16"
