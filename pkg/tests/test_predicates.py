import random

import pytest

from prymrep.cyclotomic import CycInt, one, zeta_pow
from prymrep.generators import delta_g1, elem_Ti, scalar_zeta
from prymrep.predicates import (
    GroupTag,
    genus2_real_project,
    genus2_theta_project,
    is_member,
)
from prymrep.ringlinalg import BlockMat, RingMatrix, parse_matrix
from prymrep.sweeps import random_lambda_word
from prymrep.wordlang import evaluate


def block(text, d, g):
    return BlockMat(parse_matrix(text, d), g)


def test_identity_in_every_tag():
    m = BlockMat.identity(5, 2)
    for tag in GroupTag:
        assert is_member(m, tag), tag


def test_scalar_zeta_in_delta_and_lambda():
    m = scalar_zeta(2, 5, 1)
    assert is_member(m, GroupTag.Delta)
    assert is_member(m, GroupTag.Lambda)
    assert is_member(m, GroupTag.USharp)


def test_unipotent_example_memberships():
    # [[Id, E11], [0, Id]] at genus 3: integer entries, so also in urSp(Z)
    m = block("1, 0, 1, 0 ; 0, 1, 0, 0 ; 0, 0, 1, 0 ; 0, 0, 0, 1", 5, 3)
    for tag in (GroupTag.Delta, GroupTag.Lambda, GroupTag.UrSpZ, GroupTag.UrU):
        assert is_member(m, tag), tag


def test_lower_left_failure_reason():
    m = block("1, 0 ; 1, 1", 5, 2)
    v = is_member(m, GroupTag.Lambda)
    assert not v and "lower-left" in v.reason


def test_remark_matrix_in_ursharp_but_not_lambda():
    # diag(sqrt5 - 2, sqrt5 + 2) with sqrt5 = 1 + 2z + 2z^4
    m = block("-1+2*z+2*z^4, 0 ; 0, 3+2*z+2*z^4", 5, 2)
    assert is_member(m, GroupTag.UrUSharp)
    assert is_member(m, GroupTag.UrU)
    v = is_member(m, GroupTag.Lambda)
    assert not v and "det(D)" in v.reason


def test_delta_requires_self_adjoint_block():
    m = block("1, z ; 0, 1", 5, 2)  # B = z is not real
    v = is_member(m, GroupTag.Delta)
    assert not v and "self-adjoint" in v.reason
    assert is_member(m, GroupTag.Lambda) is not None  # D*B = B*D fails too
    assert not is_member(m, GroupTag.Lambda)


def test_even_det_clause_for_even_d():
    # at d = 12 the element 1 - z is a unit (norm Phi_12(1) = 1) and
    # (1 - z) / conj(1 - z) = -z = z^7, an odd power of zeta
    u = 1 - zeta_pow(12, 1)
    a = u.conj().inverse()
    m = BlockMat(RingMatrix.from_rows(12, [[a, 0], [0, u]]), 2)
    assert is_member(m, GroupTag.UrU)
    from prymrep.cyclotomic import unit_exponent
    assert unit_exponent(m.det()) == (1, 7)
    v = is_member(m, GroupTag.USharp)
    assert not v and "odd" in v.reason
    assert not is_member(m, GroupTag.UrUSharp)


def test_usharp_all_powers_for_odd_d():
    for k in range(5):
        m = scalar_zeta(2, 5, k)  # det = zeta^(2k), and for odd d every power is even
        assert is_member(m, GroupTag.USharp)


def test_subgroup_chain_on_random_words():
    rng = random.Random(9)
    chain = (GroupTag.Delta, GroupTag.Lambda, GroupTag.UrUSharp, GroupTag.UrU,
             GroupTag.U)
    for d in (3, 4, 7):
        for g in (2, 3):
            for _ in range(8):
                w = random_lambda_word(rng, d, g, 5)
                m = evaluate(w, d, g)
                assert is_member(m, GroupTag.Lambda), w.render()
                # membership persists under product and inverse
                assert is_member(m * m, GroupTag.Lambda)
                assert is_member(m.inverse(), GroupTag.Lambda)
                seen = [tag for tag in chain if is_member(m, tag)]
                # whatever the smallest group containing m is, the chain above
                # it must hold
                for lo, hi in zip(chain, chain[1:]):
                    if is_member(m, lo):
                        assert is_member(m, hi), (lo, hi, w.render())
                assert GroupTag.Lambda in seen


def test_theta_projection_examples():
    assert genus2_theta_project(BlockMat.identity(5, 2)) == (1, CycInt.from_int(5, 0))
    r = CycInt.from_literal(5, "1+z+z^4")
    m = block("z, z+z^2+1 ; 0, z", 5, 2)  # zeta * [[1, 1+z+z^-1], [0, 1]]
    eps, rr = genus2_theta_project(m)
    assert (eps, rr) == (1, r)
    m = block("-1, 1+z+z^4 ; 0, -1", 5, 2)
    eps, rr = genus2_theta_project(m)
    assert eps == -1 and rr == -r


def test_theta_projection_homomorphism():
    rng = random.Random(10)
    for d in (3, 5, 9):
        for _ in range(10):
            a = evaluate(random_lambda_word(rng, d, 2, 6), d, 2)
            b = evaluate(random_lambda_word(rng, d, 2, 6), d, 2)
            ea, ra = genus2_theta_project(a)
            eb, rb = genus2_theta_project(b)
            ep, rp = genus2_theta_project(a * b)
            assert ep == ea * eb
            assert rp == ra + rb


def test_theta_kills_scalars():
    for k in range(5):
        eps, r = genus2_theta_project(scalar_zeta(2, 5, k))
        assert eps == 1 and r.is_zero()


def test_theta_rejections():
    with pytest.raises(ValueError):
        genus2_theta_project(BlockMat.identity(4, 2))  # even d
    with pytest.raises(ValueError):
        genus2_theta_project(BlockMat.identity(5, 3))  # wrong genus
    with pytest.raises(ValueError):
        genus2_theta_project(block("1, 0 ; 1, 1", 5, 2))  # not in Lambda


def test_real_projection_for_even_d():
    m = block("z, 2*z ; 0, z", 4, 2)
    r = genus2_real_project(m)
    assert r == 2
    # flipping the scalar representative does not change the projection
    m2 = m * CycInt.from_int(4, -1)
    assert genus2_real_project(m2) == 2


def test_genus2_lambda_elements_have_equal_diagonal():
    rng = random.Random(11)
    for d in (4, 5):
        for _ in range(10):
            m = evaluate(random_lambda_word(rng, d, 2, 6), d, 2)
            assert m.mat[0, 0] == m.mat[1, 1]


def test_ti_negative_index_not_lambda():
    m = elem_Ti(3, 5, -2, one(5))
    assert not is_member(m, GroupTag.Lambda)
    assert is_member(m, GroupTag.U)


def test_delta_generator_is_delta_member():
    assert is_member(delta_g1(3, 7, 2), GroupTag.Delta)
