"""Constructive decomposition of image elements.

decompose_delta writes a unipotent block matrix with self-adjoint upper block
as a word in the twist-generator family {G1, G2, G3}; reduce_lambda peels a
general Lambda element down to that case along a supplied witness word for
its lower-right block.
"""

from __future__ import annotations

from .cyclotomic import solve_real_basis
from .generators import GenSpec
from .predicates import GroupTag, is_member
from .ringlinalg import BlockMat, RingMatrix
from .wordlang import Word, evaluate


def decompose_delta(b: RingMatrix, d: int, g: int) -> Word:
    """A word over {G1, G2, G3} evaluating to [[Id, B], [0, Id]], for B = B*.

    Diagonal entries are real and split over {1} u {zeta^k + zeta^-k} by
    solve_real_basis; each off-diagonal entry contributes G3(i, j, d - m)
    with multiplicity equal to its coefficient of zeta^m, since G3(i, j, k)
    places zeta^-k at position (i, j).  Emission order is diagonal first,
    then (i, j) lexicographic, so output is reproducible; the factors commute,
    so order does not affect correctness.
    """
    n = g - 1
    if b.rows != n or b.cols != n:
        raise ValueError(f"B must be {n}x{n} for genus {g}")
    if b.d != d:
        raise ValueError("modulus mismatch")
    if b != b.adjoint():
        raise ValueError("B is not self-adjoint")
    factors = []
    for i in range(1, n + 1):
        n0, nk = solve_real_basis(b[i - 1, i - 1])
        if n0:
            factors.append((GenSpec("G1", (i,)), n0))
        for k, coeff in enumerate(nk, start=1):
            if coeff:
                factors.append((GenSpec("G2", (i, k)), coeff))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for m, coeff in enumerate(b[i - 1, j - 1].coeffs):
                if coeff:
                    factors.append((GenSpec("G3", (i, j, (d - m) % d)), coeff))
    return Word(tuple(factors))


def reduce_lambda(m: BlockMat, word_d: Word) -> Word:
    """Extend a witness word for the lower-right block to a word for M.

    word_d must evaluate to a Lambda element with the same lower-right block
    D as M.  The residual F = D*(B - E) is self-adjoint and unipotent-side,
    so the result is word_d followed by its delta decomposition; the returned
    word evaluates to M exactly.
    """
    d, g = m.d, m.g
    v = is_member(m, GroupTag.Lambda)
    if not v:
        raise ValueError(f"matrix is not in Lambda: {v.reason}")
    witness = evaluate(word_d, d, g)
    v = is_member(witness, GroupTag.Lambda)
    if not v:
        raise ValueError(f"witness word does not evaluate into Lambda: {v.reason}")
    dm = m.lower_right()
    if witness.lower_right() != dm:
        raise ValueError("witness word has a different lower-right block than M")
    f = dm.adjoint() * (m.upper_right() - witness.upper_right())
    if f != f.adjoint():
        raise ArithmeticError(
            "residual F = D*(B - E) is not self-adjoint; precondition violated"
        )
    return word_d * decompose_delta(f, d, g)
