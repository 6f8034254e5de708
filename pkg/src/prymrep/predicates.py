"""Membership tests for the subgroups carved out of GL_{2g-2}(Z[zeta_d]):
the form-preserving group U, its even-determinant subgroup U#, their
upper-right-block variants, the integer symplectic block group, and the two
image groups Lambda (handlebody side) and Delta (twist side).

Failures carry the clause that broke, for CLI diagnostics.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cyclotomic import CycInt, unit_exponent, zeta_pow
from .ringlinalg import BlockMat, RingMatrix, preserves_form


class GroupTag(enum.Enum):
    U = "U"
    USharp = "USharp"
    UrU = "UrU"
    UrUSharp = "UrUSharp"
    UrSpZ = "UrSpZ"
    Lambda = "Lambda"
    Delta = "Delta"
    Genus2Theta = "Genus2Theta"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


_OK = Verdict(True)


def _preserves(m: BlockMat) -> Verdict:
    if not preserves_form(m):
        return Verdict(False, "M* Omega M != Omega")
    return _OK


def _lower_left_zero(m: BlockMat) -> Verdict:
    if not m.lower_left().is_zero():
        return Verdict(False, "lower-left block is nonzero")
    return _OK


def _even_det(m: BlockMat) -> Verdict:
    ue = unit_exponent(m.det())
    if ue is None:
        return Verdict(False, "det(M) is not +-zeta^k")
    s, k = ue
    d = m.d
    if s < 0:
        # for even d a negative sign never survives unit_exponent; for odd d
        # -zeta^k is not a power of zeta at all
        return Verdict(False, f"det(M) = -zeta^{k} is not an even power of zeta")
    if d % 2 == 1:
        return _OK  # k and k+d have opposite parity, so some representative is even
    if k % 2 != 0:
        return Verdict(False, f"det(M) = zeta^{k} with k odd (d even)")
    return _OK


def _scalar_unipotent(m: BlockMat):
    """If M = zeta^k [[Id, B], [0, Id]], return (k, B); else (None, reason)."""
    v = _lower_left_zero(m)
    if not v:
        return None, v.reason
    ul, ur, _, lr = m.blocks()
    ue = unit_exponent(ul[0, 0])
    if ue is None or ue[0] < 0:
        return None, "upper-left block is not zeta^k Id"
    k = ue[1]
    scalar = zeta_pow(m.d, k)
    ident = RingMatrix.identity(m.d, m.n) * scalar
    if ul != ident:
        return None, "upper-left block is not zeta^k Id"
    if lr != ident:
        return None, "lower-right block does not match the upper-left scalar"
    b = ur * zeta_pow(m.d, -k)
    return (k, b), ""


def is_member(m: BlockMat, tag: GroupTag) -> Verdict:
    """Exact membership in the tagged subgroup, with the failing clause."""
    if tag is GroupTag.U:
        return _preserves(m)

    if tag is GroupTag.USharp:
        v = _preserves(m)
        if not v:
            return v
        return _even_det(m)

    if tag is GroupTag.UrU:
        v = _lower_left_zero(m)
        if not v:
            return v
        return _preserves(m)

    if tag is GroupTag.UrUSharp:
        v = is_member(m, GroupTag.UrU)
        if not v:
            return v
        return _even_det(m)

    if tag is GroupTag.UrSpZ:
        if not m.is_integer():
            return Verdict(False, "entries are not rational integers")
        v = _lower_left_zero(m)
        if not v:
            return v
        # conjugation is trivial on integer matrices, so this is M^T Omega M = Omega
        return _preserves(m)

    if tag is GroupTag.Lambda:
        v = _lower_left_zero(m)
        if not v:
            return v
        a, b, _, dd = m.blocks()
        if unit_exponent(dd.det()) is None:
            return Verdict(False, "det(D) is not +-zeta^k")
        if dd.adjoint() * a != RingMatrix.identity(m.d, m.n):
            return Verdict(False, "upper-left block is not (D*)^-1")
        if dd.adjoint() * b != b.adjoint() * dd:
            return Verdict(False, "D*B != B*D")
        return _OK

    if tag is GroupTag.Delta:
        kb, reason = _scalar_unipotent(m)
        if kb is None:
            return Verdict(False, reason)
        _, b = kb
        if b != b.adjoint():
            return Verdict(False, "upper-right block is not self-adjoint")
        return _OK

    if tag is GroupTag.Genus2Theta:
        if m.g != 2:
            return Verdict(False, "matrix is not genus 2")
        return is_member(m, GroupTag.Lambda)

    raise ValueError(f"unknown group tag {tag!r}")


def genus2_theta_project(m: BlockMat):
    """Project a genus-2 Lambda element to (sign, real part), for odd d.

    Scales M by the unique zeta^-k that makes the lower-right entry +-1 and
    returns that sign together with sign * (upper-right entry).  This is a
    homomorphism to Z/2 x (R', +) and kills the scalars zeta^m.
    """
    if m.g != 2:
        raise ValueError("theta projection is defined for genus 2 only")
    if m.d % 2 == 0:
        raise ValueError(
            "theta projection is defined for odd d only (the sign is ambiguous "
            "for even d); use genus2_real_project for the real component"
        )
    v = is_member(m, GroupTag.Lambda)
    if not v:
        raise ValueError(f"matrix is not in Lambda: {v.reason}")
    ue = unit_exponent(m.mat[1, 1])
    assert ue is not None  # guaranteed by the Lambda check at genus 2
    sign, k = ue
    scaled = m * zeta_pow(m.d, -k)
    eps = 1 if sign > 0 else -1
    r = scaled.mat[0, 1]
    if eps < 0:
        r = -r
    return eps, r


def genus2_real_project(m: BlockMat) -> CycInt:
    """The R' component of the genus-2 projection, defined for every d.

    Invariant under the even-d ambiguity zeta^k = -zeta^(k + d/2): flipping the
    representative flips both the sign and the upper-right entry.
    """
    if m.g != 2:
        raise ValueError("projection is defined for genus 2 only")
    v = is_member(m, GroupTag.Lambda)
    if not v:
        raise ValueError(f"matrix is not in Lambda: {v.reason}")
    ue = unit_exponent(m.mat[1, 1])
    assert ue is not None
    sign, k = ue
    scaled = m * zeta_pow(m.d, -k)
    r = scaled.mat[0, 1]
    return -r if sign < 0 else r
