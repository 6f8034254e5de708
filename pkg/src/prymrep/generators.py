"""The catalogue of explicit matrices known to lie in the image groups:
elementary transvections, the diagonal map T, the conjugators A_H and A_H',
their conjugates T_H and T_H', lifted-twist transvections, deck scalars, and
the embedding of integer upper-block symplectic matrices.

All constructors assemble the matrix column by column from the defining
action on basis vectors, so the sign bookkeeping of the form convention is
applied in exactly one place (form_eval).  With that convention the forward
twist transvection x -> x + <x, v>v has upper-right block -vv* for v in the
meridian span, and its inverse has +vv*.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, one, zero, zeta_pow
from .predicates import GroupTag, is_member
from .ringlinalg import (
    BlockMat,
    RingMatrix,
    basis_vector,
    form_eval,
    signed_indices,
)


def _check_index(g, i):
    if i == 0 or abs(i) > g - 1:
        raise ValueError(f"index {i} out of range for genus {g}")


def _from_images(d, g, images):
    """BlockMat whose column for basis vector e_i is images[i]."""
    cols = [images[i] for i in signed_indices(g)]
    return BlockMat(RingMatrix.from_columns(d, cols), g)


def _vector_map(d, g, fn):
    """Apply fn to each basis vector and assemble the matrix."""
    images = {}
    for i in signed_indices(g):
        images[i] = fn(basis_vector(d, g, i))
    return _from_images(d, g, images)


def _vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def _vec_scale(c, v):
    return [c * a for a in v]


def elem_Ti(g: int, d: int, i: int, rprime: CycInt) -> BlockMat:
    """T_i(r'): x -> x + r' <x, e_i> e_i, for real r'."""
    _check_index(g, i)
    if not isinstance(rprime, CycInt):
        rprime = CycInt.from_int(d, rprime)
    if not rprime.is_real():
        raise ValueError("Ti requires a real ring element r'")
    ei = basis_vector(d, g, i)

    def image(x):
        return _vec_add(x, _vec_scale(rprime * form_eval(x, ei, g), ei))

    return _vector_map(d, g, image)


def elem_Tij(g: int, d: int, i: int, j: int, r: CycInt) -> BlockMat:
    """T_{i,j}(r): x -> x + r <x, e_i> e_j + conj(r) <x, e_j> e_i."""
    _check_index(g, i)
    _check_index(g, j)
    if abs(i) == abs(j):
        raise ValueError("Tij requires |i| != |j|")
    if not isinstance(r, CycInt):
        r = CycInt.from_int(d, r)
    rbar = r.conj()
    ei = basis_vector(d, g, i)
    ej = basis_vector(d, g, j)

    def image(x):
        out = _vec_add(x, _vec_scale(r * form_eval(x, ei, g), ej))
        return _vec_add(out, _vec_scale(rbar * form_eval(x, ej, g), ei))

    return _vector_map(d, g, image)


def big_T(g: int, d: int) -> BlockMat:
    """Multiplication by zeta on <e_1, e_-1>, identity elsewhere."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    z = zeta_pow(d, 1)
    images = {}
    for i in signed_indices(g):
        e = basis_vector(d, g, i)
        images[i] = _vec_scale(z, e) if abs(i) == 1 else e
    return _from_images(d, g, images)


def conj_AH(g: int, d: int, i: int) -> BlockMat:
    """The swap of <e_i, e_-i> with <e_1, e_-1>; integer symplectic."""
    if i <= 0:
        raise ValueError("AH requires a positive index")
    _check_index(g, i)
    images = {}
    for k in signed_indices(g):
        if abs(k) == i:
            images[k] = basis_vector(d, g, (1 if k > 0 else -1))
        elif abs(k) == 1:
            images[k] = basis_vector(d, g, (i if k > 0 else -i))
        else:
            images[k] = basis_vector(d, g, k)
    return _from_images(d, g, images)


def conj_AHPrime(g: int, d: int, i: int, j: int) -> BlockMat:
    """The transformation carrying H' = <e_i, e_-i + e_j> to <e_1, e_-1>.

    Start from the swap S of <e_1, e_-1> with <e_i, e_-i> and correct two
    images: e_-i goes to e_-1 - S(e_j) (so that e_-i + e_j lands on e_-1) and
    the dual partner e_-j goes to S(e_-j) - sgn(j) e_1, the sign being forced
    by form preservation.  For j > 0 and for j = 1 this reproduces the
    classical case formulas; for negative j the sign flip is what keeps the
    map symplectic.
    """
    if i <= 0:
        raise ValueError("AHPrime requires a positive index i")
    _check_index(g, i)
    _check_index(g, j)
    if abs(j) == abs(i):
        raise ValueError("AHPrime requires |j| != |i|")

    def swap(k):
        if abs(k) == 1:
            return i if k > 0 else -i
        if abs(k) == i:
            return 1 if k > 0 else -1
        return k

    def e(k):
        return basis_vector(d, g, k)

    images = {k: e(swap(k)) for k in signed_indices(g)}
    images[-i] = _vec_add(e(-1), _vec_scale(-one(d), e(swap(j))))
    sgn = one(d) if j > 0 else -one(d)
    images[-j] = _vec_add(e(swap(-j)), _vec_scale(-sgn, e(1)))
    return _from_images(d, g, images)


def TH(g: int, d: int, i: int) -> BlockMat:
    """T_H = A_H^-1 T A_H: multiplication by zeta on <e_i, e_-i>."""
    ah = conj_AH(g, d, i)
    return BlockMat(ah.mat.inverse() * big_T(g, d).mat * ah.mat, g)


def THPrime(g: int, d: int, i: int, j: int) -> BlockMat:
    """T_H' = A_H'^-1 T A_H': multiplication by zeta on <e_i, e_-i + e_j>."""
    ahp = conj_AHPrime(g, d, i, j)
    return BlockMat(ahp.mat.inverse() * big_T(g, d).mat * ahp.mat, g)


def transvection(g: int, d: int, v, direction: int = 1) -> BlockMat:
    """x -> x + <x, v>v (direction +1) or x -> x - <x, v>v (direction -1),
    for any vector v of length 2(g-1)."""
    if len(v) != 2 * (g - 1):
        raise ValueError("vector length must be 2(g-1)")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")

    def image(x):
        c = form_eval(x, v, g)
        if direction < 0:
            c = -c
        return _vec_add(x, _vec_scale(c, v))

    return _vector_map(d, g, image)


def twist_transvection(g: int, d: int, v, direction: int = 1) -> BlockMat:
    """The lifted-twist transvection for v in the meridian span <e_1..e_(g-1)>.

    Accepts v of length g-1 (coordinates on e_1..e_(g-1)) or of full length
    2(g-1) with vanishing e_- part.  The forward map has upper-right block
    -vv*; direction=-1 gives the inverse twist with block +vv*.
    """
    n = g - 1
    v = list(v)
    if len(v) == n:
        v = v + [zero(d)] * n
    if len(v) != 2 * n:
        raise ValueError("vector length must be g-1 or 2(g-1)")
    if any(not c.is_zero() for c in v[n:]):
        raise ValueError("twist vector must be supported on e_1..e_(g-1)")
    return transvection(g, d, v, direction)


def twist_E(g: int, d: int, i: int) -> BlockMat:
    """The lifted twist about the i-th meridian: v = e_i."""
    if i <= 0:
        raise ValueError("twist_E requires a positive index")
    _check_index(g, i)
    return twist_transvection(g, d, basis_vector(d, g, i))


def gamma_ik(g: int, d: int, i: int, k: int) -> BlockMat:
    """The lifted twist with homology class (1 - zeta^k) e_i."""
    if i <= 0:
        raise ValueError("gamma_ik requires a positive index")
    _check_index(g, i)
    c = one(d) - zeta_pow(d, k)
    return twist_transvection(g, d, _vec_scale(c, basis_vector(d, g, i)))


def gamma_ijk(g: int, d: int, i: int, j: int, k: int) -> BlockMat:
    """The lifted twist with homology class e_i - zeta^k e_j."""
    if i <= 0 or j <= 0:
        raise ValueError("gamma_ijk requires positive indices")
    if i == j:
        raise ValueError("gamma_ijk requires i != j")
    _check_index(g, i)
    _check_index(g, j)
    v = _vec_add(
        basis_vector(d, g, i),
        _vec_scale(-zeta_pow(d, k), basis_vector(d, g, j)),
    )
    return twist_transvection(g, d, v)


def delta_g1(g: int, d: int, i: int) -> BlockMat:
    """Inverse twist about the i-th meridian; upper-right block E_ii."""
    if i <= 0:
        raise ValueError("G1 requires a positive index")
    _check_index(g, i)
    return twist_transvection(g, d, basis_vector(d, g, i), direction=-1)


def delta_g2(g: int, d: int, i: int, k: int) -> BlockMat:
    """Lift of T_gamma(i,k) composed with two inverse twists about E_i;
    upper-right block (zeta^k + zeta^-k) E_ii."""
    return gamma_ik(g, d, i, k) * delta_g1(g, d, i) * delta_g1(g, d, i)


def delta_g3(g: int, d: int, i: int, j: int, k: int) -> BlockMat:
    """Lift of T_gamma(i,j,k) composed with inverse twists about E_i and E_j;
    upper-right block zeta^k E_ji + zeta^-k E_ij."""
    return gamma_ijk(g, d, i, j, k) * delta_g1(g, d, i) * delta_g1(g, d, j)


def scalar_zeta(g: int, d: int, k: int) -> BlockMat:
    """The deck scalar zeta^k Id."""
    return BlockMat(RingMatrix.identity(d, 2 * (g - 1)) * zeta_pow(d, k), g)


def embed_ursp(m: BlockMat) -> BlockMat:
    """Check an integer matrix against the urSp predicate and admit it."""
    v = is_member(m, GroupTag.UrSpZ)
    if not v:
        raise ValueError(f"matrix is not in urSp_2(g-1)(Z): {v.reason}")
    return m


# ---------------------------------------------------------------------------
# GenSpec: the tagged union of catalogue generator names, shared with the
# word language.  Ring arguments are stored as raw integer polynomials so a
# parsed word stays independent of the ambient modulus until evaluation.

_ARITY = {
    # name: (number of integer arguments, takes ring scalar, takes matrix)
    "T": (0, False, False),
    "Ti": (1, True, False),
    "Tij": (2, True, False),
    "AH": (1, False, False),
    "AHPrime": (2, False, False),
    "TH": (1, False, False),
    "THPrime": (2, False, False),
    "TwistE": (1, False, False),
    "GammaIK": (2, False, False),
    "GammaIJK": (3, False, False),
    "Zeta": (1, False, False),
    "UrSp": (0, False, True),
    "G1": (1, False, False),
    "G2": (2, False, False),
    "G3": (3, False, False),
}

GENERATOR_NAMES = tuple(sorted(_ARITY))


@dataclass(frozen=True)
class GenSpec:
    """One named generator with its arguments; evaluation happens later."""

    name: str
    indices: tuple = ()
    scalar: tuple = None  # integer polynomial, constant term first
    matrix: tuple = None  # grid of integer polynomials (UrSp literal)

    def __post_init__(self):
        if self.name not in _ARITY:
            raise ValueError(f"unknown generator name {self.name!r}")
        n_idx, has_scalar, has_matrix = _ARITY[self.name]
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        if len(idx) != n_idx:
            raise ValueError(
                f"{self.name} takes {n_idx} integer argument(s), got {len(idx)}"
            )
        if has_scalar != (self.scalar is not None):
            raise ValueError(
                f"{self.name} {'requires' if has_scalar else 'does not take'} a ring argument"
            )
        if has_matrix != (self.matrix is not None):
            raise ValueError(
                f"{self.name} {'requires' if has_matrix else 'does not take'} a matrix argument"
            )
        def canon(poly):
            poly = [int(c) for c in poly]
            while len(poly) > 1 and poly[-1] == 0:
                poly.pop()
            return tuple(poly) if poly else (0,)

        if self.scalar is not None:
            object.__setattr__(self, "scalar", canon(self.scalar))
        if self.matrix is not None:
            object.__setattr__(
                self,
                "matrix",
                tuple(tuple(canon(p) for p in row) for row in self.matrix),
            )
        # static invariants that do not need d or g
        name, ix = self.name, idx
        if name in ("Ti", "AH", "TH", "TwistE") and ix[0] == 0:
            raise ValueError(f"{name} index must be nonzero")
        if name in ("AH", "TwistE") and ix[0] < 0:
            raise ValueError(f"{name} requires a positive index")
        if name in ("Tij", "AHPrime", "THPrime") and abs(ix[0]) == abs(ix[1]):
            raise ValueError(f"{name} requires |i| != |j|")
        if name in ("AHPrime", "THPrime") and ix[0] <= 0:
            raise ValueError(f"{name} requires a positive index i")
        if name in ("GammaIK", "G2") and ix[0] <= 0:
            raise ValueError(f"{name} requires a positive index i")
        if name in ("GammaIJK", "G3"):
            if ix[0] <= 0 or ix[1] <= 0:
                raise ValueError(f"{name} requires positive indices i, j")
            if ix[0] == ix[1]:
                raise ValueError(f"{name} requires i != j")
        if name == "G1" and ix[0] <= 0:
            raise ValueError("G1 requires a positive index")


def matrix_of(spec: GenSpec, d: int, g: int) -> BlockMat:
    """Evaluate a generator spec to its matrix for the ambient (d, g)."""
    name, ix = spec.name, spec.indices
    if name == "T":
        return big_T(g, d)
    if name == "Ti":
        return elem_Ti(g, d, ix[0], CycInt.from_poly(d, spec.scalar))
    if name == "Tij":
        return elem_Tij(g, d, ix[0], ix[1], CycInt.from_poly(d, spec.scalar))
    if name == "AH":
        return conj_AH(g, d, ix[0])
    if name == "AHPrime":
        return conj_AHPrime(g, d, ix[0], ix[1])
    if name == "TH":
        return TH(g, d, ix[0])
    if name == "THPrime":
        return THPrime(g, d, ix[0], ix[1])
    if name == "TwistE":
        return twist_E(g, d, ix[0])
    if name == "GammaIK":
        return gamma_ik(g, d, ix[0], ix[1])
    if name == "GammaIJK":
        return gamma_ijk(g, d, ix[0], ix[1], ix[2])
    if name == "Zeta":
        return scalar_zeta(g, d, ix[0])
    if name == "UrSp":
        n = 2 * (g - 1)
        if len(spec.matrix) != n or any(len(r) != n for r in spec.matrix):
            raise ValueError(f"UrSp literal must be {n}x{n} for genus {g}")
        mat = RingMatrix(
            d, [[CycInt.from_poly(d, p) for p in row] for row in spec.matrix]
        )
        return embed_ursp(BlockMat(mat, g))
    if name == "G1":
        return delta_g1(g, d, ix[0])
    if name == "G2":
        return delta_g2(g, d, ix[0], ix[1])
    if name == "G3":
        return delta_g3(g, d, ix[0], ix[1], ix[2])
    raise ValueError(f"unknown generator name {name!r}")
