"""Exact dense matrices over Z[zeta_d]: adjoint, product, determinant, the
intersection form and its preservation test.

Vectors are columns and matrices act on the left, so a composition f o g
evaluates as the product M_f * M_g.  BlockMat is the 2(g-1)-square case with
the basis ordered e_1, ..., e_(g-1), e_(-1), ..., e_(-(g-1)); the form is
<u, v> = u^T Omega conj(v), linear in u and conjugate-linear in v, which makes
form preservation literally M* Omega M = Omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import (
    CycInt,
    ParseError,
    _q_from,
    _q_inv,
    _q_is_zero,
    _q_mul,
    _q_sub,
    _q_to_cyc,
    divide_exact,
    euler_phi,
    parse_ring_literal,
    render_poly,
    zero,
)


class RingMatrix:
    """Dense matrix over Z[zeta_d]; immutable after construction."""

    __slots__ = ("d", "rows", "cols", "entries")

    def __init__(self, d, entries):
        entries = tuple(tuple(e for e in row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix dimensions must be positive")
        for row in entries:
            if len(row) != len(entries[0]):
                raise ValueError("ragged rows")
            for e in row:
                if not isinstance(e, CycInt) or e.d != d:
                    raise ValueError("all entries must be CycInt with matching d")
        self.d = d
        self.rows = len(entries)
        self.cols = len(entries[0])
        self.entries = entries

    @classmethod
    def from_rows(cls, d, rows):
        conv = []
        for row in rows:
            conv.append(
                [e if isinstance(e, CycInt) else CycInt.from_int(d, e) for e in row]
            )
        return cls(d, conv)

    @classmethod
    def identity(cls, d, n):
        o = CycInt.from_int(d, 1)
        z = CycInt.from_int(d, 0)
        return cls(d, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, d, rows, cols):
        z = CycInt.from_int(d, 0)
        return cls(d, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, d, columns):
        cols = [list(c) for c in columns]
        return cls.from_rows(d, [[cols[j][i] for j in range(len(cols))]
                                 for i in range(len(cols[0]))])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def is_integer(self):
        return all(e.is_integer() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.d, self.entries) == (other.d, other.entries)

    def __hash__(self):
        return hash((self.d, self.entries))

    def __add__(self, other):
        self._check_same_shape(other)
        return RingMatrix(self.d, [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        self._check_same_shape(other)
        return RingMatrix(self.d, [
            [a - b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        ])

    def __neg__(self):
        return RingMatrix(self.d, [[-a for a in row] for row in self.entries])

    def _check_same_shape(self, other):
        if not isinstance(other, RingMatrix) or other.d != self.d:
            raise ValueError("matrix mismatch")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def scale(self, c):
        if isinstance(c, int):
            c = CycInt.from_int(self.d, c)
        return RingMatrix(self.d, [[c * a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, (int, CycInt)):
            return self.scale(other)
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if other.d != self.d:
            raise ValueError("modulus mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        z = zero(self.d)
        out = []
        for i in range(self.rows):
            row_i = self.entries[i]
            acc = [z] * other.cols
            for k in range(self.cols):
                a = row_i[k]
                if a.is_zero():
                    continue
                orow = other.entries[k]
                if a.is_one():
                    acc = [x + y if not y.is_zero() else x for x, y in zip(acc, orow)]
                else:
                    acc = [x + a * y if not y.is_zero() else x
                           for x, y in zip(acc, orow)]
            out.append(acc)
        return RingMatrix(self.d, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CycInt)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not self.is_square():
            raise ValueError("only square matrices can be raised to powers")
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = RingMatrix.identity(self.d, self.rows)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self):
        return RingMatrix(self.d, [
            [self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)
        ])

    def conj_entries(self):
        return RingMatrix(self.d, [[a.conj() for a in row] for row in self.entries])

    def adjoint(self):
        """Conjugate transpose: (M*)* = M and (MN)* = N* M*."""
        return RingMatrix(self.d, [
            [self.entries[i][j].conj() for i in range(self.rows)]
            for j in range(self.cols)
        ])

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = zero(self.d)
            for j, v in enumerate(vec):
                if not v.is_zero():
                    acc = acc + self.entries[i][j] * v
            out.append(acc)
        return out

    def submatrix(self, row_range, col_range):
        return RingMatrix(self.d, [
            [self.entries[i][j] for j in col_range] for i in row_range
        ])

    def det(self) -> CycInt:
        """Exact determinant by fraction-free (Bareiss) elimination.

        Intermediate divisions happen in Q[x]/Phi_d and are asserted to be
        integral; a failed assertion signals a bug, not bad input.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = CycInt.from_int(self.d, 1)
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return zero(self.d)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = divide_exact(num, prev)
                m[i][k] = zero(self.d)
            prev = m[k][k]
        result = m[n - 1][n - 1]
        return -result if sign < 0 else result

    def det_cofactor(self) -> CycInt:
        """Cofactor-expansion determinant; the oracle route for small sizes."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 1:
            return self.entries[0][0]
        acc = zero(self.d)
        cols = list(range(n))
        for j in range(n):
            a = self.entries[0][j]
            if a.is_zero():
                continue
            minor = self.submatrix(range(1, n), [c for c in cols if c != j])
            term = a * minor.det_cofactor()
            acc = acc + (term if j % 2 == 0 else -term)
        return acc

    def inverse(self) -> "RingMatrix":
        """Exact inverse with entries in Z[zeta_d].

        Gauss-Jordan over Q(zeta); raises ZeroDivisionError if singular and
        ArithmeticError if the inverse exists over Q(zeta) but not over the
        ring (i.e. the determinant is not a unit).
        """
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        d, n = self.d, self.rows
        phi = euler_phi(d)
        qz = (Fraction(0),) * phi
        qone = (Fraction(1),) + (Fraction(0),) * (phi - 1)
        aug = []
        for i in range(n):
            row = [_q_from(e) for e in self.entries[i]]
            row += [qone if i == j else qz for j in range(n)]
            aug.append(row)
        for col in range(n):
            piv = None
            for i in range(col, n):
                if not _q_is_zero(aug[i][col]):
                    piv = i
                    break
            if piv is None:
                raise ZeroDivisionError("matrix is not invertible")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = _q_inv(d, aug[col][col])
            aug[col] = [_q_mul(d, inv, e) for e in aug[col]]
            for i in range(n):
                if i != col and not _q_is_zero(aug[i][col]):
                    f = aug[i][col]
                    aug[i] = [
                        _q_sub(e, _q_mul(d, f, p))
                        for e, p in zip(aug[i], aug[col])
                    ]
        out = []
        for i in range(n):
            out.append([_q_to_cyc(d, aug[i][n + j]) for j in range(n)])
        return RingMatrix(d, out)

    def to_text(self) -> str:
        return " ; ".join(
            ", ".join(render_poly(e.coeffs) for e in row) for row in self.entries
        )

    def __repr__(self):
        return f"RingMatrix({self.d}, '{self.to_text()}')"


def parse_matrix_poly(text: str):
    """Parse matrix text into a grid of integer polynomials (no modulus yet)."""
    rows = []
    for chunk in text.split(";"):
        row = [parse_ring_literal(part) for part in chunk.split(",")]
        rows.append(tuple(row))
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged matrix literal", text, 0)
    return tuple(rows)


def parse_matrix(text: str, d: int) -> RingMatrix:
    """Parse the matrix text format: rows split by ';', ring literals by ','."""
    grid = parse_matrix_poly(text)
    return RingMatrix(d, [[CycInt.from_poly(d, p) for p in row] for row in grid])


@dataclass(frozen=True)
class BlockMat:
    """A 2(g-1)-square matrix with the e_+/e_- block split."""

    mat: RingMatrix
    g: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be >= 2")
        n = 2 * (self.g - 1)
        if self.mat.rows != n or self.mat.cols != n:
            raise ValueError(
                f"matrix size {self.mat.rows}x{self.mat.cols} does not match genus {self.g}"
            )

    @property
    def d(self):
        return self.mat.d

    @property
    def n(self):
        """Block size g - 1."""
        return self.g - 1

    @classmethod
    def identity(cls, d, g):
        return cls(RingMatrix.identity(d, 2 * (g - 1)), g)

    @classmethod
    def from_blocks(cls, g, upper_left, upper_right, lower_left, lower_right):
        n = g - 1
        d = upper_left.d
        rows = []
        for i in range(n):
            rows.append(list(upper_left.entries[i]) + list(upper_right.entries[i]))
        for i in range(n):
            rows.append(list(lower_left.entries[i]) + list(lower_right.entries[i]))
        return cls(RingMatrix(d, rows), g)

    def blocks(self):
        n = self.n
        r1, r2 = range(n), range(n, 2 * n)
        m = self.mat
        return (m.submatrix(r1, r1), m.submatrix(r1, r2),
                m.submatrix(r2, r1), m.submatrix(r2, r2))

    def upper_left(self):
        return self.blocks()[0]

    def upper_right(self):
        return self.blocks()[1]

    def lower_left(self):
        return self.blocks()[2]

    def lower_right(self):
        return self.blocks()[3]

    def __mul__(self, other):
        if isinstance(other, BlockMat):
            if other.g != self.g:
                raise ValueError("genus mismatch")
            return BlockMat(self.mat * other.mat, self.g)
        if isinstance(other, (int, CycInt)):
            return BlockMat(self.mat * other, self.g)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CycInt)):
            return BlockMat(self.mat * other, self.g)
        return NotImplemented

    def __pow__(self, e: int):
        return BlockMat(self.mat ** e, self.g)

    def inverse(self):
        return BlockMat(self.mat.inverse(), self.g)

    def adjoint(self):
        return BlockMat(self.mat.adjoint(), self.g)

    def det(self):
        return self.mat.det()

    def is_integer(self):
        return self.mat.is_integer()

    def to_text(self):
        return self.mat.to_text()

    def __repr__(self):
        return f"BlockMat(g={self.g}, d={self.d}, '{self.to_text()}')"


def omega(g: int, d: int) -> BlockMat:
    """The form matrix [[0, Id], [-Id, 0]] with (g-1)-square blocks."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    n = g - 1
    o = CycInt.from_int(d, 1)
    z = CycInt.from_int(d, 0)
    rows = []
    for i in range(n):
        rows.append([z] * n + [o if j == i else z for j in range(n)])
    for i in range(n):
        rows.append([-o if j == i else z for j in range(n)] + [z] * n)
    return BlockMat(RingMatrix(d, rows), g)


def signed_indices(g: int):
    """Basis order: e_1, ..., e_(g-1), e_(-1), ..., e_(-(g-1))."""
    return list(range(1, g)) + [-i for i in range(1, g)]


def basis_position(g: int, i: int) -> int:
    if i == 0 or abs(i) > g - 1:
        raise ValueError(f"index {i} out of range for genus {g}")
    return i - 1 if i > 0 else (g - 1) + (-i) - 1


def basis_vector(d: int, g: int, i: int):
    vec = [zero(d)] * (2 * (g - 1))
    vec[basis_position(g, i)] = CycInt.from_int(d, 1)
    return vec


def form_eval(u, v, g: int) -> CycInt:
    """The intersection form <u, v> = u^T Omega conj(v); <e_i, e_-i> = 1."""
    n = g - 1
    if len(u) != 2 * n or len(v) != 2 * n:
        raise ValueError("vector length must be 2(g-1)")
    d = u[0].d
    acc = zero(d)
    for i in range(n):
        if not u[i].is_zero() and not v[n + i].is_zero():
            acc = acc + u[i] * v[n + i].conj()
        if not u[n + i].is_zero() and not v[i].is_zero():
            acc = acc - u[n + i] * v[i].conj()
    return acc


def preserves_form(m: BlockMat) -> bool:
    """True iff M* Omega M = Omega exactly."""
    om = omega(m.g, m.d)
    return m.mat.adjoint() * om.mat * m.mat == om.mat
