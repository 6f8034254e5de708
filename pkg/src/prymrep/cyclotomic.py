"""Exact arithmetic in Z[zeta_d], the ring of integers of the d-th cyclotomic field.

Elements live in the power basis 1, zeta, ..., zeta^(phi(d)-1), reduced modulo
the d-th cyclotomic polynomial Phi_d, so the representation is canonical and
ring equality is literal tuple equality.  Coefficients are arbitrary-precision
Python integers; nothing in this module touches floating point.

The module also owns the ring-literal text grammar shared by the whole
package: integer polynomials in the symbol ``z`` (for example ``1 - z^3 +
2*z``), whitespace insignificant, reduced modulo Phi_d on parsing.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


class ParseError(ValueError):
    """Syntax error in a text input; carries the offending position."""

    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


@lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_monic(num, den):
    """Divide integer polynomials, den monic.  Returns (quotient, remainder)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for j, y in enumerate(den):
                num[k + j] -= c * y
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients of Phi_d, constant term first, monic of degree phi(d)."""
    num = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_poly(e))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(d: int) -> tuple[tuple[int, ...], ...]:
    """x^m mod Phi_d for m = 0 .. max(d-1, 2*phi(d)-2), rows of length phi(d)."""
    phi = euler_phi(d)
    mod = cyclotomic_poly(d)
    top = max(d - 1, 2 * phi - 2)
    rows = []
    cur = [1] + [0] * (phi - 1)
    rows.append(tuple(cur))
    for _ in range(top):
        lead = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if lead:
            for j in range(phi):
                nxt[j] -= lead * mod[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_poly(d, coeffs):
    """Reduce an integer polynomial (constant first, any degree) mod Phi_d."""
    phi = euler_phi(d)
    table = _power_table(d)
    out = [0] * phi
    for m, c in enumerate(coeffs):
        if not c:
            continue
        if m < phi:
            out[m] += c
        else:
            # Phi_d divides x^d - 1, so x^m = x^(m mod d) in the quotient.
            row = table[m] if m < len(table) else table[m % d]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


class CycInt:
    """An element of Z[zeta_d]; ``coeffs[m]`` is the coefficient of zeta^m."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs):
        if d < 2:
            raise ValueError("modulus d must be >= 2")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != euler_phi(d):
            raise ValueError(
                f"need {euler_phi(d)} coefficients for d={d}, got {len(coeffs)}"
            )
        self.d = d
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, d, coeffs):
        """Build from an integer polynomial in zeta of any degree."""
        c = cls.__new__(cls)
        if d < 2:
            raise ValueError("modulus d must be >= 2")
        c.d = d
        c.coeffs = _reduce_poly(d, tuple(coeffs))
        return c

    @classmethod
    def from_int(cls, d, n):
        return cls.from_poly(d, (n,))

    @classmethod
    def from_literal(cls, d, text):
        return cls.from_poly(d, parse_ring_literal(text))

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.d != self.d:
                raise ValueError(f"modulus mismatch: d={self.d} vs d={other.d}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.d, other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.d, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.d, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycInt(self.d, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not any(a) or not any(b):
            return CycInt(self.d, (0,) * len(a))
        phi = len(a)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        table = _power_table(self.d)
        for m in range(phi, 2 * phi - 1):
            c = conv[m]
            if c:
                row = table[m]
                for j in range(phi):
                    out[j] += c * row[j]
        return CycInt(self.d, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = CycInt.from_int(self.d, 1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (CycInt, int)) else None
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.d}, {self.literal()!r})"

    def conj(self) -> "CycInt":
        """Complex conjugation, the involution zeta -> zeta^(d-1)."""
        table = _power_table(self.d)
        phi = len(self.coeffs)
        out = [0] * phi
        for m, c in enumerate(self.coeffs):
            if c:
                row = table[(self.d - m) % self.d]
                for j in range(phi):
                    out[j] += c * row[j]
        return CycInt(self.d, tuple(out))

    def is_real(self) -> bool:
        return self.conj() == self

    def inverse(self) -> "CycInt":
        """Exact inverse in Z[zeta_d]; raises if self is not a unit."""
        ue = unit_exponent(self)
        if ue is not None:
            s, k = ue
            inv = zeta_pow(self.d, -k)
            return -inv if s < 0 else inv
        q = _q_inv(self.d, _q_from(self))
        try:
            return _q_to_cyc(self.d, q)
        except ArithmeticError:
            raise ValueError(f"{self!r} is not a unit in Z[zeta_{self.d}]") from None

    def literal(self) -> str:
        return render_poly(self.coeffs)


def zeta_pow(d: int, k: int) -> CycInt:
    """The canonical representative of zeta_d^k."""
    if d < 2:
        raise ValueError("modulus d must be >= 2")
    return CycInt(d, _power_table(d)[k % d])


def one(d: int) -> CycInt:
    return CycInt.from_int(d, 1)


def zero(d: int) -> CycInt:
    return CycInt.from_int(d, 0)


def conj(a: CycInt) -> CycInt:
    return a.conj()


def is_real(a: CycInt) -> bool:
    return a.is_real()


def unit_exponent(a: CycInt):
    """Return (sign, k) with a = sign * zeta^k, or None.

    Decided by comparison against all 2d candidates; for even d the +1
    representation is preferred (so -zeta^k reports as +zeta^(k + d/2)).
    """
    table = _power_table(a.d)
    for k in range(a.d):
        if a.coeffs == table[k]:
            return (1, k)
    for k in range(a.d):
        if all(x == -y for x, y in zip(a.coeffs, table[k])):
            return (-1, k)
    return None


def real_basis_columns(d: int):
    """The redundant spanning set {1} u {zeta^k + zeta^-k : 1 <= k <= d-1} of R',
    as coefficient vectors in the power basis."""
    cols = [list(_power_table(d)[0])]
    for k in range(1, d):
        a = zeta_pow(d, k) + zeta_pow(d, -k)
        cols.append(list(a.coeffs))
    return cols


def solve_real_basis(r: CycInt):
    """Write the real element r as n0*1 + sum_k n_k*(zeta^k + zeta^-k).

    Returns (n0, nk) with nk indexed by k = 1..d-1.  The spanning set is
    redundant, so the certificate is not unique; a failure to solve signals
    an arithmetic bug and raises ArithmeticError.
    """
    if not r.is_real():
        raise ValueError("solve_real_basis requires a real element")
    cols = real_basis_columns(r.d)
    sol = _solve_integer_columns(cols, list(r.coeffs))
    if sol is None:
        raise ArithmeticError(
            f"no integer solution for real element {r!r}; this should be impossible"
        )
    return sol[0], tuple(sol[1:])


def eval_real_basis(d: int, n0: int, nk) -> CycInt:
    """Reconstruct n0*1 + sum_k nk[k-1]*(zeta^k + zeta^-k)."""
    acc = CycInt.from_int(d, n0)
    for k, n in enumerate(nk, start=1):
        if n:
            acc = acc + (zeta_pow(d, k) + zeta_pow(d, -k)) * n
    return acc


def _solve_integer_columns(cols, b):
    """Solve sum_j x_j*cols[j] = b over the integers, or return None.

    Column-operation Hermite reduction with a tracked unimodular transform.
    """
    n = len(cols)
    m = len(b)
    work = [list(c) for c in cols]
    unim = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # unim[j] = column j
    pivots = []
    p = 0
    for r in range(m):
        while True:
            nz = [c for c in range(p, n) if work[c][r] != 0]
            if len(nz) <= 1:
                break
            c0 = min(nz, key=lambda c: abs(work[c][r]))
            for c in nz:
                if c == c0:
                    continue
                q = work[c][r] // work[c0][r]
                if q:
                    for i in range(m):
                        work[c][i] -= q * work[c0][i]
                    for i in range(n):
                        unim[c][i] -= q * unim[c0][i]
        nz = [c for c in range(p, n) if work[c][r] != 0]
        if nz:
            c0 = nz[0]
            work[p], work[c0] = work[c0], work[p]
            unim[p], unim[c0] = unim[c0], unim[p]
            if work[p][r] < 0:
                work[p] = [-x for x in work[p]]
                unim[p] = [-x for x in unim[p]]
            pivots.append((r, p))
            p += 1
    residual = list(b)
    y = [0] * n
    for r, c in pivots:
        if residual[r] % work[c][r] != 0:
            return None
        q = residual[r] // work[c][r]
        y[c] = q
        if q:
            for i in range(m):
                residual[i] -= q * work[c][i]
    if any(residual):
        return None
    x = [0] * n
    for c in range(n):
        if y[c]:
            for i in range(n):
                x[i] += y[c] * unim[c][i]
    return x


# ---------------------------------------------------------------------------
# Rational helpers: arithmetic in Q(zeta) = Q[x]/Phi_d, used for exact
# division (determinants, inverses) with an integrality check on the way out.

def _q_from(a: CycInt):
    return tuple(Fraction(c) for c in a.coeffs)


def _q_zero(d):
    return (Fraction(0),) * euler_phi(d)


def _q_is_zero(q):
    return not any(q)


def _q_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _q_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _q_mul(d, x, y):
    phi = len(x)
    conv = [Fraction(0)] * (2 * phi - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    conv[i + j] += a * b
    out = conv[:phi]
    table = _power_table(d)
    for m in range(phi, 2 * phi - 1):
        c = conv[m]
        if c:
            row = table[m]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


def _qpoly_divmod(num, den):
    num = list(num)
    dlead = den[-1]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / dlead
        if c:
            q[k] = c
            for j, y in enumerate(den):
                num[k + j] -= c * y
    while num and not num[-1]:
        num.pop()
    return q, num


def _q_inv(d, x):
    """Inverse in Q[x]/Phi_d via the extended Euclidean algorithm."""
    if _q_is_zero(x):
        raise ZeroDivisionError("division by zero in Q(zeta)")
    phi_poly = [Fraction(c) for c in cyclotomic_poly(d)]
    a = [Fraction(c) for c in x]
    while a and not a[-1]:
        a.pop()
    # extended gcd of a and Phi_d, tracking only the coefficient of a
    r0, r1 = phi_poly, a
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r2 = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    # r0 = gcd, must be a nonzero constant since Phi_d is irreducible
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor mod Phi_d (impossible)")
    c = r0[0]
    inv = [v / c for v in s0]
    phi = euler_phi(d)
    _, rem = _qpoly_divmod(inv, phi_poly) if len(inv) >= len(phi_poly) else (None, inv)
    out = list(rem) + [Fraction(0)] * (phi - len(rem))
    return tuple(out[:phi])


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _qpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    while out and not out[-1]:
        out.pop()
    return out


def _q_to_cyc(d, q) -> CycInt:
    """Convert back to Z[zeta_d]; ArithmeticError if any denominator survives."""
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("element of Q(zeta) is not integral")
    return CycInt(d, tuple(int(c) for c in q))


def divide_exact(a: CycInt, b: CycInt) -> CycInt:
    """a / b when the quotient lies in Z[zeta_d]; ArithmeticError otherwise."""
    if a.d != b.d:
        raise ValueError("modulus mismatch")
    q = _q_mul(a.d, _q_from(a), _q_inv(a.d, _q_from(b)))
    return _q_to_cyc(a.d, q)


# ---------------------------------------------------------------------------
# Ring-literal grammar: integer polynomials in `z`, e.g. "1 - z^3 + 2*z".

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<z>z)|(?P<sym>[-+*^]))")


def parse_ring_literal(text: str) -> tuple[int, ...]:
    """Parse to an integer polynomial (constant term first), unreduced."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character in ring literal", text, pos)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "z":
            tokens.append(("z", "z", m.start("z")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()

    coeffs = {}
    i = 0
    first = True

    def peek():
        return tokens[i] if i < len(tokens) else None

    while True:
        tok = peek()
        if tok is None:
            if first:
                raise ParseError("empty ring literal", text, 0)
            break
        sign = 1
        if tok[0] == "sym" and tok[1] in "+-":
            if tok[1] == "-":
                sign = -1
            i += 1
            tok = peek()
            if tok is None:
                raise ParseError("dangling sign in ring literal", text, len(text))
        elif not first:
            raise ParseError("expected '+' or '-' between terms", text, tok[2])
        # term: INT [ '*'? z [^ INT] ]  |  z [^ INT]
        coeff = 1
        has_coeff = False
        if tok[0] == "int":
            coeff = tok[1]
            has_coeff = True
            i += 1
            tok = peek()
            if tok is not None and tok[0] == "sym" and tok[1] == "*":
                i += 1
                tok = peek()
                if tok is None or tok[0] != "z":
                    p = tok[2] if tok else len(text)
                    raise ParseError("expected 'z' after '*'", text, p)
        exp = 0
        if tok is not None and tok[0] == "z":
            exp = 1
            i += 1
            tok = peek()
            if tok is not None and tok[0] == "sym" and tok[1] == "^":
                i += 1
                tok = peek()
                if tok is None or tok[0] != "int":
                    p = tok[2] if tok else len(text)
                    raise ParseError("expected integer exponent after '^'", text, p)
                exp = tok[1]
                i += 1
        elif not has_coeff:
            raise ParseError("expected integer or 'z'", text, tok[2])
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        first = False

    top = max(coeffs) if coeffs else 0
    out = [0] * (top + 1)
    for e, c in coeffs.items():
        out[e] = c
    while out and out[-1] == 0 and len(out) > 1:
        out.pop()
    return tuple(out)


def render_poly(coeffs) -> str:
    """Render an integer polynomial in z; inverse of parse_ring_literal on
    canonical forms."""
    parts = []
    for m, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if m == 0:
            body = str(mag)
        elif m == 1:
            body = "z" if mag == 1 else f"{mag}*z"
        else:
            body = f"z^{m}" if mag == 1 else f"{mag}*z^{m}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts) if parts else "0"
