"""Independent oracle for the lower-right block: the action of free-group
automorphisms on the homology of the d-fold cyclic covering graph, computed
twice.

The covering graph of the wedge of g loops (x_g mapping to the generator of
Z/d, the others to 0) has d vertices in a cycle of x_g-edges; each x_i with
i < g lifts to a loop at every vertex.  The spanning tree is the x_g-edges
from sheets 0..d-2, so a closed walk is classified by its signed loop counts
per sheet plus one winding number lambda for the remaining x_g-edge.

Dropping lambda and sending loop(i, c) to zeta^c e_i gives the matrix of the
induced action on R^(g-1).  The same matrix also falls out of Fox calculus:
entry (i, j) is eps(d phi(x_j) / d x_i), where eps kills x_1..x_(g-1) and
sends x_g to zeta.  Frozen convention (checked empirically against the chain
route on the Nielsen generators, then pinned by the test suite): no
transpose, and eta(phi o psi) = eta(phi) * eta(psi) for (phi o psi)(x) =
phi(psi(x)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cyclotomic import CycInt, zero, zeta_pow
from .predicates import Verdict
from .ringlinalg import RingMatrix

# A free word is a tuple of nonzero signed letters: +i for x_i, -i for x_i^-1.
FreeWord = tuple


def free_reduce(letters) -> FreeWord:
    out = []
    for s in letters:
        if s == 0:
            raise ValueError("letter 0 is not a generator")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def word_mul(*words) -> FreeWord:
    out = []
    for w in words:
        for s in w:
            if out and out[-1] == -s:
                out.pop()
            else:
                out.append(s)
    return tuple(out)


def word_inv(w) -> FreeWord:
    return tuple(-s for s in reversed(w))


def word_pow(w, e: int) -> FreeWord:
    if e < 0:
        w, e = word_inv(w), -e
    out = ()
    for _ in range(e):
        out = word_mul(out, w)
    return out


def exponent_sum(w, i: int) -> int:
    return sum(1 if s == i else -1 if s == -i else 0 for s in w)


@dataclass(frozen=True)
class Endo:
    """A free-group endomorphism by generator images, with an inverse
    certificate: composing images with inverse_images must reduce to the
    identity, which certifies an automorphism (free groups are Hopfian)."""

    images: tuple
    inverse_images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(w) for w in self.images))
        object.__setattr__(
            self, "inverse_images", tuple(tuple(w) for w in self.inverse_images)
        )
        if len(self.images) != len(self.inverse_images):
            raise ValueError("images and inverse_images must have equal length")

    @property
    def g(self):
        return len(self.images)

    @staticmethod
    def identity(g: int) -> "Endo":
        gens = tuple((i,) for i in range(1, g + 1))
        return Endo(gens, gens)

    def apply(self, w) -> FreeWord:
        out = []
        for s in w:
            img = self.images[abs(s) - 1]
            seq = img if s > 0 else word_inv(img)
            for t in seq:
                if out and out[-1] == -t:
                    out.pop()
                else:
                    out.append(t)
        return tuple(out)

    def compose(self, other: "Endo") -> "Endo":
        """self o other: apply other first, then self."""
        if self.g != other.g:
            raise ValueError("rank mismatch")
        images = tuple(self.apply(w) for w in other.images)
        inv = tuple(
            Endo(other.inverse_images, other.images).apply(w)
            for w in self.inverse_images
        )
        return Endo(images, inv)

    def inverse(self) -> "Endo":
        return Endo(self.inverse_images, self.images)


def check_member(phi: Endo, d: int) -> Verdict:
    """Is phi in the group of automorphisms preserving ker(F_g -> Z/d) and
    inducing the identity on the quotient?"""
    g = phi.g
    for i in range(1, g + 1):
        if phi.apply(phi.inverse_images[i - 1]) != (i,):
            return Verdict(
                False,
                f"inverse certificate fails: phi(psi(x{i})) does not reduce to x{i}",
            )
    for i in range(1, g):
        e = exponent_sum(phi.images[i - 1], g)
        if e % d != 0:
            return Verdict(
                False,
                f"x{g}-exponent of phi(x{i}) is {e}, not 0 mod {d}",
            )
    e = exponent_sum(phi.images[g - 1], g)
    if e % d != 1 % d:
        return Verdict(
            False, f"x{g}-exponent of phi(x{g}) is {e}, not 1 mod {d}"
        )
    return Verdict(True)


@dataclass(frozen=True)
class CoverClass:
    """Homology class in the covering graph: loop coefficients indexed by
    (generator i < g, sheet c in Z/d), plus the winding number lambda."""

    loops: tuple  # (g-1) rows of length d
    lam: int


def lift_class(w, d: int, g: int) -> CoverClass:
    """Path-lift a closed word from sheet 0 and read off its homology class."""
    if exponent_sum(w, g) % d != 0:
        raise ValueError(
            f"word does not lift to a closed path: x{g}-exponent not 0 mod {d}"
        )
    loops = [[0] * d for _ in range(g - 1)]
    lam = 0
    sheet = 0
    for s in w:
        if abs(s) == g:
            if s > 0:
                if sheet == d - 1:
                    lam += 1
                sheet = (sheet + 1) % d
            else:
                if sheet == 0:
                    lam -= 1
                sheet = (sheet - 1) % d
        else:
            loops[abs(s) - 1][sheet] += 1 if s > 0 else -1
    return CoverClass(tuple(tuple(r) for r in loops), lam)


def _project(cls: CoverClass, d: int, g: int):
    """Drop lambda and send loop(i, c) to zeta^c e_i (well-defined because
    sum_c zeta^c = 0 for d >= 2)."""
    out = []
    for i in range(g - 1):
        acc = zero(d)
        for c, coeff in enumerate(cls.loops[i]):
            if coeff:
                acc = acc + zeta_pow(d, c) * coeff
        out.append(acc)
    return out


def eta_chain(phi: Endo, d: int, g: int) -> RingMatrix:
    """Column j is the projected class of the lift of phi(x_j), j < g."""
    if g != phi.g:
        raise ValueError("rank mismatch")
    v = check_member(phi, d)
    if not v:
        raise ValueError(f"endomorphism is not in the covering-preserving group: {v.reason}")
    cols = [_project(lift_class(phi.images[j], d, g), d, g) for j in range(g - 1)]
    return RingMatrix.from_columns(d, cols)


def fox_derivative(w, i: int) -> dict:
    """The free derivative d w / d x_i as a formal sum {word: coefficient}.

    Product rule d(uv) = du + u dv with d x_j = delta_ij and
    d x_j^-1 = -delta_ij x_j^-1.
    """
    terms = {}
    prefix = ()
    for s in w:
        if s == i:
            terms[prefix] = terms.get(prefix, 0) + 1
        elif s == -i:
            key = word_mul(prefix, (-i,))
            terms[key] = terms.get(key, 0) - 1
        prefix = word_mul(prefix, (s,))
    return {k: c for k, c in terms.items() if c}


def eps_eval(terms: dict, d: int, g: int) -> CycInt:
    """The ring map sending x_i to 1 (i < g) and x_g to zeta, applied to a
    formal sum of words."""
    acc = zero(d)
    for w, c in terms.items():
        if c:
            acc = acc + zeta_pow(d, exponent_sum(w, g)) * c
    return acc


def eta_fox(phi: Endo, d: int, g: int) -> RingMatrix:
    """Entry (i, j) is eps(d phi(x_j) / d x_i); must agree with eta_chain."""
    if g != phi.g:
        raise ValueError("rank mismatch")
    v = check_member(phi, d)
    if not v:
        raise ValueError(f"endomorphism is not in the covering-preserving group: {v.reason}")
    rows = []
    for i in range(1, g):
        row = []
        for j in range(1, g):
            row.append(eps_eval(fox_derivative(phi.images[j - 1], i), d, g))
        rows.append(row)
    return RingMatrix(d, rows)


def eta(phi: Endo, d: int, g: int, crosscheck: bool = False) -> RingMatrix:
    """The representation matrix; with crosscheck=True both routes are run
    and compared."""
    m = eta_chain(phi, d, g)
    if crosscheck:
        m2 = eta_fox(phi, d, g)
        if m != m2:
            raise ArithmeticError("chain-level and Fox-calculus routes disagree")
    return m


# ---------------------------------------------------------------------------
# Adapted Nielsen moves: automorphisms of F_g that preserve ker(F_g -> Z/d)
# and fix the quotient, used to generate random test elements.

def adapted_nielsen_moves(g: int, d: int):
    """A generating stock of kernel-preserving automorphisms (with inverses)."""
    if g < 2:
        raise ValueError("rank must be >= 2")
    moves = []

    def endo(images_map, inverse_map):
        images = []
        invs = []
        for i in range(1, g + 1):
            images.append(free_reduce(images_map.get(i, (i,))))
            invs.append(free_reduce(inverse_map.get(i, (i,))))
        return Endo(tuple(images), tuple(invs))

    for i in range(1, g):
        # inversion of a kernel generator
        moves.append(endo({i: (-i,)}, {i: (-i,)}))
        # conjugation by x_g
        moves.append(endo({i: (g, i, -g)}, {i: (-g, i, g)}))
        # multiplication by the relator-sized power x_g^d
        pos = tuple([g] * d + [i])
        neg = tuple([-g] * d + [i])
        moves.append(endo({i: pos}, {i: neg}))
        # x_g -> x_g x_i
        moves.append(endo({g: (g, i)}, {g: (g, -i)}))
    for i in range(1, g):
        for j in range(1, g):
            if i != j:
                moves.append(endo({i: (i, j)}, {i: (i, -j)}))
                moves.append(endo({i: (j, i)}, {i: (-j, i)}))
    return moves


def deck_conjugation(g: int) -> Endo:
    """Conjugation of every generator by x_g; maps to zeta Id under eta."""
    images = []
    invs = []
    for i in range(1, g + 1):
        images.append(free_reduce((g, i, -g)))
        invs.append(free_reduce((-g, i, g)))
    return Endo(tuple(images), tuple(invs))


def random_member(rng, g: int, d: int, max_moves: int = 8) -> Endo:
    """A random composite of at most max_moves adapted Nielsen moves."""
    moves = adapted_nielsen_moves(g, d)
    phi = Endo.identity(g)
    for _ in range(rng.randint(1, max_moves)):
        step = moves[rng.randrange(len(moves))]
        if rng.random() < 0.5:
            step = step.inverse()
        phi = phi.compose(step)
    return phi


# ---------------------------------------------------------------------------
# Text format for endomorphisms: "x1 -> x2 x1 x2^-1 ; x2 -> x2"

_LETTER = re.compile(r"\s*x(\d+)(?:\s*\^\s*(-?\d+))?")


def parse_free_word(text: str, g: int) -> FreeWord:
    pos = 0
    letters = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _LETTER.match(text, pos)
        if m is None:
            raise ValueError(f"bad free word {text!r} near position {pos}")
        idx = int(m.group(1))
        if not 1 <= idx <= g:
            raise ValueError(f"generator x{idx} out of range for rank {g}")
        e = int(m.group(2)) if m.group(2) else 1
        letters.extend(word_pow((idx,), e))
        pos = m.end()
    return free_reduce(letters)


def parse_endo_images(text: str, g: int):
    """Parse 'x1 -> w1 ; x2 -> w2 ; ...'; unmapped generators stay fixed."""
    images = {i: (i,) for i in range(1, g + 1)}
    for rule in text.split(";"):
        if not rule.strip():
            continue
        if "->" not in rule:
            raise ValueError(f"rule {rule.strip()!r} is missing '->'")
        lhs, rhs = rule.split("->", 1)
        m = re.fullmatch(r"\s*x(\d+)\s*", lhs)
        if m is None:
            raise ValueError(f"left side of rule must be a single generator: {lhs.strip()!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= g:
            raise ValueError(f"generator x{idx} out of range for rank {g}")
        images[idx] = parse_free_word(rhs, g)
    return tuple(images[i] for i in range(1, g + 1))


def render_free_word(w) -> str:
    if not w:
        return "1"
    parts = []
    for s in w:
        parts.append(f"x{s}" if s > 0 else f"x{-s}^-1")
    return " ".join(parts)
