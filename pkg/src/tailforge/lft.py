"""Linear fractional transformations as 2x2 integer matrices modulo scalars.

Two word conventions appear below and are kept apart on purpose:

* a *composition* word ``[n, p(-1), r]`` means n∘p₋₁∘r, so ``r`` acts first on
  a number (this is how the coefficient-action code and family words read);
* a *reduction* word, as recorded by :func:`canonical_triple`, lists row
  operations in the order they are applied to the matrix.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cfengine import AlgebraicReal, refine
from .polycore import IntPoly, primitive_part

__all__ = [
    "LFTMatrix",
    "StandardLFT",
    "BasicOp",
    "CanonicalTriple",
    "NEG",
    "REC",
    "plus",
    "parse_word",
    "format_word",
    "parse_matrix",
    "format_matrix",
    "standard_form",
    "ad",
    "compose",
    "compose_word",
    "apply",
    "image_polynomial",
    "order_in_pgl",
    "conjugate_by_basic",
    "row_op",
    "replay_rows",
    "canonical_triple",
    "is_scalar",
]


@dataclass(frozen=True)
class LFTMatrix:
    """x -> (alpha*x + beta) / (gamma*x + delta)."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            v = getattr(self, name)
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{name} must be an integer")
                object.__setattr__(self, name, v.numerator)
            elif not isinstance(v, int):
                raise TypeError(f"{name} must be an integer")
        if self.det == 0:
            raise ValueError(f"singular matrix {self.entries}")

    @property
    def det(self) -> int:
        return self.alpha * self.delta - self.beta * self.gamma

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __iter__(self):
        return iter(self.entries)

    def __matmul__(self, other: LFTMatrix) -> LFTMatrix:
        return compose(self, other)

    def __str__(self) -> str:
        return format_matrix(self)


class StandardLFT(LFTMatrix):
    """Unique representative: coprime entries, alpha > 0 or (alpha == 0 and beta > 0)."""

    def __post_init__(self):
        super().__post_init__()
        a, b, c, d = self.entries
        if math.gcd(math.gcd(a, b), math.gcd(c, d)) != 1:
            raise ValueError("standard form entries must be coprime")
        if not (a > 0 or (a == 0 and b > 0)):
            raise ValueError("standard form needs alpha > 0, or alpha == 0 and beta > 0")


@dataclass(frozen=True)
class BasicOp:
    """One of ``n`` (negation), ``r`` (reciprocal) or ``p`` (plus ``k``)."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("n", "r", "p"):
            raise ValueError(f"unknown basic operation {self.kind!r}")
        if self.kind != "p" and self.k != 0:
            raise ValueError("only p carries a parameter")

    @property
    def matrix(self) -> LFTMatrix:
        if self.kind == "n":
            return LFTMatrix(-1, 0, 0, 1)
        if self.kind == "r":
            return LFTMatrix(0, 1, 1, 0)
        return LFTMatrix(1, self.k, 0, 1)

    def inverse(self) -> BasicOp:
        return BasicOp("p", -self.k) if self.kind == "p" else self

    def __call__(self, x):
        if self.kind == "n":
            return -x
        if self.kind == "r":
            return 1 / x
        return x + self.k

    def __str__(self) -> str:
        return f"p{self.k}" if self.kind == "p" else self.kind

    def __repr__(self) -> str:
        return str(self)


NEG = BasicOp("n")
REC = BasicOp("r")


def plus(k: int) -> BasicOp:
    return BasicOp("p", k)


_TOKEN = re.compile(r"^(n|r|p([+-]?\d+))$")


def parse_word(text: str | Iterable[str]) -> tuple[BasicOp, ...]:
    """Tokens ``n``, ``r``, ``p<k>`` separated by spaces, commas or ``∘``."""
    if isinstance(text, str):
        tokens = [t for t in re.split(r"[\s,∘]+", text.strip()) if t]
    else:
        tokens = list(text)
    ops = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad basic-operation token {tok!r}")
        ops.append(plus(int(m.group(2))) if m.group(2) is not None else BasicOp(tok))
    return tuple(ops)


def format_word(word: Sequence[BasicOp]) -> str:
    return " ".join(str(op) for op in word)


def parse_matrix(text: str) -> LFTMatrix:
    """Parse ``[[a,b],[c,d]]`` (or four comma-separated integers)."""
    nums = re.findall(r"[+-]?\d+", text)
    stripped = re.sub(r"[\s\[\],+\-\d]", "", text)
    if len(nums) != 4 or stripped:
        raise ValueError(f"cannot parse matrix {text!r}; expected [[a,b],[c,d]]")
    return LFTMatrix(*(int(v) for v in nums))


def format_matrix(m: LFTMatrix) -> str:
    a, b, c, d = m.entries
    return f"[[{a},{b}],[{c},{d}]]"


# ---------------------------------------------------------------------------

def standard_form(m: LFTMatrix) -> StandardLFT:
    a, b, c, d = m.entries
    g = math.gcd(math.gcd(a, b), math.gcd(c, d))
    if a < 0 or (a == 0 and b < 0):
        g = -g
    return StandardLFT(a // g, b // g, c // g, d // g)


def ad(m: LFTMatrix) -> int:
    return abs(m.det)


def compose(f: LFTMatrix, g: LFTMatrix) -> LFTMatrix:
    """Matrix of f∘g (g acts first)."""
    a, b, c, d = f.entries
    e, f_, g_, h = g.entries
    return LFTMatrix(a * e + b * g_, a * f_ + b * h, c * e + d * g_, c * f_ + d * h)


def compose_word(word: Sequence[BasicOp]) -> LFTMatrix:
    """Matrix of word[0]∘word[1]∘...; the last operation acts first."""
    m = LFTMatrix(1, 0, 0, 1)
    for op in word:
        m = compose(m, op.matrix)
    return m


def is_scalar(m: LFTMatrix) -> bool:
    return m.beta == 0 and m.gamma == 0 and m.alpha == m.delta


def image_polynomial(m: LFTMatrix, p: IntPoly) -> IntPoly:
    """Primitive polynomial whose roots are the images of the roots of p under m.

    With x = (delta*z - beta) / (-gamma*z + alpha), clear the denominator:
    q(z) = sum c_i (delta*z - beta)^(deg-i) (-gamma*z + alpha)^i.
    """
    a, b, c, d = m.entries
    n = p.degree
    num = (d, -b)
    den = (-c, a)
    out = [0] * (n + 1)
    for i, coef in enumerate(p.coeffs):
        term = [coef]
        for _ in range(n - i):
            term = _mul_linear(term, num)
        for _ in range(i):
            term = _mul_linear(term, den)
        for j, t in enumerate(term):
            out[j] += t
    return primitive_part(IntPoly(out))


def _mul_linear(cs: list[int], lin: tuple[int, int]) -> list[int]:
    u, v = lin
    out = [0] * (len(cs) + 1)
    for i, c in enumerate(cs):
        out[i] += c * u
        out[i + 1] += c * v
    return out


def apply(m: LFTMatrix, x):
    """Evaluate (alpha*x + beta)/(gamma*x + delta).

    Rational input gives an exact :class:`~fractions.Fraction`.  Algebraic
    input gives a new :class:`AlgebraicReal` whose interval certifies the
    image and whose polynomial is the transformed defining polynomial.
    """
    a, b, c, d = m.entries
    if not isinstance(x, AlgebraicReal):
        x = Fraction(x)
        den = c * x + d
        if den == 0:
            raise ZeroDivisionError(f"{x} is the pole of {format_matrix(m)}")
        return (a * x + b) / den
    if c != 0:
        pole = Fraction(-d, c)
        while x.lo <= pole <= x.hi:
            if x.poly(pole) == 0 and x.lo < pole < x.hi:
                raise ZeroDivisionError(f"root is the pole {pole} of {format_matrix(m)}")
            x = refine(x, x.width / 2)
    f = lambda t: (a * t + b) / (c * t + d)
    ends = sorted((f(x.lo), f(x.hi)))
    return AlgebraicReal(image_polynomial(m, x.poly), ends[0], ends[1])


def order_in_pgl(m: LFTMatrix):
    """Projective order: 1, 2, 3, 4 or 6, else ``math.inf``.

    Rational 2x2 matrices of finite projective order have order dividing 4 or
    6, so checking powers up to 6 is complete.
    """
    power = m
    for k in range(1, 7):
        if is_scalar(power):
            return k
        power = compose(power, m)
    return math.inf


def conjugate_by_basic(m: LFTMatrix, op: BasicOp) -> LFTMatrix:
    """Matrix of op∘m∘op⁻¹, written out entrywise."""
    a, b, c, d = m.entries
    if op.kind == "n":
        return LFTMatrix(a, -b, -c, d)
    if op.kind == "r":
        return LFTMatrix(d, c, b, a)
    k = op.k
    return LFTMatrix(a + k * c, b - k * a + k * d - k * k * c, c, d - k * c)


# ---------------------------------------------------------------------------
# canonical (epsilon, y, eta) reduction

def row_op(m: LFTMatrix, op: BasicOp) -> LFTMatrix:
    """Row operation for a basic op: p_k adds k*bottom to top, r swaps, n negates the bottom row."""
    a, b, c, d = m.entries
    if op.kind == "p":
        return LFTMatrix(a + op.k * c, b + op.k * d, c, d)
    if op.kind == "r":
        return LFTMatrix(c, d, a, b)
    return LFTMatrix(a, b, -c, -d)


def replay_rows(m: LFTMatrix, word: Sequence[BasicOp]) -> LFTMatrix:
    for op in word:
        m = row_op(m, op)
    return m


@dataclass(frozen=True)
class CanonicalTriple:
    epsilon: int
    y: int
    eta: int
    word: tuple[BasicOp, ...] = field(default=(), compare=False)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.epsilon, self.y, self.eta)


def canonical_triple(m: LFTMatrix) -> CanonicalTriple:
    """Reduce m by basic row operations to [[eps, y], [0, eta]] with 0 <= y < eta."""
    word: list[BasicOp] = []

    def do(op):
        nonlocal m
        word.append(op)
        m = row_op(m, op)

    if m.gamma == 0 and m.alpha < 0:
        do(REC)
    while m.gamma != 0:
        if m.gamma < 0:
            do(NEG)
        q = m.alpha // m.gamma
        if q:
            do(plus(-q))
        do(REC)
    eps = m.alpha
    if m.delta < 0:
        do(NEG)
    eta = m.delta
    y = m.beta % eta
    k = (y - m.beta) // eta
    if k:
        do(plus(k))
    return CanonicalTriple(eps, y, eta, tuple(word))
