"""Integer polynomials: parsing, coefficient transforms, discriminants, irreducibility.

Coefficient lists are degree-descending everywhere, so ``IntPoly([1, 6, 9, 1])``
is x^3 + 6x^2 + 9x + 1.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "IntPoly",
    "PolynomialSyntaxError",
    "parse_polynomial",
    "format_polynomial",
    "taylor_shift",
    "reverse_coefficients",
    "negate_argument",
    "cubic_discriminant",
    "is_perfect_square",
    "irreducible_over_rationals",
    "content",
    "primitive_part",
    "derivative",
    "poly_divmod",
    "poly_gcd",
    "squarefree_part",
    "sign_at",
    "cauchy_bound",
    "proportional",
]

MAX_SUPPORTED_DEGREE = 6


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, highest degree first.

    Leading zeros are stripped on construction; the zero polynomial is ``(0,)``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, float) and c.is_integer():
                    c = int(c)
                else:
                    raise TypeError(f"coefficient {c!r} is not an integer")
            cs.append(int(c))
        while len(cs) > 1 and cs[0] == 0:
            cs.pop(0)
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[0]

    @property
    def constant(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return IntPoly(_mul(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


# ---------------------------------------------------------------------------
# parsing / formatting

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?P<coef>\d+)?
    (?P<mul>\*)?
    (?P<var>x(?:(?:\^|\*\*)(?P<exp>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_polynomial(text: str) -> IntPoly:
    """Parse ``"1,6,9,1"`` or ``"x^3+6x^2+9x+1"`` into an :class:`IntPoly`."""
    if text is None or not text.strip():
        raise PolynomialSyntaxError("empty input", text or "", 0)
    if "," in text:
        return _parse_coefficient_list(text)
    return _parse_expression(text)


def _parse_coefficient_list(text: str) -> IntPoly:
    coeffs = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        offset = pos + (len(piece) - len(piece.lstrip()))
        if not stripped:
            raise PolynomialSyntaxError("missing coefficient", text, offset)
        if not re.fullmatch(r"[+-]?\d+", stripped):
            raise PolynomialSyntaxError(f"non-integer coefficient {stripped!r}", text, offset)
        coeffs.append(int(stripped))
        pos += len(piece) + 1
    return IntPoly(coeffs)


def _parse_expression(text: str) -> IntPoly:
    # Positions reported against the original text, so track them through whitespace.
    chars = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(ch for _, ch in chars)
    where = [i for i, _ in chars] + [len(text)]
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {compact[pos]!r}", text, where[pos])
        sign, coef, mul, var, exp = m.group("sign", "coef", "mul", "var", "exp")
        if sign is None and not first:
            raise PolynomialSyntaxError("expected '+' or '-'", text, where[pos])
        if coef is None and var is None:
            raise PolynomialSyntaxError("expected a term", text, where[m.end()])
        if mul and var is None:
            raise PolynomialSyntaxError("expected 'x' after '*'", text, where[m.end()])
        end = m.end()
        if end < len(compact) and compact[end] not in "+-":
            bad = compact[end]
            msg = "non-integer coefficient" if bad == "." else f"unexpected character {bad!r}"
            raise PolynomialSyntaxError(msg, text, where[end])
        value = int(coef) if coef is not None else 1
        if sign == "-":
            value = -value
        power = 0 if var is None else (int(exp) if exp is not None else 1)
        terms[power] = terms.get(power, 0) + value
        pos = end
        first = False
    top = max(terms)
    return IntPoly(terms.get(k, 0) for k in range(top, -1, -1))


def format_polynomial(p: IntPoly) -> str:
    """Canonical text: descending powers, ``^`` exponents, explicit signs."""
    if p.is_zero():
        return "0"
    out = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        power = p.degree - i
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("x" if power == 1 else f"x^{power}")
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# raw coefficient arithmetic (tuples, descending)

def _mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _strip(cs: list) -> list:
    i = 0
    while i < len(cs) - 1 and cs[i] == 0:
        i += 1
    return cs[i:]


def poly_divmod(num: Sequence, den: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Division over Q of descending coefficient sequences."""
    num = _strip([Fraction(c) for c in num])
    den = _strip([Fraction(c) for c in den])
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [Fraction(0)], num
    rem = list(num)
    quot = []
    lead = den[0]
    for i in range(len(num) - len(den) + 1):
        q = rem[i] / lead
        quot.append(q)
        if q:
            for j, d in enumerate(den):
                rem[i + j] -= q * d
    rem = _strip(rem[len(num) - len(den) + 1:] or [Fraction(0)])
    return quot, rem


def poly_gcd(a: Sequence, b: Sequence) -> list[Fraction]:
    """Monic gcd over Q."""
    a = _strip([Fraction(c) for c in a])
    b = _strip([Fraction(c) for c in b])
    while b != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a == [0]:
        return a
    return [c / a[0] for c in a]


def content(p: IntPoly) -> int:
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
    return g


def primitive_part(p: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    g = content(p)
    if g == 0:
        return p
    if p.leading < 0:
        g = -g
    return IntPoly(c // g for c in p.coeffs)


def _from_rational(cs: Sequence[Fraction]) -> IntPoly:
    den = 1
    for c in cs:
        den = math.lcm(den, Fraction(c).denominator)
    return primitive_part(IntPoly(int(Fraction(c) * den) for c in cs))


def derivative(p: IntPoly) -> IntPoly:
    n = p.degree
    if n == 0:
        return IntPoly([0])
    return IntPoly(c * (n - i) for i, c in enumerate(p.coeffs[:-1]))


def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive p / gcd(p, p')."""
    if p.degree <= 1:
        return primitive_part(p)
    g = poly_gcd(p.coeffs, derivative(p).coeffs)
    if len(g) == 1:
        return primitive_part(p)
    q, _ = poly_divmod(p.coeffs, g)
    return _from_rational(q)


def sign_at(p: IntPoly, x: Fraction | int) -> int:
    """Exact sign of p(x) for rational x, using integer arithmetic only."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    acc = 0
    dpow = 1
    # Horner on the homogenised form: acc ends as d^deg * p(n/d), d > 0.
    for c in p.coeffs:
        acc = acc * n + c * dpow
        dpow *= d
    return (acc > 0) - (acc < 0)


def cauchy_bound(p: IntPoly) -> Fraction:
    """Every complex root has modulus strictly below this bound."""
    lead = abs(p.leading)
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[1:]), default=Fraction(0))


def proportional(p: IntPoly, q: IntPoly) -> bool:
    """True when p = lambda * q for some nonzero rational lambda."""
    if p.degree != q.degree or p.is_zero() or q.is_zero():
        return False
    return all(a * q.leading == b * p.leading for a, b in zip(p.coeffs, q.coeffs))


# ---------------------------------------------------------------------------
# coefficient transforms

def taylor_shift(p: IntPoly, k: int) -> IntPoly:
    """p(x + k); roots move by -k."""
    if k == 0:
        return p
    out = [0]
    # Horner in the shifted variable: out <- out * (x + k) + c
    for c in p.coeffs:
        nxt = out + [0]
        for i in range(len(out)):
            nxt[i + 1] += k * out[i]
        nxt[-1] += c
        out = nxt
    return IntPoly(out)


def reverse_coefficients(p: IntPoly) -> IntPoly:
    if p.constant == 0:
        raise ValueError("reverse_coefficients needs a nonzero constant term")
    return IntPoly(reversed(p.coeffs))


def negate_argument(p: IntPoly) -> IntPoly:
    """Polynomial whose roots are the negated roots of p (leading coefficient kept)."""
    return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs))


# ---------------------------------------------------------------------------
# discriminants and squares

def cubic_discriminant(p: IntPoly) -> int:
    if p.degree != 3:
        raise ValueError(f"cubic_discriminant needs degree 3, got {p.degree}")
    a, b, c, d = p.coeffs
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def is_perfect_square(n: int) -> int | None:
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


# ---------------------------------------------------------------------------
# irreducibility

def _complex_roots(p: IntPoly):
    digits = max(len(str(abs(c))) for c in p.coeffs)
    dps = 40 + 4 * digits
    with mpmath.workdps(dps):
        for extra in (0, 1, 2):
            try:
                roots = mpmath.polyroots(
                    [mpmath.mpf(c) for c in p.coeffs],
                    maxsteps=200 * (extra + 1),
                    extraprec=2 * dps * (extra + 1),
                )
                return roots, dps
            except mpmath.libmp.NoConvergence:
                continue
    raise ArithmeticError(f"root finding did not converge for {p}")


def _candidate_factor(roots, subset, lead: int, dps: int) -> IntPoly | None:
    with mpmath.workdps(dps):
        cs = [mpmath.mpc(1)]
        for idx in subset:
            z = roots[idx]
            nxt = cs + [mpmath.mpc(0)]
            for i in range(len(cs)):
                nxt[i + 1] -= z * cs[i]
            cs = nxt
        out = []
        tol = mpmath.mpf(10) ** (-(dps // 3))
        for c in cs:
            v = c * lead
            if abs(v.imag) > tol:
                return None
            r = mpmath.nint(v.real)
            if abs(v.real - r) > tol:
                return None
            out.append(int(r))
    return primitive_part(IntPoly(out))


def irreducible_over_rationals(p: IntPoly) -> bool:
    """Decide irreducibility over Q for degree 1..6.

    Rational roots are found by rounding ``lead * root``; higher factors by
    rounding products of root subsets and confirming with exact division.
    """
    if not 1 <= p.degree <= MAX_SUPPORTED_DEGREE:
        raise ValueError(f"degree {p.degree} outside supported range 1..{MAX_SUPPORTED_DEGREE}")
    p = primitive_part(p)
    n = p.degree
    if n == 1:
        return True
    if p.constant == 0:
        return False
    # A repeated root means p shares a factor with p'; this also keeps the
    # numeric roots below simple and hence accurate.
    if squarefree_part(p).degree < n:
        return False
    roots, dps = _complex_roots(p)
    lead = p.leading
    for size in range(1, n // 2 + 1):
        for subset in itertools.combinations(range(n), size):
            g = _candidate_factor(roots, subset, lead, dps)
            if g is None or g.degree != size:
                continue
            _, rem = poly_divmod(p.coeffs, g.coeffs)
            if rem == [0]:
                return False
    return True
