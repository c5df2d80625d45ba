"""Exact real-root isolation and continued fractions of algebraic reals.

Nothing here touches floating point.  A real root is pinned by a defining
polynomial plus an open rational interval containing no other root, and the
continued fraction is produced by repeatedly shifting and reversing that
polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polycore import (
    IntPoly,
    cauchy_bound,
    derivative,
    irreducible_over_rationals,
    poly_divmod,
    primitive_part,
    reverse_coefficients,
    sign_at,
    squarefree_part,
    taylor_shift,
)

__all__ = [
    "AlgebraicReal",
    "CFExpansion",
    "PeriodicCF",
    "isolate_real_roots",
    "refine",
    "cf_expand",
    "convergents",
    "detect_period",
    "common_tail_prefix",
    "RationalTermination",
    "quadratic_equivalent",
]


@dataclass(frozen=True)
class AlgebraicReal:
    """The unique root of ``poly`` inside the open interval ``(lo, hi)``."""

    poly: IntPoly
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError("interval must satisfy lo < hi")

    @property
    def minpoly(self) -> IntPoly:
        return self.poly

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        x = refine(self, Fraction(1, 2**60))
        return float((x.lo + x.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicReal({self.poly}, ~{float(self):.10g})"


@dataclass(frozen=True)
class CFExpansion:
    terms: tuple[int, ...]
    exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if any(t < 1 for t in self.terms[1:]):
            raise ValueError("partial quotients after the first must be >= 1")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __str__(self) -> str:
        return _format_terms(self.terms)


@dataclass(frozen=True)
class PeriodicCF:
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be nonempty")

    def terms(self, n: int) -> tuple[int, ...]:
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)

    def __str__(self) -> str:
        block = "(" + ",".join(str(t) for t in self.period) + ")"
        if not self.preperiod:
            return f"[{block}]"
        head = _format_terms(self.preperiod)[:-1]
        sep = "; " if len(self.preperiod) == 1 else ", "
        return f"{head}{sep}{block}]"


def _format_terms(terms: Sequence[int]) -> str:
    if not terms:
        return "[]"
    if len(terms) == 1:
        return f"[{terms[0]}]"
    return f"[{terms[0]}; " + ", ".join(str(t) for t in terms[1:]) + "]"


# ---------------------------------------------------------------------------
# Sturm sequences

def _sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in derivative(p).coeffs]]
    while len(chain[-1]) > 1:
        _, r = poly_divmod(chain[-2], chain[-1])
        if r == [0]:
            break
        chain.append([-c for c in r])
    return chain


def _eval(cs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in cs:
        acc = acc * x + c
    return acc


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (_eval(cs, x) for cs in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _count(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def isolate_real_roots(p: IntPoly) -> list[AlgebraicReal]:
    """All distinct real roots of p, increasing, with disjoint isolating intervals."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = squarefree_part(p)
    if q.degree == 0:
        return []
    chain = _sturm_chain(q)
    bound = cauchy_bound(q)
    found: list[AlgebraicReal] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = _count(chain, a, b)
        if n == 0:
            continue
        if n == 1 and sign_at(q, b) != 0:
            found.append(AlgebraicReal(q, a, b))
            continue
        mid = (a + b) / 2
        if sign_at(q, mid) == 0:
            h = (b - a) / 4
            while _count(chain, mid - h, mid + h) != 1 or sign_at(q, mid - h) == 0 or sign_at(q, mid + h) == 0:
                h /= 2
            found.append(AlgebraicReal(q, mid - h, mid + h))
            stack.append((a, mid - h))
            stack.append((mid + h, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    found.sort(key=lambda r: r.lo)
    return found


def refine(x: AlgebraicReal, width) -> AlgebraicReal:
    """Bisect until the isolating interval is no wider than ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p, lo, hi = x.poly, x.lo, x.hi
    s_lo = sign_at(p, lo)
    if s_lo == 0 or sign_at(p, hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    if s_lo == sign_at(p, hi):
        # Even-multiplicity roots cannot be bisected on sign; use the squarefree part.
        p = squarefree_part(p)
        s_lo = sign_at(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(p, mid)
        if s == 0:
            h = (hi - lo) / 4
            while h > width / 2 or sign_at(p, mid - h) == 0 or sign_at(p, mid + h) == 0:
                h /= 2
            return AlgebraicReal(x.poly, mid - h, mid + h)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return AlgebraicReal(x.poly, lo, hi)


# ---------------------------------------------------------------------------
# continued fractions

class _IntegerRoot(Exception):
    def __init__(self, value: int):
        self.value = value


def _floor_step(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[int, Fraction, Fraction]:
    """floor of the isolated root, plus the interval clipped to (a0, a0 + 1)."""
    s_lo = sign_at(p, lo)
    k_lo = math.floor(lo)
    k_hi = math.ceil(hi)
    while k_hi - k_lo > 1:
        mid = (k_lo + k_hi) // 2
        s = sign_at(p, mid)
        if s == 0:
            raise _IntegerRoot(mid)
        if s == s_lo:
            k_lo = mid
        else:
            k_hi = mid
    return k_lo, max(lo, Fraction(k_lo)), min(hi, Fraction(k_lo + 1))


def _strip_zero_roots(p: IntPoly) -> IntPoly:
    cs = list(p.coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return IntPoly(cs)


def _cf_step(p: IntPoly, lo: Fraction, hi: Fraction):
    """One partial quotient: returns (a0, poly, lo, hi) for the next complete quotient."""
    a0, lo, hi = _floor_step(p, lo, hi)
    # y = x - a0 lies in (lo - a0, hi - a0), a subset of [0, 1]; y is never 0 or 1.
    q = _strip_zero_roots(taylor_shift(p, a0))
    q = primitive_part(reverse_coefficients(q))
    ylo, yhi = lo - a0, hi - a0
    new_lo = 1 / yhi
    # Clipped endpoints were sign-tested in _floor_step, so they are never roots.
    cap = math.ceil(cauchy_bound(q)) + 1
    new_hi = min(1 / ylo, cap) if ylo > 0 else cap
    return a0, q, Fraction(new_lo), Fraction(new_hi)


def _prepare(x: AlgebraicReal) -> tuple[IntPoly, Fraction, Fraction]:
    p = x.poly
    if sign_at(p, x.lo) == sign_at(p, x.hi):
        p = squarefree_part(p)
    return primitive_part(p), x.lo, x.hi


class RationalTermination(ValueError):
    """The number turned out to be rational; ``terms`` is its full expansion."""

    def __init__(self, terms):
        self.terms = tuple(terms)
        super().__init__(f"rational number with finite expansion {_format_terms(self.terms)}")


def cf_expand(x: AlgebraicReal, n: int, allow_rational: bool = False) -> CFExpansion:
    """First ``n`` partial quotients of x, computed exactly.

    A rational root raises :class:`RationalTermination` unless
    ``allow_rational`` is set, in which case the finite expansion is returned.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p, lo, hi = _prepare(x)
    terms = []
    for _ in range(n):
        try:
            a0, p, lo, hi = _cf_step(p, lo, hi)
        except _IntegerRoot as end:
            terms.append(end.value)
            if allow_rational:
                return CFExpansion(tuple(terms))
            raise RationalTermination(terms) from None
        terms.append(a0)
    return CFExpansion(tuple(terms))


def convergents(terms: Sequence[int]) -> list[Fraction]:
    """Successive convergents p_k/q_k of [a0; a1, ...]."""
    out = []
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    out.append(Fraction(p, q))
    for a in terms[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Fraction(p, q))
    return out


def _root_side(p: IntPoly, lo: Fraction) -> bool:
    """For a quadratic with positive leading coefficient: is this the larger root?"""
    return sign_at(p, lo) < 0


def detect_period(x: AlgebraicReal) -> PeriodicCF:
    """Eventually periodic expansion of a quadratic irrational.

    The state after each step is the primitive polynomial of the complete
    quotient together with which of its two roots is meant; the first repeat
    fixes both the preperiod and the minimal period.
    """
    p, lo, hi = _prepare(x)
    if p.degree != 2:
        raise ValueError(f"detect_period needs a quadratic, got degree {p.degree}")
    seen: dict[tuple, int] = {}
    terms: list[int] = []
    while True:
        key = (p.coeffs, _root_side(p, lo))
        if key in seen:
            i = seen[key]
            return PeriodicCF(tuple(terms[:i]), tuple(terms[i:]))
        seen[key] = len(terms)
        try:
            a0, p, lo, hi = _cf_step(p, lo, hi)
        except _IntegerRoot as end:
            raise RationalTermination(terms + [end.value]) from None
        terms.append(a0)


def common_tail_prefix(c1, c2, window: int, min_match: int = 1):
    """Smallest offsets ``(m, n)`` below ``window`` where the remaining terms agree.

    Offsets are searched by increasing ``m + n``, then ``m``.  Returns
    ``(m, n, matched_length)`` or ``None``.  Agreement of finite prefixes is
    evidence of common tails, never a proof.
    """
    t1 = tuple(c1.terms if isinstance(c1, CFExpansion) else c1)
    t2 = tuple(c2.terms if isinstance(c2, CFExpansion) else c2)
    for total in range(2 * window - 1):
        for m in range(max(0, total - window + 1), min(total, window - 1) + 1):
            n = total - m
            length = min(len(t1) - m, len(t2) - n)
            if length < max(min_match, 1):
                continue
            if t1[m:m + length] == t2[n:n + length]:
                return m, n, length
    return None


def _is_rotation(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    doubled = tuple(a) + tuple(a)
    return any(doubled[i:i + len(b)] == tuple(b) for i in range(len(a)))


def quadratic_equivalent(p: IntPoly) -> bool:
    """Do the two roots of an irreducible real quadratic share a tail?"""
    if p.degree != 2:
        raise ValueError("quadratic_equivalent needs degree 2")
    a, b, c = p.coeffs
    if b * b - 4 * a * c <= 0:
        raise ValueError("quadratic has no distinct real roots")
    if not irreducible_over_rationals(p):
        raise ValueError("quadratic is reducible")
    r1, r2 = isolate_real_roots(p)
    return _is_rotation(detect_period(r1).period, detect_period(r2).period)
