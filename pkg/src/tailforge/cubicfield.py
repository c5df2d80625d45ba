"""Cubic fields whose splitting field has degree 3.

For such a cubic one root is a linear fractional transformation of another,
and the roots share a continued-fraction tail exactly when that
transformation has |det| = 1 in standard form.  The transformation is found
from the coefficients alone by Cramer's rule on three symmetric-function
equations; no numerical integer-relation search is involved.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cfengine import AlgebraicReal, CFExpansion, cf_expand, isolate_real_roots, refine
from .linalg import det
from .lft import (
    LFTMatrix,
    StandardLFT,
    ad,
    apply,
    canonical_triple,
    image_polynomial,
    standard_form,
)
from .polycore import (
    IntPoly,
    poly_divmod,
    cubic_discriminant,
    irreducible_over_rationals,
    is_perfect_square,
    proportional,
)

__all__ = [
    "QrElement",
    "MuNu",
    "ClassificationReport",
    "DegenerateRelationError",
    "element_to_lft",
    "lft_to_element",
    "element_value",
    "signed_sqrt_discriminant",
    "mu_nu",
    "solve_root_relation",
    "verify_root_cycle",
    "classify_cubic",
    "elements_equivalent",
    "class_representative",
]


class DegenerateRelationError(ArithmeticError):
    """All four Cramer determinants vanished."""


@dataclass(frozen=True)
class QrElement:
    """s*r^2 + t*r + u for a fixed cubic root r."""

    s: Fraction
    t: Fraction
    u: Fraction

    def __post_init__(self):
        for name in ("s", "t", "u"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> QrElement:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected 's,t,u', got {text!r}")
        return cls(*(Fraction(p) for p in parts))

    def is_rational(self) -> bool:
        return self.s == 0 and self.t == 0


@dataclass(frozen=True)
class MuNu:
    mu: Fraction
    nu: Fraction
    sqrt_disc: Fraction


def _monic(cubic: IntPoly) -> tuple[Fraction, Fraction, Fraction]:
    if cubic.degree != 3:
        raise ValueError(f"expected a cubic, got degree {cubic.degree}")
    a = Fraction(cubic.leading)
    return tuple(Fraction(c) / a for c in cubic.coeffs[1:])


def _integral_standard(entries: Sequence[Fraction]) -> StandardLFT:
    den = 1
    for v in entries:
        den = math.lcm(den, Fraction(v).denominator)
    return standard_form(LFTMatrix(*(int(Fraction(v) * den) for v in entries)))


def element_to_lft(e: QrElement, cubic: IntPoly) -> StandardLFT:
    """Standard matrix with e = (alpha*r + beta)/(gamma*r + delta)."""
    if cubic.degree != 3:
        raise ValueError(f"expected a cubic, got degree {cubic.degree}")
    if e.is_rational():
        raise ValueError("element is rational")
    s, t, u = e.s, e.t, e.u
    if s == 0:
        return _integral_standard((t, u, 0, 1))
    a, b, c, d = (Fraction(x) for x in cubic.coeffs)
    gamma = a / s
    delta = b / s - a * t / s**2
    alpha = a * u / s + b * t / s - a * t**2 / s**2 - c
    beta = u * delta - d
    return _integral_standard((alpha, beta, gamma, delta))


def _reduce(cs: Sequence[Fraction], monic: Sequence[Fraction]) -> list[Fraction]:
    """Remainder mod the monic cubic, padded to [s, t, u]."""
    _, rem = poly_divmod(cs, monic)
    rem = [Fraction(c) for c in rem]
    return [Fraction(0)] * (3 - len(rem)) + rem


def _inverse_mod(v: Sequence[Fraction], monic: Sequence[Fraction]) -> list[Fraction]:
    """Inverse of v modulo an irreducible monic cubic, by the extended Euclidean algorithm."""
    r0, r1 = list(monic), _strip_fr(v)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1 != [0]:
        q, rem = poly_divmod(r0, r1)
        r0, r1 = r1, _strip_fr(rem)
        s0, s1 = s1, _sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ArithmeticError("element is not invertible; the cubic is reducible")
    return _reduce([c / r0[0] for c in s0], monic)


def _strip_fr(cs) -> list[Fraction]:
    cs = [Fraction(c) for c in cs]
    while len(cs) > 1 and cs[0] == 0:
        cs.pop(0)
    return cs or [Fraction(0)]


def _poly_mul(a, b) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _sub(a, b) -> list[Fraction]:
    n = max(len(a), len(b))
    a = [Fraction(0)] * (n - len(a)) + list(a)
    b = [Fraction(0)] * (n - len(b)) + list(b)
    return _strip_fr(x - y for x, y in zip(a, b))


def lft_to_element(m: LFTMatrix, cubic: IntPoly) -> QrElement:
    """(alpha*r + beta)/(gamma*r + delta) rewritten as s*r^2 + t*r + u."""
    monic = [Fraction(1)] + list(_monic(cubic))
    a, b, c, d = m.entries
    inv = _inverse_mod([c, d], monic)
    return QrElement(*_reduce(_poly_mul([a, b], inv), monic))


def element_value(e: QrElement, root: AlgebraicReal, cubic: IntPoly | None = None) -> AlgebraicReal:
    """The element as an exact algebraic real, for a chosen root r."""
    return apply(element_to_lft(e, cubic or root.poly), root)


def _sign_of_difference(x: AlgebraicReal, y: AlgebraicReal) -> int:
    while True:
        if x.hi <= y.lo:
            return -1
        if y.hi <= x.lo:
            return 1
        if x.poly == y.poly and x.lo == y.lo and x.hi == y.hi:
            raise ValueError("roots are not distinct")
        x = refine(x, x.width / 2)
        y = refine(y, y.width / 2)


def signed_sqrt_discriminant(cubic: IntPoly, roots: Sequence[AlgebraicReal]) -> Fraction:
    """Square root of the monic discriminant with the sign of (r1-r2)(r2-r3)(r3-r1)."""
    disc = cubic_discriminant(cubic)
    root = is_perfect_square(disc)
    if root is None or root == 0:
        raise ValueError(f"discriminant {disc} is not a positive perfect square")
    if len(roots) != 3:
        raise ValueError("need exactly three roots")
    r1, r2, r3 = roots
    sign = _sign_of_difference(r1, r2) * _sign_of_difference(r2, r3) * _sign_of_difference(r3, r1)
    return sign * Fraction(root, cubic.leading**2)


def mu_nu(cubic: IntPoly, sqrt_disc) -> MuNu:
    b, c, d = _monic(cubic)
    sqrt_disc = Fraction(sqrt_disc)
    base = 3 * d - b * c
    return MuNu((base + sqrt_disc) / 2, (base - sqrt_disc) / 2, sqrt_disc)


def solve_root_relation(cubic: IntPoly, mn: MuNu) -> StandardLFT:
    """Matrix sending r1 to r2 for the root order encoded by ``mn``.

    Solves b*al - 3*be + c*ga - b*de = 0, -c*al + b*be - 3d*ga + c*de = 0 and
    -nu*al + (2c - b^2)*be + bd*ga + mu*de = 0 by 3x3 cofactors.
    """
    b, c, d = _monic(cubic)
    mu, nu = mn.mu, mn.nu
    w = 2 * c - b * b
    alpha = det([[-3, c, -b], [b, -3 * d, c], [w, b * d, mu]])
    beta = -det([[b, c, -b], [-c, -3 * d, c], [-nu, b * d, mu]])
    gamma = det([[b, -3, -b], [-c, b, c], [-nu, w, mu]])
    delta = -det([[b, -3, c], [-c, b, -3 * d], [-nu, w, b * d]])
    if alpha == beta == gamma == delta == 0:
        raise DegenerateRelationError(f"all Cramer determinants vanish for {cubic}")
    m = _integral_standard((alpha, beta, gamma, delta))
    if m.det == 0:
        raise DegenerateRelationError(f"singular relation for {cubic}")
    return m


def verify_root_cycle(m: LFTMatrix, roots: Sequence[AlgebraicReal], max_steps: int = 200) -> bool:
    """Interval check that m maps roots[i] to roots[i+1] cyclically."""
    n = len(roots)
    for i, x in enumerate(roots):
        target = roots[(i + 1) % n]
        if not proportional(image_polynomial(m, x.poly), target.poly):
            return False
        img = apply(m, x)
        for _ in range(max_steps):
            if target.lo < img.lo and img.hi < target.hi:
                break
            if img.hi <= target.lo or target.hi <= img.lo:
                return False
            img = refine(img, img.width / 2)
        else:
            return False
    return True


@dataclass
class ClassificationReport:
    poly: IntPoly
    discriminant: int
    disc_square_root: int | None
    irreducible: bool
    relating_matrix: StandardLFT | None = None
    ad_value: int | None = None
    common_tails: bool | None = None
    cf_prefixes: list[CFExpansion] = field(default_factory=list)
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "poly": list(self.poly.coeffs),
            "disc": str(self.discriminant),
            "disc_sqrt": None if self.disc_square_root is None else str(self.disc_square_root),
            "irreducible": self.irreducible,
            "matrix": None if self.relating_matrix is None else list(self.relating_matrix.entries),
            "ad": self.ad_value,
            "common_tails": self.common_tails,
            "cf_prefixes": [list(c.terms) for c in self.cf_prefixes],
        }
        if timing:
            out["elapsed_ms"] = None if self.elapsed_ms is None else round(self.elapsed_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> ClassificationReport:
        matrix = data.get("matrix")
        return cls(
            poly=IntPoly(data["poly"]),
            discriminant=int(data["disc"]),
            disc_square_root=None if data["disc_sqrt"] is None else int(data["disc_sqrt"]),
            irreducible=bool(data["irreducible"]),
            relating_matrix=None if matrix is None else StandardLFT(*matrix),
            ad_value=data["ad"],
            common_tails=data["common_tails"],
            cf_prefixes=[CFExpansion(tuple(t)) for t in data["cf_prefixes"]],
            elapsed_ms=data.get("elapsed_ms"),
        )


def classify_cubic(p: IntPoly, prefix_depth: int = 20) -> ClassificationReport:
    """Full common-tails verdict for one cubic."""
    if p.degree != 3:
        raise ValueError(f"classify_cubic needs degree 3, got {p.degree}")
    start = time.perf_counter()
    disc = cubic_discriminant(p)
    root = is_perfect_square(disc)
    irreducible = irreducible_over_rationals(p)
    report = ClassificationReport(p, disc, root, irreducible)
    roots = isolate_real_roots(p)
    if prefix_depth > 0:
        report.cf_prefixes = [cf_expand(x, prefix_depth, allow_rational=True) for x in roots]
    if root and irreducible:
        sd = signed_sqrt_discriminant(p, roots)
        m = solve_root_relation(p, mu_nu(p, sd))
        if not verify_root_cycle(m, roots):
            raise ArithmeticError(f"relating matrix {m} failed the root-cycle check for {p}")
        report.relating_matrix = m
        report.ad_value = ad(m)
        report.common_tails = report.ad_value == 1
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def elements_equivalent(e1: QrElement, e2: QrElement, cubic: IntPoly) -> bool:
    t1 = canonical_triple(element_to_lft(e1, cubic))
    t2 = canonical_triple(element_to_lft(e2, cubic))
    return t1.key == t2.key


def class_representative(e: QrElement, cubic: IntPoly) -> tuple[Fraction, Fraction]:
    """(mu, nu) with mu*r + nu the canonical member of e's class, mu > 0, 0 <= nu < 1."""
    t = canonical_triple(element_to_lft(e, cubic))
    return Fraction(t.epsilon, t.eta), Fraction(t.y, t.eta)
