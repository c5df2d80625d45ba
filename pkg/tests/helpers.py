"""Shared strategies and numeric oracles for the test suite."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from tailforge.lft import NEG, REC, plus
from tailforge.polycore import IntPoly

small = st.integers(min_value=-12, max_value=12)
nonzero = small.filter(lambda v: v != 0)

basic_ops = st.one_of(st.just(NEG), st.just(REC), st.integers(-6, 6).map(plus))


@st.composite
def polys(draw, min_degree=1, max_degree=6):
    deg = draw(st.integers(min_degree, max_degree))
    lead = draw(nonzero)
    rest = draw(st.lists(small, min_size=deg, max_size=deg))
    return IntPoly([lead] + rest)


@st.composite
def poly_from_roots(draw, min_degree=2, max_degree=5):
    """Product of integer-coefficient linear and quadratic factors with known real roots."""
    n = draw(st.integers(min_degree, max_degree))
    roots = draw(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=n, max_size=n, unique=True))
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([r.denominator, -r.numerator])
    return p, sorted(roots)


def sympy_real_roots(p: IntPoly, digits: int = 40) -> list[Fraction]:
    """Distinct real roots from sympy's exact isolation, as rationals good to ``digits`` places."""
    x = sympy.Symbol("x")
    roots = sorted(set(sympy.Poly(list(p.coeffs), x).real_roots()), key=lambda r: sympy.N(r, digits))
    return [Fraction(str(sympy.N(r, digits))) for r in roots]
