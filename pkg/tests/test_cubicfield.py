import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from tailforge.cfengine import cf_expand, common_tail_prefix, isolate_real_roots
from tailforge.cubicfield import (
    ClassificationReport,
    MuNu,
    QrElement,
    class_representative,
    classify_cubic,
    element_to_lft,
    element_value,
    elements_equivalent,
    lft_to_element,
    mu_nu,
    signed_sqrt_discriminant,
    solve_root_relation,
    verify_root_cycle,
)
from tailforge.lft import LFTMatrix, apply, canonical_triple, compose, compose_word, is_scalar, plus, REC
from tailforge.polycore import IntPoly, cubic_discriminant, irreducible_over_rationals, is_perfect_square

from helpers import basic_ops

FLAGSHIP = IntPoly([1, 6, 9, 1])
R = QrElement(0, 1, 0)


@st.composite
def qualifying_cubics(draw):
    """Members a x^3 + (-3a - c) x^2 + c x + a of the order-3 family, kept when irreducible."""
    a = draw(st.integers(1, 6))
    c = draw(st.integers(-15, 15))
    p = IntPoly([a, -3 * a - c, c, a])
    assume(irreducible_over_rationals(p))
    return p


elements = st.tuples(
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
).filter(lambda v: v[0] != 0 or v[1] != 0).map(lambda v: QrElement(*v))


def ordered(p):
    return isolate_real_roots(p)


# --- element <-> LFT --------------------------------------------------------

@pytest.mark.parametrize(
    "e, entries", [((0, 1, 0), (1, 0, 0, 1)), ((1, 0, 0), (9, 1, -1, -6)), ((0, 1, 5), (1, 5, 0, 1))]
)
def test_element_to_lft_examples(e, entries):
    assert element_to_lft(QrElement(*e), FLAGSHIP).entries == entries


def test_element_to_lft_errors():
    with pytest.raises(ValueError):
        element_to_lft(QrElement(0, 0, 3), FLAGSHIP)
    with pytest.raises(ValueError):
        element_to_lft(R, IntPoly([1, 0, -2]))


def test_square_of_root_numerically():
    r = ordered(FLAGSHIP)[2]
    v = element_value(QrElement(1, 0, 0), r)
    assert abs(float(v) - float(r) ** 2) < 1e-12


@given(qualifying_cubics(), elements)
def test_element_value_matches_direct_evaluation(p, e):
    for r in ordered(p):
        x = float(r)
        expected = float(e.s) * x * x + float(e.t) * x + float(e.u)
        assert abs(float(element_value(e, r, p)) - expected) < 1e-9 * max(1, abs(expected))


@given(qualifying_cubics(), elements)
def test_lft_element_round_trip(p, e):
    m = element_to_lft(e, p)
    assert lft_to_element(m, p) == e


def test_qr_element_parse():
    assert QrElement.parse("1, -2/3, 0") == QrElement(1, Fraction(-2, 3), 0)
    with pytest.raises(ValueError):
        QrElement.parse("1,2")


# --- square root of the discriminant and mu, nu -----------------------------

def test_signed_sqrt_discriminant_orientation():
    r1, r2, r3 = ordered(FLAGSHIP)
    assert signed_sqrt_discriminant(FLAGSHIP, [r3, r1, r2]) == 9
    assert signed_sqrt_discriminant(FLAGSHIP, [r3, r2, r1]) == -9
    assert signed_sqrt_discriminant(FLAGSHIP, [r1, r2, r3]) == 9


def test_signed_sqrt_discriminant_errors():
    with pytest.raises(ValueError):
        signed_sqrt_discriminant(IntPoly([1, 0, 0, -2]), ordered(IntPoly([1, 0, 0, -2])))
    rep = IntPoly([1, -2, 1, 0])  # x (x - 1)^2, discriminant 0
    with pytest.raises(ValueError):
        signed_sqrt_discriminant(rep, ordered(rep))


def test_mu_nu_examples():
    assert mu_nu(FLAGSHIP, 9) == MuNu(Fraction(-21), Fraction(-30), Fraction(9))
    assert mu_nu(FLAGSHIP, -9) == MuNu(Fraction(-30), Fraction(-21), Fraction(-9))


@given(qualifying_cubics())
def test_mu_plus_nu(p):
    a, b, c, d = p.coeffs
    mn = mu_nu(p, Fraction(is_perfect_square(cubic_discriminant(p)), a * a))
    assert mn.mu + mn.nu == Fraction(3 * d, a) - Fraction(b * c, a * a)


# --- the root relation ------------------------------------------------------

def test_solve_flagship():
    m = solve_root_relation(FLAGSHIP, MuNu(Fraction(-21), Fraction(-30), Fraction(9)))
    assert m.entries == (3, 7, -1, -2)
    al, be, ga, de = m.entries
    # the three linear conditions, written out with b=6, c=9, d=1, mu=-21, nu=-30
    assert 6 * al - 3 * be + 9 * ga - 6 * de == 0
    assert -9 * al + 6 * be - 3 * ga + 9 * de == 0
    assert 30 * al + (18 - 36) * be + 6 * ga - 21 * de == 0


def test_solve_other_sign_gives_inverse():
    m = solve_root_relation(FLAGSHIP, MuNu(Fraction(-30), Fraction(-21), Fraction(-9)))
    assert m.entries == (2, 7, -1, -3)
    assert is_scalar(compose(m, LFTMatrix(3, 7, -1, -2)))
    r1, r2, r3 = ordered(FLAGSHIP)
    assert verify_root_cycle(m, [r1, r3, r2])


def test_solve_family_member():
    p = IntPoly([1, -3, 0, 1])
    assert solve_root_relation(p, mu_nu(p, -9)).entries == (1, -1, 1, 0)
    assert is_scalar(compose(solve_root_relation(p, mu_nu(p, 9)), LFTMatrix(1, -1, 1, 0)))


@given(qualifying_cubics())
def test_relation_cubes_to_scalar_and_cycles_roots(p):
    roots = ordered(p)
    m = solve_root_relation(p, mu_nu(p, signed_sqrt_discriminant(p, roots)))
    assert is_scalar(compose(compose(m, m), m))
    assert verify_root_cycle(m, roots)
    x = apply(m, roots[0])
    assert roots[1].lo < float(x) < roots[1].hi or abs(float(x) - float(roots[1])) < 1e-12


# --- classification ---------------------------------------------------------

def test_classify_flagship():
    rep = classify_cubic(FLAGSHIP, 8)
    assert rep.discriminant == 81 and rep.disc_square_root == 9 and rep.irreducible
    assert rep.relating_matrix.entries == (3, 7, -1, -2)
    assert rep.ad_value == 1 and rep.common_tails is True
    assert [c.terms for c in rep.cf_prefixes] == [
        (-4, 2, 7, 3, 2, 3, 1, 1),
        (-3, 1, 1, 1, 7, 3, 2, 3),
        (-1, 1, 7, 3, 2, 3, 1, 1),
    ]


def test_classify_non_square():
    rep = classify_cubic(IntPoly([1, 0, 0, -2]))
    assert rep.discriminant == -108 and rep.disc_square_root is None
    assert rep.common_tails is None and rep.relating_matrix is None


def test_classify_family_member():
    assert classify_cubic(IntPoly([1, -3, 0, 1])).common_tails is True
    assert classify_cubic(IntPoly([1, 0, -3, 1])).common_tails is True


def test_classify_reducible_square():
    rep = classify_cubic(IntPoly([1, -6, 11, -6]))  # (x-1)(x-2)(x-3)
    assert rep.disc_square_root == 2 and not rep.irreducible and rep.common_tails is None


def test_classify_wrong_degree():
    with pytest.raises(ValueError):
        classify_cubic(IntPoly([1, 0, -2]))


def test_report_json_round_trip_and_field_order():
    rep = classify_cubic(FLAGSHIP, 5)
    data = json.loads(rep.to_json())
    assert list(data) == ["poly", "disc", "disc_sqrt", "irreducible", "matrix", "ad", "common_tails", "cf_prefixes", "elapsed_ms"]
    back = ClassificationReport.from_dict(data)
    assert back.to_dict(timing=False) == rep.to_dict(timing=False)
    assert "elapsed_ms" not in rep.to_dict(timing=False)


WITNESS_BOX = [(1, -12, -9, 1), (1, -7, 0, 7), (1, -1, -9, 1), (1, -3, -10, -1), (1, 6, 9, 1), (1, 0, -3, 1), (1, -7, 10, 7)]


@pytest.mark.parametrize("coeffs", WITNESS_BOX)
def test_verdict_agrees_with_cf_evidence(coeffs):
    p = IntPoly(coeffs)
    rep = classify_cubic(p, 0)
    exps = [cf_expand(r, 40) for r in ordered(p)]
    pairs = [common_tail_prefix(exps[i], exps[j], 15, min_match=10) for i in range(3) for j in range(i + 1, 3)]
    if rep.common_tails:
        assert all(pairs)
    else:
        assert not any(pairs)


# --- equivalence of elements ------------------------------------------------

def test_equivalence_examples():
    r2 = QrElement(1, 0, 0)
    assert elements_equivalent(R, QrElement(0, 1, 7), FLAGSHIP)
    assert not elements_equivalent(R, r2, FLAGSHIP)
    image = lft_to_element(compose(compose_word([plus(5), REC]), element_to_lft(r2, FLAGSHIP)), FLAGSHIP)
    assert elements_equivalent(r2, image, FLAGSHIP)
    assert canonical_triple(element_to_lft(image, FLAGSHIP)).key == (1, 6, 53)


def test_class_representative_examples():
    assert class_representative(R, FLAGSHIP) == (1, 0)
    assert class_representative(QrElement(0, Fraction(2, 3), Fraction(1, 3)), FLAGSHIP) == (Fraction(2, 3), Fraction(1, 3))
    assert class_representative(QrElement(1, 0, 0), FLAGSHIP) == (Fraction(1, 53), Fraction(6, 53))


def test_equivalence_rejects_rational():
    with pytest.raises(ValueError):
        elements_equivalent(R, QrElement(0, 0, 1), FLAGSHIP)
    with pytest.raises(ValueError):
        class_representative(QrElement(0, 0, 1), FLAGSHIP)


@given(qualifying_cubics(), elements, st.lists(basic_ops, max_size=10))
def test_equivalent_to_basic_op_image(p, e, word):
    m = compose(compose_word(word), element_to_lft(e, p)) if word else element_to_lft(e, p)
    image = lft_to_element(m, p)
    assert elements_equivalent(e, image, p)


@given(qualifying_cubics(), elements, elements, elements)
def test_equivalence_relation(p, e1, e2, e3):
    eq = lambda x, y: elements_equivalent(x, y, p)
    assert eq(e1, e1)
    assert eq(e1, e2) == eq(e2, e1)
    if eq(e1, e2) and eq(e2, e3):
        assert eq(e1, e3)
    assert eq(e1, e2) == (class_representative(e1, p) == class_representative(e2, p))


@given(qualifying_cubics(), elements)
def test_representative_is_equivalent(p, e):
    mu, nu = class_representative(e, p)
    assert mu > 0 and 0 <= nu < 1
    assert elements_equivalent(e, QrElement(0, mu, nu), p)


def test_frozen_false_witness():
    """First cubic in the a=1, |b|,|c|,|d| <= 12 scan with a square discriminant and no common tails."""
    rep = classify_cubic(IntPoly([1, -12, -9, 1]), 0)
    assert rep.irreducible and rep.disc_square_root is not None
    assert rep.relating_matrix.entries == (14, 13, -19, 3)
    assert rep.ad_value == 289 and rep.common_tails is False
