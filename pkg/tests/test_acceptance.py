"""Acceptance criteria, each checked at its stated tolerance.

Every test prints one PASS/FAIL line; the lines are collected again in the
pytest terminal summary.
"""

import random
from fractions import Fraction

import sympy

from tailforge.cfengine import (
    PeriodicCF,
    cf_expand,
    common_tail_prefix,
    convergents,
    detect_period,
    isolate_real_roots,
    quadratic_equivalent,
    refine,
)
from tailforge.cubicfield import (
    QrElement,
    class_representative,
    classify_cubic,
    element_to_lft,
    element_value,
    elements_equivalent,
    lft_to_element,
)
from tailforge.families import coefficient_action, family_from_word, rational_eigenspaces, word_to_action
from tailforge.highdeg import numeric_common_tails, sextic_family, verify_klein4
from tailforge.lft import NEG, REC, LFTMatrix, ad, apply, canonical_triple, compose, compose_word, order_in_pgl, parse_word, plus, replay_rows, standard_form
from tailforge.linalg import same_span
from tailforge.polycore import IntPoly, cubic_discriminant, irreducible_over_rationals, parse_polynomial
from tailforge.scan import ScanConfig, run_scan

CASES = 1000
# Lexicographically first common_tails=false cubic in the a=1, |b|,|c|,|d| <= 12 box.
WITNESS = (1, -12, -9, 1)


def _ops(rng, n):
    out = []
    for _ in range(n):
        kind = rng.choice("nrp")
        out.append(NEG if kind == "n" else REC if kind == "r" else plus(rng.randint(-6, 6)))
    return out


def _random_poly(rng, lo_deg, hi_deg, bound=12):
    deg = rng.randint(lo_deg, hi_deg)
    return IntPoly([rng.choice([c for c in range(-bound, bound + 1) if c])] + [rng.randint(-bound, bound) for _ in range(deg)])


def _irrational_real_roots(rng, lo_deg=2, hi_deg=5):
    while True:
        p = _random_poly(rng, lo_deg, hi_deg)
        if irreducible_over_rationals(p):
            roots = isolate_real_roots(p)
            if roots:
                return p, roots


# ---------------------------------------------------------------------------

def test_criterion_01_flagship(criterion):
    def run():
        rep = classify_cubic(parse_polynomial("x^3+6x^2+9x+1"))
        m = rep.relating_matrix
        ok = (
            rep.discriminant == 81
            and rep.disc_square_root == 9
            and rep.irreducible is True
            and standard_form(m) == standard_form(LFTMatrix(3, 7, -1, -2))
            and rep.ad_value == 1
            and rep.common_tails is True
        )
        return ok, f"disc={rep.discriminant} sqrt={rep.disc_square_root} matrix={m} ad={rep.ad_value} common_tails={rep.common_tails}"

    criterion(1, "flagship cubic classification", run)


def test_criterion_02_cf_regression(criterion):
    def run():
        got = [cf_expand(r, 8).terms for r in isolate_real_roots(IntPoly([1, 6, 9, 1]))]
        want = [(-4, 2, 7, 3, 2, 3, 1, 1), (-3, 1, 1, 1, 7, 3, 2, 3), (-1, 1, 7, 3, 2, 3, 1, 1)]
        return got == want, " ".join(str(list(g)) for g in got)

    criterion(2, "8-term expansions of the flagship roots", run)


def test_criterion_03_quadratic(criterion):
    def run():
        p = IntPoly([14, 3, -7])
        neg, pos = isolate_real_roots(p)
        pp, pn = detect_period(pos), detect_period(neg)
        eq = quadratic_equivalent(p)
        ok = pp == PeriodicCF((0, 1), (1, 1, 1, 4, 2)) and pn == PeriodicCF((-1, 5), (1, 1, 1, 2, 4)) and eq is False
        return ok, f"{pp} {pn} equivalent={eq}"

    criterion(3, "periodic expansions of 14x^2+3x-7", run)


def test_criterion_04_canonical_reduction(criterion):
    def run():
        m = LFTMatrix(1, 3, 2, 5)
        t = canonical_triple(m)
        ident = LFTMatrix(1, 0, 0, 1)
        replay = replay_rows(m, t.word)
        fixed = replay_rows(m, parse_word("r p-2 r n p-3"))
        ok = t.key == (1, 0, 1) and replay == ident and fixed == ident
        return ok, f"triple={t.key} word={' '.join(map(str, t.word))} replay={replay} fixed-word={fixed}"

    criterion(4, "canonical reduction of (1,3;2,5)", run)


def test_criterion_05_orders(criterion):
    def run():
        cases = [((1, -1, 1, 0), 3), ((1, -1, 1, 1), 4), ((2, -1, 1, 1), 6), ((1, 1, 0, 1), float("inf"))]
        got = [order_in_pgl(LFTMatrix(*e)) for e, _ in cases]
        ads = (ad(LFTMatrix(1, -1, 1, 1)), ad(LFTMatrix(2, -1, 1, 1)))
        ok = got == [o for _, o in cases] and ads == (2, 3)
        return ok, f"orders={got} ad(order4, order6)={ads}"

    criterion(5, "projective orders", run)


def test_criterion_06_eigenvectors(criterion):
    def run():
        word = parse_word("n p-1 r")
        rows = word_to_action(word, 3).rows()
        expected = [[0, 0, 0, 1], [0, 0, -1, -3], [0, 1, 2, 3], [-1, -1, -1, -1]]
        one = [f for f in rational_eigenspaces(word_to_action(word, 3)) if f.eigenvalue == 1]
        span_ok = len(one) == 1 and same_span(one[0].basis, [(1, -3, 0, 1), (0, -1, 1, 0)])
        desc = family_from_word(word).description
        ok = rows == expected and span_ok and desc == "ax^3+(-3a-c)x^2+cx+a"
        return ok, f"matrix-match={rows == expected} span-match={span_ok} family={desc}"

    criterion(6, "coefficient action and eigenspace", run)


def test_criterion_07_sextic(criterion):
    def run():
        p = sextic_family(1, -4)
        roots = isolate_real_roots(p)
        t = numeric_common_tails(p, depth=40, window=15)
        lengths = [ln for *_, ln in t.pairs]
        ok = (
            p.coeffs == (1, -3, -4, 13, -4, -3, 1)
            and irreducible_over_rationals(p)
            and len(roots) == 6
            and len(t.pairs) == 15
            and all(ln is not None and ln >= 10 for ln in lengths)
        )
        return ok, f"{p} real roots={len(roots)} matched={sum(ln is not None for ln in lengths)}/15 min length={min(l or 0 for l in lengths)}"

    criterion(7, "sextic construction and tails", run)


def test_criterion_08_quartic(criterion):
    def run():
        p = IntPoly([1, 0, -4, 0, 1])
        k4 = verify_klein4(p)
        t = numeric_common_tails(p, depth=40, window=15)
        ok = k4 and len(t.pairs) == 6 and t.all_matched
        return ok, f"klein4={k4} matched={sum(ln is not None for *_, ln in t.pairs)}/6"

    criterion(8, "Klein-4 quartic", run)


def test_criterion_09_properties(criterion):
    rng = random.Random(20240609)
    x = sympy.Symbol("x")
    counts = {}

    def invariance():
        n = 0
        for _ in range(CASES):
            while True:
                e = [rng.randint(-40, 40) for _ in range(4)]
                if e[0] * e[3] != e[1] * e[2]:
                    break
            m = LFTMatrix(*e)
            moved = replay_rows(m, _ops(rng, rng.randint(0, 12)))
            n += ad(moved) == ad(m) and canonical_triple(moved).key == canonical_triple(m).key
        return n

    def discriminant():
        n = 0
        for _ in range(CASES):
            p = _random_poly(rng, 3, 3, bound=50)
            sp = sympy.Poly(list(p.coeffs), x)
            n += cubic_discriminant(p) == -sympy.resultant(sp, sp.diff(x)) / p.leading
        return n

    def actions():
        n = 0
        w = Fraction(1, 10**12)
        while n < CASES:
            p = _random_poly(rng, 1, 4)
            op = _ops(rng, 1)[0]
            if op.kind == "r" and p.constant == 0:
                continue
            q = coefficient_action(op, p.degree)(p)
            before = [(r.lo + r.hi) / 2 for r in (refine(y, w) for y in isolate_real_roots(p))]
            after = sorted((r.lo + r.hi) / 2 for r in (refine(y, w) for y in isolate_real_roots(q)))
            images = sorted(op(y) for y in before)
            good = len(after) == len(images) and all(abs(a - b) < Fraction(1, 10**10) * max(1, abs(b)) for a, b in zip(after, images))
            if not good:
                return n
            n += 1
        return n

    def convergent_bound():
        n = 0
        while n < CASES:
            _, roots = _irrational_real_roots(rng)
            r = rng.choice(roots)
            terms = cf_expand(r, rng.randint(1, 20)).terms
            q_prev, q = 0, 1
            ok = True
            for k, c in enumerate(convergents(terms)):
                if k:
                    q_prev, q = q, terms[k] * q + q_prev
                y = refine(r, Fraction(1, 4 * q * q * 10**6))
                ok &= max(abs(y.lo - c), abs(y.hi - c)) < Fraction(1, q * q)
            if not ok:
                return n
            n += 1
        return n

    def tail_identities():
        n = 0
        while n < CASES:
            _, roots = _irrational_real_roots(rng, 2, 4)
            r = rng.choice(roots)
            a = cf_expand(r, 14).terms
            m = rng.randint(-9, 9)
            shift = cf_expand(apply(LFTMatrix(1, m, 0, 1), r), 12).terms == (a[0] + m,) + a[1:12]
            neg_exp = (-a[0] - 1, 1, a[1] - 1) + a[2:] if a[1] > 1 else (-a[0] - 1, a[2] + 1) + a[3:]
            neg = cf_expand(apply(LFTMatrix(-1, 0, 0, 1), r), 11).terms == neg_exp[:11]
            # reciprocal identity stated for positive x; move to x + |a0| + 1 > 1 first (part 1)
            pos = apply(LFTMatrix(1, abs(a[0]) + 1, 0, 1), r)
            b = cf_expand(pos, 12).terms
            rec = cf_expand(apply(LFTMatrix(0, 1, 1, 0), pos), 13).terms == (0,) + b
            if not (shift and neg and rec):
                return n
            n += 1
        return n

    def run():
        for name, fn in [("invariance", invariance), ("discriminant", discriminant), ("actions", actions), ("convergents", convergent_bound), ("tails", tail_identities)]:
            counts[name] = fn()
        ok = all(v == CASES for v in counts.values())
        return ok, " ".join(f"{k}={v}/{CASES}" for k, v in counts.items())

    criterion(9, "property suite", run)


def test_criterion_10_witness(criterion):
    def run():
        cfg = ScanConfig((1, 1), (-12, 12), (-12, 12), (-12, 12), workers=4, prefix_depth=0)
        false = [r for r in run_scan(cfg) if r.report.irreducible and r.report.common_tails is False]
        found = any(r.coeffs == WITNESS for r in false)
        t = numeric_common_tails(IntPoly(WITNESS), depth=40, window=15, min_match=10)
        ok = bool(false) and found and not t.any_matched
        return ok, f"false verdicts={len(false)} frozen witness {WITNESS} found={found} numeric matches={sum(ln is not None for *_, ln in t.pairs)}"

    criterion(10, "common_tails=false witness from the scan", run)


QUALIFYING = [
    (1, 6, 9, 1), (1, -3, 0, 1), (1, 0, -3, 1), (1, -7, 10, 7), (1, -12, -9, 1),
    (1, -7, 0, 7), (1, -1, -9, 1), (1, -3, -10, -1), (1, -6, -7, 11), (1, 9, -4, -4),
]


def test_criterion_11_equivalence_coherence(criterion):
    rng = random.Random(11)

    def element():
        while True:
            v = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
            if v[0] or v[1]:
                return QrElement(*v)

    def run():
        rep_agree = cf_agree = total = pairs_eq = 0
        for coeffs in QUALIFYING:
            p = IntPoly(coeffs)
            rep = classify_cubic(p, 0)
            assert rep.irreducible and rep.disc_square_root
            root = isolate_real_roots(p)[0]
            for k in range(20):
                e1 = element()
                if k % 2 == 0:
                    word = _ops(rng, rng.randint(1, 4))
                    e2 = lft_to_element(compose(compose_word(word), element_to_lft(e1, p)), p)
                else:
                    e2 = element()
                eq = elements_equivalent(e1, e2, p)
                pairs_eq += eq
                rep_agree += eq == (class_representative(e1, p) == class_representative(e2, p))
                c1 = cf_expand(element_value(e1, root, p), 40)
                c2 = cf_expand(element_value(e2, root, p), 40)
                hit = common_tail_prefix(c1, c2, 15, min_match=10)
                cf_agree += (hit is not None) == eq
                total += 1
        ok = total == 200 and rep_agree == total and cf_agree == total
        return ok, f"elements={total} equivalent pairs={pairs_eq} representative agreement={rep_agree}/{total} CF agreement={cf_agree}/{total}"

    criterion(11, "equivalence coherence", run)
