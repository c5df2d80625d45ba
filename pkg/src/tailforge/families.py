"""Coefficient-space actions of the basic operations and polynomial families.

A basic operation on roots (x -> -x, 1/x, x + k) is realised on coefficient
vectors by an integer matrix.  Polynomials whose roots are permuted by a
word of basic operations are eigenvectors of the word's action, which gives
whole families of cubics with a prescribed root-relating map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lft import (
    LFTMatrix,
    NEG,
    REC,
    BasicOp,
    ad,
    compose_word,
    conjugate_by_basic,
    order_in_pgl,
    plus,
    standard_form,
)
from .linalg import charpoly, integer_vector, matmul, nullspace, rref
from .polycore import IntPoly

__all__ = [
    "CoeffAction",
    "PolyFamily",
    "coefficient_action",
    "word_to_action",
    "rational_eigenspaces",
    "family_from_word",
    "enumerate_order3",
    "simplify_by_conjugation",
    "ORDER3_TARGET",
]

MAX_DEGREE = 6
ORDER3_TARGET = LFTMatrix(1, -1, 1, 0)
PARAM_NAMES = "acegbdfhijklm"


@dataclass(frozen=True)
class CoeffAction:
    matrix: tuple[tuple[int, ...], ...]
    degree: int

    def __call__(self, p: IntPoly) -> IntPoly:
        v = list(p.coeffs)
        if len(v) != self.degree + 1:
            raise ValueError(f"expected degree {self.degree}, got {p.degree}")
        return IntPoly(sum(a * x for a, x in zip(row, v)) for row in self.matrix)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def __matmul__(self, other: CoeffAction) -> CoeffAction:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        prod = matmul(self.matrix, other.matrix)
        return CoeffAction(tuple(tuple(r) for r in prod), self.degree)


@dataclass(frozen=True)
class PolyFamily:
    """Integer coefficient vectors spanning one rational eigenspace.

    Basis vectors keep their full length (a leading zero is meaningful here),
    so they are plain tuples rather than :class:`IntPoly`.
    """

    basis: tuple[tuple[int, ...], ...]
    eigenvalue: Fraction
    description: str

    @property
    def parameters(self) -> str:
        return PARAM_NAMES[: len(self.basis)]

    def member(self, *params: int) -> IntPoly:
        if len(params) != len(self.basis):
            raise ValueError(f"family has {len(self.basis)} parameters")
        cs = [0] * len(self.basis[0])
        for lam, b in zip(params, self.basis):
            for i, c in enumerate(b):
                cs[i] += lam * c
        return IntPoly(cs)


def _check_degree(degree: int):
    if not 1 <= degree <= MAX_DEGREE:
        raise ValueError(f"degree {degree} outside supported range 1..{MAX_DEGREE}")


def _shift_raw(coeffs: Sequence[int], k: int) -> list[int]:
    """Coefficients of p(x + k) for a raw vector (leading zeros kept)."""
    out = [0] * len(coeffs)
    for c in coeffs:
        # out <- out * (x + k) + c, dropping the overflow slot which stays zero
        nxt = out[1:] + [0]
        for i in range(len(out)):
            nxt[i] += k * out[i]
        nxt[-1] += c
        out = nxt
    return out


def _transform(op: BasicOp, coeffs: Sequence[int]) -> list[int]:
    if op.kind == "r":
        return list(reversed(coeffs))
    if op.kind == "n":
        return [c if i % 2 == 0 else -c for i, c in enumerate(coeffs)]
    # Roots move to r + k, i.e. q(x) = p(x - k).
    return _shift_raw(coeffs, -op.k)


def coefficient_action(op: BasicOp, degree: int) -> CoeffAction:
    """Matrix A with A·coeffs(p) = coeffs of a polynomial whose roots are op(roots of p)."""
    _check_degree(degree)
    n = degree + 1
    cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        cols.append(_transform(op, e))
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return CoeffAction(rows, degree)


def word_to_action(word: Sequence[BasicOp], degree: int) -> CoeffAction:
    """Action of the composition word[0]∘word[1]∘…; the last op acts on roots first."""
    _check_degree(degree)
    if not word:
        raise ValueError("word must be nonempty")
    act = coefficient_action(word[0], degree)
    for op in word[1:]:
        act = act @ coefficient_action(op, degree)
    return act


def _rational_roots_int(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Rational roots of a polynomial with rational coefficients (exact test)."""
    from math import lcm

    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    # Strip zero roots first.
    roots = []
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(ints) == 1:
        return roots
    lead, const = abs(ints[0]), abs(ints[-1])
    for q in _divisors(lead):
        for p in _divisors(const):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in ints:
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i * i != n:
                out.append(n // i)
        i += 1
    return sorted(out)


def _reverse_rref_basis(vectors: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Canonical integer basis: RREF taken from the last coordinate backwards.

    For the cubic family this yields <1,-3,0,1>, <0,-1,1,0>, pivoting on the
    constant and linear coefficients.
    """
    if not vectors:
        return []
    flipped = [list(reversed(v)) for v in vectors]
    red, pivots = rref(flipped)
    # integer_vector makes the first entry of the flipped row (the pivot) positive
    basis = [list(reversed(integer_vector(red[i]))) for i in range(len(pivots))]
    basis.sort(key=lambda v: next(i for i, x in enumerate(v) if x != 0))
    return basis


def _render_family(basis: Sequence[Sequence[int]], names: str = PARAM_NAMES) -> str:
    if not basis:
        return "0"
    n = len(basis[0])
    deg = n - 1
    pieces = []
    for i in range(n):
        terms = [(basis[j][i], names[j]) for j in range(len(basis)) if basis[j][i] != 0]
        if not terms:
            continue
        expr = ""
        for k, (c, name) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if k else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            expr += f"{sign}{mag}{name}"
        power = deg - i
        var = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
        if len(terms) > 1 or (terms[0][0] < 0 and var):
            coef = f"({expr})" if len(terms) > 1 else expr
        else:
            coef = expr
        pieces.append(coef + var)
    out = pieces[0]
    for piece in pieces[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out


def rational_eigenspaces(a: CoeffAction) -> list[PolyFamily]:
    """Eigenspaces for the rational eigenvalues of an integer coefficient action."""
    rows = a.rows()
    n = len(rows)
    cp = charpoly(rows)
    families = []
    for lam in _rational_roots_int(cp):
        shifted = [[Fraction(rows[i][j]) - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        basis = _reverse_rref_basis(nullspace(shifted, n))
        families.append(PolyFamily(tuple(tuple(v) for v in basis), lam, _render_family(basis)))
    return families


def family_from_word(word: Sequence[BasicOp]) -> PolyFamily:
    """Cubics whose roots are cycled by the LFT of ``word`` (composition order)."""
    m = compose_word(word)
    if order_in_pgl(m) != 3 or ad(standard_form(m)) != 1:
        raise ValueError(f"word {' '.join(map(str, word))} does not give an order-3, ad-1 map")
    for fam in rational_eigenspaces(word_to_action(word, 3)):
        if fam.eigenvalue == 1:
            return fam
    raise ValueError("no eigenvalue-1 eigenspace")


def enumerate_order3(alpha_range) -> list[LFTMatrix]:
    """Standard-form order-3 matrices with delta = -1 - alpha and beta*gamma = -(1 + alpha + alpha^2)."""
    lo, hi = alpha_range
    out = []
    seen = set()
    for alpha in range(lo, hi + 1):
        delta = -1 - alpha
        prod = -(1 + alpha + alpha * alpha)
        for d in _divisors(abs(prod)):
            for beta in (d, -d):
                gamma = prod // beta
                m = standard_form(LFTMatrix(alpha, beta, gamma, delta))
                if m.entries not in seen:
                    seen.add(m.entries)
                    out.append(m)
    return out


def _size(m: LFTMatrix) -> int:
    return max(abs(v) for v in m.entries)


def simplify_by_conjugation(m: LFTMatrix) -> tuple[LFTMatrix, tuple[BasicOp, ...], bool]:
    """Shrink an order-3, ad-1 matrix by conjugating with r and p_k.

    Returns ``(reduced, word, reached)``: ``word`` lists the conjugations in
    the order applied, and ``reached`` says whether the result is projectively
    [[1,-1],[1,0]].  The loop stops as soon as a round fails to shrink the
    largest entry, so a non-reducing fixed point is reported, not hidden.
    """
    if order_in_pgl(m) != 3 or ad(standard_form(m)) != 1:
        raise ValueError("simplify_by_conjugation needs an order-3 matrix with ad 1")
    word: list[BasicOp] = []
    cur = m
    while True:
        cand, ops = cur, []
        if abs(cand.gamma) > abs(cand.beta):
            cand = conjugate_by_basic(cand, REC)
            ops.append(REC)
        if cand.gamma != 0:
            k = _best_shift(cand.alpha, cand.gamma)
            if k:
                cand = conjugate_by_basic(cand, plus(k))
                ops.append(plus(k))
        if ops and _size(cand) < _size(cur):
            cur = cand
            word.extend(ops)
        else:
            break
    target = standard_form(ORDER3_TARGET)
    for tail in ((), (REC,), (NEG,), (REC, NEG), (NEG, REC)):
        cand = cur
        for op in tail:
            cand = conjugate_by_basic(cand, op)
        if standard_form(cand) == target:
            return standard_form(cand), tuple(word) + tail, True
    return standard_form(cur), tuple(word), False


def _best_shift(alpha: int, gamma: int) -> int:
    q = -alpha // gamma
    return min((q, q + 1), key=lambda k: (abs(alpha + k * gamma), abs(k)))
