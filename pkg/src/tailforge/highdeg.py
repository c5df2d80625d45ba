"""Degree 4 and 6 constructions, the 2^k 3^m degree obstruction, and pairwise tail evidence."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations

from .cfengine import CFExpansion, cf_expand, common_tail_prefix, isolate_real_roots
from .families import PARAM_NAMES, _render_family, _reverse_rref_basis, coefficient_action, word_to_action
from .lft import NEG, REC, plus
from .linalg import identity, nullspace
from .polycore import (
    IntPoly,
    irreducible_over_rationals,
    negate_argument,
    proportional,
    reverse_coefficients,
)

__all__ = [
    "ObstructionVerdict",
    "EvidenceTable",
    "SexticConstraints",
    "RHO_WORD",
    "SIGMA_WORD",
    "degree_obstruction",
    "verify_klein4",
    "sextic_constraints",
    "sextic_family",
    "verify_sextic_action",
    "numeric_common_tails",
]

# rho(x) = -1/(x - 1): subtract 1, take the reciprocal, negate.
RHO_WORD = (NEG, REC, plus(-1))
SIGMA_WORD = (REC,)

DEFAULT_DEPTH = 40
DEFAULT_WINDOW = 15
DEFAULT_MIN_MATCH = 10


@dataclass(frozen=True)
class ObstructionVerdict:
    degree: int
    allowed: bool
    factorization: tuple[int, int] | None = None
    blocking_prime: int | None = None

    def __str__(self) -> str:
        if self.allowed:
            k, m = self.factorization
            return f"{self.degree} = 2^{k} * 3^{m}: allowed"
        return f"{self.degree}: blocked by prime {self.blocking_prime}"


def degree_obstruction(n: int) -> ObstructionVerdict:
    """Can an irreducible degree-n polynomial have all n real roots sharing a tail?"""
    if n < 1:
        raise ValueError("degree must be at least 1")
    rest, k, m = n, 0, 0
    while rest % 2 == 0:
        rest //= 2
        k += 1
    while rest % 3 == 0:
        rest //= 3
        m += 1
    if rest == 1:
        return ObstructionVerdict(n, True, (k, m))
    p = 5
    while rest % p:
        p += 2
    return ObstructionVerdict(n, False, blocking_prime=p)


def _real_root_count(p: IntPoly) -> int:
    return len(isolate_real_roots(p))


def verify_klein4(p: IntPoly) -> bool:
    """Root set closed under x -> -x and x -> 1/x, for an irreducible quartic with 4 real roots."""
    if p.degree != 4:
        raise ValueError(f"verify_klein4 needs degree 4, got {p.degree}")
    if p.constant == 0:
        return False
    closed = proportional(negate_argument(p), p) and proportional(reverse_coefficients(p), p)
    return closed and irreducible_over_rationals(p) and _real_root_count(p) == 4


@dataclass(frozen=True)
class SexticConstraints:
    """Solution space of the two closure conditions on ax^6 + bx^5 + ... + g."""

    basis: tuple[tuple[int, ...], ...]
    description: str
    relations: dict


def sextic_constraints() -> SexticConstraints:
    """Solve 1/x-closure (palindromy) and rho-closure exactly on degree-6 coefficient vectors."""
    n = 7
    eye = identity(n)
    rows = []
    for act in (coefficient_action(REC, 6), word_to_action(RHO_WORD, 6)):
        rows += [[act.matrix[i][j] - eye[i][j] for j in range(n)] for i in range(n)]
    basis = _reverse_rref_basis(nullspace(rows, n))
    letters = "abcdefg"
    names = PARAM_NAMES[: len(basis)]
    relations = {}
    for i, letter in enumerate(letters):
        relations[letter] = _render_family([[v[i]] for v in basis], names)
    return SexticConstraints(tuple(tuple(v) for v in basis), _render_family(basis, names), relations)


def sextic_family(a: int, c: int) -> IntPoly:
    """a x^6 - 3a x^5 + c x^4 + (5a - 2c) x^3 + c x^2 - 3a x + a."""
    if a == 0:
        raise ValueError("leading parameter a must be nonzero")
    return IntPoly([a, -3 * a, c, 5 * a - 2 * c, c, -3 * a, a])


def verify_sextic_action(p: IntPoly) -> bool:
    """Is p projectively fixed by the actions of rho = -1/(x-1) and sigma = 1/x?"""
    if p.degree != 6:
        raise ValueError(f"verify_sextic_action needs degree 6, got {p.degree}")
    rho = word_to_action(RHO_WORD, 6)
    sigma = word_to_action(SIGMA_WORD, 6)
    return proportional(rho(p), p) and proportional(sigma(p), p)


@dataclass
class EvidenceTable:
    roots: list[float]
    expansions: list[CFExpansion]
    pairs: list[tuple[int, int, int | None, int | None, int | None]]
    min_match: int = DEFAULT_MIN_MATCH

    @property
    def all_matched(self) -> bool:
        return all(length is not None for *_, length in self.pairs)

    @property
    def any_matched(self) -> bool:
        return any(length is not None for *_, length in self.pairs)

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in sorted(self.pairs, key=lambda t: (t[0], t[1]))]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def numeric_common_tails(
    p: IntPoly,
    depth: int = DEFAULT_DEPTH,
    window: int = DEFAULT_WINDOW,
    min_match: int = DEFAULT_MIN_MATCH,
    workers: int = 1,
) -> EvidenceTable:
    """Expand every real root and look for aligned tails on each pair.

    A pair counts as matched when offsets below ``window`` make the remaining
    terms agree over at least ``min_match`` places.  This is evidence only.
    """
    roots = isolate_real_roots(p)
    if len(roots) < 2:
        raise ValueError(f"{p} has fewer than two real roots")
    expand = partial(cf_expand, n=depth)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            expansions = list(pool.map(expand, roots))
    else:
        expansions = [expand(r) for r in roots]
    pairs = []
    for i, j in combinations(range(len(roots)), 2):
        hit = common_tail_prefix(expansions[i], expansions[j], window, min_match=min_match)
        pairs.append((i, j) + (hit if hit else (None, None, None)))
    return EvidenceTable([float(r) for r in roots], expansions, pairs, min_match)
