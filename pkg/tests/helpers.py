"""Shared test utilities: an independent rewriting oracle and random builders.

The oracle normal-orders words by recursive rightmost-pair reduction and
multiplies by right-folded concatenation, deliberately a different code path
from the engine's iterative leftmost worklist.
"""

from __future__ import annotations

import random
from fractions import Fraction

from pcqm.operators import NcPolynomial, gen
from pcqm.scalars import (
    BaseScalar,
    GaussianRational,
    PC_ZERO,
    PcScalar,
    pc_imag,
)

MINUS_I = pc_imag(-1)


def oracle_normal_order(terms: dict[tuple, PcScalar]) -> dict[tuple, PcScalar]:
    out: dict[tuple, PcScalar] = {}

    def reduce(word: tuple, coeff: PcScalar) -> None:
        for t in range(len(word) - 2, -1, -1):
            a, b = word[t], word[t + 1]
            if a.sort_key > b.sort_key:
                reduce(word[:t] + (b, a) + word[t + 2 :], coeff)
                if (
                    a.kind == "P"
                    and b.kind == "X"
                    and a.branch == b.branch
                    and a.index == b.index
                ):
                    reduce(word[:t] + word[t + 2 :], coeff * MINUS_I)
                return
        total = out.get(word, PC_ZERO) + coeff
        if total.is_zero():
            out.pop(word, None)
        else:
            out[word] = total

    for word, coeff in terms.items():
        reduce(word, coeff)
    return out


def oracle_multiply(p: dict[tuple, PcScalar], q: dict[tuple, PcScalar]) -> dict[tuple, PcScalar]:
    raw: dict[tuple, PcScalar] = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            word = w1 + w2
            prev = raw.get(word, PC_ZERO)
            raw[word] = prev + c1 * c2
    return oracle_normal_order(raw)


def oracle_poly(p: NcPolynomial) -> dict[tuple, PcScalar]:
    return {w: c for w, c in p.terms().items() if not c.is_zero()}


def assert_oracle_equal(p: NcPolynomial, terms: dict[tuple, PcScalar]) -> None:
    cleaned = {w: c for w, c in terms.items() if not c.is_zero()}
    assert p.terms() == cleaned


ALL_GENERATORS = tuple(
    gen(kind, branch, index)
    for kind in ("X", "P")
    for branch in ("+", "-")
    for index in (1, 2, 3, 4)
)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 4))


def random_pc_scalar(rng: random.Random, max_degree: int = 1) -> PcScalar:
    def part() -> BaseScalar:
        terms = {}
        for _ in range(rng.randint(0, 2)):
            deg = rng.randint(-max_degree, max_degree)
            terms[deg] = GaussianRational(random_rational(rng), random_rational(rng))
        return BaseScalar(terms)

    return PcScalar(part(), part())


def random_word(rng: random.Random, max_len: int = 2, branch: str | None = None) -> tuple:
    pool = (
        ALL_GENERATORS
        if branch is None
        else tuple(g for g in ALL_GENERATORS if g.branch == branch)
    )
    return tuple(rng.choice(pool) for _ in range(rng.randint(0, max_len)))


def random_poly(
    rng: random.Random,
    max_terms: int = 3,
    max_len: int = 2,
    branch: str | None = None,
    normalized: bool = True,
) -> NcPolynomial:
    terms: dict[tuple, PcScalar] = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[random_word(rng, max_len, branch)] = random_pc_scalar(rng)
    poly = NcPolynomial(terms)
    if normalized:
        from pcqm.operators import normal_form

        poly = normal_form(poly)
    return poly
