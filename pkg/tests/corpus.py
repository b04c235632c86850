"""Random valid exponent lists shared by the property and acceptance tests."""

import random
from fractions import Fraction
from math import lcm

from hypothesis import assume
from hypothesis import strategies as st

from milnor_motive.monodromy import milnor_number, monodromy_recursion
from milnor_motive.puiseux import ExponentList, decompose

MAX_DEN = 9
MAX_NUM = 60
MAX_LEVELS = 4
# spectra are enumerated term by term; see README for why larger towers are excluded
MILNOR_CAP = 200_000

CANDIDATES = sorted(
    {
        Fraction(p, q)
        for q in range(2, MAX_DEN + 1)
        for p in range(q + 1, MAX_NUM + 1)
        if Fraction(p, q).denominator > 1
    }
)


def next_candidates(exps: list) -> list:
    """Exponents that can follow ``exps`` and stay essential."""
    e = lcm(1, *(q.denominator for q in exps))
    lo = exps[-1] if exps else Fraction(1)
    return [q for q in CANDIDATES if q > lo and lcm(e, q.denominator) > e]


def random_tower(rng: random.Random, max_levels: int = MAX_LEVELS, cap: int = MILNOR_CAP):
    while True:
        target = rng.randint(1, max_levels)
        exps = []
        while len(exps) < target:
            options = next_candidates(exps)
            if not options:
                break
            exps.append(rng.choice(options))
        if len(exps) != target:
            continue
        tower = decompose(ExponentList(tuple(exps)))
        if milnor_number(monodromy_recursion(tower)) <= cap:
            return tower


def random_corpus(size: int = 200, seed: int = 20161016):
    rng = random.Random(seed)
    return [random_tower(rng) for _ in range(size)]


@st.composite
def exponent_lists(draw, max_levels: int = 3, cap: int = 20_000):
    """Hypothesis strategy for valid ExponentLists (possibly empty)."""
    target = draw(st.integers(0, max_levels))
    exps = []
    while len(exps) < target:
        options = next_candidates(exps)
        if not options:
            break
        exps.append(draw(st.sampled_from(options)))
    result = ExponentList(tuple(exps))
    assume(milnor_number(monodromy_recursion(decompose(result))) <= cap)
    return result
