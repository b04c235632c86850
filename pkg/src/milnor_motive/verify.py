"""Cross-checks between the motive, spectrum and monodromy computations.

Each check returns a bool; :func:`run_checks` collects them by name for
the CLI's ``--verify`` flag.
"""

from __future__ import annotations

from math import gcd

from ._ring import SpectrumElem
from .monodromy import (
    CycloProduct,
    eigenvalue_orders,
    expand,
    milnor_number,
    root_multiplicity,
    totient,
)
from .motive import POINT, MotiveExpr, theorem1_step
from .puiseux import ExponentTower
from .spectrum import spectrum_via_motive


def theorem_composition(tower: ExponentTower, motive: MotiveExpr) -> bool:
    """Folding the uncombined step over the tower reproduces ``motive``."""
    folded = MotiveExpr.of(POINT)
    for data, _ in reversed(tower.levels):
        folded = theorem1_step(folded, data.m, data.n, data.dprime)
    return folded == motive


def path_equivalence(spectrum: SpectrumElem, motive: MotiveExpr) -> bool:
    return spectrum_via_motive(motive) == spectrum


def reflection_symmetry(spectrum: SpectrumElem) -> bool:
    return spectrum.reflected() == spectrum


def spectrum_support(spectrum: SpectrumElem) -> bool:
    """Positive multiplicities, support inside (0, 1) and (1, 2)."""
    if not spectrum.is_effective() or spectrum.coeff(1):
        return False
    return spectrum.restricted(0, 2) == spectrum


def cardinality(spectrum: SpectrumElem, h: CycloProduct) -> bool:
    return spectrum.total() == milnor_number(h)


def expand_degree(h: CycloProduct) -> bool:
    try:
        poly = expand(h)
    except ValueError:
        return False
    if h.degree == 0:
        return poly == (1,)
    return poly.degree == milnor_number(h)


def no_root_at_one(h: CycloProduct) -> bool:
    return root_multiplicity(h, 0, 1) == 0


def eigenvalue_consistency(spectrum: SpectrumElem, h: CycloProduct) -> bool:
    """Spectral numbers mod 1 match the roots of ``h`` with multiplicity.

    Every residue p/q present in the spectrum must carry exactly
    ``root_multiplicity(h, p, q)``; and the residues with a nonzero root
    multiplicity (phi(q) of them for each such q) must all be present.
    """
    den, terms = spectrum.residues().scaled_terms()
    cache: dict[int, int] = {}
    for r, c in terms.items():
        g = gcd(r, den)
        p, q = r // g, den // g
        if q not in cache:
            cache[q] = root_multiplicity(h, p, q)
        if cache[q] != c:
            return False
    expected = sum(totient(q) for q in eigenvalue_orders(h))
    return expected == len(terms)


def run_checks(
    tower: ExponentTower, motive: MotiveExpr, spectrum: SpectrumElem, h: CycloProduct
) -> list[tuple[str, bool]]:
    return [
        ("theorem_composition", theorem_composition(tower, motive)),
        ("path_equivalence", path_equivalence(spectrum, motive)),
        ("reflection_symmetry", reflection_symmetry(spectrum)),
        ("spectrum_support", spectrum_support(spectrum)),
        ("cardinality_equals_milnor", cardinality(spectrum, h)),
        ("eigenvalue_consistency", eigenvalue_consistency(spectrum, h)),
        ("expand_degree", expand_degree(h)),
        ("no_root_at_one", no_root_at_one(h)),
    ]
