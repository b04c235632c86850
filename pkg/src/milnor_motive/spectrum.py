"""Hodge spectrum of a plane branch, computed two independent ways.

``spectrum_via_process`` works level by level on the torus-knot spectra
of the truncations (keep the part below 1, compress by ``1/d'``, take
``d'`` shifted copies, reflect across 1).  ``spectrum_via_motive`` applies
the spectrum map generator by generator to the motivic Milnor fiber and
returns ``Sp(1 - S)``.  The two must agree exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._ring import SpectrumElem
from .motive import FermatClass, MotiveExpr, MuRoots, Point
from .puiseux import ExponentTower

ONE = Fraction(1)


class UnsupportedMotiveError(ValueError):
    """The motive contains a term outside the image of the recursion."""


def _check_coprime(m: int, n: int, minimum: int = 1) -> None:
    if gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} must be coprime")
    if min(m, n) < minimum:
        raise ValueError(f"m and n must be at least {minimum}, got ({m}, {n})")


def _torus_numerators(m: int, n: int):
    # i/m + j/n over the denominator m*n
    return (i * n + j * m for i in range(1, m) for j in range(1, n))


def torus_knot_spectrum(m: int, n: int) -> SpectrumElem:
    """Spectrum of ``y^m - x^n``: ``{i/m + j/n : 0 < i < m, 0 < j < n}``."""
    _check_coprime(m, n, minimum=2)
    return SpectrumElem.from_numerators(m * n, _torus_numerators(m, n))


def guibert_sp_f1(m: int, n: int) -> SpectrumElem:
    """Signed ``Sp([f_1 - 1]) = t - sum t^{i/m + j/n}``."""
    _check_coprime(m, n)
    return SpectrumElem.monomial(1) + SpectrumElem.from_numerators(
        m * n, _torus_numerators(m, n), sign=-1
    )


def split_sp_f1(m: int, n: int) -> tuple[SpectrumElem, SpectrumElem]:
    """Split :func:`guibert_sp_f1` into exponents below 1 and exponents at least 1."""
    sp = guibert_sp_f1(m, n)
    return sp.restricted(hi=1), sp.restricted(lo=1, closed=True)


def _roots_of_unity(e: int) -> SpectrumElem:
    # 1 + t^{1/e} + ... + t^{(e-1)/e}
    return SpectrumElem.from_numerators(e, range(e))


def sp_mu(e: int) -> SpectrumElem:
    """``Sp([mu_e])``: the e-th roots of unity, all of Hodge type (0, 0)."""
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    return _roots_of_unity(e)


def sp_mu_L(e: int) -> SpectrumElem:
    """``Sp([mu_e] L) = t (1 - t)/(1 - t^{1/e}) = sum_k t^{1 + k/e}``."""
    return sp_mu(e).shifted(1)


def sp_fermat(m: int, n: int, e: int) -> SpectrumElem:
    """``Sp([(y^m - x^n)^e - 1])``.

    ``(1 - t)/(1 - t^{1/e}) * (Sp0(t^{1/e}) + t^{1 - 1/e} Sp1(t^{1/e}))``,
    where Sp0 and Sp1 are the parts of :func:`guibert_sp_f1` below and
    from 1 on.
    """
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    low, high = split_sp_f1(m, n)
    inv = Fraction(1, e)
    inner = low.substituted(inv) + high.substituted(inv).shifted(1 - inv)
    return _roots_of_unity(e) * inner


def sp(motive: MotiveExpr) -> SpectrumElem:
    """Apply the spectrum map to a motive built from the recursion's generators."""
    total = SpectrumElem()
    for gen, coeff in motive.items():
        for lpow, c in coeff.items():
            if isinstance(gen, Point) and lpow in (0, 1):
                piece = SpectrumElem.monomial(lpow)
            elif isinstance(gen, MuRoots) and lpow in (0, 1):
                piece = sp_mu(gen.k).shifted(lpow)
            elif isinstance(gen, FermatClass) and lpow == 0:
                piece = sp_fermat(gen.m, gen.n, gen.e)
            else:
                raise UnsupportedMotiveError(
                    f"no spectrum rule for {gen.text() or '1'} times L^{lpow}"
                )
            total = total + piece * c
    return total


def spectrum_via_motive(motive: MotiveExpr) -> SpectrumElem:
    """``Sp(1 - S)`` for a motivic Milnor fiber ``S``."""
    return SpectrumElem.monomial(0) - sp(motive)


def level_contribution(m: int, n: int, dprime: int) -> SpectrumElem:
    """Spectral numbers contributed by one level of the tower."""
    below = torus_knot_spectrum(m, n).restricted(hi=1)
    # s -> (s + j)/d' for j = 0..d'-1
    copies = SpectrumElem.from_numerators(1, range(dprime))
    low = (below * copies).substituted(Fraction(1, dprime))
    return low + low.reflected()


def spectrum_via_process(tower: ExponentTower) -> SpectrumElem:
    total = SpectrumElem()
    for data, _ in tower:
        total = total + level_contribution(data.m, data.n, data.dprime)
    if total.coeff(ONE):
        raise AssertionError("spectral number 1 produced; the tower is not coprime")
    return total


def spectrum_to_json(spec: SpectrumElem) -> list:
    return [[a.numerator, a.denominator, c] for a, c in spec.items()]


def spectrum_from_json(data: list) -> SpectrumElem:
    return SpectrumElem((Fraction(p, q), c) for p, q, c in data)


def spectrum_latex(spec: SpectrumElem) -> str:
    items = []
    for a, c in spec.items():
        frac = rf"\tfrac{{{a.numerator}}}{{{a.denominator}}}" if a.denominator != 1 else str(a.numerator)
        if c == 1:
            items.append(frac)
        else:
            items.append(rf"{frac}^{{({c})}}")
    return r"\{" + ", ".join(items) + r"\}"


def spectrum_text(spec: SpectrumElem) -> str:
    items = []
    for a, c in spec.items():
        items.append(str(a) if c == 1 else f"{a} (x{c})")
    return ", ".join(items)
