"""Essential exponents of a plane branch and their truncation/derived-curve tower.

A branch with Puiseux expansion ``y = x^{n/m} + ...`` and essential
exponents ``mu_1 < ... < mu_e`` is split into its truncation
``y^m - x^n`` and a derived curve whose essential exponents are
``m * (mu_{i+1} - mu_1 + n)``.  Repeating this until no exponent is left
gives an :class:`ExponentTower`, from which every invariant in this
package is computed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator


class ExponentError(ValueError):
    """Invalid essential-exponent input."""


class ExponentSyntaxError(ExponentError):
    pass


class ZeroDenominatorError(ExponentError):
    pass


class IntegerExponentError(ExponentError):
    pass


class NonIncreasingError(ExponentError):
    pass


class NotSingularError(ExponentError):
    pass


class NonEssentialError(ExponentError):
    pass


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class ExponentList:
    """Validated, strictly increasing essential exponents (possibly empty)."""

    exponents: tuple[Fraction, ...] = ()

    def __post_init__(self):
        exps = tuple(Fraction(q) for q in self.exponents)
        object.__setattr__(self, "exponents", exps)
        for q in exps:
            if q.denominator == 1:
                raise IntegerExponentError(
                    f"exponent {q.numerator} is an integer; essential exponents "
                    "are never integers (drop it or change coordinates)"
                )
        for a, b in zip(exps, exps[1:]):
            if not a < b:
                raise NonIncreasingError(
                    f"exponents must be strictly increasing: {_fmt(a)} is followed by {_fmt(b)}"
                )
        if exps and exps[0] <= 1:
            raise NotSingularError(
                f"first exponent {_fmt(exps[0])} is <= 1; swap the roles of x and y "
                "so that the first exponent exceeds 1"
            )
        prev = 1
        for q in exps:
            cur = lcm(prev, q.denominator)
            if cur == prev:
                raise NonEssentialError(
                    f"exponent {_fmt(q)} is not essential: its denominator "
                    f"{q.denominator} already divides {prev}"
                )
            prev = cur

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def __str__(self) -> str:
        return ",".join(_fmt(q) for q in self.exponents)

    @property
    def conjugates(self) -> int:
        """Number of conjugates of the branch: lcm of all denominators."""
        return lcm(1, *(q.denominator for q in self.exponents))


@dataclass(frozen=True)
class LevelData:
    m: int
    n: int
    d: int
    dprime: int

    def __post_init__(self):
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"m={self.m} and n={self.n} are not coprime")
        if self.d != self.m * self.dprime:
            raise ValueError(f"d={self.d} differs from m*dprime={self.m * self.dprime}")


@dataclass(frozen=True)
class ExponentTower:
    """One ``(LevelData, ExponentList)`` pair per recursion level."""

    levels: tuple[tuple[LevelData, ExponentList], ...] = ()

    def __iter__(self):
        return iter(self.levels)

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def level_data(self) -> list[LevelData]:
        return [data for data, _ in self.levels]

    @property
    def is_smooth(self) -> bool:
        return not self.levels


_FRACTION = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_exponents(text: str) -> ExponentList:
    """Parse ``"p/q, p/q, ..."`` into a validated :class:`ExponentList`.

    An empty (or all-whitespace) string is the smooth branch.
    """
    if not text.strip():
        return ExponentList()
    values = []
    for i, item in enumerate(text.split(","), start=1):
        match = _FRACTION.match(item)
        if match is None:
            raise ExponentSyntaxError(
                f"item {i} ({item.strip()!r}) is not a fraction of the form p/q"
            )
        num, den = match.group(1), match.group(2)
        den = int(den) if den is not None else 1
        if den == 0:
            raise ZeroDenominatorError(f"item {i} ({item.strip()!r}) has a zero denominator")
        values.append(Fraction(int(num), den))
    return ExponentList(tuple(values))


def newton_data(exps: ExponentList) -> LevelData:
    if not len(exps):
        raise ValueError("newton_data needs at least one exponent")
    first = exps[0]
    m, n = first.denominator, first.numerator
    d = exps.conjugates
    return LevelData(m=m, n=n, d=d, dprime=d // m)


def derive(exps: ExponentList) -> ExponentList:
    """Essential exponents of the derived curve, ``m * (mu - mu_1 + n)``."""
    data = newton_data(exps)
    m, n, first = data.m, data.n, exps[0]
    derived = tuple(m * (mu - first + n) for mu in exps.exponents[1:])
    for mu in derived:
        assert mu > m * n, f"derived exponent {mu} does not exceed m*n = {m * n}"
    try:
        out = ExponentList(derived)
    except ExponentError as exc:  # pragma: no cover - would be a library bug
        raise AssertionError(f"derived exponents of {exps} are invalid: {exc}") from exc
    assert out.conjugates == data.dprime
    return out


def decompose(exps: ExponentList | Iterable) -> ExponentTower:
    if not isinstance(exps, ExponentList):
        exps = ExponentList(tuple(exps))
    levels = []
    current = exps
    while len(current):
        data = newton_data(current)
        if levels:
            assert data.d == levels[-1][0].dprime
        levels.append((data, current))
        current = derive(current)
    return ExponentTower(tuple(levels))
