"""Group-ring arithmetic: Laurent polynomials in L and elements of Z[t^Q].

Spectra of iterated torus knots easily have 10^5 terms, so
:class:`SpectrumElem` stores integer numerators over one common
denominator instead of ``Fraction`` keys; Fractions only appear at the
API boundary.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd, lcm
from types import MappingProxyType
from typing import Iterable, Mapping


def _items(terms):
    if terms is None:
        return ()
    return terms.items() if hasattr(terms, "items") else terms


def _as_int(c) -> int:
    if int(c) != c:
        raise TypeError(f"non-integer coefficient {c!r}")
    return int(c)


class LaurentL:
    """Laurent polynomial ``sum c_k L^k`` with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[int, int] = {}
        for k, c in _items(terms):
            if int(k) != k:
                raise ValueError(f"Laurent exponent must be an integer, got {k!r}")
            k = int(k)
            acc[k] = acc.get(k, 0) + _as_int(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    def coeff(self, k: int) -> int:
        return self._terms.get(k, 0)

    def items(self):
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentL):
            return other
        if isinstance(other, int):
            return LaurentL({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentL(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentL({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentL(
            (k1 + k2, c1 * c2)
            for k1, c1 in self._terms.items()
            for k2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"LaurentL({self._terms!r})"


L = LaurentL({1: 1})


class SpectrumElem:
    """Element ``sum c_a t^a`` of the group ring Z[t^Q].

    Internally ``a = num / den`` for one shared ``den``, kept minimal, so
    two equal elements have identical internal state.
    """

    __slots__ = ("_den", "_terms")

    def __init__(self, terms=None):
        pairs = [(Fraction(a), _as_int(c)) for a, c in _items(terms)]
        den = lcm(1, *(a.denominator for a, _ in pairs))
        acc: dict[int, int] = {}
        for a, c in pairs:
            k = a.numerator * (den // a.denominator)
            acc[k] = acc.get(k, 0) + c
        self._set(den, acc)

    def _set(self, den: int, terms: dict) -> None:
        if 0 in terms.values():
            terms = {k: c for k, c in terms.items() if c}
        g = den
        for k in terms:
            g = gcd(g, k)
            if g == 1:
                break
        if g > 1:
            den //= g
            terms = {k // g: c for k, c in terms.items()}
        self._den = den
        self._terms = terms

    @classmethod
    def _make(cls, den: int, terms: dict) -> "SpectrumElem":
        obj = cls.__new__(cls)
        obj._set(den, terms)
        return obj

    @classmethod
    def from_numerators(cls, den: int, numerators: Iterable[int], sign: int = 1) -> "SpectrumElem":
        """Multiset ``{k/den}``; each occurrence counts ``sign``."""
        counts = Counter(numerators)
        return cls._make(den, {k: sign * c for k, c in counts.items()})

    @classmethod
    def from_values(cls, values: Iterable, sign: int = 1) -> "SpectrumElem":
        return cls((Fraction(v), sign) for v in values)

    @classmethod
    def monomial(cls, exponent=0, coeff: int = 1) -> "SpectrumElem":
        return cls({exponent: coeff})

    # -- access ---------------------------------------------------------

    @property
    def denominator(self) -> int:
        """Least common denominator of all exponents."""
        return self._den

    def coeff(self, exponent) -> int:
        a = Fraction(exponent)
        if self._den % a.denominator:
            return 0
        return self._terms.get(a.numerator * (self._den // a.denominator), 0)

    def items(self) -> list[tuple[Fraction, int]]:
        den = self._den
        return [(Fraction(k, den), self._terms[k]) for k in sorted(self._terms)]

    def exponents(self) -> list[Fraction]:
        return [a for a, _ in self.items()]

    def __iter__(self):
        return iter(self.exponents())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _lifted(self, den: int) -> dict:
        f = den // self._den
        if f == 1:
            return self._terms
        return {k * f: c for k, c in self._terms.items()}

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SpectrumElem):
            return other
        if isinstance(other, int):
            return SpectrumElem._make(1, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = lcm(self._den, other._den)
        acc = dict(self._lifted(den))
        for k, c in other._lifted(den).items():
            acc[k] = acc.get(k, 0) + c
        return self._make(den, acc)

    __radd__ = __add__

    def __neg__(self):
        return self._make(self._den, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._make(self._den, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, SpectrumElem):
            return NotImplemented
        den = lcm(self._den, other._den)
        left, right = self._lifted(den), other._lifted(den)
        if len(left) < len(right):
            left, right = right, left
        acc: dict[int, int] = {}
        for k2, c2 in right.items():
            for k1, c1 in left.items():
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return self._make(den, acc)

    __rmul__ = __mul__

    def substituted(self, factor) -> "SpectrumElem":
        """Replace t by t^factor, i.e. scale every exponent."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("substitution factor must be positive")
        p, q = factor.numerator, factor.denominator
        return self._make(self._den * q, {k * p: c for k, c in self._terms.items()})

    def shifted(self, amount) -> "SpectrumElem":
        """Multiply by t^amount."""
        amount = Fraction(amount)
        den = lcm(self._den, amount.denominator)
        off = amount.numerator * (den // amount.denominator)
        return self._make(den, {k + off: c for k, c in self._lifted(den).items()})

    def reflected(self, center=1) -> "SpectrumElem":
        """Reflect every exponent across ``center`` (a -> 2*center - a)."""
        twice = 2 * Fraction(center)
        den = lcm(self._den, twice.denominator)
        top = twice.numerator * (den // twice.denominator)
        return self._make(den, {top - k: c for k, c in self._lifted(den).items()})

    def restricted(self, lo=None, hi=None, *, closed: bool = False) -> "SpectrumElem":
        """Terms with exponent strictly inside (lo, hi); ``closed`` keeps the ends."""
        den = self._den
        terms = self._terms
        # compare k/den with p/q as k*q against p*den
        if lo is not None:
            lo = Fraction(lo)
            q, bound = lo.denominator, lo.numerator * den
            if closed:
                terms = {k: c for k, c in terms.items() if k * q >= bound}
            else:
                terms = {k: c for k, c in terms.items() if k * q > bound}
        if hi is not None:
            hi = Fraction(hi)
            q, bound = hi.denominator, hi.numerator * den
            if closed:
                terms = {k: c for k, c in terms.items() if k * q <= bound}
            else:
                terms = {k: c for k, c in terms.items() if k * q < bound}
        return self._make(den, dict(terms))

    def total(self) -> int:
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def residues(self) -> "SpectrumElem":
        """Image in Z[Q/Z]: every exponent reduced mod 1 into [0, 1)."""
        den = self._den
        acc: dict[int, int] = {}
        for k, c in self._terms.items():
            r = k % den
            acc[r] = acc.get(r, 0) + c
        return self._make(den, acc)

    def scaled_terms(self) -> tuple[int, Mapping[int, int]]:
        """``(den, {num: coeff})`` with every exponent equal to ``num/den``."""
        return self._den, MappingProxyType(self._terms)

    def values(self) -> list[Fraction]:
        """Sorted multiset listing; only meaningful for effective elements."""
        if not self.is_effective():
            raise ValueError("cannot list a spectrum with non-positive multiplicities")
        out = []
        for a, c in self.items():
            out.extend([a] * c)
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._den == other._den and self._terms == other._terms

    def __hash__(self):
        return hash((self._den, frozenset(self._terms.items())))

    def __repr__(self):
        body = ", ".join(f"{a}: {c}" for a, c in self.items())
        return f"SpectrumElem({{{body}}})"
