"""The motivic Milnor fiber of a plane branch as a formal sum of classes.

Only the classes the recursion produces are modelled: the point, the
roots of unity ``[mu_k]`` with their cyclic action, and the Fermat-type
classes ``[(y^m - x^n)^e - 1]``.  Coefficients are Laurent polynomials in
``L``, the class of the affine line.  No relations are imposed other
than ``[mu_1] = [point]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._ring import L, LaurentL
from .puiseux import ExponentTower


@dataclass(frozen=True)
class Point:
    """Class of a point, the unit of the ring."""

    def sort_key(self):
        return (0,)

    def to_json(self) -> dict:
        return {"type": "point"}

    def latex(self) -> str:
        return ""

    def text(self) -> str:
        return ""


POINT = Point()


@dataclass(frozen=True)
class MuRoots:
    """Class ``[mu_k]`` of the k-th roots of unity.

    ``MuRoots(1)`` is the point and evaluates to :data:`POINT`.
    """

    k: int

    def __new__(cls, k: int):
        if k == 1:
            return POINT
        return super().__new__(cls)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"[mu_k] needs k >= 1, got {self.k}")

    def sort_key(self):
        return (1, self.k)

    def to_json(self) -> dict:
        return {"type": "mu_roots", "k": self.k}

    def latex(self) -> str:
        return rf"[\mu_{{{self.k}}}]" if self.k >= 10 else rf"[\mu_{self.k}]"

    def text(self) -> str:
        return f"[mu_{self.k}]"


def _pow(base: str, e: int) -> str:
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if e >= 10 else f"{base}^{e}"


@dataclass(frozen=True)
class FermatClass:
    """Class of ``{(x, y) : (y^m - x^n)^e = 1}`` with its monodromic action."""

    m: int
    n: int
    e: int

    def __post_init__(self):
        if gcd(self.m, self.n) != 1 or self.m < 2:
            raise ValueError(f"FermatClass needs coprime m, n with m >= 2, got ({self.m}, {self.n})")
        if self.e < 1:
            raise ValueError(f"FermatClass needs e >= 1, got {self.e}")

    def sort_key(self):
        return (2, self.m, self.n, self.e)

    def to_json(self) -> dict:
        return {"type": "fermat", "m": self.m, "n": self.n, "e": self.e}

    def latex(self) -> str:
        f1 = f"{_pow('y', self.m)}-{_pow('x', self.n)}"
        if self.e == 1:
            return f"[{f1}-1]"
        return f"[{_pow(f'({f1})', self.e)}-1]"

    def text(self) -> str:
        f1 = f"y^{self.m}-x^{self.n}"
        if self.e == 1:
            return f"[{f1}-1]"
        return f"[({f1})^{self.e}-1]"


Generator = Point | MuRoots | FermatClass


def generator_from_json(obj: dict) -> Generator:
    kind = obj.get("type")
    if kind == "point":
        return POINT
    if kind == "mu_roots":
        return MuRoots(obj["k"])
    if kind == "fermat":
        return FermatClass(obj["m"], obj["n"], obj["e"])
    raise ValueError(f"unknown generator type {kind!r}")


class MotiveExpr:
    """Finite sum ``sum_g c_g(L) [g]`` over generator classes."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        items = () if terms is None else (terms.items() if hasattr(terms, "items") else terms)
        for gen, coeff in items:
            if isinstance(gen, MuRoots) and gen.k == 1:  # defensive; MuRoots(1) is POINT
                gen = POINT
            if isinstance(coeff, int):
                coeff = LaurentL({0: coeff})
            acc[gen] = acc.get(gen, LaurentL()) + coeff
        self._terms = {g: acc[g] for g in sorted(acc, key=lambda g: g.sort_key()) if acc[g]}

    @classmethod
    def of(cls, gen: Generator, coeff=1) -> "MotiveExpr":
        return cls({gen: coeff})

    def coeff(self, gen: Generator) -> LaurentL:
        return self._terms.get(gen, LaurentL())

    def items(self):
        return self._terms.items()

    def generators(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, MotiveExpr):
            return other
        if isinstance(other, (int, LaurentL)):
            return MotiveExpr({POINT: other})
        if isinstance(other, (Point, MuRoots, FermatClass)):
            return MotiveExpr({other: 1})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MotiveExpr(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return MotiveExpr({g: -c for g, c in self._terms.items()})

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

    def scale(self, c) -> "MotiveExpr":
        """Module action of a Laurent polynomial in L (or an integer)."""
        if isinstance(c, int):
            c = LaurentL({0: c})
        return MotiveExpr({g: coeff * c for g, coeff in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentL)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, LaurentL, Point, MuRoots, FermatClass)):
            other = self._coerce(other)
        if not isinstance(other, MotiveExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"MotiveExpr({self.text()})"

    # -- serialization --------------------------------------------------

    def to_json(self) -> list:
        return [
            {"gen": g.to_json(), "coeff": [[k, c] for k, c in coeff.items()]}
            for g, coeff in self._terms.items()
        ]

    @classmethod
    def from_json(cls, data: list) -> "MotiveExpr":
        return cls(
            [(generator_from_json(t["gen"]), LaurentL((k, c) for k, c in t["coeff"])) for t in data]
        )

    def _display_terms(self):
        # display order: Fermat classes first, then [mu_k] by decreasing k, then plain L-powers
        def key(g):
            if isinstance(g, FermatClass):
                return (0, g.m, g.n, g.e)
            if isinstance(g, MuRoots):
                return (1, -g.k)
            return (2,)
        rows = []
        for g in sorted(self._terms, key=key):
            coeff = self._terms[g]
            for k in sorted(coeff.exponents(), reverse=True):
                rows.append((g, k, coeff.coeff(k)))
        return rows

    def _render(self, gen_name, lpow) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g, k, c in self._display_terms():
            body = gen_name(g) + lpow(k)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def latex(self) -> str:
        def lpow(k):
            if k == 0:
                return ""
            if k == 1:
                return r"\mathbb{L}"
            return rf"\mathbb{{L}}^{{{k}}}"
        return self._render(lambda g: g.latex(), lpow)

    def text(self) -> str:
        def lpow(k):
            if k == 0:
                return ""
            return "L" if k == 1 else f"L^{k}"
        return self._render(lambda g: g.text(), lpow)

    __str__ = text


def coordinate_power_motive(e: int) -> MotiveExpr:
    """Milnor fiber of ``y^e``: the roots of unity ``[mu_e]``."""
    return MotiveExpr.of(MuRoots(e))


def base_case_motive(m: int, n: int, e: int) -> MotiveExpr:
    """Milnor fiber of ``(y^m - x^n)^e``: ``[(f_1)^e - 1] - [mu_e](L - 1)``."""
    return MotiveExpr.of(FermatClass(m, n, e)) - MotiveExpr.of(MuRoots(e), L - 1)


def theorem1_step(sf_prime: MotiveExpr, m: int, n: int, dprime: int) -> MotiveExpr:
    """One recursion step in its uncombined form.

    ``S(f) = S((f_1)^{d'}) + S(f') - [mu_{d'}]`` with the first term given by
    :func:`base_case_motive`.
    """
    return base_case_motive(m, n, dprime) + sf_prime - coordinate_power_motive(dprime)


def motivic_milnor_fiber(tower: ExponentTower) -> MotiveExpr:
    """``S(f) = sum_k ([(f_1)^{d'_k} - 1] - [mu_{d'_k}] L) + 1`` over the tower."""
    total = MotiveExpr.of(POINT)
    for data, _ in tower:
        total = total + MotiveExpr.of(FermatClass(data.m, data.n, data.dprime))
        total = total - MotiveExpr.of(MuRoots(data.dprime), L)
    return total
