"""Characteristic polynomial of the monodromy and the Milnor number.

Polynomials are kept factored as ``prod_a (t^a - 1)^{e_a}``; this makes
the substitution ``t -> t^k`` and the division by ``t^{d'} - 1`` in the
recursion trivial.  :func:`expand` turns a product into dense integer
coefficients and fails loudly if the product is not a polynomial.
"""

from __future__ import annotations

from math import gcd

from .puiseux import ExponentTower


class CycloProduct:
    """Formal product ``prod_a (t^a - 1)^{e_a}`` with integer exponents."""

    __slots__ = ("_factors",)

    def __init__(self, factors=None):
        acc: dict[int, int] = {}
        items = () if factors is None else (factors.items() if hasattr(factors, "items") else factors)
        for a, e in items:
            a, e = int(a), int(e)
            if a < 1:
                raise ValueError(f"factor order must be positive, got {a}")
            acc[a] = acc.get(a, 0) + e
        self._factors = {a: acc[a] for a in sorted(acc) if acc[a]}

    def items(self):
        return self._factors.items()

    def exponent(self, a: int) -> int:
        return self._factors.get(a, 0)

    @property
    def degree(self) -> int:
        return sum(a * e for a, e in self._factors.items())

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return CycloProduct(list(self._factors.items()) + list(other._factors.items()))

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self * CycloProduct({a: -e for a, e in other._factors.items()})

    def __eq__(self, other):
        if not isinstance(other, CycloProduct):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __repr__(self):
        return f"CycloProduct({self._factors!r})"

    def __str__(self):
        if not self._factors:
            return "1"
        num = [_factor_text(a, e) for a, e in self._factors.items() if e > 0]
        den = [_factor_text(a, -e) for a, e in self._factors.items() if e < 0]
        out = " ".join(num) or "1"
        if den:
            out += " / " + " ".join(den)
        return out

    def to_json(self) -> list:
        return [[a, e] for a, e in self._factors.items()]

    @classmethod
    def from_json(cls, data: list) -> "CycloProduct":
        return cls((a, e) for a, e in data)


def _factor_text(a: int, e: int) -> str:
    base = "(t-1)" if a == 1 else f"(t^{a}-1)"
    return base if e == 1 else f"{base}^{e}"


class DensePoly(tuple):
    """Integer polynomial as a coefficient tuple, constant term first."""

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @property
    def degree(self) -> int:
        return len(self) - 1  # -1 for the zero polynomial

    def __call__(self, x):
        acc = 0
        for c in reversed(self):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for k in range(len(self) - 1, -1, -1):
            c = self[k]
            if not c:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _times_cyclo(coeffs: list[int], a: int) -> list[int]:
    # coeffs * (t^a - 1)
    out = [0] * (len(coeffs) + a)
    for i, c in enumerate(coeffs):
        out[i + a] += c
        out[i] -= c
    return out


def _divide_cyclo(coeffs: list[int], a: int) -> list[int]:
    # exact quotient of coeffs by (t^a - 1); raises if the remainder is nonzero
    deg = len(coeffs) - 1
    if deg < a:
        raise ValueError(f"polynomial of degree {deg} is not divisible by t^{a}-1")
    rem = list(coeffs)
    quot = [0] * (deg - a + 1)
    for k in range(deg, a - 1, -1):
        q = rem[k]
        if q:
            quot[k - a] = q
            rem[k] = 0
            rem[k - a] += q
    if any(rem[:a]):
        raise ValueError(f"division by t^{a}-1 is not exact")
    return quot


def expand(h: CycloProduct) -> DensePoly:
    coeffs = [1]
    for a, e in h.items():
        for _ in range(max(e, 0)):
            coeffs = _times_cyclo(coeffs, a)
    for a, e in h.items():
        for _ in range(max(-e, 0)):
            coeffs = _divide_cyclo(coeffs, a)
    return DensePoly(coeffs)


def charpoly_torus(m: int, n: int) -> CycloProduct:
    """``(t^{mn} - 1)(t - 1) / ((t^m - 1)(t^n - 1))``, the monodromy of ``y^m - x^n``."""
    if gcd(m, n) != 1 or min(m, n) < 2:
        raise ValueError(f"need coprime m, n >= 2, got ({m}, {n})")
    return CycloProduct([(m * n, 1), (1, 1), (m, -1), (n, -1)])


def substitute(h: CycloProduct, k: int) -> CycloProduct:
    """Replace t by t^k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return CycloProduct((a * k, e) for a, e in h.items())


_T_MINUS_ONE = CycloProduct({1: 1})


def monodromy_recursion(tower: ExponentTower) -> CycloProduct:
    """Characteristic polynomial of the monodromy on reduced cohomology.

    The recursion ``H = H_1(t^{d'}) H'(t) / (t^{d'} - 1)`` is run on the
    unreduced polynomials, which carry an extra ``t - 1`` for H^0 (so a
    smooth branch has ``t - 1``).  The factor is removed at the end.
    """
    full = _T_MINUS_ONE
    for data, _ in reversed(tower.levels):
        truncation = charpoly_torus(data.m, data.n) * _T_MINUS_ONE
        full = substitute(truncation, data.dprime) * full / CycloProduct({data.dprime: 1})
    return full / _T_MINUS_ONE


def milnor_number(h: CycloProduct) -> int:
    mu = h.degree
    if mu < 0:
        raise ValueError(f"negative degree {mu}: not a characteristic polynomial")
    return mu


def root_multiplicity(h: CycloProduct, p: int, q: int) -> int:
    """Multiplicity of ``exp(2 pi i p/q)`` as a root of ``h``."""
    if q < 1 or not 0 <= p < q or gcd(p, q) != 1:
        raise ValueError(f"need reduced 0 <= p/q < 1, got {p}/{q}")
    return sum(e for a, e in h.items() if a % q == 0)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in _factorize(n).items():
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return divs


def totient(n: int) -> int:
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def eigenvalue_orders(h: CycloProduct) -> dict[int, int]:
    """Root multiplicity of each primitive q-th root of unity, for every q with a nonzero one."""
    orders: set[int] = set()
    for a, _ in h.items():
        orders.update(_divisors(a))
    out = {}
    for q in sorted(orders):
        mult = sum(e for a, e in h.items() if a % q == 0)
        if mult:
            out[q] = mult
    return out
