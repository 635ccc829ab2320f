"""Exact Laurent polynomials in one variable ``q`` with integer coefficients.

Also provides the quantum integers, factorials and binomials used as move
coefficients, a small field of fractions (:class:`RatQ`) for intermediate
values, and a text format that round-trips exactly::

    >>> p = qfact(3)
    >>> str(p)
    'q^3 + 2*q + 2*q^-1 + q^-3'
    >>> LaurentPoly.parse(str(p)) == p
    True
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "RatQ",
    "DivisionFailure",
    "ONE",
    "ZERO",
    "Q",
    "exact_div",
    "qint",
    "qfact",
    "qbinom",
    "eval_at_one",
    "grassmann_poincare",
    "grassmann_recurrence",
]


class DivisionFailure(ArithmeticError):
    """Raised when a Laurent polynomial is not an exact multiple of another."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum(c * q**e)``.

    Zero coefficients are never stored, so the zero polynomial has an empty
    term map and equality is equality of term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        clean: dict[int, int] = {}
        for e, c in terms:
            c = int(c)
            if c:
                clean[int(e)] = clean.get(int(e), 0) + c
                if not clean[int(e)]:
                    del clean[int(e)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: terms already free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported; use shift()")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``q -> q**-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    def __call__(self, q):
        return sum(c * q**e for e, c in self._terms.items())

    def at_one(self) -> int:
        return sum(self._terms.values())

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    _TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*(\*)?\s*)?(q(?:\^(-?\d+))?)?\s*")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; also accepts loosely spaced input."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        terms: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            sign, digits, star, var, exp = m.groups()
            if not first and sign is None:
                raise ValueError(f"missing operator before {s[pos:]!r}")
            if digits is None and var is None:
                raise ValueError(f"dangling operator in {text!r}")
            if star and var is None:
                raise ValueError(f"'*' without variable in {text!r}")
            if digits is not None and var is not None and not star:
                raise ValueError(f"missing '*' in {text!r}")
            c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            e = 0 if var is None else (1 if exp is None else int(exp))
            terms[e] = terms.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``b * c == a`` or raise :class:`DivisionFailure`."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bt = b._terms
    b_deg, b_val = max(bt), min(bt)
    b_lead = bt[b_deg]
    lowest_allowed = min(a._terms) - b_val
    rem = dict(a._terms)
    quot: dict[int, int] = {}
    while rem:
        r_deg = max(rem)
        e = r_deg - b_deg
        if e < lowest_allowed:
            raise DivisionFailure(f"{b} does not divide {a}")
        c, r = divmod(rem[r_deg], b_lead)
        if r:
            raise DivisionFailure(f"{b} does not divide {a}")
        quot[e] = c
        for be, bc in bt.items():
            k = be + e
            v = rem.get(k, 0) - c * bc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot)


@lru_cache(maxsize=None)
def qint(k: int) -> LaurentPoly:
    """Balanced quantum integer ``q^(k-1) + q^(k-3) + ... + q^(1-k)``."""
    if k < 0:
        raise ValueError("quantum integers are defined for k >= 0")
    return LaurentPoly._raw({k - 1 - 2 * t: 1 for t in range(k)})


@lru_cache(maxsize=None)
def qfact(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("quantum factorial needs k >= 0")
    out = ONE
    for t in range(2, k + 1):
        out = out * qint(t)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Quantum binomial; zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    return exact_div(qfact(n), qfact(k) * qfact(n - k))


def eval_at_one(p: LaurentPoly) -> int:
    return p.at_one()


def grassmann_poincare(k: int, n: int) -> LaurentPoly:
    """Poincaré polynomial of G(k, n) in ``q`` (``q**2`` marks degree 2)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return qbinom(n, k).shift(n * k - k * k)


def grassmann_recurrence(k: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the fibre-bundle identity for ``G(k, n)``.

    ``pi(P^(k-1)) pi(G(k,n)) = pi(P^(n-1)) pi(G(k-1,n-1))``, written with
    ``pi(P^(m-1)) = q^(m-1) [m]``. The sides are equal for ``1 <= k <= n``.
    """
    lhs = qint(k).shift(k - 1) * grassmann_poincare(k, n)
    rhs = qint(n).shift(n - 1) * qbinom(n - 1, k - 1).shift((n - 1) * (k - 1) - (k - 1) ** 2)
    return lhs, rhs


def _normalise(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("RatQ with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    try:
        return exact_div(num, den), ONE
    except DivisionFailure:
        pass
    shift = -den.valuation()
    num, den = num.shift(shift), den.shift(shift)
    if den.coeff(0) < 0:
        num, den = -num, -den
    g = math.gcd(math.gcd(*num._terms.values()), math.gcd(*den._terms.values()))
    if g > 1:
        num = LaurentPoly._raw({e: c // g for e, c in num._terms.items()})
        den = LaurentPoly._raw({e: c // g for e, c in den._terms.items()})
    return num, den


class RatQ:
    """Quotient of Laurent polynomials, kept as reduced as cheaply possible.

    The denominator is shifted to start at ``q**0`` with a positive constant
    term; whenever the numerator is an exact multiple of the denominator the
    value collapses to ``(quotient, 1)``. No polynomial gcd is attempted, so
    two equal values may have different representations unless integral.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = 1):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        self.num, self.den = _normalise(num, den)

    @property
    def is_integral(self) -> bool:
        return self.den == ONE

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatQ") -> "RatQ":
        other = _as_ratq(other)
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatQ":
        return RatQ(-self.num, self.den)

    def __sub__(self, other: "RatQ") -> "RatQ":
        return self + (-_as_ratq(other))

    def __mul__(self, other: "RatQ") -> "RatQ":
        other = _as_ratq(other)
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def scale(self, p: LaurentPoly) -> "RatQ":
        return RatQ(self.num * p, self.den)

    def div_poly(self, p: LaurentPoly) -> "RatQ":
        if p.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        return RatQ(self.num, self.den * p)

    def __eq__(self, other) -> bool:
        other = _as_ratq(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatQ is not hashable")

    def __repr__(self) -> str:
        if self.is_integral:
            return f"RatQ({self.num})"
        return f"RatQ(({self.num}) / ({self.den}))"


def _as_ratq(x) -> RatQ:
    if isinstance(x, RatQ):
        return x
    return RatQ(x)
