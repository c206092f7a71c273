"""Exact scalar arithmetic: rationals, Laurent polynomials in z, coefficient rings.

Everything downstream computes with these values; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


def rat(x) -> Fraction:
    """Coerce an int, Fraction, or string like "-1/2" to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def ord2(x) -> int:
    """2-adic valuation of a nonzero rational.

    Extended from integers to fractions by v(num) - v(den).
    """
    x = rat(x)
    if x == 0:
        raise ValueError("valuation of zero undefined")
    num = abs(x.numerator)
    den = x.denominator
    return (num & -num).bit_length() - (den & -den).bit_length()


class Laurent:
    """A finite Laurent polynomial in z with rational coefficients.

    Stored as a dict {exponent: nonzero Fraction}.  Supports mixed
    arithmetic with ints and Fractions.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = rat(c)
                if c != 0:
                    clean[int(exp)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls({0: rat(c)})

    @classmethod
    def z_power(cls, k: int, c=1) -> "Laurent":
        return cls({k: rat(c)})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def coefficient(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def constant_value(self) -> Fraction:
        """The rational value, assuming the polynomial is constant."""
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.coeffs.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __add__(self, other):
        other = as_laurent(other)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-as_laurent(other))

    def __rsub__(self, other):
        return as_laurent(other) + (-self)

    def __mul__(self, other):
        other = as_laurent(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a general Laurent polynomial")
        result = Laurent.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        """Division by a rational or by a single-term Laurent polynomial."""
        if isinstance(other, (int, Fraction)):
            other = rat(other)
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Laurent({e: c / other for e, c in self.coeffs.items()})
        if isinstance(other, Laurent):
            if other.is_zero():
                raise ZeroDivisionError("division by zero scalar")
            if not other.is_monomial():
                raise ValueError(f"can only divide by a monomial, got {other}")
            (exp, c), = other.coeffs.items()
            return Laurent({e - exp: cc / c for e, cc in self.coeffs.items()})
        return NotImplemented

    def evaluate(self, c) -> Fraction:
        """Substitute z = c (a nonzero rational if negative exponents occur)."""
        c = rat(c)
        total = Fraction(0)
        for exp, coeff in self.coeffs.items():
            if exp >= 0:
                total += coeff * c ** exp
            else:
                if c == 0:
                    raise ZeroDivisionError("negative exponent at z = 0")
                total += coeff / c ** (-exp)
        return total

    def shift(self, k: int) -> "Laurent":
        """Multiply by z^k."""
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    # -- text and JSON forms -------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for exp in sorted(self.coeffs):
            c = self.coeffs[exp]
            if exp == 0:
                body = str(abs(c))
            else:
                zpart = "z" if exp == 1 else f"z^{exp}"
                body = zpart if abs(c) == 1 else f"{abs(c)}*{zpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Laurent({self})"

    def to_json(self):
        return [[exp, str(self.coeffs[exp])] for exp in sorted(self.coeffs)]

    @classmethod
    def from_json(cls, data) -> "Laurent":
        return cls({int(exp): Fraction(c) for exp, c in data})

    _TERM = re.compile(
        r"^([+-]?\d+(?:/\d+)?|[+-])?\*?(z(?:\^([+-]?\d+))?)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "Laurent":
        """Parse strings like "1/2", "z", "-2*z^-1 + 3", "2z^2 - z"."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial string")
        # split into signed terms at top-level +/-
        terms = re.findall(r"[+-]?[^+-]+(?:\^[+-]?\d+)?", s.replace(" ", ""))
        # the findall above can split inside z^-1; re-join fragments that
        # start right after a '^'
        joined, buf = [], ""
        for piece in terms:
            if buf.endswith("^"):
                buf += piece
            else:
                if buf:
                    joined.append(buf)
                buf = piece
        if buf:
            joined.append(buf)
        out = Laurent()
        for term in joined:
            mo = cls._TERM.match(term.replace(" ", ""))
            if not mo or (mo.group(1) is None and mo.group(2) is None):
                raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
            coeff_s, zpart, exp_s = mo.groups()
            if coeff_s in (None, "+", "-"):
                coeff = Fraction(1 if coeff_s != "-" else -1)
            else:
                coeff = Fraction(coeff_s)
            if zpart is None:
                exp = 0
            else:
                exp = int(exp_s) if exp_s is not None else 1
            out = out + Laurent({exp: coeff})
        return out


def as_laurent(x) -> Laurent:
    """Lift an int, Fraction, or Laurent to a Laurent polynomial."""
    if isinstance(x, Laurent):
        return x
    return Laurent.const(rat(x))


def parse_scalar(text: str):
    """Parse a scalar string: a rational, or a polynomial if "z" occurs."""
    if "z" in text:
        return Laurent.parse(text)
    return rat(text)


def scalar_str(x) -> str:
    """Canonical text form of a scalar (rational or Laurent)."""
    if isinstance(x, Laurent):
        return str(x)
    return str(rat(x))


def scalar_to_json(x):
    """JSON form: rationals as "num/den" strings, polynomials as [[exp, "c"], ...]."""
    if isinstance(x, Laurent):
        return x.to_json()
    return str(rat(x))


def scalar_from_json(data):
    if isinstance(data, str):
        return Fraction(data)
    if isinstance(data, int):
        return Fraction(data)
    return Laurent.from_json(data)


# -- coefficient rings ---------------------------------------------------


@dataclass(frozen=True)
class CoefficientRing:
    """One of Z, Z[1/N], Q, Q[z], Q[z,z^-1]."""

    kind: str
    localized_at: int = 1

    def __post_init__(self):
        if self.kind not in {"Z", "Z[1/N]", "Q", "Q[z]", "Q[z,z^-1]"}:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Z[1/N]" and self.localized_at < 1:
            raise ValueError("localization requires N >= 1")

    @property
    def name(self) -> str:
        if self.kind == "Z[1/N]":
            return f"Z[1/{self.localized_at}]"
        return self.kind

    def __str__(self):
        return self.name


ZZ = CoefficientRing("Z")
QQ = CoefficientRing("Q")
POLY = CoefficientRing("Q[z]")
LAURENT_RING = CoefficientRing("Q[z,z^-1]")


def localized_integers(N: int) -> CoefficientRing:
    return CoefficientRing("Z[1/N]", localized_at=int(N))


def ring_from_name(name: str) -> CoefficientRing:
    s = name.strip().replace(" ", "")
    if s == "Z":
        return ZZ
    if s == "Q":
        return QQ
    if s == "Q[z]":
        return POLY
    if s in ("Q[z,z^-1]", "Q[z,1/z]"):
        return LAURENT_RING
    mo = re.fullmatch(r"Z\[1/(\d+)\]", s)
    if mo:
        return localized_integers(int(mo.group(1)))
    raise ValueError(f"unknown ring name {name!r}")


def _denominator_invertible(den: int, N: int) -> bool:
    """True iff every prime factor of den divides N."""
    if den == 1:
        return True
    if N == 1:
        return False
    while True:
        g = math.gcd(den, N)
        if g == 1:
            return den == 1
        while den % g == 0:
            den //= g
        if den == 1:
            return True


def in_ring(x, ring: CoefficientRing) -> bool:
    """Membership under the inclusions Z < Z[1/N] < Q and Q < Q[z] < Q[z,z^-1]."""
    if isinstance(x, Laurent) and not x.is_constant():
        if ring.kind == "Q[z,z^-1]":
            return True
        if ring.kind == "Q[z]":
            return x.min_exp() >= 0
        return False
    value = x.constant_value() if isinstance(x, Laurent) else rat(x)
    if ring.kind == "Z":
        return value.denominator == 1
    if ring.kind == "Z[1/N]":
        return _denominator_invertible(value.denominator, ring.localized_at)
    return True
