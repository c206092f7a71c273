"""Normal ordering in the enveloping algebra of a split form g_{n,m}.

A monomial is an exponent triple (a, b, c) standing for F^a H^b E^c; an
element is a dict mapping triples to scalars.  The defining relations are

    [H, E] = nE,   [H, F] = -nF,   [E, F] = mH.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .scalars import in_ring, rat, scalar_from_json, scalar_to_json


class ScalarOutsideRing(ValueError):
    """An action produced a coefficient outside the module's base ring."""

    def __init__(self, scalar, ring):
        self.scalar = scalar
        self.ring = ring
        super().__init__(f"coefficient {scalar} is not in {ring.name}")


def monomial(a: int, b: int, c: int, coeff=1) -> dict:
    if a < 0 or b < 0 or c < 0:
        raise ValueError("PBW exponents must be nonnegative")
    coeff = rat(coeff)
    return {(a, b, c): coeff} if coeff else {}


def one() -> dict:
    return {(0, 0, 0): Fraction(1)}


def _add(elem: dict, key, coeff) -> None:
    total = elem.get(key, 0) + coeff
    if total == 0:
        elem.pop(key, None)
    else:
        elem[key] = total


def add(x: dict, y: dict) -> dict:
    out = dict(x)
    for key, c in y.items():
        _add(out, key, c)
    return out


def scale(x: dict, c) -> dict:
    c = rat(c)
    return {k: v * c for k, v in x.items()} if c else {}


def left_mul_gen(gen: str, elem: dict, n: int, m: int) -> dict:
    """Multiply on the left by a single generator, keeping normal order."""
    out: dict = {}
    for (a, b, c), coeff in elem.items():
        if gen == "F":
            _add(out, (a + 1, b, c), coeff)
        elif gen == "H":
            # H F^a = F^a H - na F^a
            _add(out, (a, b + 1, c), coeff)
            if a:
                _add(out, (a, b, c), -n * a * coeff)
        elif gen == "E":
            # E F^a = F^a E + ma F^(a-1) H - (nm/2) a(a-1) F^(a-1),
            # then E H^b = sum_j C(b,j) (-n)^(b-j) H^j E
            for j in range(b + 1):
                _add(out, (a, j, c + 1), coeff * comb(b, j) * Fraction(-n) ** (b - j))
            if a:
                _add(out, (a - 1, b + 1, c), m * a * coeff)
                _add(out, (a - 1, b, c), -Fraction(n * m * a * (a - 1), 2) * coeff)
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return out


def normal_form(word, g) -> dict:
    """PBW normal form of a word in E, F, H.

    Each word item is a generator name or a (name, scalar) pair; scalars
    are central and multiply through.
    """
    elem = one()
    factor = Fraction(1)
    for item in reversed(list(word)):
        if isinstance(item, tuple):
            gen, s = item
            factor *= rat(s)
        else:
            gen = item
        elem = left_mul_gen(gen, elem, g.n, g.m)
    return scale(elem, factor)


def mul(x: dict, y: dict, g) -> dict:
    """Product of two normal-ordered elements, normal-ordered again."""
    out: dict = {}
    for (a, b, c), coeff in x.items():
        w = y
        for gen, count in (("E", c), ("H", b), ("F", a)):
            for _ in range(count):
                w = left_mul_gen(gen, w, g.n, g.m)
        for key, v in w.items():
            _add(out, key, coeff * v)
    return out


def commutator(x: dict, y: dict, g) -> dict:
    return add(mul(x, y, g), scale(mul(y, x, g), -1))


def adjoint_weight(elem: dict, g) -> int:
    """Weight of a weight-homogeneous element: n(c - a) on F^a H^b E^c."""
    weights = {g.n * (c - a) for (a, b, c) in elem}
    if not weights:
        raise ValueError("zero element has no weight")
    if len(weights) > 1:
        raise ValueError(f"element is not weight-homogeneous: weights {sorted(weights)}")
    return weights.pop()


def weight_component(elem: dict, g, weight: int) -> dict:
    return {key: c for key, c in elem.items() if g.n * (key[2] - key[0]) == weight}


def to_json(elem: dict):
    return [[a, b, c, scalar_to_json(coeff)] for (a, b, c), coeff in sorted(elem.items())]


def from_json(data) -> dict:
    out: dict = {}
    for a, b, c, coeff in data:
        _add(out, (int(a), int(b), int(c)), scalar_from_json(coeff))
    return out


def act(u: dict, module, vec: dict) -> dict:
    """Apply a normal-ordered element to a graded vector of a weight module.

    vec maps basis indices to scalars.  Raises ScalarOutsideRing as soon as
    any intermediate coefficient leaves module.ring.
    """
    out: dict = {}
    for (a, b, c), coeff in u.items():
        w = dict(vec)
        for gen, count in (("E", c), ("H", b), ("F", a)):
            for _ in range(count):
                w = _apply_gen(module, gen, w)
        for p, s in w.items():
            _add(out, p, coeff * s)
    for p, s in list(out.items()):
        if s == 0:
            del out[p]
        elif not in_ring(s, module.ring):
            raise ScalarOutsideRing(s, module.ring)
    return out


def _apply_gen(module, gen: str, vec: dict) -> dict:
    out: dict = {}
    for p, s in vec.items():
        for p2, c in module.act_gen(gen, p):
            _add(out, p2, c * s)
    for p, s in list(out.items()):
        if s == 0:
            del out[p]
        elif not in_ring(s, module.ring):
            raise ScalarOutsideRing(s, module.ring)
    return out
