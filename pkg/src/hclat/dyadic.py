"""Integral models over Z of the principal series: nonvanishing criteria,
the 2-adic denominator exponents M_p and N_p, the parity criterion for the
third parabolic family, and an independent brute-force extension oracle.

The oracle iterates the extension recurrences directly with exact
rationals and never consults the closed formulas, so formula and oracle
are genuinely separate routes to the same integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import ord2, rat
from .weightmods import Support

VARIANTS = ("q", "qp", "qpp")

ORACLE_DEPTH = 4096
_EXPONENT_CAP = 64


class NoExtensionError(ValueError):
    """No integral extension exists (the module over Z vanishes)."""


def _validate(variant: str, n: int, m: int, eps, mu) -> tuple:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    eps = rat(eps)
    if not (0 <= eps < 1) or n % eps.denominator != 0:
        raise ValueError(f"eps must be a residue k/{n} in [0, 1); got {eps}")
    mu = rat(mu)
    if mu.denominator != 1:
        raise ValueError(f"mu must be an integer, got {mu}")
    return eps, mu


def nonvanishing(variant: str, n: int, m: int, eps, mu) -> bool:
    """Whether the integral model is nonzero for these parameters."""
    eps, mu = _validate(variant, n, m, eps, mu)
    if variant == "q":
        return (mu / (2 * n * m) + eps).denominator == 1
    if variant == "qp":
        return (mu / (2 * n * m) - eps).denominator == 1
    return mu % 2 == 0


def top_index(n: int, m: int, eps, mu) -> int:
    """Top of the q-variant support: p = -mu/2nm - eps."""
    value = -rat(mu) / (2 * n * m) - rat(eps)
    if value.denominator != 1:
        raise ValueError("support boundary is not integral; criterion fails")
    return int(value)


def bottom_index(n: int, m: int, eps, mu) -> int:
    """Bottom of the qp-variant support: p = mu/2nm - eps."""
    value = rat(mu) / (2 * n * m) - rat(eps)
    if value.denominator != 1:
        raise ValueError("support boundary is not integral; criterion fails")
    return int(value)


def _max_partial_sum(start: Fraction, count: int) -> int:
    """max({-sum_{l=0..s} ord2(start + l/2) : 0 <= s < count} and {0})."""
    best = 0
    running = 0
    term = start
    for _ in range(count):
        running -= ord2(term)
        if running > best:
            best = running
        term += Fraction(1, 2)
    return best


def exponent_M(p: int, n: int, m: int, eps, mu) -> int:
    """2-adic exponent at index p for the q-variant integral model."""
    eps, mu = _validate("q", n, m, eps, mu)
    if not nonvanishing("q", n, m, eps, mu):
        raise ValueError("criterion fails: the q-variant model vanishes")
    top = top_index(n, m, eps, mu)
    if p > top:
        raise ValueError(f"index above top weight: p = {p} > {top}")
    count = top - p  # s ranges over 0 <= s <= -(p + mu/2nm + eps + 1)
    start = mu / (4 * n * m) + Fraction(p + eps, 1) / 2
    return _max_partial_sum(start, count)


def exponent_N(p: int, n: int, m: int, eps, mu) -> int:
    """2-adic exponent at index p for the qp-variant integral model."""
    eps, mu = _validate("qp", n, m, eps, mu)
    if not nonvanishing("qp", n, m, eps, mu):
        raise ValueError("criterion fails: the qp-variant model vanishes")
    bottom = bottom_index(n, m, eps, mu)
    if p < bottom:
        raise ValueError(f"index below bottom weight: p = {p} < {bottom}")
    count = p - bottom
    start = mu / (4 * n * m) + Fraction(-p - eps, 1) / 2
    return _max_partial_sum(start, count)


def exponent_M_raw(p: int, n: int, m: int, eps_raw, mu) -> int:
    """The M-formula evaluated at an arbitrary rational eps argument.

    Used to state the mirror identity N_p(eps, mu) = M_{-p}(-eps, mu)
    termwise; the public exponent_M restricts eps to residues.
    """
    eps_raw = rat(eps_raw)
    mu = rat(mu)
    boundary = -mu / (2 * n * m) - eps_raw
    if boundary.denominator != 1:
        raise ValueError("criterion fails for the raw argument")
    count = int(boundary) - p
    if count < 0:
        raise ValueError(f"index above top weight: p = {p} > {boundary}")
    start = mu / (4 * n * m) + Fraction(p + eps_raw, 1) / 2
    return _max_partial_sum(start, count)


def dyadic_defect_sum(s: int) -> int:
    """sum_{l=1..s} (1 - ord2(l)), computed literally."""
    if s < 0:
        raise ValueError("argument must be nonnegative")
    return sum(1 - ord2(l) for l in range(1, s + 1))


# -- the brute-force oracle ------------------------------------------------


def _primary_multiplier(variant, n, m, eps, mu, p, s) -> Fraction:
    """Coefficient on step s of the extension's terminating chain.

    q walks up the E-powers; qp and qpp walk up the F-powers.
    """
    if variant == "q":
        return mu / (4 * n * m) + Fraction(s + p + eps, 1) / 2
    if variant == "qp":
        return mu / (4 * n * m) + Fraction(s - p - eps, 1) / 2
    return mu / 2 - n * (s - p - eps)


def _secondary_multiplier(variant, n, m, eps, mu, p, s, t) -> Fraction:
    """Coefficient on the transverse chain (F-powers for q, E-powers else)."""
    if variant == "q":
        return mu / 2 + n * m * (s - t - p - eps)
    if variant == "qp":
        return mu / 2 + n * m * (s - t + p + eps)
    return mu / 2 + n * (s - t + p + eps)


def oracle_min_exponent(
    variant: str, p: int, n: int, m: int, eps, mu, depth: int = ORACLE_DEPTH
) -> int:
    """Least e >= 0 such that phi(1) = 2^e extends integrally, by iteration.

    Walks the recurrences with exact rationals.  For q and qp the chain
    must terminate (hit a zero coefficient) within depth, else there is no
    extension at all; for qpp nothing terminates and integrality must hold
    along the whole walked chain.  Raises NoExtensionError when the module
    over Z vanishes.
    """
    eps, mu = _validate(variant, n, m, eps, mu)
    if variant in ("q", "qp"):
        chain = []
        for s in range(depth):
            c = _primary_multiplier(variant, n, m, eps, mu, p, s)
            if c == 0:
                break
            chain.append(c)
        else:
            raise NoExtensionError(
                f"no extension: the chain never terminates within depth {depth}"
            )
        _check_secondary(variant, n, m, eps, mu, p, len(chain))
        for e in range(_EXPONENT_CAP + 1):
            value = Fraction(2) ** e
            for c in chain:
                value *= c
                if value.denominator != 1:
                    break
            else:
                return e
        raise RuntimeError("exponent exceeds the search cap; widen it")

    # qpp: chains need not terminate; require integrality along the walk
    for e in range(_EXPONENT_CAP + 1):
        value = Fraction(2) ** e
        ok = True
        for s in range(depth):
            c = _primary_multiplier(variant, n, m, eps, mu, p, s)
            if c == 0:
                break
            value *= c
            if value.denominator != 1:
                ok = False
                break
        if ok:
            _check_secondary(variant, n, m, eps, mu, p, min(depth, 32))
            return e
    raise NoExtensionError("no extension: every tested exponent fails (odd mu)")


def _check_secondary(variant, n, m, eps, mu, p, width) -> None:
    """The transverse multipliers must all be integers; they move in integer
    steps, so a small grid check covers every (s, t)."""
    for s in range(min(width, 4) + 1):
        for t in range(min(width, 4) + 1):
            d = _secondary_multiplier(variant, n, m, eps, mu, p, s, t)
            if d.denominator != 1:
                raise NoExtensionError(
                    f"no extension: transverse multiplier {d} at (s={s}, t={t}) "
                    "is not an integer"
                )


# -- assembled reports ------------------------------------------------------


@dataclass
class LatticeReport:
    variant: str
    n: int
    m: int
    eps: Fraction
    mu: Fraction
    nonzero: bool
    support: Support | None
    exponents: dict

    def to_json(self, oracle_agrees=None):
        out = {
            "variant": self.variant,
            "n": self.n,
            "m": self.m,
            "eps": str(self.eps),
            "mu": str(self.mu),
            "nonzero": self.nonzero,
            "support": self.support.to_json() if self.support else None,
            "exponents": [[p, self.exponents[p]] for p in sorted(self.exponents, reverse=True)],
        }
        if oracle_agrees is not None:
            out["oracle_agrees"] = oracle_agrees
        return out


def integral_model(variant: str, n: int, m: int, eps, mu, window) -> LatticeReport:
    """Assemble nonvanishing, support, and windowed exponents."""
    eps, mu = _validate(variant, n, m, eps, mu)
    lo, hi = window
    if not nonvanishing(variant, n, m, eps, mu):
        return LatticeReport(variant, n, m, eps, mu, False, None, {})
    if variant == "q":
        support = Support("le", top_index(n, m, eps, mu))
        exponent = lambda p: exponent_M(p, n, m, eps, mu)
    elif variant == "qp":
        support = Support("ge", bottom_index(n, m, eps, mu))
        exponent = lambda p: exponent_N(p, n, m, eps, mu)
    else:
        support = Support("all")
        exponent = lambda p: 0
    exponents = {
        p: exponent(p) for p in range(lo, hi + 1) if support.contains(p)
    }
    return LatticeReport(variant, n, m, eps, mu, True, support, exponents)


def oracle_check_report(report: LatticeReport, depth: int = ORACLE_DEPTH) -> bool:
    """Re-derive every reported exponent with the brute-force oracle."""
    if not report.nonzero:
        for p in (0, 1, -1):
            try:
                oracle_min_exponent(report.variant, p, report.n, report.m, report.eps, report.mu, depth)
            except NoExtensionError:
                continue
            return False
        return True
    for p, value in report.exponents.items():
        got = oracle_min_exponent(report.variant, p, report.n, report.m, report.eps, report.mu, depth)
        if got != value:
            return False
    return True
