"""The contraction family over polynomial coefficients.

The bracket acquires one factor of z whenever both arguments are odd for
the involution fixing the diagonal: [e,f] = z*h while [h,e] = 2e and
[h,f] = -2f keep their constants.  Modules live over Q[z] or Q[z,z^-1],
carry exact Laurent coefficients, and specialize at z = c to ordinary
weight modules via the dictionary E = e, F = (n/2)f, H = (n/2)h.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import (
    LAURENT_RING,
    POLY,
    CoefficientRing,
    Laurent,
    as_laurent,
    in_ring,
    rat,
)
from .weightmods import Support, WeightModule, _exact_weight
from .zforms import make_zform

GENERATORS = ("e", "f", "h")
PARITY = {"e": -1, "f": -1, "h": 1}
_SL2 = {
    ("e", "f"): ("h", 1),
    ("f", "e"): ("h", -1),
    ("h", "e"): ("e", 2),
    ("e", "h"): ("e", -2),
    ("h", "f"): ("f", -2),
    ("f", "h"): ("f", 2),
}


def contraction_bracket(x, y) -> dict:
    """Bracket of two homogeneous terms (generator name, z-degree).

    Returns an element as {generator: Laurent}.
    """
    gen_x, a = x
    gen_y, b = y
    if gen_x not in PARITY or gen_y not in PARITY:
        raise ValueError("inputs must be parity-homogeneous terms on e, f, h")
    bump = 1 if PARITY[gen_x] == -1 and PARITY[gen_y] == -1 else 0
    hit = _SL2.get((gen_x, gen_y))
    if hit is None:
        return {}
    gen, c = hit
    return {gen: Laurent.z_power(a + b + bump, c)}


def as_element(x) -> dict:
    """Coerce {generator: scalar} to {generator: Laurent}, dropping zeros."""
    out = {}
    for gen, c in x.items():
        if gen not in PARITY:
            raise ValueError(f"unknown generator {gen!r}")
        c = as_laurent(c)
        if not c.is_zero():
            out[gen] = c
    return out


def bracket_elements(x, y) -> dict:
    """Bilinear extension of the contraction bracket to elements."""
    x, y = as_element(x), as_element(y)
    out = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            hit = _SL2.get((gx, gy))
            if hit is None:
                continue
            bump = 1 if PARITY[gx] == -1 and PARITY[gy] == -1 else 0
            gen, k = hit
            term = (cx * cy * Laurent.const(k)).shift(bump)
            total = out.get(gen, Laurent.const(0)) + term
            out[gen] = total
    return {g: c for g, c in out.items() if not c.is_zero()}


def sl2_bracket_elements(x, y) -> dict:
    """The undeformed sl2 bracket, Laurent-bilinearly (z is central)."""
    x, y = as_element(x), as_element(y)
    out = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            hit = _SL2.get((gx, gy))
            if hit is None:
                continue
            gen, k = hit
            term = cx * cy * Laurent.const(k)
            total = out.get(gen, Laurent.const(0)) + term
            out[gen] = total
    return {g: c for g, c in out.items() if not c.is_zero()}


def phi_isomorphism(x) -> dict:
    """Identity on the parabolic part {e, h}, multiplication by z^-1 on f."""
    out = {}
    for gen, c in as_element(x).items():
        out[gen] = c.shift(-1) if gen == "f" else c
    return out


def phi_preserves_bracket() -> list:
    """Check [phi(x), phi(y)] = phi([x, y]_{sl2}) on all nine basis pairs.

    Returns the list of failing pairs; empty means the map is a morphism
    from sl2 over Laurent coefficients to the contraction.
    """
    failures = []
    for gx in GENERATORS:
        for gy in GENERATORS:
            x, y = {gx: 1}, {gy: 1}
            lhs = bracket_elements(phi_isomorphism(x), phi_isomorphism(y))
            rhs = phi_isomorphism(sl2_bracket_elements(x, y))
            if lhs != rhs:
                failures.append((gx, gy, lhs, rhs))
    return failures


# -- contracted modules -------------------------------------------------------


@dataclass
class ContractionModule:
    """A weight module for the contraction, with Laurent coefficients."""

    ring: CoefficientRing
    support: Support
    weight_fn: object
    actions: dict
    family: str
    params: dict = field(default_factory=dict)
    vanishing_reason: str = None

    def weight(self, p: int):
        return self.weight_fn(p)

    def act_gen(self, gen: str, p: int):
        if self.vanishing_reason is not None or not self.support.contains(p):
            return []
        shift, fn = self.actions[gen]
        target = p + shift
        if not self.support.contains(target):
            return []
        c = as_laurent(fn(p))
        if c.is_zero():
            return []
        return [(target, c)]

    def coefficient(self, gen: str, p: int) -> Laurent:
        hits = self.act_gen(gen, p)
        return hits[0][1] if hits else Laurent.const(0)


def contracted_induced(lam: int, n: int, ring: CoefficientRing = POLY) -> ContractionModule:
    """Basis y_{lam+np}, p >= 0; e raises by one step, f lowers with a z."""
    def f_coeff(p):
        return Laurent.z_power(1, -Fraction(p, n) * (n * p - n + 2 * lam))

    actions = {
        "e": (1, lambda p: Laurent.const(1)),
        "f": (-1, f_coeff),
        "h": (0, lambda p: Laurent.const(Fraction(2 * (lam + n * p), n))),
    }
    return ContractionModule(
        ring,
        Support("ge", 0),
        lambda p: lam + n * p,
        actions,
        "contracted-induced",
        {"lam": lam, "n": n},
    )


def contracted_produced(lam: int, n: int, ring: CoefficientRing = POLY) -> ContractionModule:
    """Basis y^{lam+np}, p >= 0; f lowers by one step, e raises with a z."""
    def e_coeff(p):
        return Laurent.z_power(1, -Fraction(p + 1, n) * (n * p + 2 * lam))

    actions = {
        "e": (1, e_coeff),
        "f": (-1, lambda p: Laurent.const(1)),
        "h": (0, lambda p: Laurent.const(Fraction(2 * (lam + n * p), n))),
    }
    return ContractionModule(
        ring,
        Support("ge", 0),
        lambda p: lam + n * p,
        actions,
        "contracted-produced",
        {"lam": lam, "n": n},
    )


def contracted_ps(eps, mu, ring: CoefficientRing, n: int = 1) -> ContractionModule:
    """Basis w^{n(p+eps)} over all integers p.

    Over the Laurent ring the module always exists.  Over Q[z] the
    e-coefficient needs mu/2z to be polynomial: a nonzero constant term of
    mu collapses the model to zero (reported via vanishing_reason, not an
    error), and a negative exponent is rejected outright.
    """
    eps = rat(eps)
    if not (0 <= eps < 1) or n % eps.denominator != 0:
        raise ValueError(f"eps must be a residue k/{n} in [0, 1); got {eps}")
    mu = as_laurent(mu)
    if not in_ring(mu, ring):
        raise ValueError(f"mu = {mu} does not lie in {ring.name}")
    params = {"eps": eps, "mu": mu, "n": n}
    weight_fn = lambda p: _exact_weight(n, eps, p)
    if ring.kind == "Q[z]" and (not mu.is_zero()) and mu.min_exp() < 1:
        return ContractionModule(
            ring,
            Support("all"),
            weight_fn,
            {},
            "contracted-ps",
            params,
            vanishing_reason=(
                "mu has a nonzero constant term, so the polynomial model "
                "is the zero module"
            ),
        )
    half_mu_over_z = mu.shift(-1) * Laurent.const(Fraction(1, 2))
    half_mu = mu * Laurent.const(Fraction(1, 2))
    actions = {
        "e": (1, lambda p: half_mu_over_z + Laurent.const(p + eps)),
        "f": (-1, lambda p: half_mu - Laurent.z_power(1, p + eps)),
        "h": (0, lambda p: Laurent.const(2 * (p + eps))),
    }
    return ContractionModule(
        ring, Support("all"), weight_fn, actions, "contracted-ps", params
    )


def apply_cvector(M: ContractionModule, gen: str, vec: dict) -> dict:
    out = {}
    for p, c in vec.items():
        for target, a in M.act_gen(gen, p):
            total = out.get(target, Laurent.const(0)) + as_laurent(c) * a
            out[target] = total
    return {p: c for p, c in out.items() if not c.is_zero()}


def check_contraction_axioms(M: ContractionModule, window) -> list:
    """The three bracket relations per index, as exact Laurent identities."""
    z = Laurent.z_power(1)
    failures = []
    for p in window:
        if M.vanishing_reason is not None or not M.support.contains(p):
            continue
        v = {p: Laurent.const(1)}
        checks = (
            ("[h,e]=2e", _cbracket(M, "h", "e", v), _cscale(apply_cvector(M, "e", v), Laurent.const(2))),
            ("[h,f]=-2f", _cbracket(M, "h", "f", v), _cscale(apply_cvector(M, "f", v), Laurent.const(-2))),
            ("[e,f]=z*h", _cbracket(M, "e", "f", v), _cscale(apply_cvector(M, "h", v), z)),
        )
        for name, got, expected in checks:
            if _csub(got, expected):
                failures.append((p, name))
    return failures


def _cbracket(M, gen1, gen2, vec):
    forward = apply_cvector(M, gen1, apply_cvector(M, gen2, vec))
    backward = apply_cvector(M, gen2, apply_cvector(M, gen1, vec))
    return _csub(forward, backward)


def _cscale(vec, c):
    return {p: c * s for p, s in vec.items() if not (c * s).is_zero()}


def _csub(x, y):
    out = dict(x)
    for p, c in y.items():
        total = out.get(p, Laurent.const(0)) - c
        if total.is_zero():
            out.pop(p, None)
        else:
            out[p] = total
    return out


# -- reducibility and the polynomial lattice ---------------------------------


def generic_irreducibility(eps, mu) -> bool:
    """False exactly when some e- or f-coefficient vanishes at an integer
    index, i.e. when mu = 2z*t with t a rational such that t + eps or
    t - eps is an integer."""
    eps = rat(eps)
    mu = as_laurent(mu)
    if mu.is_zero():
        t = Fraction(0)
    elif mu.is_monomial() and mu.min_exp() == 1:
        t = mu.coefficient(1) / 2
    else:
        return True
    return not ((t + eps).denominator == 1 or (t - eps).denominator == 1)


def coefficient_roots(eps, mu, window, n: int = 1) -> list:
    """Direct search for vanishing e/f-coefficients of the principal
    series over the window; the root-set route behind generic_irreducibility."""
    M = contracted_ps(eps, mu, LAURENT_RING, n)
    lo, hi = window
    roots = []
    for p in range(lo, hi + 1):
        for gen in ("e", "f"):
            _, fn = M.actions[gen]
            if as_laurent(fn(p)).is_zero():
                roots.append((gen, p))
    return roots


def polynomial_lattice(eps, mu, window, n: int = 1) -> dict:
    """Closure of the polynomial-basis lattice under all three actions.

    Also confirms the base-change statement: over Laurent coefficients the
    lattice's coefficient functions coincide with the Laurent model's.
    """
    mu = as_laurent(mu)
    if not mu.is_zero() and mu.min_exp() < 1:
        raise ValueError(
            f"mu = {mu} must lie in z*Q[z] (no constant term, no poles)"
        )
    M = contracted_ps(eps, mu, POLY, n)
    L = contracted_ps(eps, mu, LAURENT_RING, n)
    lo, hi = window
    failures = []
    for p in range(lo, hi + 1):
        for gen in GENERATORS:
            _, fn = M.actions[gen]
            if not in_ring(as_laurent(fn(p)), POLY):
                failures.append((gen, p))
    base_change = _same_affine_coefficients(M, L, lo, hi)
    return {
        "closed": not failures,
        "failures": failures,
        "base_change_verified": base_change,
    }


def _same_affine_coefficients(M, L, lo, hi) -> bool:
    """Coefficient functions agree as functions: equal on the window and
    affine in the index (first differences constant), which pins an affine
    function down globally."""
    for gen in GENERATORS:
        shift_m, fn_m = M.actions[gen]
        shift_l, fn_l = L.actions[gen]
        if shift_m != shift_l:
            return False
        values = []
        for p in range(lo, hi + 1):
            a, b = as_laurent(fn_m(p)), as_laurent(fn_l(p))
            if a != b:
                return False
            values.append(a)
        diffs = {str(values[i + 1] - values[i]) for i in range(len(values) - 1)}
        if len(diffs) > 1:
            return False
    return True


# -- specialization -----------------------------------------------------------


@dataclass(frozen=True)
class SpecializedAlgebra:
    """Bracket data [H,E]=nE, [H,F]=-nF, [E,F]=mH for a fiber where m is
    not a positive integer (for instance the degenerate fiber m = 0)."""

    n: int
    m: Fraction


def specialize(M: ContractionModule, c) -> WeightModule:
    """Evaluate every coefficient at z = c and pass to the divided basis
    E = e, F = (n/2)f, H = (n/2)h, so the fiber at c = m carries the
    standard g_{n,m} relations."""
    c = rat(c)
    if M.vanishing_reason is not None:
        raise ValueError("cannot specialize the zero module")
    n = M.params["n"]
    scales = {"E": ("e", rat(1)), "F": ("f", Fraction(n, 2)), "H": ("h", Fraction(n, 2))}
    actions = {}
    for cap, (gen, scale) in scales.items():
        shift, fn = M.actions[gen]

        def evaluated(p, fn=fn, scale=scale, gen=gen):
            try:
                return scale * as_laurent(fn(p)).evaluate(c)
            except ZeroDivisionError:
                raise ValueError(f"pole at z = {c} in the {gen}-coefficient")

        actions[cap] = (shift, evaluated)
    for cap in actions:  # surface poles at call time, not first use
        probe = max(M.support.bound, 1) if M.support.kind == "ge" else 1
        actions[cap][1](probe)
    if c.denominator == 1 and c > 0:
        algebra = make_zform(n, int(c), rat(1))
    else:
        algebra = SpecializedAlgebra(n, c)
    from .scalars import QQ

    params = dict(M.params)
    params["z"] = c
    return WeightModule(
        algebra,
        QQ,
        M.support,
        M.weight_fn,
        actions,
        M.family + "-fiber",
        params,
    )


def specialize_matches(specialized: WeightModule, reference: WeightModule, window) -> bool:
    """Whether a diagonal change of basis identifies the two modules.

    The gauge is forced by the E-chain (or the F-chain across E-zeros)
    from the anchor index; every action of every generator is then checked
    against it on the window.  Supports must agree there too.
    """
    lo, hi = window
    for p in range(lo, hi + 1):
        if specialized.support.contains(p) != reference.support.contains(p):
            return False
    indices = [p for p in range(lo, hi + 1) if reference.support.contains(p)]
    if not indices:
        return True
    anchor = 0 if reference.support.contains(0) else indices[0]
    gauge = {anchor: rat(1)}
    p = anchor
    while p + 1 <= indices[-1]:
        step = _gauge_step_up(specialized, reference, p, gauge[p])
        if step is None:
            return False
        gauge[p + 1] = step
        p += 1
    p = anchor
    while p - 1 >= indices[0]:
        step = _gauge_step_down(specialized, reference, p, gauge[p])
        if step is None:
            return False
        gauge[p - 1] = step
        p -= 1
    for p in indices:
        for gen in ("E", "F", "H"):
            for (tgt_s, a), (tgt_r, A) in _zip_actions(specialized, reference, gen, p):
                if tgt_s != tgt_r:
                    return False
                if tgt_s not in gauge:
                    continue
                if a * gauge[tgt_s] != A * gauge[p]:
                    return False
            if (specialized.act_gen(gen, p) == []) != (reference.act_gen(gen, p) == []):
                return False
    return True


def _zip_actions(S, R, gen, p):
    hits_s, hits_r = S.act_gen(gen, p), R.act_gen(gen, p)
    if len(hits_s) != len(hits_r):
        return [((None, None), (0, 0))] if hits_s or hits_r else []
    return list(zip(hits_s, hits_r))


def _gauge_step_up(S, R, p, base):
    a, A = S.coefficient("E", p), R.coefficient("E", p)
    if (a == 0) != (A == 0):
        return None
    if a != 0:
        return base * A / a
    b, B = S.coefficient("F", p + 1), R.coefficient("F", p + 1)
    if (b == 0) != (B == 0):
        return None
    if b != 0:
        return base * b / B
    return base


def _gauge_step_down(S, R, p, base):
    b, B = S.coefficient("F", p), R.coefficient("F", p)
    if (b == 0) != (B == 0):
        return None
    if b != 0:
        return base * B / b
    a, A = S.coefficient("E", p - 1), R.coefficient("E", p - 1)
    if (a == 0) != (A == 0):
        return None
    if a != 0:
        return base * a / A
    return base


def contraction_rows(M: ContractionModule, lo: int, hi: int) -> list:
    """Windowed table rows [index, weight, e, f, h coefficients]."""
    rows = []
    for p in range(lo, hi + 1):
        if M.vanishing_reason is not None or not M.support.contains(p):
            continue
        rows.append(
            [
                p,
                M.weight(p),
                M.coefficient("e", p),
                M.coefficient("f", p),
                M.coefficient("h", p),
            ]
        )
    return rows
