"""Split Z-forms g_{n,m} of (sl2, T^1): classification data, realizations,
and the Borel/parabolic subalgebra constructors.

Elements are coordinate triples over the ordered basis (E, F, H) with

    [H, E] = nE,   [H, F] = -nF,   [E, F] = mH,
    wt(E) = n,     wt(F) = -n,     wt(H) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    CoefficientRing,
    ZZ,
    in_ring,
    localized_integers,
    rat,
    scalar_from_json,
    scalar_to_json,
)

# Elementary 2x2 matrices: e, f, h.
MAT_E = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
MAT_F = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
MAT_H = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1)))


def mat_scale(c, mat):
    c = rat(c)
    return tuple(tuple(c * x for x in row) for row in mat)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_bracket(a, b):
    prod1, prod2 = mat_mul(a, b), mat_mul(b, a)
    return tuple(
        tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(prod1, prod2)
    )


ZERO_MAT = ((Fraction(0),) * 2,) * 2


class NotSplitForm(ValueError):
    """The given presentation is not a split Z-form of (sl2, T^1)."""


@dataclass(frozen=True)
class ZForm:
    """The split form g_{n,m} with realization parameter q."""

    n: int
    m: int
    q: Fraction

    def to_json(self):
        return {"n": self.n, "m": self.m, "q": scalar_to_json(self.q)}

    @classmethod
    def from_json(cls, data) -> "ZForm":
        return make_zform(int(data["n"]), int(data["m"]), scalar_from_json(data["q"]))


def make_zform(n: int, m: int, q) -> ZForm:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive integers, got n={n}, m={m}")
    q = rat(q)
    if q == 0:
        raise ValueError("realization parameter q must be nonzero")
    return ZForm(int(n), int(m), q)


def weights(g: ZForm):
    """T^1-weights of the ordered basis (E, F, H)."""
    return (g.n, -g.n, 0)


def bracket_coords(g: ZForm, u, v):
    """Bracket of coordinate triples over the basis (E, F, H)."""
    uE, uF, uH = u
    vE, vF, vH = v
    return (
        g.n * (uH * vE - uE * vH),
        g.n * (uF * vH - uH * vF),
        g.m * (uE * vF - uF * vE),
    )


def realization(g: ZForm):
    """Images of (E, F, H) as 2x2 traceless rational matrices."""
    return (
        mat_scale(g.q, MAT_E),
        mat_scale(Fraction(g.n * g.m, 2) / g.q, MAT_F),
        mat_scale(Fraction(g.n, 2), MAT_H),
    )


def check_jacobi(g: ZForm) -> bool:
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for x in basis:
        for y in basis:
            for z in basis:
                total = (0, 0, 0)
                for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                    term = bracket_coords(g, bracket_coords(g, a, b), c)
                    total = tuple(s + t for s, t in zip(total, term))
                if any(total):
                    return False
    return True


def check_realization_bracket(g: ZForm) -> bool:
    mats = realization(g)
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            lhs = mat_bracket(mats[i], mats[j])
            coords = bracket_coords(g, x, y)
            rhs = ZERO_MAT
            for c, mat in zip(coords, mats):
                rhs = mat_add(rhs, mat_scale(c, mat))
            if lhs != rhs:
                return False
    return True


# -- subalgebras ----------------------------------------------------------

SUBALGEBRA_LABELS = ("b", "bbar", "q", "qp", "qpp", "maximal")


@dataclass(frozen=True)
class Subalgebra:
    label: str
    names: tuple
    basis: tuple  # coordinate triples over (E, F, H)
    base_ring: CoefficientRing
    zform: ZForm


def subalgebra(g: ZForm, label: str) -> Subalgebra:
    """Borel or parabolic subalgebra with exact basis expansions.

    The parabolic labels are tied to the realization parameter: q needs
    q-parameter 1/2, qp needs nm, qpp needs n together with m = 2n.
    """
    n, m = g.n, g.m
    if label == "b":
        names, basis = ("E", "H"), ((1, 0, 0), (0, 0, 1))
    elif label == "bbar":
        names, basis = ("F", "H"), ((0, 1, 0), (0, 0, 1))
    elif label == "q":
        _require_parameter(g, label, Fraction(1, 2))
        names, basis = ("X", "Y"), ((-2 * n * m, 1, 2 * m), (2 * n * m, 1, 0))
    elif label == "qp":
        _require_parameter(g, label, Fraction(n * m))
        names, basis = ("X", "Y"), ((-1, 2 * n * m, 2 * m), (1, 2 * n * m, 0))
    elif label == "qpp":
        if m != 2 * n:
            raise ValueError(
                f"label qpp requires m = 2n; got n={n}, m={m}"
            )
        _require_parameter(g, label, Fraction(n))
        names, basis = ("X", "Y"), ((-1, 1, 2), (1, 1, 0))
    elif label == "maximal":
        _require_parameter(g, label, Fraction(1, 2))
        names, basis = ("X", "W"), ((-2 * n * m, 1, 2 * m), (-2 * n, 0, 1))
    else:
        raise ValueError(f"unknown subalgebra label {label!r}; choose from {SUBALGEBRA_LABELS}")
    return Subalgebra(label, names, basis, ZZ, g)


def _require_parameter(g: ZForm, label: str, required: Fraction) -> None:
    if g.q != required:
        raise ValueError(
            f"label {label} is defined for realization parameter q = {required} "
            f"(n={g.n}, m={g.m}); this form has q = {g.q}"
        )


def bracket_closed_over_z(S: Subalgebra) -> bool:
    """Check [X, Y] of every basis pair lies in the Z-span of the basis."""
    for i, x in enumerate(S.basis):
        for y in S.basis[i + 1:]:
            target = bracket_coords(S.zform, x, y)
            if _integer_combination(S.basis, target) is None:
                return False
    return True


def _integer_combination(basis, target):
    """Integer coefficients expressing target in the given triples, or None."""
    coeffs = _solve_rational(basis, target)
    if coeffs is None:
        return None
    if any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def _solve_rational(vectors, target):
    """Solve sum c_i * vectors[i] = target exactly; None if unsolvable."""
    rows = [[rat(v[k]) for v in vectors] + [rat(target[k])] for k in range(3)]
    ncols = len(vectors)
    pivot_cols = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, 3) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [x / rows[r][col] for x in rows[r]]
        for i in range(3):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
    for i in range(r, 3):
        if rows[i][ncols] != 0:
            return None
    coeffs = [Fraction(0)] * ncols
    for i, col in enumerate(pivot_cols):
        coeffs[col] = rows[i][ncols]
    return coeffs


def iwasawa_decompose(g: ZForm, S: Subalgebra):
    """Express E and F in the basis (X, Y, H) for a parabolic subalgebra.

    Returns {"E": (cX, cY, cH), "F": (cX, cY, cH)} with exact coefficients
    over Z[1/2nm], re-verified by expansion.
    """
    if S.label not in ("q", "qp", "qpp"):
        raise ValueError(f"iwasawa decomposition needs label q, qp or qpp, not {S.label!r}")
    ring = localized_integers(2 * g.n * g.m)
    frame = [S.basis[0], S.basis[1], (0, 0, 1)]
    table = {}
    for name, gen in (("E", (1, 0, 0)), ("F", (0, 1, 0))):
        coeffs = _solve_rational(frame, gen)
        if coeffs is None:
            raise ValueError(f"{name} does not decompose in the frame of {S.label}")
        for c in coeffs:
            if not in_ring(c, ring):
                raise ValueError(
                    f"decomposing {name} needs 1/{c.denominator}, and "
                    f"{c.denominator} is not invertible in {ring.name}"
                )
        check = (0, 0, 0)
        for c, vec in zip(coeffs, frame):
            check = tuple(s + c * v for s, v in zip(check, vec))
        if tuple(check) != gen:
            raise AssertionError("re-expansion failed; solver is inconsistent")
        table[name] = tuple(coeffs)
    return table


# -- classification from a bare presentation ------------------------------


def presentation(g: ZForm, order=(0, 1, 2), signs=(1, 1, 1)):
    """Bracket/weight/realization tables of g in a permuted, sign-flipped basis.

    Used to exercise classify on presentations that are not literally
    (E, F, H) in that order.
    """
    base = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    mats = realization(g)
    basis = [tuple(signs[k] * x for x in base[order[k]]) for k in range(3)]
    wt = weights(g)
    weight_table = [wt[order[k]] for k in range(3)]
    real = [mat_scale(signs[k], mats[order[k]]) for k in range(3)]
    brackets = {}
    for i in range(3):
        for j in range(i + 1, 3):
            target = bracket_coords(g, basis[i], basis[j])
            coeffs = _solve_rational(basis, target)
            brackets[(i, j)] = tuple(coeffs)
    return brackets, weight_table, real


def classify(brackets, weight_table, real):
    """Recover (n, m, |q|) from a rank-3 presentation.

    brackets: {(i, j): coefficients of [X_i, X_j] in the basis}, i < j;
    weight_table: the three T^1-weights; real: three 2x2 rational matrices.
    Raises NotSplitForm when the data is not a split Z-form presentation.
    """
    if len(weight_table) != 3:
        raise NotSplitForm("expected a rank-3 presentation")
    pos = [i for i, w in enumerate(weight_table) if w > 0]
    neg = [i for i, w in enumerate(weight_table) if w < 0]
    zero = [i for i, w in enumerate(weight_table) if w == 0]
    if len(pos) != 1 or len(neg) != 1 or len(zero) != 1:
        raise NotSplitForm("weight spaces are not free of rank (1, 1, 1)")
    ie, jf, kh = pos[0], neg[0], zero[0]
    n = int(weight_table[ie])
    if weight_table[jf] != -n:
        raise NotSplitForm(f"weights {weight_table[ie]} and {weight_table[jf]} are not opposite")

    def pair(i, j):
        if (i, j) in brackets:
            return [rat(c) for c in brackets[(i, j)]]
        return [-rat(c) for c in brackets[(j, i)]]

    he = pair(kh, ie)
    if he[ie] != n or he[jf] != 0 or he[kh] != 0:
        raise NotSplitForm("[H, E] is not nE")
    hf = pair(kh, jf)
    if hf[jf] != -n or hf[ie] != 0 or hf[kh] != 0:
        raise NotSplitForm("[H, F] is not -nF")
    ef = pair(ie, jf)
    if ef[ie] != 0 or ef[jf] != 0:
        raise NotSplitForm("[E, F] has a component outside H")
    c = ef[kh]
    if c == 0 or c.denominator != 1:
        raise NotSplitForm(f"[E, F] = {c}H is not a nonzero integer multiple of H")
    f_sign = 1
    if c < 0:
        f_sign = -1  # replace F by -F; realization flips with it
        c = -c
    m = int(c)

    r_e, r_f, r_h = real[ie], real[jf], real[kh]
    r_f = mat_scale(f_sign, r_f)
    if r_h != mat_scale(Fraction(n, 2), MAT_H):
        raise NotSplitForm("realization of H is not (n/2)h")
    q = rat(r_e[0][1])
    if q == 0 or r_e[0][0] != 0 or r_e[1][0] != 0 or r_e[1][1] != 0:
        raise NotSplitForm("realization of E is not a nonzero multiple of e")
    expected_f = mat_scale(Fraction(n * m, 2) / q, MAT_F)
    if r_f != expected_f:
        raise NotSplitForm("realization of F is not (nm/2q)f")
    return (n, m, abs(q))


def presentation_to_json(brackets, weight_table, real):
    return {
        "weights": list(weight_table),
        "brackets": [
            [i, j, [scalar_to_json(rat(c)) for c in coeffs]]
            for (i, j), coeffs in sorted(brackets.items())
        ],
        "realization": [
            [[scalar_to_json(x) for x in row] for row in mat] for mat in real
        ],
    }


def presentation_from_json(data):
    brackets = {
        (int(i), int(j)): tuple(scalar_from_json(c) for c in coeffs)
        for i, j, coeffs in data["brackets"]
    }
    weight_table = [int(w) for w in data["weights"]]
    real = [
        tuple(tuple(scalar_from_json(x) for x in row) for row in mat)
        for mat in data["realization"]
    ]
    return brackets, weight_table, real
