"""Finite-rank lattices for SL2 over the integers: the ladder models with
their counit fractions, sublattices generated by vectors, duals, minimal
and maximal forms, Hom lattices, and maximality certificates.

Sublattices are kept as integer row-echelon bases over a common
denominator, so membership, closure, and index questions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm

from .scalars import rat


def _ext_gcd(a: int, b: int):
    """g, x, y with x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _pivot(row):
    for j, x in enumerate(row):
        if x:
            return j
    return None


class RowLattice:
    """Subgroup of (1/den) * Z^n kept in row-echelon form over Z."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.den = 1
        self.rows = []  # integer rows, pivot columns strictly increasing

    def copy(self) -> "RowLattice":
        dup = RowLattice(self.ncols)
        dup.den = self.den
        dup.rows = [list(row) for row in self.rows]
        return dup

    def _rescale(self, new_den: int):
        if new_den == self.den:
            return
        factor = new_den // self.den
        self.rows = [[x * factor for x in row] for row in self.rows]
        self.den = new_den

    def _to_integer(self, vec) -> list:
        vec = [rat(x) for x in vec]
        d = lcm(self.den, *(x.denominator for x in vec)) if vec else self.den
        self._rescale(d)
        return [int(x * d) for x in vec]

    def add(self, vec) -> bool:
        """Insert a rational vector; returns True if the lattice grew."""
        work = self._to_integer(vec)
        grew = False
        while any(work):
            j = _pivot(work)
            pos = 0
            while pos < len(self.rows) and _pivot(self.rows[pos]) < j:
                pos += 1
            if pos == len(self.rows) or _pivot(self.rows[pos]) != j:
                if work[j] < 0:
                    work = [-x for x in work]
                self.rows.insert(pos, work)
                return True
            row = self.rows[pos]
            a, b = row[j], work[j]
            if b % a == 0:
                q = b // a
                work = [w - q * r for w, r in zip(work, row)]
            else:
                g, x, y = _ext_gcd(a, b)
                merged = [x * r + y * w for r, w in zip(row, work)]
                work = [(a // g) * w - (b // g) * r for r, w in zip(row, work)]
                self.rows[pos] = merged
                grew = True
        return grew

    def contains(self, vec) -> bool:
        vec = [rat(x) for x in vec]
        d = lcm(self.den, *(x.denominator for x in vec)) if vec else self.den
        if d != self.den:
            # vector needs a finer denominator than the lattice carries
            return False
        work = [int(x * d) for x in vec]
        for row in self.rows:
            j = _pivot(row)
            if work[j]:
                if work[j] % row[j]:
                    return False
                q = work[j] // row[j]
                work = [w - q * r for w, r in zip(work, row)]
        return not any(work)

    def basis(self) -> list:
        """Echelon basis as rational rows (entries above pivots reduced)."""
        rows = [list(r) for r in self.rows]
        for i in reversed(range(len(rows))):
            j = _pivot(rows[i])
            for k in range(i):
                q = rows[k][j] // rows[i][j]
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[i])]
        return [[Fraction(x, self.den) for x in row] for row in rows]

    def coordinates(self, vec) -> list:
        """Integer coordinates of vec in the echelon basis, or None."""
        basis = self.basis()
        vec = [rat(x) for x in vec]
        coords = [0] * len(basis)
        for i, row in enumerate(basis):
            j = next(k for k, x in enumerate(row) if x)
            if vec[j]:
                q = vec[j] / row[j]
                if q.denominator != 1:
                    return None
                coords[i] = int(q)
                vec = [a - q * b for a, b in zip(vec, row)]
        return coords if not any(vec) else None


def _mat_apply(M, vec):
    return [sum(M[i][j] * vec[j] for j in range(len(vec))) for i in range(len(M))]


def _mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _mat_scale(M, c):
    return [[c * x for x in row] for row in M]


@dataclass
class FiniteLattice:
    """Finite-rank lattice with integer E and F matrices; H is diagonal by
    weight.  Column convention: M[i][j] is the u_i-coefficient of X u_j.

    weights is None when the basis is not weight-homogeneous (possible for
    lattices generated by mixed vectors); embedding, when present, gives
    the basis rows in ambient ladder coordinates.
    """

    weights: list
    E: list
    F: list
    embedding: list = None
    ambient_weights: list = None

    @property
    def rank(self) -> int:
        return len(self.E)

    def H(self) -> list:
        if self.weights is None:
            # H = EF - FE always lies in the lattice's endomorphisms
            ef = _mat_mul(self.E, self.F)
            fe = _mat_mul(self.F, self.E)
            return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(ef, fe)]
        return [
            [self.weights[i] if i == j else 0 for j in range(self.rank)]
            for i in range(self.rank)
        ]

    def to_json(self):
        out = {"rank": self.rank, "weights": self.weights, "E": self.E, "F": self.F}
        if self.embedding is not None:
            out["embedding"] = [[str(x) for x in row] for row in self.embedding]
        return out


def check_lattice_axioms(L: FiniteLattice) -> list:
    """Integer entries and the three bracket identities, as exact matrices."""
    failures = []
    for name, M in (("E", L.E), ("F", L.F)):
        if any(rat(x).denominator != 1 for row in M for x in row):
            failures.append(f"{name} has a non-integer entry")
    H = L.H()
    ef = _mat_mul(L.E, L.F)
    fe = _mat_mul(L.F, L.E)
    if [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(ef, fe)] != H:
        failures.append("[E,F] != H")
    he = _mat_mul(H, L.E)
    eh = _mat_mul(L.E, H)
    if [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(he, eh)] != _mat_scale(L.E, 2):
        failures.append("[H,E] != 2E")
    hf = _mat_mul(H, L.F)
    fh = _mat_mul(L.F, H)
    if [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(hf, fh)] != _mat_scale(L.F, -2):
        failures.append("[H,F] != -2F")
    return failures


def ladder_lattice(lam: int, n: int) -> FiniteLattice:
    """Rank lam+2n+1 lattice on v_{lam+2n-2i} with E v_(i) = (lam+2n-i+1)
    v_(i-1) and F v_(i) = (i+1) v_(i+1)."""
    w = lam + 2 * n
    if w < 0 or n < 0:
        raise ValueError(f"lam + 2n = {w} must be nonnegative")
    rank = w + 1
    weights = [w - 2 * i for i in range(rank)]
    E = [[0] * rank for _ in range(rank)]
    F = [[0] * rank for _ in range(rank)]
    for i in range(1, rank):
        E[i - 1][i] = w - i + 1
    for i in range(rank - 1):
        F[i + 1][i] = i + 1
    return FiniteLattice(weights, E, F)


def _closure_ops(ambient: FiniteLattice, divided_powers: bool) -> list:
    """Matrices to close under: E and F, plus E^k/k! and F^k/k! if asked."""
    ops = [ambient.E, ambient.F]
    if divided_powers:
        for base in (ambient.E, ambient.F):
            power = base
            for k in range(2, ambient.rank + 1):
                power = _mat_mul(power, base)
                ops.append(_mat_scale(power, Fraction(1, factorial(k))))
    return ops


def _close_under(lat: RowLattice, ops, queue) -> None:
    """Grow lat until it is stable under the (linear) ops.

    Only vectors whose insertion enlarged the lattice need their images
    taken: the final lattice is the Z-span of those vectors together with
    rows whose images were already checked, so stability follows from
    linearity without re-sweeping the basis.
    """
    pending = list(queue)
    while pending:
        vec = pending.pop()
        for op in ops:
            image = _mat_apply(op, vec)
            if any(image) and lat.add(image):
                pending.append(image)


def generated_lattice(ambient: FiniteLattice, vectors, divided_powers: bool = False) -> FiniteLattice:
    """Smallest sublattice containing the vectors and closed under E and F
    (and, with divided_powers, under E^k/k! and F^k/k!).

    Vectors are rational rows in ambient coordinates; the result carries
    its embedding and its own integer action matrices.
    """
    rank = ambient.rank
    if not vectors or all(not any(v) for v in vectors):
        raise ValueError("need at least one nonzero generating vector")
    ops = _closure_ops(ambient, divided_powers)
    lat = RowLattice(rank)
    fresh = [v for v in vectors if lat.add(v)]
    _close_under(lat, ops, fresh)
    return _from_row_lattice(lat, ambient)


def _from_row_lattice(lat: RowLattice, ambient: FiniteLattice) -> FiniteLattice:
    basis = lat.basis()
    actions = {}
    # column convention: entry [i][j] is the coefficient of basis i in the
    # image of basis j
    for name, M in (("E", ambient.E), ("F", ambient.F)):
        cols = []
        for row in basis:
            coords = lat.coordinates(_mat_apply(M, row))
            if coords is None:
                raise RuntimeError("closure left the lattice; reduction bug")
            cols.append(coords)
        actions[name] = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
    weights = []
    for row in basis:
        support = {ambient.weights[k] for k, x in enumerate(row) if x}
        if len(support) != 1:
            weights = None
            break
        weights.append(support.pop())
    return FiniteLattice(
        weights,
        actions["E"],
        actions["F"],
        embedding=basis,
        ambient_weights=list(ambient.weights),
    )


def dual_lattice(L: FiniteLattice) -> FiniteLattice:
    """Contragredient lattice: (x phi)(v) = -phi(x v), basis reordered so
    weights stay descending."""
    r = L.rank
    perm = [r - 1 - a for a in range(r)]
    E = [[-L.E[perm[b]][perm[a]] for b in range(r)] for a in range(r)]
    F = [[-L.F[perm[b]][perm[a]] for b in range(r)] for a in range(r)]
    weights = None
    if L.weights is not None:
        weights = [-L.weights[perm[a]] for a in range(r)]
    return FiniteLattice(weights, E, F)


def minimal_lattice(lam: int) -> FiniteLattice:
    """Sublattice of the weight-lam ladder generated from the highest
    vector under divided powers."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    amb = ladder_lattice(lam, 0)
    top = [Fraction(1 if i == 0 else 0) for i in range(amb.rank)]
    return generated_lattice(amb, [top], divided_powers=True)


def maximal_lattice(lam: int) -> FiniteLattice:
    """Dual of the divided-power closure of the lowest vector, embedded
    back into the ladder with highest component normalized to Z."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    amb = ladder_lattice(lam, 0)
    bottom = [Fraction(1 if i == amb.rank - 1 else 0) for i in range(amb.rank)]
    low = generated_lattice(amb, [bottom], divided_powers=True)
    M = dual_lattice(low)
    embedding = _diagonal_intertwiner(M, amb)
    # flip basis signs so the embedding coefficients are positive; the
    # action matrices are conjugated by the same signs
    signs = [1 if embedding[a][a] > 0 else -1 for a in range(M.rank)]
    E = [[signs[i] * signs[j] * M.E[i][j] for j in range(M.rank)] for i in range(M.rank)]
    F = [[signs[i] * signs[j] * M.F[i][j] for j in range(M.rank)] for i in range(M.rank)]
    embedding = [[abs(x) for x in row] for row in embedding]
    return FiniteLattice(
        M.weights, E, F, embedding=embedding, ambient_weights=list(amb.weights)
    )


def _diagonal_intertwiner(M: FiniteLattice, amb: FiniteLattice) -> list:
    """Rows c_a e_a with T(delta_a) = c_a v_a intertwining both actions,
    normalized c_0 = 1.  Needs matching descending weight lists."""
    if M.weights != amb.weights:
        raise ValueError("weight lists differ; no diagonal identification")
    r = M.rank
    c = [Fraction(0)] * r
    c[0] = Fraction(1)
    for b in range(r - 1):
        B = M.F[b + 1][b]
        A = amb.F[b + 1][b]
        if B == 0:
            raise ValueError("F-chain of the dual breaks; cannot identify")
        c[b + 1] = c[b] * A / B
    for b in range(1, r):  # confirm the E-direction agrees
        if c[b - 1] * M.E[b - 1][b] != c[b] * amb.E[b - 1][b]:
            raise ValueError("no diagonal intertwiner matches both actions")
    return [[c[a] if j == a else Fraction(0) for j in range(r)] for a in range(r)]


def binomial_lattice(lam: int) -> FiniteLattice:
    """The admissible model: coefficients 1/binomial(lam, a) on the ladder.

    Used as an independent cross-check of maximal_lattice.
    """
    amb = ladder_lattice(lam, 0)
    rows = [
        [Fraction(1, comb(lam, a)) if j == a else Fraction(0) for j in range(amb.rank)]
        for a in range(amb.rank)
    ]
    return generated_lattice(amb, rows, divided_powers=True)


def lattice_span_equal(A: FiniteLattice, B: FiniteLattice) -> bool:
    """Same Z-span of embeddings (both must carry one)."""
    if A.embedding is None or B.embedding is None:
        raise ValueError("both lattices need embeddings to compare spans")
    lat_a = RowLattice(len(A.embedding[0]))
    for row in A.embedding:
        lat_a.add(row)
    lat_b = RowLattice(len(B.embedding[0]))
    for row in B.embedding:
        lat_b.add(row)
    return all(lat_a.contains(r) for r in B.embedding) and all(
        lat_b.contains(r) for r in A.embedding
    )


def inclusion_index(inner: FiniteLattice, outer: FiniteLattice):
    """Index of inner in outer, or None if not included.

    Computed as the determinant of inner's basis in outer's basis.
    """
    if inner.embedding is None or outer.embedding is None:
        raise ValueError("both lattices need embeddings")
    lat = RowLattice(len(outer.embedding[0]))
    for row in outer.embedding:
        lat.add(row)
    coords = []
    for row in inner.embedding:
        c = lat.coordinates(row)
        if c is None:
            return None
        coords.append(c)
    if len(coords) != len(outer.embedding):
        return None
    return abs(_det(coords))


def _det(M: list) -> Fraction:
    n = len(M)
    M = [[rat(x) for x in row] for row in M]
    sign = 1
    for col in range(n):
        pividx = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pividx is None:
            return Fraction(0)
        if pividx != col:
            M[col], M[pividx] = M[pividx], M[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = M[r][col] / M[col][col]
            M[r] = [a - factor * b for a, b in zip(M[r], M[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= M[i][i]
    return out


# -- Hom lattices and counits -------------------------------------------------


def hom_lattice(A: FiniteLattice, B: FiniteLattice) -> dict:
    """Integer intertwiners T with T X_A = X_B T for X in {E, F, H}.

    Returns the rank of the rational solution space and, when it is one,
    the primitive integer generator (as a rank_B x rank_A matrix).
    """
    ra, rb = A.rank, B.rank
    unknowns = ra * rb

    def idx(i, j):
        return i * ra + j  # T[i][j], i < rb, j < ra

    equations = []
    pairs = (("E", A.E, B.E), ("F", A.F, B.F), ("H", A.H(), B.H()))
    for _, XA, XB in pairs:
        for i in range(rb):
            for j in range(ra):
                row = [Fraction(0)] * unknowns
                for k in range(ra):
                    row[idx(i, k)] += rat(XA[k][j])
                for k in range(rb):
                    row[idx(k, j)] -= rat(XB[i][k])
                if any(row):
                    equations.append(row)
    kernel = _nullspace(equations, unknowns)
    result = {"rank": len(kernel), "generator": None}
    if len(kernel) == 1:
        vec = kernel[0]
        scale = lcm(*(x.denominator for x in vec))
        ints = [int(x * scale) for x in vec]
        content = 0
        for x in ints:
            content = gcd(content, x)
        ints = [x // content for x in ints]
        first = next(x for x in ints if x)
        if first < 0:
            ints = [-x for x in ints]
        result["generator"] = [
            [ints[idx(i, j)] for j in range(ra)] for i in range(rb)
        ]
    return result


def _nullspace(rows, ncols) -> list:
    """Basis of the rational kernel of the row system."""
    M = [list(r) for r in rows]
    pivots = {}
    rank = 0
    for col in range(ncols):
        pividx = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if pividx is None:
            continue
        M[rank], M[pividx] = M[pividx], M[rank]
        piv = M[rank][col]
        M[rank] = [x / piv for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [a - factor * b for a, b in zip(M[r], M[rank])]
        pivots[col] = rank
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for col, r in pivots.items():
            vec[col] = -M[r][f]
        basis.append(vec)
    return basis


def _top_component(embedding) -> Fraction:
    """Generator g with V intersect Q*e_top = g Z e_top.

    If e_top = sum q_i b_i over the basis, then t e_top lies in V exactly
    when every t q_i is an integer, so g = lcm(denominators)/gcd(numerators)
    over the nonzero coordinates.
    """
    lat = RowLattice(len(embedding[0]))
    for row in embedding:
        lat.add(row)
    target = [Fraction(1 if j == 0 else 0) for j in range(lat.ncols)]
    coords = _rational_coordinates(lat.basis(), target)
    if coords is None:
        raise ValueError("ambient highest vector is not in the Q-span")
    nums = [abs(q.numerator) for q in coords if q]
    dens = [q.denominator for q in coords if q]
    if not nums:
        raise ValueError("highest component is zero")
    return Fraction(lcm(*dens), gcd(*nums))


def hom_generator_index(V: FiniteLattice) -> int:
    """Positive generator of the image of V's highest weight component
    under the counit dual to the ambient highest vector."""
    if V.embedding is None:
        raise ValueError("lattice carries no embedding")
    g = _top_component(V.embedding)
    if g.denominator != 1:
        raise ValueError(
            f"highest component {g} is not contained in Z; normalize first"
        )
    return g.numerator


def _rational_coordinates(rows, target):
    work = [rat(x) for x in target]
    coords = []
    for row in rows:
        j = next((k for k, x in enumerate(row) if x), None)
        if j is None:
            coords.append(Fraction(0))
            continue
        q = work[j] / row[j]
        coords.append(q)
        work = [a - q * b for a, b in zip(work, row)]
    return coords if not any(work) else None


def scale_lattice(L: FiniteLattice, k: int) -> FiniteLattice:
    if L.embedding is None:
        raise ValueError("lattice carries no embedding")
    return FiniteLattice(
        L.weights,
        L.E,
        L.F,
        embedding=[[k * x for x in row] for row in L.embedding],
        ambient_weights=L.ambient_weights,
    )


def maximality_certificate(L: FiniteLattice, primes, lam: int) -> dict:
    """Try to enlarge L by u/rho for each basis vector u and prime rho.

    A lattice with highest component Z is maximal when every enlargement
    forces a denominator into the highest component; failures list the
    (prime, weight-or-index) pairs where the enlarged closure stays
    integral at the top.
    """
    if L.embedding is None:
        raise ValueError("lattice carries no embedding")
    amb = ladder_lattice(lam, 0)
    if hom_generator_index(L) != 1:
        raise ValueError("highest component is not normalized to Z")
    ops = _closure_ops(amb, divided_powers=True)
    base = RowLattice(amb.rank)
    for row in L.embedding:
        base.add(row)
    # each enlargement below reuses base, so it must already be stable
    for row in L.embedding:
        for op in ops:
            image = _mat_apply(op, row)
            if any(image) and not base.contains(image):
                raise ValueError("lattice is not closed under the divided action")
    failures = []
    for rho in primes:
        for a, row in enumerate(L.embedding):
            candidate = [x / rho for x in row]
            enlarged = base.copy()
            if enlarged.add(candidate):
                _close_under(enlarged, ops, [candidate])
            top = _top_component(enlarged.basis())
            if top.denominator == 1:
                label = L.weights[a] if L.weights is not None else a
                failures.append((rho, label))
    return {
        "certified": not failures,
        "failures": failures,
        "primes": list(primes),
    }


def counit_fraction_witness(lam: int, n: int) -> dict:
    """The functional phi(v_{lam+2n-2i}) = 1/n at i = n, else 0, checked to
    be a homomorphism to the rationals-mod-1 character of weight lam."""
    if n < 1:
        raise ValueError("n must be positive")
    L = ladder_lattice(lam, n)
    rank = L.rank
    phi = [Fraction(1, n) if i == n else Fraction(0) for i in range(rank)]
    problems = []
    for i in range(rank):
        if phi[i] != 0 and L.weights[i] != lam:
            problems.append(f"phi lives off the weight-{lam} line at index {i}")
    for j in range(rank):
        value = sum(phi[i] * L.F[i][j] for i in range(rank))
        if value % 1 != 0:
            problems.append(f"phi(F v_{j}) = {value} is not integral")
    for j in range(rank):
        got = phi[j] * L.weights[j]
        want = lam * phi[j]
        if (got - want) % 1 != 0:
            problems.append(f"phi(H v_{j}) != lam phi(v_{j}) mod Z")
    if problems:
        raise ValueError("; ".join(problems))
    return {
        "lam": lam,
        "n": n,
        "fraction": Fraction(1, n) % 1,
        "weight_check": True,
        "f_check": True,
        "h_check": True,
    }
