"""Induced, produced, and principal-series modules.

The induced/produced coefficients are cross-checked through the enveloping
algebra: words are normal-ordered with E on the left (via the swap
automorphism E <-> F, H -> -H) and evaluated against the defining
characters, which is an independent route to the same numbers.
"""

import random
from fractions import Fraction

import pytest

from hclat import pbw
from hclat import weightmods as wm
from hclat.scalars import QQ, ZZ, localized_integers
from hclat.zforms import make_zform, subalgebra

SWAP = {"E": "F", "F": "E", "H": "H"}


def normal_form_ehf(word, g):
    """Normal form in the order E < H < F, as {(alpha, beta, gamma): coeff}
    meaning E^alpha H^beta F^gamma.

    Uses the swap automorphism E <-> F, H -> -H: apply it to the word,
    normal-order in the usual F < H < E order, and map back.
    """
    word = list(word)
    word_sign = (-1) ** sum(1 for x in word if x == "H")
    image = pbw.normal_form([SWAP[x] for x in word], g)
    out = {}
    for (a, b, c), coeff in image.items():
        out[(a, b, c)] = out.get((a, b, c), 0) + coeff * word_sign * (-1) ** b
    return {k: v for k, v in out.items() if v != 0}


def induced_vector_by_pbw(word_gen, p, lam, g):
    """Apply a generator to y_(lam+np) = E^p (x) 1 by normal ordering.

    Right factors H, F act on the highest weight line by lam and 0.
    """
    nf = normal_form_ehf([word_gen] + ["E"] * p, g)
    out = {}
    for (alpha, beta, gamma), coeff in nf.items():
        if gamma > 0:
            continue
        value = coeff * Fraction(lam) ** beta
        if value:
            out[alpha] = out.get(alpha, 0) + value
    return {k: v for k, v in out.items() if v != 0}


def produced_value_by_pbw(word_gen, p, q, lam, g):
    """(gen . phi_p)(F^q) = phi_p(F^q gen) with phi_p dual to F^p.

    Left factors E, H act on the character by 0 and lam.
    """
    nf = normal_form_ehf(["F"] * q + [word_gen], g)
    total = Fraction(0)
    for (alpha, beta, gamma), coeff in nf.items():
        if alpha > 0 or gamma != p:
            continue
        total += coeff * Fraction(lam) ** beta
    return total


def test_induced_example_g11():
    g = make_zform(1, 1, 1)
    ind = wm.induced_module(g, 1, ZZ)
    assert ind.act_gen("F", 2) == [(1, Fraction(-3))]
    assert ind.act_gen("F", 0) == []
    assert ind.act_gen("E", 4) == [(5, Fraction(1))]
    assert ind.weight(3) == 4


def test_induced_matches_pbw_evaluation():
    for n, m in [(1, 1), (2, 3), (3, 1)]:
        g = make_zform(n, m, 1)
        for lam in (-3, 0, 2):
            ind = wm.induced_module(g, lam, QQ)
            for p in range(0, 9):
                for gen in ("E", "F", "H"):
                    direct = dict(ind.act_gen(gen, p))
                    assert induced_vector_by_pbw(gen, p, lam, g) == direct


def test_produced_example_g11():
    g = make_zform(1, 1, 1)
    pro = wm.produced_module(g, 1, ZZ)
    assert pro.act_gen("E", 0) == [(1, Fraction(-1))]
    assert pro.act_gen("F", 0) == []
    assert pro.act_gen("F", 5) == [(4, Fraction(1))]


def test_produced_matches_pbw_evaluation():
    for n, m in [(1, 1), (2, 3)]:
        g = make_zform(n, m, 1)
        for lam in (-2, 0, 3):
            pro = wm.produced_module(g, lam, QQ)
            for p in range(0, 7):
                for gen in ("E", "F", "H"):
                    image = dict(pro.act_gen(gen, p))
                    for q in range(0, 9):
                        assert produced_value_by_pbw(gen, p, q, lam, g) == image.get(
                            q, Fraction(0)
                        )


def test_bracket_axioms_families():
    window = range(-40, 41)
    for n, m in [(1, 1), (2, 3), (3, 2)]:
        g = make_zform(n, m, 1)
        for lam in (-6, 0, 5):
            assert wm.check_module_axioms(wm.induced_module(g, lam, ZZ), window) == []
            assert wm.check_module_axioms(wm.produced_module(g, lam, ZZ), window) == []


def test_duality_pairing_coefficients():
    """EF-composite equals FE-composite plus m(lam+np) in induced(lam)."""
    for n, m in [(1, 1), (2, 3)]:
        g = make_zform(n, m, 1)
        for lam in (-4, 1):
            ind = wm.induced_module(g, lam, ZZ)
            for p in range(0, 30):
                ef = ind.coefficient("F", p) * ind.coefficient("E", p - 1)
                fe = ind.coefficient("E", p) * ind.coefficient("F", p + 1)
                assert ef == fe + m * (lam + n * p)


def test_ps_q_example():
    g = make_zform(1, 1, Fraction(1, 2))
    chi = wm.CharacterModule(Fraction(0), Fraction(2), "q")
    ps = wm.principal_series(g, "q", chi, QQ)
    for p in range(-6, 7):
        assert ps.coefficient("E", p) == Fraction(p + 1, 2)
        assert ps.coefficient("F", p) == 1 - p
        assert ps.weight(p) == p
    assert ps.counit_value(3) == 1


def test_ps_qpp_coefficients():
    """q''-series: E adds mu/2 + n(p+eps), F subtracts."""
    for n in (1, 2, 3):
        g = make_zform(n, 2 * n, n)
        for k in range(n):
            eps = Fraction(k, n)
            for mu in (Fraction(0), Fraction(3), Fraction(-5, 2)):
                chi = wm.CharacterModule(eps, mu, "qpp")
                ps = wm.principal_series(g, "qpp", chi, QQ)
                for p in range(-5, 6):
                    assert ps.coefficient("E", p) == mu / 2 + n * (p + eps)
                    assert ps.coefficient("F", p) == mu / 2 - n * (p + eps)


def test_ps_qp_derived_f_coefficient():
    """qp-series F-coefficient is half of (mu/2nm - p - eps)."""
    g = make_zform(2, 3, 6)
    chi = wm.CharacterModule(Fraction(1, 2), Fraction(7), "qp")
    ps = wm.principal_series(g, "qp", chi, QQ)
    n, m, mu, eps = 2, 3, Fraction(7), Fraction(1, 2)
    for p in range(-5, 6):
        assert ps.coefficient("F", p) == Fraction(1, 2) * (
            mu / (2 * n * m) - p - eps
        )
        assert ps.coefficient("E", p) == mu / 2 + n * m * (p + eps)


def test_ps_alternate_qp_coefficient_breaks_bracket():
    g = make_zform(2, 3, 6)
    chi = wm.CharacterModule(Fraction(0), Fraction(5), "qp")
    derived = wm.principal_series(g, "qp", chi, QQ)
    assert wm.check_module_axioms(derived, range(-25, 26)) == []
    alternate = wm.principal_series(g, "qp", chi, QQ, alternate_qp_f=True)
    failures = wm.check_module_axioms(alternate, range(-25, 26))
    assert failures and all(name == "[E,F]=mH" for _, name, _ in failures)


def test_ps_bracket_axioms_grid():
    window = range(-50, 51)
    for n in (1, 2):
        for m in (1, 3):
            gq = make_zform(n, m, Fraction(1, 2))
            gp = make_zform(n, m, Fraction(n * m))
            for k in range(n):
                eps = Fraction(k, n)
                for mu in (Fraction(1), Fraction(-7, 3)):
                    chi_q = wm.CharacterModule(eps, mu, "q")
                    chi_p = wm.CharacterModule(eps, mu, "qp")
                    assert (
                        wm.check_module_axioms(
                            wm.principal_series(gq, "q", chi_q, QQ), window
                        )
                        == []
                    )
                    assert (
                        wm.check_module_axioms(
                            wm.principal_series(gp, "qp", chi_p, QQ), window
                        )
                        == []
                    )


def test_ps_vanishing_index_unique():
    """E-coefficient vanishes exactly at the top of the integral support."""
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        k = rng.choice([j for j in range(n) if 2 * Fraction(j, n).denominator <= 2])
        eps = Fraction(k, n)
        target = rng.randint(-6, 6)
        mu = 2 * n * m * (target - eps)  # makes mu/2nm + eps an integer
        g = make_zform(n, m, Fraction(1, 2))
        ps = wm.principal_series(g, "q", wm.CharacterModule(eps, Fraction(mu), "q"), QQ)
        zeros_e = [p for p in range(-40, 41) if ps.coefficient("E", p) == 0]
        assert zeros_e == [-target]
        if (Fraction(mu) / (2 * n * m) - eps).denominator == 1:
            zeros_f = [p for p in range(-40, 41) if ps.coefficient("F", p) == 0]
            assert len(zeros_f) == 1


def test_weight_equals_h_eigenvalue():
    g = make_zform(3, 2, Fraction(1, 2))
    mods = [
        wm.induced_module(g, -4, ZZ),
        wm.produced_module(g, 2, ZZ),
        wm.principal_series(
            g, "q", wm.CharacterModule(Fraction(2, 3), Fraction(5), "q"), QQ
        ),
    ]
    for M in mods:
        for p in range(-20, 21):
            if M.support.contains(p):
                assert M.coefficient("H", p) == M.weight(p)


def test_character_validation():
    g = make_zform(2, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        wm.principal_series(g, "q", wm.CharacterModule(Fraction(1, 3), Fraction(1), "q"), QQ)
    with pytest.raises(ValueError):
        wm.principal_series(g, "q", wm.CharacterModule(Fraction(0), Fraction(1), "qp"), QQ)
    with pytest.raises(ValueError):
        wm.principal_series(g, "nope", wm.CharacterModule(Fraction(0), Fraction(1), "nope"), QQ)


def test_ps_ring_requirements():
    gq = make_zform(2, 3, Fraction(1, 2))
    chi = wm.CharacterModule(Fraction(0), Fraction(1), "q")
    # 1/12 exists in Z[1/12] but not Z[1/3]
    wm.principal_series(gq, "q", chi, localized_integers(12))
    with pytest.raises(ValueError, match="dyadic"):
        wm.principal_series(gq, "q", chi, localized_integers(3))
    gpp = make_zform(3, 6, 3)
    chipp = wm.CharacterModule(Fraction(0), Fraction(2), "qpp")
    wm.principal_series(gpp, "qpp", chipp, localized_integers(2))


def test_derive_ps_action_tables():
    gq = make_zform(2, 3, Fraction(1, 2))
    table = wm.derive_ps_action(gq, subalgebra(gq, "q"))
    assert table["E"] == {"shift": 1, "c_mu": Fraction(1, 24), "c_w": Fraction(1, 4)}
    assert table["F"] == {"shift": -1, "c_mu": Fraction(1, 2), "c_w": Fraction(-3)}


def test_negative_control_corrupted_module():
    g = make_zform(1, 1, 1)
    ind = wm.induced_module(g, 1, ZZ)
    corrupt = ind.with_action("E", 1, lambda p: Fraction(2))
    failures = wm.check_module_axioms(corrupt, range(0, 15))
    assert {p for p, _, _ in failures} == set(range(0, 15))


def test_module_rows_window():
    g = make_zform(1, 2, 1)
    pro = wm.produced_module(g, 2, ZZ)
    rows = wm.module_rows(pro, -2, 2)
    assert [r[0] for r in rows] == [0, 1, 2]
    assert rows[0] == [0, 2, Fraction(-4), Fraction(0), Fraction(2)]
