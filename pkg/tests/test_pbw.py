"""Normal ordering engine, checked against a naive rewriting reference."""

import random
from fractions import Fraction

import pytest

from hclat import pbw
from hclat.zforms import make_zform

RANK = {"F": 0, "H": 1, "E": 2}


def slow_normal_form(word, g):
    """Reference implementation: rewrite adjacent out-of-order pairs.

    Deliberately different route from the closed-form engine: words stay
    words until fully sorted.
    """
    n, m = g.n, g.m
    terms = {tuple(word): Fraction(1)}
    while True:
        unsorted_word = next(
            (
                w
                for w in terms
                if any(RANK[w[i]] > RANK[w[i + 1]] for i in range(len(w) - 1))
            ),
            None,
        )
        if unsorted_word is None:
            break
        coeff = terms.pop(unsorted_word)
        w = unsorted_word
        i = next(i for i in range(len(w) - 1) if RANK[w[i]] > RANK[w[i + 1]])
        pre, x, y, post = w[:i], w[i], w[i + 1], w[i + 2:]
        swapped = pre + (y, x) + post
        if (x, y) == ("E", "F"):
            extra = [(pre + ("H",) + post, m * coeff)]
        elif (x, y) == ("E", "H"):
            extra = [(pre + ("E",) + post, -n * coeff)]
        else:  # ("H", "F")
            extra = [(pre + ("F",) + post, -n * coeff)]
        for key, val in [(swapped, coeff)] + extra:
            total = terms.get(key, Fraction(0)) + val
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
    out = {}
    for w, coeff in terms.items():
        key = (w.count("F"), w.count("H"), w.count("E"))
        total = out.get(key, Fraction(0)) + coeff
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def test_single_relation_g11():
    g = make_zform(1, 1, 1)
    assert pbw.normal_form(["E", "F"], g) == {(1, 0, 1): 1, (0, 1, 0): 1}


def test_fe2_identity():
    """FE^2 = E^2F - 2mEH - nmE, checked in normal-ordered form."""
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            g = make_zform(n, m, 1)
            e2f = pbw.normal_form(["E", "E", "F"], g)
            eh = pbw.normal_form(["E", "H"], g)
            expected = pbw.add(
                e2f,
                pbw.add(pbw.scale(eh, -2 * m), pbw.monomial(0, 0, 1, -n * m)),
            )
            assert pbw.normal_form(["F", "E", "E"], g) == expected


def test_proof_identity_f_power():
    """F^(p+1)E = EF^(p+1) - (1/2)nmp(p+1)F^p - m(p+1)HF^p."""
    for n, m in [(1, 1), (2, 3), (3, 2)]:
        g = make_zform(n, m, 1)
        for p in range(8):
            total = pbw.normal_form(["E"] + ["F"] * (p + 1), g)
            total = pbw.add(
                total,
                pbw.scale(pbw.normal_form(["F"] * p, g), Fraction(-n * m * p * (p + 1), 2)),
            )
            total = pbw.add(
                total, pbw.scale(pbw.normal_form(["H"] + ["F"] * p, g), -m * (p + 1))
            )
            assert total == pbw.monomial(p + 1, 0, 1)


def test_engine_matches_rewriting_reference():
    rng = random.Random(2024)
    for n, m in [(1, 1), (2, 1), (1, 3), (3, 2)]:
        g = make_zform(n, m, 1)
        for _ in range(60):
            word = [rng.choice("EFH") for _ in range(rng.randint(0, 6))]
            assert pbw.normal_form(word, g) == slow_normal_form(word, g)


def test_idempotent_and_multiplicative():
    rng = random.Random(9)
    g = make_zform(2, 3, 1)
    for _ in range(60):
        w1 = [rng.choice("EFH") for _ in range(rng.randint(0, 5))]
        w2 = [rng.choice("EFH") for _ in range(rng.randint(0, 5))]
        x = pbw.normal_form(w1, g)
        y = pbw.normal_form(w2, g)
        # normalizing a normal form changes nothing
        renormalized = pbw.mul(pbw.one(), x, g)
        assert renormalized == x
        # homomorphism on concatenation
        assert pbw.mul(x, y, g) == pbw.normal_form(w1 + w2, g)


def test_adjoint_weight():
    g = make_zform(2, 1, 1)
    assert pbw.adjoint_weight(pbw.monomial(1, 2, 3), g) == 4
    assert pbw.adjoint_weight(pbw.monomial(0, 5, 0), g) == 0
    with pytest.raises(ValueError):
        pbw.adjoint_weight(pbw.add(pbw.monomial(1, 0, 0), pbw.monomial(0, 0, 1)), g)


def test_normal_form_preserves_weight():
    rng = random.Random(31)
    g = make_zform(3, 2, 1)
    wt = {"E": 3, "F": -3, "H": 0}
    for _ in range(40):
        word = [rng.choice("EFH") for _ in range(rng.randint(1, 6))]
        total = sum(wt[x] for x in word)
        nf = pbw.normal_form(word, g)
        if nf:
            assert pbw.adjoint_weight(nf, g) == total


def test_scalars_in_words():
    g = make_zform(1, 1, 1)
    elem = pbw.normal_form([("E", Fraction(1, 2)), ("F", 4)], g)
    assert elem == {(1, 0, 1): 2, (0, 1, 0): 2}


def test_commutator_defining_relations():
    for n, m in [(1, 1), (2, 3)]:
        g = make_zform(n, m, 1)
        E, F, H = pbw.monomial(0, 0, 1), pbw.monomial(1, 0, 0), pbw.monomial(0, 1, 0)
        assert pbw.commutator(H, E, g) == pbw.scale(E, n)
        assert pbw.commutator(H, F, g) == pbw.scale(F, -n)
        assert pbw.commutator(E, F, g) == pbw.scale(H, m)


def test_json_round_trip():
    g = make_zform(2, 3, 1)
    elem = pbw.normal_form(["E", "H", "F", "E"], g)
    assert pbw.from_json(pbw.to_json(elem)) == elem
