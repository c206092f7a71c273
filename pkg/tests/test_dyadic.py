"""Denominator-exponent formulas against the brute-force recurrence oracle."""

import random
from fractions import Fraction

import pytest

from hclat.dyadic import (
    LatticeReport,
    NoExtensionError,
    bottom_index,
    dyadic_defect_sum,
    exponent_M,
    exponent_M_raw,
    exponent_N,
    integral_model,
    nonvanishing,
    oracle_check_report,
    oracle_min_exponent,
    top_index,
)
from hclat.scalars import in_ring, localized_integers


def residues(n):
    return [Fraction(k, n) for k in range(n)]


def criterion_grid(variant, nmax=3, mu_range=12):
    """All (n, m, eps, mu) with the nonvanishing criterion satisfied."""
    out = []
    for n in range(1, nmax + 1):
        for m in range(1, nmax + 1):
            for eps in residues(n):
                for mu in range(-mu_range, mu_range + 1):
                    if nonvanishing(variant, n, m, eps, mu):
                        out.append((n, m, eps, mu))
    return out


# -- frozen golden values ----------------------------------------------------


def test_golden_table_q_variant():
    # n = m = 1, eps = 0, mu = -2; top index is 1
    expected = {1: 0, 0: 1, -1: 1, -2: 2, -3: 1}
    for p, value in expected.items():
        assert exponent_M(p, 1, 1, 0, -2) == value


def test_golden_qp_value():
    assert exponent_N(2, 1, 1, 0, 2) == 1


def test_defect_sum_goldens():
    assert dyadic_defect_sum(7) == 3
    for a in range(13):
        assert dyadic_defect_sum(2**a - 1) == a


def test_defect_sum_is_binary_digit_sum():
    for s in range(0, 600):
        assert dyadic_defect_sum(s) == bin(s).count("1")


def test_nonvanishing_examples():
    assert nonvanishing("q", 1, 1, 0, -2)
    assert not nonvanishing("q", 2, 1, Fraction(1, 2), 0)
    assert nonvanishing("q", 2, 1, Fraction(1, 2), 2)
    assert nonvanishing("qpp", 1, 2, 0, 4)
    assert not nonvanishing("qpp", 1, 2, 0, 3)


# -- formula against the oracle ---------------------------------------------


def test_exponent_M_matches_oracle_on_grid():
    for n, m, eps, mu in criterion_grid("q"):
        top = top_index(n, m, eps, mu)
        for p in range(top - 8, top + 1):
            assert exponent_M(p, n, m, eps, mu) == oracle_min_exponent(
                "q", p, n, m, eps, mu
            ), (n, m, eps, mu, p)


def test_exponent_N_matches_oracle_on_grid():
    for n, m, eps, mu in criterion_grid("qp"):
        bottom = bottom_index(n, m, eps, mu)
        for p in range(bottom, bottom + 9):
            assert exponent_N(p, n, m, eps, mu) == oracle_min_exponent(
                "qp", p, n, m, eps, mu
            ), (n, m, eps, mu, p)


def test_qpp_oracle_is_zero_for_even_mu():
    for n in (1, 2):
        m = 2 * n
        for eps in residues(n):
            for mu in range(-8, 9, 2):
                for p in range(-3, 4):
                    assert oracle_min_exponent("qpp", p, n, m, eps, mu, depth=200) == 0


def test_oracle_rejects_violating_parameters():
    # criterion fails: no exponent works, however large
    bad = [
        ("q", 2, 1, Fraction(1, 2), 0),
        ("q", 1, 1, 0, 1),
        ("qp", 3, 1, Fraction(1, 3), 1),
        ("qpp", 1, 2, 0, 3),
        ("qpp", 2, 4, Fraction(1, 2), -5),
    ]
    for variant, n, m, eps, mu in bad:
        assert not nonvanishing(variant, n, m, eps, mu)
        with pytest.raises(NoExtensionError):
            oracle_min_exponent(variant, 0, n, m, eps, mu, depth=512)


def test_random_spot_checks_match_oracle():
    rng = random.Random(20260815)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        eps = Fraction(rng.randrange(n), n)
        # manufacture mu satisfying the q criterion: mu = 2nm(j - eps)
        j = rng.randint(-3, 3)
        mu = 2 * n * m * j - int(2 * n * m * eps)
        top = top_index(n, m, eps, Fraction(mu))
        p = top - rng.randint(0, 12)
        assert exponent_M(p, n, m, eps, mu) == oracle_min_exponent("q", p, n, m, eps, mu)


# -- structural invariants ---------------------------------------------------


def test_exponent_zero_at_top_and_bottom():
    for n, m, eps, mu in criterion_grid("q", nmax=3, mu_range=10):
        assert exponent_M(top_index(n, m, eps, mu), n, m, eps, mu) == 0
    for n, m, eps, mu in criterion_grid("qp", nmax=3, mu_range=10):
        assert exponent_N(bottom_index(n, m, eps, mu), n, m, eps, mu) == 0


def test_powers_of_two_are_units_after_localizing():
    for n, m, eps, mu in criterion_grid("q", nmax=2, mu_range=8):
        ring = localized_integers(2 * n * m)
        top = top_index(n, m, eps, mu)
        for p in range(top - 6, top + 1):
            e = exponent_M(p, n, m, eps, mu)
            assert e >= 0
            assert in_ring(Fraction(1, 2**e), ring)


def test_mirror_identity_corrected():
    # N_p(eps, mu) equals the M-formula at (-p, -eps, mu), termwise
    for n, m, eps, mu in criterion_grid("qp"):
        bottom = bottom_index(n, m, eps, mu)
        for p in range(bottom, bottom + 7):
            assert exponent_N(p, n, m, eps, mu) == exponent_M_raw(-p, n, m, -eps, mu)


def test_mirror_with_negated_mu_is_false():
    # negating mu instead of eps gives a different exponent already at
    # n = m = 1, eps = 0, mu = 2, p = 2
    assert exponent_N(2, 1, 1, 0, 2) == 1
    assert exponent_M(-2, 1, 1, 0, -2) == 2


# -- domain errors ------------------------------------------------------------


def test_index_above_top_weight_raises():
    with pytest.raises(ValueError, match="above top weight"):
        exponent_M(2, 1, 1, 0, -2)


def test_index_below_bottom_weight_raises():
    with pytest.raises(ValueError, match="below bottom weight"):
        exponent_N(0, 1, 1, 0, 2)


def test_vanishing_parameters_raise():
    with pytest.raises(ValueError, match="vanishes"):
        exponent_M(0, 2, 1, Fraction(1, 2), 0)
    with pytest.raises(ValueError, match="vanishes"):
        exponent_N(0, 1, 1, 0, 1)


def test_parameter_validation():
    with pytest.raises(ValueError, match="variant"):
        nonvanishing("borel", 1, 1, 0, 0)
    with pytest.raises(ValueError, match="residue"):
        nonvanishing("q", 2, 1, Fraction(1, 3), 0)
    with pytest.raises(ValueError, match="integer"):
        nonvanishing("q", 1, 1, 0, Fraction(1, 2))
    with pytest.raises(ValueError):
        dyadic_defect_sum(-1)


# -- assembled reports --------------------------------------------------------


def test_integral_model_report_q():
    report = integral_model("q", 1, 1, 0, -2, (-3, 5))
    assert report.nonzero
    assert report.support.kind == "le" and report.support.bound == 1
    assert report.exponents == {1: 0, 0: 1, -1: 1, -2: 2, -3: 1}
    data = report.to_json(oracle_agrees=True)
    assert data["exponents"] == [[1, 0], [0, 1], [-1, 1], [-2, 2], [-3, 1]]
    assert data["oracle_agrees"] is True


def test_integral_model_report_vanishing():
    report = integral_model("q", 2, 1, Fraction(1, 2), 0, (-4, 4))
    assert not report.nonzero
    assert report.support is None
    assert report.exponents == {}
    assert report.to_json()["support"] is None


def test_integral_model_qpp_parity():
    even = integral_model("qpp", 1, 2, 0, 4, (-5, 5))
    assert even.nonzero and even.support.kind == "all"
    assert set(even.exponents.values()) == {0}
    assert sorted(even.exponents) == list(range(-5, 6))
    odd = integral_model("qpp", 1, 2, 0, 3, (-5, 5))
    assert not odd.nonzero and odd.exponents == {}


def test_oracle_check_report_agrees():
    for args in [("q", 1, 1, 0, -2), ("qp", 1, 1, 0, 2), ("qpp", 1, 2, 0, 4)]:
        variant, n, m, eps, mu = args
        window = (-4, 4) if variant != "q" else (top_index(n, m, Fraction(eps), Fraction(mu)) - 5, 4)
        report = integral_model(variant, n, m, eps, mu, window)
        assert oracle_check_report(report)


def test_oracle_check_report_detects_tampering():
    report = integral_model("q", 1, 1, 0, -2, (-3, 1))
    report.exponents[-2] = 7
    assert not oracle_check_report(report)


def test_oracle_check_report_vanishing_params():
    report = integral_model("qp", 2, 1, Fraction(1, 2), 1, (-3, 3))
    assert not report.nonzero
    assert oracle_check_report(report, depth=256)
