"""Dyadic denominators of the integral principal series, formula vs oracle."""

from fractions import Fraction

from hclat import dyadic

# the standing example: n = m = 1, eps = 0, mu = -2.  phi(1) = 2^e extends
# integrally exactly when e clears every partial product along the chain
report = dyadic.integral_model("q", 1, 1, Fraction(0), Fraction(-2), (-2, 1))
print("q-variant, n = m = 1, eps = 0, mu = -2")
print("module nonzero:", report.nonzero, " support:", report.support)
print("minimal exponents by index:")
for p in sorted(report.exponents, reverse=True):
    print(f"  p = {p:>2}: denominator 2^{report.exponents[p]}")
print()

# the closed-form prefix sum agrees with a literal walk of the recurrence
print("formula against the brute-force oracle, mu in -6..6:")
for mu in range(-6, 7):
    if not dyadic.nonvanishing("q", 1, 1, Fraction(0), Fraction(mu)):
        print(f"  mu = {mu:>2}: module over Z vanishes")
        continue
    top = dyadic.top_index(1, 1, Fraction(0), Fraction(mu))
    pairs = []
    for p in range(top - 3, top + 1):
        e = dyadic.exponent_M(p, 1, 1, Fraction(0), Fraction(mu))
        assert e == dyadic.oracle_min_exponent("q", p, 1, 1, Fraction(0), Fraction(mu))
        pairs.append((p, e))
    print(f"  mu = {mu:>2}: top = {top:>2}, (p, e) = {pairs}")
print()

# the N-exponents mirror the M-exponents once eps flips along with p;
# flipping mu instead (as sometimes quoted) is wrong already at p = 2
p, eps, mu = 2, Fraction(0), Fraction(2)
n_val = dyadic.exponent_N(p, 1, 1, eps, mu)
mirrored = dyadic.exponent_M_raw(-p, 1, 1, -eps, mu)
quoted = dyadic.exponent_M(-p, 1, 1, eps, -mu)
print(f"N_2(0, 2) = {n_val}, M_-2(-0, 2) = {mirrored}  (the identity that holds)")
print(f"M_-2(0, -2) = {quoted}  (the mu-flipped variant, off by one here)")
print()

# the exponent growth rate is the binary digit sum in disguise
s = 0b110101
print(f"defect sum at s = {s} =", dyadic.dyadic_defect_sum(s), "= number of binary ones:", bin(s).count("1"))
