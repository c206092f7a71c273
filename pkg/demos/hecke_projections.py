"""The commutative layer: weight projections, products, and the smash algebra."""

import random
from fractions import Fraction

from hclat import hecke, pbw, zforms

# p(lam) picks out the weight-lam component of a finitely supported vector
v = {0: Fraction(2), 1: Fraction(1), 4: Fraction(3)}
print("v:", v)
for lam in (0, 1, 2):
    print(f"  project to weight {lam}:", hecke.project(v, lam))
print()

# the projections are orthogonal idempotents under the componentwise product
x = hecke.hecke_mul(hecke.p(1), hecke.p(1))
y = hecke.hecke_mul(hecke.p(1), hecke.p(2))
print("p(1) * p(1) == p(1):", x == hecke.p(1))
print("p(1) * p(2) == 0:   ", y.support == {})
print()

# over an n-fold cyclic character lattice the weights fold mod n
lattice = hecke.cyclic(3)
w = {0: Fraction(1), 3: Fraction(1), -1: Fraction(1)}
print("cyclic(3) folds", w, "to", hecke.HeckeElement(lattice, w).support)
print()

# tensor products split along weight pairs, and the pieces sum back to v
rng = random.Random(7)
v = {rng.randint(-6, 6): Fraction(rng.randint(1, 4)) for _ in range(4)}
total = {}
for lam in lattice.elements():
    for key, c in hecke.project(v, lam, lattice).items():
        total[key] = total.get(key, 0) + c
print("sum of residue projections recovers v:", total == v)
print()

# the smash product interleaves projections with enveloping-algebra words:
# multiplication stays associative after every renormalization step
g = zforms.make_zform(2, 1, 1)
a = hecke.smash(pbw.monomial(0, 0, 1), g.n, g)      # E (x) p_n
b = hecke.smash(pbw.monomial(1, 0, 0), 0, g)        # F (x) p_0
c = hecke.smash(pbw.monomial(0, 1, 0), g.n, g)      # H (x) p_n
left = hecke.smash_mul(hecke.smash_mul(a, b), c)
right = hecke.smash_mul(a, hecke.smash_mul(b, c))
print("smash product associativity on a sample triple:", left == right)

# shifts must match the adjoint weight of the word or the product dies:
# F lowers by n, so E (x) p_{-n} composes with F (x) p_0, E (x) p_n does not
matched = hecke.smash_mul(hecke.smash(pbw.monomial(0, 0, 1), -g.n, g), b)
print("(E (x) p_-n)(F (x) p_0) =", matched.terms)
print("(E (x) p_n)(F (x) p_0)  =", hecke.smash_mul(a, b).terms)
