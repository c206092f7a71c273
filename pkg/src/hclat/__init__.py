"""Exact integral models of weight modules over split Z-forms of sl2.

Subpackages cover: scalar arithmetic (scalars), normal ordering in the
enveloping algebra (pbw), the classification of split Z-forms (zforms),
graded projector algebras (hecke), the standard weight-module families
(weightmods), dyadic denominator exponents of invariant lattices (dyadic),
the polynomial contraction of those families (contraction), lattices in
finite-dimensional modules (borelweil), a cross-check driver (verify),
and the hclat command line (cli).
"""

__version__ = "0.1.0"
