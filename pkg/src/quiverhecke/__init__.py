"""Exact computer algebra for small-rank Hecke-type algebras.

Subpackages cover the symmetric group (coxeter), polynomial rings with
Demazure operators (polyring), the nil affine Hecke algebra (nilhecke),
quiver Hecke algebras (klr), cyclotomic quotients (cyclotomic), affine
and degenerate Hecke actions on truncated polynomial modules
(heckebridge), Hall algebras of quiver representations over finite
fields (hall), and the combinatorial Fock space (fock).
"""

__version__ = "0.1.0"
