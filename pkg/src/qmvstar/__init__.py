"""Verification toolkit for quasi-MV* / quasi-Wajsberg* algebras and qL*.

Subpackages cover finite table algebras and exhaustive law checking
(`algebras`, `catalogs`), the term-equivalence functors and congruence
structure theory (`transforms`), the exact-rational standard models over
[-1,1] and [-1,1]^2 (`models`), the Hilbert-style proof kernel and its
derivation generators (`formulas`, `schemas`, `proofs`, `combinators`), and
the valuation semantics with its soundness fuzzers (`semantics`).
"""

__version__ = "0.1.0"
