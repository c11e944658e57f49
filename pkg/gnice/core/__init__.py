"""Algebra engine for gnice: rings, polynomials, Groebner bases and nice pairs."""
