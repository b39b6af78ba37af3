"""Modular verification toolkit for congruences of Catalan-like binomial sums.

Exact prime-field arithmetic with p-adic valuation tracking, the w_n(x)
recurrence, Eisenstein-integer cubic residue classification, the binomial
sequence family, and a registry that checks every congruence statement over
sweeps of primes and parameters.
"""

__version__ = "0.1.0"
