"""Exact rational values.

Every pair-dependency and centrality value in this package is a reduced
arbitrary-precision fraction.  ``fractions.Fraction`` already maintains the
invariants we rely on (lowest terms, positive denominator, canonical zero
``0/1``), so it is used directly rather than wrapped.
"""

from fractions import Fraction

ExactRational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
