"""Entropies of integers and of prime-splitting ideals.

Modules:
  arith    - exact factorization and the arithmetic functions on it
  entropy  - the exponent entropy H, divisor entropy Hbar, limits, threshold
  numfield - prime splitting in three monogenic field families, ideal entropy
  laws     - checkers and scanners for the product/trichotomy inequalities
  cli      - command-line interface (entropia entry point)
"""

from . import arith, entropy, laws, numfield
from .arith import Factorization, factorize
from .entropy import entropy_H, entropy_Hbar
from .numfield import SplittingPattern, ideal_entropy, split_prime

__version__ = "0.1.0"

__all__ = [
    "arith",
    "entropy",
    "laws",
    "numfield",
    "Factorization",
    "factorize",
    "entropy_H",
    "entropy_Hbar",
    "SplittingPattern",
    "ideal_entropy",
    "split_prime",
]
