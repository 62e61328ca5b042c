"""Prime splitting in three monogenic number-field families.

Supported families and their splitting rules:

* Quadratic(d), d squarefree: Kronecker/Legendre symbol of the discriminant.
* CyclotomicPrime(l), l an odd prime: residue degree = multiplicative order
  of p mod l; p = l is totally ramified.
* PureCubic(m), m cubefree with m^2 not 1 mod 9 (so Z[m^(1/3)] is the full
  ring of integers): Dedekind's criterion on x^3 - m over F_p, resolved by
  the cubic-residue character of m.

A SplittingPattern is just the multiset of (ramification index, residue
degree) pairs; prime ideals are represented by position only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _cartesian

from . import arith
from .errors import DomainError, RangeError, UnsupportedCaseError


@dataclass(frozen=True)
class Quadratic:
    """Q(sqrt(d)) for squarefree d, d not in {0, 1}."""

    d: int

    def __post_init__(self) -> None:
        if self.d in (0, 1):
            raise DomainError("d must not be 0 or 1")
        if any(a > 1 for a in arith.factorize(abs(self.d)).exponents):
            raise DomainError(f"d = {self.d} is not squarefree")

    @property
    def degree(self) -> int:
        return 2


@dataclass(frozen=True)
class CyclotomicPrime:
    """Q(zeta_l) for an odd prime l; degree l - 1."""

    l: int

    def __post_init__(self) -> None:
        if self.l < 3 or not arith.is_prime(self.l):
            raise DomainError(f"l = {self.l} must be an odd prime")

    @property
    def degree(self) -> int:
        return self.l - 1


@dataclass(frozen=True)
class PureCubic:
    """Q(m^(1/3)) for cubefree m >= 2 with m^2 != 1 mod 9 (monogenic case)."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError(f"m = {self.m} must be >= 2")
        if any(a > 2 for a in arith.factorize(self.m).exponents):
            raise DomainError(f"m = {self.m} is not cubefree")
        if self.m * self.m % 9 == 1:
            raise DomainError(
                f"m = {self.m} has m^2 = 1 mod 9; that case is not monogenic"
            )

    @property
    def degree(self) -> int:
        return 3


FieldSpec = Quadratic | CyclotomicPrime | PureCubic


def parse_field_spec(text: str) -> FieldSpec:
    """Parse the CLI grammar: quad:<d>, cyclo:<l>, cubic:<m> (case-sensitive)."""
    prefix, sep, rest = text.partition(":")
    if not sep:
        raise DomainError(f"field spec {text!r} lacks a ':'")
    try:
        value = int(rest)
    except ValueError as exc:
        raise DomainError(f"field parameter {rest!r} is not an integer") from exc
    if prefix == "quad":
        return Quadratic(value)
    if prefix == "cyclo":
        return CyclotomicPrime(value)
    if prefix == "cubic":
        return PureCubic(value)
    raise DomainError(f"unknown field family {prefix!r}")


def field_label(field: FieldSpec) -> str:
    if isinstance(field, Quadratic):
        return f"quad:{field.d}"
    if isinstance(field, CyclotomicPrime):
        return f"cyclo:{field.l}"
    if isinstance(field, PureCubic):
        return f"cubic:{field.m}"
    raise UnsupportedCaseError(f"unknown field spec {field!r}")


def is_galois(field: FieldSpec) -> bool:
    """Quadratic and prime-cyclotomic extensions are Galois over Q."""
    return isinstance(field, (Quadratic, CyclotomicPrime))


@dataclass(frozen=True)
class SplittingPattern:
    """The multiset {(e_i, f_i)} of p O_K, descending by (e, f).

    field/p may be None for synthetic patterns built directly by a caller
    (the checkers for ideal e-divisors use these); the degree constraint
    sum e_i f_i = [K:Q] is enforced only when a field is attached.
    """

    factors: tuple[tuple[int, int], ...]
    p: int | None = None
    field: FieldSpec | None = None

    def __post_init__(self) -> None:
        if not self.factors:
            raise DomainError("a splitting pattern needs at least one factor")
        for e, f in self.factors:
            if e < 1 or f < 1:
                raise DomainError(f"(e, f) = ({e}, {f}) must both be >= 1")
        canon = tuple(sorted(self.factors, reverse=True))
        if canon != self.factors:
            object.__setattr__(self, "factors", canon)
        if self.field is not None:
            total = sum(e * f for e, f in self.factors)
            if total != self.field.degree:
                raise DomainError(
                    f"sum e_i f_i = {total} != degree {self.field.degree}"
                )

    @property
    def g(self) -> int:
        return len(self.factors)

    @property
    def ramification_indices(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.factors)

    @property
    def residue_degrees(self) -> tuple[int, ...]:
        return tuple(f for _, f in self.factors)


def _legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _split_quadratic(d: int, p: int) -> tuple[tuple[int, int], ...]:
    if p == 2:
        r = d % 8
        if r == 1:
            return ((1, 1), (1, 1))
        if r == 5:
            return ((1, 2),)
        return ((2, 1),)
    disc = d if d % 4 == 1 else 4 * d
    symbol = _legendre(disc, p)
    if symbol == 1:
        return ((1, 1), (1, 1))
    if symbol == -1:
        return ((1, 2),)
    return ((2, 1),)


def _multiplicative_order(p: int, modulus: int) -> int:
    group_order = modulus - 1
    for d in arith.small_divisors(group_order):
        if pow(p, d, modulus) == 1:
            return d
    raise UnsupportedCaseError(f"no order of {p} mod {modulus}; {modulus} not prime?")


def _split_cyclotomic(l: int, p: int) -> tuple[tuple[int, int], ...]:
    degree = l - 1
    if p == l:
        return ((degree, 1),)
    f = _multiplicative_order(p, l)
    return ((1, f),) * (degree // f)


def _split_pure_cubic(m: int, p: int) -> tuple[tuple[int, int], ...]:
    if m % p == 0 or p == 3:
        # x^3 - m is a cube mod p in both subcases: totally ramified.
        return ((3, 1),)
    if p % 3 == 2:
        # Cubing is a bijection on F_p*, so exactly one root.
        return ((1, 2), (1, 1))
    if pow(m, (p - 1) // 3, p) == 1:
        return ((1, 1), (1, 1), (1, 1))
    return ((1, 3),)


def split_prime(field: FieldSpec, p: int) -> SplittingPattern:
    """Splitting pattern of p O_K for the given field family."""
    if not arith.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if isinstance(field, Quadratic):
        factors = _split_quadratic(field.d, p)
    elif isinstance(field, CyclotomicPrime):
        factors = _split_cyclotomic(field.l, p)
    elif isinstance(field, PureCubic):
        factors = _split_pure_cubic(field.m, p)
    else:
        raise UnsupportedCaseError(f"unknown field spec {field!r}")
    return SplittingPattern(factors, p=p, field=field)


def ideal_entropy(sp: SplittingPattern) -> float:
    """log Omega(I) - (1/Omega) * sum e_i log e_i with Omega(I) = sum e_i.

    Exactly 0.0 for g = 1 (inert and totally ramified ideals).
    """
    if sp.g == 1:
        return 0.0
    total = sum(sp.ramification_indices)
    acc = 0.0
    for e in sp.ramification_indices:
        if e > 1:
            acc += (e / total) * math.log(e)
    return math.log(total) - acc


def ideal_tau(sp: SplittingPattern) -> int:
    """Number of ideal divisors: product of (e_i + 1)."""
    out = 1
    for e in sp.ramification_indices:
        out *= e + 1
    return out


def ideal_tau_e(sp: SplittingPattern) -> int:
    """Number of ideal e-divisors: product of tau(e_i)."""
    out = 1
    for e in sp.ramification_indices:
        out *= len(arith.small_divisors(e))
    return out


def ideal_exponential_divisors(sp: SplittingPattern) -> list[tuple[int, ...]]:
    """All exponent vectors (beta_1, ..., beta_g) with beta_i | e_i."""
    count = ideal_tau_e(sp)
    cap = arith.enumeration_cap()
    if count > cap:
        raise RangeError(f"pattern has {count} e-divisors, above the cap {cap}")
    choices = [arith.small_divisors(e) for e in sp.ramification_indices]
    return list(_cartesian(*choices))


def pattern_for_vector(sp: SplittingPattern, betas: tuple[int, ...]) -> SplittingPattern:
    """Derived pattern with the same residue degrees and exponents betas."""
    if len(betas) != sp.g:
        raise DomainError(f"expected {sp.g} exponents, got {len(betas)}")
    factors = tuple((b, f) for b, (_, f) in zip(betas, sp.factors))
    return SplittingPattern(factors)
