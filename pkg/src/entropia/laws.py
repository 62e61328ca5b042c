"""Checkers and scanners for the product-entropy laws.

Each check_* function verifies one claimed inequality on concrete inputs and
raises VerificationError when the claim fails numerically; the sweep_* and
random_* functions run the same checks over ranges or seeded random draws
and return tallies instead of raising.  A failed claim is a finding, not a
bug: the scanners exist precisely to surface counterexamples.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product as _cartesian

import numpy as np

from . import arith, entropy, numfield
from .arith import Factorization
from .errors import DomainError, RangeError, VerificationError

EQUAL_TOL = 1e-12

MAX_VIOLATIONS_KEPT = 20

DEFAULT_SCAN_LIMIT = 10**4


class Relation(str, Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


def _relation(gap: float) -> Relation:
    if abs(gap) <= EQUAL_TOL:
        return Relation.EQUAL
    return Relation.GREATER if gap > 0 else Relation.LESS


@dataclass(frozen=True)
class GapReport:
    """H(mn) - H(m) - H(n) with its classification and the three entropies."""

    m: int
    n: int
    h_m: float
    h_n: float
    h_mn: float
    gap: float
    relation: Relation


def _entropy_of_exponents(exps: list[int]) -> float:
    omega_big = sum(exps)
    if omega_big <= 1:
        return 0.0
    acc = 0.0
    for a in exps:
        if a > 1:
            acc += (a / omega_big) * math.log(a)
    return math.log(omega_big) - acc


def _gap_direct(m: int, n: int) -> GapReport:
    h_m = entropy.entropy_H(arith.factorize(m))
    h_n = entropy.entropy_H(arith.factorize(n))
    h_mn = entropy.entropy_H(arith.factorize(m * n))
    gap = h_mn - h_m - h_n
    return GapReport(m, n, h_m, h_n, h_mn, gap, _relation(gap))


def gap_formula(fm: Factorization, fn: Factorization) -> float:
    """The gap H(mn) - H(m) - H(n) for coprime m, n in closed form.

    Derived directly from the definition of H:

        gap = [Omega(n)/Omega(m) * sum a_i log a_i
               + Omega(m)/Omega(n) * sum b_j log b_j] / (Omega(m) + Omega(n))
              - log(Omega(m) Omega(n) / (Omega(m) + Omega(n)))
    """
    om = arith.big_omega(fm)
    on = arith.big_omega(fn)
    sa = sum(a * math.log(a) for a in fm.exponents if a > 1)
    sb = sum(b * math.log(b) for b in fn.exponents if b > 1)
    total = om + on
    return (on * sa / om + om * sb / on) / total - math.log(om * on / total)


def product_entropy_gap(m: int, n: int) -> GapReport:
    """Gap report for coprime m, n >= 2, cross-checked against gap_formula.

    The direct and closed-form routes must agree to 1e-12 relative; a
    mismatch indicates a real defect and raises VerificationError.
    """
    if m < 2 or n < 2:
        raise DomainError("m and n must both be >= 2")
    if math.gcd(m, n) != 1:
        raise DomainError(f"gcd({m}, {n}) != 1")
    rep = _gap_direct(m, n)
    formula = gap_formula(arith.factorize(m), arith.factorize(n))
    if abs(rep.gap - formula) > EQUAL_TOL * max(1.0, abs(rep.gap)):
        raise VerificationError(
            f"gap routes disagree for ({m}, {n}): direct {rep.gap}, formula {formula}"
        )
    return rep


def _require_distinct_primes(*ps: int) -> None:
    if len(set(ps)) != len(ps):
        raise DomainError(f"primes must be distinct, got {ps}")
    for p in ps:
        if not arith.is_prime(p):
            raise DomainError(f"{p} is not prime")


def check_family_pkq(p: int, q: int, t: int, k: int) -> GapReport:
    """m = p^k q, n = p^k t (not coprime): H(mn) < H(m) + H(n) must hold."""
    _require_distinct_primes(p, q, t)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    rep = _gap_direct(p**k * q, p**k * t)
    if rep.relation is not Relation.LESS:
        raise VerificationError(f"expected LESS for p^k q family, got {rep}")
    return rep


def check_family_two_prime_powers(
    p1: int, p2: int, q1: int, q2: int, k: int
) -> GapReport:
    """m = p1^k p2, n = q1^k q2: equality at k = 1, strict GREATER for k >= 2."""
    _require_distinct_primes(p1, p2, q1, q2)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    rep = _gap_direct(p1**k * p2, q1**k * q2)
    expected = Relation.EQUAL if k == 1 else Relation.GREATER
    if rep.relation is not expected:
        raise VerificationError(f"expected {expected.value} at k={k}, got {rep}")
    return rep


def check_family_exponents_ge3(m: int, n: int) -> GapReport:
    """Coprime m, n with every exponent >= 3: H(mn) > H(m) + H(n) must hold."""
    if math.gcd(m, n) != 1:
        raise DomainError(f"gcd({m}, {n}) != 1")
    fm, fn = arith.factorize(m), arith.factorize(n)
    if not fm.entries or not fn.entries:
        raise DomainError("m and n must both be >= 2")
    if any(a < 3 for a in fm.exponents + fn.exponents):
        raise DomainError("every exponent of m and n must be >= 3")
    rep = _gap_direct(m, n)
    if rep.relation is not Relation.GREATER:
        raise VerificationError(f"expected GREATER for exponents>=3 family, got {rep}")
    return rep


@dataclass(frozen=True)
class Prop41Report:
    """Which trichotomy cases (n, p, alpha, beta) satisfies, and any failures.

    Cases (threshold T = Omega(n) e^{-H(n)}, boundaries overlap within tol):
      i:   beta >= T            -> claims H(n p^alpha) <= H(n p^beta)
      ii:  alpha <= T           -> claims H(n p^alpha) >= H(n p^beta)
      iii: beta <= T <= alpha   -> claims H(n p^alpha) <= H(n p^beta)
    """

    n: int
    p: int
    alpha: int
    beta: int
    threshold: float
    h_alpha: float
    h_beta: float
    cases: tuple[str, ...]
    contradictions: tuple[str, ...]


def classify_prop41(
    n: int, p: int, alpha: int, beta: int, *, strict: bool = True
) -> Prop41Report:
    """Classify the appended-prime-power trichotomy and verify its orderings.

    All satisfied cases are reported (they overlap at the threshold).  With
    strict=True a contradicted case raises VerificationError; scanners pass
    strict=False and tally the contradictions instead.
    """
    if n < 2:
        raise DomainError("n must be >= 2")
    if not arith.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n % p == 0:
        raise DomainError(f"p = {p} must be coprime to n = {n}")
    if not 1 <= beta <= alpha:
        raise DomainError(f"need alpha >= beta >= 1, got alpha={alpha}, beta={beta}")
    f = arith.factorize(n)
    thr = entropy.threshold(f)
    h_a = entropy.entropy_H_appended(f, p, alpha)
    h_b = entropy.entropy_H_appended(f, p, beta)
    cases: list[str] = []
    if beta >= thr - EQUAL_TOL:
        cases.append("i")
    if alpha <= thr + EQUAL_TOL:
        cases.append("ii")
    if beta <= thr + EQUAL_TOL and alpha >= thr - EQUAL_TOL:
        cases.append("iii")
    contradictions = []
    for case in cases:
        if case in ("i", "iii") and h_a > h_b + EQUAL_TOL:
            contradictions.append(case)
        elif case == "ii" and h_a < h_b - EQUAL_TOL:
            contradictions.append(case)
    report = Prop41Report(
        n, p, alpha, beta, thr, h_a, h_b, tuple(cases), tuple(contradictions)
    )
    if strict and contradictions:
        raise VerificationError(f"trichotomy contradicted: {report}")
    return report


@dataclass(frozen=True)
class CorollaryReport:
    """Outcome of an H(d_e) <= H(n) sweep over all e-divisors of one input."""

    subject: int | tuple[int, ...]
    h_subject: float
    checked: int
    violations: tuple[tuple[int | tuple[int, ...], float], ...]


def check_corollary_int(n: int, *, strict: bool = True) -> CorollaryReport:
    """Assert H(d_e) <= H(n) for every e-divisor of n.

    Requires omega(n) >= 3 and every exponent in {1, 2}.  The claim fails
    for any such n with mixed exponents (the radical of n is an e-divisor
    with entropy log omega(n) > H(n)); strict=True raises on the first
    counterexample found.
    """
    f = arith.factorize(n)
    return _corollary_int_on(f, strict=strict)


def _corollary_int_on(f: Factorization, *, strict: bool) -> CorollaryReport:
    if arith.small_omega(f) < 3:
        raise DomainError(f"omega({f.value}) < 3")
    if any(a not in (1, 2) for a in f.exponents):
        raise DomainError(f"{f.value} has an exponent outside {{1, 2}}")
    h_n = entropy.entropy_H(f)
    violations = []
    checked = 0
    for d in arith.exponential_divisors(f):
        checked += 1
        h_d = entropy.entropy_H(d)
        if h_d > h_n + EQUAL_TOL:
            violations.append((d.value, h_d))
    report = CorollaryReport(f.value, h_n, checked, tuple(violations))
    if strict and violations:
        raise VerificationError(f"H(d_e) <= H(n) fails: {report}")
    return report


def check_corollary_ideal(
    sp: numfield.SplittingPattern, *, strict: bool = True
) -> CorollaryReport:
    """Ideal version: H of every e-divisor pattern <= H(I), for g >= 3 and
    all ramification indices in {1, 2}."""
    if sp.g < 3:
        raise DomainError(f"pattern has g = {sp.g} < 3")
    if any(e not in (1, 2) for e in sp.ramification_indices):
        raise DomainError("every ramification index must be in {1, 2}")
    h_i = numfield.ideal_entropy(sp)
    violations = []
    checked = 0
    for betas in numfield.ideal_exponential_divisors(sp):
        checked += 1
        h_d = numfield.ideal_entropy(numfield.pattern_for_vector(sp, betas))
        if h_d > h_i + EQUAL_TOL:
            violations.append((betas, h_d))
    report = CorollaryReport(sp.ramification_indices, h_i, checked, tuple(violations))
    if strict and violations:
        raise VerificationError(f"H(d_e) <= H(I) fails: {report}")
    return report


@dataclass
class ScanSummary:
    """Deterministic tallies of a coprime-pair gap scan."""

    max_m: int
    max_n: int
    pairs: int = 0
    counts: dict[str, int] = field(
        default_factory=lambda: {"LESS": 0, "EQUAL": 0, "GREATER": 0}
    )
    witness_greater: tuple[int, int, float] | None = None
    witness_less: tuple[int, int, float] | None = None
    violations: list[str] = field(default_factory=list)


def _shape_k(exps: tuple[int, ...]) -> int | None:
    """k if the exponent multiset is {k, 1} over exactly two primes, else None."""
    if len(exps) != 2:
        return None
    hi, lo = max(exps), min(exps)
    return hi if lo == 1 else None


def scan_product_inequality(
    max_m: int, max_n: int, *, limit: int = DEFAULT_SCAN_LIMIT
) -> ScanSummary:
    """Classify the gap over all coprime pairs 2 <= m <= max_m, 2 <= n <= max_n.

    Also checks every pair matching one of the parametric family shapes
    against that family's claimed relation; mismatches land in violations.
    The p^k q / p^k t family shares the prime p, so its pairs are never
    coprime and never appear here.
    """
    if max_m > limit or max_n > limit:
        raise RangeError(f"scan bounds above the limit {limit}")
    summary = ScanSummary(max_m, max_n)
    top = max(max_m, max_n)
    if top < 2:
        return summary
    facts: dict[int, list[tuple[int, int]]] = {}
    for v, entries in arith.factored_range(top):
        facts[v] = entries
    h_cache = {v: _entropy_of_exponents([a for _, a in e]) for v, e in facts.items()}
    for m in range(2, max_m + 1):
        em = facts[m]
        for n in range(2, max_n + 1):
            if math.gcd(m, n) != 1:
                continue
            en = facts[n]
            summary.pairs += 1
            exps = [a for _, a in em] + [a for _, a in en]
            gap = _entropy_of_exponents(exps) - h_cache[m] - h_cache[n]
            rel = _relation(gap)
            summary.counts[rel.value] += 1
            if rel is Relation.GREATER and (
                summary.witness_greater is None or gap > summary.witness_greater[2]
            ):
                summary.witness_greater = (m, n, gap)
            if rel is Relation.LESS and (
                summary.witness_less is None or gap < summary.witness_less[2]
            ):
                summary.witness_less = (m, n, gap)
            km = _shape_k(tuple(a for _, a in em))
            kn = _shape_k(tuple(a for _, a in en))
            if km is not None and km == kn:
                expected = Relation.EQUAL if km == 1 else Relation.GREATER
                if rel is not expected:
                    summary.violations.append(
                        f"two-prime-power shape ({m}, {n}), k={km}: "
                        f"expected {expected.value}, got {rel.value}"
                    )
            if all(a >= 3 for a in exps) and rel is not Relation.GREATER:
                summary.violations.append(
                    f"exponents>=3 shape ({m}, {n}): expected GREATER, got {rel.value}"
                )
    return summary


@dataclass
class CheckSummary:
    """Outcome of one sweep or randomized suite."""

    name: str
    checked: int
    violations: list[str] = field(default_factory=list)
    violation_count: int = 0
    extra: dict = field(default_factory=dict)

    def record(self, message: str) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_VIOLATIONS_KEPT:
            self.violations.append(message)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


def sweep_entropy_bounds(limit: int) -> CheckSummary:
    """Check 0 <= H(n) <= log omega(n) for every n in [2, limit]."""
    summary = CheckSummary("bounds", 0)
    table = arith.spf_sieve(limit).tolist()
    # Omega(n) <= 63 for anything a sweep can reach; table lookups only.
    logs = [0.0] + [math.log(k) for k in range(1, 64)]
    alog = [0.0] + [k * math.log(k) for k in range(1, 64)]
    for n in range(2, limit + 1):
        m = n
        omega_big = 0
        omega_small = 0
        s = 0.0
        while m > 1:
            p = table[m]
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            omega_big += a
            omega_small += 1
            s += alog[a]
        h = logs[omega_big] - s / omega_big if omega_big > 1 else 0.0
        summary.checked += 1
        if not -EQUAL_TOL <= h <= logs[omega_small] + EQUAL_TOL:
            summary.record(f"H({n}) = {h} outside [0, log {omega_small}]")
    return summary


def sweep_corollary_int(limit: int) -> CheckSummary:
    """Run check_corollary_int over every conforming n <= limit."""
    summary = CheckSummary("corollary-int", 0)
    for n, entries in arith.factored_range(limit):
        if len(entries) < 3 or any(a not in (1, 2) for _, a in entries):
            continue
        f = Factorization(tuple(entries), n)
        rep = _corollary_int_on(f, strict=False)
        summary.checked += 1
        for value, h_d in rep.violations:
            summary.record(
                f"n={n}: H({value}) = {h_d:.12g} > H(n) = {rep.h_subject:.12g}"
            )
    return summary


def sweep_edivisor_counts(limit: int) -> CheckSummary:
    """Check |exponential_divisors(n)| == tau_e(n) for every n in [2, limit]."""
    summary = CheckSummary("edivisors", 0)
    for n, entries in arith.factored_range(limit):
        f = Factorization(tuple(entries), n)
        expected = arith.tau_e(f)
        got = len(arith.exponential_divisors(f))
        summary.checked += 1
        if got != expected:
            summary.record(f"n={n}: {got} e-divisors, tau_e = {expected}")
    return summary


# The field matrix exercised by the splitting sweep and the acceptance suite.
FIELD_MATRIX: tuple[numfield.FieldSpec, ...] = tuple(
    [numfield.Quadratic(d) for d in (-1, 2, -2, 3, -3, 5, -5, 13)]
    + [numfield.CyclotomicPrime(l) for l in (3, 5, 7, 11, 13)]
    + [numfield.PureCubic(m) for m in (2, 3, 5, 7)]
)


def sweep_splitting(max_p: int, fields=FIELD_MATRIX) -> CheckSummary:
    """Structural splitting invariants over all primes <= max_p.

    For every field: sum e_i f_i = degree.  For Galois fields additionally
    uniform (e, f) with e f g = degree and H(p O_K) = log g to 1e-12.
    """
    summary = CheckSummary("splitting", 0)
    primes = arith.primes_up_to(max_p)
    for fld in fields:
        label = numfield.field_label(fld)
        for p in primes:
            sp = numfield.split_prime(fld, p)
            summary.checked += 1
            total = sum(e * f for e, f in sp.factors)
            if total != fld.degree:
                summary.record(f"{label}, p={p}: sum e_i f_i = {total}")
                continue
            if numfield.is_galois(fld):
                es = set(sp.ramification_indices)
                fs = set(sp.residue_degrees)
                if len(es) != 1 or len(fs) != 1:
                    summary.record(f"{label}, p={p}: non-uniform Galois pattern")
                    continue
                e, f = es.pop(), fs.pop()
                if e * f * sp.g != fld.degree:
                    summary.record(f"{label}, p={p}: efg != degree")
                if abs(numfield.ideal_entropy(sp) - math.log(sp.g)) > EQUAL_TOL:
                    summary.record(f"{label}, p={p}: H != log g")
    return summary


def generated_ideal_patterns(max_p: int = 200) -> list[numfield.SplittingPattern]:
    """All patterns from the field matrix over primes <= max_p."""
    out = []
    for fld in FIELD_MATRIX:
        for p in arith.primes_up_to(max_p):
            out.append(numfield.split_prime(fld, p))
    return out


def sweep_ideal_edivisor_counts(max_p: int = 200) -> CheckSummary:
    """|ideal_exponential_divisors| == ideal_tau_e over generated patterns."""
    summary = CheckSummary("ideal-edivisors", 0)
    for sp in generated_ideal_patterns(max_p):
        summary.checked += 1
        if len(numfield.ideal_exponential_divisors(sp)) != numfield.ideal_tau_e(sp):
            summary.record(f"pattern {sp.factors}: count != tau_e")
    return summary


def sweep_corollary_ideal(max_g: int = 5) -> CheckSummary:
    """check_corollary_ideal over every pattern with 3 <= g <= max_g and
    ramification indices in {1, 2} (residue degrees are irrelevant to H)."""
    summary = CheckSummary("corollary-ideal", 0)
    for g in range(3, max_g + 1):
        for es in _cartesian((1, 2), repeat=g):
            sp = numfield.SplittingPattern(tuple((e, 1) for e in es))
            rep = check_corollary_ideal(sp, strict=False)
            summary.checked += 1
            for betas, h_d in rep.violations:
                summary.record(
                    f"e={es}: H({betas}) = {h_d:.12g} > H(I) = {rep.h_subject:.12g}"
                )
    return summary


def _random_coprime_pair(rng: random.Random, bound: int) -> tuple[int, int]:
    while True:
        m = rng.randint(2, bound)
        n = rng.randint(2, bound)
        if math.gcd(m, n) == 1:
            return m, n


def random_eq_identity(
    count: int = 10**4, bound: int = 10**6, seed: int = 0
) -> CheckSummary:
    """Direct vs closed-form gap on random coprime pairs (1e-12 relative)."""
    rng = random.Random(seed)
    summary = CheckSummary("eq-identity", count, extra={"bound": bound, "seed": seed})
    for _ in range(count):
        m, n = _random_coprime_pair(rng, bound)
        rep = _gap_direct(m, n)
        formula = gap_formula(arith.factorize(m), arith.factorize(n))
        if abs(rep.gap - formula) > EQUAL_TOL * max(1.0, abs(rep.gap)):
            summary.record(f"({m}, {n}): direct {rep.gap}, formula {formula}")
    return summary


def random_hbar_additivity(
    count: int = 10**4, bound: int = 10**3, seed: int = 0, tol: float = 1e-9
) -> CheckSummary:
    """|Hbar(mn) - Hbar(m) - Hbar(n)| <= tol on random coprime pairs."""
    rng = random.Random(seed)
    summary = CheckSummary("hbar-additivity", count, extra={"bound": bound})
    cache: dict[int, float] = {}
    for _ in range(count):
        m, n = _random_coprime_pair(rng, bound)
        for v in (m, n):
            if v not in cache:
                cache[v] = entropy.entropy_Hbar(arith.factorize(v))
        combined = entropy.entropy_Hbar(arith.factorize(m * n))
        if abs(combined - cache[m] - cache[n]) > tol:
            summary.record(f"({m}, {n}): residual {combined - cache[m] - cache[n]}")
    return summary


def check_hbar_closed_form(
    max_p: int = 50, max_alpha: int = 12, tol: float = 1e-9
) -> CheckSummary:
    """Closed-form hbar_prime_power vs brute-force divisor-sum Hbar(p^alpha)."""
    summary = CheckSummary("hbar-closed-form", 0)
    for p in arith.primes_up_to(max_p):
        for alpha in range(1, max_alpha + 1):
            closed = entropy.hbar_prime_power(p, alpha)
            brute = entropy.entropy_Hbar(arith.factorize(p**alpha))
            summary.checked += 1
            if abs(closed - brute) > tol:
                summary.record(f"p={p}, alpha={alpha}: {closed} vs {brute}")
    return summary


def check_hbar_limit_monotone(limit: int = 10**6) -> CheckSummary:
    """hbar_limit strictly decreasing over all primes <= limit."""
    primes = np.array(arith.primes_up_to(limit), dtype=np.float64)
    values = primes * np.log(primes) / (primes - 1) - np.log(primes - 1)
    summary = CheckSummary("hbar-limit", len(primes), extra={"limit": limit})
    bad = np.nonzero(np.diff(values) >= 0)[0]
    for i in bad[:MAX_VIOLATIONS_KEPT]:
        summary.record(f"not decreasing between primes {primes[i]} and {primes[i+1]}")
    summary.violation_count = int(len(bad))
    return summary


def check_shannon_identity(max_p: int = 100, tol: float = 1e-12) -> CheckSummary:
    """H_S(1/p, 1-1/p) == (1 - 1/p) * hbar_limit(p) for primes p <= max_p."""
    summary = CheckSummary("shannon", 0)
    for p in arith.primes_up_to(max_p):
        hs = entropy.shannon_entropy(entropy.Distribution((1 / p, 1 - 1 / p)))
        rhs = (1 - 1 / p) * entropy.hbar_limit(p)
        summary.checked += 1
        if abs(hs - rhs) > tol:
            summary.record(f"p={p}: H_S = {hs}, identity value {rhs}")
    return summary


def check_appended_identity(
    count: int = 10**4, seed: int = 0, tol: float = 1e-12
) -> CheckSummary:
    """Closed-form entropy_H_appended vs direct entropy_H on random triples."""
    rng = random.Random(seed)
    primes = arith.primes_up_to(300)
    summary = CheckSummary("appended-identity", count, extra={"seed": seed})
    for _ in range(count):
        n = rng.randint(2, 10**5)
        p = rng.choice(primes)
        while n % p == 0:
            p = rng.choice(primes)
        alpha = rng.randint(1, 12)
        f = arith.factorize(n)
        closed = entropy.entropy_H_appended(f, p, alpha)
        direct = entropy.entropy_H(arith.factorize(n * p**alpha))
        if abs(closed - direct) > tol * max(1.0, abs(direct)):
            summary.record(f"(n={n}, p={p}, alpha={alpha}): {closed} vs {direct}")
    return summary


def random_prop41(count: int = 10**4, seed: int = 0) -> CheckSummary:
    """Tally trichotomy contradictions over seeded random (n, p, alpha, beta).

    The case-iii claim is numerically false (e.g. n=12, p=5, alpha=2,
    beta=1), so a nonzero tally is the expected outcome of a full scan.
    """
    rng = random.Random(seed)
    primes = arith.primes_up_to(100)
    summary = CheckSummary("prop41", count, extra={"seed": seed})
    for _ in range(count):
        n = rng.randint(2, 10**4)
        p = rng.choice(primes)
        while n % p == 0:
            p = rng.choice(primes)
        beta = rng.randint(1, 8)
        alpha = beta + rng.randint(0, 8)
        rep = classify_prop41(n, p, alpha, beta, strict=False)
        if rep.contradictions:
            summary.record(
                f"(n={n}, p={p}, alpha={alpha}, beta={beta}): cases {rep.cases} "
                f"contradicted in {rep.contradictions}; H(np^a)={rep.h_alpha:.12g}, "
                f"H(np^b)={rep.h_beta:.12g}, threshold={rep.threshold:.12g}"
            )
    return summary


def random_exponents_ge3_family(
    count: int = 10**3, seed: int = 0
) -> CheckSummary:
    """check_family_exponents_ge3 on random shape-conforming coprime pairs."""
    rng = random.Random(seed)
    primes = arith.primes_up_to(60)
    summary = CheckSummary("exponents-ge3", count, extra={"seed": seed})
    for _ in range(count):
        ps = rng.sample(primes, rng.randint(2, 4))
        split = rng.randint(1, len(ps) - 1)
        m = math.prod(p ** rng.randint(3, 6) for p in ps[:split])
        n = math.prod(p ** rng.randint(3, 6) for p in ps[split:])
        try:
            check_family_exponents_ge3(m, n)
        except VerificationError as exc:
            summary.record(str(exc))
    return summary


def check_family_grids(
    pkq_primes: int = 10, pkq_max_k: int = 10, tpp_primes: int = 8, tpp_max_k: int = 8
) -> CheckSummary:
    """Both parametric family checks over their full stated grids."""
    summary = CheckSummary("families", 0)
    first = arith.primes_up_to(1000)
    base = first[:pkq_primes]
    for p in base:
        for q in base:
            for t in base:
                if len({p, q, t}) != 3:
                    continue
                for k in range(1, pkq_max_k + 1):
                    summary.checked += 1
                    try:
                        check_family_pkq(p, q, t, k)
                    except VerificationError as exc:
                        summary.record(str(exc))
    base = first[:tpp_primes]
    equal_at = set()
    for quad in combinations(base, 4):
        p1, p2, q1, q2 = quad
        for k in range(1, tpp_max_k + 1):
            summary.checked += 1
            try:
                rep = check_family_two_prime_powers(p1, p2, q1, q2, k)
                if rep.relation is Relation.EQUAL:
                    equal_at.add(k)
            except VerificationError as exc:
                summary.record(str(exc))
    summary.extra["equal_at_k"] = sorted(equal_at)
    if equal_at != {1}:
        summary.record(f"EQUAL observed at k = {sorted(equal_at)}, expected only 1")
    return summary
