import math

import pytest

from entropia import arith, numfield
from entropia.errors import DomainError
from entropia.numfield import (
    CyclotomicPrime,
    PureCubic,
    Quadratic,
    SplittingPattern,
    ideal_entropy,
    ideal_exponential_divisors,
    ideal_tau,
    ideal_tau_e,
    parse_field_spec,
    pattern_for_vector,
    split_prime,
)


# --- field specs ------------------------------------------------------------


def test_field_validation():
    assert Quadratic(-1).degree == 2
    assert CyclotomicPrime(5).degree == 4
    assert PureCubic(2).degree == 3
    with pytest.raises(DomainError):
        Quadratic(12)  # not squarefree
    with pytest.raises(DomainError):
        Quadratic(1)
    with pytest.raises(DomainError):
        CyclotomicPrime(2)
    with pytest.raises(DomainError):
        CyclotomicPrime(9)
    with pytest.raises(DomainError):
        PureCubic(8)  # not cubefree
    with pytest.raises(DomainError):
        PureCubic(10)  # 100 = 1 mod 9, non-monogenic case


def test_parse_field_spec():
    assert parse_field_spec("quad:-1") == Quadratic(-1)
    assert parse_field_spec("cyclo:7") == CyclotomicPrime(7)
    assert parse_field_spec("cubic:2") == PureCubic(2)
    for bad in ("quad", "Quad:5", "cubic:x", "weird:3"):
        with pytest.raises(DomainError):
            parse_field_spec(bad)
    assert numfield.field_label(parse_field_spec("quad:-5")) == "quad:-5"


# --- splitting patterns -----------------------------------------------------


def test_pattern_canonical_order_and_validation():
    sp = SplittingPattern(((1, 1), (2, 1), (1, 2)))
    assert sp.factors == ((2, 1), (1, 2), (1, 1))
    assert sp.g == 3
    with pytest.raises(DomainError):
        SplittingPattern(())
    with pytest.raises(DomainError):
        SplittingPattern(((0, 1),))
    with pytest.raises(DomainError):
        SplittingPattern(((1, 1),), p=5, field=Quadratic(-1))  # sum ef != 2


def test_split_goldens():
    assert split_prime(CyclotomicPrime(5), 5).factors == ((4, 1),)
    sp = split_prime(PureCubic(2), 29)
    assert sp.g == 2 and sp.ramification_indices == (1, 1)
    assert sorted(sp.residue_degrees) == [1, 2]
    assert split_prime(PureCubic(2), 31).factors == ((1, 1), (1, 1), (1, 1))
    assert split_prime(Quadratic(-1), 2).factors == ((2, 1),)
    with pytest.raises(DomainError):
        split_prime(Quadratic(-1), 4)


def test_quadratic_rules():
    zi = Quadratic(-1)  # Gaussian integers
    assert split_prime(zi, 5).factors == ((1, 1), (1, 1))  # 1 mod 4 splits
    assert split_prime(zi, 7).factors == ((1, 2),)  # 3 mod 4 inert
    q5 = Quadratic(5)
    assert split_prime(q5, 5).factors == ((2, 1),)
    assert split_prime(q5, 11).factors == ((1, 1), (1, 1))
    # p = 2: d mod 8 trichotomy
    assert split_prime(Quadratic(-7), 2).factors == ((1, 1), (1, 1))
    assert split_prime(Quadratic(5), 2).factors == ((1, 2),)
    assert split_prime(Quadratic(3), 2).factors == ((2, 1),)


def test_cyclotomic_residue_degree_is_multiplicative_order():
    field = CyclotomicPrime(7)
    for p in arith.primes_up_to(100):
        if p == 7:
            continue
        sp = split_prime(field, p)
        f = sp.residue_degrees[0]
        assert pow(p, f, 7) == 1
        assert all(pow(p, d, 7) != 1 for d in range(1, f))
        assert sp.g * f == 6


def test_pure_cubic_density_sanity():
    field = PureCubic(2)
    gs_mod1 = set()
    for p in arith.primes_up_to(10**4):
        if p in (2, 3):  # p | 3m for m = 2: totally ramified, not part of the claim
            continue
        sp = split_prime(field, p)
        if p % 3 == 1:
            gs_mod1.add(sp.g)
        else:
            assert sp.g == 2
    assert gs_mod1 == {1, 3}


def test_splitting_invariants_over_matrix():
    fields = (
        [Quadratic(d) for d in (-1, 2, -2, 3, -3, 5, -5, 13)]
        + [CyclotomicPrime(l) for l in (3, 5, 7, 11, 13)]
        + [PureCubic(m) for m in (2, 3, 5, 7)]
    )
    for field in fields:
        for p in arith.primes_up_to(500):
            sp = split_prime(field, p)
            assert sum(e * f for e, f in sp.factors) == field.degree
            if numfield.is_galois(field):
                es, fs = set(sp.ramification_indices), set(sp.residue_degrees)
                assert len(es) == 1 and len(fs) == 1
                assert es.pop() * fs.pop() * sp.g == field.degree
                assert ideal_entropy(sp) == pytest.approx(math.log(sp.g), abs=1e-12)


# --- ideal functionals ------------------------------------------------------


def test_ideal_entropy_goldens():
    assert ideal_entropy(SplittingPattern(((4, 1),))) == 0.0
    assert ideal_entropy(SplittingPattern(((1, 2), (1, 1)))) == pytest.approx(
        math.log(2), abs=1e-15
    )
    assert ideal_entropy(SplittingPattern(((1, 1),) * 3)) == pytest.approx(
        math.log(3), abs=1e-15
    )
    assert ideal_entropy(SplittingPattern(((1, 6),))) == 0.0  # inert
    assert ideal_entropy(SplittingPattern(((6, 1),))) == 0.0  # totally ramified


def test_ideal_entropy_bounds():
    for sp in (
        SplittingPattern(((2, 1), (2, 1), (1, 1))),
        SplittingPattern(((3, 1), (1, 1))),
        SplittingPattern(((1, 1),) * 4),
    ):
        h = ideal_entropy(sp)
        assert -1e-12 <= h <= math.log(sp.g) + 1e-12


def test_ideal_tau_goldens():
    assert ideal_tau(SplittingPattern(((4, 1),))) == 5
    assert ideal_tau(SplittingPattern(((1, 1),) * 3)) == 8
    assert ideal_tau(SplittingPattern(((1, 5),))) == 2


def test_ideal_tau_e_goldens():
    assert ideal_tau_e(SplittingPattern(((4, 1),))) == 3
    assert ideal_tau_e(SplittingPattern(((1, 1),) * 4)) == 1
    assert ideal_tau_e(SplittingPattern(((2, 1), (2, 1)))) == 4


def test_ideal_exponential_divisors():
    sp = SplittingPattern(((4, 1),))
    assert ideal_exponential_divisors(sp) == [(1,), (2,), (4,)]
    sp = SplittingPattern(((1, 1),) * 3)
    assert ideal_exponential_divisors(sp) == [(1, 1, 1)]
    sp = SplittingPattern(((2, 1), (2, 1), (1, 1)))
    vectors = ideal_exponential_divisors(sp)
    assert len(vectors) == 4 == ideal_tau_e(sp)
    derived = pattern_for_vector(sp, (1, 2, 1))
    assert derived.factors == ((2, 1), (1, 1), (1, 1))


def test_ideal_edivisor_counts_on_generated_patterns():
    for field in (Quadratic(-1), CyclotomicPrime(7), PureCubic(3)):
        for p in arith.primes_up_to(200):
            sp = split_prime(field, p)
            assert len(ideal_exponential_divisors(sp)) == ideal_tau_e(sp)
