import random
from fractions import Fraction

import pytest

from eigenstrata.errors import BadPrimeError, ReconstructFailError
from eigenstrata.matrices import ExactMatrix
from eigenstrata.modular import (FIXED_PRIMES, ModularMatrix, crt_combine,
                                 primes_for_seed, rank_modular,
                                 rational_reconstruct, reduce_scalar)
from helpers import rand_matrix


def test_fixed_primes_are_31_bit_and_distinct():
    assert len(set(FIXED_PRIMES)) == len(FIXED_PRIMES)
    for p in FIXED_PRIMES:
        assert p < 2 ** 31
        assert pow(2, p - 1, p) == 1  # Fermat sanity


def test_primes_for_seed_deterministic():
    assert primes_for_seed(7) == primes_for_seed(7)
    assert primes_for_seed(7, offset=3) != primes_for_seed(7)


def test_rank_modular_identity():
    assert rank_modular(ExactMatrix.identity(4), primes_for_seed(1)).rank == 4


def test_rank_modular_agrees_with_exact_rank():
    rng = random.Random(2)
    primes = primes_for_seed(2)
    for _ in range(100):
        m = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        result = rank_modular(m, primes)
        assert result.rank == m.rank()
        assert result.certificate == "certified-lower-bound"


def test_bad_prime_raises():
    p = FIXED_PRIMES[0]
    m = ExactMatrix.from_rows([[Fraction(1, p)]])
    with pytest.raises(BadPrimeError):
        ModularMatrix.from_exact(m, p)


def test_denominator_seven_prime_seven_would_fail():
    # the fixed list never contains small primes, so build the failure directly
    with pytest.raises(BadPrimeError):
        reduce_scalar(Fraction(3, 7), 7)


def test_modular_nullspace_matches_exact():
    rng = random.Random(4)
    p = FIXED_PRIMES[5]
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), height=6)
        exact = [v.column(0) for v in m.nullspace()]
        modular = ModularMatrix.from_exact(m, p).nullspace()
        assert modular.shape[0] == len(exact)
        for vec, exact_vec in zip(modular, exact):
            assert [int(x) for x in vec] == [reduce_scalar(e, p) for e in exact_vec]


def test_crt_combine():
    residues = [3, 4]
    moduli = [5, 7]
    x = crt_combine(residues, moduli)
    assert x % 5 == 3 and x % 7 == 4


def test_rational_reconstruct_half():
    primes = list(primes_for_seed(3))
    x = Fraction(1, 2)
    residues = [reduce_scalar(x, p) for p in primes]
    assert rational_reconstruct(residues, primes) == x
    # also with a single large prime
    p = primes[0]
    assert rational_reconstruct([(p + 1) // 2], [p]) == Fraction(1, 2)


def test_rational_reconstruct_integer():
    primes = list(primes_for_seed(9))
    assert rational_reconstruct([5 % p for p in primes], primes) == 5


def test_rational_reconstruct_roundtrip_random():
    rng = random.Random(8)
    primes = list(primes_for_seed(10))
    for _ in range(50):
        x = Fraction(rng.randint(-10 ** 9, 10 ** 9), rng.randint(1, 10 ** 6))
        residues = [reduce_scalar(x, p) for p in primes]
        assert rational_reconstruct(residues, primes) == x


def test_rational_reconstruct_inconsistent():
    """Residues carrying no rational within the height bound must raise,
    signalling that more primes are needed."""
    p, q = 101, 103
    raised = 0
    for x in range(60, 200):
        try:
            rational_reconstruct([x % p, x % q], [p, q])
        except ReconstructFailError:
            raised += 1
    assert raised > 0
