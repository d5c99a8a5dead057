from fractions import Fraction

import pytest

from eigenstrata.errors import MixedDegreeError, NotOnVarietyError
from eigenstrata.interpolation import (evaluate_monomials,
                                       jacobian_codim, parametrization_rank,
                                       span_equals, vanishing_forms)
from eigenstrata.partitions import Partition, dimension, partitions_of
from eigenstrata.polynomials import Polynomial, monomials_of_degree
from eigenstrata.sampling import cayley, random_samples, SkewParams
from eigenstrata.seeding import rng_for, random_fraction


def test_evaluate_monomials_matches_direct_products():
    point = [Fraction(2), Fraction(-1, 3), Fraction(5, 7)]
    monos = monomials_of_degree(3, 4)
    values = evaluate_monomials(point, monos)
    for exps, val in zip(monos, values):
        direct = Fraction(1)
        for x, e in zip(point, exps):
            direct *= x ** e
        assert val == direct


def test_low_degrees_have_no_forms():
    lam = Partition([2, 1])
    for d in (1, 2):
        assert vanishing_forms(lam, d, seed=11).nullspace_dim == 0


def test_cubic_forms_count_and_verification():
    rep = vanishing_forms(Partition([2, 1]), 3, seed=11)
    assert rep.nullspace_dim == 7
    assert rep.mode == "exact"
    assert rep.monomial_count == 56
    assert rep.sample_count == 76
    fresh = random_samples(Partition([2, 1]), 10, seed=999)
    for f in rep.basis:
        assert all(f.evaluate(s.ambient) == 0 for s in fresh)


def test_report_json_shape():
    rep = vanishing_forms(Partition([2, 1]), 2, seed=1)
    payload = rep.to_json()
    assert payload["nullspace_dim"] == 0 and payload["basis"] == []


def test_homogeneity_and_conjugation_stability():
    """The stratum is a cone and conjugation-stable; discovered forms must
    vanish on scaled and conjugated samples."""
    lam = Partition([2, 1])
    rep = vanishing_forms(lam, 3, seed=11)
    samples = random_samples(lam, 5, seed=77)
    rng = rng_for(8, "conj")
    q = cayley(SkewParams(3, tuple(random_fraction(rng) for _ in range(3))))
    for f in rep.basis:
        for s in samples:
            for t in (2, 3):
                scaled = [Fraction(t) * x for x in s.ambient]
                assert f.evaluate(scaled) == 0
            conj = q.transpose().matmul(s.matrix).matmul(q)
            assert f.evaluate(conj.upper_triangle()) == 0


def test_nullspace_dim_seed_independent():
    dims = {vanishing_forms(Partition([2, 1]), 3, seed=s).nullspace_dim
            for s in (1, 2, 3)}
    assert dims == {7}


def test_span_equals_basic():
    rep = vanishing_forms(Partition([2, 1]), 3, seed=11)
    basis = list(rep.basis)
    assert span_equals(basis, basis)
    rescaled = [f * Fraction(3, 2) for f in basis]
    assert span_equals(basis, rescaled)
    assert not span_equals(basis[:6], basis)
    assert span_equals([], [])
    with pytest.raises(MixedDegreeError):
        span_equals(basis, [Polynomial.variable(6, 0)])


def test_jacobian_codim_empty_basis():
    pt = random_samples(Partition([2, 1]), 1, seed=5)[0]
    assert jacobian_codim([], pt) == 0


def test_jacobian_codim_rejects_off_variety_point():
    rep = vanishing_forms(Partition([2, 1]), 3, seed=11)
    bad = random_samples(Partition([1, 1, 1]), 1, seed=6)[0]
    with pytest.raises(NotOnVarietyError):
        jacobian_codim(rep.basis, bad)


def test_parametrization_rank_examples():
    assert parametrization_rank(Partition([2, 1]), seed=5) == 4
    assert parametrization_rank(Partition([5]), seed=5) == 1
    assert parametrization_rank(Partition([2, 2]), seed=5) == 6


def test_parametrization_rank_matches_formula_to_n5():
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert parametrization_rank(lam, seed=5) == dimension(lam)
