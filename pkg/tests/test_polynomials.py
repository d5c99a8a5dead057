import random
from fractions import Fraction
from math import comb

import pytest

from eigenstrata.errors import DimensionError
from eigenstrata.polynomials import (Polynomial, VariableIndexing,
                                     monomials_of_degree)


def rand_poly(rng, nvars, max_degree=3, terms=5):
    entries = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        entries[tuple(exps)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Polynomial(nvars, entries)


def test_variable_indexing_layout():
    idx = VariableIndexing(3)
    assert idx.count == 6
    assert idx.names == ("x11", "x12", "x13", "x22", "x23", "x33")
    assert idx.index_of(2, 1) == idx.index_of(1, 2) == 1
    assert idx.pairs[idx.index_of(2, 3)] == (2, 3)


def test_monomials_of_degree_counts_and_order():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_of_degree(6, 3)) == comb(8, 3) == 56
    assert len(monomials_of_degree(10, 5)) == comb(14, 5) == 2002
    ms = monomials_of_degree(4, 3)
    assert ms == sorted(ms, reverse=True)


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(40):
        a, b, c = (rand_poly(rng, 3) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_evaluate_examples():
    five = Polynomial.constant(2, 5)
    assert five.evaluate([Fraction(10), Fraction(-3)]) == 5
    x0x1 = Polynomial.variable(2, 0) * Polynomial.variable(2, 1)
    assert x0x1.evaluate([Fraction(2), Fraction(3)]) == 6
    with pytest.raises(DimensionError):
        x0x1.evaluate([Fraction(1)])


def test_partial_derivative():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    f = x * x * y + 3 * y
    assert f.partial(0) == 2 * x * y
    assert f.partial(1) == x * x + Polynomial.constant(2, 3)


def test_exact_division():
    rng = random.Random(2)
    for _ in range(30):
        a, b = rand_poly(rng, 3, terms=4), rand_poly(rng, 3, terms=3)
        if not a or not b:
            continue
        assert (a * b).exact_div(b) == a
    with pytest.raises(ArithmeticError):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        (x * x + y).exact_div(x)


def test_text_roundtrip_matches_layout():
    idx = VariableIndexing(4)
    text = "-x12*x34+x13*x24"
    f = Polynomial.from_text(text, idx)
    assert f.to_text(idx.names) == text
    g = Polynomial.from_text("3/2*x11^2-x44", idx)
    assert g.to_text(idx.names) == "3/2*x11^2-x44"
    assert Polynomial.from_text("0", idx) == Polynomial.zero(idx.count)


def test_text_parse_accepts_coefficient_forms():
    idx = VariableIndexing(2)
    f = Polynomial.from_text("2*x11*x12 - 4*x22^2 + 7", idx)
    point = [Fraction(1), Fraction(2), Fraction(3)]
    assert f.evaluate(point) == 2 * 1 * 2 - 4 * 9 + 7


def test_json_roundtrip():
    rng = random.Random(3)
    f = rand_poly(rng, 6)
    assert Polynomial.from_json(f.to_json()) == f


def test_homogeneity_and_degree():
    idx = VariableIndexing(2)
    f = Polynomial.from_text("x11*x22-x12^2", idx)
    assert f.is_homogeneous() and f.degree() == 2
    g = Polynomial.from_text("x11+1", idx)
    assert not g.is_homogeneous()
    assert Polynomial.zero(3).degree() == -1
