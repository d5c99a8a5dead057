import random
from fractions import Fraction

import pytest

from eigenstrata.errors import NonSquareError, SingularMatrixError
from eigenstrata.matrices import ExactMatrix
from helpers import rand_matrix


def test_nullspace_identity_empty():
    assert ExactMatrix.identity(3).nullspace() == []


def test_nullspace_zero_matrix_full():
    basis = ExactMatrix.zeros(2, 3).nullspace()
    assert len(basis) == 3


def test_nullspace_hand_eliminated_case():
    m = ExactMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    basis = m.nullspace()
    assert len(basis) == 1
    assert basis[0].column(0) == (Fraction(1), Fraction(-1), Fraction(1))


def test_rank_examples():
    assert ExactMatrix.identity(4).rank() == 4
    ones = ExactMatrix.from_rows([[1, 1, 1]] * 3)
    assert ones.rank() == 1
    outer = ExactMatrix.from_rows([[2 * j for j in (1, 2, 5)],
                                   [3 * j for j in (1, 2, 5)]])
    assert outer.rank() == 1


def test_rank_nullity_and_exact_kernel():
    rng = random.Random(11)
    for _ in range(100):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = rand_matrix(rng, rows, cols)
        basis = m.nullspace()
        assert m.rank() + len(basis) == cols
        for v in basis:
            assert all(x == 0 for x in m.matmul(v).entries)


def test_nullspace_is_canonical_reduced_echelon():
    rng = random.Random(5)
    m = rand_matrix(rng, 4, 6)
    basis = [v.column(0) for v in m.nullspace()]
    # unit leading entries at strictly increasing columns, zeros above/below
    lead_cols = []
    for v in basis:
        lead = next(i for i, x in enumerate(v) if x != 0)
        assert v[lead] == 1
        lead_cols.append(lead)
        for other in basis:
            if other is not v:
                assert other[lead] == 0
    assert lead_cols == sorted(lead_cols)


def test_det_and_inverse():
    a = ExactMatrix.from_rows([[2, 1], [1, 1]])
    assert a.det() == 1
    assert a.inverse().matmul(a) == ExactMatrix.identity(2)
    assert ExactMatrix.from_rows([[1, 2], [2, 4]]).det() == 0
    with pytest.raises(SingularMatrixError):
        ExactMatrix.from_rows([[1, 2], [2, 4]]).inverse()
    with pytest.raises(NonSquareError):
        ExactMatrix.zeros(2, 3).det()


def test_det_matches_cofactor_expansion():
    def cof(g):
        n = len(g)
        if n == 1:
            return g[0][0]
        return sum((-1) ** j * g[0][j] * cof([r[:j] + r[j + 1:] for r in g[1:]])
                   for j in range(n))

    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 5)
        grid = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                 for _ in range(n)] for _ in range(n)]
        assert ExactMatrix.from_rows(grid).det() == cof(grid)


def test_upper_triangle_roundtrip():
    rng = random.Random(9)
    m = rand_matrix(rng, 3, 3)
    sym = m + m.transpose()
    back = ExactMatrix.from_upper_triangle(3, sym.upper_triangle())
    assert back == sym
    assert sym.is_symmetric()


def test_skew_and_symmetry_predicates():
    b = ExactMatrix.from_rows([[0, 2], [-2, 0]])
    assert b.is_skew() and not b.is_symmetric()
