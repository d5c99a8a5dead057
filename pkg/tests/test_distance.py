import random
from fractions import Fraction

import numpy as np
import pytest

from eigenstrata.arrangement import BlockAssignment
from eigenstrata.distance import (FloatSymmetric, critical_points, edd_report,
                                  jacobi_eigh, nearest_symmetric, project)
from eigenstrata.errors import NonConvergenceError
from eigenstrata.partitions import Partition


def test_project_hand_values():
    u = (Fraction(0), Fraction(2), Fraction(10))
    cp = project(u, BlockAssignment(((1, 2), (3,))))
    assert cp.point == (1, 1, 10) and cp.squared_distance == 2
    cp = project(u, BlockAssignment(((1, 3), (2,))))
    assert cp.point == (5, 2, 5) and cp.squared_distance == 50
    cp = project(u, BlockAssignment(((2, 3), (1,))))
    assert cp.point == (0, 6, 6) and cp.squared_distance == 32


def test_project_idempotent_on_subspace():
    u = (Fraction(3), Fraction(3), Fraction(-1))
    cp = project(u, BlockAssignment(((1, 2), (3,))))
    assert cp.point == u and cp.squared_distance == 0


def test_critical_points_sorted_with_ties():
    pts = critical_points((Fraction(0), Fraction(1), Fraction(2)), Partition([2, 1]))
    assert [cp.squared_distance for cp in pts] == [Fraction(1, 2), Fraction(1, 2), 2]
    assert len(pts) == 3


def test_critical_point_orthogonality_exact():
    rng = random.Random(3)
    for _ in range(10):
        u = [Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(4)]
        for cp in critical_points(u, Partition([2, 1, 1])):
            for block in cp.subspace.blocks:
                assert sum(u[i - 1] - cp.point[i - 1] for i in block) == 0


@pytest.mark.parametrize("parts,triple", [
    ((2, 1), (3, 3, 3)),
    ((3, 1), (4, 4, 4)),
    ((2, 2), (6, 3, 3)),
])
def test_edd_report_triples(parts, triple):
    rep = edd_report(Partition(parts), seed=3)
    assert (rep.paper_edd, rep.subspace_count, rep.real_critical_count) == triple


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 8))
        a = rng.normal(size=(n, n)) * 5
        a = (a + a.T) / 2
        w, v = jacobi_eigh(a)
        assert np.allclose(np.sort(np.linalg.eigvalsh(a)), w, atol=1e-9)
        assert np.max(np.abs(v @ np.diag(w) @ v.T - a)) < 1e-10
        assert np.max(np.abs(v.T @ v - np.eye(n))) < 1e-12


def test_jacobi_nonconvergence_guard():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(NonConvergenceError):
        jacobi_eigh(a, max_sweeps=0)


def test_nearest_diagonal_case_reduces_to_projection():
    u = FloatSymmetric.from_array(np.diag([0.0, 2.0, 10.0]))
    rep = nearest_symmetric(u, Partition([2, 1]))
    assert rep.squared_distance == pytest.approx(2.0, abs=1e-12)
    assert np.allclose(rep.matrix.to_array(), np.diag([1.0, 1.0, 10.0]), atol=1e-9)
    assert rep.grouping == ((1, 2), (3,))


def test_nearest_off_diagonal_collapse():
    u = FloatSymmetric(2, (0.0, 1.0, 0.0))
    rep = nearest_symmetric(u, Partition([2]))
    assert rep.squared_distance == pytest.approx(2.0, rel=1e-12)
    assert np.allclose(rep.matrix.to_array(), np.zeros((2, 2)), atol=1e-9)


def test_nearest_fixed_point_when_already_on_stratum():
    u = FloatSymmetric.from_array(np.diag([1.0, 1.0, 5.0]))
    rep = nearest_symmetric(u, Partition([2, 1]))
    assert rep.distance <= 1e-12
    assert np.allclose(rep.matrix.to_array(), u.to_array(), atol=1e-9)


def test_nearest_orthogonal_invariance():
    rng = np.random.default_rng(5)
    for _ in range(5):
        a = rng.normal(size=(4, 4))
        a = (a + a.T) / 2
        q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
        u1 = FloatSymmetric.from_array(a)
        u2 = FloatSymmetric.from_array(q.T @ a @ q)
        for parts in [(2, 1, 1), (2, 2), (3, 1)]:
            d1 = nearest_symmetric(u1, Partition(parts)).distance
            d2 = nearest_symmetric(u2, Partition(parts)).distance
            assert d1 == pytest.approx(d2, rel=1e-9, abs=1e-12)


def test_nearest_count_grouping_options():
    # a degenerate tie: two equal gaps
    u = FloatSymmetric.from_array(np.diag([0.0, 1.0, 2.0]))
    rep = nearest_symmetric(u, Partition([2, 1]))
    assert rep.tie and rep.degenerate


def test_transfer_matches_diagonal_minimum():
    rng = np.random.default_rng(9)
    for _ in range(5):
        n = int(rng.integers(2, 6))
        a = rng.normal(size=(n, n)) * 3
        a = (a + a.T) / 2
        u = FloatSymmetric.from_array(a)
        w, _ = jacobi_eigh(a)
        exact_w = [Fraction(float(x)) for x in w]
        for lam in [Partition([n]), Partition([n - 1, 1]) if n > 1 else None]:
            if lam is None:
                continue
            rep = nearest_symmetric(u, lam)
            best = min(cp.squared_distance for cp in critical_points(exact_w, lam))
            assert rep.squared_distance == pytest.approx(float(best), rel=1e-9)
