"""Euclidean distance optimization against the diagonal arrangement.

Projecting a data vector onto one repetition subspace replaces each block of
coordinates by its mean — that single point is the subspace's distance
critical point, so the arrangement has exactly one critical point per
distinct subspace and all of them are real.  `critical_points` enumerates
them exactly over the rationals.

`nearest_symmetric` transfers the diagonal solution to full symmetric
matrices: eigendecompose (cyclic Jacobi), group the sorted eigenvalues into
blocks of the prescribed sizes minimizing the within-block sum of squares,
and replace each block by its mean in the eigenbasis.  The grouping search
deliberately ranges over ALL set partitions of the prescribed sizes (not
just contiguous-in-sorted-order ones) and then checks that a contiguous
grouping attains the optimum — the exhaustive search is the ground truth,
the contiguity check documents the observation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .arrangement import BlockAssignment, enumerate_subspaces
from .errors import NonConvergenceError, NonSymmetricError, SizeGuardError
from .partitions import Partition, count_distinct_subspaces, multinomial
from .seeding import distinct_fractions, rng_for

JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100
TIE_RTOL = 1e-9


@dataclass(frozen=True)
class CriticalPoint:
    subspace: BlockAssignment
    point: tuple
    squared_distance: Fraction

    def to_json(self):
        return {"subspace": self.subspace.to_json(),
                "point": [str(x) for x in self.point],
                "squared_distance": str(self.squared_distance)}


def project(u, assignment: BlockAssignment) -> CriticalPoint:
    """Blockwise-mean projection of u onto the subspace; exact for exact input."""
    u = [Fraction(x) if not isinstance(x, Fraction) else x for x in u]
    if len(u) != assignment.n:
        raise ValueError("data vector length does not match the assignment")
    point = list(u)
    dist2 = Fraction(0)
    for block in assignment.blocks:
        mean = sum(u[i - 1] for i in block) / len(block)
        for i in block:
            point[i - 1] = mean
            dist2 += (u[i - 1] - mean) ** 2
    return CriticalPoint(subspace=assignment, point=tuple(point),
                         squared_distance=dist2)


def critical_points(u, lam: Partition) -> list[CriticalPoint]:
    """One critical point per distinct subspace, sorted by squared distance
    (ties in canonical subspace order, all returned)."""
    pts = [project(u, s) for s in enumerate_subspaces(lam)]
    pts.sort(key=lambda cp: (cp.squared_distance, cp.subspace.blocks))
    return pts


@dataclass(frozen=True)
class EddReport:
    partition: Partition
    paper_edd: int
    subspace_count: int
    real_critical_count: int
    data_vector: tuple
    tie: bool

    def to_json(self):
        return {"partition": str(self.partition),
                "paper_edd": self.paper_edd,
                "subspace_count": self.subspace_count,
                "real_critical_count": self.real_critical_count,
                "data_vector": [str(x) for x in self.data_vector],
                "tie": self.tie}


def edd_report(lam: Partition, seed: int = 0) -> EddReport:
    """The closed-form distance degree next to what the arrangement actually
    shows at a seeded generic data vector.

    The closed form counts ordered block assignments; the arrangement has one
    real critical point per DISTINCT subspace, so the two disagree exactly
    when parts repeat.  Both are reported; nothing is reconciled silently.
    """
    rng = rng_for(seed, "edd-data", str(lam))
    u = tuple(distinct_fractions(rng, lam.n, 30))
    pts = critical_points(u, lam)
    distinct_points = {cp.point for cp in pts}
    distances = [cp.squared_distance for cp in pts]
    tie = len(set(distances)) < len(distances)
    return EddReport(partition=lam,
                     paper_edd=multinomial(lam),
                     subspace_count=count_distinct_subspaces(lam),
                     real_critical_count=len(distinct_points),
                     data_vector=u,
                     tie=tie)


# --- symmetric matrices in floating point ----------------------------------


@dataclass(frozen=True)
class FloatSymmetric:
    """Upper-triangle storage; symmetry holds by construction."""

    n: int
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(x) for x in self.upper))
        if len(self.upper) != self.n * (self.n + 1) // 2:
            raise ValueError("wrong number of upper-triangle entries")

    @classmethod
    def from_array(cls, a: np.ndarray) -> "FloatSymmetric":
        a = np.asarray(a, dtype=float)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("need a square array")
        if not np.allclose(a, a.T, atol=1e-9):
            raise NonSymmetricError("array is not symmetric")
        sym = (a + a.T) / 2.0
        return cls(n, tuple(sym[i, j] for i in range(n) for j in range(i, n)))

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        k = 0
        for i in range(self.n):
            for j in range(i, self.n):
                a[i, j] = self.upper[k]
                a[j, i] = self.upper[k]
                k += 1
        return a

    def to_json(self):
        return {"n": self.n, "upper": list(self.upper)}

    @classmethod
    def from_json(cls, obj: dict) -> "FloatSymmetric":
        return cls(int(obj["n"]), tuple(float(x) for x in obj["upper"]))


def jacobi_eigh(a: np.ndarray, tolerance: float = JACOBI_TOLERANCE,
                max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues ascending, orthonormal columns).  Raises
    NonConvergenceError if the off-diagonal Frobenius norm has not dropped
    below the tolerance after `max_sweeps` sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        off_part = a - np.diag(np.diag(a))
        off = float(np.linalg.norm(off_part))
        if off < tolerance:
            w = np.diag(a).copy()
            order = np.argsort(w, kind="stable")
            return w[order], v[:, order]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                rot_p = c * v[:, p] - s * v[:, q]
                rot_q = s * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = rot_p, rot_q
    raise NonConvergenceError(f"Jacobi sweeps did not reach {tolerance}")


@dataclass(frozen=True)
class NearestReport:
    matrix: FloatSymmetric
    squared_distance: float
    distance: float
    grouping: tuple          # blocks of 1-based sorted-eigenvalue indices
    block_means: tuple
    eigenvalues: tuple
    degenerate: bool
    tie: bool

    def to_json(self):
        return {"matrix": self.matrix.to_json(),
                "squared_distance": self.squared_distance,
                "distance": self.distance,
                "grouping": [list(b) for b in self.grouping],
                "block_means": list(self.block_means),
                "eigenvalues": list(self.eigenvalues),
                "degenerate": self.degenerate,
                "tie": self.tie}


def _grouping_cost(blocks, w) -> float:
    cost = 0.0
    for block in blocks:
        vals = [w[i - 1] for i in block]
        mean = sum(vals) / len(vals)
        cost += sum((x - mean) ** 2 for x in vals)
    return cost


def _contiguous_groupings(lam: Partition):
    """Set partitions whose blocks are consecutive runs of 1..n, sizes = lam."""
    seen = set()
    out = []

    def rec(start: int, remaining: tuple[int, ...], acc: list):
        if not remaining:
            key = tuple(sorted(acc))
            if key not in seen:
                seen.add(key)
                out.append(tuple(acc))
            return
        used = set()
        for k, s in enumerate(remaining):
            if s in used:
                continue
            used.add(s)
            block = tuple(range(start, start + s))
            acc.append(block)
            rec(start + s, remaining[:k] + remaining[k + 1:], acc)
            acc.pop()

    rec(1, lam.parts, [])
    return out


def nearest_symmetric(u: FloatSymmetric, lam: Partition) -> NearestReport:
    """Nearest symmetric matrix whose eigenvalue multiplicities coarsen lam.

    Eigendecompose, search all eigenvalue groupings of the prescribed sizes
    for the minimal within-block sum of squares, and average each block in
    the eigenbasis.  Frobenius distance equals the diagonal-case distance on
    the eigenvalue vector.
    """
    if lam.n != u.n:
        raise ValueError("partition size does not match the matrix")
    if u.n > 10:
        raise SizeGuardError("grouping search guarded to n <= 10")
    w, v = jacobi_eigh(u.to_array())
    groupings = enumerate_subspaces(lam)
    costs = [(_grouping_cost(g.blocks, w), g.blocks) for g in groupings]
    costs.sort(key=lambda t: (t[0], t[1]))
    best_cost, best_blocks = costs[0]
    best_cost = float(best_cost)
    tie = bool(len(costs) > 1 and float(costs[1][0]) == best_cost)
    scale = max(1.0, abs(best_cost))
    degenerate = bool(len(costs) > 1
                      and (float(costs[1][0]) - best_cost) <= TIE_RTOL * scale)

    contiguous_best = min(_grouping_cost(b, w) for b in _contiguous_groupings(lam))
    assert contiguous_best <= best_cost + 1e-12 * scale, \
        "optimal eigenvalue grouping is expected to be contiguous in sorted order"

    d_new = np.array(w, dtype=float)
    means = []
    for block in best_blocks:
        mean = float(np.mean([w[i - 1] for i in block]))
        means.append(mean)
        for i in block:
            d_new[i - 1] = mean
    nearest = v @ np.diag(d_new) @ v.T
    nearest = (nearest + nearest.T) / 2.0
    return NearestReport(matrix=FloatSymmetric.from_array(nearest),
                         squared_distance=float(best_cost),
                         distance=sqrt(max(0.0, float(best_cost))),
                         grouping=best_blocks,
                         block_means=tuple(means),
                         eigenvalues=tuple(float(x) for x in w),
                         degenerate=degenerate,
                         tie=tie)
