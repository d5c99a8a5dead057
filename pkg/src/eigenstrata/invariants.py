"""Graded dimensions on both sides of the restriction correspondence.

For a partition of n, two spaces are measured degree by degree:

* the symmetric polynomials in n variables (monomial symmetric basis) that
  vanish on the diagonal arrangement, and
* the span of products of power traces tr(A^k), k = 1..n, that vanish on the
  full matrix stratum.

The two graded dimensions are expected to coincide.  The trace-product span
is the classical generating set for conjugation invariants of symmetric
matrices, but nothing here asserts that it exhausts ALL invariants — a
mismatch therefore reads "trace span deficient OR correspondence violated"
and is reported, not asserted away.  Whether invariants of the full versus
special orthogonal group differ on symmetric matrices is likewise left open;
the tables measure the trace span and say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .arrangement import arrangement_points
from .errors import SizeGuardError
from .matrices import ExactMatrix
from .partitions import Partition, partitions_of
from .sampling import random_samples
from .seeding import derive_seed

_BASIS_GUARD = 500


def symmetric_exponent_patterns(n: int, degree: int) -> list[tuple[int, ...]]:
    """Partitions of `degree` into at most n parts, as padded exponent tuples."""
    out = []
    for mu in partitions_of(degree):
        if mu.m <= n:
            out.append(tuple(mu.parts) + (0,) * (n - mu.m))
    return out


def monomial_symmetric_value(pattern: tuple[int, ...], point) -> Fraction:
    """m_pattern evaluated at an exact point: sum over distinct permutations."""
    total = Fraction(0)
    for perm in set(permutations(pattern)):
        term = Fraction(1)
        for x, e in zip(point, perm):
            if e:
                term *= x ** e
        total += term
    return total


def sn_invariant_dim(lam: Partition, degree: int, seed: int = 0) -> int:
    """Dimension of degree-d symmetric polynomials vanishing on the diagonal
    arrangement (exact evaluation-matrix nullspace)."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    patterns = symmetric_exponent_patterns(lam.n, degree)
    if len(patterns) > _BASIS_GUARD:
        raise SizeGuardError("symmetric basis too large")
    points = arrangement_points(lam, len(patterns) + 20,
                                derive_seed(seed, "sn-points", str(lam), degree))
    rows = [[monomial_symmetric_value(pat, pt) for pat in patterns] for pt in points]
    matrix = ExactMatrix.from_rows(rows)
    return matrix.cols - matrix.rank()


def trace_power_patterns(n: int, degree: int) -> list[tuple[int, ...]]:
    """Partitions of `degree` with parts <= n: exponents of trace products."""
    return [tuple(mu.parts) for mu in partitions_of(degree) if mu.parts[0] <= n]


def son_invariant_dim(lam: Partition, degree: int, seed: int = 0) -> int:
    """Dimension of the degree-d trace-product combinations vanishing on the
    matrix stratum (exact evaluation-matrix nullspace at sampled points)."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    patterns = trace_power_patterns(lam.n, degree)
    if not patterns:
        return 0
    if len(patterns) > _BASIS_GUARD:
        raise SizeGuardError("trace-product basis too large")
    samples = random_samples(lam, len(patterns) + 20,
                             derive_seed(seed, "son-points", str(lam), degree))
    rows = []
    for s in samples:
        traces = _power_traces(s.matrix, lam.n)
        rows.append([_trace_product(traces, pat) for pat in patterns])
    matrix = ExactMatrix.from_rows(rows)
    return matrix.cols - matrix.rank()


def _power_traces(a: ExactMatrix, max_power: int) -> list[Fraction]:
    traces = []
    power = a
    for _ in range(max_power):
        traces.append(power.trace())
        power = power.matmul(a)
    return traces


def _trace_product(traces, pattern) -> Fraction:
    out = Fraction(1)
    for k in pattern:
        out *= traces[k - 1]
    return out


@dataclass(frozen=True)
class GradedDimensionRow:
    degree: int
    dim_symmetric: int
    dim_traces: int

    @property
    def match(self) -> bool:
        return self.dim_symmetric == self.dim_traces


@dataclass(frozen=True)
class GradedDimensionTable:
    partition: Partition
    seed: int
    rows: tuple

    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self):
        return {"partition": str(self.partition),
                "seed": self.seed,
                "rows": [{"degree": r.degree,
                          "dim_symmetric": r.dim_symmetric,
                          "dim_traces": r.dim_traces,
                          "match": r.match} for r in self.rows]}

    def to_text(self) -> str:
        lines = [f"partition {self.partition}  (seed {self.seed})",
                 f"{'degree':>6}  {'sym-side':>8}  {'trace-side':>10}  match"]
        for r in self.rows:
            lines.append(f"{r.degree:>6}  {r.dim_symmetric:>8}  {r.dim_traces:>10}  "
                         f"{'yes' if r.match else 'NO'}")
        return "\n".join(lines)


def chevalley_check(lam: Partition, dmax: int, seed: int = 0) -> GradedDimensionTable:
    """Table of both graded dimensions for degrees 1..dmax with match flags."""
    rows = []
    for d in range(1, dmax + 1):
        rows.append(GradedDimensionRow(
            degree=d,
            dim_symmetric=sn_invariant_dim(lam, d, seed),
            dim_traces=son_invariant_dim(lam, d, seed)))
    return GradedDimensionTable(partition=lam, seed=seed, rows=tuple(rows))
