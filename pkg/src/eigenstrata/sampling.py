"""Exact rational points on multiplicity strata via the Cayley transform.

A skew-symmetric B maps to the special orthogonal Q = (I-B)(I+B)^{-1}
(always defined: det(I+B) >= 1 for real skew B), and conjugating a diagonal
matrix with prescribed repeated entries by Q lands exactly on the stratum.
Every step is rational, so sample matrices are exact and downstream
interpolation can certify vanishing rather than approximate it.

The determinant -1 coset (swap two rows of Q) is exposed for completeness
but deliberately unused by `random_samples`: sign-flip diagonal matrices
commute past the diagonal spectrum, so conjugation by the special orthogonal
group already sweeps the full orthogonal orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DuplicateEigenvalueError, NonSymmetricError
from .matrices import ExactMatrix
from .partitions import Partition, is_coarsening
from .scalars import as_fraction
from .seeding import distinct_fractions, random_fraction, rng_for
from .unipoly import char_poly, multiplicity_partition


@dataclass(frozen=True)
class SkewParams:
    """The C(n,2) strictly-upper entries of a skew-symmetric matrix, row-major."""

    n: int
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_fraction(x) for x in self.upper))
        if len(self.upper) != comb(self.n, 2):
            raise ValueError(f"need {comb(self.n, 2)} strict-upper entries")

    @classmethod
    def zero(cls, n: int) -> "SkewParams":
        return cls(n, (Fraction(0),) * comb(n, 2))

    def to_matrix(self) -> ExactMatrix:
        n = self.n
        grid = [[Fraction(0)] * n for _ in range(n)]
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                grid[i][j] = self.upper[k]
                grid[j][i] = -self.upper[k]
                k += 1
        return ExactMatrix.from_rows(grid)


@dataclass(frozen=True)
class SpectrumSpec:
    """Eigenvalues mu_1..mu_m placed with multiplicities lam_1..lam_m in order."""

    partition: Partition
    eigenvalues: tuple

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues",
                           tuple(as_fraction(x) for x in self.eigenvalues))
        if len(self.eigenvalues) != self.partition.m:
            raise ValueError("need one eigenvalue per part")
        if len(set(self.eigenvalues)) != len(self.eigenvalues):
            raise DuplicateEigenvalueError(f"eigenvalues must be pairwise distinct: "
                                           f"{self.eigenvalues}")

    def diagonal(self) -> ExactMatrix:
        values = []
        for mult, mu in zip(self.partition.parts, self.eigenvalues):
            values.extend([mu] * mult)
        return ExactMatrix.diagonal(values)


@dataclass(frozen=True)
class SamplePoint:
    """A point on the stratum: the matrix and its ambient coordinate vector."""

    matrix: ExactMatrix
    ambient: tuple

    @classmethod
    def from_matrix(cls, matrix: ExactMatrix) -> "SamplePoint":
        return cls(matrix=matrix, ambient=matrix.upper_triangle())

    @property
    def n(self) -> int:
        return self.matrix.rows

    def to_json(self) -> dict:
        return {"n": self.n, "ambient": [str(x) for x in self.ambient]}

    @classmethod
    def from_json(cls, obj: dict) -> "SamplePoint":
        n = int(obj["n"])
        upper = [Fraction(s) for s in obj["ambient"]]
        return cls.from_matrix(ExactMatrix.from_upper_triangle(n, upper))


def cayley(params: SkewParams) -> ExactMatrix:
    """(I-B)(I+B)^{-1}: special orthogonal with determinant +1, exactly."""
    b = params.to_matrix()
    eye = ExactMatrix.identity(params.n)
    return (eye - b).matmul((eye + b).inverse())


def orthogonal_det_minus_one(params: SkewParams, rows: tuple[int, int]) -> ExactMatrix:
    """Swap two rows of the Cayley image: orthogonal with determinant -1."""
    i, j = rows
    n = params.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"row indices out of range for n={n}: {rows}")
    if i == j:
        raise IndexError("row indices must be distinct")
    q = cayley(params)
    grid = q.row_lists()
    grid[i], grid[j] = grid[j], grid[i]
    return ExactMatrix.from_rows(grid)


def sample(spec: SpectrumSpec, params: SkewParams) -> SamplePoint:
    """Conjugate the diagonal model by the Cayley image: Q D Q^T, exact."""
    if params.n != spec.partition.n:
        raise ValueError("skew parameter size does not match the partition")
    q = cayley(params)
    a = q.matmul(spec.diagonal()).matmul(q.transpose())
    return SamplePoint.from_matrix(a)


def random_samples(lam: Partition, count: int, seed: int,
                   height: int = 10) -> list[SamplePoint]:
    """Deterministic batch of exact points on the stratum.

    Eigenvalues and skew entries are uniform rationals of bounded height;
    eigenvalue collisions are rejection-resampled.  Each index draws from its
    own derived stream, so the output is independent of evaluation order.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for index in range(count):
        rng = rng_for(seed, "sample", str(lam), index)
        eigenvalues = distinct_fractions(rng, lam.m, height)
        spec = SpectrumSpec(lam, tuple(eigenvalues))
        skew = SkewParams(lam.n, tuple(random_fraction(rng, height)
                                       for _ in range(comb(lam.n, 2))))
        out.append(sample(spec, skew))
    return out


def multiplicity_signature(a: ExactMatrix) -> Partition:
    """Eigenvalue multiplicity partition of a symmetric matrix, exactly.

    Uses the gcd chain of the characteristic polynomial; no root isolation,
    so irrational eigenvalues are handled exactly as well.
    """
    if not a.is_symmetric():
        raise NonSymmetricError("multiplicity signature needs a symmetric matrix")
    return Partition(multiplicity_partition(char_poly(a)))


def membership_exact(a: ExactMatrix, lam: Partition) -> bool:
    """True iff `a` lies on the (closed) stratum: its multiplicity partition
    coarsens `lam`."""
    mu = multiplicity_signature(a)
    return is_coarsening(mu, lam)
