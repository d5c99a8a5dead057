"""Equation discovery on multiplicity strata by exact interpolation.

The degree-d vanishing forms of a stratum are the kernel of the evaluation
matrix (samples x monomials).  Small systems run fully over the rationals;
wide systems (more than 200 monomial columns) default to the modular path:
kernels modulo three seeded primes, entrywise CRT, rational reconstruction,
and then exact re-verification of every candidate on fresh samples.  A
candidate that fails fresh-sample verification triggers one automatic retry
with new primes before the failure is surfaced — never silently dropped.

Only homogeneous forms are interpolated: the strata are cones (scaling a
symmetric matrix scales its eigenvalues and keeps multiplicities), so the
vanishing ideal is homogeneous and inhomogeneous columns would only widen
the system.

`parametrization_rank` is the differential cross-check of the dimension
formula: push one first-order jet per input coordinate (m eigenvalues and
C(n,2) skew entries) through the Cayley conjugation map and take the exact
rank of the collected derivative vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import (BadPrimeError, MixedDegreeError, NotOnVarietyError,
                     VerificationFailError)
from .matrices import ExactMatrix, kernel_basis
from .modular import FIXED_PRIMES, ModularMatrix, rational_reconstruct, reduce_scalar
from .partitions import Partition
from .polynomials import Polynomial, VariableIndexing, monomials_of_degree
from .sampling import SamplePoint, random_samples
from .scalars import JetScalar
from .seeding import derive_seed, distinct_fractions, random_fraction, rng_for

MODULAR_COLUMN_THRESHOLD = 200


@dataclass(frozen=True)
class InterpolationReport:
    partition: Partition
    degree: int
    monomial_count: int
    sample_count: int
    nullspace_dim: int
    basis: tuple
    mode: str
    seed: int

    def to_json(self) -> dict:
        return {
            "partition": str(self.partition),
            "degree": self.degree,
            "monomial_count": self.monomial_count,
            "sample_count": self.sample_count,
            "nullspace_dim": self.nullspace_dim,
            "mode": self.mode,
            "seed": self.seed,
            "basis": [f.to_json() for f in self.basis],
            "basis_text": [f.to_text(VariableIndexing(self.partition.n).names)
                           for f in self.basis],
        }


def evaluate_monomials(point, monomials) -> list[Fraction]:
    """Values of many monomials at one exact point, sharing subproducts."""
    point = list(point)
    memo: dict[tuple, Fraction] = {(0,) * len(point): Fraction(1)}

    def value(exps) -> Fraction:
        cached = memo.get(exps)
        if cached is not None:
            return cached
        k = next(i for i, e in enumerate(exps) if e)
        sub = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
        v = value(sub) * point[k]
        memo[exps] = v
        return v

    return [value(e) for e in monomials]


def _modular_evaluation_matrix(ambients, monomials, degree: int, p: int) -> np.ndarray:
    residues = np.array([[reduce_scalar(x, p) for x in amb] for amb in ambients],
                        dtype=np.int64)
    npts, nvars = residues.shape
    powers = np.ones((npts, nvars, degree + 1), dtype=np.int64)
    for e in range(1, degree + 1):
        powers[:, :, e] = powers[:, :, e - 1] * residues % p
    exps = np.array(monomials, dtype=np.int64)
    rows = np.ones((npts, len(monomials)), dtype=np.int64)
    for v in range(nvars):
        rows = rows * powers[:, v, :][:, exps[:, v]] % p
    return rows


def _modular_kernels(ambients, monomials, degree: int, primes):
    """Canonical kernel basis mod each prime; None for primes hitting a denominator."""
    kernels = []
    for p in primes:
        try:
            rows = _modular_evaluation_matrix(ambients, monomials, degree, p)
        except BadPrimeError:
            kernels.append(None)
            continue
        kernels.append(ModularMatrix(rows, p).nullspace())
    return kernels


def _lift_basis(kernels, primes, monomials, nvars: int) -> list[Polynomial]:
    shapes = {k.shape for k in kernels}
    if len(shapes) != 1:
        raise VerificationFailError(f"kernel dimensions disagree across primes: "
                                    f"{[k.shape[0] for k in kernels]}")
    dim = kernels[0].shape[0]
    if dim == 0:
        return []
    leads = [tuple(int(np.argmax(row != 0)) for row in k) for k in kernels]
    if len(set(leads)) != 1:
        raise VerificationFailError("kernel pivot structure disagrees across primes")
    polys = []
    for i in range(dim):
        coeffs = []
        for j in range(len(monomials)):
            residues = [int(k[i, j]) for k in kernels]
            if all(r == 0 for r in residues):
                coeffs.append(Fraction(0))
            else:
                coeffs.append(rational_reconstruct(residues, list(primes)))
        polys.append(Polynomial.from_coefficients(monomials, coeffs, nvars))
    return polys


def _select_primes(seed: int, count: int, attempt: int, ambients) -> tuple[int, ...]:
    """Seeded primes, skipping any that divides a sample denominator."""
    start = derive_seed(seed, "primes") % len(FIXED_PRIMES) + attempt * count
    chosen = []
    k = 0
    while len(chosen) < count:
        if k >= len(FIXED_PRIMES):
            raise BadPrimeError("exhausted the fixed prime list")
        p = FIXED_PRIMES[(start + k) % len(FIXED_PRIMES)]
        k += 1
        if any(x.denominator % p == 0 for amb in ambients for x in amb):
            continue
        chosen.append(p)
    return tuple(chosen)


def vanishing_forms(lam: Partition, degree: int, seed: int, mode: str = "auto",
                    height: int = 10, margin: int = 20, verify_count: int = 20,
                    prime_count: int = 3) -> InterpolationReport:
    """Canonical basis of the homogeneous degree-d forms vanishing on the stratum."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    indexing = VariableIndexing(lam.n)
    monomials = monomials_of_degree(indexing.count, degree)
    ncols = len(monomials)
    if mode == "auto":
        mode = "modular" if ncols > MODULAR_COLUMN_THRESHOLD else "exact"
    if mode not in ("exact", "modular"):
        raise ValueError(f"unknown mode {mode!r}")
    sample_count = ncols + margin

    failure = None
    for attempt in range(2):
        samples = random_samples(lam, sample_count,
                                 derive_seed(seed, "interp", degree, attempt), height)
        ambients = [s.ambient for s in samples]
        if mode == "exact":
            rows = [evaluate_monomials(a, monomials) for a in ambients]
            vectors = kernel_basis(ExactMatrix.from_rows(rows))
            basis = [Polynomial.from_coefficients(monomials, v, indexing.count)
                     for v in vectors]
            mode_label = "exact"
        else:
            try:
                primes = _select_primes(seed, prime_count, attempt, ambients)
                kernels = _modular_kernels(ambients, monomials, degree, primes)
                live = [(k, p) for k, p in zip(kernels, primes) if k is not None]
                if len(live) < len(primes):
                    raise VerificationFailError("a prime hit a sample denominator")
                basis = _lift_basis([k for k, _ in live], [p for _, p in live],
                                    monomials, indexing.count)
            except VerificationFailError as exc:
                failure = exc
                continue
            mode_label = "modular+reconstructed"

        fresh = random_samples(lam, verify_count,
                               derive_seed(seed, "verify", degree, attempt), height)
        bad = _first_verification_failure(basis, fresh)
        if bad is None:
            return InterpolationReport(
                partition=lam, degree=degree, monomial_count=ncols,
                sample_count=sample_count, nullspace_dim=len(basis),
                basis=tuple(basis), mode=mode_label, seed=seed)
        failure = VerificationFailError(
            f"basis polynomial #{bad[0]} fails on a fresh sample: "
            f"value {bad[1]} at {bad[2].to_json()}")
    raise failure


def _first_verification_failure(basis, samples):
    for i, f in enumerate(basis):
        for s in samples:
            val = f.evaluate(s.ambient)
            if val != 0:
                return i, val, s
    return None


def span_equals(basis_a, basis_b) -> bool:
    """True iff two families of forms span the same coefficient row space."""
    basis_a, basis_b = list(basis_a), list(basis_b)
    if not basis_a and not basis_b:
        return True
    degrees = {f.degree() for f in basis_a + basis_b if f}
    if len(degrees) != 1 or any(not f.is_homogeneous() for f in basis_a + basis_b):
        raise MixedDegreeError("span comparison needs homogeneous forms of one degree")
    nvars = {f.nvars for f in basis_a + basis_b}
    if len(nvars) != 1:
        raise MixedDegreeError("span comparison needs a common ambient space")
    (nv,), (d,) = nvars, degrees
    monomials = monomials_of_degree(nv, d)

    def coeff_rows(basis):
        return [[f.terms.get(e, Fraction(0)) for e in monomials] for f in basis]

    rows_a, rows_b = coeff_rows(basis_a), coeff_rows(basis_b)

    def rank_of(rows):
        return ExactMatrix.from_rows(rows).rank() if rows else 0

    ra, rb = rank_of(rows_a), rank_of(rows_b)
    rab = rank_of(rows_a + rows_b)
    return ra == rb == rab


def jacobian_codim(basis, point: SamplePoint) -> int:
    """Exact rank of the Jacobian of the forms at an on-stratum point."""
    basis = list(basis)
    if not basis:
        return 0
    nvars = basis[0].nvars
    for i, f in enumerate(basis):
        if f.evaluate(point.ambient) != 0:
            raise NotOnVarietyError(f"form #{i} does not vanish at the point")
    rows = [[f.partial(k).evaluate(point.ambient) for k in range(nvars)] for f in basis]
    return ExactMatrix.from_rows(rows).rank()


# --- differential of the parametrization (first-order jets) ---------------


def _jet_identity(n: int):
    one = JetScalar(Fraction(1))
    zero = JetScalar(Fraction(0))
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _jet_matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = JetScalar(Fraction(0))
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _jet_inverse(a):
    n = len(a)
    aug = [list(row) + list(idr) for row, idr in zip(a, _jet_identity(n))]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c].value != 0), None)
        if piv is None:
            raise ZeroDivisionError("jet matrix is not invertible")
        if piv != c:
            aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].reciprocal()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _jet_parametrization(lam: Partition, eigen_jets, skew_jets):
    """Q D Q^T over the jet ring; returns the upper-triangle jet entries."""
    n = lam.n
    zero = JetScalar(Fraction(0))
    b = [[zero] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = skew_jets[k]
            b[j][i] = -skew_jets[k]
            k += 1
    eye = _jet_identity(n)
    i_minus = [[eye[i][j] - b[i][j] for j in range(n)] for i in range(n)]
    i_plus = [[eye[i][j] + b[i][j] for j in range(n)] for i in range(n)]
    q = _jet_matmul(i_minus, _jet_inverse(i_plus))
    diag = []
    for mult, mu in zip(lam.parts, eigen_jets):
        diag.extend([mu] * mult)
    qd = [[q[i][j] * diag[j] for j in range(n)] for i in range(n)]
    qt = [[q[j][i] for j in range(n)] for i in range(n)]
    a = _jet_matmul(qd, qt)
    return [a[i][j] for i in range(n) for j in range(i, n)]


def parametrization_rank(lam: Partition, seed: int, height: int = 10) -> int:
    """Exact rank of the differential of the Cayley conjugation map at a
    seeded random parameter point; equals the stratum dimension generically."""
    n, m = lam.n, lam.m
    rng = rng_for(seed, "jet-point", str(lam))
    eigenvalues = distinct_fractions(rng, m, height)
    skew = [random_fraction(rng, height) for _ in range(comb(n, 2))]
    inputs = len(eigenvalues) + len(skew)
    rows = []
    for t in range(inputs):
        eigen_jets = [JetScalar.variable(v, 1 if t == i else 0)
                      for i, v in enumerate(eigenvalues)]
        skew_jets = [JetScalar.variable(v, 1 if t == m + j else 0)
                     for j, v in enumerate(skew)]
        jets = _jet_parametrization(lam, eigen_jets, skew_jets)
        rows.append([j.deriv for j in jets])
    return ExactMatrix.from_rows(rows).rank()
