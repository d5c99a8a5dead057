"""Modular fast paths: rank, reduced echelon, CRT, rational reconstruction.

Residue matrices live in numpy int64 arrays.  The fixed prime list holds the
64 largest primes below 2**31: with p < 2**31 every product of two residues
fits in a signed 64-bit word, so the elimination inner loop is a handful of
vectorized numpy operations per pivot.  Primes for a run are selected from
the list by the run seed, making every modular computation reproducible.

A modular rank is always a lower bound on the exact rank (it can only drop
when the prime divides a pivot minor), which is why `rank_modular` reports
the maximum across its primes together with a "certified-lower-bound" tag.
In particular a full-column-rank result modulo any single prime certifies a
trivial exact nullspace outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, prod

import numpy as np

from .errors import BadPrimeError, ReconstructFailError
from .matrices import ExactMatrix

# The 64 largest primes below 2**31, largest first.  Fixed and public so that
# seeded runs are reproducible everywhere.
FIXED_PRIMES: tuple[int, ...] = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
    2147483237, 2147483179, 2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
    2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943, 2147482937, 2147482921,
    2147482877, 2147482873, 2147482867, 2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
    2147482763, 2147482739, 2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
    2147482591, 2147482583, 2147482577, 2147482507, 2147482501, 2147482481, 2147482417, 2147482409,
    2147482367, 2147482361, 2147482349, 2147482343, 2147482327, 2147482291, 2147482273, 2147482237,
)


def primes_for_seed(seed: int, count: int = 3, offset: int = 0) -> tuple[int, ...]:
    """`count` consecutive primes from the fixed list, rotated by the seed.

    `offset` advances the window (used for retries with fresh primes).
    """
    if count > len(FIXED_PRIMES):
        raise ValueError("not enough fixed primes")
    start = (seed + offset) % len(FIXED_PRIMES)
    return tuple(FIXED_PRIMES[(start + i) % len(FIXED_PRIMES)] for i in range(count))


def reduce_scalar(x: Fraction, p: int) -> int:
    den = x.denominator % p
    if den == 0:
        raise BadPrimeError(f"denominator of {x} vanishes mod {p}")
    return x.numerator % p * pow(den, p - 2, p) % p


class ModularMatrix:
    """A matrix of residues modulo a fixed prime, stored as numpy int64."""

    def __init__(self, data: np.ndarray, modulus: int):
        if modulus >= 1 << 31:
            raise ValueError("modulus too large for exact int64 arithmetic")
        self.modulus = modulus
        self.data = np.asarray(data, dtype=np.int64) % modulus

    @classmethod
    def from_exact(cls, matrix: ExactMatrix, p: int) -> "ModularMatrix":
        vals = [reduce_scalar(x, p) for x in matrix.entries]
        arr = np.array(vals, dtype=np.int64).reshape(matrix.rows, matrix.cols)
        return cls(arr, p)

    @property
    def shape(self):
        return self.data.shape

    def rank(self) -> int:
        work = self.data.copy()
        r, _, _ = _eliminate(work, self.modulus, reduce_above=False)
        return r

    def rref(self):
        """(rank, pivot columns, reduced rows) with unit pivots."""
        work = self.data.copy()
        rank, pivots, rows = _eliminate(work, self.modulus, reduce_above=True)
        return rank, pivots, rows

    def nullspace(self) -> np.ndarray:
        """Canonical kernel basis mod p: reduced echelon rows with unit pivots.

        Mirrors the exact path so bases correspond entrywise across primes.
        """
        p = self.modulus
        ncols = self.data.shape[1]
        rank, pivots, rows = self.rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(ncols) if c not in pivot_set]
        if not free_cols:
            return np.zeros((0, ncols), dtype=np.int64)
        basis = np.zeros((len(free_cols), ncols), dtype=np.int64)
        for k, f in enumerate(free_cols):
            basis[k, f] = 1
            for i, c in enumerate(pivots):
                basis[k, c] = (-int(rows[i, f])) % p
        work = basis.copy()
        _, _, reduced = _eliminate(work, p, reduce_above=True)
        return reduced


def _eliminate(a: np.ndarray, p: int, reduce_above: bool):
    """In-place Gauss(-Jordan) elimination mod p; returns (rank, pivots, rows)."""
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        block = a[r + 1:, c:]
        factors = a[r + 1:, c]
        nzb = np.nonzero(factors)[0]
        if nzb.size:
            block[nzb] = (block[nzb] - factors[nzb, None] * a[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    if reduce_above:
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            factors = a[:i, c]
            nz = np.nonzero(factors)[0]
            if nz.size:
                a[:i, c:][nz] = (a[:i, c:][nz] - factors[nz, None] * a[i, c:][None, :]) % p
    return len(pivots), pivots, a[:len(pivots)]


@dataclass(frozen=True)
class ModularRank:
    rank: int
    certificate: str
    per_prime: dict = field(default_factory=dict)


def rank_modular(matrix: ExactMatrix, primes) -> ModularRank:
    """Max rank observed across the primes; always a lower bound on the exact rank."""
    per_prime = {}
    for p in primes:
        per_prime[p] = ModularMatrix.from_exact(matrix, p).rank()
    return ModularRank(rank=max(per_prime.values()),
                       certificate="certified-lower-bound",
                       per_prime=per_prime)


def crt_combine(residues, moduli) -> int:
    """x mod prod(moduli) consistent with all residues (moduli pairwise coprime)."""
    x = 0
    modulus = 1
    for r, m in zip(residues, moduli):
        r %= m
        g = pow(modulus % m, m - 2, m) if modulus % m else None
        if modulus == 1:
            x, modulus = r, m
            continue
        if g is None:
            raise ValueError("moduli are not coprime")
        t = (r - x) % m * g % m
        x += modulus * t
        modulus *= m
    return x % modulus


def rational_reconstruct(residues, moduli) -> Fraction:
    """The unique rational p/q with |p|, q <= sqrt(M/2) matching all residues.

    Standard half-extended Euclid on (M, x); the result is verified by
    re-reducing against every residue.  Raises ReconstructFailError when no
    rational within the bound exists — the caller should add primes.
    """
    if len(residues) != len(moduli) or not moduli:
        raise ValueError("need matching residue/modulus lists")
    big_m = prod(moduli)
    x = crt_combine(residues, moduli)
    bound = isqrt(big_m // 2)
    r0, r1 = big_m, x
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    num, den = r1, t1
    if den == 0:
        raise ReconstructFailError("reconstruction denominator is zero")
    if den < 0:
        num, den = -num, -den
    if den > bound + 1:
        raise ReconstructFailError(f"no rational within bound {bound}")
    candidate = Fraction(num, den)
    for r, m in zip(residues, moduli):
        if candidate.denominator % m == 0:
            raise ReconstructFailError("denominator shares a factor with a modulus")
        if reduce_scalar(candidate, m) != r % m:
            raise ReconstructFailError("candidate fails re-reduction")
    return candidate
