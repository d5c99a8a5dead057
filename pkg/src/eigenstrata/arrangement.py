"""The diagonal restriction: a union of coordinate-repetition subspaces.

Restricting a multiplicity stratum to diagonal matrices gives the set of
points in R^n whose coordinates repeat according to the partition — a union
of linear subspaces, one per set partition of {1..n} with the prescribed
block sizes.

Two closed-form Hilbert polynomials are computed side by side:

* `derksen_hilbert`: inclusion-exclusion over the distinct subspaces
  (the transversal-arrangement formula, read as the Hilbert polynomial of
  the coordinate ring: the three-plane case (2,1) pins that reading down,
  since its ideal is the principal cubic with quotient h(t) = 3t).
* `paper_hilbert`: the same formula specialized with the ordered-assignment
  count n!/prod(parts!), which counts subspaces with multiplicity when parts
  repeat.

Neither is trusted blindly: `hilbert_function_oracle` measures the actual
dimension of the degree-t coordinate ring by evaluating all monomials at
random points spread over the subspaces and taking an exact (or 3-prime
modular) rank.  The formulas assume the subspaces intersect transversally,
which fails for most partitions — every pair of subspaces shares the full
diagonal line — so oracle disagreement is expected and is surfaced, never
suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, factorial

import numpy as np

from .errors import DegenerateError, SizeGuardError
from .matrices import ExactMatrix
from .modular import ModularMatrix, primes_for_seed
from .partitions import Partition, count_distinct_subspaces, multinomial
from .polynomials import monomials_of_degree
from .seeding import derive_seed, random_fraction, rng_for
from .unipoly import UniPolynomial

ORACLE_MONOMIAL_GUARD = 5000
_EXACT_COLUMN_LIMIT = 200


@dataclass(frozen=True)
class BlockAssignment:
    """A set partition of {1..n} into blocks with sizes given by a partition.

    Canonical form: each block sorted, blocks ordered by minimum element.
    """

    blocks: tuple

    def __post_init__(self):
        canon = tuple(sorted((tuple(sorted(b)) for b in self.blocks),
                             key=lambda b: b[0]))
        object.__setattr__(self, "blocks", canon)
        flat = [i for b in canon for i in b]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError("blocks must partition {1..n}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def sizes(self) -> Partition:
        return Partition(len(b) for b in self.blocks)

    def __str__(self):
        return "|".join("".join(str(i) for i in b) for b in self.blocks)

    def to_json(self):
        return [list(b) for b in self.blocks]


def enumerate_subspaces(lam: Partition) -> tuple[BlockAssignment, ...]:
    """All distinct set partitions of {1..n} with block sizes lam, canonical order."""
    if lam.n > 12:
        raise SizeGuardError("subspace enumeration guarded to n <= 12")
    out: list[BlockAssignment] = []

    def rec(remaining: tuple[int, ...], sizes: tuple[int, ...], acc: list):
        if not remaining:
            out.append(BlockAssignment(tuple(acc)))
            return
        anchor = remaining[0]
        rest = remaining[1:]
        seen_sizes = set()
        for k, s in enumerate(sizes):
            if s in seen_sizes:
                continue
            seen_sizes.add(s)
            next_sizes = sizes[:k] + sizes[k + 1:]
            for combo in combinations(rest, s - 1):
                block = (anchor,) + combo
                left = tuple(x for x in rest if x not in combo)
                acc.append(block)
                rec(left, next_sizes, acc)
                acc.pop()

    rec(tuple(range(1, lam.n + 1)), lam.parts, [])
    out.sort(key=lambda a: a.blocks)
    assert len(out) == count_distinct_subspaces(lam)
    return tuple(out)


# --- Hilbert polynomials ----------------------------------------------------


def binomial_poly(a: int) -> UniPolynomial:
    """C(t + a, a) as an exact polynomial in t."""
    out = UniPolynomial([Fraction(1)])
    for j in range(1, a + 1):
        out = out * UniPolynomial([Fraction(j), Fraction(1)])
    return out * Fraction(1, factorial(a))


@dataclass(frozen=True)
class HilbertPolynomial:
    """Polynomial in t plus the inclusion-exclusion terms that built it."""

    poly: UniPolynomial
    terms: tuple  # (subset_size, codim_sum, count, sign)

    def degree(self) -> int:
        return self.poly.degree()

    def evaluate(self, t: int) -> Fraction:
        return self.poly.evaluate(Fraction(t))

    def leading_coefficient(self) -> Fraction:
        return self.poly.lc() if not self.poly.is_zero() else Fraction(0)

    def coefficients(self) -> tuple:
        return self.poly.coeffs

    def __eq__(self, other):
        return isinstance(other, HilbertPolynomial) and self.poly == other.poly

    def to_text(self) -> str:
        if self.poly.is_zero():
            return "0"
        pieces = []
        for k in range(self.poly.degree(), -1, -1):
            c = self.poly.coefficient(k)
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append(("-" if c < 0 else "+", body))
        text = (pieces[0][0] if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def to_json(self):
        return {"coefficients": [str(c) for c in self.poly.coeffs],
                "text": self.to_text(),
                "terms": [{"subset_size": s, "codim_sum": c, "count": cnt, "sign": sg}
                          for (s, c, cnt, sg) in self.terms]}


def derksen_hilbert(codims, n: int) -> HilbertPolynomial:
    """Inclusion-exclusion Hilbert polynomial over nonempty subsets S with
    codim-sum < n; valid when the subspaces intersect transversally."""
    codims = list(codims)
    # ways[i][c] = number of i-element subsets with codimension sum c (< n)
    ways: dict[tuple[int, int], int] = {(0, 0): 1}
    for ci in codims:
        update = {}
        for (i, c), cnt in ways.items():
            key = (i + 1, c + ci)
            if c + ci < n:
                update[key] = update.get(key, 0) + cnt
        for key, cnt in update.items():
            ways[key] = ways.get(key, 0) + cnt
    poly = UniPolynomial([])
    terms = []
    for (i, c), cnt in sorted(ways.items()):
        if i == 0:
            continue
        sign = 1 if i % 2 == 1 else -1
        poly = poly + binomial_poly(n - 1 - c) * Fraction(sign * cnt)
        terms.append((i, c, cnt, sign))
    return HilbertPolynomial(poly=poly, terms=tuple(terms))


def paper_hilbert(lam: Partition) -> HilbertPolynomial:
    """The closed-form specialization with k = n!/prod(parts!) subspaces, all
    of codimension n-m.  Counts subspaces with multiplicity when parts repeat."""
    n, m = lam.n, lam.m
    if m >= n:
        raise DegenerateError("formula requires m < n (positive codimension)")
    k = multinomial(lam)
    c = n - m
    upper = ceil(n / c) - 1
    poly = UniPolynomial([])
    terms = []
    for i in range(1, upper + 1):
        sign = 1 if i % 2 == 1 else -1
        cnt = comb(k, i)
        poly = poly + binomial_poly(n - 1 - i * c) * Fraction(sign * cnt)
        terms.append((i, i * c, cnt, sign))
    return HilbertPolynomial(poly=poly, terms=tuple(terms))


def arrangement_points(lam: Partition, count: int, seed: int,
                       height: int = 10) -> list[tuple]:
    """Exact random points distributed across all subspaces of the arrangement."""
    subspaces = enumerate_subspaces(lam)
    per = ceil(count / len(subspaces))
    points = []
    for si, assignment in enumerate(subspaces):
        for j in range(per):
            rng = rng_for(seed, "arr-point", str(lam), si, j)
            point = [Fraction(0)] * lam.n
            for block in assignment.blocks:
                val = random_fraction(rng, height)
                for i in block:
                    point[i - 1] = val
            points.append(tuple(point))
    return points


def hilbert_function_oracle(lam: Partition, t: int, seed: int = 0,
                            mode: str = "auto") -> int:
    """Brute-force Hilbert function: rank of the degree-t monomial evaluation
    matrix at (monomial count + 20) exact points spread over the subspaces."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    ncols = comb(lam.n + t - 1, t) if t > 0 else 1
    if ncols > ORACLE_MONOMIAL_GUARD:
        raise SizeGuardError(f"{ncols} monomials exceeds the oracle guard")
    monomials = monomials_of_degree(lam.n, t)
    points = arrangement_points(lam, len(monomials) + 20,
                                derive_seed(seed, "oracle", str(lam), t))
    if mode == "auto":
        mode = "modular" if len(monomials) > _EXACT_COLUMN_LIMIT else "exact"
    if mode == "exact":
        rows = []
        for pt in points:
            vals = {(0,) * lam.n: Fraction(1)}
            row = []
            for exps in monomials:
                row.append(_monomial_value(exps, pt, vals))
            rows.append(row)
        return ExactMatrix.from_rows(rows).rank()
    primes = primes_for_seed(derive_seed(seed, "oracle-primes", str(lam), t), 3)
    best = 0
    for p in primes:
        arr = _oracle_rows_mod(points, monomials, t, p)
        best = max(best, ModularMatrix(arr, p).rank())
    return best


def _monomial_value(exps, point, memo):
    cached = memo.get(exps)
    if cached is not None:
        return cached
    k = next(i for i, e in enumerate(exps) if e)
    sub = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
    v = _monomial_value(sub, point, memo) * point[k]
    memo[exps] = v
    return v


def _oracle_rows_mod(points, monomials, degree: int, p: int) -> np.ndarray:
    from .modular import reduce_scalar
    residues = np.array([[reduce_scalar(x, p) for x in pt] for pt in points],
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


@dataclass(frozen=True)
class HilbertComparisonRow:
    t: int
    paper_value: Fraction | None
    derksen_value: Fraction
    oracle_value: int | None
    note: str = ""

    def matches(self) -> bool:
        return (self.paper_value is not None and self.oracle_value is not None
                and self.paper_value == self.derksen_value == self.oracle_value)

    def to_json(self):
        return {"t": self.t,
                "paper": None if self.paper_value is None else str(self.paper_value),
                "derksen": str(self.derksen_value),
                "oracle": self.oracle_value,
                "match": self.matches(),
                "note": self.note}


def hilbert_comparison(lam: Partition, t_values, seed: int = 0,
                       cache: dict | None = None) -> list[HilbertComparisonRow]:
    """Formula values against the brute-force oracle, degree by degree.

    `cache` maps (partition text, t) to already-computed oracle values and is
    filled in place, so repeated comparisons across commands stay cheap.
    """
    derksen = derksen_hilbert([lam.n - lam.m] * count_distinct_subspaces(lam), lam.n)
    paper = None
    if lam.m < lam.n:
        paper = paper_hilbert(lam)
    rows = []
    for t in t_values:
        key = (str(lam), t)
        note = ""
        if cache is not None and key in cache:
            oracle = cache[key]
        else:
            try:
                oracle = hilbert_function_oracle(lam, t, seed)
            except SizeGuardError as exc:
                oracle = None
                note = f"oracle skipped: {exc}"
            if cache is not None:
                cache[key] = oracle
        rows.append(HilbertComparisonRow(
            t=t,
            paper_value=None if paper is None else paper.evaluate(t),
            derksen_value=derksen.evaluate(t),
            oracle_value=oracle,
            note=note))
    return rows


@dataclass(frozen=True)
class DegreeReport:
    partition: Partition
    paper_degree: int
    geometric_degree: int | None
    validated: bool
    oracle_values: dict

    def to_json(self):
        return {"partition": str(self.partition),
                "paper_degree": self.paper_degree,
                "geometric_degree": self.geometric_degree,
                "validated": self.validated,
                "oracle_values": {str(t): v for t, v in sorted(self.oracle_values.items())}}


def arrangement_degree(lam: Partition, seed: int = 0,
                       values: dict[int, int] | None = None,
                       max_columns: int = ORACLE_MONOMIAL_GUARD) -> DegreeReport:
    """Both degree readings, labeled.

    The geometric degree is the (m-1)-th finite difference of oracle Hilbert
    function values — equal to leading coefficient times (m-1)! once the
    function has entered its polynomial range.  The base point slides upward
    (within the size guard) until the difference agrees at two consecutive
    bases; a report with validated=False means no window in range stabilized.
    The closed-form value n!/prod(parts!) is reported alongside.
    """
    n, m = lam.n, lam.m
    if m < 2:
        raise DegenerateError("degree report needs at least two blocks")
    values = dict(values or {})

    def value_at(t: int) -> int | None:
        if t not in values:
            if comb(n + t - 1, t) > max_columns:
                return None
            values[t] = hilbert_function_oracle(lam, t, seed)
        return values[t]

    def finite_difference(base: int) -> int | None:
        vals = [value_at(base + k) for k in range(m)]
        if any(v is None for v in vals):
            return None
        return sum((-1) ** (m - 1 - k) * comb(m - 1, k) * vals[k] for k in range(m))

    lead = None
    validated = False
    base = n
    previous = finite_difference(base)
    while previous is not None:
        current = finite_difference(base + 1)
        if current is None:
            lead = previous
            break
        if current == previous:
            lead = current
            validated = True
            break
        previous = current
        base += 1
    return DegreeReport(partition=lam, paper_degree=multinomial(lam),
                        geometric_degree=lead, validated=validated,
                        oracle_values=values)
