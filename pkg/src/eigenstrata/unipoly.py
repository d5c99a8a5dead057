"""Univariate polynomials, characteristic polynomials, subdiscriminants.

Coefficients are either exact rationals or multivariate `Polynomial` values
(for the characteristic polynomial of the generic symmetric matrix); the
arithmetic here only assumes ring operations plus exact division, so both
cases share one code path.

Subdiscriminants are the principal subresultant coefficients of (p, p'),
computed as explicit minors of the Sylvester block matrix and normalized by
the sign (-1)^((n-k)(n-k-1)/2) so that the 0-th one is the classical
discriminant of a monic polynomial.  Only the vanishing pattern is consumed
downstream (a degree-n real-rooted polynomial has exactly n-k distinct roots
iff entries 0..k-1 vanish and entry k does not), so the scaling is a
recorded convention, not load-bearing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonSquareError, NotMonicError, SizeError
from .matrices import ExactMatrix
from .polynomials import Polynomial, VariableIndexing

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UniPolynomial:
    """Dense univariate polynomial; coeffs[k] multiplies x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPolynomial is immutable")

    @classmethod
    def from_roots(cls, roots) -> "UniPolynomial":
        out = cls([_ONE])
        for r in roots:
            out = out * cls([-Fraction(r), _ONE])
        return out

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        if not self.coeffs:
            return False
        lead = self.coeffs[-1]
        if isinstance(lead, Polynomial):
            return lead == Polynomial.constant(lead.nvars, 1)
        return lead == 1

    def __eq__(self, other):
        return isinstance(other, UniPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for k, c in enumerate(b):
            merged[k] = merged[k] + c
        return UniPolynomial(merged)

    def __neg__(self):
        return UniPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPolynomial):
            return UniPolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPolynomial([])
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                prod = a * b
                out[i + j] = prod if out[i + j] is None else out[i + j] + prod
        return UniPolynomial([c if c is not None else _ZERO for c in out])

    __rmul__ = __mul__

    def derivative(self) -> "UniPolynomial":
        return UniPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return _ZERO
        return acc

    def evaluate_matrix(self, a: ExactMatrix) -> ExactMatrix:
        if a.rows != a.cols:
            raise NonSquareError("matrix evaluation needs a square matrix")
        eye = ExactMatrix.identity(a.rows)
        acc = ExactMatrix.zeros(a.rows, a.cols)
        for c in reversed(self.coeffs):
            acc = acc.matmul(a) + eye.scale(c)
        return acc

    # Rational-coefficient helpers (Euclidean structure).

    def monic(self) -> "UniPolynomial":
        lead = self.lc()
        return UniPolynomial([c / lead for c in self.coeffs])

    def divmod(self, other: "UniPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dn = other.degree()
        lead = other.lc()
        quo = [_ZERO] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and any(rem):
            k = len(rem) - 1
            if not rem[k]:
                rem.pop()
                continue
            f = rem[k] / lead
            quo[k - dn] = f
            for i, c in enumerate(other.coeffs):
                rem[k - dn + i] -= f * c
            rem.pop()
        return UniPolynomial(quo), UniPolynomial(rem)

    def mod(self, other: "UniPolynomial") -> "UniPolynomial":
        return self.divmod(other)[1]

    def __repr__(self):
        if not self.coeffs:
            return "UniPolynomial(0)"
        parts = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "UniPolynomial(" + " + ".join(parts) + ")"


def poly_gcd(a: UniPolynomial, b: UniPolynomial) -> UniPolynomial:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, a.mod(b)
    if a.is_zero():
        return a
    return a.monic()


def multiplicity_partition(p: UniPolynomial) -> list[int]:
    """Root-multiplicity multiset of p (over the algebraic closure), sorted desc.

    Derived from the degrees of the iterated gcd chain p, gcd(p, p'), ...;
    exact over the rationals, no root isolation.
    """
    if p.degree() < 1:
        return []
    chain_degrees = []
    q = p.monic()
    while q.degree() > 0:
        chain_degrees.append(q.degree())
        q = poly_gcd(q, q.derivative())
    chain_degrees.append(0)
    # counts[k] = number of distinct roots with multiplicity >= k+1
    counts = [chain_degrees[k] - chain_degrees[k + 1] for k in range(len(chain_degrees) - 1)]
    mults: list[int] = []
    for e in range(len(counts), 0, -1):
        exactly = counts[e - 1] - (counts[e] if e < len(counts) else 0)
        mults.extend([e] * exactly)
    return mults


# --- characteristic polynomials -------------------------------------------


def char_poly(a: ExactMatrix) -> UniPolynomial:
    """det(xI - A), monic of degree n, exact (Faddeev-LeVerrier)."""
    if a.rows != a.cols:
        raise NonSquareError("characteristic polynomial needs a square matrix")
    grid = a.row_lists()
    one = _ONE
    return _char_poly_grid(grid, one)


def symmetric_char_poly(n: int) -> UniPolynomial:
    """char poly of the generic symmetric n x n matrix; coefficients are
    polynomials in the upper-triangle variables x_ij."""
    indexing = VariableIndexing(n)
    nv = indexing.count
    grid = [[Polynomial.variable(nv, indexing.index_of(i + 1, j + 1))
             for j in range(n)] for i in range(n)]
    return _char_poly_grid(grid, Polynomial.constant(nv, 1))


def _char_poly_grid(grid, one) -> UniPolynomial:
    n = len(grid)
    zero = one - one
    coeffs = [zero] * n + [one]          # coeffs[n-k] accumulates c_k

    def mat_mul(x, y):
        return [[sum((x[i][t] * y[t][j] for t in range(n)),
                     start=zero) for j in range(n)] for i in range(n)]

    def add_scalar_diag(x, s):
        return [[x[i][j] + s if i == j else x[i][j] for j in range(n)] for i in range(n)]

    m = grid
    c = sum((m[i][i] for i in range(n)), start=zero) * Fraction(-1)
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        m = mat_mul(grid, add_scalar_diag(m, c))
        trace = sum((m[i][i] for i in range(n)), start=zero)
        c = trace * Fraction(-1, k)
        coeffs[n - k] = c
    return UniPolynomial(coeffs)


# --- subresultants and discriminants ---------------------------------------


def _exact_div(a, b):
    if isinstance(a, Polynomial):
        return a.exact_div(b)
    return a / b


def _generic_bareiss_det(grid, zero, one):
    """Determinant over any ring with exact division (Bareiss elimination)."""
    n = len(grid)
    if n == 0:
        return one
    rows = [list(r) for r in grid]
    prev = one
    sign = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        pv = rows[c][c]
        for i in range(c + 1, n):
            vi = rows[i][c]
            for j in range(c + 1, n):
                num = pv * rows[i][j] - vi * rows[c][j]
                rows[i][j] = _exact_div(num, prev)
            rows[i][c] = zero
        prev = pv
    det = rows[n - 1][n - 1]
    return det if sign > 0 else det * Fraction(-1)


def principal_subresultant(p: UniPolynomial, q: UniPolynomial, j: int):
    """j-th principal subresultant coefficient of (p, q), deg p > deg q >= 0.

    Determinant of the square block of rows x^(m-1-j)p..p, x^(n-1-j)q..q over
    the columns for degrees n+m-1-j down to j.
    """
    n, m = p.degree(), q.degree()
    if not 0 <= j <= m:
        raise ValueError("subresultant index out of range")
    size = n + m - 2 * j
    top_degree = n + m - 1 - j
    sample = p.coeffs[-1]
    if isinstance(sample, Polynomial):
        one = Polynomial.constant(sample.nvars, 1)
    else:
        one = _ONE
    zero = one - one

    def coeff_row(poly, shift):
        # row of x^shift * poly over degrees top_degree..top_degree-size+1
        return [poly.coefficient(d - shift) if d - shift >= 0 else zero
                for d in range(top_degree, top_degree - size, -1)]

    rows = [coeff_row(p, s) for s in range(m - 1 - j, -1, -1)]
    rows += [coeff_row(q, s) for s in range(n - 1 - j, -1, -1)]
    if isinstance(sample, Polynomial):
        return _generic_bareiss_det(rows, zero, one)
    return ExactMatrix.from_rows(rows).det()


def subdiscriminants(p: UniPolynomial):
    """(sDisc_0, ..., sDisc_{n-1}) for monic p of degree n >= 1.

    sDisc_k = (-1)^((n-k)(n-k-1)/2) * sres_k(p, p'); sDisc_0 is the classical
    discriminant.  For a real-rooted p there are exactly n-k distinct roots
    iff sDisc_0..sDisc_{k-1} all vanish and sDisc_k does not.
    """
    if p.degree() < 1:
        raise NotMonicError("need degree >= 1")
    if not p.is_monic():
        raise NotMonicError("subdiscriminants require a monic polynomial")
    n = p.degree()
    dp = p.derivative()
    out = []
    for k in range(n):
        d = n - k
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        if k == n - 1:
            # 1x1 block: leading coefficient of p', which is n for monic p
            val = dp.lc()
        else:
            val = principal_subresultant(p, dp, k)
        out.append(val * Fraction(sign))
    return tuple(out)


def discriminant(p: UniPolynomial):
    """Classical discriminant of a monic polynomial (= sDisc_0)."""
    if not p.is_monic():
        raise NotMonicError("discriminant convention requires a monic polynomial")
    n = p.degree()
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return principal_subresultant(p, p.derivative(), 0) * Fraction(sign)


def matrix_discriminant_symbolic(n: int) -> Polynomial:
    """Discriminant of the generic symmetric n x n matrix as a polynomial in
    the entries x_ij.  Vanishes exactly on matrices with a repeated eigenvalue
    and is nonnegative on all real symmetric points.

    Guarded to n <= 4: the expansion grows quickly (n = 4 already takes a
    while), and larger sizes are out of contract.
    """
    if n not in (2, 3, 4):
        raise SizeError("symbolic matrix discriminant supports n in {2, 3, 4}")
    return discriminant(symmetric_char_poly(n))
