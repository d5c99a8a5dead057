"""Sparse multivariate polynomials over exact rationals.

Variables are the upper-triangle entries x_ij (i <= j, row-major) of a
symmetric n x n matrix; `VariableIndexing` fixes the bijection between
(i, j) pairs and ambient coordinates.  Terms are kept in a dict keyed by
exponent tuples; display and canonical listings use graded-lex order with
the largest term first, which matches the layout of the shipped generator
files, so text comparison works after canonicalization.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError
from .scalars import as_fraction, format_scalar

_ZERO = Fraction(0)
_ONE = Fraction(1)


class VariableIndexing:
    """Bijection between positions 0..N-1 and pairs (i, j), 1 <= i <= j <= n."""

    __slots__ = ("n", "count", "pairs", "names", "_index")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("matrix size must be positive")
        if n > 9:
            raise ValueError("variable names xij are single-digit indexed; n <= 9")
        pairs = tuple((i, j) for i in range(1, n + 1) for j in range(i, n + 1))
        self.n = n
        self.pairs = pairs
        self.count = len(pairs)
        self.names = tuple(f"x{i}{j}" for i, j in pairs)
        self._index = {pair: k for k, pair in enumerate(pairs)}

    def index_of(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self._index[(i, j)]

    def __eq__(self, other):
        return isinstance(other, VariableIndexing) and self.n == other.n

    def __repr__(self):
        return f"VariableIndexing(n={self.n})"


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree `degree`, graded-lex order.

    Within the fixed degree this is descending lex: x1^d first, xN^d last.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining, -1, -1):
            prefix.append(e)
            rec(prefix, remaining - e, slots - 1)
            prefix.pop()

    if nvars == 0:
        return [()] if degree == 0 else []
    rec([], degree, nvars)
    return out


def grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial; terms map exponent tuples to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise DimensionError("exponent tuple has wrong length")
                coeff = as_fraction(coeff)
                if coeff:
                    acc = clean.get(exps, _ZERO) + coeff
                    if acc:
                        clean[exps] = acc
                    elif exps in clean:
                        del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # --- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: as_fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): _ONE})

    @classmethod
    def from_coefficients(cls, monomials, coeffs, nvars: int) -> "Polynomial":
        return cls(nvars, zip(monomials, coeffs))

    # --- ring operations --------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        other = self._coerce(other)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            acc = merged.get(e, _ZERO) + c
            if acc:
                merged[e] = acc
            elif e in merged:
                del merged[e]
        return self._raw(self.nvars, merged)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return self._raw(self.nvars, {e: c * v for e, v in self.terms.items()})
        if self.nvars != other.nvars:
            raise DimensionError("variable count mismatch")
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, _ZERO) + c1 * c2
                if acc:
                    out[e] = acc
                elif e in out:
                    del out[e]
        return self._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "terms", terms)
        return obj

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError("variable count mismatch")
            return other
        return Polynomial.constant(self.nvars, other)

    # --- queries ----------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def evaluate(self, point) -> Fraction:
        point = list(point)
        if len(point) != self.nvars:
            raise DimensionError(f"point has {len(point)} coordinates, need {self.nvars}")
        total = _ZERO
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, exps):
                if e:
                    val *= x ** e
            total += val
        return total

    def partial(self, index: int) -> "Polynomial":
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e:
                new = list(exps)
                new[index] = e - 1
                out[tuple(new)] = coeff * e
        return self._raw(self.nvars, out)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient when `divisor` divides exactly; used by fraction-free pivots."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return Polynomial.zero(self.nvars)
        lead_e, lead_c = divisor.leading()
        rem = dict(self.terms)
        quo: dict[tuple[int, ...], Fraction] = {}
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in qe):
                raise ArithmeticError("polynomial division is not exact")
            qc = c / lead_c
            quo[qe] = quo.get(qe, _ZERO) + qc
            for de, dc in divisor.terms.items():
                te = tuple(a + b for a, b in zip(qe, de))
                acc = rem.get(te, _ZERO) - qc * dc
                if acc:
                    rem[te] = acc
                elif te in rem:
                    del rem[te]
        return self._raw(self.nvars, {e: c for e, c in quo.items() if c})

    # --- text and JSON ------------------------------------------------------

    def to_text(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{k}" for k in range(self.nvars)]
        pieces = []
        for exps, coeff in self.sorted_terms():
            vars_part = "*".join(
                f"{names[k]}^{e}" if e > 1 else names[k]
                for k, e in enumerate(exps) if e
            )
            mag = abs(coeff)
            if not vars_part:
                body = format_scalar(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{format_scalar(mag)}*{vars_part}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    @classmethod
    def from_text(cls, text: str, indexing: VariableIndexing) -> "Polynomial":
        """Parse a signed monomial sum like "-x12*x34+x13*x24" or "3/2*x11^2"."""
        name_to_idx = {name: k for k, name in enumerate(indexing.names)}
        s = "".join(text.split())
        if not s or s == "0":
            return cls.zero(indexing.count)
        terms: list[tuple[tuple[int, ...], Fraction]] = []
        i = 0
        while i < len(s):
            sign = 1
            while i < len(s) and s[i] in "+-":
                if s[i] == "-":
                    sign = -sign
                i += 1
            j = i
            while j < len(s) and s[j] not in "+-":
                j += 1
            factors = s[i:j].split("*")
            coeff = Fraction(sign)
            exps = [0] * indexing.count
            for k, factor in enumerate(factors):
                if not factor:
                    raise ValueError(f"empty factor in term {s[i:j]!r}")
                if factor[0] == "x":
                    name, _, power = factor.partition("^")
                    if name not in name_to_idx:
                        raise ValueError(f"unknown variable {name!r}")
                    exps[name_to_idx[name]] += int(power) if power else 1
                else:
                    # numeric factor; "3/2" may arrive split as "3/2" only when
                    # written without '*' around '/', which Fraction handles.
                    coeff *= Fraction(factor)
            terms.append((tuple(exps), coeff))
            i = j
        return cls(indexing.count, terms)

    def to_json(self) -> dict:
        return {
            "n": self.nvars,
            "terms": [
                {"coeff": format_scalar(c), "exps": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        nvars = int(obj["n"])
        return cls(nvars, [(tuple(t["exps"]), Fraction(t["coeff"])) for t in obj["terms"]])

    def __repr__(self):
        return f"Polynomial({self.to_text()})"
