"""Partition combinatorics and the closed-form stratum formulas.

A partition lambda = (l1 >= ... >= lm) of n encodes eigenvalue
multiplicities.  The three counts that drive everything downstream:

* dimension(lam) = m + C(n,2) - sum C(li,2): dimension of the stratum of
  symmetric matrices with those multiplicities.
* multinomial(lam) = n!/prod(li!): ordered block assignments; this is the
  count the distance-degree formula uses.
* count_distinct_subspaces(lam): set partitions of {1..n} with block sizes
  lam; strictly smaller than the multinomial when parts repeat.  Both counts
  are exposed on purpose — they disagree exactly where the repeated-part
  discrepancies show up, and reports quote whichever a brute-force oracle
  supports rather than silently picking one.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod

from .errors import SizeMismatchError


class Partition:
    """Weakly decreasing positive parts; constructors sort and validate."""

    __slots__ = ("parts", "n", "m")

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise ValueError("partition needs at least one part")
        if parts[-1] < 1:
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))
        object.__setattr__(self, "m", len(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(int(p) for p in text.split(","))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.m

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def has_distinct_parts(self) -> bool:
        return len(set(self.parts)) == self.m

    def part_multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out


def ambient_dimension(n: int) -> int:
    return n * (n + 1) // 2


def dimension(lam: Partition) -> int:
    """m + C(n,2) - sum C(li,2): dimension of the multiplicity stratum."""
    return lam.m + comb(lam.n, 2) - sum(comb(p, 2) for p in lam.parts)


def codimension(lam: Partition) -> int:
    return ambient_dimension(lam.n) - dimension(lam)


def multinomial(lam: Partition) -> int:
    """n! / prod(parts!)."""
    return factorial(lam.n) // prod(factorial(p) for p in lam.parts)


def count_distinct_subspaces(lam: Partition) -> int:
    """Number of set partitions of {1..n} with block-size multiset lam."""
    rep = prod(factorial(k) for k in lam.part_multiplicities().values())
    return multinomial(lam) // rep


def is_coarsening(mu: Partition, lam: Partition) -> bool:
    """True iff the parts of lam can be grouped with group sums equal to mu.

    Decided by exhaustive search over groupings; guarded to n <= 12.
    """
    if mu.n != lam.n:
        raise SizeMismatchError(f"partitions of different totals: {mu} vs {lam}")
    if lam.n > 12:
        raise SizeMismatchError("coarsening search guarded to n <= 12")
    if mu.m > lam.m:
        return False

    def can_fill(targets: tuple[int, ...], parts: tuple[int, ...]) -> bool:
        if not parts:
            return all(t == 0 for t in targets)
        part, rest = parts[0], parts[1:]
        seen = set()
        for k, t in enumerate(targets):
            if t >= part and t not in seen:
                seen.add(t)
                reduced = targets[:k] + (t - part,) + targets[k + 1:]
                if can_fill(tuple(sorted(reduced, reverse=True)), rest):
                    return True
        return False

    return can_fill(mu.parts, lam.parts)


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, largest-first lexicographic order: (n) first,
    (1,...,1) last."""
    return [Partition(t) for t in _partition_tuples(n, n)]
