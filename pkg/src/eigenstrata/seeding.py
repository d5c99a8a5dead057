"""Deterministic random streams.

Every random choice in the package flows from a single integer seed through
`rng_for`.  Sub-streams are derived by string tags, so independent pipeline
stages (sample generation, verification samples, oracle points per degree)
get independent but reproducible streams, and per-index derivation makes
results independent of evaluation order.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction


def derive_seed(seed: int, *tags) -> int:
    """A fixed splitting rule: child seeds for independent pipeline stages."""
    key = ":".join([str(seed)] + [str(t) for t in tags])
    digest = hashlib.sha256(key.encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def rng_for(seed: int, *tags) -> random.Random:
    """Random stream derived from `seed` and a tuple of tags.

    Seeding with a string is stable across platforms and Python versions
    (CPython hashes the string with sha512), unlike `hash()`-based schemes.
    """
    key = ":".join([str(seed)] + [str(t) for t in tags])
    return random.Random(key)


def random_fraction(rng: random.Random, height: int = 10) -> Fraction:
    """Uniform numerator in [-height, height], denominator in [1, height]."""
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_nonzero_fraction(rng: random.Random, height: int = 10) -> Fraction:
    while True:
        x = random_fraction(rng, height)
        if x != 0:
            return x


def distinct_fractions(rng: random.Random, count: int, height: int = 10) -> list[Fraction]:
    """Rejection-sample `count` pairwise distinct rationals of bounded height."""
    out: list[Fraction] = []
    while len(out) < count:
        x = random_fraction(rng, height)
        if x not in out:
            out.append(x)
    return out
