"""Exact counting, enumeration, and uniform sampling of compositions.

A weak composition of n into k is an ordered k-tuple of non-negative
integers summing to n; a (positive) composition requires every part to
be at least 1. Compositions are represented as plain int tuples. All
counts are exact arbitrary-precision integers.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterator

from .caps import check_cap


def count_weak(n: int, k: int) -> int:
    """Number of weak compositions of n into k parts: C(n+k-1, k-1)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k == 0:
        return 1 if n == 0 else 0
    return math.comb(n + k - 1, k - 1)


def count_positive(n: int, k: int) -> int:
    """Number of compositions of n into k positive parts: C(n-1, k-1)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    return math.comb(n - 1, k - 1)


def _weak(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _weak(n - first, k - 1):
            yield (first,) + rest


def _positive(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _positive(n - first, k - 1):
            yield (first,) + rest


def enumerate_weak(n: int, k: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """All weak compositions of n into k, in lexicographic order."""
    check_cap(count_weak(n, k), cap)
    return _weak(n, k)


def enumerate_positive(
    n: int, k: int, cap: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All positive compositions of n into k, in lexicographic order."""
    check_cap(count_positive(n, k), cap)
    return _positive(n, k)


def sample_weak(n: int, k: int, rng: random.Random) -> tuple[int, ...]:
    """Uniformly random weak composition of n into k parts.

    Stars and bars: a uniform (k-1)-subset of the n+k-1 positions marks
    the bars, so every outcome has probability exactly 1/C(n+k-1, k-1).
    """
    if k == 0:
        if n != 0:
            raise ValueError("no weak composition of n > 0 into 0 parts")
        return ()
    bars = sorted(rng.sample(range(n + k - 1), k - 1))
    blocks = []
    previous = -1
    for bar in bars:
        blocks.append(bar - previous - 1)
        previous = bar
    blocks.append(n + k - 1 - previous - 1)
    return tuple(blocks)


def sample_positive(n: int, k: int, rng: random.Random) -> tuple[int, ...]:
    """Uniformly random composition of n into k positive parts."""
    if k == 0:
        if n != 0:
            raise ValueError("no composition of n > 0 into 0 parts")
        return ()
    if k > n:
        raise ValueError(f"no composition of {n} into {k} positive parts")
    cuts = sorted(rng.sample(range(1, n), k - 1))
    bounds = [0] + cuts + [n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(k))


def exact_short_block_proportion(
    n: int, k: int, f: int, cap: int | None = None
) -> Fraction:
    """Exact proportion of weak compositions of n into k with some block <= f.

    Computed by exhaustive enumeration; intended as the ground truth that
    :func:`short_block_proportion_bound` must dominate.
    """
    total = count_weak(n, k)
    if total == 0:
        raise ValueError(f"no weak compositions of {n} into {k}")
    check_cap(total, cap)
    hits = sum(1 for blocks in _weak(n, k) if min(blocks) <= f)
    return Fraction(hits, total)


def short_block_proportion_bound(n: int, k: int, f: int) -> Fraction:
    """Upper bound on the proportion of weak compositions of n into k
    featuring a block of size f or less, clipped at 1.

    Every such composition refines a weak composition into k-1 parts by
    inserting the short block, in one of k slots with f+1 possible sizes,
    so at most k*(f+1)*C'_{k-1}(n) of the C'_k(n) compositions qualify.
    """
    if k < 2:
        raise ValueError("the short-block bound requires at least 2 parts")
    if f < 0:
        return Fraction(0)
    bound = Fraction(k * (f + 1) * count_weak(n, k - 1), count_weak(n, k))
    return min(bound, Fraction(1))
