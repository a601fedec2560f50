"""One-dimensional marginals: subsets of Z_n counted by incidences at one distance.

``a(n, k; i, x)`` is the number of k-subsets of Z_n with exactly ``x`` raw
incidences at distance ``i``. Every count is an exact Python int.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import binom_conv
from .orbits import orbit_count


@dataclass(frozen=True)
class MarginalTable:
    n: int
    k: int
    i: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "i": self.i, "counts": [str(c) for c in self.counts]}


@dataclass(frozen=True)
class OrbitRefinement:
    n: int
    k: int
    i: int
    b: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.b)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "i": self.i, "b": [str(c) for c in self.b]}


@dataclass(frozen=True)
class ModeAnalysis:
    n: int
    k: int
    peak_r: int
    ratios: tuple[Fraction, ...]  # ratios[r-1] = p_{r+1} / p_r, r = 1..k-1
    ties: tuple[int, ...]  # r with p_r == p_{r+1}

    @property
    def peak_x(self) -> int:
        return self.k - self.peak_r


def _check_coprime_domain(n: int, k: int) -> None:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= k or 2 * k > n:
        raise ValueError(f"k must satisfy 1 <= k <= n/2, got k={k}, n={n}")


def _runs_count(n: int, k: int, x: int) -> int:
    """Cyclic k-subsets of Z_n with ``k - x`` runs of ones, for 0 < k < n."""
    r = k - x
    if r <= 0:
        return 0
    num = n * binom_conv(k - 1, r - 1) * binom_conv(n - k - 1, r - 1)
    q, rem = divmod(num, r)
    if rem:
        raise ArithmeticError(f"non-integral marginal at n={n}, k={k}, x={x}")
    return q


@lru_cache(maxsize=None)
def cycle_distribution(v: int, k: int) -> tuple[int, ...]:
    """Counts of k-subsets of a v-cycle by distance-1 incidences, x = 0..k.

    Valid for every 0 <= k <= v. The empty subset contributes a single way with
    zero incidences, and the full cycle has v incidences.
    """
    if v < 1 or not 0 <= k <= v:
        raise ValueError(f"invalid cycle parameters v={v}, k={k}")
    if k == 0:
        return (1,)
    if k == v:
        return (0,) * k + (1,)
    return tuple(_runs_count(v, k, x) for x in range(k + 1))


def marginal_coprime(n: int, k: int, x: int) -> int:
    _check_coprime_domain(n, k)
    if not 0 <= x <= k:
        raise ValueError(f"x must satisfy 0 <= x <= k, got {x}")
    return _runs_count(n, k, x)


@lru_cache(maxsize=None)
def _divisor_table(n: int, k: int, i: int) -> tuple[int, ...]:
    v = n // i
    # poly[kk][xx]: ways to place kk ones among the cycles so far with xx incidences
    base = [list(cycle_distribution(v, kk)) for kk in range(min(v, k) + 1)]
    poly: list[list[int]] = [[1]]
    for _ in range(i):
        nxt = [[0] * (kk + 1) for kk in range(min(len(poly) - 1 + v, k) + 1)]
        for k1, row1 in enumerate(poly):
            for k2, row2 in enumerate(base):
                if k1 + k2 > k:
                    break
                out = nxt[k1 + k2]
                for x1, c1 in enumerate(row1):
                    if not c1:
                        continue
                    for x2, c2 in enumerate(row2):
                        if c2:
                            out[x1 + x2] += c1 * c2
        poly = nxt
    if len(poly) <= k:
        raise ValueError(f"k={k} exceeds n={n}")
    return tuple(poly[k])


def marginal_divisor(n: int, k: int, i: int, x: int) -> int:
    """Count via the ``i`` interleaved cycles of length ``n/i``."""
    if i <= 1 or n % i:
        raise ValueError(f"i must be a divisor of n greater than 1, got i={i}, n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got {k}")
    if not 0 <= x <= k:
        raise ValueError(f"x must satisfy 0 <= x <= k, got {x}")
    return _divisor_table(n, k, i)[x]


def _check_marginal_domain(n: int, k: int, i: int) -> None:
    _check_coprime_domain(n, k)
    if not 1 <= i <= n // 2:
        raise ValueError(f"i must satisfy 1 <= i <= n//2, got i={i}, n={n}")


def marginal_counts(n: int, k: int, i: int) -> tuple[int, ...]:
    _check_marginal_domain(n, k, i)
    g = math.gcd(i, n)
    if g == 1:
        return tuple(_runs_count(n, k, x) for x in range(k + 1))
    # Shift by i splits Z_n into g cycles of length n/g, each generated by i.
    return _divisor_table(n, k, g)


def marginal(n: int, k: int, i: int, x: int) -> int:
    counts = marginal_counts(n, k, i)
    if not 0 <= x <= k:
        raise ValueError(f"x must satisfy 0 <= x <= k, got {x}")
    return counts[x]


def marginal_table(n: int, k: int, i: int) -> MarginalTable:
    return MarginalTable(n, k, i, marginal_counts(n, k, i))


def orbit_refinement(n: int, k: int, i: int) -> OrbitRefinement:
    """Orbit counts ``b[x]`` for x = 0..k-1.

    With gcd(n, k) = 1 no orbit has all k ones paired at one distance, so the
    x = k entry of the marginal is always zero and is left out.
    """
    if math.gcd(n, k) != 1:
        raise ValueError(f"orbit refinement requires gcd(n, k) = 1, got gcd({n}, {k}) = {math.gcd(n, k)}")
    counts = marginal_counts(n, k, i)
    assert counts[k] == 0
    b = []
    for c in counts[:k]:
        q, rem = divmod(c, n)
        if rem:
            raise ArithmeticError(f"count {c} not divisible by n={n}")
        b.append(q)
    return OrbitRefinement(n, k, i, tuple(b))


def narayana(k: int, x: int) -> int:
    if k < 1 or not 0 <= x <= k - 1:
        raise ValueError(f"narayana needs k >= 1 and 0 <= x <= k-1, got k={k}, x={x}")
    n = 2 * k + 1
    q, rem = divmod(marginal_coprime(n, k, x), n)
    assert rem == 0
    return q


def catalan_orbit(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"catalan_orbit needs odd n >= 3, got {n}")
    return orbit_count(n, (n - 1) // 2)


def mode_analysis(n: int, k: int) -> ModeAnalysis:
    """Locate the mode of the coprime-distance marginal in terms of runs r = k - x.

    The ratio sequence is decreasing in r, so the peak sits one past the last
    ratio that is at least 1. Ratios exactly equal to 1 are reported as ties.
    """
    _check_coprime_domain(n, k)
    ratios = tuple(Fraction((k - r) * (n - k - r), r * (r + 1)) for r in range(1, k))
    rising = sum(1 for q in ratios if q >= 1)
    ties = tuple(r for r, q in enumerate(ratios, start=1) if q == 1)
    return ModeAnalysis(n, k, 1 + rising, ratios, ties)
