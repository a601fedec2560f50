"""Brute-force ground truth: every k-subset of Z_n binned by its full profile.

Subsets are machine-word bitmasks visited in increasing numeric order
(colexicographic order of the subsets). The rank space is cut into contiguous
chunks, each unranked independently and scanned by a compiled kernel, so
chunks can run on separate threads and merge by addition.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numba
import numpy as np

from .bivariate import JointCount
from .core import AutocorrProfile

DEFAULT_CEILING = 28
CHUNK = 1 << 21


class CeilingExceeded(ValueError):
    pass


@dataclass(frozen=True)
class JointProfileDistribution:
    n: int
    k: int
    bins: dict[tuple[int, ...], int]  # raw sigma tuple -> number of subsets

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def total(self) -> int:
        return sum(self.bins.values())

    def profiles(self) -> list[AutocorrProfile]:
        return [AutocorrProfile(self.n, self.k, s) for s in sorted(self.bins)]

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps({"sigma": list(s), "count": str(self.bins[s])}) + "\n" for s in sorted(self.bins)
        )


@numba.njit(cache=True, nogil=True)
def _popcount(v):
    v = v - ((v >> 1) & 0x5555555555555555)
    v = (v & 0x3333333333333333) + ((v >> 2) & 0x3333333333333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (v * 0x0101010101010101) >> 56


@numba.njit(cache=True, nogil=True)
def _scan(start, count, n, m, base):
    full = (np.int64(1) << n) - 1
    keys = np.empty(count, dtype=np.int64)
    mask = np.int64(start)
    for t in range(count):
        key = np.int64(0)
        mult = np.int64(1)
        for i in range(1, m + 1):
            rot = ((mask >> i) | (mask << (n - i))) & full
            key += _popcount(mask & rot) * mult
            mult *= base
        keys[t] = key
        if t + 1 < count:
            # Gosper's hack: next larger integer with the same popcount
            c = mask & -mask
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r
    return keys


def unrank_colex(n: int, k: int, rank: int) -> int:
    """Bitmask of the ``rank``-th k-subset of range(n) in increasing-mask order."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError("rank out of range")
    mask = 0
    for j in range(k, 0, -1):
        c = j - 1
        while math.comb(c + 1, j) <= rank:
            c += 1
        rank -= math.comb(c, j)
        mask |= 1 << c
    return mask


def _thread_count() -> int:
    env = os.environ.get("CONVNUM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_joint(n: int, k: int, ceiling: int = DEFAULT_CEILING, threads: int | None = None) -> JointProfileDistribution:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"invalid (n, k) = ({n}, {k})")
    if n > ceiling:
        raise CeilingExceeded(f"n={n} exceeds the enumeration ceiling {ceiling}")
    if n > 62:
        raise CeilingExceeded(f"n={n} exceeds the machine-word limit 62")
    m = n // 2
    # sigma(complement) = sigma(f) + n - 2k, so scan the lighter side.
    kk = min(k, n - k)
    offset = k - kk
    if kk == 0:
        return JointProfileDistribution(n, k, {(offset,) * m: 1})
    base = kk + 1
    if base**m >= 2**63:
        raise CeilingExceeded(f"profile key for n={n}, k={k} does not fit a machine word")

    total = math.comb(n, kk)
    starts = list(range(0, total, CHUNK))

    def work(r0: int):
        cnt = min(CHUNK, total - r0)
        keys = _scan(unrank_colex(n, kk, r0), cnt, n, m, base)
        return np.unique(keys, return_counts=True)

    nthreads = threads or _thread_count()
    if nthreads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(nthreads) as pool:
            parts = list(pool.map(work, starts))
    else:
        parts = [work(r0) for r0 in starts]

    merged: dict[int, int] = {}
    for keys, counts in parts:
        for key, c in zip(keys.tolist(), counts.tolist()):
            merged[key] = merged.get(key, 0) + c

    bins = {}
    for key, c in merged.items():
        sigma = []
        for _ in range(m):
            key, digit = divmod(key, base)
            sigma.append(digit + offset)
        bins[tuple(sigma)] = c
    return JointProfileDistribution(n, k, bins)


def sigma_at(dist: JointProfileDistribution, sigma: tuple[int, ...], i: int) -> int:
    """Raw incidences at any distance i, using sigma_i = sigma_{n-i}."""
    i %= dist.n
    if i == 0:
        return dist.k
    return sigma[min(i, dist.n - i) - 1]


def marginal_from_joint(dist: JointProfileDistribution, i: int) -> list[int]:
    if not 1 <= i <= dist.m:
        raise IndexError(f"distance {i} outside 1..{dist.m}")
    counts = [0] * (dist.k + 1)
    for sigma, c in dist.bins.items():
        counts[sigma[i - 1]] += c
    return counts


def bivariate_from_joint(dist: JointProfileDistribution) -> JointCount:
    table: dict[tuple[int, int], int] = {}
    for sigma, c in dist.bins.items():
        key = (sigma_at(dist, sigma, 1), sigma_at(dist, sigma, 2))
        table[key] = table.get(key, 0) + c
    return JointCount(dist.n, dist.k, table)


def support(n: int, k: int, ceiling: int = DEFAULT_CEILING) -> frozenset[AutocorrProfile]:
    dist = enumerate_joint(n, k, ceiling)
    return frozenset(AutocorrProfile(n, k, s) for s in dist.bins)
