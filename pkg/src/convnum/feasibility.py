"""Is a prescribed autocorrelation vector realized by some weight-k sequence?

Targets are given in raw (sigma) form. Three layers are offered: cheap
necessary-condition certificates, an exact depth-first search over path
representatives, and a seeded local search that can only ever say "found".
"""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bivariate import pair_feasible
from .core import BinarySequence, autocorrelation, format_sequence
from .marginals import marginal

EXACT_CEILING = 40


class Verdict(str, enum.Enum):
    FOUND = "Found"
    EXHAUSTED = "ExhaustedInfeasible"
    BUDGET = "BudgetExceeded"
    PRUNED = "PrunedInfeasible"


NECESSARY_PASSED = "necessary-passed"


@dataclass(frozen=True)
class TargetSpec:
    n: int
    k: int
    d: tuple[int, ...]  # raw sigma form, length n // 2
    note: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise ValueError(f"invalid (n, k) = ({self.n}, {self.k})")
        if len(self.d) != self.n // 2:
            raise ValueError(f"target must have n//2 = {self.n // 2} entries, got {len(self.d)}")
        if any(v < 0 for v in self.d):
            raise ValueError("target entries must be nonnegative")

    @classmethod
    def from_json(cls, obj: dict) -> "TargetSpec":
        return cls(int(obj["n"]), int(obj["k"]), tuple(obj["d"]), obj.get("note", ""))

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": list(self.d)}


@dataclass
class SearchStats:
    nodes: int = 0
    restarts: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {"nodes": self.nodes, "restarts": self.restarts, "elapsed": round(self.elapsed, 6)}


@dataclass
class SearchOutcome:
    verdict: Verdict
    witness: BinarySequence | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    certificate: str | None = None

    def to_json(self, with_timing: bool = True) -> dict:
        stats = self.stats.to_json()
        if not with_timing:
            stats.pop("elapsed")
        return {
            "verdict": self.verdict.value,
            "witness": format_sequence(self.witness) if self.witness is not None else None,
            "certificate": self.certificate,
            "stats": stats,
        }


@dataclass(frozen=True)
class NecessaryCheck:
    verdict: str  # NECESSARY_PASSED or Verdict.PRUNED
    certificate: str | None  # name of the failed certificate
    passed: tuple[str, ...]  # certificates that held, in order

    @property
    def ok(self) -> bool:
        return self.verdict == NECESSARY_PASSED


def _normalized_sum(n: int, d) -> Fraction:
    total = Fraction(sum(d))
    if n % 2 == 0 and d:
        total -= Fraction(d[-1], 2)
    return total


def _structural_failure(spec: TargetSpec) -> str | None:
    n, k, d = spec.n, spec.k, spec.d
    if _normalized_sum(n, d) != math.comb(k, 2):
        return "sum rule"
    for i, v in enumerate(d, start=1):
        cycle = n // math.gcd(n, i)
        # every one paired at distance i forces a union of full i-cycles
        if v > k or (v == k and k % cycle):
            return "entry bounds"
        if 2 * k > n and v < 2 * k - n:
            return "entry bounds"
    if n % 2 == 0 and d and d[-1] % 2:
        return "entry bounds"
    return None


def check_necessary(spec: TargetSpec) -> NecessaryCheck:
    """Run sum rule, entry bounds, single-marginal support and the (d1, d2) pair test."""
    n, k, d = spec.n, spec.k, spec.d
    passed: list[str] = []
    fail = _structural_failure(spec)
    if fail == "sum rule":
        return NecessaryCheck(Verdict.PRUNED, fail, ())
    passed.append("sum rule")
    if fail:
        return NecessaryCheck(Verdict.PRUNED, fail, tuple(passed))
    passed.append("entry bounds")

    # Formulas cover 1 <= k <= n/2; heavier sequences go through the complement.
    kk, shift = (k, 0) if 2 * k <= n else (n - k, 2 * k - n)
    if n >= 3 and kk >= 1:
        for i, v in enumerate(d, start=1):
            if marginal(n, kk, i, v - shift) == 0:
                return NecessaryCheck(Verdict.PRUNED, f"marginal i={i} (x={v})", tuple(passed))
        passed.append("marginal support")
        if len(d) >= 2:
            x, y = d[0], d[1]
            if not pair_feasible(n, kk, x - shift, y - shift):
                return NecessaryCheck(Verdict.PRUNED, f"pair (d1,d2)=({x},{y})", tuple(passed))
            passed.append("pair")
    return NecessaryCheck(NECESSARY_PASSED, None, tuple(passed))


class _BudgetHit(Exception):
    pass


def search_exact(spec: TargetSpec, budget: int | None = None, ceiling: int = EXACT_CEILING) -> SearchOutcome:
    """Complete depth-first search over path representatives.

    Only structural conditions (sum rule, entry bounds) are applied up front;
    the marginal and pair certificates are left to ``check_necessary`` so an
    infeasible answer here always comes from an exhausted tree.
    """
    n, k = spec.n, spec.k
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the exact-search ceiling {ceiling}")
    t0 = time.perf_counter()
    stats = SearchStats()
    fail = _structural_failure(spec)
    if fail:
        stats.elapsed = time.perf_counter() - t0
        return SearchOutcome(Verdict.PRUNED, None, stats, fail)
    if k in (0, n):
        f = BinarySequence((1 if k else 0,) * n)
        ok = autocorrelation(f).sigma == spec.d
        stats.elapsed = time.perf_counter() - t0
        return SearchOutcome(Verdict.FOUND if ok else Verdict.EXHAUSTED, f if ok else None, stats)

    m = n // 2
    # unordered-pair targets indexed by distance 1..m
    target = [0] + list(spec.d)
    if n % 2 == 0:
        target[m] //= 2
    dist = [min(j, n - j) for j in range(n)]
    cur = [0] * (m + 1)
    ones: list[int] = []
    bits = [0] * n
    limit = budget if budget is not None else -1

    def room(p: int) -> bool:
        # Can the undecided block p+1..n-1 still supply what each distance lacks?
        rem = k - len(ones)
        lo = p + 1
        length = n - lo
        for s in range(1, m + 1):
            need = target[s] - cur[s]
            if need <= 0:
                continue
            cross = 0
            for q in ones:
                u = q + s
                if lo <= u < n:
                    cross += 1
                if s != n - s:
                    u = q - s + n if q - s < 0 else q - s
                    if lo <= u < n:
                        cross += 1
            inner = max(0, length - s)
            if s != n - s:
                inner += max(0, length - (n - s))
            if min(cross, 2 * rem) + min(inner, rem) < need:
                return False
        return True

    def place_one(p: int) -> bool:
        for q in ones:
            s = dist[p - q]
            cur[s] += 1
        over = any(cur[dist[p - q]] > target[dist[p - q]] for q in ones)
        ones.append(p)
        bits[p] = 1
        return not over

    def remove_one(p: int) -> None:
        ones.pop()
        bits[p] = 0
        for q in ones:
            cur[dist[p - q]] -= 1

    def dfs(p: int) -> bool:
        # positions 0..p-1 are decided
        placed = len(ones)
        if p == n:
            return placed == k
        stats.nodes += 1
        if stats.nodes == limit:
            raise _BudgetHit
        for b in (1, 0):
            np_ = placed + b
            if np_ > k or k - np_ > n - p - 1:
                continue
            # path-prefix condition: the scaled walk stays nonnegative
            if np_ * n < (p + 1) * k:
                continue
            if b:
                if place_one(p) and room(p) and dfs(p + 1):
                    return True
                remove_one(p)
            else:
                if room(p) and dfs(p + 1):
                    return True
        return False

    try:
        found = dfs(0)
        verdict = Verdict.FOUND if found else Verdict.EXHAUSTED
    except _BudgetHit:
        found, verdict = False, Verdict.BUDGET
    stats.elapsed = time.perf_counter() - t0
    witness = None
    if found:
        witness = BinarySequence(tuple(bits))
        if autocorrelation(witness).sigma != spec.d:
            raise AssertionError("exact search produced a witness with the wrong profile")
    return SearchOutcome(verdict, witness, stats)


@dataclass(frozen=True)
class HeuristicParams:
    seed: int = 0
    restarts: int = 100
    max_steps: int | None = None  # per restart; default 50 n^2
    plateau: int | None = None  # consecutive sideways moves; default 2n

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.plateau is not None and self.plateau < 0:
            raise ValueError("plateau must be >= 0")


def search_heuristic(spec: TargetSpec, params: HeuristicParams | None = None) -> SearchOutcome:
    """Swap-move local search on weight-k sequences, squared-error objective.

    Each restart draws from its own stream spawned from ``params.seed``, so a
    run is reproducible. Never reports infeasibility.
    """
    params = params or HeuristicParams()
    n, k = spec.n, spec.k
    m = n // 2
    max_steps = params.max_steps or 50 * n * n
    plateau = params.plateau if params.plateau is not None else 2 * n
    t0 = time.perf_counter()
    stats = SearchStats()

    target = np.zeros(m + 1, dtype=np.int64)
    target[1:] = spec.d
    if n % 2 == 0:
        target[m] //= 2
    idx = np.arange(n)
    dmat = np.minimum((idx[None, :] - idx[:, None]) % n, (idx[:, None] - idx[None, :]) % n)
    onehot = np.zeros((n, n, m + 1), dtype=np.int64)
    onehot[idx[:, None], idx[None, :], dmat] = 1
    onehot[idx, idx, 0] = 0

    if k in (0, n) or _normalized_sum(n, spec.d) != math.comb(k, 2):
        # the objective cannot reach zero unless the sum rule holds
        if k in (0, n):
            f = BinarySequence((1 if k else 0,) * n)
            if autocorrelation(f).sigma == spec.d:
                stats.elapsed = time.perf_counter() - t0
                return SearchOutcome(Verdict.FOUND, f, stats)
        stats.elapsed = time.perf_counter() - t0
        return SearchOutcome(Verdict.BUDGET, None, stats)

    seeds = np.random.SeedSequence(params.seed).spawn(params.restarts)
    for ss in seeds:
        stats.restarts += 1
        rng = np.random.default_rng(ss)
        state = np.zeros(n, dtype=bool)
        state[rng.choice(n, size=k, replace=False)] = True
        # counts[u, s]: ones at distance s from position u (u itself excluded)
        counts = onehot[:, state, :].sum(axis=1)
        counts[:, 0] = 0
        err = counts[state].sum(axis=0) // 2 - target
        err[0] = 0
        cost = int(err @ err)
        flat = 0
        for _ in range(max_steps):
            if cost == 0:
                break
            stats.nodes += 1
            ones = np.flatnonzero(state)
            zeros = np.flatnonzero(~state)
            cp = counts[ones]  # (k, m+1)
            cq = counts[zeros]  # (n-k, m+1)
            pq = dmat[np.ix_(ones, zeros)]  # distance between swapped positions
            e_c = cq @ err - (cp @ err)[:, None] - err[pq]
            sq = (cq * cq).sum(1)[None, :] + (cp * cp).sum(1)[:, None] - 2 * (cp @ cq.T)
            # (C[q] - C[p]) evaluated at dist(p, q)
            diff_at = cq[np.arange(len(zeros))[None, :], pq] - cp[np.arange(len(ones))[:, None], pq]
            delta = 2 * e_c + sq - 2 * diff_at + 1
            best = delta.min()
            if best < 0:
                cand = np.argwhere(delta < 0)
                flat = 0
            elif best == 0 and flat < plateau:
                cand = np.argwhere(delta == 0)
                flat += 1
            else:
                break
            a, b = cand[rng.integers(len(cand))]
            p, q = ones[a], zeros[b]
            state[p] = False
            state[q] = True
            counts[idx, dmat[:, p]] -= 1
            counts[p, 0] += 1
            counts[idx, dmat[:, q]] += 1
            counts[q, 0] -= 1
            err += cq[b] - cp[a]
            err[pq[a, b]] -= 1
            err[0] = 0
            cost += int(delta[a, b])
        if cost == 0:
            witness = BinarySequence(tuple(int(v) for v in state))
            if autocorrelation(witness).sigma != spec.d:
                raise AssertionError("local search produced a witness with the wrong profile")
            stats.elapsed = time.perf_counter() - t0
            return SearchOutcome(Verdict.FOUND, witness, stats)
    stats.elapsed = time.perf_counter() - t0
    return SearchOutcome(Verdict.BUDGET, None, stats)


def supplement_search(
    f1: BinarySequence,
    constant: int,
    k2: int,
    budget: int | None = None,
    heuristic: HeuristicParams | None = None,
    exact_ceiling: int = EXACT_CEILING,
) -> SearchOutcome:
    """Look for f2 of weight k2 with sigma(f1) + sigma(f2) equal to ``constant`` everywhere."""
    s1 = autocorrelation(f1).sigma
    need = tuple(constant - v for v in s1)
    if any(v < 0 for v in need):
        return SearchOutcome(Verdict.PRUNED, None, SearchStats(), "negative target")
    spec = TargetSpec(f1.n, k2, need, note=f"supplement of {format_sequence(f1)} to {constant}")
    if heuristic is None and f1.n <= exact_ceiling:
        out = search_exact(spec, budget=budget, ceiling=exact_ceiling)
    else:
        out = search_heuristic(spec, heuristic)
    if out.verdict is Verdict.FOUND:
        s2 = autocorrelation(out.witness).sigma
        assert all(a + b == constant for a, b in zip(s1, s2))
    return out
