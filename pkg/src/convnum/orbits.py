"""Rotation orbits: path representatives, runs, descents and orbit counts."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BinarySequence, format_sequence


@dataclass(frozen=True)
class PathForm:
    sequence: BinarySequence
    shift: int
    is_unique: bool

    def to_json(self) -> dict:
        return {"sequence": format_sequence(self.sequence), "shift": self.shift, "unique": self.is_unique}


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        return len(self.runs)


def _scaled_prefix_sums(f: BinarySequence) -> list[int]:
    # 1 -> n-k and 0 -> -k; entry j is the sum of the first j steps, j = 0..n-1.
    up, down = f.n - f.k, -f.k
    sums = [0]
    for b in f.bits[:-1]:
        sums.append(sums[-1] + (up if b else down))
    return sums


def is_path(f: BinarySequence) -> bool:
    up, down = f.n - f.k, -f.k
    total = 0
    for b in f.bits:
        total += up if b else down
        if total < 0:
            return False
    return True


def path_representative(f: BinarySequence) -> PathForm:
    """Rotate ``f`` so that it starts just after a minimum of its scaled walk.

    Ties (possible only when gcd(n, k) > 1) go to the smallest prefix length,
    with the empty prefix included, so a path maps to itself with shift 0.
    """
    if f.k == 0 or f.k == f.n:
        raise ValueError("path representative needs both symbols present")
    sums = _scaled_prefix_sums(f)
    shift = min(range(f.n), key=lambda j: (sums[j], j))
    return PathForm(f.rotate(shift), shift, math.gcd(f.n, f.k) == 1)


def path_rotations(f: BinarySequence) -> list[int]:
    """All shifts whose rotation of ``f`` is a path."""
    sums = _scaled_prefix_sums(f)
    low = min(sums)
    return [j for j, s in enumerate(sums) if s == low]


def count_descents(f: BinarySequence) -> int:
    """Cyclic occurrences of ``10``."""
    b = f.bits
    return sum(1 for j in range(f.n) if b[j] == 1 and b[(j + 1) % f.n] == 0)


def count_ascents(f: BinarySequence) -> int:
    """Cyclic occurrences of ``01``."""
    b = f.bits
    return sum(1 for j in range(f.n) if b[j] == 0 and b[(j + 1) % f.n] == 1)


def run_decomposition(f: BinarySequence) -> RunDecomposition:
    """Cyclic ``1^a1 0^b1 ... 1^ar 0^br`` starting at the first run of ones."""
    if f.k == 0 or f.k == f.n:
        raise ValueError("run decomposition needs both symbols present")
    n, b = f.n, f.bits
    start = next(j for j in range(n) if b[j] == 1 and b[j - 1] == 0)
    runs = []
    j = 0
    while j < n:
        a = 0
        while j < n and b[(start + j) % n] == 1:
            a += 1
            j += 1
        z = 0
        while j < n and b[(start + j) % n] == 0:
            z += 1
            j += 1
        runs.append((a, z))
    return RunDecomposition(tuple(runs))


def orbit_count(n: int, k: int) -> int:
    """Number of rotation orbits of k-subsets of Z_n; coprime case only."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"invalid (n, k) = ({n}, {k})")
    if math.gcd(n, k) != 1:
        raise ValueError(f"orbit_count requires gcd(n, k) = 1, got gcd({n}, {k}) = {math.gcd(n, k)}")
    q, rem = divmod(math.comb(n, k), n)
    assert rem == 0
    return q
