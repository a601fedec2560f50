"""Joint count of k-subsets by incidences at distance 1 and at distance 2."""
from __future__ import annotations

from dataclasses import dataclass

from .core import binom_conv


@dataclass(frozen=True)
class JointCount:
    n: int
    k: int
    table: dict[tuple[int, int], int]  # (x, y) -> count, nonzero entries only

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def row_sums(self) -> list[int]:
        sums = [0] * (self.k + 1)
        for (x, _), c in self.table.items():
            sums[x] += c
        return sums

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "table": {f"{x},{y}": str(c) for (x, y), c in sorted(self.table.items())},
        }


def _check_domain(n: int, k: int) -> None:
    if n < 3 or k < 1 or 2 * k > n:
        raise ValueError(f"need n >= 3 and 1 <= k <= n/2, got n={n}, k={k}")


def joint_count(n: int, k: int, x: int, y: int) -> int:
    _check_domain(n, k)
    if not (0 <= x <= k and 0 <= y <= k):
        raise ValueError(f"need 0 <= x, y <= k, got x={x}, y={y}")
    r = k - x
    if r == 0:
        return 0
    singles = k + y - 2 * x  # runs of size one, of either symbol
    total = 0
    for a in range(r + 1):
        b = singles - a
        if b < 0:
            break
        total += (
            binom_conv(r, a)
            * binom_conv(x - 1, r - a - 1)
            * binom_conv(r, b)
            * binom_conv(n - 2 * k + x - 1, r - b - 1)
        )
    q, rem = divmod(n * total, r)
    if rem:
        raise ArithmeticError(f"non-integral joint count at n={n}, k={k}, x={x}, y={y}")
    return q


def joint_table(n: int, k: int) -> JointCount:
    _check_domain(n, k)
    table = {}
    for x in range(k + 1):
        for y in range(k + 1):
            c = joint_count(n, k, x, y)
            if c:
                table[(x, y)] = c
    return JointCount(n, k, table)


def pair_feasible(n: int, k: int, x: int, y: int) -> bool:
    return joint_count(n, k, x, y) > 0
