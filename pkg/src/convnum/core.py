"""Binary sequences on Z_n, their cyclic autocorrelation, and exact binomials.

Indexing is 0-based and cyclic throughout. A sequence of length ``n`` and
weight ``k`` stands for a ``k``-subset of Z_n.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class BinarySequence:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("sequence must have length >= 1")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("sequence entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def k(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i % len(self.bits)]

    def __str__(self) -> str:
        return format_sequence(self)

    @classmethod
    def from_support(cls, n: int, support) -> "BinarySequence":
        bits = [0] * n
        for x in support:
            bits[x % n] = 1
        return cls(tuple(bits))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "BinarySequence":
        return cls(tuple((mask >> j) & 1 for j in range(n)))

    def to_mask(self) -> int:
        return sum(1 << j for j, b in enumerate(self.bits) if b)

    def support(self) -> list[int]:
        return [j for j, b in enumerate(self.bits) if b]

    def rotate(self, shift: int) -> "BinarySequence":
        """Left rotation: ``result[j] == self[j + shift]``."""
        s = shift % self.n
        return BinarySequence(self.bits[s:] + self.bits[:s])


@dataclass(frozen=True)
class AutocorrProfile:
    """Raw incidences ``sigma[i-1]`` at distance ``i = 1..n//2``.

    ``d`` is the unordered-distance form: equal to ``sigma`` except that for
    even ``n`` the antipodal entry is halved, so ``sum(d) == C(k, 2)``.
    """

    n: int
    k: int
    sigma: tuple[int, ...]
    d: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "d", sigma_to_d(self.n, self.sigma))

    @property
    def m(self) -> int:
        return self.n // 2

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "sigma": list(self.sigma), "d": list(self.d)}


def sigma_to_d(n: int, sigma) -> tuple[int, ...]:
    d = list(sigma)
    if n % 2 == 0 and d:
        if d[-1] % 2:
            raise ValueError("antipodal incidence count must be even for even n")
        d[-1] //= 2
    return tuple(d)


def d_to_sigma(n: int, d) -> tuple[int, ...]:
    sigma = list(d)
    if n % 2 == 0 and sigma:
        sigma[-1] *= 2
    return tuple(sigma)


def incidences(f: BinarySequence, i: int) -> int:
    """sum_x f(x) f(x+i mod n), for any integer distance ``i``."""
    n = f.n
    b = f.bits
    return sum(b[x] & b[(x + i) % n] for x in range(n))


def autocorrelation(f: BinarySequence) -> AutocorrProfile:
    sigma = tuple(incidences(f, i) for i in range(1, f.n // 2 + 1))
    return AutocorrProfile(f.n, f.k, sigma)


def binom_conv(t: int, r: int) -> int:
    """Binomial coefficient with ``C(t, t) = 1`` for every integer ``t``.

    Zero whenever ``r < 0``, ``r > t >= 0``, or ``t < 0`` with ``r != t``.
    """
    if r == t:
        return 1
    if r < 0 or t < 0 or r > t:
        return 0
    return math.comb(t, r)


_SEP = re.compile(r"[\s,]+")


def parse_sequence(text: str) -> BinarySequence:
    """Parse ``"1100100"`` or ``"1,1,0,0,1,0,0"`` (commas/whitespace optional)."""
    body = _SEP.sub("", text.strip())
    if not body:
        raise ValueError("empty sequence")
    bad = set(body) - {"0", "1"}
    if bad:
        raise ValueError(f"invalid characters in sequence: {''.join(sorted(bad))!r}")
    return BinarySequence(tuple(int(c) for c in body))


def format_sequence(f: BinarySequence) -> str:
    return "".join(str(b) for b in f.bits)
