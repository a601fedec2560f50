"""Goethals-Seidel Hadamard matrices from four circulants.

Four 0/1 sequences of length n qualify when their autocorrelations add up to
the constant ``k1 + k2 + k3 + k4 - n`` at every distance. The +/-1 images of
such sequences have periodic autocorrelations summing to zero off the peak,
and the Goethals-Seidel array then gives a Hadamard matrix of order 4n.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .core import BinarySequence, autocorrelation, parse_sequence


def _same_length(fs) -> int:
    lengths = {f.n for f in fs}
    if len(lengths) != 1:
        raise ValueError(f"sequences must share one length, got {sorted(lengths)}")
    return lengths.pop()


@dataclass(frozen=True)
class GsQuadruple:
    sequences: tuple[BinarySequence, BinarySequence, BinarySequence, BinarySequence]

    def __post_init__(self) -> None:
        if len(self.sequences) != 4:
            raise ValueError("a quadruple needs exactly four sequences")
        _same_length(self.sequences)

    @property
    def n(self) -> int:
        return self.sequences[0].n

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(f.k for f in self.sequences)

    @property
    def constant(self) -> int:
        return sum(self.weights) - self.n


@dataclass(frozen=True)
class CodedTriple:
    n: int
    digits: tuple[int, ...]
    sequences: tuple[BinarySequence, BinarySequence, BinarySequence]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def quadratic_residue_sequence(p: int) -> BinarySequence:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    residues = {j * j % p for j in range(1, p)}
    return BinarySequence(tuple(1 if j in residues else 0 for j in range(p)))


def sigma_sum(fs) -> tuple[int, ...]:
    _same_length(fs)
    return tuple(sum(col) for col in zip(*(autocorrelation(f).sigma for f in fs)))


def gs_condition(q: GsQuadruple) -> tuple[bool, tuple[int, ...]]:
    residual = tuple(v - q.constant for v in sigma_sum(q.sequences))
    return all(r == 0 for r in residual), residual


def deficit(target_constant: int, fs) -> tuple[int, ...]:
    """Autocorrelation the missing sequence must have to reach the constant."""
    return tuple(target_constant - v for v in sigma_sum(fs))


def decode_coded_triple(n: int, digits, expected_weights=None) -> CodedTriple:
    """Split octal digits into three sequences; the first takes weight 4, the last weight 1."""
    digits = tuple(int(d) for d in digits)
    if len(digits) != n:
        raise ValueError(f"expected {n} digits, got {len(digits)}")
    if any(not 0 <= d <= 7 for d in digits):
        raise ValueError("digits must lie in 0..7")
    seqs = tuple(BinarySequence(tuple((d >> bit) & 1 for d in digits)) for bit in (2, 1, 0))
    if expected_weights is not None:
        got = tuple(f.k for f in seqs)
        if got != tuple(expected_weights):
            raise ValueError(f"decoded weights {got} differ from expected {tuple(expected_weights)}")
    return CodedTriple(n, digits, seqs)


def encode_triple(fs) -> tuple[int, ...]:
    _same_length(fs)
    f1, f2, f3 = fs
    return tuple(4 * a + 2 * b + c for a, b, c in zip(f1.bits, f2.bits, f3.bits))


def paf(f: BinarySequence) -> tuple[int, ...]:
    """Periodic autocorrelation of 2f - 1 at shifts 1..n//2."""
    a = [2 * b - 1 for b in f.bits]
    n = f.n
    return tuple(sum(a[x] * a[(x + s) % n] for x in range(n)) for s in range(1, n // 2 + 1))


def circulant(f: BinarySequence) -> np.ndarray:
    """+/-1 circulant whose row r is the first row shifted right by r."""
    first = 2 * np.asarray(f.bits, dtype=np.int64) - 1
    n = f.n
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return first[idx]


def build_goethals_seidel(q: GsQuadruple) -> np.ndarray:
    ok, residual = gs_condition(q)
    if not ok:
        raise ValueError(f"quadruple fails the Goethals-Seidel condition, residual {residual}")
    A, B, C, D = (circulant(f) for f in q.sequences)
    R = np.fliplr(np.eye(q.n, dtype=np.int64))
    return np.block(
        [
            [A, B @ R, C @ R, D @ R],
            [-B @ R, A, D.T @ R, -C.T @ R],
            [-C @ R, -D.T @ R, A, B.T @ R],
            [-D @ R, C.T @ R, -B.T @ R, A],
        ]
    )


def verify_hadamard(h) -> bool:
    h = np.asarray(h, dtype=np.int64)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"matrix must be square, got shape {h.shape}")
    if not np.all(np.abs(h) == 1):
        raise ValueError("entries must be -1 or +1")
    order = h.shape[0]
    return bool(np.array_equal(h @ h.T, order * np.eye(order, dtype=np.int64)))


def format_sign_matrix(h) -> str:
    return "".join("".join("+" if v > 0 else "-" for v in row) + "\n" for row in np.asarray(h))


def parse_sign_matrix(text: str) -> np.ndarray:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    bad = {c for row in rows for c in row} - {"+", "-"}
    if bad:
        raise ValueError(f"sign matrix may only contain '+' and '-', found {''.join(sorted(bad))!r}")
    return np.array([[1 if c == "+" else -1 for c in row] for row in rows], dtype=np.int64)


def load_fixture(path) -> dict:
    """Read a fixture from a path, or by bare name (``gs19``, ``gs79``, ``gs167``) from the package."""
    p = Path(path)
    if p.exists():
        return json.loads(p.read_text())
    name = p.name if p.suffix == ".json" else p.name + ".json"
    return json.loads(resources.files("convnum.data").joinpath(name).read_text())


def fixture_triple(fx: dict) -> CodedTriple:
    return decode_coded_triple(fx["n"], fx["digits"], fx.get("expected_weights"))


def fixture_quadruple(fx: dict) -> GsQuadruple:
    if "sequences" in fx:
        seqs = tuple(parse_sequence(s) for s in fx["sequences"])
    elif "completion" in fx:
        seqs = fixture_triple(fx).sequences + (parse_sequence(fx["completion"]),)
    else:
        raise ValueError("fixture has no fourth sequence; only the deficit can be computed")
    q = GsQuadruple(seqs)
    if "target_constant" in fx and q.constant != fx["target_constant"]:
        raise ValueError(f"weights give constant {q.constant}, fixture says {fx['target_constant']}")
    return q
