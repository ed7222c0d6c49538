"""Pauli channels viewed as two-user additive-noise MACs (Q-MACs).

A Pauli error maps to a noise pair ``(d1, d2)``: I -> (0, 0), X -> (1, 0),
Y -> (1, 1), Z -> (0, 1).  The first user carries the X component and the
second the Z component.  All information quantities are in bits and assume
uniform channel inputs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, DomainError, InvalidDistributionError
from .gf2 import BitVector

SUM_TOL = 1e-12

# Order of Pauli outcomes used in sampling and in PauliChannel.probs.
PAULI_LABELS = ("I", "X", "Y", "Z")
PAULI_TO_PAIR = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
# rows: Pauli index in PAULI_LABELS order; cols: (d1, d2)
_PAIR_TABLE = np.array([PAULI_TO_PAIR[p] for p in PAULI_LABELS], dtype=np.uint8)

STREAM_NOISE = 1
STREAM_MESSAGE = 2


class Target(enum.Enum):
    SUM = "sum"
    USER1 = "user1"
    USER2 = "user2"
    XOR = "xor"


@dataclass(frozen=True)
class PauliChannel:
    p_i: float
    p_x: float
    p_y: float
    p_z: float

    @property
    def probs(self) -> tuple[float, float, float, float]:
        return (self.p_i, self.p_x, self.p_y, self.p_z)

    def noise_table(self) -> np.ndarray:
        """2x2 array ``P[d1, d2]`` of noise-pair probabilities."""
        return np.array([[self.p_i, self.p_z], [self.p_x, self.p_y]])

    def swapped(self) -> "PauliChannel":
        """Exchange the roles of X and Z errors."""
        return PauliChannel(self.p_i, self.p_z, self.p_y, self.p_x)


@dataclass(frozen=True)
class NoisePair:
    d1: int
    d2: int

    @classmethod
    def from_pauli(cls, label: str) -> "NoisePair":
        return cls(*PAULI_TO_PAIR[label])

    def to_pauli(self) -> str:
        return PAULI_LABELS[[tuple(r) for r in _PAIR_TABLE.tolist()].index((self.d1, self.d2))]


@dataclass(frozen=True)
class InducedChannels:
    """X-error BSC and the flag-dependent Z-error BSC mixture."""

    wx_crossover: float
    flag_probability: float
    wz_flagged: float
    wz_unflagged: float

    @property
    def wz_branches(self) -> tuple[float, float]:
        return (self.wz_flagged, self.wz_unflagged)


def make_channel(p_x: float, p_y: float, p_z: float, p_i: float | None = None) -> PauliChannel:
    comps = [p_x, p_y, p_z] + ([] if p_i is None else [p_i])
    if any(not math.isfinite(p) or p < 0 or p > 1 for p in comps):
        raise InvalidDistributionError(f"components must lie in [0, 1]: {comps}")
    if p_i is None:
        p_i = 1.0 - p_x - p_y - p_z
        if p_i < -SUM_TOL:
            raise InvalidDistributionError(
                f"p_x + p_y + p_z = {p_x + p_y + p_z} exceeds 1"
            )
        p_i = max(p_i, 0.0)
    elif abs(p_i + p_x + p_y + p_z - 1.0) > SUM_TOL:
        raise InvalidDistributionError(
            f"probabilities sum to {p_i + p_x + p_y + p_z}, not 1"
        )
    return PauliChannel(float(p_i), float(p_x), float(p_y), float(p_z))


def depolarizing(p: float) -> PauliChannel:
    """Equal X/Y/Z errors with total error probability ``p``."""
    return make_channel(p / 3, p / 3, p / 3)


def binary_entropy(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"binary entropy needs p in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def _plogp(p: float) -> float:
    return p * math.log2(p) if p > 0 else 0.0


def entropy4(ch: PauliChannel) -> float:
    s = sum(_plogp(p) for p in ch.probs)
    return -s if s else 0.0


def hashing_bound(ch: PauliChannel) -> float:
    return 1.0 - entropy4(ch)


def mi_sum(ch: PauliChannel) -> float:
    """I[(X1, X2); Y]; the output is uniform, so this is 2 - H(noise)."""
    return 2.0 - entropy4(ch)


def _mixture_term(a: float, b: float) -> float:
    """(a + b) * h_b(b / (a + b)), zero when a + b == 0."""
    w = a + b
    if w <= 0:
        return 0.0
    return w * binary_entropy(min(max(b / w, 0.0), 1.0))


def mi_single(ch: PauliChannel, target: Target) -> float:
    """Mutual information for one user given the other (or the XOR) and Y.

    USER1: I[X1; X2, Y], USER2: I[X2; X1, Y], XOR: I[X1; X1 + X2, Y].
    """
    pi, px, py, pz = ch.probs
    if target is Target.USER1:
        return 1.0 - _mixture_term(pi, px) - _mixture_term(pz, py)
    if target is Target.USER2:
        return 1.0 - _mixture_term(pi, pz) - _mixture_term(py, px)
    if target is Target.XOR:
        return 1.0 - _mixture_term(pi, py) - _mixture_term(pz, px)
    if target is Target.SUM:
        return mi_sum(ch)
    raise ValueError(target)


def bsc_capacity(p: float) -> float:
    return 1.0 - binary_entropy(p)


def brute_force_mi(ch: PauliChannel, target: Target) -> float:
    """Mutual information by direct summation over the 16-point joint law.

    Independent of the closed forms: builds P(x1, x2, y1, y2) with uniform
    inputs and evaluates I[A; B] = sum P(a, b) log2(P(a, b) / (P(a) P(b))).
    """
    noise = ch.noise_table()
    joint = {}
    for x1 in (0, 1):
        for x2 in (0, 1):
            for d1 in (0, 1):
                for d2 in (0, 1):
                    key = (x1, x2, x1 ^ d1, x2 ^ d2)
                    joint[key] = joint.get(key, 0.0) + 0.25 * noise[d1, d2]

    if target is Target.SUM:
        split = lambda x1, x2, y1, y2: ((x1, x2), (y1, y2))
    elif target is Target.USER1:
        split = lambda x1, x2, y1, y2: ((x1,), (x2, y1, y2))
    elif target is Target.USER2:
        split = lambda x1, x2, y1, y2: ((x2,), (x1, y1, y2))
    elif target is Target.XOR:
        split = lambda x1, x2, y1, y2: ((x1,), (x1 ^ x2, y1, y2))
    else:
        raise ValueError(target)

    pab: dict = {}
    pa: dict = {}
    pb: dict = {}
    for key, p in joint.items():
        a, b = split(*key)
        pab[a, b] = pab.get((a, b), 0.0) + p
        pa[a] = pa.get(a, 0.0) + p
        pb[b] = pb.get(b, 0.0) + p
    total = 0.0
    for (a, b), p in pab.items():
        if p > 0:
            total += p * math.log2(p / (pa[a] * pb[b]))
    return total


def induced_channels(ch: PauliChannel) -> InducedChannels:
    flag = ch.p_x + ch.p_y
    no_flag = ch.p_i + ch.p_z
    return InducedChannels(
        wx_crossover=flag,
        flag_probability=flag,
        wz_flagged=ch.p_x / flag if flag > 0 else 0.0,
        wz_unflagged=ch.p_z / no_flag if no_flag > 0 else 0.0,
    )


def uniforms(seed: int, stream: int, start: int, count: int) -> np.ndarray:
    """Doubles in [0, 1) for indices ``start .. start + count - 1``.

    Counter-based: the value at an index depends only on (seed, stream,
    index), so disjoint ranges can be generated in any order.
    """
    bg = np.random.Philox(key=[seed & 0xFFFFFFFFFFFFFFFF, stream & 0xFFFFFFFFFFFFFFFF])
    # each Philox counter step yields four 64-bit outputs
    block, offset = divmod(start, 4)
    bg.advance(block)
    raw = bg.random_raw(offset + count)[offset:] if count else np.zeros(0, np.uint64)
    return (raw >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def noise_from_uniforms(ch: PauliChannel, u: np.ndarray) -> np.ndarray:
    cdf = np.cumsum(ch.probs)[:3]
    idx = np.searchsorted(cdf, u, side="right")
    return _PAIR_TABLE[idx]


def sample_noise(ch: PauliChannel, n: int, seed: int, stream: int = STREAM_NOISE,
                 start: int = 0) -> np.ndarray:
    """Draw ``n`` i.i.d. noise pairs as an ``(n, 2)`` uint8 array ``[d1, d2]``.

    ``start`` offsets the index counter; sampling ``[0, a)`` then ``[a, n)``
    gives the same rows as sampling ``[0, n)`` at once.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return noise_from_uniforms(ch, uniforms(seed, stream, start, n))


def apply_noise(x1, x2, noise: np.ndarray) -> np.ndarray:
    """Y = (x1 + d1, x2 + d2) as an ``(n, 2)`` uint8 array."""
    a1 = x1.to_array() if isinstance(x1, BitVector) else np.asarray(x1, dtype=np.uint8)
    a2 = x2.to_array() if isinstance(x2, BitVector) else np.asarray(x2, dtype=np.uint8)
    if a1.shape != a2.shape:
        raise DimensionMismatchError(f"input lengths differ: {a1.shape[0]} vs {a2.shape[0]}")
    noise = np.asarray(noise, dtype=np.uint8)
    if noise.shape != (a1.shape[0], 2):
        raise DimensionMismatchError("noise shape does not match input length")
    return np.stack([a1, a2], axis=1) ^ noise


def transmit(x1, x2, ch: PauliChannel, seed: int, stream: int = STREAM_NOISE) -> np.ndarray:
    """Send a codeword pair through the Q-MAC."""
    n1 = len(x1)
    if n1 != len(x2):
        raise DimensionMismatchError(f"input lengths differ: {n1} vs {len(x2)}")
    return apply_noise(x1, x2, sample_noise(ch, n1, seed, stream))
