"""Exact decoders for RM code pairs on a Q-MAC and a Monte Carlo harness.

Decoding is exhaustive over message pairs.  The joint log-likelihood of a
candidate pair depends only on how many positions carry each of the four
noise patterns, so it is computed from integer pattern counts (one integer
matrix product per block) and a fixed-order weighted sum.  Candidate pairs
with identical counts therefore get bit-identical scores, which makes the
lexicographic tie-break exact.

Messages are integers: bit ``j`` of the message is the coefficient of the
``j``-th generator row.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .channel import (
    STREAM_MESSAGE,
    STREAM_NOISE,
    PauliChannel,
    apply_noise,
    sample_noise,
    uniforms,
)
from .errors import (
    DimensionMismatchError,
    EnumerationLimitError,
    InvalidOrderError,
    NoFeasiblePairError,
)
from .gf2 import BitVector
from .rm import RmCode, build_rm

MAX_ENUM_BITS = 22
# rows of the candidate block processed per integer matmul
_BLOCK_ELEMS = 1 << 22


class Order(enum.Enum):
    X_FIRST = "succ-x"
    Z_FIRST = "succ-z"
    XOR_FIRST = "succ-xor"


DECODER_IDS = ("joint",) + tuple(o.value for o in Order)


@dataclass(frozen=True)
class DecodeResult:
    message1: BitVector
    message2: BitVector
    codeword1: BitVector
    codeword2: BitVector
    log_likelihood: float
    success_defined_externally: bool = True
    first_stage: BitVector | None = None


@dataclass(frozen=True)
class SimReport:
    trials: int
    failures: int
    error_rate: float
    ci_low: float
    ci_high: float
    seed: int
    decoder_id: str

    def to_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=32)
def _book(r: int, m: int) -> np.ndarray:
    book = gf2.codebook(build_rm(r, m).generator)
    book.setflags(write=False)
    return book


def _codebook(c: RmCode) -> np.ndarray:
    return _book(c.r, c.m)


def _log_table(ch: PauliChannel) -> np.ndarray:
    """``L[d1, d2] = ln P(d1, d2)`` with -inf for impossible patterns."""
    with np.errstate(divide="ignore"):
        return np.log(ch.noise_table())


def _weighted(counts: tuple[np.ndarray, ...], logs: tuple[float, ...]) -> np.ndarray:
    """Sum count * log over patterns in a fixed order; 0 * -inf counts as 0."""
    total = np.zeros(counts[0].shape, dtype=np.float64)
    for cnt, lg in zip(counts, logs):
        if math.isinf(lg):
            total = np.where(cnt > 0, -np.inf, total)
        else:
            total = total + cnt * lg
    return total


def _pair_scores(e1: np.ndarray, e2: np.ndarray, L: np.ndarray) -> np.ndarray:
    """Log-likelihoods for every (row of e1, row of e2) pair of error patterns."""
    n = e1.shape[1]
    a = e1.astype(np.int32)
    b = e2.astype(np.int32)
    n11 = a @ b.T
    w1 = a.sum(axis=1)[:, None]
    w2 = b.sum(axis=1)[None, :]
    n10 = w1 - n11
    n01 = w2 - n11
    n00 = n - w1 - w2 + n11
    return _weighted((n00, n01, n10, n11), (L[0, 0], L[0, 1], L[1, 0], L[1, 1]))


def _bsc_scores(e: np.ndarray, q: float) -> np.ndarray:
    n = e.shape[1]
    w = e.sum(axis=1).astype(np.int64)
    lq = math.log(q) if q > 0 else -math.inf
    lp = math.log1p(-q) if q < 1 else -math.inf
    return _weighted((w, n - w), (lq, lp))


def _as_received(y) -> np.ndarray:
    y = np.asarray(y, dtype=np.uint8)
    if y.ndim != 2 or y.shape[1] != 2:
        raise DimensionMismatchError("received word must have shape (n, 2)")
    return y


def _check_pair(c1: RmCode, c2: RmCode, y: np.ndarray) -> None:
    if c1.m != c2.m:
        raise DimensionMismatchError(f"codes have different m: {c1.m} vs {c2.m}")
    if y.shape[0] != c1.n:
        raise DimensionMismatchError(f"received length {y.shape[0]} != n = {c1.n}")


def _bsc_decode(book: np.ndarray, received: np.ndarray, q: float) -> int:
    scores = _bsc_scores(book ^ received, q)
    best = int(np.argmax(scores))
    if scores[best] == -np.inf:
        raise NoFeasiblePairError("no codeword is consistent with the received word")
    return best


def _result(c1: RmCode, c2: RmCode, u1: int, u2: int, L: np.ndarray, y: np.ndarray,
            first_stage: np.ndarray | None = None) -> DecodeResult:
    w1 = _codebook(c1)[u1]
    w2 = _codebook(c2)[u2]
    ll = float(_pair_scores((w1 ^ y[:, 0])[None], (w2 ^ y[:, 1])[None], L)[0, 0])
    return DecodeResult(
        message1=BitVector.from_int(u1, c1.k),
        message2=BitVector.from_int(u2, c2.k),
        codeword1=BitVector.from_bits(w1),
        codeword2=BitVector.from_bits(w2),
        log_likelihood=ll,
        first_stage=None if first_stage is None else BitVector.from_bits(first_stage),
    )


def pair_log_likelihood(c1: RmCode, c2: RmCode, u1: int, u2: int, y, ch: PauliChannel) -> float:
    """ln P(y | messages u1, u2)."""
    y = _as_received(y)
    _check_pair(c1, c2, y)
    w1, w2 = _codebook(c1)[u1], _codebook(c2)[u2]
    return float(_pair_scores((w1 ^ y[:, 0])[None], (w2 ^ y[:, 1])[None], _log_table(ch))[0, 0])


def joint_ml_decode(c1: RmCode, c2: RmCode, y, ch: PauliChannel) -> DecodeResult:
    """Maximum-likelihood message pair by exhaustive search.

    Ties go to the smallest (message1, message2) in lexicographic integer order.
    """
    y = _as_received(y)
    _check_pair(c1, c2, y)
    if c1.k + c2.k > MAX_ENUM_BITS:
        raise EnumerationLimitError(
            f"k1 + k2 = {c1.k + c2.k} exceeds the enumeration limit {MAX_ENUM_BITS}"
        )
    L = _log_table(ch)
    e1 = _codebook(c1) ^ y[:, 0]
    e2 = _codebook(c2) ^ y[:, 1]
    block = max(1, _BLOCK_ELEMS // e2.shape[0])
    best_score, best = -np.inf, None
    for start in range(0, e1.shape[0], block):
        scores = _pair_scores(e1[start:start + block], e2, L)
        flat = int(np.argmax(scores))
        s = scores.flat[flat]
        # strict > keeps the earliest block on ties
        if best is None or s > best_score:
            best_score = s
            best = divmod(flat, e2.shape[0])
            best = (best[0] + start, best[1])
    if best_score == -np.inf:
        raise NoFeasiblePairError("every message pair has zero likelihood")
    return _result(c1, c2, best[0], best[1], L, y)


def _conditional_decode(c_free: RmCode, e_known: np.ndarray, y_free: np.ndarray,
                        L: np.ndarray, known_is_first: bool) -> int:
    """Decode one code given the other user's error pattern exactly."""
    e_free = _codebook(c_free) ^ y_free
    if known_is_first:
        scores = _pair_scores(e_known[None], e_free, L)[0]
    else:
        scores = _pair_scores(e_free, e_known[None], L)[:, 0]
    best = int(np.argmax(scores))
    if scores[best] == -np.inf:
        raise NoFeasiblePairError("no codeword is consistent with the first-stage decision")
    return best


def successive_decode(c1: RmCode, c2: RmCode, y, ch: PauliChannel, order: Order) -> DecodeResult:
    """Two-stage decoding: one component first, then the other given it.

    X_FIRST decodes user 1 over BSC(p_x + p_y), then user 2 with the exact
    conditional channel.  Z_FIRST mirrors this.  XOR_FIRST decodes the sum
    codeword in RM(max(r1, r2), m) over BSC(p_x + p_z), then the lower-order
    code given the sum; the other codeword follows by addition.
    """
    order = Order(order)
    y = _as_received(y)
    _check_pair(c1, c2, y)
    for c in (c1, c2):
        if c.k > MAX_ENUM_BITS:
            raise EnumerationLimitError(f"k = {c.k} exceeds the enumeration limit")
    L = _log_table(ch)

    if order is Order.X_FIRST:
        u1 = _bsc_decode(_codebook(c1), y[:, 0], ch.p_x + ch.p_y)
        e1 = _codebook(c1)[u1] ^ y[:, 0]
        u2 = _conditional_decode(c2, e1, y[:, 1], L, known_is_first=True)
        return _result(c1, c2, u1, u2, L, y)

    if order is Order.Z_FIRST:
        u2 = _bsc_decode(_codebook(c2), y[:, 1], ch.p_z + ch.p_y)
        e2 = _codebook(c2)[u2] ^ y[:, 1]
        u1 = _conditional_decode(c1, e2, y[:, 0], L, known_is_first=False)
        return _result(c1, c2, u1, u2, L, y)

    big = build_rm(max(c1.r, c2.r), c1.m)
    if big.k > MAX_ENUM_BITS:
        raise EnumerationLimitError(f"k = {big.k} exceeds the enumeration limit")
    y_sum = y[:, 0] ^ y[:, 1]
    s = _codebook(big)[_bsc_decode(_codebook(big), y_sum, ch.p_x + ch.p_z)]
    # stage 2: the lower-order code c_lo; the other word is c_lo + s
    low_is_first = c1.r <= c2.r
    c_lo = c1 if low_is_first else c2
    lo_book = _codebook(c_lo)
    if low_is_first:
        e_a = lo_book ^ y[:, 0]
        e_b = lo_book ^ s ^ y[:, 1]
    else:
        e_a = lo_book ^ s ^ y[:, 0]
        e_b = lo_book ^ y[:, 1]
    scores = _row_scores(e_a, e_b, L)
    u_lo = int(np.argmax(scores))
    if scores[u_lo] == -np.inf:
        raise NoFeasiblePairError("no codeword is consistent with the decoded sum")
    w_hi = lo_book[u_lo] ^ s
    c_hi = c2 if low_is_first else c1
    u_hi = message_of(c_hi, w_hi)
    u1, u2 = (u_lo, u_hi) if low_is_first else (u_hi, u_lo)
    return _result(c1, c2, u1, u2, L, y, first_stage=s)


def _row_scores(e_a: np.ndarray, e_b: np.ndarray, L: np.ndarray) -> np.ndarray:
    """Log-likelihood of row-aligned error-pattern pairs (e_a[i], e_b[i])."""
    n = e_a.shape[1]
    a = e_a.astype(np.int32)
    b = e_b.astype(np.int32)
    n11 = (a & b).sum(axis=1)
    w1, w2 = a.sum(axis=1), b.sum(axis=1)
    return _weighted((n - w1 - w2 + n11, w2 - n11, w1 - n11, n11),
                     (L[0, 0], L[0, 1], L[1, 0], L[1, 1]))


@lru_cache(maxsize=32)
def _index(r: int, m: int) -> dict:
    return {row.tobytes(): u for u, row in enumerate(_book(r, m))}


def message_of(c: RmCode, word) -> int:
    """Message integer of a codeword of ``c``."""
    arr = word.to_array() if isinstance(word, BitVector) else np.asarray(word, dtype=np.uint8)
    try:
        return _index(c.r, c.m)[arr.tobytes()]
    except KeyError:
        raise ValueError("word is not a codeword") from None


def decode(c1: RmCode, c2: RmCode, y, ch: PauliChannel, decoder_id: str) -> DecodeResult:
    if decoder_id == "joint":
        return joint_ml_decode(c1, c2, y, ch)
    try:
        order = Order(decoder_id)
    except ValueError:
        raise InvalidOrderError(f"unknown decoder {decoder_id!r}") from None
    return successive_decode(c1, c2, y, ch, order)


def wilson_interval(failures: int, trials: int, z: float = 1.959963984540054) -> tuple[float, float]:
    p = failures / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, min(centre - half, p)), min(1.0, max(centre + half, p))


def trial_messages(c1: RmCode, c2: RmCode, seed: int, trial: int) -> tuple[int, int]:
    """Uniform message pair for one trial, keyed by (seed, trial)."""
    bits = uniforms(seed, (STREAM_MESSAGE << 40) | trial, 0, c1.k + c2.k) < 0.5
    u1 = sum(1 << j for j in range(c1.k) if bits[j])
    u2 = sum(1 << j for j in range(c2.k) if bits[c1.k + j])
    return u1, u2


def trial_received(c1: RmCode, c2: RmCode, ch: PauliChannel, seed: int, trial: int):
    """(u1, u2, y) for one Monte Carlo trial."""
    u1, u2 = trial_messages(c1, c2, seed, trial)
    noise = sample_noise(ch, c1.n, seed, stream=(STREAM_NOISE << 40) | trial)
    y = apply_noise(_codebook(c1)[u1], _codebook(c2)[u2], noise)
    return u1, u2, y


def monte_carlo(c1: RmCode, c2: RmCode, ch: PauliChannel, decoder_id: str,
                trials: int, seed: int) -> SimReport:
    """Estimate the block error rate of exact message-pair recovery.

    Each trial's messages and noise depend only on (seed, trial), so results
    do not depend on how trials are scheduled.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if decoder_id not in DECODER_IDS:
        raise InvalidOrderError(f"unknown decoder {decoder_id!r}")
    failures = 0
    for t in range(trials):
        u1, u2, y = trial_received(c1, c2, ch, seed, t)
        res = decode(c1, c2, y, ch, decoder_id)
        if (res.message1.to_int(), res.message2.to_int()) != (u1, u2):
            failures += 1
    lo, hi = wilson_interval(failures, trials)
    return SimReport(trials=trials, failures=failures, error_rate=failures / trials,
                     ci_low=lo, ci_high=hi, seed=seed, decoder_id=decoder_id)
