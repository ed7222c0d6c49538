"""Decodability regions for RM code pairs on Pauli-channel Q-MACs.

Rates are real numbers in [0, 1].  Margins are right-hand side minus
left-hand side, in bits, so positive means the condition holds with room to
spare.  Joint achievability is strict (margin > delta); the necessary
conditions and the successive-decoding settings are non-strict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .channel import (
    PauliChannel,
    Target,
    bsc_capacity,
    make_channel,
    mi_single,
    mi_sum,
)
from .errors import ParameterRangeError


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float

    def __post_init__(self):
        for r in (self.r1, self.r2):
            if not 0.0 <= r <= 1.0:
                raise ParameterRangeError(f"rates must lie in [0, 1], got {self.r1}, {self.r2}")

    def swapped(self) -> "RatePair":
        return RatePair(self.r2, self.r1)


@dataclass(frozen=True)
class RegionVerdict:
    margins: tuple[float, float, float, float]
    achievable: bool
    delta: float
    strict: bool = True
    conjectured: bool = False

    @property
    def min_margin(self) -> float:
        return min(self.margins)


@dataclass(frozen=True)
class SuccessiveVerdict:
    setting_i: bool
    setting_ii: bool
    setting_iii: bool

    @property
    def decodable(self) -> bool:
        return self.setting_i or self.setting_ii or self.setting_iii


@dataclass(frozen=True)
class SweepRow:
    p_x: float
    p_y: float
    p_z: float
    joint: bool
    successive: bool
    hashing_margin: float


def _margins(rp: RatePair, ch: PauliChannel, overlap: float) -> tuple[float, float, float, float]:
    return (
        mi_sum(ch) - (rp.r1 + rp.r2),
        mi_single(ch, Target.USER1) - rp.r1,
        mi_single(ch, Target.USER2) - rp.r2,
        mi_single(ch, Target.XOR) - overlap,
    )


def _verdict(margins, delta: float, strict: bool, conjectured: bool = False) -> RegionVerdict:
    lo = min(margins)
    ok = lo > delta if strict else lo >= delta
    return RegionVerdict(margins=margins, achievable=ok, delta=delta, strict=strict,
                         conjectured=conjectured)


def joint_achievable(rp: RatePair, ch: PauliChannel, delta: float = 0.0) -> RegionVerdict:
    """Sufficient conditions for joint recovery with nested RM codes.

    The overlap term uses min(r1, r2) because same-length RM codes are nested.
    """
    return _verdict(_margins(rp, ch, min(rp.r1, rp.r2)), delta, strict=True)


def necessary_conditions(rp: RatePair, ch: PauliChannel, intersection_rate: float) -> RegionVerdict:
    """Necessary conditions for any pair of linear codes, with ``intersection_rate``
    = log2|C1 ∩ C2| / n."""
    return _verdict(_margins(rp, ch, float(intersection_rate)), 0.0, strict=False)


def tensor_variant_achievable(rp: RatePair, ch: PauliChannel, delta: float = 0.0) -> RegionVerdict:
    """As :func:`joint_achievable` with the overlap term r1 * r2.

    Flagged ``conjectured``: no proof of sufficiency accompanies this variant.
    """
    return _verdict(_margins(rp, ch, rp.r1 * rp.r2), delta, strict=True, conjectured=True)


def css_valid(rp: RatePair) -> bool:
    return rp.r1 + rp.r2 >= 1.0


def successive_decodable(rp: RatePair, ch: PauliChannel) -> SuccessiveVerdict:
    """Settings I-III: X first, Z first, or the XOR first."""
    s1 = rp.r1 <= bsc_capacity(ch.p_x + ch.p_y) and rp.r2 <= mi_single(ch, Target.USER2)
    s2 = rp.r2 <= bsc_capacity(ch.p_z + ch.p_y) and rp.r1 <= mi_single(ch, Target.USER1)
    s3 = (max(rp.r1, rp.r2) <= bsc_capacity(ch.p_x + ch.p_z)
          and min(rp.r1, rp.r2) <= mi_single(ch, Target.XOR))
    return SuccessiveVerdict(s1, s2, s3)


def quantum_joint_decodable(rp: RatePair, ch: PauliChannel, delta: float = 0.0) -> bool:
    return css_valid(rp) and joint_achievable(rp, ch, delta).achievable


def grid_values(p_max: float, step: float) -> np.ndarray:
    """Inclusive grid {0, step, ..., p_max}; p_max == 0 gives the single point 0."""
    if not 0.0 <= p_max <= 0.25:
        raise ParameterRangeError(f"p_max must lie in [0, 0.25], got {p_max}")
    if p_max == 0.0:
        return np.zeros(1)
    if not 0.0 < step <= p_max:
        raise ParameterRangeError(f"need 0 < step <= p_max, got step={step}")
    count = int(np.floor(p_max / step + 1e-9)) + 1
    # i * step rather than accumulation keeps grid values reproducible
    return np.round(np.arange(count) * step, 12)


def _row(rp: RatePair, px: float, py: float, pz: float, delta: float) -> SweepRow:
    ch = make_channel(px, py, pz)
    return SweepRow(
        p_x=px, p_y=py, p_z=pz,
        joint=joint_achievable(rp, ch, delta).achievable,
        successive=successive_decodable(rp, ch).decodable,
        hashing_margin=mi_sum(ch) - (rp.r1 + rp.r2),
    )


def sweep_grid(rp: RatePair, p_max: float = 0.05, step: float = 0.0025,
               delta: float = 0.0) -> list[SweepRow]:
    """Evaluate both decodability tests on the cube grid, lexicographic in (p_x, p_y, p_z)."""
    g = grid_values(p_max, step)
    return [_row(rp, float(px), float(py), float(pz), delta)
            for px in g for py in g for pz in g if px + py + pz <= 1.0]


def cross_section(rp: RatePair, p_max: float = 0.05, step: float = 0.0025,
                  delta: float = 0.0) -> list[SweepRow]:
    """Rows on the plane p_x = p_y = t, p_z = s, ordered by (t, s)."""
    g = grid_values(p_max, step)
    return [_row(rp, float(t), float(t), float(s), delta) for t in g for s in g]


def iter_rows_csv(rows) -> Iterator[str]:
    yield "p_x,p_y,p_z,joint,successive,hashing_margin"
    for row in rows:
        yield ",".join([
            format(row.p_x, ".9g"), format(row.p_y, ".9g"), format(row.p_z, ".9g"),
            str(int(row.joint)), str(int(row.successive)),
            format(row.hashing_margin, ".9g"),
        ])
