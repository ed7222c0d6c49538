"""Reed-Muller codes, their duals, CSS pairs and the tensor-product variant.

Point convention: column ``j`` of a generator is the evaluation at the point
``x`` with ``x_t = (j >> t) & 1``.  Monomial rows are ordered by degree and
then lexicographically on the sorted variable subset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from . import gf2
from .errors import DegenerateDualError, DimensionMismatchError, ParameterRangeError
from .gf2 import BitMatrix

MAX_DIMENSION_M = 30
MAX_BUILD_M = 20
MAX_TENSOR_M = 5


def rm_dimension(r: int, m: int) -> int:
    """Number of monomials of degree at most ``r`` in ``m`` variables."""
    if not 0 <= r <= m <= MAX_DIMENSION_M:
        raise ParameterRangeError(f"need 0 <= r <= m <= {MAX_DIMENSION_M}, got r={r}, m={m}")
    return sum(comb(m, i) for i in range(r + 1))


def monomials(r: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(s for d in range(r + 1) for s in combinations(range(m), d))


@dataclass(frozen=True)
class RmCode:
    m: int
    r: int
    n: int
    k: int
    monomials: tuple[tuple[int, ...], ...] = field(repr=False)
    generator: BitMatrix = field(repr=False, compare=False)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)


@lru_cache(maxsize=64)
def build_rm(r: int, m: int) -> RmCode:
    """Build RM(r, m) with its monomial-evaluation generator matrix."""
    if not 0 <= r <= m <= MAX_BUILD_M:
        raise ParameterRangeError(f"need 0 <= r <= m <= {MAX_BUILD_M}, got r={r}, m={m}")
    n = 1 << m
    points = (np.arange(n)[None, :] >> np.arange(m)[:, None]) & 1
    monos = monomials(r, m)
    rows = np.ones((len(monos), n), dtype=np.uint8)
    for i, subset in enumerate(monos):
        for t in subset:
            rows[i] &= points[t].astype(np.uint8)
    return RmCode(m=m, r=r, n=n, k=len(monos), monomials=monos,
                  generator=BitMatrix.from_bits(rows))


def dual(c: RmCode) -> RmCode:
    """RM(m - r - 1, m), the dual of RM(r, m)."""
    if c.r >= c.m:
        raise DegenerateDualError(f"RM({c.r},{c.m}) has the zero code as dual")
    return build_rm(c.m - c.r - 1, c.m)


def _same_m(a: RmCode, b: RmCode) -> None:
    if a.m != b.m:
        raise DimensionMismatchError(f"codes have different m: {a.m} vs {b.m}")


def is_nested(inner: RmCode, outer: RmCode) -> bool:
    _same_m(inner, outer)
    return inner.r <= outer.r


def intersection_rate(c1: RmCode, c2: RmCode) -> Fraction:
    """log2|C1 ∩ C2| / n; same-m RM codes are nested so this is the smaller rate."""
    _same_m(c1, c2)
    return Fraction(rm_dimension(min(c1.r, c2.r), c1.m), c1.n)


@dataclass(frozen=True)
class CssPair:
    code_x: RmCode
    code_z: RmCode
    logical_qubits: int
    valid: bool

    @property
    def rate(self) -> Fraction:
        return Fraction(self.logical_qubits, self.code_x.n)


def make_css_pair(r_x: int, r_z: int, m: int) -> CssPair:
    """Pair RM(r_x, m) and RM(r_z, m) as a CSS code.

    The pair is valid when the dual of the X code sits inside the Z code,
    which for RM codes is ``m <= r_x + r_z + 1``.  ``logical_qubits`` is
    reported even when non-positive.
    """
    cx, cz = build_rm(r_x, m), build_rm(r_z, m)
    return CssPair(code_x=cx, code_z=cz, logical_qubits=cx.k + cz.k - cx.n,
                   valid=m <= r_x + r_z + 1)


def css_condition_by_containment(pair: CssPair) -> bool:
    """Check dual(C_X) ⊆ C_Z directly by row-space containment."""
    cx, cz = pair.code_x, pair.code_z
    if cx.r == cx.m:
        return True  # zero dual code is contained in anything
    return gf2.row_space_contains(cz.generator, dual(cx).generator)


def build_tensor_pair(r1: int, r2: int, m: int) -> tuple[BitMatrix, BitMatrix]:
    """Generators of RM(r1, m) ⊗ RM(m, m) and RM(m, m) ⊗ RM(r2, m).

    Both have length ``4**m`` and their intersection is RM(r1, m) ⊗ RM(r2, m).
    """
    if not 0 <= m <= MAX_TENSOR_M or not 0 <= r1 <= m or not 0 <= r2 <= m:
        raise ParameterRangeError(
            f"need 0 <= r1, r2 <= m <= {MAX_TENSOR_M}, got r1={r1}, r2={r2}, m={m}"
        )
    full = build_rm(m, m).generator
    g1 = gf2.kronecker(build_rm(r1, m).generator, full)
    g2 = gf2.kronecker(full, build_rm(r2, m).generator)
    return g1, g2
