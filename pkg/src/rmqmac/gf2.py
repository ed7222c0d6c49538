"""
Dense linear algebra over GF(2) on bit-packed rows.

Rows are stored as little-endian arrays of 64-bit words: column ``c`` lives
in word ``c // 64`` at bit ``c % 64``.  Padding bits past the last column are
always zero, so word-level XOR and comparisons are exact.  All values are
immutable once constructed.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import DimensionMismatchError

WORD = 64


def _nwords(ncols: int) -> int:
    return (ncols + WORD - 1) // WORD


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into rows of little-endian uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8) & 1
    rows, cols = bits.shape
    nw = _nwords(cols)
    padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view("<u8").astype(np.uint64).reshape(rows, nw)


def _unpack(words: np.ndarray, ncols: int) -> np.ndarray:
    rows = words.shape[0]
    if rows == 0 or ncols == 0:
        return np.zeros((rows, ncols), dtype=np.uint8)
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8).reshape(rows, -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :ncols]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.uint64)
    a.setflags(write=False)
    return a


class BitVector:
    """Immutable binary vector with packed storage."""

    __slots__ = ("length", "words")

    def __init__(self, length: int, words: np.ndarray):
        words = np.asarray(words, dtype=np.uint64).reshape(-1)
        if words.shape[0] != _nwords(length):
            raise DimensionMismatchError(
                f"{words.shape[0]} words cannot hold exactly {length} bits"
            )
        self.length = int(length)
        self.words = _frozen(words)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        arr = arr.astype(np.uint8).reshape(1, -1)
        return cls(arr.shape[1], _pack(arr)[0])

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, np.zeros(_nwords(length), dtype=np.uint64))

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVector":
        """Bit ``t`` of the vector is bit ``t`` of ``value``."""
        return cls.from_bits([(value >> t) & 1 for t in range(length)])

    def to_array(self) -> np.ndarray:
        return _unpack(self.words.reshape(1, -1), self.length)[0]

    def to_int(self) -> int:
        return sum(int(w) << (WORD * i) for i, w in enumerate(self.words))

    def weight(self) -> int:
        return int(sum(bin(int(w)).count("1") for w in self.words))

    def _check(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise DimensionMismatchError(
                f"vector lengths differ: {self.length} vs {other.length}"
            )

    def __add__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.words ^ other.words)

    __xor__ = __add__
    __sub__ = __add__

    def dot(self, other: "BitVector") -> int:
        self._check(other)
        return sum(bin(int(w)).count("1") for w in self.words & other.words) & 1

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        i %= self.length
        return int(self.words[i // WORD] >> np.uint64(i % WORD)) & 1

    def __iter__(self):
        return iter(self.to_array().tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({''.join(map(str, self.to_array()))!r})"


class BitMatrix:
    """Immutable binary matrix, row-major with packed 64-bit words per row."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        data = np.asarray(data, dtype=np.uint64).reshape(rows, _nwords(cols))
        self.rows = int(rows)
        self.cols = int(cols)
        self.data = _frozen(data)

    @classmethod
    def from_bits(cls, bits) -> "BitMatrix":
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 2:
            raise DimensionMismatchError("expected a 2-D array of bits")
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, np.zeros((rows, _nwords(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_bits(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, vectors: Iterable[BitVector], cols: int | None = None) -> "BitMatrix":
        vectors = list(vectors)
        if not vectors:
            return cls.zeros(0, cols or 0)
        width = vectors[0].length
        if any(v.length != width for v in vectors):
            raise DimensionMismatchError("rows have different lengths")
        return cls(len(vectors), width, np.stack([v.words for v in vectors]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        return _unpack(self.data, self.cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError(
                f"column counts differ: {self.cols} vs {other.cols}"
            )
        return BitMatrix(self.rows + other.rows, self.cols, np.vstack([self.data, other.data]))

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_bits(self.to_array().T)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        prod = self.to_array().astype(np.int64) @ other.to_array().astype(np.int64)
        return BitMatrix.from_bits(prod & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _echelon(data: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on a writable copy of packed rows.

    Pivot search is column by column from the left, taking the topmost
    eligible row, so the output is deterministic.
    """
    R = np.array(data, dtype=np.uint64, copy=True)
    nrows = R.shape[0]
    pivots: list[int] = []
    prow = 0
    for c in range(cols):
        if prow == nrows:
            break
        w, b = divmod(c, WORD)
        colbits = (R[prow:, w] >> np.uint64(b)) & np.uint64(1)
        hits = np.flatnonzero(colbits)
        if hits.size == 0:
            continue
        src = prow + int(hits[0])
        if src != prow:
            R[[prow, src]] = R[[src, prow]]
        mask = ((R[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
        mask[prow] = False
        R[mask] ^= R[prow]
        pivots.append(c)
        prow += 1
    return R, pivots


def row_reduce(A: BitMatrix) -> BitMatrix:
    """Reduced row-echelon form of ``A``; zero rows end up at the bottom."""
    R, _ = _echelon(A.data, A.cols)
    return BitMatrix(A.rows, A.cols, R)


def rank(A: BitMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return len(_echelon(A.data, A.cols)[1])


def _same_cols(A: BitMatrix, B: BitMatrix) -> None:
    if A.cols != B.cols:
        raise DimensionMismatchError(f"column counts differ: {A.cols} vs {B.cols}")


def row_space_contains(A: BitMatrix, B: BitMatrix) -> bool:
    """True iff every row of ``B`` lies in the row space of ``A``."""
    _same_cols(A, B)
    if B.rows == 0:
        return True
    return rank(A) == rank(A.vstack(B))


def intersection_dimension(A: BitMatrix, B: BitMatrix) -> int:
    """Dimension of rowspace(A) ∩ rowspace(B)."""
    _same_cols(A, B)
    return rank(A) + rank(B) - rank(A.vstack(B))


def encode(G: BitMatrix, u: BitVector) -> BitVector:
    """Compute ``u · G`` over GF(2)."""
    if u.length != G.rows:
        raise DimensionMismatchError(
            f"message length {u.length} does not match {G.rows} generator rows"
        )
    sel = u.to_array().astype(bool)
    words = np.bitwise_xor.reduce(G.data[sel], axis=0) if sel.any() else np.zeros(
        G.data.shape[1], dtype=np.uint64
    )
    return BitVector(G.cols, words)


def kronecker(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """Kronecker product; row ``(i1, i2)`` maps to ``i1 * B.rows + i2``."""
    return BitMatrix.from_bits(np.kron(A.to_array(), B.to_array()))


def codebook(G: BitMatrix) -> np.ndarray:
    """All ``2**G.rows`` codewords as a ``(2**k, n)`` uint8 array.

    Row ``u`` is the encoding of the message whose bit ``j`` is bit ``j`` of
    the integer ``u``.
    """
    k, n = G.shape
    gen = G.to_array()
    book = np.zeros((1, n), dtype=np.uint8)
    for j in range(k):
        # doubling keeps row index == message integer (bit j selects row j)
        book = np.concatenate([book, book ^ gen[j]], axis=0)
    return book
