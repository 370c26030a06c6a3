"""Exact GF(2) linear algebra and codeword enumeration.

Binary words are packed into Python ints: the leftmost character of a
written vector such as "1101" is the most significant bit, so string
order and amplitude-index order (see the state-vector module) agree.
XOR is vector addition, ``int.bit_count()`` is Hamming weight, and
popcount-of-AND parity gives the mod-2 inner product.  Code length is
capped at 64 so the enumeration kernels stay single-word.

Everything here is a pure function over immutable values and is safe
to call concurrently.  Weight enumeration partitions the message space
into contiguous blocks; the combined counts are deterministic and do
not depend on the partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

WORD_CAP = 64
#: Largest dimension enumerated exhaustively (2^28 codewords, seconds-scale).
ENUMERATION_CAP = 28
#: Largest dimension for which the full codeword array is materialized.
MATERIALIZE_CAP = 24


class InputError(ValueError):
    """Malformed input or violated operation precondition."""


class CapacityError(RuntimeError):
    """Request exceeds an enumeration or state-size cap."""


def word_from_bits(bits: str | Sequence[int]) -> tuple[int, int]:
    """Pack a bit string or 0/1 sequence into ``(word, length)``."""
    if isinstance(bits, str):
        s = bits.strip()
        if not s:
            raise InputError("empty bit string")
        bad = set(s) - {"0", "1"}
        if bad:
            raise InputError(f"bit string contains {sorted(bad)!r}, expected only 0/1")
        return int(s, 2), len(s)
    vals = list(bits)
    if not vals:
        raise InputError("empty bit sequence")
    word = 0
    for v in vals:
        if v not in (0, 1):
            raise InputError(f"bit sequence contains {v!r}, expected only 0/1")
        word = (word << 1) | v
    return word, len(vals)


def bits_from_word(word: int, n: int) -> str:
    """Render a packed word as an n-character bit string (MSB first)."""
    return format(word, f"0{n}b")


def inner_product(x: int, y: int) -> int:
    """Inner product of two words read as real 0/1 vectors."""
    return (x & y).bit_count()


def _check_length(n: int) -> None:
    if not 1 <= n <= WORD_CAP:
        raise InputError(f"code length must be in 1..{WORD_CAP}, got {n}")


def _check_row(row: int, n: int) -> None:
    if row < 0 or row >> n:
        raise InputError(f"row 0b{row:b} does not fit length {n}")


def rref(rows: Iterable[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Reduced row-echelon form over GF(2).

    Args:
        rows: packed words (see :func:`word_from_bits`).
        n: common row length; rows with bits past position n are rejected.

    Returns:
        ``(rank, basis)`` where basis spans the same row space, each pivot
        column contains a single 1, and rows are ordered pivot-leftmost
        (equivalently: descending as integers).
    """
    _check_length(n)
    basis: list[int] = []
    for row in rows:
        _check_row(row, n)
        for b in basis:
            # clears b's pivot bit from row when set (pivot is b's MSB)
            row = min(row, row ^ b)
        if row == 0:
            continue
        basis = [min(b, b ^ row) for b in basis]
        basis.append(row)
    basis.sort(reverse=True)
    return len(basis), tuple(basis)


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear [n, k] code held as a canonical RREF generator matrix.

    The constructor accepts any independent generator set and stores its
    reduced row-echelon form (pivot columns leftmost, rows sorted by pivot),
    so equal codes compare equal.  Dependent rows are rejected; use
    :func:`rref` first if you hold a spanning set rather than a basis.
    """

    n: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        rank, basis = rref(gens, self.n)
        if rank != len(gens):
            raise InputError(
                f"generator rows are dependent over GF(2): "
                f"rank {rank} < {len(gens)} rows"
            )
        object.__setattr__(self, "generators", basis)

    @property
    def k(self) -> int:
        return len(self.generators)

    @classmethod
    def from_bits(cls, rows: Iterable[str | Sequence[int]], n: int | None = None) -> "BinaryCode":
        """Build a code from written rows such as ["1100", "0011"]."""
        words = []
        length = n
        for row in rows:
            w, ln = word_from_bits(row)
            if length is None:
                length = ln
            elif ln != length:
                raise InputError(f"row length {ln} differs from {length}")
            words.append(w)
        if length is None:
            raise InputError("at least one row (or an explicit n) is required")
        return cls(length, tuple(words))

    def contains(self, word: int) -> bool:
        """Membership test by reduction against the RREF basis."""
        _check_row(word, self.n)
        for b in self.generators:
            word = min(word, word ^ b)
        return word == 0


@dataclass(frozen=True)
class WeightDistribution:
    """Exact codeword counts (A_0, ..., A_n) of a linear code."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_length(self.n)
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise InputError(f"expected {self.n + 1} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise InputError("weight counts must be nonnegative")
        if counts[0] != 1:
            raise InputError("A_0 must be 1 (the zero word)")
        total = sum(counts)
        if total & (total - 1):
            raise InputError(f"counts sum to {total}, not a power of two")
        object.__setattr__(self, "counts", counts)

    @property
    def dimension(self) -> int:
        """k with sum(counts) == 2**k."""
        return sum(self.counts).bit_length() - 1


@dataclass(frozen=True)
class CodeMetrics:
    """Minimum distance and structural flags derived from a distribution."""

    d: int
    delta: Fraction
    weakly_self_dual: bool
    doubly_even: bool


def span_words(rows: Sequence[int], n: int) -> np.ndarray:
    """All 2^len(rows) XOR combinations of the given words.

    Each step XORs one new row into everything produced so far, so the
    result is an incremental single-XOR walk of the span (message index i
    maps to the XOR of the rows selected by the bits of i).
    """
    _check_length(n)
    if len(rows) > MATERIALIZE_CAP:
        raise CapacityError(
            f"refusing to materialize 2^{len(rows)} words (cap 2^{MATERIALIZE_CAP})"
        )
    words = np.zeros(1, dtype=np.uint64)
    for row in rows:
        _check_row(row, n)
        words = np.concatenate([words, words ^ np.uint64(row)])
    return words


@lru_cache(maxsize=128)
def codewords(code: BinaryCode) -> np.ndarray:
    """All 2^k codewords as a read-only uint64 array (k <= MATERIALIZE_CAP)."""
    words = span_words(code.generators, code.n)
    words.setflags(write=False)
    return words


@lru_cache(maxsize=128)
def weight_distribution(code: BinaryCode) -> WeightDistribution:
    """Exact weight distribution by exhaustive single-XOR enumeration.

    The 2^k message space is split into contiguous blocks of at most 2^16
    codewords; each block is generated incrementally (every word is the
    previous ones XOR one generator) and popcounted in bulk.

    Raises:
        CapacityError: if k exceeds ENUMERATION_CAP.  For such codes with a
            small dual, enumerate the dual and apply macwilliams_transform.
    """
    k = code.k
    if k > ENUMERATION_CAP:
        raise CapacityError(
            f"k={k} exceeds enumeration cap {ENUMERATION_CAP}; enumerate the "
            f"dual (dimension {code.n - k}) and use macwilliams_transform"
        )
    k_low = min(k, 16)
    low = span_words(code.generators[:k_low], code.n)
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for high in span_words(code.generators[k_low:], code.n):
        weights = np.bitwise_count(low ^ high)
        counts += np.bincount(weights, minlength=code.n + 1)
    return WeightDistribution(code.n, tuple(int(c) for c in counts))


@lru_cache(maxsize=128)
def dual_code(code: BinaryCode) -> BinaryCode:
    """The dual code C-perp (dimension n - k), in canonical form.

    With the generators in RREF, each free column f yields one dual basis
    word: a 1 at f plus a 1 at the pivot of every generator row whose bit
    at f is set.  Either inner-product term then appears twice, so every
    pair of rows is orthogonal mod 2.
    """
    n = code.n
    pivots = {g.bit_length() - 1 for g in code.generators}
    dual_rows = []
    for f in range(n - 1, -1, -1):
        if f in pivots:
            continue
        word = 1 << f
        for g in code.generators:
            if (g >> f) & 1:
                word |= 1 << (g.bit_length() - 1)
        dual_rows.append(word)
    return BinaryCode(n, tuple(dual_rows))


def is_weakly_self_dual(code: BinaryCode) -> bool:
    """True iff C is a subset of its dual: all generator pairs (including
    a row with itself) have even real inner product."""
    gens = code.generators
    return all(
        inner_product(gens[i], gens[j]) % 2 == 0
        for i in range(len(gens))
        for j in range(i, len(gens))
    )


def is_self_dual(code: BinaryCode) -> bool:
    """True iff C equals its dual (weakly self-dual with k = n/2)."""
    return 2 * code.k == code.n and is_weakly_self_dual(code)


def is_doubly_even(code: BinaryCode) -> bool:
    """True iff every codeword weight is divisible by 4.

    Uses the generator criterion (each generator weight = 0 mod 4 and all
    pairwise inner products even); when k is within the enumeration cap the
    answer is cross-checked against the exhaustive distribution.
    """
    by_criterion = (
        all(g.bit_count() % 4 == 0 for g in code.generators)
        and is_weakly_self_dual(code)
    )
    if code.k <= ENUMERATION_CAP:
        dist = weight_distribution(code)
        by_enum = all(c == 0 for w, c in enumerate(dist.counts) if w % 4)
        if by_enum != by_criterion:  # pragma: no cover - criterion is exact
            raise RuntimeError("doubly-even criterion disagrees with enumeration")
    return by_criterion


def code_metrics(code: BinaryCode, dist: WeightDistribution) -> CodeMetrics:
    """Minimum distance, normalized distance, and structural flags.

    Raises:
        InputError: if the distribution does not match the code, or for the
            degenerate zero code (k = 0), whose distance is undefined.
    """
    if dist.n != code.n or dist.dimension != code.k:
        raise InputError("distribution does not match the code's (n, k)")
    if code.k == 0:
        raise InputError("zero code (k=0): minimum distance is undefined")
    d = next(w for w, c in enumerate(dist.counts) if w > 0 and c > 0)
    return CodeMetrics(
        d=d,
        delta=Fraction(d, code.n),
        weakly_self_dual=is_weakly_self_dual(code),
        doubly_even=is_doubly_even(code),
    )
