"""Canonical test codes, random self-orthogonal generation, and .gmat I/O.

The generator-matrix text format (".gmat"):

    line 1          "n k" in decimal, space separated
    lines 2..k+1    exactly n characters from {0, 1}, no separators
    '#' lines       comments, skipped anywhere; blank lines are skipped too

The random construction is reproducible across implementations: it draws
64-bit values from the counter-based SplitMix64 stream

    value(seed, i) = mix(seed + (i+1) * 0x9E3779B97F4A7C15)  (mod 2^64)

where mix is the standard SplitMix64 finalizer (xor-shift 30, multiply
0xBF58476D1CE4E5B9, xor-shift 27, multiply 0x94D9D4F0666A25C5,
xor-shift 31).

Pure constructors; safe for concurrent use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .gf2 import (
    BinaryCode,
    InputError,
    WeightDistribution,
    bits_from_word,
    dual_code,
    rref,
    word_from_bits,
)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(seed: int, index: int) -> int:
    """Output `index` of the SplitMix64 stream for `seed` (see module docs)."""
    z = (seed + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D9D4F0666A25C5) & _MASK64
    return z ^ (z >> 31)


# ---------------------------------------------------------------------------
# .gmat parsing and emission


def parse_gmat(text: str) -> BinaryCode:
    """Parse generator-matrix text into a canonical code.

    Rejects malformed headers, wrong row counts or widths, characters
    outside {0, 1, #, whitespace}, and dependent rows (reporting the
    computed rank).
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append(stripped)
    if not lines:
        raise InputError("no header line found")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"header must be 'n k', got {lines[0]!r}")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise InputError(f"header must hold two decimal integers, got {lines[0]!r}")
    if k < 0 or k > n:
        raise InputError(f"header requires 0 <= k <= n, got n={n} k={k}")
    rows = lines[1:]
    if len(rows) != k:
        raise InputError(f"expected {k} generator rows, found {len(rows)}")
    words = []
    for i, row in enumerate(rows, start=2):
        if set(row) - {"0", "1"}:
            raise InputError(f"line {i}: characters outside 0/1")
        if len(row) != n:
            raise InputError(f"line {i}: width {len(row)}, expected {n}")
        words.append(word_from_bits(row)[0])
    rank, _ = rref(words, n)
    if rank != k:
        raise InputError(f"dependent generator rows: rank {rank} != k = {k}")
    return BinaryCode(n, tuple(words))


def emit_gmat(code: BinaryCode) -> str:
    """Emit canonical generator-matrix text; parse(emit(c)) == c."""
    lines = [f"{code.n} {code.k}"]
    lines.extend(bits_from_word(g, code.n) for g in code.generators)
    return "\n".join(lines) + "\n"


def fixture_dir() -> Path:
    """Directory holding the packaged .gmat fixtures and their sidecars."""
    return Path(resources.files("wsdcodes").joinpath("fixtures"))


def load_fixture(name: str) -> BinaryCode:
    """Parse a packaged fixture such as "golay24"."""
    path = fixture_dir() / f"{name}.gmat"
    if not path.exists():
        raise InputError(f"no fixture named {name!r}")
    return parse_gmat(path.read_text())


def load_expected(name: str) -> WeightDistribution:
    """Load the sidecar distribution for a packaged fixture."""
    path = fixture_dir() / f"{name}.expected.json"
    data = json.loads(path.read_text())
    return WeightDistribution(data["n"], tuple(data["counts"]))


# ---------------------------------------------------------------------------
# Constructions


def build_extended_hamming() -> BinaryCode:
    """The [8,4,4] extended Hamming code (doubly-even, self-dual)."""
    return BinaryCode.from_bits(["10000111", "01001011", "00101101", "00011110"])


def build_golay24() -> BinaryCode:
    """The [24,12,8] extended binary Golay code, from the packaged fixture."""
    return load_fixture("golay24")


def build_reed_muller_1(m: int) -> BinaryCode:
    """First-order Reed-Muller code RM(1, m) = [2^m, m+1], for 3 <= m <= 6.

    Generators: the all-ones word plus the m coordinate words (bit i of
    the column index).  Weakly self-dual for m >= 3.
    """
    if not 3 <= m <= 6:
        raise InputError(f"m must lie in 3..6, got {m}")
    n = 1 << m
    gens = [(1 << n) - 1]
    for i in range(m):
        bits = [(col >> (m - 1 - i)) & 1 for col in range(n)]
        gens.append(word_from_bits(bits)[0])
    return BinaryCode(n, tuple(gens))


def random_weakly_self_dual(n: int, k: int, seed: int) -> BinaryCode:
    """A pseudo-random k-dimensional self-orthogonal code of even length n.

    Generators are drawn one at a time, uniformly from the linear space of
    words orthogonal to all previous picks and to themselves (even weight
    equals orthogonality to the all-ones word); dependent picks are
    rejected.  Deterministic in (n, k, seed) via the SplitMix64 stream.
    """
    if n % 2:
        raise InputError(f"length must be even, got {n}")
    if not 1 <= k <= n // 2:
        raise InputError(f"dimension must lie in 1..n/2 = {n // 2}, got {k}")
    ones = (1 << n) - 1
    chosen: list[int] = []
    counter = 0
    budget = 1000 * k
    while len(chosen) < k:
        if counter >= budget:  # pragma: no cover - rejection odds <= 1/2 per draw
            raise RuntimeError("random construction failed to terminate")
        _, constraint_basis = rref(tuple(chosen) + (ones,), n)
        space = dual_code(BinaryCode(n, constraint_basis)).generators
        draw = splitmix64(seed & _MASK64, counter)
        counter += 1
        candidate = 0
        for i, row in enumerate(space):
            if (draw >> i) & 1:
                candidate ^= row
        new_rank, _ = rref(tuple(chosen) + (candidate,), n)
        if new_rank == len(chosen) + 1:
            chosen.append(candidate)
    return BinaryCode(n, tuple(chosen))


# ---------------------------------------------------------------------------
# The zoo registry


@dataclass(frozen=True)
class ZooEntry:
    """A named test code, optionally with its known distribution."""

    name: str
    code: BinaryCode
    expected: WeightDistribution | None
    provenance: str


def _sparse_counts(n: int, nonzero: dict[int, int]) -> WeightDistribution:
    counts = [0] * (n + 1)
    for w, c in nonzero.items():
        counts[w] = c
    return WeightDistribution(n, tuple(counts))


@lru_cache(maxsize=1)
def zoo_entries() -> tuple[ZooEntry, ...]:
    """The built-in corpus, in fixed order."""
    return (
        ZooEntry(
            "selfdual2",
            BinaryCode.from_bits(["11"]),
            _sparse_counts(2, {0: 1, 2: 1}),
            "smallest self-dual code",
        ),
        ZooEntry(
            "repetition3",
            load_fixture("repetition3"),
            _sparse_counts(3, {0: 1, 3: 1}),
            "repetition code; not self-orthogonal (odd generator weight)",
        ),
        ZooEntry(
            "hamming8",
            build_extended_hamming(),
            _sparse_counts(8, {0: 1, 4: 14, 8: 1}),
            "extended Hamming [8,4,4], doubly-even self-dual",
        ),
        ZooEntry(
            "reedmuller_1_3",
            build_reed_muller_1(3),
            _sparse_counts(8, {0: 1, 4: 14, 8: 1}),
            "first-order Reed-Muller, m=3",
        ),
        ZooEntry(
            "reedmuller_1_4",
            build_reed_muller_1(4),
            _sparse_counts(16, {0: 1, 8: 30, 16: 1}),
            "first-order Reed-Muller, m=4",
        ),
        ZooEntry(
            "random_12_4",
            random_weakly_self_dual(12, 4, seed=42),
            None,
            "seeded random self-orthogonal [12,4]",
        ),
        ZooEntry(
            "random_20_8",
            random_weakly_self_dual(20, 8, seed=7),
            None,
            "seeded random self-orthogonal [20,8]",
        ),
        ZooEntry(
            "random_24_10",
            random_weakly_self_dual(24, 10, seed=1),
            None,
            "seeded random self-orthogonal [24,10]",
        ),
        ZooEntry(
            "golay24",
            build_golay24(),
            _sparse_counts(24, {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}),
            "extended binary Golay [24,12,8], doubly-even self-dual",
        ),
    )


def get_zoo_entry(name: str) -> ZooEntry:
    for entry in zoo_entries():
        if entry.name == name:
            return entry
    raise InputError(
        f"unknown zoo code {name!r}; known: {', '.join(e.name for e in zoo_entries())}"
    )
