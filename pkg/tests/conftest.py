"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's clever paths: naive
re-encoding instead of incremental XOR walks, full 2^n scans instead of
RREF-based duals, explicit Kronecker products instead of qubit-wise
application.  Expected values frozen in the tests were produced by these.
"""

from __future__ import annotations

import numpy as np
import pytest

from wsdcodes import BinaryCode, WeightDistribution, zoo_entries


def naive_weight_distribution(code: BinaryCode) -> WeightDistribution:
    """Re-encode every message word from scratch (no incremental reuse)."""
    counts = [0] * (code.n + 1)
    for message in range(1 << code.k):
        word = 0
        for i in range(code.k):
            if (message >> i) & 1:
                word ^= code.generators[i]
        counts[word.bit_count()] += 1
    return WeightDistribution(code.n, tuple(counts))


def brute_force_dual_words(code: BinaryCode) -> set[int]:
    """All words orthogonal to every generator, by scanning 2^n (n <= 16)."""
    assert code.n <= 16, "brute-force dual only for short codes"
    return {
        word
        for word in range(1 << code.n)
        if all((word & g).bit_count() % 2 == 0 for g in code.generators)
    }


def kron_power(matrix: np.ndarray, n: int) -> np.ndarray:
    """Explicit n-fold Kronecker power (the direct tensor-product oracle)."""
    out = np.array([[1.0]])
    for _ in range(n):
        out = np.kron(out, matrix)
    return out


def all_codewords_naive(code: BinaryCode) -> set[int]:
    """The codeword set via naive re-encoding."""
    words = set()
    for message in range(1 << code.k):
        word = 0
        for i in range(code.k):
            if (message >> i) & 1:
                word ^= code.generators[i]
        words.add(word)
    return words


@pytest.fixture(scope="session")
def zoo():
    return {entry.name: entry for entry in zoo_entries()}


@pytest.fixture(scope="session")
def zoo_codes():
    return [(entry.name, entry.code) for entry in zoo_entries()]


@pytest.fixture(scope="session")
def wsd_zoo_codes():
    from wsdcodes import is_weakly_self_dual

    return [
        (entry.name, entry.code)
        for entry in zoo_entries()
        if is_weakly_self_dual(entry.code)
    ]
