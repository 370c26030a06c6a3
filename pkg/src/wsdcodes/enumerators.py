"""Weight-enumerator transforms with exact integer arithmetic.

The dual-distribution transform is computed through Krawtchouk sums over
Python big ints, so it holds bit-exactly and can serve as a test oracle
against direct dual enumeration.  Floating point appears only in
:func:`enumerator_eval`, the two-variable polynomial evaluation.

Pure functions; safe for concurrent use.
"""

from __future__ import annotations

import math

from .gf2 import InputError, WeightDistribution


def krawtchouk(w: int, j: int, n: int) -> int:
    """Krawtchouk kernel K_w(j; n) = sum_i (-1)^i C(j, i) C(n-j, w-i).

    Computed by the direct double sum; n <= 64 keeps it cheap and avoids
    recurrence sign pitfalls.
    """
    total = 0
    for i in range(max(0, w - (n - j)), min(j, w) + 1):
        term = math.comb(j, i) * math.comb(n - j, w - i)
        total += -term if i & 1 else term
    return total


def macwilliams_transform(dist: WeightDistribution, k: int) -> WeightDistribution:
    """Distribution of the dual of a k-dimensional code with distribution `dist`.

    A'_w = (1/2^k) sum_j A_j K_w(j; n), with the division required to be
    exact; a remainder means `dist` is not the distribution of any
    k-dimensional code.
    """
    n = dist.n
    if not 0 <= k <= n:
        raise InputError(f"dimension k={k} outside 0..{n}")
    order = 1 << k
    out = []
    for w in range(n + 1):
        total = sum(dist.counts[j] * krawtchouk(w, j, n) for j in range(n + 1))
        quotient, remainder = divmod(total, order)
        if remainder:
            raise InputError(
                f"inconsistent distribution: transform coefficient at w={w} "
                f"is {total}/{order}, not an integer"
            )
        out.append(quotient)
    return WeightDistribution(n, tuple(out))


def enumerator_eval(dist: WeightDistribution, x: float, y: float) -> float:
    """Evaluate sum_w A_w x^(n-w) y^w with compensated summation."""
    n = dist.n
    return math.fsum(
        a * x ** (n - w) * y**w for w, a in enumerate(dist.counts) if a
    )
