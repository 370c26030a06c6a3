"""Weight-distribution bounds for weakly self-dual codes.

All bounds are computed and compared in the base-2 logarithm domain so
that formula-only evaluation stays finite for lengths far beyond the
enumeration caps (2^(n/2) overflows doubles near n = 2048).  The exact
integer count always sits on the left of a comparison; equality is
accepted up to 1e-9 relative.

Codes of odd length satisfy the even-weight lambda identity only through
a derivation that assumes even n, so report assembly marks odd-length
codes as outside the derivation hypotheses instead of asserting the
bounds for them.

Pure functions; report rows are independent per weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gf2 import (
    BinaryCode,
    CodeMetrics,
    InputError,
    WeightDistribution,
    is_self_dual,
    is_weakly_self_dual,
)

#: Relative slack allowed when comparing an exact count against a bound.
COMPARE_TOLERANCE = 1e-9

_LOG2_SQRT_E = 0.5 * math.log2(math.e)


@dataclass(frozen=True)
class BoundValue:
    """A bound in log2 form, or the reason it does not apply."""

    log2_value: float | None
    applicable: bool
    reason: str = ""

    @property
    def value(self) -> float:
        """The bound as a plain float (may overflow to inf for huge n)."""
        if not self.applicable or self.log2_value is None:
            raise InputError(f"bound not applicable: {self.reason}")
        return 2.0**self.log2_value


def _not_applicable(reason: str) -> BoundValue:
    return BoundValue(log2_value=None, applicable=False, reason=reason)


def binary_entropy(x: float) -> float:
    """H2(x) = -x log2 x - (1-x) log2 (1-x), continued by 0 at x in {0, 1}."""
    if not 0.0 <= x <= 1.0:
        raise InputError(f"binary entropy needs x in [0, 1], got {x}")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _check_weight_range(n: int, w: int) -> BoundValue | None:
    if n < 2:
        raise InputError(f"length must be at least 2, got {n}")
    if not 0 < w < n / 2:
        return _not_applicable(f"w={w} outside the stated range 0 < w < n/2")
    return None


def bound_entropy(n: int, w: int) -> BoundValue:
    """Entropy-form bound: A_w <= 2^((1/2) H2(w/n) n) for 0 < w < n/2."""
    bad = _check_weight_range(n, w)
    if bad is not None:
        return bad
    return BoundValue(log2_value=0.5 * n * binary_entropy(w / n), applicable=True)


def bound_sqrt_e(n: int, w: int) -> BoundValue:
    """Polynomial-form bound: A_w <= sqrt(e) (n-w+1)^(w/2) for 0 < w < n/2."""
    bad = _check_weight_range(n, w)
    if bad is not None:
        return bad
    return BoundValue(
        log2_value=_LOG2_SQRT_E + 0.5 * w * math.log2(n - w + 1), applicable=True
    )


@dataclass(frozen=True)
class LambdaCheck:
    """One evaluation of the even-weight lambda inequality."""

    lhs: float
    rhs: float
    holds: bool


def lambda_family_check(
    dist: WeightDistribution, lam: float | Fraction
) -> LambdaCheck:
    """Check sum_j A_{2j} lambda^j <= (1 + lambda)^(n/2) at one lambda.

    The distribution must carry no odd-weight mass (the inequality is
    derived for weakly self-dual codes).  Passing a Fraction for an
    even-length distribution evaluates both sides in exact rational
    arithmetic; floats use compensated summation.
    """
    if not 0 < lam < 1:
        raise InputError(f"lambda must lie in (0, 1), got {lam}")
    if any(c for w, c in enumerate(dist.counts) if w % 2):
        raise InputError("distribution has odd-weight mass; inequality needs A_odd = 0")
    n = dist.n
    even_counts = dist.counts[0::2]
    if isinstance(lam, Fraction) and n % 2 == 0:
        lhs_exact = sum(a * lam**j for j, a in enumerate(even_counts))
        rhs_exact = (1 + lam) ** (n // 2)
        return LambdaCheck(float(lhs_exact), float(rhs_exact), lhs_exact <= rhs_exact)
    lam_f = float(lam)
    lhs = math.fsum(a * lam_f**j for j, a in enumerate(even_counts) if a)
    rhs = (1.0 + lam_f) ** (n / 2)
    return LambdaCheck(lhs, rhs, lhs <= rhs * (1.0 + 1e-12))


def exponent_objective(lam: float, alpha: float) -> float:
    """The exponent bound -(alpha/2) log2 lambda + (1/2) log2 (1 + lambda)
    whose minimum over lambda yields the entropy-form bound."""
    if not 0 < lam < 1:
        raise InputError(f"lambda must lie in (0, 1), got {lam}")
    return -0.5 * alpha * math.log2(lam) + 0.5 * math.log2(1.0 + lam)


def optimal_lambda(alpha: float) -> float:
    """Minimizer alpha/(1-alpha) of the exponent objective, for alpha in (0, 1/2)."""
    if not 0 < alpha < 0.5:
        raise InputError(f"alpha must lie in (0, 1/2), got {alpha}")
    return alpha / (1.0 - alpha)


def interval_constant(delta: float) -> float | None:
    """The interval constant c of the doubly-even comparison bound.

    c = 1/2 - sqrt((6 d - 1 + sqrt(1 - 8 d + 32 d^2)) / (8 (1 - d))), which
    may be negative (the weight interval [c, 1-c] then covers everything).
    Returns None if the outer radicand were negative; for 0 < delta < 1 it
    never is (the inner radicand is positive definite and the numerator is
    nonnegative on the whole interval), so this is only a guard.
    """
    if not 0 < delta < 1:
        raise InputError(f"delta must lie in (0, 1), got {delta}")
    inner = 1.0 - 8.0 * delta + 32.0 * delta * delta
    radicand = (6.0 * delta - 1.0 + math.sqrt(inner)) / (8.0 * (1.0 - delta))
    if radicand < 0:  # pragma: no cover - unreachable for delta in (0, 1)
        return None
    return 0.5 - math.sqrt(radicand)


def doubly_even_bound(n: int, w: int, delta: float) -> BoundValue:
    """Comparison bound for doubly-even self-dual codes:
    A_w <= 2^((H2(w/n) - 1/2) n) when w/n lies in [c, 1-c].

    The caller asserts the code class; this evaluates applicability of the
    weight ratio against the interval constant for the given delta = d/n.
    """
    if not 0 < w < n:
        raise InputError(f"w must lie in 1..{n - 1}, got {w}")
    c = interval_constant(delta)
    if c is None:  # pragma: no cover - see interval_constant
        return _not_applicable("interval constant undefined")
    ratio = w / n
    if not c <= ratio <= 1.0 - c:
        return _not_applicable(
            f"w/n={ratio:.4f} outside [c, 1-c] with c={c:.4f}"
        )
    return BoundValue(
        log2_value=(binary_entropy(ratio) - 0.5) * n, applicable=True
    )


def binomial_baseline(n: int, k: int, w: int) -> Fraction:
    """Expected count for a random [n, k] code: C(n, w) / 2^(n-k), exact."""
    if not 0 <= w <= n:
        raise InputError(f"w must lie in 0..{n}, got {w}")
    if not 0 <= k <= n:
        raise InputError(f"k must lie in 0..{n}, got {k}")
    return Fraction(math.comb(n, w), 1 << (n - k))


def log2_fraction(x: Fraction) -> float:
    """log2 of a positive rational, safe for huge numerators."""
    if x <= 0:
        raise InputError(f"need a positive rational, got {x}")
    return math.log2(x.numerator) - math.log2(x.denominator)


@dataclass(frozen=True)
class BoundRow:
    """Per-weight comparison of the exact count against every bound."""

    w: int
    count: int
    log2_count: float | None
    eq16: BoundValue
    eq17: BoundValue
    eq1: BoundValue
    baseline: Fraction
    log2_baseline: float
    min_slack: float | None
    holds: bool


@dataclass(frozen=True)
class BoundReport:
    """Bound comparison over all even weights in (0, n/2)."""

    n: int
    k: int
    rows: tuple[BoundRow, ...]
    within_hypotheses: bool
    note: str
    all_hold: bool


def count_within_bound(
    count: int, bound: BoundValue, tolerance: float = COMPARE_TOLERANCE
) -> bool:
    """True iff the exact count respects the bound up to relative slack.

    Inapplicable bounds and zero counts hold trivially; otherwise the
    comparison runs in the log2 domain so huge bounds never overflow.
    """
    if count == 0 or not bound.applicable:
        return True
    if 1.0 + tolerance <= 0.0:
        # bound * (1 + tolerance) is nonpositive: no positive count fits
        return False
    return math.log2(count) <= bound.log2_value + math.log2(1.0 + tolerance)


def tightest_bound_report(
    code: BinaryCode,
    dist: WeightDistribution,
    metrics: CodeMetrics,
    tolerance: float = COMPARE_TOLERANCE,
) -> BoundReport:
    """Compare A_w against every applicable bound for even w in (0, n/2).

    Rows carry the two weakly-self-dual bounds, the doubly-even comparison
    bound (when the code is doubly-even self-dual and the weight ratio lies
    in its interval), the binomial baseline, and per-row slack in log2.
    The baseline is an expectation, not a bound, so it never participates
    in `holds`.
    """
    if not is_weakly_self_dual(code):
        raise InputError("bound report requires a weakly self-dual code")
    if dist.n != code.n or dist.dimension != code.k:
        raise InputError("distribution does not match the code's (n, k)")
    n, k = code.n, code.k
    de_self_dual = metrics.doubly_even and is_self_dual(code)
    rows = []
    for w in range(2, (n + 1) // 2, 2):
        count = dist.counts[w]
        eq16 = bound_entropy(n, w)
        eq17 = bound_sqrt_e(n, w)
        if de_self_dual:
            eq1 = doubly_even_bound(n, w, float(metrics.delta))
        else:
            eq1 = _not_applicable("code is not doubly-even self-dual")
        base = binomial_baseline(n, k, w)
        log2_count = math.log2(count) if count else None
        slacks = [
            b.log2_value - log2_count
            for b in (eq16, eq17, eq1)
            if b.applicable and log2_count is not None
        ]
        rows.append(
            BoundRow(
                w=w,
                count=count,
                log2_count=log2_count,
                eq16=eq16,
                eq17=eq17,
                eq1=eq1,
                baseline=base,
                log2_baseline=log2_fraction(base),
                min_slack=min(slacks) if slacks else None,
                holds=all(
                    count_within_bound(count, b, tolerance) for b in (eq16, eq17, eq1)
                ),
            )
        )
    even_n = n % 2 == 0
    return BoundReport(
        n=n,
        k=k,
        rows=tuple(rows),
        within_hypotheses=even_n,
        note="" if even_n else "outside derivation hypotheses: odd code length",
        all_hold=all(r.holds for r in rows),
    )
