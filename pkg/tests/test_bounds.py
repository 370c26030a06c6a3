import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from wsdcodes import (
    BinaryCode,
    InputError,
    WeightDistribution,
    binary_entropy,
    binomial_baseline,
    bound_entropy,
    bound_sqrt_e,
    code_metrics,
    count_within_bound,
    doubly_even_bound,
    exponent_objective,
    interval_constant,
    lambda_family_check,
    optimal_lambda,
    tightest_bound_report,
    weight_distribution,
)
from wsdcodes.bounds import BoundValue, log2_fraction


def golden_section_minimum(f, lo, hi, iterations=200):
    """Independent 1-D minimizer for unimodal f on [lo, hi]."""
    inv_phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return (a + b) / 2


def interval_constant_decimal(delta: str) -> Decimal:
    """High-precision re-evaluation of the interval constant."""
    getcontext().prec = 50
    d = Decimal(delta)
    inner = (1 - 8 * d + 32 * d * d).sqrt()
    radicand = (6 * d - 1 + inner) / (8 * (1 - d))
    return Decimal("0.5") - radicand.sqrt()


# ---------------------------------------------------------------------------
# binary entropy


def test_entropy_half():
    assert binary_entropy(0.5) == 1.0


def test_entropy_half_inverse_point():
    # the inverse of 1/2 is 0.1100... so H2 there must be 1/2
    assert binary_entropy(0.1100) == pytest.approx(0.5, abs=5e-4)


def test_entropy_third():
    assert binary_entropy(1 / 3) == pytest.approx(0.918296, abs=1e-6)


def test_entropy_continuity_at_edges():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0


@pytest.mark.parametrize("bad", [-0.1, 1.1])
def test_entropy_domain(bad):
    with pytest.raises(InputError):
        binary_entropy(bad)


# ---------------------------------------------------------------------------
# the two weight bounds


def test_bound_entropy_golay_weight(zoo):
    b = bound_entropy(24, 8)
    assert b.applicable
    assert b.log2_value == pytest.approx(12 * binary_entropy(1 / 3), rel=1e-12)
    assert b.log2_value == pytest.approx(11.0196, abs=1e-3)
    counts = weight_distribution(zoo["golay24"].code).counts
    assert counts[8] == 759 <= b.value


def test_bound_entropy_excludes_half():
    b = bound_entropy(8, 4)
    assert not b.applicable
    with pytest.raises(InputError):
        b.value


def test_bound_entropy_small_ratio():
    assert bound_entropy(100, 2).log2_value == pytest.approx(
        50 * binary_entropy(0.02), rel=1e-12
    )
    assert bound_entropy(100, 2).log2_value == pytest.approx(7.07, abs=1e-2)


def test_bound_sqrt_e_golay_weight(zoo):
    b = bound_sqrt_e(24, 8)
    assert b.value == pytest.approx(math.sqrt(math.e) * 17**4, rel=1e-12)
    counts = weight_distribution(zoo["golay24"].code).counts
    assert counts[8] == 759 <= b.value


def test_bound_sqrt_e_short():
    assert bound_sqrt_e(4, 1).value == pytest.approx(math.sqrt(math.e) * 2, rel=1e-12)


def test_bound_sqrt_e_wide():
    assert bound_sqrt_e(100, 2).value == pytest.approx(
        math.sqrt(math.e) * 99, rel=1e-12
    )


def test_bound_sqrt_e_monotone_in_n():
    for w in (1, 3, 8):
        values = [bound_sqrt_e(n, w).log2_value for n in range(2 * w + 1, 200)]
        assert all(b >= a for a, b in zip(values, values[1:]))


def test_weight_bounds_on_wsd_zoo(wsd_zoo_codes):
    for name, code in wsd_zoo_codes:
        if code.n % 2:
            continue
        counts = weight_distribution(code).counts
        for w in range(1, (code.n + 1) // 2):
            for bound in (bound_entropy(code.n, w), bound_sqrt_e(code.n, w)):
                assert count_within_bound(counts[w], bound, 1e-9), (name, w)


# ---------------------------------------------------------------------------
# lambda family


def test_lambda_pair_equality():
    check = lambda_family_check(WeightDistribution(2, (1, 0, 1)), 0.5)
    assert check.lhs == pytest.approx(1.5, abs=0)
    assert check.rhs == pytest.approx(1.5, abs=0)
    assert check.holds


def test_lambda_tiny_limit():
    check = lambda_family_check(WeightDistribution(2, (1, 0, 1)), 1e-12)
    assert check.lhs == pytest.approx(1.0, abs=1e-11)
    assert check.holds


def test_lambda_golay_grid(zoo):
    dist = weight_distribution(zoo["golay24"].code)
    for i in range(1, 100):
        assert lambda_family_check(dist, i / 100).holds


def test_lambda_exact_rational_mode(zoo):
    dist = weight_distribution(zoo["hamming8"].code)
    exact = lambda_family_check(dist, Fraction(1, 3))
    floaty = lambda_family_check(dist, 1 / 3)
    assert exact.holds and floaty.holds
    assert exact.lhs == pytest.approx(floaty.lhs, rel=1e-12)
    assert exact.rhs == pytest.approx(floaty.rhs, rel=1e-12)


def test_lambda_rejects_odd_mass():
    with pytest.raises(InputError, match="odd-weight"):
        lambda_family_check(WeightDistribution(3, (1, 0, 0, 1)), 0.5)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.5, 2.0])
def test_lambda_domain(bad):
    with pytest.raises(InputError):
        lambda_family_check(WeightDistribution(2, (1, 0, 1)), bad)


# ---------------------------------------------------------------------------
# optimal lambda


def test_optimal_lambda_third():
    assert optimal_lambda(1 / 3) == pytest.approx(0.5, rel=1e-12)


def test_optimal_lambda_quarter_hits_entropy():
    lam = optimal_lambda(0.25)
    assert lam == pytest.approx(1 / 3, rel=1e-12)
    assert exponent_objective(lam, 0.25) == pytest.approx(
        0.5 * binary_entropy(0.25), rel=1e-12
    )


def test_optimal_lambda_matches_golden_section():
    for alpha in (0.3, 0.12, 0.45):
        numeric = golden_section_minimum(
            lambda lam: exponent_objective(lam, alpha), 1e-6, 1 - 1e-6
        )
        assert numeric == pytest.approx(optimal_lambda(alpha), abs=1e-6)


@pytest.mark.parametrize("bad", [0.0, 0.5, -0.2, 0.9])
def test_optimal_lambda_domain(bad):
    with pytest.raises(InputError):
        optimal_lambda(bad)


def test_derivation_consistency():
    # plugging the optimal lambda back into the exponent chain recovers
    # the entropy-form bound
    for n, w in ((24, 8), (100, 2), (64, 13), (30, 9)):
        lam = optimal_lambda(w / n)
        log2_via_lambda = -0.5 * w * math.log2(lam) + 0.5 * n * math.log2(1 + lam)
        assert log2_via_lambda == pytest.approx(
            bound_entropy(n, w).log2_value, abs=1.5e-9
        )


# ---------------------------------------------------------------------------
# interval constant and the doubly-even bound


def test_interval_constant_reference_value():
    c = interval_constant(0.1100)
    assert c > 0.27
    assert c == pytest.approx(float(interval_constant_decimal("0.1100")), abs=1e-3)
    assert c == pytest.approx(0.2714, abs=1e-3)


def test_interval_constant_golay():
    assert interval_constant(1 / 3) == pytest.approx(-0.1672, abs=1e-4)


def test_interval_constant_vanishing_delta():
    assert interval_constant(1e-12) == pytest.approx(0.5, abs=1e-5)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.1, 2.0])
def test_interval_constant_domain(bad):
    with pytest.raises(InputError):
        interval_constant(bad)


def test_doubly_even_bound_golay_row(zoo):
    b = doubly_even_bound(24, 8, 1 / 3)
    assert b.applicable  # c is negative, every ratio qualifies
    assert b.log2_value == pytest.approx(10.04, abs=1e-2)
    counts = weight_distribution(zoo["golay24"].code).counts
    assert counts[8] == 759 <= b.value <= 1100


def test_doubly_even_bound_outside_interval():
    # ratio 0.2 sits below c ~ 0.2714 for delta = 0.1100
    b = doubly_even_bound(100, 20, 0.1100)
    assert not b.applicable
    assert "outside" in b.reason


def test_doubly_even_bound_at_half():
    assert doubly_even_bound(24, 12, 1 / 3).log2_value == pytest.approx(12.0, rel=1e-12)


def test_doubly_even_bound_domain():
    with pytest.raises(InputError):
        doubly_even_bound(24, 0, 0.3)


# ---------------------------------------------------------------------------
# baseline


def test_baseline_examples():
    assert binomial_baseline(2, 1, 0) == Fraction(1, 2)
    assert binomial_baseline(24, 12, 8) == Fraction(735471, 4096)
    assert float(binomial_baseline(24, 12, 8)) == pytest.approx(179.56, abs=1e-2)
    assert binomial_baseline(8, 4, 4) == Fraction(70, 16)


def test_baseline_huge_length_stays_finite():
    value = log2_fraction(binomial_baseline(4096, 2048, 1000))
    assert math.isfinite(value)


def test_baseline_domain():
    with pytest.raises(InputError):
        binomial_baseline(8, 4, 9)


# ---------------------------------------------------------------------------
# report


def _report_for(code):
    dist = weight_distribution(code)
    return tightest_bound_report(code, dist, code_metrics(code, dist))


def test_report_golay_w8(zoo):
    report = _report_for(zoo["golay24"].code)
    assert report.all_hold and report.within_hypotheses
    row = {r.w: r for r in report.rows}[8]
    assert row.count == 759
    assert row.eq16.value == pytest.approx(2.0 ** (12 * binary_entropy(1 / 3)), rel=1e-12)
    assert row.eq17.value == pytest.approx(math.sqrt(math.e) * 17**4, rel=1e-12)
    assert row.eq1.applicable and row.eq1.value == pytest.approx(1052.13, abs=0.01)
    assert row.baseline == Fraction(735471, 4096)
    assert row.holds
    assert row.min_slack == pytest.approx(
        row.eq1.log2_value - math.log2(759), rel=1e-12
    )


def test_report_pair_is_empty():
    report = _report_for(BinaryCode.from_bits(["11"]))
    assert report.rows == ()
    assert report.all_hold


def test_report_hamming_zero_rows(zoo):
    report = _report_for(zoo["hamming8"].code)
    row = {r.w: r for r in report.rows}[2]
    assert row.count == 0 and row.holds
    assert row.log2_count is None and row.min_slack is None


def test_report_requires_wsd():
    code = BinaryCode.from_bits(["111"])
    dist = weight_distribution(code)
    with pytest.raises(InputError, match="weakly self-dual"):
        tightest_bound_report(code, dist, code_metrics(code, dist))


def test_report_odd_length_outside_hypotheses():
    code = BinaryCode.from_bits(["110"])  # weakly self-dual, odd n
    report = _report_for(code)
    assert not report.within_hypotheses
    assert "odd" in report.note


def test_report_eq1_reason_for_non_self_dual(zoo):
    report = _report_for(zoo["reedmuller_1_4"].code)
    assert all(not r.eq1.applicable for r in report.rows)
    assert all("doubly-even self-dual" in r.eq1.reason for r in report.rows)


def test_count_within_bound_degenerate_tolerance():
    bound = BoundValue(log2_value=10.0, applicable=True)
    assert not count_within_bound(5, bound, -1.0)
    assert count_within_bound(0, bound, -1.0)
