"""Inequality certification and report assembly behind the CLI.

A report document is a plain dict ready for JSON serialization under the
versioned "wsd-report/1" schema; the CSV renderer encodes the same
numbers (both go through Python's shortest round-trip float repr).
Report generation is deterministic given (input, options, tool version):
all sampling draws from a seeded generator.

Slack conventions: lemma checks report absolute slack (bound minus
value, so passing means slack >= -tolerance); the lambda-family grid
reports slack relative to its right-hand side; bound rows compare the
exact count in the log2 domain with relative tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib.metadata import version as _pkg_version

import numpy as np

from .bounds import (
    BoundReport,
    BoundValue,
    bound_entropy,
    bound_sqrt_e,
    count_within_bound,
    doubly_even_bound,
    binomial_baseline,
    lambda_family_check,
    log2_fraction,
    tightest_bound_report,
)
from .enumerators import macwilliams_transform
from .gf2 import (
    ENUMERATION_CAP,
    BinaryCode,
    InputError,
    WeightDistribution,
    code_metrics,
    dual_code,
    is_self_dual,
    is_weakly_self_dual,
    weight_distribution,
)
from .hilbert import (
    STATE_CAP,
    apply_s_theta,
    basis_state,
    closed_form_amplitudes,
    dual_component_mass,
    enumerator_inequality,
    self_dual_sum,
    theta_grid,
)

SCHEMA = "wsd-report/1"
CURVES_SCHEMA = "wsd-curves/1"
TOOL_NAME = "wsdcodes"
TOOL_VERSION = _pkg_version("wsdcodes")

_CHECK_JSON_SCHEMA = {
    "type": "object",
    "required": ["name", "checked", "passed", "reason", "worst_slack", "worst_at"],
    "properties": {
        "name": {"type": "string"},
        "checked": {"type": "boolean"},
        "passed": {"type": "boolean"},
        "reason": {"type": "string"},
        "worst_slack": {"type": ["number", "null"]},
        "worst_at": {"type": ["number", "null"]},
        "detail": {"type": "string"},
    },
}

_BOUND_VALUE_JSON_SCHEMA = {
    "type": "object",
    "oneOf": [
        {
            "properties": {"applicable": {"const": True}, "log2": {"type": "number"}},
            "required": ["applicable", "log2"],
        },
        {
            "properties": {"applicable": {"const": False}, "reason": {"type": "string"}},
            "required": ["applicable", "reason"],
        },
    ],
}

#: The documented shape of an analyze report (JSON Schema, draft 7).
REPORT_JSON_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "wsd-report/1",
    "type": "object",
    "required": [
        "schema", "tool", "config", "code", "distribution", "lemmas", "bounds", "pass",
    ],
    "properties": {
        "schema": {"const": "wsd-report/1"},
        "tool": {
            "type": "object",
            "required": ["name", "version"],
            "properties": {
                "name": {"type": "string"},
                "version": {"type": "string"},
            },
        },
        "config": {
            "type": "object",
            "required": ["theta_steps", "tolerance", "seed", "require_wsd"],
        },
        "code": {
            "type": "object",
            "required": [
                "name", "n", "k", "d", "delta",
                "weakly_self_dual", "self_dual", "doubly_even",
            ],
        },
        "distribution": {
            "type": "array",
            "items": {"type": "integer", "minimum": 0},
        },
        "lemmas": {
            "type": "object",
            "required": ["closed_form", "dual_mass", "dual_sum", "enumerator_sum"],
            "additionalProperties": _CHECK_JSON_SCHEMA,
        },
        "bounds": {
            "type": "object",
            "required": ["applicable"],
            "properties": {
                "applicable": {"type": "boolean"},
                "within_hypotheses": {"type": "boolean"},
                "note": {"type": "string"},
                "all_hold": {"type": "boolean"},
                "rows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": [
                            "w", "count", "log2_count", "eq16", "eq17", "eq1",
                            "baseline", "min_slack", "holds",
                        ],
                        "properties": {
                            "w": {"type": "integer", "minimum": 1},
                            "count": {"type": "integer", "minimum": 0},
                            "log2_count": {"type": ["number", "null"]},
                            "eq16": _BOUND_VALUE_JSON_SCHEMA,
                            "eq17": _BOUND_VALUE_JSON_SCHEMA,
                            "eq1": _BOUND_VALUE_JSON_SCHEMA,
                            "baseline": {
                                "type": "object",
                                "required": ["log2", "decimal", "exact"],
                            },
                            "min_slack": {"type": ["number", "null"]},
                            "holds": {"type": "boolean"},
                        },
                    },
                },
            },
        },
        "pass": {"type": "boolean"},
    },
}

#: Default grid sizes and slack tolerance, mirrored by the CLI flags.
DEFAULT_THETA_STEPS = 101
DEFAULT_LAMBDA_STEPS = 99
DEFAULT_TOLERANCE = 1e-9


def lambda_grid(steps: int = DEFAULT_LAMBDA_STEPS) -> np.ndarray:
    """`steps` evenly spaced interior points of (0, 1)."""
    if steps < 1:
        raise InputError(f"steps must be positive, got {steps}")
    return np.linspace(0.0, 1.0, steps + 2)[1:-1]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one lemma or soundness check."""

    name: str
    checked: bool
    passed: bool
    reason: str = ""
    worst_slack: float | None = None
    worst_at: float | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "reason": self.reason,
            "worst_slack": self.worst_slack,
            "worst_at": self.worst_at,
            "detail": self.detail,
        }


def _skip(name: str, reason: str) -> CheckResult:
    return CheckResult(name=name, checked=False, passed=True, reason=reason)


def check_closed_form(
    code: BinaryCode, tolerance: float, rng: np.random.Generator
) -> CheckResult:
    """Spot-check the closed-form amplitudes against dense application.

    Samples a few basis inputs and angles; the worst absolute amplitude
    difference must stay within `tolerance`.
    """
    n = code.n
    if n > STATE_CAP:
        return _skip("closed_form", f"n={n} exceeds state cap {STATE_CAP}")
    samples, angles = (4, 3) if n <= 16 else (2, 2)
    words = sorted({0, *(int(w) for w in rng.integers(0, 1 << n, size=samples))})
    thetas = rng.uniform(0.01, math.pi - 0.01, size=angles)
    worst = 0.0
    worst_at = None
    for c in words:
        for theta in thetas:
            applied = apply_s_theta(basis_state(c, n), float(theta)).amplitudes
            expected = closed_form_amplitudes(c, n, float(theta))
            err = float(np.max(np.abs(applied - expected)))
            if err > worst:
                worst, worst_at = err, float(theta)
    return CheckResult(
        name="closed_form",
        checked=True,
        passed=worst <= tolerance,
        worst_slack=tolerance - worst,
        worst_at=worst_at,
        detail=f"worst |difference| {worst:.3e} over {len(words)} basis inputs",
    )


def _grid_check(name, values, bound, thetas, tolerance, detail=""):
    slacks = bound - np.asarray(values)
    idx = int(np.argmin(slacks))
    worst = float(slacks[idx])
    return CheckResult(
        name=name,
        checked=True,
        passed=worst >= -tolerance,
        worst_slack=worst,
        worst_at=float(thetas[idx]),
        detail=detail,
    )


def check_mass_grid(code: BinaryCode, thetas: np.ndarray, tolerance: float) -> CheckResult:
    """Dual-component mass stays at most 1 across the grid (any code)."""
    values = [dual_component_mass(code, float(t)) for t in thetas]
    return _grid_check("dual_mass", values, 1.0, thetas, tolerance)


def check_self_dual_sum_grid(
    code: BinaryCode, thetas: np.ndarray, tolerance: float
) -> CheckResult:
    """The dual weight sum stays within 2^((n-2k)/2) (weakly self-dual only)."""
    if not is_weakly_self_dual(code):
        return _skip("dual_sum", "not weakly self-dual")
    bound = 2.0 ** ((code.n - 2 * code.k) / 2)
    values = [self_dual_sum(code, float(t)) for t in thetas]
    return _grid_check(
        "dual_sum", values, bound, thetas, tolerance, detail=f"bound {bound:g}"
    )


def check_enumerator_sum_grid(code: BinaryCode, thetas: np.ndarray, tolerance: float) -> CheckResult:
    """The transformed enumerator sum stays within 2^(n/2) (weakly self-dual)."""
    if not is_weakly_self_dual(code):
        return _skip("enumerator_sum", "not weakly self-dual")
    bound = 2.0 ** (code.n / 2)
    values = [enumerator_inequality(code, float(t)) for t in thetas]
    return _grid_check(
        "enumerator_sum", values, bound, thetas, tolerance, detail=f"bound {bound:g}"
    )


def check_lambda_grid(
    code: BinaryCode,
    dist: WeightDistribution,
    lambdas: np.ndarray,
    tolerance: float,
) -> CheckResult:
    """The even-weight lambda inequality across the grid (even-n, wsd only)."""
    if not is_weakly_self_dual(code):
        return _skip("lambda_family", "not weakly self-dual")
    if code.n % 2:
        return _skip("lambda_family", "outside derivation hypotheses: odd code length")
    worst = math.inf
    worst_at = None
    ok = True
    for lam in lambdas:
        res = lambda_family_check(dist, float(lam))
        slack = (res.rhs - res.lhs) / res.rhs
        if slack < worst:
            worst, worst_at = slack, float(lam)
        ok = ok and res.holds and slack >= -tolerance
    return CheckResult(
        name="lambda_family",
        checked=True,
        passed=ok,
        worst_slack=worst,
        worst_at=worst_at,
        detail="slack relative to (1+lambda)^(n/2)",
    )


def check_weight_bounds(
    code: BinaryCode, dist: WeightDistribution, tolerance: float
) -> CheckResult:
    """Both closed-form bounds against every count with 0 < w < n/2."""
    if not is_weakly_self_dual(code):
        return _skip("weight_bounds", "not weakly self-dual")
    if code.n % 2:
        return _skip("weight_bounds", "outside derivation hypotheses: odd code length")
    worst = math.inf
    worst_at = None
    ok = True
    for w in range(1, (code.n + 1) // 2):
        count = dist.counts[w]
        for bound in (bound_entropy(code.n, w), bound_sqrt_e(code.n, w)):
            ok = ok and count_within_bound(count, bound, tolerance)
            if count > 0 and bound.applicable:
                slack = bound.log2_value - math.log2(count)
                if slack < worst:
                    worst, worst_at = slack, float(w)
    return CheckResult(
        name="weight_bounds",
        checked=True,
        passed=ok,
        worst_slack=None if math.isinf(worst) else worst,
        worst_at=worst_at,
        detail=(
            "no nonzero counts below half length"
            if math.isinf(worst)
            else "worst log2(bound) - log2(count) over both bounds"
        ),
    )


def check_macwilliams(code: BinaryCode, dist: WeightDistribution) -> CheckResult:
    """Exact agreement of the transform with direct dual enumeration."""
    if code.n - code.k > ENUMERATION_CAP:
        return _skip("macwilliams", f"dual dimension exceeds {ENUMERATION_CAP}")
    transformed = macwilliams_transform(dist, code.k)
    enumerated = weight_distribution(dual_code(code))
    exact = transformed == enumerated
    return CheckResult(
        name="macwilliams",
        checked=True,
        passed=exact,
        detail="integer equality with enumerated dual distribution",
    )


# ---------------------------------------------------------------------------
# Documents


def _tool_block() -> dict:
    return {"name": TOOL_NAME, "version": TOOL_VERSION}


def _bound_value_json(b: BoundValue) -> dict:
    if b.applicable:
        return {"applicable": True, "log2": b.log2_value}
    return {"applicable": False, "reason": b.reason}


def _bounds_json(report: BoundReport) -> dict:
    rows = []
    for r in report.rows:
        rows.append(
            {
                "w": r.w,
                "count": r.count,
                "log2_count": r.log2_count,
                "eq16": _bound_value_json(r.eq16),
                "eq17": _bound_value_json(r.eq17),
                "eq1": _bound_value_json(r.eq1),
                "baseline": {
                    "log2": r.log2_baseline,
                    "decimal": float(r.baseline),
                    "exact": f"{r.baseline.numerator}/{r.baseline.denominator}",
                },
                "min_slack": r.min_slack,
                "holds": r.holds,
            }
        )
    return {
        "applicable": True,
        "within_hypotheses": report.within_hypotheses,
        "note": report.note,
        "rows": rows,
        "all_hold": report.all_hold,
    }


def analyze_code(
    code: BinaryCode,
    name: str,
    *,
    theta_steps: int = DEFAULT_THETA_STEPS,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    require_wsd: bool = False,
) -> dict:
    """Full pipeline for one code: metrics, lemma grid checks, bound table.

    Returns the report document; the top-level "pass" field is the exit
    criterion (lemma checks pass and, within derivation hypotheses, every
    bound row holds).
    """
    wsd = is_weakly_self_dual(code)
    if require_wsd and not wsd:
        raise InputError(f"{name}: not weakly self-dual (required by options)")
    dist = weight_distribution(code)
    metrics = code_metrics(code, dist)
    thetas = theta_grid(theta_steps)
    rng = np.random.default_rng(seed)

    lemmas = {
        "closed_form": check_closed_form(code, tolerance / 10.0, rng),
        "dual_mass": check_mass_grid(code, thetas, tolerance),
        "dual_sum": check_self_dual_sum_grid(code, thetas, tolerance),
        "enumerator_sum": check_enumerator_sum_grid(code, thetas, tolerance),
    }

    if wsd:
        bound_report = tightest_bound_report(code, dist, metrics, tolerance)
        bounds_json = _bounds_json(bound_report)
        bounds_ok = bound_report.all_hold or not bound_report.within_hypotheses
    else:
        bounds_json = {"applicable": False, "reason": "not weakly self-dual"}
        bounds_ok = True

    overall = all(c.passed for c in lemmas.values()) and bounds_ok
    return {
        "schema": SCHEMA,
        "tool": _tool_block(),
        "config": {
            "theta_steps": theta_steps,
            "tolerance": tolerance,
            "seed": seed,
            "require_wsd": require_wsd,
            "theta_grid": {
                "lo": 0.01,
                "hi": math.pi - 0.01,
                "steps": theta_steps,
                "extra": [math.pi / 4, math.pi / 2],
            },
        },
        "code": {
            "name": name,
            "n": code.n,
            "k": code.k,
            "d": metrics.d,
            "delta": float(metrics.delta),
            "delta_exact": f"{metrics.delta.numerator}/{metrics.delta.denominator}",
            "weakly_self_dual": metrics.weakly_self_dual,
            "self_dual": is_self_dual(code),
            "doubly_even": metrics.doubly_even,
        },
        "distribution": list(dist.counts),
        "lemmas": {key: c.to_json() for key, c in lemmas.items()},
        "bounds": bounds_json,
        "pass": overall,
    }


def failures_of(doc: dict) -> list[str]:
    """Human-readable failure lines (offending theta or w) for a report."""
    out = []
    for key, lemma in doc["lemmas"].items():
        if lemma["checked"] and not lemma["passed"]:
            at = lemma["worst_at"]
            where = f" at theta={at:.6f}" if at is not None else ""
            out.append(f"{key}: worst slack {lemma['worst_slack']:.3e}{where}")
    bounds = doc["bounds"]
    if bounds.get("applicable") and bounds.get("within_hypotheses"):
        for row in bounds["rows"]:
            if not row["holds"]:
                out.append(f"bounds: count {row['count']} exceeds a bound at w={row['w']}")
    return out


def report_csv(doc: dict) -> str:
    """The delimited form of a report: one row per even weight in (0, n/2).

    Encodes exactly the numbers of the JSON document; inapplicable or
    undefined cells hold NA.
    """
    lines = [
        "w,A_w,log2_bound_eq16,log2_bound_eq17,log2_bound_eq1,log2_baseline,min_slack"
    ]
    bounds = doc["bounds"]
    if not bounds.get("applicable"):
        return "\n".join(lines) + "\n"

    def cell(container: dict, key: str = "log2") -> str:
        if not container.get("applicable", True):
            return "NA"
        return repr(container[key])

    for row in bounds["rows"]:
        min_slack = "NA" if row["min_slack"] is None else repr(row["min_slack"])
        lines.append(
            ",".join(
                [
                    str(row["w"]),
                    str(row["count"]),
                    cell(row["eq16"]),
                    cell(row["eq17"]),
                    cell(row["eq1"]),
                    repr(row["baseline"]["log2"]),
                    min_slack,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def verify_code(
    code: BinaryCode,
    name: str,
    *,
    theta_steps: int = DEFAULT_THETA_STEPS,
    lambda_steps: int = DEFAULT_LAMBDA_STEPS,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
) -> dict:
    """The full property suite for one code (verify-lemmas command)."""
    dist = weight_distribution(code)
    thetas = theta_grid(theta_steps)
    lambdas = lambda_grid(lambda_steps)
    rng = np.random.default_rng(seed)
    checks = [
        check_closed_form(code, tolerance / 10.0, rng),
        check_mass_grid(code, thetas, tolerance),
        check_self_dual_sum_grid(code, thetas, tolerance),
        check_enumerator_sum_grid(code, thetas, tolerance),
        check_lambda_grid(code, dist, lambdas, tolerance),
        check_weight_bounds(code, dist, tolerance),
        check_macwilliams(code, dist),
    ]
    return {
        "name": name,
        "n": code.n,
        "k": code.k,
        "weakly_self_dual": is_weakly_self_dual(code),
        "checks": [c.to_json() for c in checks],
        "pass": all(c.passed for c in checks),
    }


_CHECK_LABELS = {
    "closed_form": "closed-form amplitudes",
    "dual_mass": "dual component mass",
    "dual_sum": "dual weight sum",
    "enumerator_sum": "transformed enumerator",
    "lambda_family": "lambda family",
    "weight_bounds": "weight bounds",
    "macwilliams": "macwilliams transform",
}


def verify_lines(result: dict) -> list[str]:
    """Render one verify result as aligned human-readable lines."""
    head = f"{result['name']}  [{result['n']},{result['k']}]"
    if result["weakly_self_dual"]:
        head += "  weakly self-dual"
    lines = [head]
    for check in result["checks"]:
        label = _CHECK_LABELS.get(check["name"], check["name"])
        if not check["checked"]:
            lines.append(f"  {label:<26} skipped ({check['reason']})")
            continue
        status = "PASS" if check["passed"] else "FAIL"
        body = ""
        if check["worst_slack"] is not None:
            body = f"worst slack {check['worst_slack']: .3e}"
            if check["worst_at"] is not None:
                body += f" at {check['worst_at']:.4f}"
        elif check["detail"]:
            body = check["detail"]
        lines.append(f"  {label:<26} {body}  {status}")
    return lines


def bound_curve_table(n: int, d: int | None = None, k: int | None = None) -> dict:
    """Formula-only bound curves for w = 1 .. n/2 - 1, in log2.

    The doubly-even comparison curve needs a design distance d (its
    interval constant depends on delta = d/n); the baseline needs a
    dimension k, defaulting to n/2.
    """
    if n % 2:
        raise InputError(f"curve length must be even, got {n}")
    if n < 2:
        raise InputError(f"length must be at least 2, got {n}")
    if k is None:
        k = n // 2
    if not 0 <= k <= n:
        raise InputError(f"k must lie in 0..{n}, got {k}")
    if d is not None and not 0 < d <= n // 2:
        raise InputError(f"d must lie in 1..n/2 = {n // 2}, got {d}")
    rows = []
    for w in range(1, n // 2):
        eq16 = bound_entropy(n, w)
        eq17 = bound_sqrt_e(n, w)
        eq1 = doubly_even_bound(n, w, d / n) if d is not None else None
        rows.append(
            {
                "w": w,
                "log2_eq16": eq16.log2_value,
                "log2_eq17": eq17.log2_value,
                "log2_eq1": eq1.log2_value if eq1 is not None and eq1.applicable else None,
                "log2_baseline": log2_fraction(binomial_baseline(n, k, w)),
            }
        )
    return {
        "schema": CURVES_SCHEMA,
        "tool": _tool_block(),
        "config": {"n": n, "d": d, "k": k},
        "rows": rows,
    }


def curves_csv(table: dict) -> str:
    """Single delimited table with one column per curve (NA when absent)."""
    lines = ["w,log2_bound_eq16,log2_bound_eq17,log2_bound_eq1,log2_baseline"]
    for row in table["rows"]:
        eq1 = "NA" if row["log2_eq1"] is None else repr(row["log2_eq1"])
        lines.append(
            f"{row['w']},{row['log2_eq16']!r},{row['log2_eq17']!r},{eq1},"
            f"{row['log2_baseline']!r}"
        )
    return "\n".join(lines) + "\n"


def per_curve_csv(table: dict) -> dict[str, str]:
    """Plot-ready two-column (w, log2 value) CSV text per curve."""
    curves = {
        "eq16": "log2_eq16",
        "eq17": "log2_eq17",
        "eq1": "log2_eq1",
        "baseline": "log2_baseline",
    }
    out = {}
    for name, key in curves.items():
        rows = [(r["w"], r[key]) for r in table["rows"] if r[key] is not None]
        if not rows:
            continue
        body = "\n".join(f"{w},{v!r}" for w, v in rows)
        out[name] = f"w,log2_bound\n{body}\n"
    return out
