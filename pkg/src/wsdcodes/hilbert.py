"""Dense state-vector engine and combinatorial lemma sums.

Amplitudes are indexed by basis strings c1 c2 ... cn with the first
written bit as the most significant index bit, matching the packed-word
convention in :mod:`wsdcodes.gf2`.  The single rotation-like gate used
throughout is the real 2x2 matrix ((sin t, cos t), (cos t, -sin t)); its
n-fold tensor power is applied qubit by qubit (n * 2^n work), never as an
explicit 4^n matrix.

The lemma-sum functions (`dual_component_mass`, `self_dual_sum`,
`enumerator_inequality`) evaluate the same quantities combinatorially
from codeword weights, so they also work for codes too long for a state
vector (the Golay code at n=24, for instance).

State transformations write only their own output buffer; amplitude-pair
blocks within one qubit pass may be processed in any order with identical
results up to floating tolerance.  All query functions are read-only.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Sequence

import numpy as np

from .gf2 import (
    ENUMERATION_CAP,
    BinaryCode,
    CapacityError,
    InputError,
    bits_from_word,
    codewords,
    dual_code,
    inner_product,
    is_weakly_self_dual,
    rref,
    span_words,
    weight_distribution,
    word_from_bits,
)
from .enumerators import enumerator_eval

#: Largest qubit count for dense state vectors (2^22 amplitudes ~ 64 MiB).
STATE_CAP = 22
#: Bases within this of zero are treated as exactly zero in power kernels.
ZERO_SNAP = 1e-15
#: Coset tables beyond this many rows are refused.
_TABLE_ROW_CAP = 1 << 20


@dataclass(frozen=True)
class RotationGate:
    """The 2x2 real unitary ((sin t, cos t), (cos t, -sin t))."""

    theta: float

    @property
    def matrix(self) -> np.ndarray:
        s, c = math.sin(self.theta), math.cos(self.theta)
        return np.array([[s, c], [c, -s]], dtype=float)


def rotation_gate(theta: float) -> RotationGate:
    """Build the rotation-like gate; rejects non-finite angles."""
    if not math.isfinite(theta):
        raise InputError(f"angle must be finite, got {theta!r}")
    return RotationGate(float(theta))


@dataclass(frozen=True)
class StateVector:
    """Unit vector over the 2^n standard basis strings."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.n <= STATE_CAP:
            raise CapacityError(f"qubit count must be in 1..{STATE_CAP}, got {self.n}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise InputError(f"expected {1 << self.n} amplitudes, got {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-9:
            raise InputError(f"state norm {norm} deviates from 1 beyond 1e-9")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def basis_state(word: int, n: int) -> StateVector:
    """The standard basis vector |word> on n qubits."""
    if word < 0 or word >> n:
        raise InputError(f"basis word 0b{word:b} does not fit {n} qubits")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[word] = 1.0
    return StateVector(n, amps)


def code_state(code: BinaryCode) -> StateVector:
    """The uniform superposition over all codewords, (1/sqrt(2^k)) sum |c>."""
    if code.n > STATE_CAP:
        raise CapacityError(
            f"n={code.n} exceeds state cap {STATE_CAP}; use the combinatorial "
            f"lemma sums instead"
        )
    amps = np.zeros(1 << code.n, dtype=np.complex128)
    amps[codewords(code).astype(np.int64)] = 2.0 ** (-code.k / 2)
    return StateVector(code.n, amps)


def apply_s_theta(state: StateVector, theta: float) -> StateVector:
    """Apply the n-fold tensor power of the rotation gate, one qubit at a time."""
    gate = rotation_gate(theta).matrix.astype(np.complex128)
    psi = state.amplitudes.reshape((2,) * state.n)
    for q in range(state.n):
        psi = np.moveaxis(np.tensordot(gate, psi, axes=([1], [q])), 0, q)
    return StateVector(state.n, psi.reshape(-1))


def _snap(x: float) -> float:
    return 0.0 if abs(x) < ZERO_SNAP else x


def _sin_cos(theta: float) -> tuple[float, float]:
    if not math.isfinite(theta):
        raise InputError(f"angle must be finite, got {theta!r}")
    return _snap(math.sin(theta)), _snap(math.cos(theta))


def sin_cos_powers(theta: float, n: int) -> np.ndarray:
    """The vector p[w] = sin^(n-w) * cos^w for w = 0..n.

    Bases within ZERO_SNAP of zero are replaced by exact zeros first, so a
    positive power of a numerically-zero base vanishes exactly while 0^0
    stays 1, matching the algebra of the closed-form amplitude.
    """
    s, c = _sin_cos(theta)
    w = np.arange(n + 1)
    return np.power(s, n - w) * np.power(c, w)


def closed_form_amplitude(c: str | Sequence[int], a: str | Sequence[int], theta: float) -> float:
    """Amplitude of |a> in the tensor-power image of basis state |c>.

    Returns (-1)^(c.a) sin^(n - wt(c+a)) cos^(wt(c+a)) with c.a the integer
    inner product and c+a taken over GF(2).  The equivalent exponent form
    (n - wt c - wt a + 2 c.a, wt c + wt a - 2 c.a) is computed as well and
    the two are asserted to agree exactly as integers.
    """
    cw, cn = word_from_bits(c)
    aw, an = word_from_bits(a)
    if cn != an:
        raise InputError(f"length mismatch: |c|={cn}, |a|={an}")
    n = cn
    dot = inner_product(cw, aw)
    wt_xor = (cw ^ aw).bit_count()
    exp_sin, exp_cos = n - wt_xor, wt_xor
    alt_sin = n - cw.bit_count() - aw.bit_count() + 2 * dot
    alt_cos = cw.bit_count() + aw.bit_count() - 2 * dot
    assert (exp_sin, exp_cos) == (alt_sin, alt_cos), "exponent identity violated"
    s, co = _sin_cos(theta)
    sign = -1.0 if dot & 1 else 1.0
    return sign * s**exp_sin * co**exp_cos


def closed_form_amplitudes(c: int, n: int, theta: float) -> np.ndarray:
    """All 2^n closed-form amplitudes for one basis input, as a vector.

    Entry a equals ``closed_form_amplitude`` of (c, a); the whole column is
    evaluated with bulk popcounts, which keeps equivalence sweeps fast.
    """
    if n > STATE_CAP:
        raise CapacityError(f"n={n} exceeds state cap {STATE_CAP}")
    if c < 0 or c >> n:
        raise InputError(f"basis word 0b{c:b} does not fit length {n}")
    s, co = _sin_cos(theta)
    a = np.arange(1 << n, dtype=np.uint64)
    cw = np.uint64(c)
    wt_xor = np.bitwise_count(a ^ cw).astype(np.int64)
    dot = np.bitwise_count(a & cw).astype(np.int64)
    sign = 1.0 - 2.0 * (dot & 1)
    return sign * np.power(s, n - wt_xor) * np.power(co, wt_xor)


def _check_enum_caps(code: BinaryCode) -> None:
    if code.k > ENUMERATION_CAP or code.n - code.k > ENUMERATION_CAP:
        raise CapacityError(
            f"[{code.n},{code.k}] code: both k and n-k must be at most "
            f"{ENUMERATION_CAP} for combinatorial lemma sums"
        )


def _extension_rows(code: BinaryCode, dual: BinaryCode) -> tuple[int, ...]:
    """Dual-basis rows extending the code's basis to a basis of the dual.

    Requires C inside C-perp; the result has n - 2k rows and its XOR span
    picks one representative per coset of C in C-perp.
    """
    rows = list(code.generators)
    rank = code.k
    extension = []
    for g in dual.generators:
        new_rank, _ = rref(tuple(rows) + (g,), code.n)
        if new_rank > rank:
            extension.append(g)
            rows.append(g)
            rank = new_rank
    return tuple(extension)


@lru_cache(maxsize=64)
def _mass_table(code: BinaryCode) -> tuple[np.ndarray, int]:
    """Per-coset weight counts backing the dual-component mass.

    Returns (table, divisor): row i holds, for one coset representative a,
    the counts of wt(c + a) over all codewords c; the mass at theta is
    sum((table @ p)^2) / divisor with p = sin_cos_powers(theta, n).

    For weakly self-dual codes the rows are one per coset of C inside
    C-perp (each coset's inner sum appears 2^k times, cancelling the 1/2^k
    prefactor, so divisor is 1).  Otherwise there is one row per dual word
    and divisor is 2^k.
    """
    _check_enum_caps(code)
    n = code.n
    words = codewords(code)
    dual = dual_code(code)
    if is_weakly_self_dual(code):
        leaders = span_words(_extension_rows(code, dual), n)
        divisor = 1
    else:
        leaders = codewords(dual)
        divisor = 1 << code.k
    if len(leaders) > _TABLE_ROW_CAP:
        raise CapacityError(
            f"coset table would need {len(leaders)} rows (cap {_TABLE_ROW_CAP})"
        )
    table = np.empty((len(leaders), n + 1), dtype=np.int64)
    for i, a in enumerate(leaders):
        table[i] = np.bincount(np.bitwise_count(words ^ a), minlength=n + 1)
    table.setflags(write=False)
    return table, divisor


def dual_component_mass(code: BinaryCode, theta: float) -> float:
    """The dual-supported mass (1/2^k) sum over dual words a of the squared
    inner sum sum_c sin^(n-wt(c+a)) cos^(wt(c+a)).

    At most 1 for every code and angle: the transformed code state is a
    unit vector and this is the squared length of its component on the
    dual basis states.
    """
    table, divisor = _mass_table(code)
    sums = table @ sin_cos_powers(theta, code.n)
    return float(sums @ sums) / divisor


def dual_component_mass_from_state(code: BinaryCode, theta: float) -> float:
    """The same mass via an explicit state vector: transform the code state
    and project onto the span of the dual basis states."""
    state = apply_s_theta(code_state(code), theta)
    dual_idx = codewords(dual_code(code)).astype(np.int64)
    picked = state.amplitudes[dual_idx]
    return float(np.real(np.vdot(picked, picked)))


def self_dual_sum(code: BinaryCode, theta: float) -> float:
    """The dual weight sum |sum over dual words of sin^(n-wt) cos^(wt)|.

    Defined for weakly self-dual codes; bounded by 2^((n-2k)/2).
    """
    if not is_weakly_self_dual(code):
        raise InputError("self_dual_sum requires a weakly self-dual code")
    if code.n - code.k > ENUMERATION_CAP:
        raise CapacityError(
            f"dual dimension {code.n - code.k} exceeds cap {ENUMERATION_CAP}"
        )
    dual_dist = weight_distribution(dual_code(code))
    powers = sin_cos_powers(theta, code.n)
    return abs(math.fsum(a * powers[w] for w, a in enumerate(dual_dist.counts) if a))


def enumerator_inequality(code: BinaryCode, theta: float) -> float:
    """The transformed enumerator sum
    |sum_c (sin+cos)^(n-wt c) (sin-cos)^(wt c)|, bounded by 2^(n/2) for
    weakly self-dual codes (substitute x+y and x-y into the macwilliams
    identity to see it equals 2^k times the dual weight sum)."""
    if not is_weakly_self_dual(code):
        raise InputError("enumerator_inequality requires a weakly self-dual code")
    dist = weight_distribution(code)
    s, c = _sin_cos(theta)
    return abs(enumerator_eval(dist, s + c, s - c))


def theta_grid(steps: int = 101) -> np.ndarray:
    """Default angle grid: `steps` evenly spaced points on [0.01, pi-0.01]
    plus the special values pi/4 and pi/2, sorted and deduplicated."""
    if steps < 1:
        raise InputError(f"steps must be positive, got {steps}")
    pts = np.linspace(0.01, math.pi - 0.01, steps)
    return np.unique(np.concatenate([pts, [math.pi / 4, math.pi / 2]]))


def dump_amplitudes(state: StateVector, stream: IO[str]) -> None:
    """Diagnostic CSV dump: one row per basis string with real and
    imaginary parts."""
    writer = csv.writer(stream)
    writer.writerow(["basis", "real", "imag"])
    for idx, amp in enumerate(state.amplitudes):
        writer.writerow(
            [bits_from_word(idx, state.n), repr(float(amp.real)), repr(float(amp.imag))]
        )
