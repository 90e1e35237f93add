"""Exact amplitude-level simulation of the quantum search stage.

The fingerprint register is a deterministic function of the index register, so
the full state collapses to n real amplitudes over the index register.  The
gate-level verifier at the bottom of this module justifies that reduction on
small instances by building the complete statevector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-12

I_GATE = np.eye(2)
X_GATE = np.array([[0.0, 1.0], [1.0, 0.0]])
Z_GATE = np.array([[1.0, 0.0], [0.0, -1.0]])
H_GATE = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


@dataclass(frozen=True)
class QubitBudget:
    index: int
    fingerprint: int
    ancilla: int = 1

    @property
    def total(self) -> int:
        return self.index + self.fingerprint + self.ancilla


@dataclass(frozen=True)
class OracleSpec:
    """The set of indices whose fingerprint equals the search target."""

    marked: frozenset

    @property
    def t(self) -> int:
        return len(self.marked)


@dataclass
class AmplitudeState:
    amplitudes: np.ndarray
    n: int
    qubit_budget: QubitBudget

    def norm_error(self) -> float:
        return abs(float(np.sum(self.amplitudes**2)) - 1.0)

    def check_norm(self):
        if self.norm_error() > NORM_TOL:
            raise AssertionError(f"norm drifted by {self.norm_error():.3e}")


def init_uniform(n: int, fingerprint_qubits: int = 0) -> AmplitudeState:
    """Uniform superposition over the n window indices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    amps = np.full(n, 1.0 / math.sqrt(n))
    budget = QubitBudget(index=max(1, n - 1).bit_length() if n > 1 else 0,
                         fingerprint=fingerprint_qubits)
    return AmplitudeState(amplitudes=amps, n=n, qubit_budget=budget)


def oracle_phase_flip(state: AmplitudeState, spec: OracleSpec) -> AmplitudeState:
    """Negate the amplitude of every marked index (in place)."""
    for k in spec.marked:
        if not 0 <= k < state.n:
            raise IndexError(f"marked index {k} out of range for n={state.n}")
    if spec.marked:
        idx = np.fromiter(spec.marked, dtype=np.int64)
        state.amplitudes[idx] = -state.amplitudes[idx]
    state.check_norm()
    return state


def diffusion(state: AmplitudeState, mean_scale: float = 1.0) -> AmplitudeState:
    """Inversion about the mean: a_k <- 2*mean - a_k (in place).

    mean_scale != 1 deliberately breaks unitarity; it exists only as a
    negative-control hook for the selftest.
    """
    mean = mean_scale * float(np.mean(state.amplitudes))
    state.amplitudes = 2.0 * mean - state.amplitudes
    if mean_scale == 1.0:
        state.check_norm()
    return state


def iteration_count(n: int, t: int = 1) -> int:
    """floor(pi / (4 theta)) with sin(theta) = sqrt(t/n).

    t = 0 means the oracle marks nothing; the schedule is undefined and we
    run zero iterations so the caller measures the untouched uniform state.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if t == 0:
        return 0
    if not 1 <= t <= n:
        raise ValueError("t must be in [0, n]")
    theta = math.asin(math.sqrt(t / n))
    # tiny slack so exact integer ratios (e.g. n=2, t=1) are not floored away
    return int(math.pi / (4.0 * theta) + 1e-9)


def closed_form_amplitudes(n: int, t: int, j: int):
    """(alpha_j, beta_j): per-basis-state amplitudes after j iterations.

    alpha applies to each marked index, beta to each unmarked one.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if t < 1 or t >= n:
        raise ValueError("closed form requires 1 <= t <= n-1")
    theta = math.asin(math.sqrt(t / n))
    alpha = math.sin((2 * j + 1) * theta) / math.sqrt(t)
    beta = math.cos((2 * j + 1) * theta) / math.sqrt(n - t)
    return alpha, beta


def recurrence_step(n: int, t: int, alpha: float, beta: float):
    """One iteration in the 2-dimensional invariant subspace.

    Independent of the vector simulation; used as its cross-check oracle.
    """
    norm = alpha * alpha * t + beta * beta * (n - t)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"input not normalized: alpha^2 t + beta^2 (n-t) = {norm}")
    a_next = ((n - 2 * t) * alpha + 2 * (n - t) * beta) / n
    b_next = ((n - 2 * t) * beta - 2 * t * alpha) / n
    return a_next, b_next


@dataclass
class GroverResult:
    measured_index: int
    success_probability: float
    final_state: AmplitudeState
    queries: int


def measure_indices(state: AmplitudeState, rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """Sample indices from the squared-amplitude distribution."""
    probs = state.amplitudes**2
    probs = probs / probs.sum()
    cdf = np.cumsum(probs)
    return np.searchsorted(cdf, rng.random(size), side="right").clip(0, state.n - 1)


def run_grover(
    n: int,
    marked: OracleSpec,
    r: int,
    rng: np.random.Generator,
    fingerprint_qubits: int = 0,
) -> GroverResult:
    """Apply r (oracle; diffusion) pairs to the uniform state and measure once."""
    if r < 0:
        raise ValueError("iteration count must be >= 0")
    state = init_uniform(n, fingerprint_qubits)
    queries = 0
    for _ in range(r):
        oracle_phase_flip(state, marked)
        queries += 1
        diffusion(state)
    if marked.marked:
        idx = np.fromiter(marked.marked, dtype=np.int64)
        success = float(np.sum(state.amplitudes[idx] ** 2))
    else:
        success = 0.0
    measured = int(measure_indices(state, rng, 1)[0])
    return GroverResult(
        measured_index=measured,
        success_probability=success,
        final_state=state,
        queries=queries,
    )


def _apply_single_qubit(psi: np.ndarray, gate: np.ndarray, qubit: int, total: int) -> np.ndarray:
    """Apply a 2x2 gate to one qubit of a statevector (qubit 0 = most significant)."""
    shaped = psi.reshape([2] * total)
    shaped = np.moveaxis(shaped, qubit, -1)
    shaped = shaped @ gate.T
    return np.moveaxis(shaped, -1, qubit).reshape(-1)


def gate_level_oracle_check(
    index_qubits: int,
    l: int,
    target_fingerprint: int,
    fingerprint_map,
    corrupt: bool = False,
) -> bool:
    """Verify the H / U_f / H oracle construction against the plain phase flip.

    Builds the full state (1/sqrt(n)) sum_k |k>|v_k>|1>, runs the three-step
    oracle, and checks the result equals the phase-flipped state with the
    ancilla restored to |1>.  `corrupt` flips the wrong basis state inside
    U_f, as a negative control.
    """
    total = index_qubits + l + 1
    if total > 14:
        raise ValueError(f"qubit budget exceeded: {total} > 14")
    n = 1 << index_qubits
    if len(fingerprint_map) != n:
        raise ValueError("fingerprint_map must assign a word to every index")
    if not 0 <= target_fingerprint < (1 << l):
        raise ValueError("target fingerprint does not fit in l bits")

    dim = 1 << total
    psi = np.zeros(dim)
    for k, v in enumerate(fingerprint_map):
        psi[(k << (l + 1)) | (int(v) << 1) | 1] = 1.0 / math.sqrt(n)

    # Expected: phase flip on matching indices, ancilla still |1>.
    expected = psi.copy()
    for k, v in enumerate(fingerprint_map):
        if int(v) == target_fingerprint:
            i = (k << (l + 1)) | (int(v) << 1) | 1
            expected[i] = -expected[i]

    ancilla = total - 1
    psi = _apply_single_qubit(psi, H_GATE, ancilla, total)
    # U_f: |v>|b> -> |v>|b xor f(v)> on the last l+1 qubits.
    flip_v = target_fingerprint
    if corrupt:
        flip_v = (target_fingerprint + 1) % (1 << l)
    out = psi.copy()
    for i in range(dim):
        v = (i >> 1) & ((1 << l) - 1)
        if v == flip_v:
            out[i] = psi[i ^ 1]
    psi = out
    psi = _apply_single_qubit(psi, H_GATE, ancilla, total)

    return bool(np.max(np.abs(psi - expected)) < 1e-10)
