import math

import numpy as np
import pytest

from fingergrover.grover import (
    H_GATE,
    I_GATE,
    X_GATE,
    Z_GATE,
    OracleSpec,
    closed_form_amplitudes,
    diffusion,
    gate_level_oracle_check,
    init_uniform,
    iteration_count,
    measure_indices,
    oracle_phase_flip,
    recurrence_step,
    run_grover,
)


def test_gates_unitary_and_related():
    for g in (I_GATE, X_GATE, Z_GATE, H_GATE):
        assert np.allclose(g @ g.T.conj(), np.eye(2), atol=1e-12)
    assert np.allclose(H_GATE @ H_GATE, np.eye(2), atol=1e-12)
    assert np.allclose(H_GATE @ X_GATE @ H_GATE, Z_GATE, atol=1e-12)


def test_init_uniform():
    s = init_uniform(4)
    assert np.allclose(s.amplitudes, 0.5)
    assert s.qubit_budget.index == 2
    assert init_uniform(1).amplitudes.tolist() == [1.0]
    s3 = init_uniform(3)
    assert np.allclose(s3.amplitudes, 1 / math.sqrt(3))
    assert abs(np.sum(s3.amplitudes**2) - 1) < 1e-12


def test_oracle_phase_flip():
    s = oracle_phase_flip(init_uniform(4), OracleSpec(frozenset({2})))
    assert np.allclose(s.amplitudes, [0.5, 0.5, -0.5, 0.5])

    s = oracle_phase_flip(init_uniform(4), OracleSpec(frozenset()))
    assert np.allclose(s.amplitudes, 0.5)

    s = init_uniform(4)
    oracle_phase_flip(s, OracleSpec(frozenset({1})))
    oracle_phase_flip(s, OracleSpec(frozenset({1})))
    assert np.allclose(s.amplitudes, 0.5)

    with pytest.raises(IndexError):
        oracle_phase_flip(init_uniform(4), OracleSpec(frozenset({4})))


def test_diffusion():
    s = diffusion(init_uniform(8))
    assert np.allclose(s.amplitudes, 1 / math.sqrt(8))

    s = init_uniform(4)
    s.amplitudes = np.array([0.5, 0.5, -0.5, 0.5])
    diffusion(s)
    assert np.allclose(s.amplitudes, [0.0, 0.0, 1.0, 0.0], atol=1e-12)

    s = oracle_phase_flip(init_uniform(8), OracleSpec(frozenset({3})))
    before = s.amplitudes.copy()
    diffusion(diffusion(s))
    assert np.allclose(s.amplitudes, before, atol=1e-12)


def test_iteration_count_examples():
    assert iteration_count(4, 1) == 1
    assert iteration_count(2, 1) == 1
    assert iteration_count(1024, 1) == 25
    assert iteration_count(8, 0) == 0
    # floor loses < 1 and the arcsin > 1/sqrt(n) correction adds at most
    # (pi/4)(2 - 1/arcsin(1/2)) ~ 0.071, so the deviation stays under 1.08
    for n in range(4, 200):
        r = iteration_count(n, 1)
        assert r <= math.pi / 4 * math.sqrt(n)
        assert abs(r - math.pi / 4 * math.sqrt(n)) <= 1.08


def test_closed_form_examples():
    alpha, beta = closed_form_amplitudes(4, 1, 1)
    assert abs(alpha - 1.0) < 1e-12 and abs(beta) < 1e-12

    alpha, beta = closed_form_amplitudes(4, 1, 0)
    assert abs(alpha - 0.5) < 1e-12 and abs(beta - 0.5) < 1e-12

    alpha, _ = closed_form_amplitudes(3, 1, 1)
    assert abs(alpha - 5 / (3 * math.sqrt(3))) < 1e-12
    assert abs(alpha**2 - 25 / 27) < 1e-12

    with pytest.raises(ValueError):
        closed_form_amplitudes(4, 0, 1)
    with pytest.raises(ValueError):
        closed_form_amplitudes(4, 4, 1)


def test_recurrence_examples():
    assert np.allclose(recurrence_step(4, 1, 0.5, 0.5), (1.0, 0.0), atol=1e-12)

    a, b = recurrence_step(2, 1, 1 / math.sqrt(2), 1 / math.sqrt(2))
    assert abs(a - 1 / math.sqrt(2)) < 1e-12
    assert abs(b + 1 / math.sqrt(2)) < 1e-12

    # norm preserved
    a, b = 0.3, math.sqrt((1 - 0.09 * 2) / 6)
    a2, b2 = recurrence_step(8, 2, a, b)
    assert abs(a2 * a2 * 2 + b2 * b2 * 6 - 1) < 1e-12

    with pytest.raises(ValueError):
        recurrence_step(4, 1, 1.0, 1.0)


def test_run_grover_examples():
    rng = np.random.default_rng(0)
    res = run_grover(4, OracleSpec(frozenset({2})), 1, rng)
    assert abs(res.success_probability - 1.0) < 1e-12
    assert res.measured_index == 2
    assert res.queries == 1

    res = run_grover(2, OracleSpec(frozenset({0})), 1, rng)
    assert abs(res.success_probability - 0.5) < 1e-12

    res = run_grover(8, OracleSpec(frozenset()), 3, rng)
    assert np.allclose(res.final_state.amplitudes, 1 / math.sqrt(8))
    assert res.success_probability == 0.0


def test_three_way_equivalence():
    rng = np.random.default_rng(1)
    for n in range(2, 65):
        for t in range(1, min(4, n - 1) + 1):
            max_j = int(2 * math.sqrt(n))
            alpha, beta = 1 / math.sqrt(n), 1 / math.sqrt(n)
            marked = OracleSpec(frozenset(range(t)))
            for j in range(max_j + 1):
                cf_a, cf_b = closed_form_amplitudes(n, t, j)
                assert abs(alpha - cf_a) < 1e-9
                assert abs(beta - cf_b) < 1e-9
                res = run_grover(n, marked, j, rng)
                assert abs(res.final_state.amplitudes[0] - cf_a) < 1e-9
                if t < n:
                    assert abs(res.final_state.amplitudes[-1] - cf_b) < 1e-9
                alpha, beta = recurrence_step(n, t, alpha, beta)


def test_failure_bound_single_target():
    ns = [2**k for k in range(1, 13)]
    ns += list(np.random.default_rng(2).integers(3, 4097, size=20))
    for n in ns:
        n = int(n)
        r = iteration_count(n, 1)
        theta = math.asin(1 / math.sqrt(n))
        assert 1 - math.sin((2 * r + 1) * theta) ** 2 <= 1 / n + 1e-12


def test_measurement_frequencies_within_4_sigma():
    rng = np.random.default_rng(3)
    res = run_grover(5, OracleSpec(frozenset({1})), 1, rng)
    probs = res.final_state.amplitudes ** 2
    samples = measure_indices(res.final_state, rng, size=100_000)
    counts = np.bincount(samples, minlength=5)
    for k in range(5):
        sigma = math.sqrt(probs[k] * (1 - probs[k]) / 100_000)
        assert abs(counts[k] / 100_000 - probs[k]) <= 4 * sigma + 1e-9


def test_gate_level_oracle_examples():
    rng = np.random.default_rng(4)
    fmap = [0, 1, 2, 3]
    assert gate_level_oracle_check(2, 2, 1, fmap)
    # no matching index: U_f acts trivially on the populated span
    assert gate_level_oracle_check(2, 2, 3, [0, 1, 2, 0])
    assert not gate_level_oracle_check(2, 2, 1, fmap, corrupt=True)
    with pytest.raises(ValueError):
        gate_level_oracle_check(10, 5, 0, [0] * 1024)
    # random maps across the allowed sizes
    for iq in (2, 3, 4):
        for l in (2, 3):
            m = rng.integers(0, 1 << l, size=1 << iq)
            target = int(m[int(rng.integers(1 << iq))])
            assert gate_level_oracle_check(iq, l, target, m)
