"""Orchestration of the hybrid search: random hash draw + amplitude amplification."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import BitString, as_bitstring, build_vocabulary, find_occurrences_classical
from .fingerprint import (
    FingerprintWord,
    HashFamily,
    freivalds_family,
    hashed_vocabulary,
)
from .grover import OracleSpec, QubitBudget, iteration_count, run_grover


@dataclass(frozen=True)
class SearchConfig:
    c: int = 3
    seed: int = 0
    verify_classically: bool = False

    def __post_init__(self):
        if self.c < 3:
            raise ValueError("c must be >= 3")


@dataclass
class SearchOutcome:
    index: int
    hash_id: int
    iterations: int
    oracle_queries: int
    qubit_budget: QubitBudget
    marked_count: int
    success_probability: float
    is_correct: bool = None
    contract_violation: bool = None

    def to_dict(self) -> dict:
        out = {
            "index": self.index,
            "hash_id": self.hash_id,
            "iterations": self.iterations,
            "queries": self.oracle_queries,
            "qubits": {
                "index": self.qubit_budget.index,
                "fingerprint": self.qubit_budget.fingerprint,
                "ancilla": self.qubit_budget.ancilla,
            },
            "marked_count": self.marked_count,
            "success_probability": self.success_probability,
        }
        if self.is_correct is not None:
            out["is_correct"] = self.is_correct
        if self.contract_violation:
            out["contract_violation"] = True
        return out


def split_rng(seed):
    """One substream for the classical hash draw, one for measurement."""
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    hash_ss, measure_ss = seed.spawn(2)
    return np.random.default_rng(hash_ss), np.random.default_rng(measure_ss)


@dataclass
class A1Result:
    index: int
    marked_count: int
    iterations: int
    queries: int
    success_probability: float
    final_state: object


def procedure_A1(hashed_vocab, target: FingerprintWord, rng: np.random.Generator) -> A1Result:
    """Amplitude amplification over the hashed vocabulary, scheduled for one match.

    The iteration count always assumes a single marked window, mirroring what
    hardware would do under the unique-occurrence contract; collisions simply
    enlarge the marked set and are reported as-is.
    """
    if any(fp.width != target.width for fp in hashed_vocab):
        raise ValueError("fingerprint width mismatch between vocabulary and target")
    n = len(hashed_vocab)
    marked = OracleSpec(frozenset(k for k, fp in enumerate(hashed_vocab) if fp == target))
    r = iteration_count(n, 1) if n > 1 and marked.t > 0 else 0
    result = run_grover(n, marked, r, rng, fingerprint_qubits=target.width)
    return A1Result(
        index=result.measured_index,
        marked_count=marked.t,
        iterations=r,
        queries=result.queries,
        success_probability=result.success_probability,
        final_state=result.final_state,
    )


def algorithm_A2(
    text: BitString,
    w: BitString,
    family: HashFamily,
    config: SearchConfig,
) -> SearchOutcome:
    """Draw a hash function uniformly, fingerprint everything, amplify, measure."""
    text, w = as_bitstring(text), as_bitstring(w)
    vocab = build_vocabulary(text, len(w))
    occurrences = find_occurrences_classical(text, w)
    contract_violation = len(occurrences) != 1

    hash_rng, measure_rng = split_rng(config.seed)
    j = int(hash_rng.integers(family.size))
    hashed = hashed_vocabulary(vocab, family, j)
    target = family.evaluate(j, w)
    a1 = procedure_A1(hashed, target, measure_rng)

    outcome = SearchOutcome(
        index=a1.index,
        hash_id=j,
        iterations=a1.iterations,
        oracle_queries=a1.queries,
        qubit_budget=a1.final_state.qubit_budget,
        marked_count=a1.marked_count,
        success_probability=a1.success_probability,
        contract_violation=contract_violation or None,
    )
    if config.verify_classically:
        outcome.is_correct = vocab.windows[a1.index] == w
    return outcome


def algorithm_A(text: BitString, w: BitString, config: SearchConfig) -> SearchOutcome:
    """The concrete search: algorithm_A2 instantiated with the first-primes family."""
    text, w = as_bitstring(text), as_bitstring(w)
    n = len(text) - len(w) + 1
    if n < 1:
        raise ValueError("pattern longer than text")
    family = freivalds_family(config.c, n, len(w))
    return algorithm_A2(text, w, family, config)
