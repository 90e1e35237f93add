"""Command-line front end: search, analyze, sweep, verify-family, selftest.

Exit codes: 0 success, 1 usage or I/O error, 2 contract violation
(the pattern does not occur exactly once).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .core import BitString, build_vocabulary, find_occurrences_classical
from .fingerprint import bad_prime_census, freivalds_family, verify_strong_universality
from .grover import (
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
    oracle_phase_flip,
    recurrence_step,
)
from .harness import complexity_report, sweep
from .search import SearchConfig, algorithm_A

SEED_ENV_VAR = "FINGERGROVER_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def _default_seed():
    env = os.environ.get(SEED_ENV_VAR)
    return int(env) if env is not None else 0


def _emit(obj, pretty: bool):
    if pretty:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(obj) + "\n")


def read_text_file(path: str, raw_bits: bool = False) -> BitString:
    """ASCII '0'/'1' file (trailing newline ignored), or packed bytes MSB-first."""
    with open(path, "rb") as fh:
        data = fh.read()
    if raw_bits:
        bits = "".join(format(byte, "08b") for byte in data)
    else:
        bits = data.decode("ascii").rstrip("\n")
    return BitString(bits)


def cmd_search(args) -> int:
    try:
        text = read_text_file(args.text, raw_bits=args.raw_bits)
        pattern = BitString(args.pattern)
        config = SearchConfig(c=args.c, seed=args.seed, verify_classically=args.verify)
        occurrences = find_occurrences_classical(text, pattern)
    except (OSError, ValueError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if len(occurrences) != 1 and not args.allow_out_of_contract:
        print(
            f"error: pattern occurs {len(occurrences)} times, expected exactly once "
            "(use --allow-out-of-contract to run anyway)",
            file=sys.stderr,
        )
        return 2
    outcome = algorithm_A(text, pattern, config)
    _emit(outcome.to_dict(), args.pretty)
    return 0


def cmd_analyze(args) -> int:
    try:
        report = complexity_report(args.n, args.m, args.c)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(report, args.pretty)
    return 0


def cmd_sweep(args) -> int:
    try:
        n_values = [int(v) for v in args.n_values.split(",") if v]
        m_values = [int(v) for v in args.m_values.split(",") if v]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = sweep(n_values, m_values, args.c, args.trials, args.seed)
    if args.json:
        sys.stdout.write(result.to_json())
    else:
        sys.stdout.write(result.to_csv())
    return 0


def cmd_verify_family(args) -> int:
    try:
        family = freivalds_family(args.c, args.n, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = verify_strong_universality(
        family, args.n, 1.0 / args.c, args.m, samples=args.samples, seed=args.seed
    )
    _emit(
        {
            "max_ratio": report.max_ratio,
            "eps": 1.0 / args.c,
            "witness": report.witness,
            "exhaustive": report.exhaustive,
            "cases_tested": report.cases_tested,
            "cases_total": report.cases_total,
        },
        args.pretty,
    )
    return 0 if report.witness is None else 1


def run_selftest(corrupt_diffusion: bool = False):
    """Deterministic consistency checks; returns (name, passed) pairs."""
    checks = []
    mean_scale = 1.001 if corrupt_diffusion else 1.0

    ok = True
    for gate in (I_GATE, X_GATE, Z_GATE, H_GATE):
        ok &= bool(np.max(np.abs(gate @ gate.conj().T - np.eye(2))) < 1e-12)
    ok &= bool(np.max(np.abs(H_GATE @ X_GATE @ H_GATE - Z_GATE)) < 1e-12)
    checks.append(("gate_unitarity", ok))

    ok = True
    for n in (4, 8, 16, 32):
        for t in (1, 2):
            r = iteration_count(n, 1)
            state = init_uniform(n)
            spec = OracleSpec(frozenset(range(t)))
            alpha = beta = 1.0 / math.sqrt(n)
            try:
                for _ in range(r):
                    oracle_phase_flip(state, spec)
                    diffusion(state, mean_scale=mean_scale)
                    alpha, beta = recurrence_step(n, t, alpha, beta)
                ok &= abs(state.amplitudes[0] - alpha) < 1e-9
                cf_alpha, cf_beta = closed_form_amplitudes(n, t, r)
                ok &= abs(alpha - cf_alpha) < 1e-9 and abs(beta - cf_beta) < 1e-9
            except AssertionError:
                ok = False
    checks.append(("amplitude_equivalence", ok))

    ok = True
    rng = np.random.default_rng(1)
    for _ in range(5):
        iq, l = 4, 3  # 8 qubits; bump the map size for a denser check
        fmap = rng.integers(0, 1 << l, size=1 << iq)
        target = int(fmap[int(rng.integers(1 << iq))])
        ok &= gate_level_oracle_check(iq, l, target, fmap)
        ok &= not gate_level_oracle_check(iq, l, target, fmap, corrupt=True)
    # widest case inside the budget: 6 + 5 + 1 = 12 qubits
    fmap = rng.integers(0, 1 << 5, size=1 << 6)
    ok &= gate_level_oracle_check(6, 5, int(fmap[0]), fmap)
    checks.append(("gate_level_oracle", ok))

    ok = True
    text, w = BitString("0011"), BitString("01")
    vocab = build_vocabulary(text, 2)
    family = freivalds_family(3, vocab.n, 2)
    census = bad_prime_census(vocab, w, family.prime_family)
    ok &= census == frozenset({2})
    ok &= len(census) / family.size <= 1.0 / 3.0
    checks.append(("bad_prime_census", ok))

    return checks


def cmd_selftest(args) -> int:
    checks = run_selftest(corrupt_diffusion=args.corrupt_diffusion)
    failed = [name for name, ok in checks if not ok]
    for name, ok in checks:
        print(f"{'ok' if ok else 'FAIL'} {name}")
    if failed:
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fingergrover")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="find the unique occurrence of a pattern")
    p.add_argument("--text", required=True, help="path to the text file")
    p.add_argument("--pattern", required=True, help="pattern as a '0'/'1' string")
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--verify", action="store_true", help="classically check the answer")
    p.add_argument("--allow-out-of-contract", action="store_true")
    p.add_argument("--raw-bits", action="store_true", help="text file is packed bytes, MSB-first")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("analyze", help="resource accounting for an (n, m, c) instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="Monte Carlo error sweep over (n, m) grid")
    p.add_argument("--n-values", required=True, help="comma-separated, e.g. 4,16,64")
    p.add_argument("--m-values", required=True)
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-family", help="check the collision-mass bound of the fingerprint family")
    p.add_argument("--n", type=int, required=True, help="subset size")
    p.add_argument("--m", type=int, required=True, help="word length")
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify_family)

    p = sub.add_parser("selftest", help="run built-in consistency checks")
    p.add_argument("--corrupt-diffusion", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
