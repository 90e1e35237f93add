"""Walk through one hybrid search end to end on a tiny instance.

Run with: python3 demos/demo_search.py
"""
from fingergrover import (
    BitString,
    SearchConfig,
    algorithm_A,
    bad_prime_census,
    build_vocabulary,
    freivalds_family,
)

text = BitString("0011")
pattern = BitString("01")

vocab = build_vocabulary(text, len(pattern))
print(f"text={text}  pattern={pattern}")
print("windows:", [w.bits for w in vocab.windows])

family = freivalds_family(3, vocab.n, vocab.m)
print(f"\nfingerprint family: d={family.size} primes up to {family.prime_family.largest}, "
      f"output width l={family.width}")

census = bad_prime_census(vocab, pattern, family.prime_family)
print(f"bad primes (collide the pattern with a non-match): {sorted(census)}")
print(f"bad mass {len(census)}/{family.size} <= 1/3")

print("\nten searches with different seeds:")
for seed in range(10):
    out = algorithm_A(text, pattern, SearchConfig(c=3, seed=seed, verify_classically=True))
    print(f"  seed={seed}: index={out.index} correct={out.is_correct} "
          f"marked={out.marked_count} P(success)={out.success_probability:.4f} "
          f"qubits={out.qubit_budget.total}")
