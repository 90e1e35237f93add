"""Monte Carlo check of the 1/c + 1/n error bound against the analytic mixture.

Run with: python3 demos/demo_error_bounds.py
"""
import numpy as np

from fingergrover import (
    SearchConfig,
    estimate_error_rate,
    exact_error_mixture,
    plant_unique_instance,
)

rng = np.random.default_rng(2024)
text, w = plant_unique_instance(64, 16, rng)
print(f"planted instance: n=64, m=16, pattern at a unique position")

mixture = exact_error_mixture(text, w, c=3)
print(f"\nanalytic error mixture : {mixture['exact_error']:.5f}")
print(f"bad-prime census mass  : {mixture['census_mass']:.5f}  (bound 1/3)")
print(f"good-draw failure rate : {mixture['good_failure']:.5f}  (bound 1/64 = {1/64:.5f})")
print(f"oracle queries per run : {mixture['queries']}")

stats = estimate_error_rate(text, w, SearchConfig(c=3, seed=7), trials=2000)
bound = 1 / 3 + 1 / 64
print(f"\nempirical error over {stats.trials} trials: "
      f"{stats.empirical_rate:.5f} +- {stats.stderr:.5f}")
print(f"theoretical bound 1/c + 1/n = {bound:.5f}")
print("bound holds:", stats.empirical_rate <= bound + 4 * stats.stderr)
