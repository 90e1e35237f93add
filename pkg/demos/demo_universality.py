"""Exhaustively verify the collision-mass bound of the fingerprint family.

Run with: python3 demos/demo_universality.py
"""
from fingergrover import ConstantFamily, freivalds_family, verify_strong_universality

family = freivalds_family(3, 2, 3)
report = verify_strong_universality(family, n=2, eps=1 / 3, m=3)
print(f"first-{family.size}-primes family over 3-bit words, subsets of size 2")
print(f"  exhaustive: {report.exhaustive} ({report.cases_tested} cases)")
print(f"  max collision ratio: {report.max_ratio:.4f}  (bound 1/3)")
print(f"  witness: {report.witness}")

bad = ConstantFamily(m=3)
report = verify_strong_universality(bad, n=1, eps=0.5, m=3)
print(f"\nconstant family (everything hashes to 0):")
print(f"  max collision ratio: {report.max_ratio:.4f}  -> violates any eps < 1")
print(f"  witness: {report.witness}")
