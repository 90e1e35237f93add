import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fingergrover.core import BitString, bin_word, build_vocabulary, numeric_value
from fingergrover.fingerprint import (
    ConstantFamily,
    IdentityFamily,
    bad_prime_census,
    first_primes,
    freivalds_family,
    hashed_vocabulary,
    mod_fingerprint,
    verify_strong_universality,
)


def primes_by_trial_division(count):
    """Independent oracle for the sieve."""
    out = []
    candidate = 2
    while len(out) < count:
        if all(candidate % p for p in out):
            out.append(candidate)
        candidate += 1
    return out


def test_first_primes_examples():
    assert first_primes(5).primes == (2, 3, 5, 7, 11)
    assert first_primes(1).primes == (2,)
    assert first_primes(18).primes[-1] == 61  # frozen from trial division


@pytest.mark.parametrize("d", [1, 2, 6, 7, 18, 100, 1000])
def test_first_primes_against_trial_division(d):
    assert list(first_primes(d).primes) == primes_by_trial_division(d)


def test_rosser_bound_on_largest_prime():
    for d in (6, 10, 100, 1000, 10000):
        fam = first_primes(d)
        assert fam.largest < 2 * d * (math.log(d) + math.log(math.log(d)))


def test_mod_fingerprint_examples():
    assert mod_fingerprint(BitString("101"), 3, 2).bits.bits == "10"
    assert mod_fingerprint(BitString("0" * 50), 7, 3).value == 0


def test_mod_fingerprint_long_word():
    w = BitString("1" + "0" * 79)  # 2^79
    assert mod_fingerprint(w, 97, 7).value == pow(2, 79, 97)


def test_horner_equals_numeric_value_exhaustive():
    for m in range(1, 13):
        primes = first_primes(25).primes
        for a in range(1 << m):
            w = bin_word(a, m)
            for p in primes[:: max(1, m)]:
                assert mod_fingerprint(w, p, 10).value == a % p


@settings(max_examples=200)
@given(st.integers(13, 62), st.data())
def test_horner_equals_numeric_value_random(m, data):
    a = data.draw(st.integers(0, 2**m - 1))
    p = data.draw(st.sampled_from(first_primes(100).primes))
    assert mod_fingerprint(bin_word(a, m), p, 10).value == numeric_value(bin_word(a, m)) % p


def test_freivalds_family_examples():
    fam = freivalds_family(3, 3, 2)
    assert fam.size == 18
    assert fam.prime_family.largest == 61
    assert fam.width == 6

    fam = freivalds_family(3, 1, 1)
    assert fam.size == 3
    assert fam.prime_family.primes == (2, 3, 5)
    assert fam.width == 3

    assert freivalds_family(4, 2, 3).size == 24


def test_freivalds_family_requires_c_at_least_3():
    with pytest.raises(ValueError):
        freivalds_family(2, 4, 4)


def test_hashed_vocabulary_examples():
    vocab = build_vocabulary(BitString("0011"), 2)
    fam = freivalds_family(3, 3, 2)
    j3 = fam.prime_family.primes.index(3)
    j5 = fam.prime_family.primes.index(5)
    assert [fp.value for fp in hashed_vocabulary(vocab, fam, j3)] == [0, 1, 0]
    assert [fp.value for fp in hashed_vocabulary(vocab, fam, j5)] == [0, 1, 3]

    single = build_vocabulary(BitString("01"), 2)
    assert len(hashed_vocabulary(single, fam, 0)) == 1

    with pytest.raises(IndexError):
        hashed_vocabulary(vocab, fam, fam.size)


def test_bad_prime_census_examples():
    vocab = build_vocabulary(BitString("0011"), 2)
    fam = freivalds_family(3, 3, 2)
    census = bad_prime_census(vocab, BitString("01"), fam.prime_family)
    assert census == frozenset({2})
    assert len(census) / fam.size <= 1 / 3

    # single-window vocabulary equal to the pattern: no distinct pair exists
    solo = build_vocabulary(BitString("01"), 2)
    assert bad_prime_census(solo, BitString("01"), fam.prime_family) == frozenset()


def test_census_union_bound_random_instances():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(1, 9))
        m = int(rng.integers(1, 13))
        text = "".join("1" if b else "0" for b in rng.integers(0, 2, size=n + m - 1))
        vocab = build_vocabulary(BitString(text), m)
        w = vocab.windows[int(rng.integers(n))]
        fam = first_primes(3 * n * m)
        census = bad_prime_census(vocab, w, fam)
        assert len(census) <= n * m


def test_pairwise_divisor_count_bounded_by_m():
    # |{p in family : a1 = a2 mod p}| depends only on |a1 - a2|, so sweeping
    # the difference covers every distinct pair exhaustively.
    primes = np.array(first_primes(2000).primes, dtype=np.int64)
    for m in range(1, 13):
        deltas = np.arange(1, 1 << m, dtype=np.int64)
        counts = (deltas[:, None] % primes[None, :] == 0).sum(axis=1)
        assert counts.max() <= m


def test_fingerprint_width_bound():
    for c, n, m in [(3, 2, 3), (3, 16, 8), (5, 10, 10), (3, 64, 16)]:
        d = c * n * m
        fam = freivalds_family(c, n, m)
        ll = math.log(d) + math.log(math.log(d))
        assert fam.width <= math.ceil(math.log2(d)) + math.ceil(math.log2(ll)) + 2


def test_strong_universality_freivalds_exhaustive():
    fam = freivalds_family(3, 2, 3)
    report = verify_strong_universality(fam, 2, 1 / 3, 3)
    assert report.exhaustive
    assert report.max_ratio <= 1 / 3
    assert report.witness is None


def test_strong_universality_constant_family_violates():
    fam = ConstantFamily(m=3)
    report = verify_strong_universality(fam, 1, 0.5, 3)
    assert report.max_ratio == 1.0
    assert report.witness is not None


def test_strong_universality_identity_family():
    fam = IdentityFamily(m=3)
    report = verify_strong_universality(fam, 2, 0.0, 3)
    assert report.max_ratio == 0.0
    assert report.witness is None


def test_strong_universality_sampling_fallback():
    fam = freivalds_family(3, 4, 5)
    report = verify_strong_universality(fam, 4, 1 / 3, 5, samples=50, seed=3)
    assert not report.exhaustive
    assert report.cases_tested < report.cases_total
    assert report.max_ratio <= 1 / 3
