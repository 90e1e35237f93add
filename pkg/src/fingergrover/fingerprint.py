"""Prime families, streaming modular fingerprints, and universal-hash verification.

The concrete family hashes a word to the binary encoding of its numeric value
modulo one of the first d primes, zero-padded to the bit length of the largest
prime so every family member shares one output width.
"""
from __future__ import annotations

import itertools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import BitString, Vocabulary, as_bitstring, bin_word

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

# Upper bound on sieve size, in entries (~128 MiB of bools).
DEFAULT_SIEVE_CAP = 1 << 27


class SieveCapacityError(RuntimeError):
    """Requested prime family would exceed the configured sieve memory cap."""


@dataclass(frozen=True)
class PrimeFamily:
    """The first d primes, optionally tagged with the (c, n, m) that chose d."""

    d: int
    primes: tuple
    c: int = None
    n: int = None
    m: int = None

    @property
    def largest(self) -> int:
        return self.primes[-1]


@lru_cache(maxsize=32)
def _sieve_first(d: int, cap: int) -> tuple:
    if d <= len(_SMALL_PRIMES):
        return _SMALL_PRIMES[:d]
    # Rosser's bound: p_d < d (ln d + ln ln d) for d >= 6, so one sieve pass
    # is guaranteed to capture the d-th prime.
    bound = int(d * (math.log(d) + math.log(math.log(d)))) + 1
    if bound > cap:
        raise SieveCapacityError(
            f"sieve bound {bound} for d={d} exceeds capacity cap {cap}"
        )
    is_prime = np.ones(bound + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(bound) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    primes = np.flatnonzero(is_prime)
    if len(primes) < d:
        raise AssertionError(f"sieve bound {bound} missed the {d}-th prime")
    return tuple(int(p) for p in primes[:d])


def first_primes(d: int, *, c=None, n=None, m=None, sieve_cap=DEFAULT_SIEVE_CAP) -> PrimeFamily:
    """The first d primes via a sieve bounded by Rosser's estimate of p_d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return PrimeFamily(d=d, primes=_sieve_first(d, sieve_cap), c=c, n=n, m=m)


@dataclass(frozen=True)
class FingerprintWord:
    """A modular residue encoded as a fixed-width binary word."""

    bits: BitString
    width: int

    @property
    def value(self) -> int:
        return int(self.bits.bits, 2)


def mod_fingerprint(w: BitString, p: int, width: int) -> FingerprintWord:
    """bin(a(w) mod p), zero-padded to `width`.

    Uses streaming Horner reduction r <- (2r + bit) mod p, so the word value
    is never materialized and the word length is unbounded.
    """
    w = as_bitstring(w)
    if p < 2:
        raise ValueError("modulus must be a prime >= 2")
    if width < p.bit_length():
        raise ValueError(f"width {width} too small for modulus {p}")
    r = 0
    for bit in w:
        r = (2 * r + bit) % p
    return FingerprintWord(bits=bin_word(r, width), width=width)


def _residue_matrix(words, primes: np.ndarray) -> np.ndarray:
    """Residues of each word modulo each prime; shape (len(words), len(primes))."""
    m = len(words[0])
    if m <= 62:
        vals = np.array([int(w.bits, 2) for w in words], dtype=np.int64)
        return vals[:, None] % primes[None, :]
    r = np.zeros((len(words), len(primes)), dtype=np.int64)
    for i in range(m):
        col = np.array([int(w.bits[i]) for w in words], dtype=np.int64)
        r = (2 * r + col[:, None]) % primes[None, :]
    return r


class HashFamily(ABC):
    """A finite family of deterministic (m, l)-functions with one shared output width."""

    size: int
    width: int

    @abstractmethod
    def evaluate(self, j: int, w: BitString) -> FingerprintWord:
        """Apply the j-th member of the family to w."""

    def _check_index(self, j: int):
        if not 0 <= j < self.size:
            raise IndexError(f"function index {j} out of range for family of size {self.size}")


@dataclass(frozen=True)
class FreivaldsFamily(HashFamily):
    """w -> bin(a(w) mod p_j) over the first d primes, at the width of the largest."""

    prime_family: PrimeFamily
    width: int

    @property
    def size(self) -> int:
        return self.prime_family.d

    def prime(self, j: int) -> int:
        self._check_index(j)
        return self.prime_family.primes[j]

    def evaluate(self, j: int, w: BitString) -> FingerprintWord:
        return mod_fingerprint(w, self.prime(j), self.width)


def freivalds_family(c: int, n: int, m: int, *, sieve_cap=DEFAULT_SIEVE_CAP) -> FreivaldsFamily:
    """The size-(c*n*m) fingerprint family backing the randomized search."""
    if c < 3:
        raise ValueError("c must be >= 3")
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    family = first_primes(c * n * m, c=c, n=n, m=m, sieve_cap=sieve_cap)
    return FreivaldsFamily(prime_family=family, width=family.largest.bit_length())


@dataclass(frozen=True)
class IdentityFamily(HashFamily):
    """Single-function, collision-free family: l = m, f = identity."""

    m: int
    size: int = 1

    @property
    def width(self) -> int:
        return self.m

    def evaluate(self, j: int, w: BitString) -> FingerprintWord:
        self._check_index(j)
        w = as_bitstring(w)
        if len(w) != self.m:
            raise ValueError("word length does not match family input width")
        return FingerprintWord(bits=w, width=self.m)


@dataclass(frozen=True)
class ConstantFamily(HashFamily):
    """Degenerate family mapping every word to the all-zero fingerprint."""

    m: int
    width: int = 1
    size: int = 1

    def evaluate(self, j: int, w: BitString) -> FingerprintWord:
        self._check_index(j)
        return FingerprintWord(bits=bin_word(0, self.width), width=self.width)


def hashed_vocabulary(vocab: Vocabulary, family: HashFamily, j: int) -> tuple:
    """Apply the j-th family member to every window of the vocabulary."""
    family._check_index(j)
    return tuple(family.evaluate(j, w) for w in vocab.windows)


def bad_prime_census(vocab: Vocabulary, w: BitString, family: PrimeFamily) -> frozenset:
    """Primes whose fingerprint collides w with some non-matching window.

    Decided by direct residue comparison, never by factoring word differences.
    """
    w = as_bitstring(w)
    if len(w) != vocab.m:
        raise ValueError("pattern length must equal the vocabulary window length")
    primes = np.array(family.primes, dtype=np.int64)
    w_res = _residue_matrix([w], primes)[0]
    v_res = _residue_matrix(vocab.windows, primes)
    differs = np.array([win != w for win in vocab.windows], dtype=bool)
    collides = (v_res == w_res[None, :]) & differs[:, None]
    return frozenset(int(p) for p in primes[collides.any(axis=0)])


@dataclass(frozen=True)
class UniversalityReport:
    max_ratio: float
    witness: tuple  # (subset of words, probe word) violating eps, or None
    exhaustive: bool
    cases_tested: int
    cases_total: int


def verify_strong_universality(
    family: HashFamily,
    n: int,
    eps: float,
    m: int,
    *,
    budget: int = 1_000_000,
    samples: int = 2000,
    seed: int = 0,
) -> UniversalityReport:
    """Check the collision-mass bound over n-subsets of {0,1}^m.

    For a subset S and probe word w, the tested ratio is the fraction of
    family members under which w collides with some member of S distinct
    from w.  Small instances are enumerated exhaustively; larger ones fall
    back to seeded random subset sampling, and the report says which.
    """
    words = [bin_word(v, m) for v in range(1 << m)]
    table = np.array(
        [[family.evaluate(j, w).value for w in words] for j in range(family.size)],
        dtype=np.int64,
    )  # (size, 2^m)

    total_subsets = math.comb(len(words), n)
    total_cases = total_subsets * len(words)
    exhaustive = m <= 8 and n <= 3 and total_cases <= budget

    def ratio(subset_idx, w_idx):
        cols = [i for i in subset_idx if i != w_idx]
        if not cols:
            return 0.0
        hit = (table[:, cols] == table[:, [w_idx]]).any(axis=1)
        return hit.sum() / family.size

    max_ratio = 0.0
    witness = None
    tested = 0
    if exhaustive:
        subsets = itertools.combinations(range(len(words)), n)
    else:
        rng = np.random.default_rng(seed)
        subsets = (
            tuple(rng.choice(len(words), size=n, replace=False)) for _ in range(samples)
        )
    for subset_idx in subsets:
        for w_idx in range(len(words)):
            r = ratio(subset_idx, w_idx)
            tested += 1
            if r > max_ratio:
                max_ratio = r
            if r > eps and witness is None:
                witness = (
                    tuple(words[i].bits for i in subset_idx),
                    words[w_idx].bits,
                )
    return UniversalityReport(
        max_ratio=float(max_ratio),
        witness=witness,
        exhaustive=exhaustive,
        cases_tested=tested,
        cases_total=total_cases,
    )
