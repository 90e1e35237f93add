"""Binary strings, sliding-window vocabularies, and classical ground-truth search."""
from __future__ import annotations

from dataclasses import dataclass

# numeric_value is a test oracle only; production code streams bits and never
# materializes the full integer, so this guard never binds there.
ORACLE_WIDTH_LIMIT = 62


class OracleWidthError(ValueError):
    """Word too wide for the machine-integer test oracle."""


@dataclass(frozen=True)
class BitString:
    """An immutable word over {0, 1}, MSB first."""

    bits: str

    def __post_init__(self):
        if not self.bits:
            raise ValueError("bit string must be non-empty")
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"invalid binary digit in {self.bits!r}")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits

    def __iter__(self):
        return (int(b) for b in self.bits)

    def window(self, start: int, length: int) -> "BitString":
        return BitString(self.bits[start : start + length])


def as_bitstring(value) -> BitString:
    """Coerce a str of '0'/'1' characters (or a BitString) to a BitString."""
    if isinstance(value, BitString):
        return value
    return BitString(str(value))


def numeric_value(w: BitString) -> int:
    """The number represented by w, MSB first.

    Restricted to widths that fit comfortably in a machine integer; wider
    words must go through the streaming fingerprint path instead.
    """
    w = as_bitstring(w)
    if len(w) > ORACLE_WIDTH_LIMIT:
        raise OracleWidthError(
            f"oracle-only width exceeded: {len(w)} > {ORACLE_WIDTH_LIMIT}"
        )
    return int(w.bits, 2)


def bin_word(value: int, width: int) -> BitString:
    """Fixed-width binary encoding of a nonnegative integer (inverse of numeric_value)."""
    if width < 1:
        raise ValueError("width must be >= 1")
    if value < 0 or value >= (1 << width):
        raise ValueError(f"{value} does not fit in {width} bits")
    return BitString(format(value, f"0{width}b"))


@dataclass(frozen=True)
class Vocabulary:
    """All length-m sliding windows of a text, in order of starting offset."""

    windows: tuple
    n: int
    m: int
    source_length: int


def build_vocabulary(text: BitString, m: int) -> Vocabulary:
    """Slice the text into its n = len(text) - m + 1 overlapping windows."""
    text = as_bitstring(text)
    if m < 1:
        raise ValueError("invalid parameter: window length must be >= 1")
    if m > len(text):
        raise ValueError("pattern longer than text")
    n = len(text) - m + 1
    windows = tuple(text.window(k, m) for k in range(n))
    return Vocabulary(windows=windows, n=n, m=m, source_length=len(text))


def find_occurrences_naive(text: BitString, w: BitString) -> list:
    text, w = as_bitstring(text), as_bitstring(w)
    if len(w) > len(text):
        raise ValueError("pattern longer than text")
    m = len(w)
    return [k for k in range(len(text) - m + 1) if text.bits[k : k + m] == w.bits]


def _failure_function(pattern: str) -> list:
    lps = [0] * len(pattern)
    length = 0
    i = 1
    while i < len(pattern):
        if pattern[i] == pattern[length]:
            length += 1
            lps[i] = length
            i += 1
        elif length:
            length = lps[length - 1]
        else:
            i += 1
    return lps


def find_occurrences_kmp(text: BitString, w: BitString) -> list:
    """All 0-based match positions, via Knuth-Morris-Pratt."""
    text, w = as_bitstring(text), as_bitstring(w)
    if len(w) > len(text):
        raise ValueError("pattern longer than text")
    t, p = text.bits, w.bits
    lps = _failure_function(p)
    result = []
    i = j = 0
    while i < len(t):
        if t[i] == p[j]:
            i += 1
            j += 1
            if j == len(p):
                result.append(i - j)
                j = lps[j - 1]
        elif j:
            j = lps[j - 1]
        else:
            i += 1
    return result


def find_occurrences_classical(text: BitString, w: BitString) -> list:
    """Ground-truth occurrence list; cross-checks the naive scan against KMP."""
    naive = find_occurrences_naive(text, w)
    kmp = find_occurrences_kmp(text, w)
    if naive != kmp:
        raise AssertionError(f"naive/KMP disagreement: {naive} vs {kmp}")
    return kmp
