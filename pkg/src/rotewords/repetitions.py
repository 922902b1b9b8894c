"""Exact periodicity and power analysis.

The exponent of a nonempty word of length l with smallest period p is the
rational l/p, compared exclusively by integer cross-multiplication (never
floating point).  A word "avoids k-powers" when every factor has exponent
< k, and "avoids k+-powers" when every factor has exponent <= k; the
boundary case of a factor whose exponent is exactly k is permitted only
in the latter reading.

Scanning all O(n^2) factors one smallest-period computation at a time is
far too slow at the lengths the acceptance checks use, so the threshold
scans here synchronise on the period instead: for each candidate period p
the positions where w[i] == w[i+p] are computed in one shot by XOR-ing the
two shifted byte strings as big integers, and maximal runs of agreement
are then read off the zero bytes of the mask with a regex.  A factor of
length l >= some threshold with period p exists iff the mask contains a
zero-run of length l - p, which keeps the whole scan at C speed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

from .words import Word


@total_ordering
@dataclass(frozen=True, eq=False)
class Exponent:
    """Exact word exponent: ``length`` over smallest ``period``.

    The pair is kept unreduced so that ``length`` always equals the length
    of the witnessing word; comparisons use the rational value.
    """

    length: int
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be at least 1")
        if self.length < self.period:
            raise ValueError("length must be at least the period")

    @property
    def value(self) -> Fraction:
        return Fraction(self.length, self.period)

    @staticmethod
    def _rational(other) -> Fraction | None:
        if isinstance(other, Exponent):
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __eq__(self, other) -> bool:
        r = self._rational(other)
        if r is None:
            return NotImplemented
        return self.length * r.denominator == r.numerator * self.period

    def __lt__(self, other) -> bool:
        r = self._rational(other)
        if r is None:
            return NotImplemented
        return self.length * r.denominator < r.numerator * self.period

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"Exponent({self.length}/{self.period})"


@dataclass(frozen=True)
class RepetitionWitness:
    """A factor [start, start+length) whose smallest period is ``period``."""

    start: int
    length: int
    period: int

    def to_json(self) -> dict:
        return {"start": self.start, "length": self.length, "period": self.period}


def smallest_period(w: Word) -> int:
    """Least p >= 1 with w[i] == w[i+p] for all valid i.

    Direct check over candidate periods; quadratic in the worst case but
    each candidate is a single C-level bytes comparison.
    """
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no period")
    data = w.letters
    for p in range(1, n):
        if data[p:] == data[:-p]:
            return p
    return n


def exponent(w: Word) -> Exponent:
    """Exact exponent |w| / smallest_period(w)."""
    return Exponent(len(w), smallest_period(w))


def _mismatch_mask(data: bytes, p: int) -> bytes:
    # Byte i is zero iff data[i] == data[i+p]; big-int XOR keeps this at
    # C speed for the whole position range at once.
    m = len(data) - p
    a = int.from_bytes(data[:m], "big")
    b = int.from_bytes(data[p:], "big")
    return (a ^ b).to_bytes(m, "big")


def _normalize_threshold(threshold) -> Fraction:
    if isinstance(threshold, tuple):
        threshold = Fraction(*threshold)
    t = Fraction(threshold)
    if t < 1:
        raise ValueError("power threshold must be at least 1")
    return t


def is_power_free(w: Word, threshold, strict: bool) -> RepetitionWitness | None:
    """Check whether every factor's exponent stays below the threshold.

    Returns None iff w avoids the given powers: every factor has exponent
    < threshold (strict=False) or <= threshold (strict=True).  Otherwise
    returns a witness for one violating factor, found at the smallest
    violating period and there at the leftmost minimal length.
    """
    t = _normalize_threshold(threshold)
    n = len(w)
    if n == 0:
        return None
    if not strict and t == 1:
        return RepetitionWitness(0, 1, 1)
    num, den = t.numerator, t.denominator
    data = w.letters
    p = 1
    while True:
        if strict:
            lmin = (num * p) // den + 1      # least l with l/p > t
        else:
            lmin = -((-num * p) // den)      # least l with l/p >= t
        if lmin > n:
            return None
        run = lmin - p
        m = re.search(b"\x00{%d,}" % run, _mismatch_mask(data, p))
        if m:
            return RepetitionWitness(m.start(), lmin, p)
        p += 1


def _suffix_52plus(buf) -> bool:
    """True iff some suffix of ``buf`` is a 5/2+ power.

    For each period p gated by 5p < 2n, only the minimal witness length
    2p + ceil((p+1)/2) is checked; a longer period-p power suffix always
    contains that minimal one as a suffix.
    """
    n = len(buf)
    p = 1
    while 5 * p < 2 * n:
        c = (p + 2) // 2
        if buf[n - c - p:] == buf[n - c - 2 * p:n - p]:
            return True
        p += 1
    return False


def suffix_is_52plus_power(w: Word) -> bool:
    """True iff some suffix of w has exponent strictly greater than 5/2."""
    return _suffix_52plus(w.letters)


def max_factor_exponent(w: Word) -> tuple[Exponent, RepetitionWitness]:
    """Maximum exponent over all nonempty factors, with one witness.

    Ties are broken by smallest start index, then shortest length.  The
    first pass finds the maximum value by probing, per period, whether a
    long-enough agreement run exists to beat the current best; the second
    pass revisits exactly the (length, period) pairs that realise the
    maximum to apply the tie-break.
    """
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no factors")
    data = w.letters
    best_num, best_den = 1, 1
    for p in range(1, n):
        if n * best_den < best_num * p:
            break                            # even a full-length run cannot beat best
        need = (p * (best_num - best_den)) // best_den + 1
        mask = _mismatch_mask(data, p)
        if b"\x00" * need in mask:
            longest = max(len(m.group())
                          for m in re.finditer(b"\x00{%d,}" % need, mask))
            best_num, best_den = longest + p, p
    if best_num == best_den:
        return Exponent(1, 1), RepetitionWitness(0, 1, 1)
    g = gcd(best_num, best_den)
    a, b = best_num // g, best_den // g
    candidates = []
    m_ = 1
    while a * m_ <= n and b * m_ <= n - 1:
        length, p = a * m_, b * m_
        hit = re.search(b"\x00{%d,}" % (length - p), _mismatch_mask(data, p))
        if hit:
            candidates.append((hit.start(), length, p))
        m_ += 1
    start, length, p = min(candidates, key=lambda c: (c[0], c[1]))
    return Exponent(length, p), RepetitionWitness(start, length, p)
