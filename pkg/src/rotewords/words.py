"""Alphabet-checked finite words and their elementary observables.

A word is an immutable sequence of small integer letters over a fixed
alphabet {0, ..., k-1}.  Letters are stored as ``bytes`` so that slicing,
equality, substring search and window hashing all run at C speed; every
function in this module is pure and safe to call concurrently.

Text I/O renders letters as ASCII digits with no separators ("0121"),
one word per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Word text could not be parsed; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class AlphabetError(ValueError):
    """An operation received a word over the wrong alphabet."""


class LengthLimitError(RuntimeError):
    """An input word exceeded a configured length guard."""


@dataclass(frozen=True)
class Word:
    """A finite word; ``letters[i]`` is the integer letter at position i."""

    letters: bytes
    alphabet_size: int

    def __post_init__(self):
        if not isinstance(self.letters, bytes):
            object.__setattr__(self, "letters", bytes(self.letters))
        if not 1 <= self.alphabet_size <= 255:
            raise AlphabetError(
                f"alphabet size must be in 1..255, got {self.alphabet_size}")
        if self.letters and max(self.letters) >= self.alphabet_size:
            bad = next(i for i, b in enumerate(self.letters)
                       if b >= self.alphabet_size)
            raise AlphabetError(
                f"letter {self.letters[bad]} at position {bad} is outside "
                f"the {self.alphabet_size}-letter alphabet")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.alphabet_size)
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet_size != other.alphabet_size:
            raise AlphabetError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.alphabet_size)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, k={self.alphabet_size})"


def word(letters: Iterable[int] | str, alphabet_size: int) -> Word:
    """Build a Word from an iterable of letters or a digit string."""
    if isinstance(letters, str):
        return parse_word(letters, alphabet_size)
    return Word(bytes(letters), alphabet_size)


def parse_word(text: str, alphabet_size: int) -> Word:
    """Parse a digit string into a Word over the given alphabet."""
    out = bytearray()
    for i, ch in enumerate(text):
        if not "0" <= ch <= "9":
            raise ParseError(f"non-digit character {ch!r} at position {i}", i)
        d = ord(ch) - 48
        if d >= alphabet_size:
            raise ParseError(
                f"letter {d} at position {i} is outside the "
                f"{alphabet_size}-letter alphabet", i)
        out.append(d)
    return Word(bytes(out), alphabet_size)


_FLIP = bytes.maketrans(b"\x00\x01", b"\x01\x00")


def complement(w: Word) -> Word:
    """Flip 0 and 1 letterwise; defined for binary words only."""
    if w.alphabet_size != 2:
        raise AlphabetError("complement is defined for binary words only")
    return Word(w.letters.translate(_FLIP), 2)


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet_size)


def parikh(w: Word) -> tuple[int, ...]:
    """Occurrence count of each letter, as a length-k tuple."""
    return tuple(w.letters.count(i) for i in range(w.alphabet_size))


def dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Strict Parikh dominance: componentwise >= with at least one >."""
    if len(a) != len(b):
        raise AlphabetError(
            f"Parikh vectors have different lengths: {len(a)} vs {len(b)}")
    return all(x >= y for x, y in zip(a, b)) and any(x > y for x, y in zip(a, b))


def factors_of_length(w: Word, n: int) -> set[Word]:
    """All distinct length-n factors of w; empty set when n exceeds |w|."""
    if n < 0:
        raise ValueError("factor length must be non-negative")
    k = w.alphabet_size
    data = w.letters
    return {Word(chunk, k)
            for chunk in {data[i:i + n] for i in range(len(data) - n + 1)}}


def factor_complexity(w: Word, n: int) -> int:
    """Number of distinct length-n factors of w (1 for n = 0)."""
    if n < 0:
        raise ValueError("factor length must be non-negative")
    data = w.letters
    return len({data[i:i + n] for i in range(len(data) - n + 1)})
