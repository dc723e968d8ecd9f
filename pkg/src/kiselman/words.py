"""Alphabet and word primitives for Kiselman semigroups.

The alphabet of rank n is {1, ..., n} with the natural order.  A word is
canonical when between any two occurrences of the same letter a there is
at least one letter above a and at least one letter below a; canonical
words are the unique shortest representatives of semigroup elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "ResourceGuardError",
    "Word",
    "LetterStats",
    "CanonicalViolation",
    "length_bound",
    "is_canonical",
    "canonical_violation",
    "occurrence_profile",
    "plus_one_check",
    "content",
]


class ResourceGuardError(RuntimeError):
    """Raised when a computation would exceed its configured resource guard."""


def length_bound(n: int) -> int:
    """Maximal possible length of a canonical word over rank n.

    Equals 2^(k+1) - 2 for n = 2k and 3*2^k - 2 for n = 2k+1.
    """
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    k, odd = divmod(n, 2)
    return 3 * 2**k - 2 if odd else 2 ** (k + 1) - 2


@dataclass(frozen=True)
class Word:
    """A finite word over the alphabet {1, ..., rank}.

    Letters are 1-based; the empty word is the monoid identity.  The rank
    travels with the word because the above/below letter counts depend on
    the ambient alphabet, not only on the letters present.
    """

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError(f"rank must be nonnegative, got {self.rank}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 1 <= x <= self.rank:
                raise ValueError(f"letter {x} outside alphabet 1..{self.rank}")

    @classmethod
    def from_text(cls, text: str, rank: int) -> "Word":
        """Parse whitespace-separated positive integers; "" is the empty word."""
        parts = text.split()
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"not a word: {text!r}") from exc
        return cls(letters, rank)

    def to_text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @property
    def content(self) -> frozenset[int]:
        """The set of distinct letters of the word."""
        return frozenset(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class LetterStats:
    """Occurrence count of one letter together with its alphabet position data."""

    letter: int
    occurrences: int
    less_count: int
    more_count: int

    @property
    def within_bound(self) -> bool:
        """Whether occurrences <= min(2^less_count, 2^more_count).

        Canonical words satisfy this for every letter; arbitrary words
        need not.
        """
        return self.occurrences <= min(2**self.less_count, 2**self.more_count)


class CanonicalViolation(NamedTuple):
    """Witness of non-canonicity: two occurrences of `letter` whose gap
    lacks a smaller letter, a greater letter, or both.  Positions are
    1-based."""

    letter: int
    first_pos: int
    second_pos: int


def canonical_violation(word: Word) -> CanonicalViolation | None:
    """Return the first violating occurrence pair, or None if canonical.

    Checks every pair of equal letters against the gap condition.  Pairs
    are ordered by the position of the later occurrence and then of the
    earlier one, i.e. the reported pair is the first one a left-to-right
    scan completes.
    """
    letters = word.letters
    for j, a in enumerate(letters):
        for i in range(j):
            if letters[i] != a:
                continue
            gap = letters[i + 1 : j]
            if not (any(x > a for x in gap) and any(x < a for x in gap)):
                return CanonicalViolation(a, i + 1, j + 1)
    return None


def is_canonical(word: Word) -> bool:
    """Whether the word is the shortest representative of its element."""
    return canonical_violation(word) is None


def occurrence_profile(word: Word) -> dict[int, LetterStats]:
    """Per-letter occurrence counts for the letters present in the word."""
    counts: dict[int, int] = {}
    for x in word.letters:
        counts[x] = counts.get(x, 0) + 1
    return {
        x: LetterStats(x, c, x - 1, word.rank - x) for x, c in sorted(counts.items())
    }


def plus_one_check(word: Word) -> bool:
    """Check occurrences(a) <= 1 + #{letters below a} and symmetrically above.

    Holds for every canonical word: between two occurrences of a there is
    a lower and a higher letter, so occurrences of a exceed neither total
    by more than one.  Exists as a test oracle; rejects non-canonical input.
    """
    violation = canonical_violation(word)
    if violation is not None:
        raise ValueError(f"word is not canonical: {violation}")
    counts: dict[int, int] = {}
    for x in word.letters:
        counts[x] = counts.get(x, 0) + 1
    for a, c in counts.items():
        below = sum(v for b, v in counts.items() if b < a)
        above = sum(v for b, v in counts.items() if b > a)
        if c > 1 + below or c > 1 + above:
            return False
    return True


def content(word: Word) -> frozenset[int]:
    """The set of distinct letters; invariant under reduction."""
    return word.content
