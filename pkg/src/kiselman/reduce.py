"""Reduction to canonical form and semigroup multiplication.

The defining relations (a*a = a and a*b*a = b*a*b = a*b for a < b)
generalize to a single deletion rule on consecutive occurrences of a
letter: if the gap between them has no smaller letter the later
occurrence is redundant, if it has no greater letter the earlier one is.
Iterating the rule terminates in a canonical word; that this word is the
canonical form of the input (i.e. that the rule is confluent and respects
the congruence) is certified empirically by the congruence-closure oracle
on all small ranks rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, is_canonical

__all__ = ["KElement", "delete_step", "canonical_form", "multiply", "identity", "generators"]


@dataclass(frozen=True)
class KElement:
    """A semigroup element, represented by its canonical word."""

    word: Word

    def __post_init__(self) -> None:
        if not is_canonical(self.word):
            raise ValueError(f"not a canonical word: {self.word.to_text()!r}")

    @property
    def rank(self) -> int:
        return self.word.rank

    def __mul__(self, other: "KElement") -> "KElement":
        return multiply(self, other)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word.to_text()


def _deletion_index(letters: tuple[int, ...]) -> int | None:
    # Leftmost reducible pair of consecutive equal letters, ordered by the
    # position of the second occurrence.  Returns the index to delete.
    last_seen: dict[int, int] = {}
    for j, x in enumerate(letters):
        i = last_seen.get(x)
        if i is not None:
            gap = letters[i + 1 : j]
            if not any(y < x for y in gap):
                return j  # no smaller letter in the gap: later occurrence is redundant
            if not any(y > x for y in gap):
                return i  # no greater letter in the gap: earlier occurrence is redundant
        last_seen[x] = j
    return None


def delete_step(word: Word) -> Word | None:
    """Apply one deletion to the leftmost reducible pair, or None if none exists.

    Ties (empty gap, where both deletions apply) drop the later occurrence.
    """
    idx = _deletion_index(word.letters)
    if idx is None:
        return None
    return Word(word.letters[:idx] + word.letters[idx + 1 :], word.rank)


def canonical_form(word: Word) -> KElement:
    """Reduce to the unique canonical word by iterated deletion.

    Each step shortens the word, so this terminates; the fixed point is
    checked against the canonicity predicate (a failure would mean the
    deletion rule is wrong and must surface loudly, not be papered over).
    """
    letters = word.letters
    while True:
        idx = _deletion_index(letters)
        if idx is None:
            break
        letters = letters[:idx] + letters[idx + 1 :]
    result = Word(letters, word.rank)
    if not is_canonical(result):
        raise RuntimeError(
            f"deletion rule produced a non-canonical fixed point {result.to_text()!r} "
            f"from {word.to_text()!r}"
        )
    return KElement(result)


def multiply(x: KElement, y: KElement) -> KElement:
    """Product in the semigroup: canonical form of the concatenation."""
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} != {y.rank}")
    return canonical_form(Word(x.word.letters + y.word.letters, x.rank))


def identity(rank: int) -> KElement:
    """The monoid identity (empty word)."""
    return KElement(Word((), rank))


def generators(rank: int) -> list[KElement]:
    """The generator elements, one per letter, in increasing order."""
    return [KElement(Word((x,), rank)) for x in range(1, rank + 1)]
