"""Exhaustive enumeration and counting of canonical words.

The generator walks a pruned depth-first tree.  Appending letter x to a
canonical word stays canonical iff x never occurred or, since its last
occurrence, both a smaller and a greater letter appeared; prefix closure
of canonicity makes the pruned walk complete.  The per-letter conditions
are tracked as two bitmasks (letters still owed a smaller letter, letters
still owed a greater one), giving O(1) state updates per appended letter.

A breadth-first extend-and-filter recount, vectorized with numpy and
driven directly by the defining gap condition, serves as an independent
cross-check of the depth-first census.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, replace
from typing import Callable, Iterator

import numpy as np

from .reports import BoundReport
from .words import ResourceGuardError, Word, is_canonical, length_bound

__all__ = [
    "Census",
    "LongestCensus",
    "iter_canonical",
    "enumerate_canonical",
    "count",
    "filtered_recount",
    "longest_census",
    "verify_odd_structure",
    "verify_subalphabet_embedding",
    "verify_lower_bound_construction",
]

GUARD_RANK = 8


@dataclass(frozen=True)
class Census:
    """Exact count of canonical words, broken down by length."""

    rank: int
    total: int
    by_length: dict[int, int]
    max_length: int
    longest_count: int | None = None

    def to_json(self) -> str:
        payload: dict = {
            "rank": self.rank,
            "total": str(self.total),
            "by_length": {str(l): str(c) for l, c in sorted(self.by_length.items())},
            "max_length": self.max_length,
        }
        if self.longest_count is not None:
            payload["longest_count"] = str(self.longest_count)
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Census":
        raw = json.loads(text)
        return cls(
            rank=raw["rank"],
            total=int(raw["total"]),
            by_length={int(l): int(c) for l, c in raw["by_length"].items()},
            max_length=raw["max_length"],
            longest_count=int(raw["longest_count"]) if "longest_count" in raw else None,
        )


@dataclass(frozen=True)
class LongestCensus:
    """All canonical words of maximal length for one rank."""

    rank: int
    max_length: int
    count: int
    words: tuple[tuple[int, ...], ...]

    @property
    def reaches_bound(self) -> bool:
        return self.max_length == length_bound(self.rank)


def _letter_masks(n: int) -> list[tuple[int, int, int]]:
    # (bit, keep_ns, keep_ng) per letter: appending x clears the
    # owed-smaller bit of every letter above x and the owed-greater bit of
    # every letter below x, then marks x as owing both.
    masks = []
    for x in range(1, n + 1):
        bit = 1 << (x - 1)
        above = sum(1 << (y - 1) for y in range(x + 1, n + 1))
        below = sum(1 << (y - 1) for y in range(1, x))
        masks.append((bit, ~above, ~below))
    return masks


def _check_rank(n: int, allow_large: bool) -> None:
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    if n >= GUARD_RANK and not allow_large:
        raise ResourceGuardError(
            f"rank {n} enumeration refused (counts grow double-exponentially); "
            f"pass allow_large=True to override"
        )


def iter_canonical(n: int, *, allow_large: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every canonical word over rank n exactly once.

    Words come out as raw letter tuples in depth-first order with children
    in increasing letter order, so equal-length words appear
    lexicographically and every prefix precedes its extensions.
    """
    _check_rank(n, allow_large)
    masks = _letter_masks(n)
    yield ()
    path: list[int] = []
    stack = [(1, x, bit, bit) for x, (bit, _, _) in zip(range(n, 0, -1), reversed(masks))]
    while stack:
        depth, letter, ns, ng = stack.pop()
        del path[depth - 1 :]
        path.append(letter)
        yield tuple(path)
        blocked = ns | ng
        child_depth = depth + 1
        for x in range(n, 0, -1):
            bit, keep_ns, keep_ng = masks[x - 1]
            if not (blocked & bit):
                stack.append((child_depth, x, (ns & keep_ns) | bit, (ng & keep_ng) | bit))


def enumerate_canonical(
    n: int, visitor: Callable[[Word], None], *, allow_large: bool = False
) -> None:
    """Drive `visitor` over every canonical word of rank n, as Word values."""
    for letters in iter_canonical(n, allow_large=allow_large):
        visitor(Word(letters, n))


def _dfs_by_len(n: int, ns0: int = 0, ng0: int = 0) -> list[int]:
    # counts by depth below the given state; depth cannot exceed the
    # length bound (occurrence bounds), so an overflow here fails loudly
    by_len = [0] * (length_bound(n) + 1)
    masks = _letter_masks(n)

    def rec(ns: int, ng: int, depth: int) -> None:
        by_len[depth] += 1
        blocked = ns | ng
        d1 = depth + 1
        for bit, keep_ns, keep_ng in masks:
            if not (blocked & bit):
                rec((ns & keep_ns) | bit, (ng & keep_ng) | bit, d1)

    rec(ns0, ng0, 0)
    return by_len


def _subtree_task(args: tuple[int, int, int]) -> list[int]:
    n, ns, ng = args
    return _dfs_by_len(n, ns, ng)


def _trim(by_len: list[int]) -> dict[int, int]:
    while by_len and by_len[-1] == 0:
        by_len.pop()
    return {l: c for l, c in enumerate(by_len)}


def count(n: int, *, jobs: int = 1, allow_large: bool = False) -> Census:
    """Exact census of canonical words over rank n.

    With jobs > 1 the search tree is split at a fixed depth into at least
    8 * jobs independent subtrees whose counts are merged by addition, so
    the result is identical for any degree of parallelism.
    """
    _check_rank(n, allow_large)
    if jobs <= 1:
        by_len = _dfs_by_len(n)
    else:
        masks = _letter_masks(n)
        bound = length_bound(n)
        by_len = [0] * (bound + 1)
        level: list[tuple[int, int]] = [(0, 0)]
        depth = 0
        while level and len(level) < 8 * jobs and depth < bound:
            by_len[depth] += len(level)
            nxt = []
            for ns, ng in level:
                blocked = ns | ng
                for bit, keep_ns, keep_ng in masks:
                    if not (blocked & bit):
                        nxt.append(((ns & keep_ns) | bit, (ng & keep_ng) | bit))
            level = nxt
            depth += 1
        if level:
            tasks = [(n, ns, ng) for ns, ng in level]
            with multiprocessing.Pool(jobs) as pool:
                partials = pool.map(_subtree_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            for partial in partials:
                for rel, c in enumerate(partial):
                    if c:
                        by_len[depth + rel] += c
    by_length = _trim(by_len)
    return Census(
        rank=n,
        total=sum(by_length.values()),
        by_length=by_length,
        max_length=max(by_length),
    )


def filtered_recount(n: int, *, allow_large: bool = False) -> Census:
    """Independent census: breadth-first generate-and-filter.

    Extends every canonical word of length l by every letter and keeps the
    extension iff the segment after the appended letter's previous
    occurrence contains both a greater and a smaller letter (the defining
    gap condition, applied to the one pair a canonical prefix can break).
    Vectorized over whole length levels; shares no state logic with the
    depth-first walk.
    """
    _check_rank(n, allow_large)
    by_length = {0: 1}
    level = np.zeros((1, 0), dtype=np.int16)
    length = 0
    while level.shape[0]:
        m, l = level.shape
        if l:
            sufmax = np.maximum.accumulate(level[:, ::-1], axis=1)[:, ::-1]
            sufmin = np.minimum.accumulate(level[:, ::-1], axis=1)[:, ::-1]
        rows = np.arange(m)
        extensions = []
        for x in range(1, n + 1):
            if l == 0:
                ok = np.ones(m, dtype=bool)
            else:
                eq = level == x
                has = eq.any(axis=1)
                last = (l - 1) - np.argmax(eq[:, ::-1], axis=1)
                after = last + 1
                ok = ~has
                candidates = has & (after < l)
                if candidates.any():
                    ri, ai = rows[candidates], after[candidates]
                    ok[candidates] = (sufmax[ri, ai] > x) & (sufmin[ri, ai] < x)
            kept = level[ok]
            if kept.shape[0]:
                col = np.full((kept.shape[0], 1), x, dtype=np.int16)
                extensions.append(np.concatenate([kept, col], axis=1))
        if not extensions:
            break
        level = np.concatenate(extensions, axis=0)
        length += 1
        by_length[length] = int(level.shape[0])
    return Census(
        rank=n,
        total=sum(by_length.values()),
        by_length=by_length,
        max_length=max(by_length),
    )


def longest_census(n: int, *, allow_large: bool = False) -> LongestCensus:
    """All canonical words of maximal length, in lexicographic order."""
    if n < 1:
        raise ValueError(f"need rank >= 1, got {n}")
    _check_rank(n, allow_large)
    masks = _letter_masks(n)
    best = 0
    bucket: list[tuple[int, ...]] = []
    path: list[int] = []
    stack = [(1, x, bit, bit) for x, (bit, _, _) in zip(range(n, 0, -1), reversed(masks))]
    while stack:
        depth, letter, ns, ng = stack.pop()
        del path[depth - 1 :]
        path.append(letter)
        if depth > best:
            best = depth
            bucket = [tuple(path)]
        elif depth == best:
            bucket.append(tuple(path))
        blocked = ns | ng
        child_depth = depth + 1
        for x in range(n, 0, -1):
            bit, keep_ns, keep_ng = masks[x - 1]
            if not (blocked & bit):
                stack.append((child_depth, x, (ns & keep_ns) | bit, (ng & keep_ng) | bit))
    return LongestCensus(rank=n, max_length=best, count=len(bucket), words=tuple(bucket))


def verify_odd_structure(n: int, *, allow_large: bool = False) -> BoundReport:
    """Check the factorization of maximal words for odd rank.

    Every canonical word of maximal length must split as w (1 n) w' or
    w (n 1) w' with w, w' maximal canonical words over the inner alphabet
    {2, ..., n-1}, and conversely every such composite must be canonical
    and maximal; the counts then satisfy f(n) = 2 * f(n-2)^2.  Even ranks
    are rejected: the factorization genuinely fails there.
    """
    if n % 2 == 0:
        raise ValueError(f"factorization of maximal words only holds for odd ranks, got {n}")
    if n < 3:
        raise ValueError(f"need rank >= 3, got {n}")
    _check_rank(n, allow_large)
    outer = longest_census(n, allow_large=allow_large)
    inner = longest_census(n - 2, allow_large=allow_large)
    inner_shifted = {tuple(x + 1 for x in w) for w in inner.words}
    half = length_bound(n - 2)
    failures: list[str] = []
    for u in outer.words:
        middle = set(u[half : half + 2])
        w, w_prime = u[:half], u[half + 2 :]
        if middle != {1, n} or w not in inner_shifted or w_prime not in inner_shifted:
            failures.append(" ".join(map(str, u)))
    for w in inner_shifted:
        for w_prime in inner_shifted:
            for mid in ((1, n), (n, 1)):
                u = w + mid + w_prime
                if len(u) != outer.max_length or not is_canonical(Word(u, n)):
                    failures.append("composite " + " ".join(map(str, u)))
    expected = 2 * inner.count**2
    holds = not failures and outer.count == expected
    note = f"f({n}) = {outer.count}, 2*f({n - 2})^2 = {expected}"
    if failures:
        note += f"; {len(failures)} failures, first: {failures[0]!r}"
    return BoundReport(
        name="maximal-words-factor-as-w-1-n-w",
        n_or_k=n,
        lhs=expected,
        rhs=outer.count,
        holds=holds,
        note=note,
    )


def verify_subalphabet_embedding(n: int, *, allow_large: bool = False) -> BoundReport:
    """Check that dropping a top or bottom letter embeds the smaller rank.

    The canonical words of rank n avoiding letter n must be exactly the
    canonical words of rank n-1, likewise those avoiding letter 1 after
    shifting every letter down; in particular counts are monotone in rank.
    """
    if n < 1:
        raise ValueError(f"need rank >= 1, got {n}")
    _check_rank(n, allow_large)
    smaller = set(iter_canonical(n - 1, allow_large=allow_large))
    without_top = set()
    without_bottom = set()
    total = 0
    for w in iter_canonical(n, allow_large=allow_large):
        total += 1
        if n not in w:
            without_top.add(w)
        if 1 not in w:
            without_bottom.add(tuple(x - 1 for x in w))
    holds = without_top == smaller and without_bottom == smaller and len(smaller) <= total
    return BoundReport(
        name="subalphabet-words-embed-smaller-rank",
        n_or_k=n,
        lhs=len(smaller),
        rhs=total,
        holds=holds,
        note=f"words avoiding letter n: {len(without_top)}, avoiding letter 1: {len(without_bottom)}",
    )


def verify_lower_bound_construction(n: int, *, allow_large: bool = False) -> BoundReport:
    """Check the doubling construction behind count(n+2) >= 2 * count(n)^2.

    For every ordered pair (w, w') of canonical words shifted into the
    inner alphabet {2, ..., n+1}, both w 1 (n+2) w' and w (n+2) 1 w' must
    be canonical, and all composites pairwise distinct.
    """
    _check_rank(n + 2, allow_large)
    inner = [tuple(x + 1 for x in w) for w in iter_canonical(n, allow_large=allow_large)]
    composites = set()
    failures = 0
    for w in inner:
        for w_prime in inner:
            for mid in ((1, n + 2), (n + 2, 1)):
                u = w + mid + w_prime
                if not is_canonical(Word(u, n + 2)):
                    failures += 1
                composites.add(u)
    expected = 2 * len(inner) ** 2
    total = count(n + 2, allow_large=allow_large).total
    holds = failures == 0 and len(composites) == expected and expected <= total
    return BoundReport(
        name="2-count-squared-below-count-n-plus-2",
        n_or_k=n,
        lhs=expected,
        rhs=total,
        holds=holds,
        note=f"{len(composites)} distinct composites, {failures} non-canonical",
    )


def with_longest_count(census: Census, longest: LongestCensus) -> Census:
    return replace(census, longest_count=longest.count)
