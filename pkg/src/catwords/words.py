"""Ground-truth layer: validation, exhaustive enumeration and statistics.

A Catalan word is a sequence of non-negative integers that

  (i)  never drops by more than one between adjacent letters, and
  (ii) whose leftmost occurrence of each value k > 0 has a k-1 somewhere
       to its left and somewhere to its right.

The words of a fixed length n form a Catalan family: there are C(n-1)
of them.  Everything here is brute force by design; the counting and
series modules are checked against this one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CatalanWord",
    "StatisticSpec",
    "validate",
    "enumerate_words",
    "count_letter",
    "count_descents",
    "max_letter",
    "tally",
]

STAT_KINDS = ("zeros", "ones", "descents", "letter", "max-letter")


def _why_invalid(letters: tuple[int, ...]) -> str | None:
    """Return a reason the sequence is not a Catalan word, or None if it is."""
    if letters[0] != 0:
        return "first letter must be 0"
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    prev = 0
    for pos, a in enumerate(letters):
        if a < prev - 1:
            return f"drop larger than one at position {pos}"
        if a not in first:
            first[a] = pos
        last[a] = pos
        prev = a
    for k, pos in first.items():
        if k == 0:
            continue
        below = first.get(k - 1)
        if below is None or below > pos:
            return f"no {k - 1} to the left of the first {k}"
        if last[k - 1] < pos:
            return f"no {k - 1} to the right of the first {k}"
    return None


def validate(seq: Sequence[int]) -> bool:
    """True iff the non-empty sequence satisfies both membership rules."""
    letters = tuple(seq)
    if not letters:
        raise ValueError("empty sequence: Catalan words have length >= 1")
    if any(a < 0 for a in letters):
        raise ValueError("letters must be non-negative integers")
    return _why_invalid(letters) is None


class CatalanWord(tuple):
    """A validated Catalan word; behaves as a tuple of its letters.

    Words serialize as comma-separated decimal letters ("0,1,0,1"),
    never as digit strings: letters exceed 9 once n >= 21.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]) -> "CatalanWord":
        word = tuple.__new__(cls, letters)
        if not word:
            raise ValueError("empty sequence: Catalan words have length >= 1")
        if any(a < 0 for a in word):
            raise ValueError("letters must be non-negative integers")
        reason = _why_invalid(word)
        if reason is not None:
            raise ValueError(f"not a Catalan word: {reason}")
        return word

    @classmethod
    def parse(cls, text: str) -> "CatalanWord":
        return cls(int(part) for part in text.split(","))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self)

    def __repr__(self) -> str:
        return f"CatalanWord(({', '.join(str(a) for a in self)}))"


def enumerate_words(n: int, *, prune: bool = True) -> Iterator[CatalanWord]:
    """Yield every Catalan word of length n exactly once, lexicographically.

    Depth-first search over extensions u in [max(0, v-1), M+1], where v is
    the last letter written and M the running maximum.  u > M+1 is
    impossible (its first occurrence would lack a u-1 on the left), which
    also caps letters at floor((n-1)/2).  Writing M+1 for the first time
    creates the obligation "write M again later"; writing u discharges the
    pending obligation with target u.  A branch is cut when the remaining
    slots cannot reach the smallest pending target, since a descent must
    pass through every intermediate value.  Disabling ``prune`` keeps the
    stream identical and merely filters at full length.

    The generator is the visitor interface: stop consuming it to terminate
    early.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    if n == 1:
        yield tuple.__new__(CatalanWord, (0,))
        return

    word = [0] * n
    maxs = [0] * n
    nxt = [0] * n
    discharged = [False] * n
    obliged = [False] * n
    applied = [False] * n
    pending: set[int] = set()

    d = 1
    nxt[1] = 0
    while d >= 1:
        if applied[d]:
            u = word[d]
            if discharged[d]:
                pending.add(u)
            if obliged[d]:
                pending.remove(u - 1)
            applied[d] = False
            nxt[d] = u + 1
        u = nxt[d]
        if u > maxs[d - 1] + 1:
            d -= 1
            continue
        hit = u in pending
        rise = u > maxs[d - 1]
        if hit:
            pending.remove(u)
        if rise:
            pending.add(u - 1)
        word[d] = u
        maxs[d] = u if rise else maxs[d - 1]
        applied[d] = True
        discharged[d] = hit
        obliged[d] = rise
        if d == n - 1:
            if not pending:
                yield tuple.__new__(CatalanWord, word)
            continue
        if prune and pending and n - 1 - d < u - min(pending):
            continue
        d += 1
        nxt[d] = u - 1 if u > 0 else 0


def count_letter(word: Sequence[int], i: int) -> int:
    """Number of positions holding the letter i."""
    if i < 0:
        raise ValueError("letter must be non-negative")
    return sum(1 for a in word if a == i)


def count_descents(word: Sequence[int]) -> int:
    """Number of adjacent pairs with left letter strictly greater."""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def max_letter(word: Sequence[int]) -> int:
    """Largest letter value in the word."""
    return max(word)


@dataclass(frozen=True)
class StatisticSpec:
    """One word statistic: zeros, ones, descents, letter(i) or max-letter."""

    kind: str
    letter: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in STAT_KINDS:
            raise ValueError(f"unknown statistic kind: {self.kind!r}")
        if self.kind == "letter":
            if self.letter is None or self.letter < 0:
                raise ValueError("letter statistic needs a letter i >= 0")
        elif self.letter is not None:
            raise ValueError(f"statistic {self.kind!r} takes no letter")

    def evaluate(self, word: Sequence[int]) -> int:
        if self.kind == "zeros":
            return count_letter(word, 0)
        if self.kind == "ones":
            return count_letter(word, 1)
        if self.kind == "descents":
            return count_descents(word)
        if self.kind == "letter":
            return count_letter(word, self.letter)  # type: ignore[arg-type]
        return max_letter(word)


def tally(n: int, specs: Sequence[StatisticSpec]) -> Counter[tuple[int, ...]]:
    """Joint distribution of the given statistics over all words of length n.

    Keys are tuples of statistic values in spec order; counts sum to C(n-1).
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    if not specs:
        raise ValueError("need at least one statistic")
    table: Counter[tuple[int, ...]] = Counter()
    for word in enumerate_words(n):
        table[tuple(spec.evaluate(word) for spec in specs)] += 1
    return table
