"""Shared enumeration-oracle fixtures.

The brute-force word sweep is the ground truth every other module is
checked against; it is computed once per session and projected as needed.
"""

from collections import Counter

import pytest

from catwords import words

MAX_TRACKED_LETTER = 7
PROFILE_MAX_N = 12


@pytest.fixture(scope="session")
def profiles():
    """Per-length joint distributions over all words.

    Maps n to a Counter keyed by (letter_counts, descents, max_letter),
    where letter_counts[i] is the number of occurrences of i for
    i <= MAX_TRACKED_LETTER.
    """
    out = {}
    for n in range(1, PROFILE_MAX_N + 1):
        table: Counter = Counter()
        for w in words.enumerate_words(n):
            counts = [0] * (MAX_TRACKED_LETTER + 1)
            for a in w:
                if a <= MAX_TRACKED_LETTER:
                    counts[a] += 1
            desc = sum(1 for p, q in zip(w, w[1:]) if p > q)
            table[(tuple(counts), desc, max(w))] += 1
        out[n] = table
    return out


def project(table: Counter, key_fn) -> Counter:
    """Collapse a profile table onto a coarser statistic."""
    out: Counter = Counter()
    for key, c in table.items():
        out[key_fn(*key)] += c
    return out
