import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from catwords.counting import catalan_number
from catwords.words import (
    CatalanWord,
    StatisticSpec,
    count_descents,
    count_letter,
    enumerate_words,
    max_letter,
    tally,
    validate,
)

# the length-4 and length-5 families, in lexicographic order
GOLDEN_4 = [
    (0, 0, 0, 0),
    (0, 0, 1, 0),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
]
GOLDEN_5 = sorted(
    [
        (0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 1, 1, 0, 0),
        (0, 1, 0, 1, 0),
        (0, 1, 0, 0, 1),
        (0, 0, 1, 1, 0),
        (0, 0, 1, 0, 1),
        (0, 1, 1, 1, 0),
        (0, 1, 1, 0, 1),
        (0, 1, 0, 1, 1),
        (0, 1, 2, 1, 0),
        (0, 1, 0, 2, 1),
    ]
)


def oracle_valid(seq) -> bool:
    """Independent quadratic validity check, straight from the definition."""
    for i in range(len(seq) - 1):
        if seq[i + 1] < seq[i] - 1:
            return False
    for k in set(seq):
        if k == 0:
            continue
        i = seq.index(k)
        if not any(a == k - 1 for a in seq[:i]):
            return False
        if not any(a == k - 1 for a in seq[i + 1 :]):
            return False
    return True


class TestValidate:
    @pytest.mark.parametrize(
        "seq, ok",
        [
            ((0, 1, 0, 1), True),
            ((0, 1, 2, 1, 0), True),
            ((0,), True),
            ((0, 1, 2, 0), False),
            ((1, 0, 1), False),
            ((0, 2, 1, 0), False),
            ((0, 0, 1, 1), False),
        ],
    )
    def test_examples(self, seq, ok):
        assert validate(seq) is ok

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            validate(())

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            validate((0, -1))

    @given(st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=9))
    def test_matches_definition_oracle(self, seq):
        assert validate(seq) is oracle_valid(seq)


class TestCatalanWord:
    def test_roundtrip(self):
        w = CatalanWord((0, 1, 0, 1))
        assert str(w) == "0,1,0,1"
        assert CatalanWord.parse("0,1,0,1") == w
        assert tuple(w) == (0, 1, 0, 1)

    def test_invalid_rejected(self):
        with pytest.raises(ValueError):
            CatalanWord((0, 2))
        with pytest.raises(ValueError):
            CatalanWord(())

    def test_orders_as_tuple(self):
        assert CatalanWord((0, 0, 1, 0)) < CatalanWord((0, 1, 0, 0))


class TestEnumerate:
    def test_single_letter(self):
        assert list(enumerate_words(1)) == [(0,)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            next(enumerate_words(0))

    def test_golden_listings(self):
        assert [tuple(w) for w in enumerate_words(4)] == GOLDEN_4
        assert [tuple(w) for w in enumerate_words(5)] == GOLDEN_5

    @pytest.mark.parametrize("n", range(1, 11))
    def test_cardinality(self, n):
        assert sum(1 for _ in enumerate_words(n)) == catalan_number(n - 1)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_stream_properties(self, n):
        seen = list(enumerate_words(n))
        assert all(validate(w) for w in seen)
        assert all(w[0] == 0 for w in seen)
        assert all(max(w) <= (n - 1) // 2 for w in seen)
        assert all(a < b for a, b in zip(seen, seen[1:]))  # strict lex order

    @pytest.mark.parametrize("n", range(1, 11))
    def test_prune_soundness(self, n):
        assert list(enumerate_words(n, prune=False)) == list(enumerate_words(n))

    def test_early_termination(self):
        first_three = list(itertools.islice(enumerate_words(12), 3))
        assert len(first_three) == 3
        assert first_three[0] == (0,) * 12

    def test_concurrent_streams_agree(self):
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda _: list(enumerate_words(9)), range(4)))
        assert all(r == results[0] for r in results)


class TestStatistics:
    def test_count_letter(self):
        assert count_letter((0, 1, 0, 2, 1), 0) == 2
        assert count_letter((0, 0, 0, 0, 0), 1) == 0
        assert count_letter((0, 1, 2, 1, 0), 1) == 2
        with pytest.raises(ValueError):
            count_letter((0,), -1)

    def test_count_descents(self):
        assert count_descents((0, 1, 0, 1)) == 1
        assert count_descents((0, 1, 2, 1, 0)) == 2
        assert count_descents((0, 0, 0, 0, 0)) == 0

    def test_max_letter(self):
        assert max_letter((0, 1, 2, 1, 0)) == 2
        assert max_letter((0,)) == 0
        assert max_letter((0, 1, 0, 1)) == 1

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            StatisticSpec("weird")
        with pytest.raises(ValueError):
            StatisticSpec("letter")
        with pytest.raises(ValueError):
            StatisticSpec("zeros", letter=3)
        assert StatisticSpec("letter", 2).evaluate((0, 1, 2, 2, 1)) == 2


class TestTally:
    def test_zeros_table_n4(self):
        assert tally(4, [StatisticSpec("zeros")]) == {(4,): 1, (3,): 2, (2,): 2}

    def test_ones_table_n5(self):
        assert tally(5, [StatisticSpec("ones")]) == {(0,): 1, (1,): 3, (2,): 7, (3,): 3}

    def test_joint_zero_descent(self):
        table = tally(5, [StatisticSpec("zeros"), StatisticSpec("descents")])
        assert table[(5, 0)] == 1  # the all-zeros word is the only descent-free one

    @pytest.mark.parametrize("n", range(1, 10))
    def test_totals(self, n):
        table = tally(n, [StatisticSpec("zeros")])
        assert sum(table.values()) == catalan_number(n - 1)
        if n >= 2:
            assert (1,) not in table
        assert table[(n,)] == 1

    def test_argument_errors(self):
        with pytest.raises(ValueError):
            tally(0, [StatisticSpec("zeros")])
        with pytest.raises(ValueError):
            tally(3, [])


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=8))
def test_enumeration_matches_filtered_product(n):
    """Brute-force oracle for the oracle: filter all bounded sequences."""
    alphabet = range((n - 1) // 2 + 1)
    expected = sorted(
        seq
        for seq in itertools.product(alphabet, repeat=n)
        if oracle_valid(seq)
    )
    assert [tuple(w) for w in enumerate_words(n)] == expected
