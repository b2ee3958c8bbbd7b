"""Blocks, the infinite word, random access, and letter counts."""

from itertools import islice

import pytest

from nzeck import (BlockTooLarge, ScanLimitExceeded, block, char_at,
                   count_block, count_prefix, count_prefix_scan,
                   format_letters, prefix_by_decomposition, stream, term)

WORD_3_PREFIX = [3, 1, 2, 3, 3, 1, 3, 1, 2, 3, 1, 2, 3, 3]
WORD_2_PREFIX = [2, 1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2, 1]


def take(n, count):
    return list(islice(stream(n), count))


@pytest.mark.parametrize("n,m,expected", [
    (3, 3, [3]),
    (3, 8, [3, 1, 2, 3, 3, 1, 3, 1, 2]),
    (2, 4, [2, 1, 2]),
    (3, 1, [1]),
])
def test_block_examples(n, m, expected):
    assert block(n, m) == expected


def test_block_rejects_bad_index():
    with pytest.raises(ValueError):
        block(3, 0)


def test_block_length_cap():
    with pytest.raises(BlockTooLarge):
        block(3, 60, length_cap=1000)


def test_stream_fixtures():
    assert take(3, 14) == WORD_3_PREFIX
    assert take(2, 13) == WORD_2_PREFIX
    assert take(3, 1) == [3]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_block_recursion(n):
    cached = {m: block(n, m) for m in range(1, 26)}
    for m in range(n + 1, 26):
        assert cached[m] == cached[m - 1] + cached[m - n]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_block_length_law(n):
    for m in range(1, 26):
        assert len(block(n, m)) == term(n, m)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_blocks_are_stream_prefixes_from_n(n):
    # seeds below index n are single letters a_1..a_{n-1}, not prefixes
    prefix = take(n, term(n, 15))
    for m in range(n, 16):
        assert block(n, m) == prefix[:term(n, m)]
    if n > 2:
        assert block(n, 1) != prefix[:1]


@pytest.mark.parametrize("n,length,expected", [
    (3, 10, [8, 3]),
    (3, 1, [3]),
    (3, 13, [9]),
])
def test_prefix_by_decomposition_examples(n, length, expected):
    assert prefix_by_decomposition(n, length) == expected
    concatenated = []
    for c in expected:
        concatenated += block(n, c)
    assert concatenated == take(n, length)


def test_prefix_by_decomposition_rejects_zero():
    with pytest.raises(ValueError):
        prefix_by_decomposition(3, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_prefix_law_sweep(n):
    limit = 800
    prefix = take(n, limit)
    cached = {}
    for length in range(1, limit + 1):
        out = []
        for c in prefix_by_decomposition(n, length):
            if c not in cached:
                cached[c] = block(n, c)
            out += cached[c]
        assert out == prefix[:length], length


@pytest.mark.parametrize("n", [2, 3, 4])
def test_staircase_prefixes(n):
    for m in range(1, 6):
        indices = [n + (n - 1) * t for t in range(m, -1, -1)]
        stair = []
        for c in indices:
            stair += block(n, c)
        length = sum(term(n, c) for c in indices)
        assert len(stair) == length
        assert stair == take(n, length), m


def test_char_at_examples():
    assert char_at(3, 5) == 3
    assert char_at(3, term(3, 9)) == 3  # position 13
    assert char_at(3, 1) == 3


def test_char_at_rejects_bad_position():
    with pytest.raises(ValueError):
        char_at(3, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_char_at_matches_stream(n):
    for pos, letter in enumerate(take(n, 3000), start=1):
        assert char_at(n, pos) == letter, pos


def test_char_at_matches_stream_at_millionth():
    it = stream(3)
    for _ in range(10**6 - 1):
        next(it)
    assert char_at(3, 10**6) == next(it)


@pytest.mark.parametrize("n", [3, 4])
def test_landmark_positions(n):
    # the F(nj)-th letter is a_n; the F(nj+u)-th letter is a_u for 0 < u < n
    for j in range(1, 7):
        assert char_at(n, term(n, n * j)) == n
        for u in range(1, n):
            assert char_at(n, term(n, n * j + u)) == u


@pytest.mark.parametrize("n,m,expected", [
    (3, 8, [3, 2, 4]),
    (3, 1, [1, 0, 0]),
    (3, 3, [0, 0, 1]),
])
def test_count_block_examples(n, m, expected):
    assert count_block(n, m) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_count_block_matches_scan(n):
    for m in range(1, 26):
        letters = block(n, m)
        tally = [letters.count(i) for i in range(1, n + 1)]
        counts = count_block(n, m)
        assert counts == tally, m
        assert sum(counts) == term(n, m)


@pytest.mark.parametrize("n,length,expected", [
    (3, 10, [3, 2, 5]),
    (3, 0, [0, 0, 0]),
    (2, 13, [5, 8]),
])
def test_count_prefix_examples(n, length, expected):
    assert count_prefix(n, length) == expected


@pytest.mark.parametrize("n,length,expected", [
    (3, 10, [3, 2, 5]),
    (3, 1, [0, 0, 1]),
    (2, 4, [1, 3]),
])
def test_count_prefix_scan_examples(n, length, expected):
    assert count_prefix_scan(n, length) == expected


def test_count_prefix_scan_limit():
    with pytest.raises(ScanLimitExceeded):
        count_prefix_scan(3, 100, scan_limit=10)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_count_prefix_matches_scan(n):
    tally = [0] * n
    for length, letter in enumerate(take(n, 1200), start=1):
        tally[letter - 1] += 1
        assert count_prefix(n, length) == tally, length


def test_format_letters():
    assert format_letters([3, 1, 2]) == "a3 a1 a2"
    assert format_letters([]) == ""
