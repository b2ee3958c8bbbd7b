"""Finite blocks and the infinite word attached to the order-n sequence.

Blocks are built by the rewriting B(m) = B(m-1) + B(m-n) from the seeds
B(1) = a_1, ..., B(n) = a_n; the block at index m has exactly F(n, m)
letters. Since B(m) is a prefix of B(m+1) for m >= n, the blocks converge
to an infinite word (the golden string when n = 2). Letters are plain ints
in 1..n standing for a_1..a_n.
"""

from __future__ import annotations

from collections import deque
from itertools import chain, count, islice
from typing import Iterator

from .decomposition import decompose
from .errors import BlockTooLarge, ScanLimitExceeded
from .sequence import get_table, require_order

DEFAULT_LENGTH_CAP = 10**7
DEFAULT_SCAN_LIMIT = 10**7


def block(n: int, m: int, length_cap: int = DEFAULT_LENGTH_CAP) -> list[int]:
    """Letters of the block at index m >= 1, via the defining rewriting."""
    require_order(n)
    if m < 1:
        raise ValueError(f"block index must be >= 1, got {m!r}")
    size = get_table(n).term(m)
    if size > length_cap:
        raise BlockTooLarge(f"block {m} has {size} letters, above the cap {length_cap}")
    if m <= n:
        return [m]
    window: deque[list[int]] = deque(([i] for i in range(1, n + 1)), maxlen=n)
    for _ in range(n + 1, m + 1):
        window.append(window[-1] + window[0])
    return window[-1]


def stream(n: int) -> Iterator[int]:
    """Letters of the infinite word, in order, with O(depth) memory.

    Uses the identity word = B(n) . B(1) . B(2) . B(3) ...: appending B(m+1-n)
    to B(n) . B(1) ... B(m-n) turns it into B(m+1), so the partial
    concatenation always stays a block, and the blocks converge to the word.
    Each block is emitted by expanding indices on an explicit stack instead
    of materializing it.
    """
    require_order(n)
    for idx in chain((n,), count(1)):
        stack = [idx]
        while stack:
            j = stack.pop()
            if j <= n:
                yield j
            else:
                stack.append(j - n)
                stack.append(j - 1)


def prefix_by_decomposition(n: int, length: int) -> list[int]:
    """Block indices, largest first, whose concatenation is the prefix of
    the given length (the decomposition of `length` read backwards)."""
    if length < 1:
        raise ValueError(f"prefix length must be >= 1, got {length!r}")
    return decompose(n, length)[::-1]


def char_at(n: int, pos: int) -> int:
    """The pos-th letter (1-based) of the infinite word, without streaming.

    The prefix of length pos is the concatenation of blocks at the
    decomposition indices of pos, so its last letter is the last letter of
    the block at the smallest index c. The rewriting makes last letters
    periodic in c with period n (last of B(c) = last of B(c-n)), giving
    last(B(c)) = ((c - 1) mod n) + 1. Cost is one greedy decomposition.
    """
    if pos < 1:
        raise ValueError(f"position must be >= 1, got {pos!r}")
    smallest = decompose(n, pos)[0]
    return (smallest - 1) % n + 1


def count_block(n: int, m: int) -> list[int]:
    """Per-letter counts of the block at index m, by the closed form.

    Entry i-1 counts letter a_i: F(n, m-(n+i-1)) for i < n and
    F(n, m-(n-1)) for i = n. Needs the backward extension of the sequence
    when m is small. Does not build the block.
    """
    require_order(n)
    if m < 1:
        raise ValueError(f"block index must be >= 1, got {m!r}")
    table = get_table(n)
    counts = [table.term(m - (n + i - 1)) for i in range(1, n)]
    counts.append(table.term(m - (n - 1)))
    return counts


def count_prefix(n: int, length: int) -> list[int]:
    """Per-letter counts of the prefix of the given length, by the closed
    form summed over the decomposition indices of `length`."""
    require_order(n)
    if length < 0:
        raise ValueError(f"prefix length must be >= 0, got {length!r}")
    table = get_table(n)
    counts = [0] * n
    for c in decompose(n, length):
        for i in range(1, n):
            counts[i - 1] += table.term(c - (n + i - 1))
        counts[n - 1] += table.term(c - (n - 1))
    return counts


def count_prefix_scan(n: int, length: int, scan_limit: int = DEFAULT_SCAN_LIMIT) -> list[int]:
    """Per-letter counts of the prefix by tallying the stream (the oracle
    for count_prefix)."""
    require_order(n)
    if length < 0:
        raise ValueError(f"prefix length must be >= 0, got {length!r}")
    if length > scan_limit:
        raise ScanLimitExceeded(f"scan of {length} letters exceeds the limit {scan_limit}")
    counts = [0] * n
    for letter in islice(stream(n), length):
        counts[letter - 1] += 1
    return counts


def format_letters(letters: list[int]) -> str:
    """Pretty text form: 3, 1, 2 -> "a3 a1 a2"."""
    return " ".join(f"a{x}" for x in letters)
