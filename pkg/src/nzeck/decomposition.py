"""Greedy gap-n decompositions of nonnegative integers.

Every positive integer is a sum of order-n sequence terms F(n, c_1) + ... +
F(n, c_k) with c_1 >= n and consecutive indices at least n apart, and that
representation is unique. The greedy algorithm (take the largest admissible
term not exceeding the remainder) produces it; `brute_force_decompositions`
is the independent oracle used to re-verify uniqueness at desk scale.

Decompositions are plain ascending lists of indices; the empty list
represents 0.
"""

from __future__ import annotations

from .errors import EmptyDecomposition, InvalidDecomposition
from .sequence import get_table, require_order


def decompose(n: int, value: int) -> list[int]:
    """Ascending index list of the unique gap-n decomposition of value >= 0."""
    require_order(n)
    if value < 0:
        raise ValueError(f"value must be >= 0, got {value!r}")
    table = get_table(n)
    indices: list[int] = []
    cap: int | None = None
    remainder = value
    while remainder > 0:
        c = table.largest_index_at_most(remainder, cap)
        indices.append(c)
        remainder -= table.term(c)
        cap = c - n
    indices.reverse()
    return indices


def recompose(n: int, indices: list[int]) -> int:
    """Sum of the terms at `indices`, after validating the invariants."""
    require_order(n)
    validate(n, indices)
    table = get_table(n)
    return sum(table.term(c) for c in indices)


def validate(n: int, indices: list[int]) -> None:
    """Raise InvalidDecomposition unless c_1 >= n and gaps are >= n."""
    if not indices:
        return
    if indices[0] < n:
        raise InvalidDecomposition(f"first index {indices[0]} is below the order {n}")
    for prev, cur in zip(indices, indices[1:]):
        if cur - prev < n:
            raise InvalidDecomposition(f"gap {cur - prev} between indices {prev} and {cur} is below {n}")


def largest_summand_index(indices: list[int]) -> int:
    """Index of the largest summand, i.e. the last entry."""
    if not indices:
        raise EmptyDecomposition("empty decomposition has no largest summand")
    return indices[-1]


def brute_force_decompositions(n: int, value: int, max_index: int) -> list[list[int]]:
    """All gap-n index subsets of [n, max_index] summing to value.

    Exhaustive search, independent of the greedy path: the uniqueness oracle.
    """
    require_order(n)
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value!r}")
    table = get_table(n)
    terms = {c: table.term(c) for c in range(n, max_index + 1)}
    # max_tail[c] = largest sum achievable by a gap-n subset of [c, max_index]:
    # either skip c or take it and continue at c + n
    max_tail = {c: 0 for c in range(max_index + 1, max_index + n + 1)}
    for c in range(max_index, n - 1, -1):
        max_tail[c] = max(max_tail[c + 1], terms[c] + max_tail[c + n])

    found: list[list[int]] = []
    acc: list[int] = []

    def search(start: int, remaining: int) -> None:
        if remaining == 0:
            found.append(list(acc))
            return
        if start > max_index or remaining > max_tail[start]:
            return
        for c in range(start, max_index + 1):
            t = terms[c]
            if t > remaining:
                break
            acc.append(c)
            search(c + n, remaining - t)
            acc.pop()

    search(n, value)
    return found
