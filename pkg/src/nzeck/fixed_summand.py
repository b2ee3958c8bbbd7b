"""Integers whose decomposition pins a particular summand.

Two families for a fixed order n and index k >= n:

* smallest-summand members: integers whose decomposition has F(n, k) as its
  smallest summand, in ascending order. Consecutive members differ by
  F(n, k + i) where a_i is the next letter of the infinite word, so the
  whole sequence streams off one letter per member.
* any-summand members: integers whose decomposition contains F(n, k) at
  all. Every such integer is a smallest-summand member plus an offset
  j < F(n, k-(n-1)) coming from a decomposition appended below index k.

Each generator is paired with an exhaustive-scan oracle over the greedy
decompositions.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterator

from .decomposition import decompose
from .errors import ScanLimitExceeded
from .sequence import get_table, require_order
from .words import DEFAULT_SCAN_LIMIT, stream


def _require_fixed_index(n: int, k: int) -> None:
    require_order(n)
    if k < n:
        raise ValueError(f"fixed index k must be >= n = {n}, got {k!r}")


def smallest_summand_stream(n: int, k: int) -> Iterator[int]:
    """Ascending integers whose smallest summand is F(n, k), generated by
    the letter-driven gap rule: one big-int addition per member."""
    _require_fixed_index(n, k)
    table = get_table(n)
    current = table.term(k)
    letters = stream(n)
    while True:
        yield current
        current += table.term(k + next(letters))


def smallest_summand_members(n: int, k: int, count: int) -> list[int]:
    """First `count` members of the smallest-summand sequence."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count!r}")
    return list(islice(smallest_summand_stream(n, k), count))


def smallest_summand_scan(n: int, k: int, bound: int,
                          scan_limit: int = DEFAULT_SCAN_LIMIT) -> list[int]:
    """Oracle: scan 1..bound keeping integers whose decomposition has
    smallest index exactly k."""
    _require_fixed_index(n, k)
    if bound > scan_limit:
        raise ScanLimitExceeded(f"scan to {bound} exceeds the limit {scan_limit}")
    out = []
    for value in range(1, bound + 1):
        indices = decompose(n, value)
        if indices and indices[0] == k:
            out.append(value)
    return out


def largest_summand_rows(n: int, j: int) -> tuple[int, int]:
    """Row range (lo, hi), 1-based inclusive, of the smallest-summand
    sequence whose members have largest summand F(n, k + j), for any fixed
    k >= n and j >= n: rows F(n, j)+1 through F(n, j+1)."""
    require_order(n)
    if j < n:
        raise ValueError(f"j must be >= n = {n}, got {j!r}")
    table = get_table(n)
    return table.term(j) + 1, table.term(j + 1)


def any_summand_members(n: int, k: int, bound: int) -> list[int]:
    """Ascending integers <= bound whose decomposition contains F(n, k).

    Built from the smallest-summand stream: each member q spawns the run
    q, q+1, ..., q+j_max with j_max = F(n, k-(n-1)) - 1, the offsets being
    the values representable entirely below index k. The base q grows with
    every member (letter counts only grow and all terms are positive), so
    stopping at the first q > bound is sound. Runs from distinct members
    never overlap; this is asserted rather than assumed.
    """
    _require_fixed_index(n, k)
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound!r}")
    j_max = get_table(n).term(k - (n - 1)) - 1
    out: list[int] = []
    for base in smallest_summand_stream(n, k):
        if base > bound:
            break
        run_hi = min(base + j_max, bound)
        out.extend(range(base, run_hi + 1))
    deduped = sorted(set(out))
    assert deduped == out, f"overlapping runs for n={n}, k={k}"
    return out


def any_summand_scan(n: int, k: int, bound: int,
                     scan_limit: int = DEFAULT_SCAN_LIMIT) -> list[int]:
    """Oracle: scan 1..bound keeping integers whose decomposition contains
    index k."""
    _require_fixed_index(n, k)
    if bound > scan_limit:
        raise ScanLimitExceeded(f"scan to {bound} exceeds the limit {scan_limit}")
    return [value for value in range(1, bound + 1) if k in decompose(n, value)]


def telescoping_identity(n: int, m: int, v: int, u: int) -> bool:
    """Exact check of F(m+vn+u) - sum_t F(m+tn+u-1) = F(m+u) for t = 1..v."""
    require_order(n)
    if m < 1 or v < 1 or not 1 <= u <= n:
        raise ValueError(f"need m >= 1, v >= 1, 1 <= u <= n; got m={m}, v={v}, u={u}")
    table = get_table(n)
    lhs = table.term(m + v * n + u) - sum(table.term(m + t * n + u - 1) for t in range(1, v + 1))
    return lhs == table.term(m + u)
