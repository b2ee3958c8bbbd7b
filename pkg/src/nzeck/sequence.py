"""Order-n generalized Fibonacci numbers with exact integer arithmetic.

For a fixed order n >= 2 the sequence starts with n ones,
F(1) = ... = F(n) = 1, and continues with F(m+1) = F(m) + F(m+1-n).
Running the same recurrence backward, F(m) = F(m+n) - F(m+n-1), extends
it to every integer index; the extension is what makes the letter-count
formulas work at small indices. n = 2 gives the classical Fibonacci
numbers.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from contextlib import contextmanager

from .errors import IndexNotFound


def require_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"order n must be an integer >= 2, got {n!r}")


class SequenceTable:
    """Memoized table of F(n, m) over a growable integer index window.

    Growth is the only mutation and is guarded by a lock; once an index is
    materialized, reads are pure, so a table may be shared read-only across
    threads. Values are Python ints (arbitrary precision).
    """

    def __init__(self, n: int):
        require_order(n)
        self.n = n
        # _fwd[m] = F(m) for 1 <= m <= hi; slot 0 unused
        self._fwd: list[int] = [0] + [1] * n
        # backward values for m <= 0, filled lazily down from _lo
        self._back: dict[int, int] = {}
        self._lo = 1
        self._lock = threading.RLock()

    @property
    def hi(self) -> int:
        return len(self._fwd) - 1

    @property
    def lo(self) -> int:
        return self._lo

    def term(self, m: int) -> int:
        """F(n, m) for any integer m, extending the window on demand."""
        if m >= 1:
            if m > self.hi:
                self._grow(m)
            return self._fwd[m]
        if m < self._lo:
            self._extend_back(m)
        return self._back[m]

    def _grow(self, m: int) -> None:
        with self._lock:
            # amortized doubling keeps repeated single-step growth cheap
            target = max(m, 2 * self.hi)
            n = self.n
            fwd = self._fwd
            while len(fwd) <= target:
                fwd.append(fwd[-1] + fwd[len(fwd) - n])

    def _extend_back(self, m: int) -> None:
        with self._lock:
            while self._lo > m:
                j = self._lo - 1
                self._back[j] = self.term(j + self.n) - self.term(j + self.n - 1)
                self._lo = j

    def largest_index_at_most(self, bound: int, cap: int | None = None) -> int:
        """Largest index c >= n with F(c) <= bound (and c <= cap if given).

        Well-defined because F is strictly increasing from index n on.
        Raises IndexNotFound when cap < n, the only way the search can fail
        for bound >= 1.
        """
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound!r}")
        if cap is not None and cap < self.n:
            raise IndexNotFound(f"no admissible index >= {self.n} with cap {cap}")
        while self._fwd[self.hi] <= bound and (cap is None or self.hi < cap):
            self._grow(2 * self.hi)
        limit = self.hi if cap is None or cap > self.hi else cap
        return bisect_right(self._fwd, bound, self.n, limit + 1) - 1

    def __repr__(self) -> str:
        return f"SequenceTable(n={self.n}, window=[{self._lo}, {self.hi}])"


_TABLES: dict[int, SequenceTable] = {}
_REGISTRY_LOCK = threading.Lock()


def get_table(n: int) -> SequenceTable:
    """Shared per-order table; all modules route through this registry."""
    require_order(n)
    with _REGISTRY_LOCK:
        table = _TABLES.get(n)
        if table is None:
            table = _TABLES[n] = SequenceTable(n)
        return table


def term(n: int, m: int) -> int:
    """F(n, m) from the shared table."""
    return get_table(n).term(m)


def largest_index_at_most(n: int, bound: int, cap: int | None = None) -> int:
    return get_table(n).largest_index_at_most(bound, cap)


@contextmanager
def perturbed_table(n: int, m: int, delta: int = 1):
    """Temporarily serve a table whose stored F(n, m) is off by delta.

    Used by the harness self-checks: a single corrupted value must be caught
    by at least one consistency check. The corruption propagates into values
    grown after the swap, which is intended. Only forward indices (m >= 1)
    can be perturbed.
    """
    require_order(n)
    if m < 1:
        raise ValueError("only forward indices (m >= 1) can be perturbed")
    broken = SequenceTable(n)
    broken.term(m)
    broken._fwd[m] += delta
    with _REGISTRY_LOCK:
        previous = _TABLES.get(n)
        _TABLES[n] = broken
    try:
        yield broken
    finally:
        with _REGISTRY_LOCK:
            if previous is None:
                del _TABLES[n]
            else:
                _TABLES[n] = previous
