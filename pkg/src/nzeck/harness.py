"""Verification suites: every structural claim re-checked over parameter sweeps.

Each check runs a deterministic sweep, comparing a closed form or generator
against an independent oracle (exhaustive enumeration, streaming scan, or
direct string comparison), and returns a CheckReport with pass/fail and the
first few counterexamples. Exceptions inside a case are recorded as failures
rather than aborting the sweep, so a corrupted table shows up as a red
report instead of a crash.

Checks accept n = 2 (classical Fibonacci / golden string); those results are
flagged as empirical in the report parameters since the closed forms are
only guaranteed for n >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable

from .decomposition import (brute_force_decompositions, decompose,
                            largest_summand_index, recompose, validate)
from .fixed_summand import (any_summand_members, any_summand_scan,
                            largest_summand_rows, smallest_summand_members,
                            smallest_summand_scan, telescoping_identity)
from .sequence import get_table, perturbed_table
from .words import block, char_at, count_block, count_prefix, stream

MAX_RECORDED_FAILURES = 5


@dataclass
class CheckReport:
    """Outcome of one check: pass iff no failure was observed."""

    check_id: str
    parameters: dict
    cases_run: int = 0
    failures: list = field(default_factory=list)
    failures_total: int = 0

    @property
    def passed(self) -> bool:
        return self.failures_total == 0

    def case(self, inputs: dict, expected, actual) -> None:
        self.cases_run += 1
        if expected != actual:
            self.fail(inputs, expected, actual)

    def fail(self, inputs: dict, expected, actual) -> None:
        self.failures_total += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append((inputs, expected, actual))

    def guarded(self, inputs: dict, body: Callable[[], tuple]) -> None:
        """Run body() -> (expected, actual); an exception is a failure."""
        self.cases_run += 1
        try:
            expected, actual = body()
        except Exception as exc:
            self.fail(inputs, "no exception", f"{type(exc).__name__}: {exc}")
            return
        if expected != actual:
            self.fail(inputs, expected, actual)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.check_id}: {self.cases_run} cases"
        if not self.passed:
            line += f", {self.failures_total} failures"
        return line

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "parameters": _jsonable(self.parameters),
            "pass": self.passed,
            "cases_run": self.cases_run,
            "failures": [
                {"inputs": _jsonable(i), "expected": _jsonable(e), "actual": _jsonable(a)}
                for i, e, a in self.failures
            ],
            "failures_total": self.failures_total,
        }


def _jsonable(value):
    """JSON-safe copy; integers beyond exact float range become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, range, set)):
        return [_jsonable(v) for v in value]
    return str(value)


def _base_params(n_range: Iterable[int], **rest) -> dict:
    n_range = list(n_range)
    params = {"n_range": n_range, **rest}
    empirical = [n for n in n_range if n < 3]
    if empirical:
        params["empirical_orders"] = empirical
    return params


def check_unique_decomposition(n_range: Iterable[int] = (2, 3, 4, 5, 6),
                               value_max: int = 100_000) -> CheckReport:
    """Round trip for every value <= value_max and exhaustive uniqueness for
    values <= min(value_max, 2000)."""
    n_range = list(n_range)
    unique_cap = min(value_max, 2000)
    report = CheckReport("unique-decomposition",
                         _base_params(n_range, value_max=value_max, unique_cap=unique_cap))
    for n in n_range:
        table = get_table(n)
        for value in range(1, value_max + 1):
            inputs = {"n": n, "value": value}
            report.cases_run += 1
            try:
                indices = decompose(n, value)
                validate(n, indices)
                back = recompose(n, indices)
                if back != value:
                    report.fail(inputs, value, back)
                    continue
            except Exception as exc:
                report.fail(inputs, "round trip", f"{type(exc).__name__}: {exc}")
                continue
            if value <= unique_cap:
                report.guarded(
                    {**inputs, "sub": "uniqueness"},
                    lambda v=value, idx=indices: (
                        [idx],
                        brute_force_decompositions(n, v, table.largest_index_at_most(v)),
                    ),
                )
    return report


def check_concat_prefixes(n_range: Iterable[int] = (3, 4), depth: int = 12) -> CheckReport:
    """Two-block and staircase concatenations are prefixes of the word."""
    n_range = list(n_range)
    report = CheckReport("concat-prefixes", _base_params(n_range, depth=depth))
    for n in n_range:
        table = get_table(n)
        need = table.term(depth) + table.term(depth - n + 1)
        prefix = list(islice(stream(n), need))
        blocks = {m: block(n, m) for m in range(1, depth + 1)}
        # pair concatenation: B(j) . B(i) starts the word, n <= i <= j-(n-1)
        for j in range(2 * n - 1, depth + 1):
            for i in range(n, j - (n - 1) + 1):
                length = table.term(i) + table.term(j)
                report.case({"n": n, "item": 1, "i": i, "j": j},
                            prefix[:length], blocks[j] + blocks[i])
        # block containment: B(i) is a prefix of B(j)
        for j in range(n, depth + 1):
            for i in range(n, j + 1):
                report.case({"n": n, "item": 2, "i": i, "j": j},
                            blocks[i], blocks[j][:table.term(i)])
        # the staircase concatenation is a prefix of a single block
        m = 2
        while n + (n - 1) * m + 2 <= depth:
            stair: list[int] = []
            for t in range(m, -1, -1):
                stair += blocks[n + (n - 1) * t]
            target = blocks[n + (n - 1) * m + 2]
            report.case({"n": n, "item": 4, "m": m}, stair, target[:len(stair)])
            m += 1
    return report


def check_block_counts(n_range: Iterable[int] = (2, 3, 4, 5), depth: int = 25,
                       staircase_max: int = 5) -> CheckReport:
    """Closed-form block letter counts and lengths vs direct scans, plus the
    staircase prefix identity."""
    n_range = list(n_range)
    report = CheckReport("block-counts",
                         _base_params(n_range, depth=depth, staircase_max=staircase_max))
    for n in n_range:
        table = get_table(n)
        for m in range(1, depth + 1):
            letters = block(n, m)
            report.case({"n": n, "m": m, "sub": "length"}, table.term(m), len(letters))
            tally = [0] * n
            for x in letters:
                tally[x - 1] += 1
            report.guarded({"n": n, "m": m, "sub": "counts"},
                           lambda n=n, m=m, t=tally: (t, count_block(n, m)))
        for m in range(1, staircase_max + 1):
            indices = [n + (n - 1) * t for t in range(m, -1, -1)]
            stair: list[int] = []
            for c in indices:
                stair += block(n, c)
            length = sum(table.term(c) for c in indices)
            report.case({"n": n, "staircase_m": m},
                        list(islice(stream(n), length)), stair)
    return report


def check_decomposition_prefix(n_range: Iterable[int] = (2, 3, 4, 5),
                               length_max: int = 10_000) -> CheckReport:
    """Decomposition-ordered block concatenation reproduces every prefix, and
    the closed-form letter counts match a running scan."""
    n_range = list(n_range)
    report = CheckReport("decomposition-prefix",
                         _base_params(n_range, length_max=length_max))
    for n in n_range:
        table = get_table(n)
        prefix = list(islice(stream(n), length_max))
        blocks: dict[int, list[int]] = {}
        tally = [0] * n
        for length in range(1, length_max + 1):
            tally[prefix[length - 1] - 1] += 1
            inputs = {"n": n, "length": length}
            report.cases_run += 2
            try:
                indices = decompose(n, length)
                if count_prefix(n, length) != tally:
                    report.fail({**inputs, "sub": "counts"}, tally, count_prefix(n, length))
                offset = 0
                for c in reversed(indices):
                    piece = blocks.get(c)
                    if piece is None:
                        piece = blocks[c] = block(n, c)
                    if prefix[offset:offset + len(piece)] != piece:
                        report.fail({**inputs, "sub": "prefix", "block": c},
                                    prefix[offset:offset + len(piece)], piece)
                        break
                    offset += len(piece)
                else:
                    if offset != length:
                        report.fail({**inputs, "sub": "prefix"}, length, offset)
            except Exception as exc:
                report.fail(inputs, "no exception", f"{type(exc).__name__}: {exc}")
    return report


def check_fixed_summand(n_range: Iterable[int] = (3, 4), max_k_offset: int = 6,
                        bound: int = 100_000) -> CheckReport:
    """Fixed-summand machinery: telescoping identity, largest-summand
    monotonicity, landmark letters, row ranges, and generator-vs-oracle
    agreement for both summand families."""
    n_range = list(n_range)
    q_bound = min(bound, 10_000)
    sweep_max = min(bound, 10_000)
    report = CheckReport("fixed-summand",
                         _base_params(n_range, max_k_offset=max_k_offset, bound=bound,
                                      q_bound=q_bound, telescoping={"m": 10, "v": 4},
                                      landmark_j_max=6, monotonic_max=sweep_max))
    for n in n_range:
        table = get_table(n)
        for m in range(1, 11):
            for v in range(1, 5):
                for u in range(1, n + 1):
                    report.case({"n": n, "m": m, "v": v, "u": u, "sub": "telescoping"},
                                True, telescoping_identity(n, m, v, u))
        # largest summand index never decreases as the integer grows
        report.cases_run += 1
        last = 0
        bad = None
        for value in range(1, sweep_max + 1):
            top = largest_summand_index(decompose(n, value))
            if top < last:
                bad = value
                break
            last = top
        if bad is not None:
            report.fail({"n": n, "sub": "monotonic"}, "nondecreasing", f"drop at {bad}")
        # landmark letters at positions F(nj+u)
        for j in range(1, 7):
            for u in range(n):
                pos = table.term(n * j + u)
                expected = n if u == 0 else u
                report.guarded({"n": n, "j": j, "u": u, "sub": "landmark"},
                               lambda n=n, p=pos, e=expected: (e, char_at(n, p)))
        # generator vs oracle, smallest-summand family
        for k in range(n, n + min(max_k_offset, 4) + 1):
            report.guarded({"n": n, "k": k, "bound": q_bound, "sub": "smallest-summand"},
                           lambda n=n, k=k: _q_pair(n, k, q_bound))
        # generator vs oracle, any-summand family
        for k in range(n, n + max_k_offset + 1):
            report.guarded({"n": n, "k": k, "bound": bound, "sub": "any-summand"},
                           lambda n=n, k=k: (any_summand_scan(n, k, bound),
                                             any_summand_members(n, k, bound)))
    # row-range classification against per-element largest summands
    if 3 in n_range:
        n, k = 3, 4
        hi_row = get_table(n).term(9)
        members = smallest_summand_members(n, k, hi_row)
        tops = [largest_summand_index(decompose(n, q)) for q in members]
        for j in range(3, 9):
            lo, hi = largest_summand_rows(n, j)
            classified = [r for r in range(1, hi_row + 1) if tops[r - 1] == k + j]
            report.case({"n": n, "k": k, "j": j, "sub": "rows"},
                        list(range(lo, hi + 1)), classified)
    return report


def _q_pair(n: int, k: int, bound: int) -> tuple[list[int], list[int]]:
    scanned = smallest_summand_scan(n, k, bound)
    generated = smallest_summand_members(n, k, len(scanned)) if scanned else []
    return scanned, generated


def check_mutation_sanity(n: int = 3, m: int = 9, delta: int = 1) -> CheckReport:
    """Corrupt one table value and confirm the battery notices.

    Passes iff at least one sub-check fails while the corrupted table is
    installed. Guards the harness against vacuous green runs.
    """
    report = CheckReport("mutation-sanity", {"n": n, "m": m, "delta": delta})
    with perturbed_table(n, m, delta):
        battery = [
            check_block_counts(n_range=(n,), depth=max(m + 2, 12), staircase_max=3),
            check_unique_decomposition(n_range=(n,), value_max=200),
            check_decomposition_prefix(n_range=(n,), length_max=200),
        ]
    report.cases_run = len(battery)
    if all(sub.passed for sub in battery):
        report.fail({"n": n, "m": m, "delta": delta},
                    "at least one check fails under corruption",
                    "all checks passed")
    return report


ALL_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "unique-decomposition": check_unique_decomposition,
    "concat-prefixes": check_concat_prefixes,
    "block-counts": check_block_counts,
    "decomposition-prefix": check_decomposition_prefix,
    "fixed-summand": check_fixed_summand,
    "mutation-sanity": check_mutation_sanity,
}
