"""Brute-force ground truth, deliberately independent of the builders and the
verifier: naive scans and backtracking only, no numpy, no shared tallies.

Two jobs: count subset occurrences by direct scan, and exhaustively search
for small Kirkman triple systems with a required min-sum, so constructive
results can be cross-checked against an implementation that shares nothing
with them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .core import ResolvableDesign, make_design
from .errors import InvalidParameter, UnsupportedOrder

FOUND = "found"
NOT_FOUND = "not_found"
INDETERMINATE = "indeterminate"


def oracle_subset_count(blocks, subset) -> int:
    """Number of blocks containing ``subset``, by naive scan.

    ``subset`` must be strictly ascending and no longer than the blocks.
    """
    subset = tuple(subset)
    if any(a >= b for a, b in zip(subset, subset[1:])):
        raise InvalidParameter(f"subset {subset} is not strictly ascending")
    blocks = list(blocks)
    if blocks and len(subset) > len(blocks[0]):
        raise InvalidParameter("subset longer than block size")
    target = set(subset)
    return sum(1 for b in blocks if target.issubset(b))


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # FOUND / NOT_FOUND / INDETERMINATE
    design: ResolvableDesign | None = None


def _class_candidates(n, required_min_sum, used_pairs, points):
    """All partitions of ``points`` into triples with sum >= required_min_sum
    whose pairs are all unused.  Generated lazily, smallest point first."""
    if not points:
        yield []
        return
    first = points[0]
    rest = points[1:]
    for idx_y in range(len(rest)):
        y = rest[idx_y]
        if (first, y) in used_pairs:
            continue
        for idx_z in range(idx_y + 1, len(rest)):
            z = rest[idx_z]
            if first + y + z < required_min_sum:
                continue
            if (first, z) in used_pairs or (y, z) in used_pairs:
                continue
            remaining = rest[:idx_y] + rest[idx_y + 1 : idx_z] + rest[idx_z + 1 :]
            new_pairs = {(first, y), (first, z), (y, z)}
            for tail in _class_candidates(
                n, required_min_sum, used_pairs | new_pairs, remaining
            ):
                yield [(first, y, z)] + tail


def oracle_search_kts(
    n: int, required_min_sum: int, budget_seconds: float | None = None
) -> SearchOutcome:
    """Backtracking search for a KTS(n) whose every block sums to at least
    ``required_min_sum``.

    Only n in {3, 9} is exhaustively searchable here; a budget overrun yields
    INDETERMINATE rather than a (dishonest) NOT_FOUND.
    """
    if n not in (3, 9):
        raise UnsupportedOrder(f"exhaustive search supports n in {{3, 9}}, got {n}")
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    num_classes = (n - 1) // 2
    points = tuple(range(n))
    timed_out = False

    def search(classes, used_pairs):
        nonlocal timed_out
        if deadline and time.monotonic() > deadline:
            timed_out = True
            return None
        if len(classes) == num_classes:
            return list(classes)
        for cand in _class_candidates(n, required_min_sum, used_pairs, points):
            if timed_out:
                return None
            cand_pairs = {
                pair for block in cand for pair in combinations(block, 2)
            }
            result = search(classes + [cand], used_pairs | cand_pairs)
            if result is not None:
                return result
        return None

    solution = search([], frozenset())
    if solution is not None:
        return SearchOutcome(FOUND, make_design(n, 3, 2, solution))
    return SearchOutcome(INDETERMINATE if timed_out else NOT_FOUND)
