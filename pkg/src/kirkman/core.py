"""Canonical representations of blocks, parallel classes and resolvable designs,
plus min-sum arithmetic and structural statistics.

A block is a tuple of distinct point labels, stored in ascending order.  A
parallel class is a tuple of blocks that partitions the point set.  A
``ResolvableDesign`` bundles an ordered list of parallel classes with its
order ``n``, block size ``k`` and strength ``t``.

Smaller labels mean more popular data, so the min-sum of a design measures how
well popularity is spread: no block may concentrate only the hottest labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateElement, EmptyDesign, InvalidParameter, NonIntegralBound

Block = tuple[int, ...]
ParallelClass = tuple[Block, ...]


def canonical_block(elements: Sequence[int], n: int | None = None) -> Block:
    """Sort ``elements`` ascending into the canonical block form.

    Coordinate order never matters for set membership, so ``(0, 5, 2, 7)`` and
    ``(0, 2, 5, 7)`` canonicalize identically.  Raises ``DuplicateElement`` on a
    repeated label and ``InvalidParameter`` on an out-of-range label when ``n``
    is given.
    """
    if not elements:
        raise InvalidParameter("block must be nonempty")
    out = tuple(sorted(elements))
    for a, b in zip(out, out[1:]):
        if a == b:
            raise DuplicateElement(a)
    if out[0] < 0:
        raise InvalidParameter(f"negative label {out[0]}")
    if n is not None and out[-1] >= n:
        raise InvalidParameter(f"label {out[-1]} out of range for order {n}")
    return out


def block_sum(block: Sequence[int]) -> int:
    """Sum of the labels in a block; invariant under coordinate order."""
    return sum(block)


@dataclass(frozen=True)
class ResolvableDesign:
    """A resolvable Steiner system: every t-subset in exactly one block, and
    the blocks partitioned into parallel classes.

    ``classes`` is the canonical form: blocks element-ascending and sorted
    lexicographically within each class; class order as constructed.

    ``build_classes``, when present, preserves the coordinate order in which
    the recursive constructions emitted each block.  The doubling/tripling
    recursions shift specific coordinates, so reproducing the worked examples
    bit-for-bit requires feeding the next level the same coordinate order.  It
    never survives serialization and never affects equality.
    """

    n: int
    k: int
    t: int
    classes: tuple[ParallelClass, ...]
    build_classes: tuple[tuple[Block, ...], ...] | None = field(
        default=None, compare=False, repr=False
    )

    def all_blocks(self) -> list[Block]:
        return [b for cls in self.classes for b in cls]

    def block_count(self) -> int:
        return sum(len(cls) for cls in self.classes)


def make_design(
    n: int,
    k: int,
    t: int,
    classes: Iterable[Iterable[Sequence[int]]],
    keep_build_order: bool = False,
) -> ResolvableDesign:
    """Canonicalize raw class data into a ``ResolvableDesign``.

    With ``keep_build_order`` the raw coordinate order is retained alongside
    the canonical form for use by the recursive builders.
    """
    raw = tuple(tuple(tuple(b) for b in cls) for cls in classes)
    canon = tuple(
        tuple(sorted(canonical_block(b, n) for b in cls)) for cls in raw
    )
    return ResolvableDesign(
        n=n, k=k, t=t, classes=canon, build_classes=raw if keep_build_order else None
    )


def source_classes(d: ResolvableDesign) -> tuple[tuple[Block, ...], ...]:
    """Classes in the coordinate order the recursions should consume:
    the preserved build order if available, canonical order otherwise."""
    return d.build_classes if d.build_classes is not None else d.classes


def min_sum(d: ResolvableDesign) -> int:
    """Minimum block sum over every block of the design."""
    blocks = d.all_blocks()
    if not blocks:
        raise EmptyDesign("design has no blocks")
    return min(block_sum(b) for b in blocks)


def min_sum_upper_bound(t: int, k: int, n: int) -> int:
    """Largest min-sum any S(t,k,n) can achieve: (n(k-t+1) + k(t-2)) / 2.

    Evaluates to n for triple systems and n+2 for quadruple systems.
    """
    if not (2 <= t <= k <= n):
        raise InvalidParameter(f"need 2 <= t <= k <= n, got t={t} k={k} n={n}")
    numerator = n * (k - t + 1) + k * (t - 2)
    if numerator % 2:
        raise NonIntegralBound(f"bound numerator {numerator} is odd")
    return numerator // 2


def expected_block_count(t: int, k: int, n: int) -> int | None:
    """Block count forced by the Steiner condition, or None if non-integral."""
    if (t, k) == (2, 3):
        num, den = n * (n - 1), 6
    elif (t, k) == (3, 4):
        num, den = n * (n - 1) * (n - 2), 24
    else:
        return None
    return num // den if num % den == 0 else None


def expected_class_count(t: int, k: int, n: int) -> int | None:
    """Parallel-class count forced by resolvability, or None if non-integral."""
    if (t, k) == (2, 3):
        num, den = n - 1, 2
    elif (t, k) == (3, 4):
        num, den = (n - 1) * (n - 2), 6
    else:
        return None
    return num // den if num % den == 0 else None


@dataclass(frozen=True)
class StatsReport:
    order: int
    block_size: int
    strength: int
    observed_blocks: int
    expected_blocks: int | None
    observed_classes: int
    expected_classes: int | None
    replication: tuple[int, ...]
    expected_replication: int | None
    min_sum: int | None
    min_sum_bound: int | None
    mismatches: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "block_size": self.block_size,
            "strength": self.strength,
            "observed_blocks": self.observed_blocks,
            "expected_blocks": self.expected_blocks,
            "observed_classes": self.observed_classes,
            "expected_classes": self.expected_classes,
            "replication_min": min(self.replication) if self.replication else None,
            "replication_max": max(self.replication) if self.replication else None,
            "expected_replication": self.expected_replication,
            "min_sum": self.min_sum,
            "min_sum_bound": self.min_sum_bound,
            "mismatches": list(self.mismatches),
        }


def design_stats(d: ResolvableDesign) -> StatsReport:
    """Observed vs. expected counting identities for a design.

    Mismatches are reported, not raised: the report is a diagnostic surface,
    the verifier is the gatekeeper.
    """
    blocks = d.all_blocks()
    replication = [0] * d.n
    for b in blocks:
        for x in b:
            replication[x] += 1

    exp_blocks = expected_block_count(d.t, d.k, d.n)
    exp_classes = expected_class_count(d.t, d.k, d.n)
    # Each parallel class holds every point once, so r equals the class count.
    exp_repl = exp_classes

    try:
        ms = min_sum(d)
    except EmptyDesign:
        ms = None
    try:
        bound = min_sum_upper_bound(d.t, d.k, d.n)
    except (InvalidParameter, NonIntegralBound):
        bound = None

    mismatches = []
    if exp_blocks is None:
        mismatches.append(f"no integral block count for S({d.t},{d.k},{d.n})")
    elif len(blocks) != exp_blocks:
        mismatches.append(f"block count {len(blocks)} != expected {exp_blocks}")
    if exp_classes is None:
        mismatches.append(f"no integral class count for S({d.t},{d.k},{d.n})")
    elif len(d.classes) != exp_classes:
        mismatches.append(f"class count {len(d.classes)} != expected {exp_classes}")
    if exp_repl is not None:
        bad = [x for x, r in enumerate(replication) if r != exp_repl]
        if bad:
            mismatches.append(
                f"replication != {exp_repl} for points {bad[:10]}"
            )

    return StatsReport(
        order=d.n,
        block_size=d.k,
        strength=d.t,
        observed_blocks=len(blocks),
        expected_blocks=exp_blocks,
        observed_classes=len(d.classes),
        expected_classes=exp_classes,
        replication=tuple(replication),
        expected_replication=exp_repl,
        min_sum=ms,
        min_sum_bound=bound,
        mismatches=tuple(mismatches),
    )
