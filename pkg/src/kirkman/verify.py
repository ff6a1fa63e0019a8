"""Construction-agnostic validation of Steiner coverage, resolvability,
admissibility and min-sum optimality.

Coverage uses an exact tally over all t-subsets (numpy bincount over encoded
subsets), which stays cheap at every order this package targets.  Reports
collect every failure with a concrete witness rather than stopping at the
first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ResolvableDesign,
    expected_block_count,
    expected_class_count,
    min_sum,
    min_sum_upper_bound,
)
from .errors import EmptyDesign, InvalidParameter, NonIntegralBound

# Witness lists are truncated so a badly broken design cannot blow up a report.
MAX_WITNESSES = 50


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witnesses: tuple = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses],
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def format_human(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}"
            if c.witnesses:
                shown = ", ".join(str(w) for w in c.witnesses[:5])
                more = len(c.witnesses) - 5
                if more > 0:
                    shown += f", ... ({more} more)"
                line += f"  witnesses: {shown}"
            lines.append(line)
        verdict = "PASSED" if self.passed else "FAILED"
        lines.append(f"verification {verdict}")
        return "\n".join(lines)


def _report(*checks: CheckResult) -> VerificationReport:
    return VerificationReport(tuple(checks))


def _blocks_array(d: ResolvableDesign) -> np.ndarray:
    blocks = d.all_blocks()
    if not blocks:
        return np.empty((0, d.k), dtype=np.int64)
    return np.asarray(blocks, dtype=np.int64)


def _encode_subsets(arr: np.ndarray, n: int, t: int) -> np.ndarray:
    """Encode every t-subset of every (ascending) block row as a single int."""
    from itertools import combinations

    k = arr.shape[1]
    codes = []
    for cols in combinations(range(k), t):
        code = np.zeros(arr.shape[0], dtype=np.int64)
        for c in cols:
            code = code * n + arr[:, c]
        codes.append(code)
    return np.concatenate(codes) if codes else np.empty(0, dtype=np.int64)


def _decode_subset(code: int, n: int, t: int) -> tuple[int, ...]:
    out = []
    for _ in range(t):
        out.append(code % n)
        code //= n
    return tuple(reversed(out))


def structural_check(d: ResolvableDesign) -> CheckResult:
    """Blocks ascending, distinct, in range, of length k."""
    bad = []
    for ci, cls in enumerate(d.classes):
        for b in cls:
            ok = (
                len(b) == d.k
                and all(0 <= x < d.n for x in b)
                and all(a < c for a, c in zip(b, b[1:]))
            )
            if not ok:
                bad.append((ci, b))
                if len(bad) >= MAX_WITNESSES:
                    break
    return CheckResult("structure", not bad, tuple(bad))


def verify_coverage(d: ResolvableDesign) -> VerificationReport:
    """Every t-subset of the point set in exactly one block, plus the block
    count identity that forces."""
    structure = structural_check(d)
    if not structure.passed:
        return _report(structure, CheckResult("coverage", False, ("skipped: malformed blocks",)))

    arr = _blocks_array(d)
    n, t = d.n, d.t
    codes = _encode_subsets(arr, n, t)

    from math import comb

    expected_total = comb(n, t)
    counts = np.bincount(codes, minlength=n**t) if codes.size else np.zeros(n**t, dtype=np.int64)

    witnesses = []
    over = np.nonzero(counts > 1)[0]
    for code in over[:MAX_WITNESSES]:
        witnesses.append(("covered_multiple", _decode_subset(int(code), n, t), int(counts[code])))
    if codes.size - int(np.count_nonzero(counts)) != 0 or codes.size != expected_total:
        # Some valid subset is missing; enumerate the absentees.
        from itertools import combinations as _comb

        missing = 0
        for sub in _comb(range(n), t):
            code = 0
            for x in sub:
                code = code * n + x
            if counts[code] == 0:
                witnesses.append(("uncovered", sub))
                missing += 1
                if missing >= MAX_WITNESSES:
                    break

    coverage = CheckResult("coverage", not witnesses, tuple(witnesses))

    exp_blocks = expected_block_count(t, d.k, n)
    count_ok = exp_blocks is not None and d.block_count() == exp_blocks
    count_check = CheckResult(
        "block_count",
        count_ok,
        () if count_ok else ((d.block_count(), exp_blocks),),
    )
    return _report(structure, coverage, count_check)


def verify_resolution(d: ResolvableDesign) -> VerificationReport:
    """Each class partitions the point set; class sizes and count match the
    counting identities; no block repeats across classes."""
    witnesses_partition = []
    witnesses_size = []
    full = frozenset(range(d.n))
    for ci, cls in enumerate(d.classes):
        elems = [x for b in cls for x in b]
        if len(cls) != d.n // d.k:
            witnesses_size.append((ci, len(cls)))
        if len(elems) != d.n or set(elems) != full:
            seen = set()
            dup = sorted({x for x in elems if x in seen or seen.add(x)})
            missing = sorted(full - set(elems))
            witnesses_partition.append((ci, "dup", tuple(dup[:5]), "missing", tuple(missing[:5])))
        if len(witnesses_partition) >= MAX_WITNESSES:
            break

    seen_blocks: dict = {}
    dup_blocks = []
    for ci, cls in enumerate(d.classes):
        for b in cls:
            if b in seen_blocks:
                dup_blocks.append((b, seen_blocks[b], ci))
            else:
                seen_blocks[b] = ci

    exp_classes = expected_class_count(d.t, d.k, d.n)
    classes_ok = exp_classes is not None and len(d.classes) == exp_classes

    return _report(
        CheckResult("class_partition", not witnesses_partition, tuple(witnesses_partition)),
        CheckResult("class_size", not witnesses_size, tuple(witnesses_size)),
        CheckResult("distinct_blocks", not dup_blocks, tuple(dup_blocks[:MAX_WITNESSES])),
        CheckResult(
            "class_count",
            classes_ok,
            () if classes_ok else ((len(d.classes), exp_classes),),
        ),
    )


def verify_admissible(n: int, k: int) -> bool:
    """Necessary congruence for a Kirkman system of block size k to exist."""
    if k == 3:
        return n % 6 == 3
    if k == 4:
        return n % 12 in (4, 8)
    raise InvalidParameter(f"block size {k} unsupported")


def verify_max_min_sum(d: ResolvableDesign) -> VerificationReport:
    """min_sum equals the theoretical upper bound exactly."""
    try:
        ms = min_sum(d)
        bound = min_sum_upper_bound(d.t, d.k, d.n)
    except (EmptyDesign, NonIntegralBound, InvalidParameter) as exc:
        return _report(CheckResult("max_min_sum", False, (str(exc),)))
    ok = ms == bound
    return _report(CheckResult("max_min_sum", ok, () if ok else ((ms, bound),)))


def verify_design(d: ResolvableDesign) -> VerificationReport:
    """Full gate: admissibility, coverage, resolution and min-sum optimality."""
    admissible = verify_admissible(d.n, d.k)
    report = _report(
        CheckResult("admissible_order", admissible, () if admissible else ((d.n, d.k),))
    )
    report = report.merged_with(verify_coverage(d))
    report = report.merged_with(verify_resolution(d))
    report = report.merged_with(verify_max_min_sum(d))
    return report


def subset_tally(d: ResolvableDesign, subset: tuple[int, ...]) -> int:
    """Verifier-side occurrence count of one subset, from the encoded tally.

    Used by the oracle cross-check; shares the encoding with verify_coverage.
    """
    arr = _blocks_array(d)
    codes = _encode_subsets(arr, d.n, len(subset))
    code = 0
    for x in subset:
        code = code * d.n + x
    return int(np.count_nonzero(codes == code))
