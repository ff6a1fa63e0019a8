"""Kirkman triple systems of order 3^k with min-sum exactly n.

The tripling step turns a KTS(n) with min-sum n into a KTS(3n) with min-sum
3n.  For each source block the three new classes single out one coordinate:
the singled coordinate takes offsets (2n, 0, n) while the other two take
(0, n, 2n), so every new block gains at least 2n over a source sum of at
least n.

Source blocks are consumed in their construction coordinate order (the
singled coordinate of one level becomes the carried third coordinate of the
next); for designs without a recorded build order the element-ascending form
is used, which satisfies the same sum hypothesis.
"""

from __future__ import annotations

from .core import ResolvableDesign, make_design, min_sum, source_classes
from .errors import InvalidParameter, PreconditionFailed
from .verify import verify_coverage, verify_resolution, verify_design


def base_kts3() -> ResolvableDesign:
    """KTS(3): the single class {(0, 1, 2)}, min-sum 3."""
    return make_design(3, 3, 2, [[(0, 1, 2)]], keep_build_order=True)


def triple_kts(d: ResolvableDesign) -> ResolvableDesign:
    """Build a KTS(3n) with min-sum 3n from a KTS(n) with min-sum >= n."""
    if d.k != 3 or d.t != 2:
        raise PreconditionFailed(f"input is not a triple system (k={d.k}, t={d.t})")
    pre = verify_coverage(d).merged_with(verify_resolution(d))
    if not pre.passed:
        raise PreconditionFailed("input design failed verification", pre)
    n = d.n
    if min_sum(d) < n:
        raise PreconditionFailed(f"input min-sum {min_sum(d)} < order {n}")

    classes: list[list[tuple[int, int, int]]] = []

    # Diagonal class: (t, t+n, t+2n) has sum 3t + 3n.
    diagonal = []
    for t in range(n):
        block = (t, t + n, t + 2 * n)
        assert sum(block) == 3 * t + 3 * n
        diagonal.append(block)
    classes.append(diagonal)

    for cls in source_classes(d):
        fam1, fam2, fam3 = [], [], []
        for x, y, z in cls:
            fam1 += [(x, y, z + 2 * n), (x + n, y + n, z), (x + 2 * n, y + 2 * n, z + n)]
            fam2 += [(x, z, y + 2 * n), (x + n, z + n, y), (x + 2 * n, z + 2 * n, y + n)]
            fam3 += [(y, z, x + 2 * n), (y + n, z + n, x), (y + 2 * n, z + 2 * n, x + n)]
        for fam in (fam1, fam2, fam3):
            assert all(sum(b) >= 3 * n for b in fam)
            classes.append(fam)

    out = make_design(3 * n, 3, 2, classes, keep_build_order=True)
    post = verify_design(out)
    if not post.passed:
        raise PreconditionFailed("tripled design failed self-verification", post)
    return out


def build_kts(exponent: int) -> ResolvableDesign:
    """KTS(3^exponent) with min-sum 3^exponent, by iterated tripling."""
    if exponent < 1:
        raise InvalidParameter(f"exponent must be >= 1, got {exponent}")
    d = base_kts3()
    for _ in range(exponent - 1):
        d = triple_kts(d)
    return d
