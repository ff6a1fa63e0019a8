"""Kirkman quadruple systems of order 4 * 2^k with min-sum exactly n + 2.

The doubling step combines two block families over {0..2n-1}:

* four classes per source class, each singling out one coordinate: one new
  block shifts that coordinate by n, its complement shifts the other three;
* one class per factor of a 1-factorization of {0..n-1}, with blocks
  (s, t, s+n, t+n) for each matched pair (s, t).

No first-family block contains two labels congruent mod n, while every
second-family block contains two such pairs, so the families can never cover
the same triple.  Source blocks are consumed in construction coordinate
order so the recursion is reproducible level to level.
"""

from __future__ import annotations

from .core import ResolvableDesign, make_design, min_sum, source_classes
from .errors import InvalidParameter, PreconditionFailed
from .factorization import OneFactorization, factorize_even, verify_factorization
from .verify import verify_coverage, verify_design, verify_resolution


def base_kqs4() -> ResolvableDesign:
    """KQS(4): the single class {(0, 1, 2, 3)}, min-sum 6."""
    return make_design(4, 4, 3, [[(0, 1, 2, 3)]], keep_build_order=True)


def double_kqs(d: ResolvableDesign, f: OneFactorization) -> ResolvableDesign:
    """Build a KQS(2n) with min-sum 2n+2 from a KQS(n) with min-sum n+2 and a
    1-factorization of order n."""
    if d.k != 4 or d.t != 3:
        raise PreconditionFailed(f"input is not a quadruple system (k={d.k}, t={d.t})")
    pre = verify_coverage(d).merged_with(verify_resolution(d))
    if not pre.passed:
        raise PreconditionFailed("input design failed verification", pre)
    n = d.n
    if min_sum(d) < n + 2:
        raise PreconditionFailed(f"input min-sum {min_sum(d)} < {n + 2}")
    if f.m != n:
        raise PreconditionFailed(f"factorization order {f.m} != design order {n}")
    frep = verify_factorization(f)
    if not frep.passed:
        raise PreconditionFailed("factorization failed verification", frep)

    classes: list[list[tuple[int, ...]]] = []

    for cls in source_classes(d):
        for coord in range(4):
            new_cls = []
            for block in cls:
                single = tuple(
                    x + n if j == coord else x for j, x in enumerate(block)
                )
                complement = tuple(
                    x if j == coord else x + n for j, x in enumerate(block)
                )
                # Neither block may pair a label with its mod-n twin.
                assert len({x % n for x in single}) == 4
                new_cls += [single, complement]
            classes.append(new_cls)

    for i in range(f.pairs.shape[0]):
        cross = [(s, t, s + n, t + n) for s, t in f.factor(i)]
        assert all(sum(b) >= 2 * n + 2 for b in cross)
        classes.append(cross)

    out = make_design(2 * n, 4, 3, classes, keep_build_order=True)
    post = verify_design(out)
    if not post.passed:
        raise PreconditionFailed("doubled design failed self-verification", post)
    return out


def build_kqs(exponent: int) -> ResolvableDesign:
    """KQS(4 * 2^exponent) with min-sum n + 2, by iterated doubling.

    Each level's factorization comes from factorize_even, whose deterministic
    output keeps the whole chain reproducible.
    """
    if exponent < 0:
        raise InvalidParameter(f"exponent must be >= 0, got {exponent}")
    d = base_kqs4()
    for _ in range(exponent):
        d = double_kqs(d, factorize_even(d.n))
    return d
