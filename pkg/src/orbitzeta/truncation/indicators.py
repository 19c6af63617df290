"""Indicator functions and the alternating-sum identities built from them.

Every indicator reads only block sums of an exact rational point, compared
strictly or weakly against zero after clearing the (positive) denominators,
so all decisions are exact integer sign tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instability import arranged_semistable, indicator_F
from .roots import (
    StandardParabolic,
    WallError,
    arrangements,
    as_fractions,
    consecutive_root_gaps,
    epsilon_between,
    group,
    refinements_within,
    coarsenings_of,
    relative_weight_gaps,
)
from .instability import MAX_SUBSET_BLOCK

import itertools

__all__ = [
    "indicator_tau",
    "indicator_tau_hat",
    "indicator_chi",
    "indicator_E",
    "e_sum_terms",
    "indicator_sigma",
    "langlands_sum",
    "levi_sum_tau_hat",
    "arthur_partition_check",
    "arthur_partition_report",
    "ArthurReport",
    "indicator_F",
]


def _validate(P, Q, H):
    if not P.refines(Q):
        raise ValueError("%s does not refine %s" % (P, Q))
    if len(H) != Q.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(H), Q.n))


def indicator_tau(P, Q, H):
    """1 iff every simple-root pairing of P relative to Q is > 0: block
    averages strictly decrease within each ambient block."""
    H = as_fractions(H)
    _validate(P, Q, H)
    sums = P.block_sums(H)
    return 1 if all(g > 0 for g in consecutive_root_gaps(P, Q, sums)) else 0


def indicator_tau_hat(P, Q, H):
    """1 iff every fundamental-weight pairing of P relative to Q is > 0:
    each leading partial block sum strictly exceeds its proportional share
    of the ambient block total."""
    H = as_fractions(H)
    _validate(P, Q, H)
    sums = P.block_sums(H)
    return 1 if all(g > 0 for g in relative_weight_gaps(P, Q, sums)) else 0


def _leading_sums(P, Q, sums):
    """First sub-block sum inside each ambient block."""
    out = []
    idx = 0
    for sub in P.split_by(Q):
        out.append(sums[idx])
        idx += len(sub)
    return out


def indicator_chi(P, Q, H):
    """1 iff the leading sub-block coordinate sum in each ambient block
    is <= 0 (the scaled leading-weight pairing)."""
    H = as_fractions(H)
    _validate(P, Q, H)
    sums = P.block_sums(H)
    return 1 if all(s <= 0 for s in _leading_sums(P, Q, sums)) else 0


def e_sum_terms(Q, H):
    """Contributing pairs of the structured slope-truncation sum.

    A pair (refinement P, arrangement) contributes when the rearranged
    point is semistable for P's blocks, the arranged block averages
    strictly decrease within each Q-block, and each Q-block's leading
    arranged sum is <= 0.  At most one pair can contribute; callers
    assert that.
    """
    H = as_fractions(H)
    if len(H) != Q.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(H), Q.n))
    terms = []
    for P in refinements_within(Q):
        for arr in arrangements(P, Q):
            sums = tuple(sum(H[i] for i in S) for S in arr)
            if any(g <= 0 for g in consecutive_root_gaps(P, Q, sums)):
                continue
            if any(s > 0 for s in _leading_sums(P, Q, sums)):
                continue
            if not arranged_semistable(arr, H):
                continue
            terms.append((P, arr))
    return terms


def _e_subsets(Q, H):
    """Literal closure criterion: inside each block of Q every nonempty
    index subset must have coordinate sum <= 0."""
    H = as_fractions(H)
    for a, b in Q.intervals:
        m = b - a
        if m > MAX_SUBSET_BLOCK:
            raise ValueError("block too large for literal subset scan")
        vals = H[a:b]
        for size in range(1, m + 1):
            for T in itertools.combinations(vals, size):
                if sum(T) > 0:
                    return False
    return True


def indicator_E(Q, H, method="checked"):
    """Slope truncation indicator, computed one of three ways.

    method="sum": the structured sum over (refinement, arrangement) pairs,
    raising if more than one term contributes.  method="subsets": the
    literal subset-closure criterion per block.  method="checked"
    (default): run both and raise if they disagree; the agreement is a
    theorem, so a mismatch signals an implementation bug.
    """
    if method == "sum":
        terms = e_sum_terms(Q, H)
        if len(terms) > 1:
            raise ArithmeticError(
                "structured sum produced %d overlapping terms" % len(terms)
            )
        return len(terms)
    if method == "subsets":
        return 1 if _e_subsets(Q, H) else 0
    if method == "checked":
        by_sum = indicator_E(Q, H, method="sum")
        by_subsets = indicator_E(Q, H, method="subsets")
        if by_sum != by_subsets:
            raise ArithmeticError(
                "the two routes disagree: sum=%d subsets=%d" % (by_sum, by_subsets)
            )
        return by_sum
    raise ValueError("unknown method %r" % (method,))


def indicator_sigma(P1, P2, H):
    """Alternating sum over coarsenings P of P2 of
    sign(P2,P) * tau(P1 within P) * tau_hat(P within G).

    Lands in {0,1}; the test suite asserts that range, the function
    returns the raw integer.
    """
    H = as_fractions(H)
    if not P1.refines(P2):
        raise ValueError("%s does not refine %s" % (P1, P2))
    G = group(P2.n)
    total = 0
    for P in coarsenings_of(P2):
        term = indicator_tau(P1, P, H) and indicator_tau_hat(P, G, H)
        if term:
            total += epsilon_between(P2, P)
    return total


def langlands_sum(P, H):
    """Alternating sum over coarsenings Q of P of
    sign(P,Q) * tau_hat(P within Q) * tau(Q within G); identically 0 for
    P a proper decomposition."""
    H = as_fractions(H)
    if P.r < 2:
        raise ValueError("the sum needs a proper decomposition")
    G = group(P.n)
    total = 0
    for Q in coarsenings_of(P):
        term = indicator_tau_hat(P, Q, H) and indicator_tau(Q, G, H)
        if term:
            total += epsilon_between(P, Q)
    return total


def levi_sum_tau_hat(M, H):
    """Count the block orderings whose weight pairings are all strictly
    positive; equals (r-1)! off walls for r blocks.

    H must be constant on each block of M.  A vanishing pairing in any
    ordering puts H on a wall: WallError, never a silent count.
    """
    H = as_fractions(H)
    if len(H) != M.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(H), M.n))
    for a, b in M.intervals:
        if any(H[i] != H[a] for i in range(a, b)):
            raise ValueError("point is not block-constant on %s" % (M,))
    n = M.n
    sizes = M.blocks
    sums = M.block_sums(H)
    total = sum(sums)
    count = 0
    for order in itertools.permutations(range(M.r)):
        fired = True
        psum = 0
        psize = 0
        for u in order[:-1]:
            psum += sums[u]
            psize += sizes[u]
            gap = n * psum - psize * total
            if gap == 0:
                raise WallError("ordering %r pairs to zero" % (order,))
            if gap < 0:
                fired = False
        if fired:
            count += 1
    return count


@dataclass(frozen=True)
class ArthurReport:
    """Evaluations of the two partition identities at one point."""

    partition_sum: int
    semistable_direct: int
    semistable_alternating: int

    @property
    def ok(self):
        return self.partition_sum == 1 and (
            self.semistable_direct == self.semistable_alternating
        )

    def __bool__(self):
        return self.ok


def arthur_partition_report(Q, H):
    """Evaluate both partition identities at H.

    Identity one: over all (refinement, arrangement) pairs the terms
    [rearranged point semistable] * [arranged averages strictly decrease]
    sum to exactly 1.  Identity two: the semistability indicator of Q
    equals the signed sum over pairs of the weight indicators.
    """
    H = as_fractions(H)
    if len(H) != Q.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(H), Q.n))
    partition_sum = 0
    alternating = 0
    for P in refinements_within(Q):
        sign = epsilon_between(P, Q)
        for arr in arrangements(P, Q):
            sums = tuple(sum(H[i] for i in S) for S in arr)
            if all(g > 0 for g in consecutive_root_gaps(P, Q, sums)):
                if arranged_semistable(arr, H):
                    partition_sum += 1
            if all(g > 0 for g in relative_weight_gaps(P, Q, sums)):
                alternating += sign
    return ArthurReport(
        partition_sum=partition_sum,
        semistable_direct=indicator_F(Q, H),
        semistable_alternating=alternating,
    )


def arthur_partition_check(Q, H):
    """True iff both partition identities hold exactly at H."""
    return arthur_partition_report(Q, H).ok
