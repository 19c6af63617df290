"""Instability degrees, canonical destabilizing pairs, and chamber cones.

The degree of a point relative to a block decomposition is the largest
half-sum pairing over refinements and rearrangements.  Sorting a block in
descending order and grouping equal values realizes the maximum, which is
what the fast paths below exploit; the brute-force enumerations stay
available as oracles and as the honest implementation of the exclusive
reading (see degree_instability).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .roots import (
    SemiStandardParabolic,
    StandardParabolic,
    WallTie,
    arrangements,
    as_fractions,
    group,
    ordered_set_partitions,
    refinements_within,
    relative_rho_values,
    relative_weight_gaps,
)

MAX_SUBSET_BLOCK = 22  # 2^22 subset scans are the ceiling for literal routes


def block_degree(values):
    """Instability degree of a single block: half-sum pairing of the
    descending value-class rearrangement.

    Equal values are grouped; each class of size m at value v sitting
    between `before` earlier and `after` later coordinates contributes
    (after - before)/2 * m * v.  Always >= 0; zero iff the block is
    constant.
    """
    vals = sorted(as_fractions(values), reverse=True)
    b = len(vals)
    deg = Fraction(0)
    before = 0
    i = 0
    while i < b:
        j = i
        while j < b and vals[j] == vals[i]:
            j += 1
        m = j - i
        after = b - before - m
        deg += Fraction(after - before, 2) * m * vals[i]
        before += m
        i = j
    return deg


def pair_pairing(P, Q, arrangement, H):
    """Half-sum pairing <rho_P^Q, sums of the rearranged point>."""
    rho = relative_rho_values(P, Q)
    return sum(
        (r * sum(H[i] for i in S) for r, S in zip(rho, arrangement)),
        Fraction(0),
    )


def degree_pairs(Q, H, include_trivial_pair=True):
    """All (refinement, arrangement, pairing) triples below Q.

    The trivial pair is (Q, identity) with pairing exactly 0; excluding it
    leaves an empty collection only when Q has no block of size >= 2.
    """
    H = as_fractions(H)
    out = []
    for P in refinements_within(Q):
        if not include_trivial_pair and P.blocks == Q.blocks:
            continue
        for arr in arrangements(P, Q):
            out.append((P, arr, pair_pairing(P, Q, arr, H)))
    return out


def degree_instability(Q, H, include_trivial_pair=True):
    """Largest half-sum pairing over refinements of Q and rearrangements.

    Inclusive mode admits the trivial pair (pairing 0), so the degree is
    >= 0 and vanishes exactly on the Q-semistable points (each Q-block
    constant).  Exclusive mode drops that single pair; it returns None for
    the minimal decomposition, where no other pair exists, and agrees with
    the inclusive value everywhere else (the pair set is closed under the
    blockwise order reversal that negates pairings).
    """
    H = as_fractions(H)
    if len(H) != Q.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(H), Q.n))
    if include_trivial_pair:
        total = Fraction(0)
        for a, b in Q.intervals:
            total += block_degree(H[a:b])
        return total
    pairs = degree_pairs(Q, H, include_trivial_pair=False)
    if not pairs:
        return None
    return max(p for _, _, p in pairs)


def indicator_F(P, H):
    """Semistability indicator: 1 iff the instability degree within each
    block is <= 0, i.e. every block of the point is constant."""
    return 1 if degree_instability(P, H) <= 0 else 0


def arranged_semistable(arrangement, H):
    """Semistability of the rearranged point for the blocks it is sorted
    into: every assigned index set carries a single value."""
    for S in arrangement:
        if block_degree([H[i] for i in S]) > 0:
            return False
    return True


def semistable_three_ways(Q, H):
    """Evaluate the three equivalent semistability criteria independently.

    Returns (by_degree, by_all_weights, by_corank_one_weights):
    degree <= 0; every relative fundamental-weight pairing over every
    refinement and rearrangement <= 0; the same restricted to refinements
    splitting a single block once.
    """
    H = as_fractions(H)
    by_degree = degree_instability(Q, H) <= 0

    by_all = True
    for P in refinements_within(Q):
        for arr in arrangements(P, Q):
            sums = tuple(sum(H[i] for i in S) for S in arr)
            if any(g > 0 for g in relative_weight_gaps(P, Q, sums)):
                by_all = False
                break
        if not by_all:
            break

    by_maximal = True
    for P in refinements_within(Q):
        split_blocks = sum(1 for sub in P.split_by(Q) if len(sub) > 1)
        if split_blocks != 1 or P.r != Q.r + 1:
            continue
        for arr in arrangements(P, Q):
            sums = tuple(sum(H[i] for i in S) for S in arr)
            if any(g > 0 for g in relative_weight_gaps(P, Q, sums)):
                by_maximal = False
                break
        if not by_maximal:
            break

    return by_degree, by_all, by_maximal


@dataclass(frozen=True)
class CanonicalPair:
    """Destabilizing data of a point: block type, index assignment, degree.

    weyl is the minimal coset representative as a one-line permutation; its
    consecutive runs of the type's lengths are the index blocks, each
    ascending.
    """

    parabolic: StandardParabolic
    weyl: tuple
    degree: Fraction

    @property
    def blocks(self):
        out = []
        pos = 0
        for b in self.parabolic.blocks:
            out.append(tuple(self.weyl[pos : pos + b]))
            pos += b
        return tuple(out)

    def to_json(self):
        return {
            "type": list(self.parabolic.blocks),
            "weyl": list(self.weyl),
            "degree": {"num": self.degree.numerator, "den": self.degree.denominator},
        }


def _verify_canonical_conditions(blocks, H):
    """The two characterizing conditions: each assigned block constant
    (rearranged point semistable for the block type) and assigned block
    averages strictly decreasing."""
    if not arranged_semistable(blocks, H):
        return False
    avgs = [Fraction(sum(H[i] for i in S), len(S)) for S in blocks]
    return all(a > b for a, b in zip(avgs, avgs[1:]))


def canonical_pair(H):
    """The unique maximal maximizing pair, built from value classes.

    Group coordinates by value, classes in descending value order: the
    class sizes are the block type, the class index sets (ascending inside
    each class) concatenate to the permutation, and the degree is the
    half-sum pairing of the sorted point.  The two characterizing
    conditions are re-verified exactly before returning.
    """
    H = as_fractions(H)
    if not H:
        raise ValueError("empty point")
    order = sorted(range(len(H)), key=lambda i: (-H[i], i))
    blocks = []
    sizes = []
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and H[order[j]] == H[order[i]]:
            j += 1
        blocks.append(tuple(order[i:j]))
        sizes.append(j - i)
        i = j
    P = StandardParabolic(tuple(sizes))
    pair = CanonicalPair(
        parabolic=P,
        weyl=tuple(itertools.chain.from_iterable(blocks)),
        degree=pair_pairing(P, group(len(H)), tuple(blocks), H),
    )
    if not _verify_canonical_conditions(pair.blocks, H):
        raise AssertionError("value-class pair failed its defining conditions")
    return pair


def canonical_pair_brute(H):
    """Definitional canonical pair: maximize the half-sum pairing over all
    pairs, then keep the maximizers none of whose proper merges attains the
    maximum.  Raises WallTie if that filter leaves more than one pair.

    Exponential in n; this is the oracle the fast construction is tested
    against.
    """
    H = as_fractions(H)
    n = len(H)
    G = group(n)
    pairs = degree_pairs(G, H, include_trivial_pair=True)
    best = max(p for _, _, p in pairs)
    maximizers = [(P, arr) for P, arr, p in pairs if p == best]

    survivors = []
    for P, arr in maximizers:
        dominated = False
        r = P.r
        for cuts in range(1 << (r - 1)):
            if cuts == (1 << (r - 1)) - 1:
                continue  # all cuts kept: the pair itself
            merged_sets = []
            acc = list(arr[0])
            for pos in range(r - 1):
                if cuts & (1 << pos):
                    merged_sets.append(tuple(sorted(acc)))
                    acc = list(arr[pos + 1])
                else:
                    acc.extend(arr[pos + 1])
            merged_sets.append(tuple(sorted(acc)))
            merged_P = StandardParabolic(tuple(len(S) for S in merged_sets))
            if pair_pairing(merged_P, G, tuple(merged_sets), H) == best:
                dominated = True
                break
        if not dominated:
            survivors.append((P, arr))

    if len(survivors) != 1:
        raise WallTie("%d maximal maximizers at degree %s" % (len(survivors), best))
    P, arr = survivors[0]
    return CanonicalPair(
        parabolic=P,
        weyl=tuple(itertools.chain.from_iterable(arr)),
        degree=best,
    )


def cone_accepts(prime, H):
    """Literal chamber-cone membership test for an ordered index partition.

    Requires strictly decreasing block averages, and for every block every
    nonempty proper subset must have average <= the block average (each
    such subset is the leading group of some ordered refinement, and those
    exhaust the refinement weights).
    """
    H = as_fractions(H)
    sums = prime.block_sums(H)
    sizes = prime.composition
    for u in range(len(sizes) - 1):
        if sums[u] * sizes[u + 1] - sums[u + 1] * sizes[u] <= 0:
            return False
    for S, total in zip(prime.blocks, sums):
        m = len(S)
        if m > MAX_SUBSET_BLOCK:
            raise ValueError("block too large for literal subset scan")
        if m == 1:
            continue
        for size in range(1, m):
            for T in itertools.combinations(S, size):
                if sum(H[i] for i in T) * m > total * size:
                    return False
    return True


def cone_membership(H):
    """The unique ordered index partition whose cone contains the point.

    Construction: value classes in descending order.  Existence and
    uniqueness against the literal acceptance test are exercised
    exhaustively in the test suite, including on walls.
    """
    pair = canonical_pair(H)
    return SemiStandardParabolic(pair.blocks)


@dataclass(frozen=True)
class ExtremalPair:
    """Largest leading-weight maximizer: a two-block type (or the full
    group) with the index set assigned to its first block."""

    parabolic: StandardParabolic
    first_block: tuple
    value: Fraction

    def to_json(self):
        return {
            "type": list(self.parabolic.blocks),
            "first_block": list(self.first_block),
            "value": {"num": self.value.numerator, "den": self.value.denominator},
        }


def extremal_max_pair(H):
    """Maximize the leading-block average over all index subsets.

    Candidates are every nonempty subset (two-block type (k, n-k)) plus
    the full set (the one-block type).  Among maximizers of the average
    the largest subset wins; maximizers are closed under union, so that
    largest one is unique.  WallTie guards the impossible tie anyway.
    """
    H = as_fractions(H)
    n = len(H)
    if n > MAX_SUBSET_BLOCK:
        raise ValueError("point too long for literal subset scan")
    best = None
    best_sets = []
    for size in range(1, n + 1):
        for T in itertools.combinations(range(n), size):
            avg = Fraction(sum(H[i] for i in T), size)
            if best is None or avg > best:
                best = avg
                best_sets = [T]
            elif avg == best:
                best_sets.append(T)
    top_size = max(len(T) for T in best_sets)
    winners = [T for T in best_sets if len(T) == top_size]
    if len(winners) != 1:
        raise WallTie("%d extremal maximizers of size %d" % (len(winners), top_size))
    S = winners[0]
    if top_size == n:
        P = group(n)
    else:
        P = StandardParabolic((top_size, n - top_size))
    return ExtremalPair(parabolic=P, first_block=S, value=best)
