"""Exact rational root data for block decompositions of GL(n).

Points live in Q^n (one rational coordinate per basis line).  A standard
parabolic is a composition of n: consecutive index blocks.  A semi-standard
one is an ordered set partition: arbitrary index blocks in a given order.
The Weyl group is the symmetric group; a coset of permutations modulo the
block-preserving subgroup is exactly an arrangement assigning index sets to
blocks, which is the representation used throughout.

All pairings against roots, weights, and half-sums reduce to block sums:

- restricted simple roots compare consecutive block averages;
- fundamental weights relative to an ambient block compare a leading partial
  sum against its size-proportional share of the ambient total;
- the half-sum of radical roots pairs a block sum with (n - N_i - N_{i-1})/2
  where N_i is the i-th partial sum of the composition.

Everything is exact Fraction arithmetic; no floats enter this subpackage.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class WallError(ValueError):
    """A pairing that must be strictly signed vanished exactly on this point."""


class WallTie(ValueError):
    """Two maximal maximizers exist; the point sits on a degeneracy wall."""


def compositions(n):
    """All compositions of n (ordered tuples of positive parts), 2^(n-1) many."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for cuts in range(1 << (n - 1)):
        parts = []
        size = 1
        for pos in range(n - 1):
            if cuts & (1 << pos):
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        out.append(tuple(parts))
    return out


@dataclass(frozen=True)
class StandardParabolic:
    """Composition of n: consecutive index blocks of the given sizes."""

    blocks: tuple

    def __post_init__(self):
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be positive, got %r" % (self.blocks,))
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))

    @property
    def n(self):
        return sum(self.blocks)

    @property
    def r(self):
        return len(self.blocks)

    @property
    def intervals(self):
        """Half-open index intervals (start, stop) per block."""
        out = []
        start = 0
        for b in self.blocks:
            out.append((start, start + b))
            start += b
        return tuple(out)

    @property
    def index_blocks(self):
        return tuple(tuple(range(a, b)) for a, b in self.intervals)

    @property
    def rho_values(self):
        """Per-block value of the half-sum of radical roots (block-constant)."""
        out = []
        before = 0
        for b in self.blocks:
            after = self.n - before - b
            out.append(Fraction(after - before, 2))
            before += b
        return tuple(out)

    def refines(self, other):
        """True when this composition splits each block of the other."""
        if self.n != other.n:
            return False
        it = iter(self.blocks)
        for target in other.blocks:
            acc = 0
            while acc < target:
                try:
                    acc += next(it)
                except StopIteration:
                    return False
            if acc != target:
                return False
        return True

    def split_by(self, coarser):
        """Sub-compositions of this refinement inside each block of coarser."""
        if not self.refines(coarser):
            raise ValueError("%r does not refine %r" % (self.blocks, coarser.blocks))
        out = []
        it = iter(self.blocks)
        for target in coarser.blocks:
            acc = 0
            sub = []
            while acc < target:
                b = next(it)
                sub.append(b)
                acc += b
            out.append(tuple(sub))
        return tuple(out)

    def block_sums(self, point):
        """Per-block coordinate sums of a point in Q^n."""
        return tuple(sum(point[i] for i in range(a, b)) for a, b in self.intervals)

    def block_averages(self, point):
        return tuple(
            Fraction(s) / b if not isinstance(s, Fraction) else s / b
            for s, b in zip(self.block_sums(point), self.blocks)
        )

    def project(self, point):
        """Orthogonal projection onto block-constant vectors (block averaging)."""
        out = []
        for (a, b), avg in zip(self.intervals, self.block_averages(point)):
            out.extend([avg] * (b - a))
        return tuple(out)

    def __str__(self):
        return "(" + ",".join(str(b) for b in self.blocks) + ")"


def group(n):
    """The full group as the one-block parabolic."""
    return StandardParabolic((n,))


def minimal_parabolic(n):
    return StandardParabolic((1,) * n)


@lru_cache(maxsize=None)
def standard_parabolics(n):
    """All standard parabolics of GL(n), coarsest-first deterministic order."""
    return tuple(
        StandardParabolic(c) for c in sorted(compositions(n), key=lambda c: (len(c), c))
    )


def refinements_within(coarser):
    """All standard parabolics refining the given one (itself included)."""
    per_block = [compositions(b) for b in coarser.blocks]
    out = []
    for combo in itertools.product(*per_block):
        blocks = tuple(itertools.chain.from_iterable(combo))
        out.append(StandardParabolic(blocks))
    return out


def coarsenings_of(finer):
    """All standard parabolics the given one refines (itself included).

    A coarsening merges runs of adjacent blocks.
    """
    r = finer.r
    out = []
    for cuts in range(1 << (r - 1)):
        merged = []
        acc = finer.blocks[0]
        for pos in range(r - 1):
            if cuts & (1 << pos):
                merged.append(acc)
                acc = finer.blocks[pos + 1]
            else:
                acc += finer.blocks[pos + 1]
        merged.append(acc)
        out.append(StandardParabolic(tuple(merged)))
    return out


@dataclass(frozen=True)
class SemiStandardParabolic:
    """Ordered set partition of {0..n-1}: arbitrary index blocks in order."""

    blocks: tuple  # tuple of tuples of ascending indices

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(i) for i in blk)) for blk in self.blocks)
        seen = set()
        for blk in blocks:
            if not blk:
                raise ValueError("empty block")
            for i in blk:
                if i in seen:
                    raise ValueError("index %d repeated" % i)
                seen.add(i)
        if seen != set(range(len(seen))):
            raise ValueError("blocks must cover 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    @property
    def composition(self):
        return tuple(len(b) for b in self.blocks)

    def block_sums(self, point):
        return tuple(sum(point[i] for i in blk) for blk in self.blocks)

    def to_json(self):
        return {"blocks": [list(b) for b in self.blocks]}

    def __str__(self):
        return "|".join("{%s}" % ",".join(str(i) for i in blk) for blk in self.blocks)


def ordered_set_partitions(indices, sizes):
    """All ways to split the index tuple into ordered parts of the given sizes."""
    indices = tuple(indices)
    if sum(sizes) != len(indices):
        raise ValueError("sizes must sum to the number of indices")

    def gen(pool, remaining):
        if not remaining:
            yield ()
            return
        size = remaining[0]
        for combo in itertools.combinations(pool, size):
            rest_pool = tuple(i for i in pool if i not in combo)
            for rest in gen(rest_pool, remaining[1:]):
                yield (combo,) + rest

    return gen(indices, tuple(sizes))


def arrangements(P, Q):
    """Cosets of block permutations: assignments of index sets to P's blocks.

    P must refine Q; each Q-block's indices are distributed among the
    P-blocks it contains.  Yields tuples of index tuples aligned with
    P.blocks.  For Q the full group this enumerates all ordered set
    partitions with part sizes P.blocks.
    """
    subs = P.split_by(Q)
    per_block = [
        list(ordered_set_partitions(range(a, b), sub))
        for (a, b), sub in zip(Q.intervals, subs)
    ]
    for combo in itertools.product(*per_block):
        yield tuple(itertools.chain.from_iterable(combo))


def semistandard_all(n):
    """Every ordered set partition of {0..n-1} (all semi-standard parabolics)."""
    out = []
    for comp in compositions(n):
        P = StandardParabolic(comp)
        for arr in arrangements(P, group(n)):
            out.append(SemiStandardParabolic(arr))
    return out


def as_fractions(point):
    """Validate and convert a point to a tuple of Fractions."""
    return tuple(Fraction(h) for h in point)


def relative_rho_values(P, Q):
    """Half-sum values of P relative to Q, aligned with P's blocks.

    Within each Q-block the sub-composition gets its own local half-sum
    vector; across Q-blocks the contributions are independent.  For Q the
    full group this reduces to P.rho_values.
    """
    out = []
    for sub in P.split_by(Q):
        b = sum(sub)
        before = 0
        for m in sub:
            after = b - before - m
            out.append(Fraction(after - before, 2))
            before += m
    return tuple(out)


def relative_weight_gaps(P, Q, sums):
    """Pairings of P's relative fundamental weights against per-block sums.

    sums are P-block coordinate sums (of the point, possibly rearranged).
    Within a Q-block of size L holding sub-block sizes (m_1..m_t) and sums
    (s_1..s_t), the weight at cut u pairs to (partial sum) - (partial
    size / L) * (block total); the returned value is that pairing scaled
    by L > 0, so signs are preserved and arithmetic stays in integers
    whenever the sums are integers.
    """
    subs = P.split_by(Q)
    out = []
    idx = 0
    for sub in subs:
        t = len(sub)
        block_sums = sums[idx : idx + t]
        idx += t
        L = sum(sub)
        total = sum(block_sums)
        psum = 0
        psize = 0
        for u in range(t - 1):
            psum += block_sums[u]
            psize += sub[u]
            out.append(L * psum - psize * total)
    return tuple(out)


def consecutive_root_gaps(P, Q, sums):
    """Simple-root pairings: consecutive block-average differences within
    each Q-block, scaled by the (positive) product of the two block sizes."""
    subs = P.split_by(Q)
    out = []
    idx = 0
    for sub in subs:
        t = len(sub)
        block_sums = sums[idx : idx + t]
        idx += t
        for u in range(t - 1):
            out.append(block_sums[u] * sub[u + 1] - block_sums[u + 1] * sub[u])
    return tuple(out)


def epsilon_between(P, Q):
    """Sign (-1)^(r(P) - r(Q)) for P refining Q."""
    return -1 if (P.r - Q.r) % 2 else 1
