"""Modified antipodal geodesics built from local Q_3 selectors.

An antipodal geodesic of Q_n (3 | n) is cut into k = n/3 blocks of three
steps.  Each block between consecutive endpoints v, w (distance 3) is
replaced by the geodesic the local selector picks inside the subcube G(v, w):
a minimal-changes geodesic when the subcube's colouring is good, and a
one-change geodesic with a fixed endpoint colour pattern when it is bad.
The pattern is anchored to global vertex parity, so consecutive bad blocks
never produce a colour change at their junction.

This module computes the exact fraction p of good subcubes, the good-good /
mixed neighbour-pair probabilities a and b, the exact expected change count
of a uniformly random modified geodesic, and picks whichever of the two bad
selector flavours changes less often at mixed junctions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    EdgeColouring,
    Geodesic,
    SubcubeEmbedding,
    edge_index_at,
    parity,
    subcube_of_pair,
)
from .q3 import FVariant, tabulate


def _dir_mask(dirs) -> int:
    return sum(1 << d for d in dirs)


@lru_cache(maxsize=262144)
def _subcube_colouring(c: EdgeColouring, emb: SubcubeEmbedding) -> int:
    """Restrict c to the subcube, as a 12-bit Q_3 colouring value."""
    q = 0
    rows = c.rows
    for lu in range(8):
        gu = emb.to_global(lu)
        for ld in range(3):
            if lu >> ld & 1:
                continue
            if rows[gu][emb.dirs[ld]]:
                q |= 1 << edge_index_at(3, lu, ld)
    return q


def _f_entry(c: EdgeColouring, v: int, w: int, variant: FVariant):
    """(f(v,w), f(w,v)) as global vertices, for an ordered distance-3 pair.

    Bad-cube selectors are defined relative to global vertex parity; when the
    subcube anchor is odd, local and global parity disagree, which swaps the
    roles of the two variants in the local table.
    """
    emb = subcube_of_pair(v, w)
    q = _subcube_colouring(c, emb)
    table = tabulate()
    lvi = int(variant) ^ parity(emb.anchor)
    first_l, second_l = table.selectors[q][(emb.to_local(v), lvi)]
    return emb.to_global(first_l), emb.to_global(second_l)


def f_value(c: EdgeColouring, v: int, w: int, variant: FVariant = FVariant.F1) -> int:
    """The selector's neighbour of v on the chosen geodesic from v to w."""
    return _f_entry(c, v, w, variant)[0]


def f_geodesic(c: EdgeColouring, v: int, w: int, variant: FVariant = FVariant.F1) -> Geodesic:
    """The full selected geodesic (v, f(v,w), f(w,v), w)."""
    first, second = _f_entry(c, v, w, variant)
    d0 = (v ^ first).bit_length() - 1
    d1 = (first ^ second).bit_length() - 1
    d2 = (second ^ w).bit_length() - 1
    return Geodesic(v, (d0, d1, d2))


@dataclass(frozen=True)
class BlockDecomposition:
    """An antipodal geodesic skeleton: start vertex + ordered direction triples."""

    start: int
    triples: tuple

    def __post_init__(self):
        seen = set()
        for t in self.triples:
            if len(t) != 3 or tuple(sorted(t)) != tuple(t):
                raise ValueError(f"triple {t} must be 3 sorted distinct directions")
            if seen & set(t):
                raise ValueError("block triples must be pairwise disjoint")
            seen |= set(t)
        if seen != set(range(3 * len(self.triples))):
            raise ValueError("block triples must partition the direction set")

    @classmethod
    def from_permutation(cls, start: int, perm) -> "BlockDecomposition":
        perm = list(perm)
        if len(perm) % 3:
            raise ValueError("permutation length must be divisible by 3")
        triples = tuple(
            tuple(sorted(perm[i : i + 3])) for i in range(0, len(perm), 3)
        )
        return cls(start, triples)

    def endpoints(self) -> list:
        """The block endpoints v_0, v_3, ..., v_n."""
        out = [self.start]
        v = self.start
        for t in self.triples:
            v ^= _dir_mask(t)
            out.append(v)
        return out


def modify_geodesic(
    c: EdgeColouring, bd: BlockDecomposition, variant: FVariant
) -> Geodesic:
    """Replace each block of the skeleton by its selected geodesic."""
    if c.n % 3 or 3 * len(bd.triples) != c.n:
        raise ValueError(f"need dimension divisible by 3 matching {c.n}")
    dirs = []
    v = bd.start
    for t in bd.triples:
        w = v ^ _dir_mask(t)
        dirs.extend(f_geodesic(c, v, w, variant).dirs)
        v = w
    return Geodesic(bd.start, tuple(dirs))


# --- exhaustive subcube / junction accounting ------------------------------


@dataclass(frozen=True)
class _SubcubeScan:
    triples: tuple          # all direction triples, sorted
    good: np.ndarray        # (2^n, T) bool: subcube through v with triple t good?
    edge_col: np.ndarray    # (2^n, T, 2): selected-edge colour at v, per variant
    good_subcubes: int
    total_subcubes: int
    block_change_sum: int   # over all (start vertex, triple) selected geodesics


@lru_cache(maxsize=8)
def _subcube_scan(c: EdgeColouring) -> _SubcubeScan:
    n = c.n
    if n < 3:
        raise ValueError("subcube scan needs n >= 3")
    table = tabulate()
    ct = c.table
    nverts = 1 << n
    triples = tuple(itertools.combinations(range(n), 3))
    good = np.zeros((nverts, len(triples)), dtype=bool)
    edge_col = np.zeros((nverts, len(triples), 2), dtype=np.uint8)
    good_subcubes = 0
    block_sum = 0
    for t, d3 in enumerate(triples):
        mask = _dir_mask(d3)
        anchors = np.array([v for v in range(nverts) if v & mask == 0])
        par = np.array([int(v).bit_count() & 1 for v in anchors])
        offs = [sum(1 << d3[i] for i in range(3) if lu >> i & 1) for lu in range(8)]
        qs = np.zeros(len(anchors), dtype=np.int32)
        for lu in range(8):
            for ld in range(3):
                if lu >> ld & 1:
                    continue
                col = ct[anchors ^ offs[lu], d3[ld]].astype(np.int32)
                qs |= col << edge_index_at(3, lu, ld)
        goodv = table.good_np[qs]
        good_subcubes += int(goodv.sum())
        block_sum += int(table.block_sum_np[qs].sum())
        for lu in range(8):
            verts = anchors | offs[lu]
            good[verts, t] = goodv
            for vi in (0, 1):
                edge_col[verts, t, vi] = table.first_edge_np[qs, lu, vi ^ par]
    return _SubcubeScan(
        triples=triples,
        good=good,
        edge_col=edge_col,
        good_subcubes=good_subcubes,
        total_subcubes=(1 << (n - 3)) * len(triples),
        block_change_sum=block_sum,
    )


@lru_cache(maxsize=32)
def _disjoint_triple_pairs(n: int) -> tuple:
    triples = tuple(itertools.combinations(range(n), 3))
    masks = [_dir_mask(t) for t in triples]
    return tuple(
        (i, j)
        for i in range(len(triples))
        for j in range(i + 1, len(triples))
        if not masks[i] & masks[j]
    )


@dataclass(frozen=True)
class JunctionCounts:
    """Exact counts over all ordered junction configurations (u, D_in, D_out)."""

    total: int
    mixed: int
    changes: tuple          # per variant, over all configurations
    changes_mixed: tuple    # per variant, over good-bad configurations
    changes_bad_bad: tuple  # per variant, over bad-bad configurations


@lru_cache(maxsize=8)
def _junction_counts(c: EdgeColouring) -> JunctionCounts:
    if c.n < 6:
        raise ValueError("junction accounting needs n >= 6")
    scan = _subcube_scan(c)
    pairs = _disjoint_triple_pairs(c.n)
    g = scan.good
    e = scan.edge_col
    mixed_total = 0
    changes = [0, 0]
    changes_mixed = [0, 0]
    changes_bb = [0, 0]
    for i, j in pairs:
        gi, gj = g[:, i], g[:, j]
        mixed = gi ^ gj
        bb = ~gi & ~gj
        mixed_total += 2 * int(mixed.sum())
        for vi in (0, 1):
            diff = e[:, i, vi] != e[:, j, vi]
            changes[vi] += 2 * int(diff.sum())
            changes_mixed[vi] += 2 * int((diff & mixed).sum())
            changes_bb[vi] += 2 * int((diff & bb).sum())
    total = 2 * len(pairs) * (1 << c.n)
    return JunctionCounts(
        total=total,
        mixed=mixed_total,
        changes=tuple(changes),
        changes_mixed=tuple(changes_mixed),
        changes_bad_bad=tuple(changes_bb),
    )


@dataclass(frozen=True)
class SubcubeStats:
    """Exact subcube statistics: p = a + b/2 holds as rationals."""

    p: Fraction
    a: Fraction
    b: Fraction
    good_count_at: np.ndarray  # per vertex, number of good subcubes through it


def exact_stats(c: EdgeColouring) -> SubcubeStats:
    """Exact p (fraction of good subcubes) and neighbour-pair probabilities."""
    if c.n < 6:
        raise ValueError("neighbour-pair statistics need n >= 6")
    scan = _subcube_scan(c)
    pairs = _disjoint_triple_pairs(c.n)
    g = scan.good
    gg = 0
    mixed = 0
    for i, j in pairs:
        gi, gj = g[:, i], g[:, j]
        gg += int((gi & gj).sum())
        mixed += int((gi ^ gj).sum())
    npairs = len(pairs) * (1 << c.n)
    return SubcubeStats(
        p=Fraction(scan.good_subcubes, scan.total_subcubes),
        a=Fraction(gg, npairs),
        b=Fraction(mixed, npairs),
        good_count_at=scan.good.sum(axis=1),
    )


def good_fraction(c: EdgeColouring) -> Fraction:
    """Exact fraction of good Q_3 subcubes (defined for any n >= 3)."""
    scan = _subcube_scan(c)
    return Fraction(scan.good_subcubes, scan.total_subcubes)


def choose_variant(c: EdgeColouring) -> FVariant:
    """Pick the selector flavour changing on at most half the mixed junctions."""
    if c.n % 3:
        raise ValueError("variant choice needs 3 | n")
    if c.n < 6:
        return FVariant.F1  # no junctions: both variants equivalent
    jc = _junction_counts(c)
    if jc.mixed == 0 or 2 * jc.changes_mixed[0] <= jc.mixed:
        return FVariant.F1
    return FVariant.F2


@dataclass(frozen=True)
class ExpectationResult:
    """Exact expected colour changes of a uniform random modified geodesic."""

    block_mean: Fraction     # mean changes inside one block
    junction_mean: Fraction  # mean change indicator at one junction
    expectation: Fraction    # k * block_mean + (k-1) * junction_mean


def exact_expectation(c: EdgeColouring, variant: FVariant) -> ExpectationResult:
    """Exact mean change count; the modified geodesic depends only on the
    sequence of block-endpoint triples, whose single and consecutive-pair
    marginals are uniform over (vertex, triple) and junction configurations."""
    if c.n % 3:
        raise ValueError("expectation needs 3 | n")
    scan = _subcube_scan(c)
    k = c.n // 3
    block_mean = Fraction(scan.block_change_sum, 8 * scan.total_subcubes)
    if k > 1:
        jc = _junction_counts(c)
        junction_mean = Fraction(jc.changes[int(variant)], jc.total)
    else:
        junction_mean = Fraction(0)
    return ExpectationResult(
        block_mean=block_mean,
        junction_mean=junction_mean,
        expectation=k * block_mean + (k - 1) * junction_mean,
    )


def monte_carlo_mean(
    c: EdgeColouring, variant: FVariant, samples: int, seed: int
):
    """Sample mean and standard error of the change count over uniformly
    random modified geodesics (uniform start vertex, uniform direction
    permutation chunked into blocks).  Deterministic per seed."""
    if c.n % 3:
        raise ValueError("sampling needs 3 | n")
    if samples < 1:
        raise ValueError("need at least one sample")
    n = c.n
    rng = np.random.default_rng(seed)
    starts = rng.integers(0, 1 << n, size=samples)
    rows = c.rows
    table = tabulate()
    block_cache = {}
    total = 0
    total_sq = 0
    for s in range(samples):
        v = int(starts[s])
        perm = rng.permutation(n)
        prev = None
        count = 0
        for b in range(0, n, 3):
            d3 = tuple(sorted(int(d) for d in perm[b : b + 3]))
            mask = _dir_mask(d3)
            anchor = v & ~mask
            key = (anchor, d3)
            entry = block_cache.get(key)
            if entry is None:
                emb = SubcubeEmbedding(anchor, d3)
                q = _subcube_colouring(c, emb)
                entry = (emb, q, parity(anchor))
                block_cache[key] = entry
            emb, q, apar = entry
            first_l, second_l = table.selectors[q][
                (emb.to_local(v), int(variant) ^ apar)
            ]
            w = v ^ mask
            for nxt in (emb.to_global(first_l), emb.to_global(second_l), w):
                d = (v ^ nxt).bit_length() - 1
                col = rows[v][d]
                if prev is not None and col != prev:
                    count += 1
                prev = col
                v = nxt
        total += count
        total_sq += count * count
    mean = total / samples
    if samples > 1:
        var = (total_sq - samples * mean * mean) / (samples - 1)
        stderr = max(var, 0.0) ** 0.5 / samples**0.5
    else:
        stderr = 0.0
    return mean, stderr


@dataclass(frozen=True)
class ConstructionReport:
    """Everything the expectation pipeline produces for one colouring."""

    n: int
    p: Fraction
    a: Fraction | None
    b: Fraction | None
    good_count_at: np.ndarray
    chosen: FVariant
    block_mean: Fraction
    junction_mean: Fraction
    expectation: Fraction


def build_report(c: EdgeColouring, variant=None) -> ConstructionReport:
    """Assemble statistics, variant choice and exact expectation.

    `variant` None means choose automatically; pass an FVariant to override.
    """
    if c.n % 3:
        raise ValueError("construction report needs 3 | n")
    chosen = choose_variant(c) if variant is None else variant
    exp = exact_expectation(c, chosen)
    if c.n >= 6:
        stats = exact_stats(c)
        p, a, b = stats.p, stats.a, stats.b
        counts = stats.good_count_at
    else:
        scan = _subcube_scan(c)
        p, a, b = good_fraction(c), None, None
        counts = scan.good.sum(axis=1)
    return ConstructionReport(
        n=c.n,
        p=p,
        a=a,
        b=b,
        good_count_at=counts,
        chosen=chosen,
        block_mean=exp.block_mean,
        junction_mean=exp.junction_mean,
        expectation=exp.expectation,
    )
