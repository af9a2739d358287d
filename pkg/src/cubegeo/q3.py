"""Exhaustive analysis of 2-coloured Q_3 graphs.

A Q_3 colouring is a 12-bit integer over the canonical edge numbering of
core.edge_index with n=3.  A colouring is *good* if one antipodal geodesic
can be chosen per antipodal pair so that the four together have at most two
colour changes, and *bad* otherwise.  This module classifies all 4096
colourings, machine-checks the three structural lemmas the construction
relies on, and builds the local geodesic selectors for good and bad cubes.

Orientation convention: every length-3 geodesic joins an even vertex to an
odd one.  Selections and tie-breaks are made from the even endpoint, by
lexicographically smallest direction sequence, so that the choice for (x, y)
and (y, x) is the same geodesic traversed in opposite directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

import numpy as np

from .core import Colour, Geodesic, edge_index_at, parity

N_Q3_COLOURINGS = 1 << 12

# Even endpoints of the four antipodal pairs of Q_3.
EVEN_ENDPOINTS = (0, 3, 5, 6)
PERMS = tuple(itertools.permutations((0, 1, 2)))


class FVariant(IntEnum):
    """The two global selector flavours; they differ only on bad subcubes."""

    F1 = 0  # blue edge at the even endpoint, red at the odd one
    F2 = 1  # red edge at the even endpoint, blue at the odd one


def _edge_bit(v: int, d: int) -> int:
    return edge_index_at(3, v, d)


# _GEO_BITS[e][pi] = the three edge-bit positions of geodesic (e, perm) for
# perm = PERMS[pi], starting at even endpoint e.
def _build_geo_bits():
    out = {}
    for e in EVEN_ENDPOINTS:
        rows = []
        for perm in PERMS:
            v = e
            bits = []
            for d in perm:
                bits.append(_edge_bit(v, d))
                v ^= 1 << d
            rows.append(tuple(bits))
        out[e] = tuple(rows)
    return out


_GEO_BITS = _build_geo_bits()

# _STAR_BITS[v] = edge-bit positions of the three edges at vertex v.
_STAR_BITS = tuple(
    tuple(_edge_bit(v, d) for d in range(3)) for v in range(8)
)


def geodesic_changes(q: int, e: int, pi: int) -> int:
    """Colour changes of geodesic PERMS[pi] from even endpoint e under q."""
    b0, b1, b2 = _GEO_BITS[e][pi]
    x0 = q >> b0 & 1
    x1 = q >> b1 & 1
    x2 = q >> b2 & 1
    return (x0 != x1) + (x1 != x2)


def pair_changes(q: int, e: int) -> tuple:
    """Change counts of the six geodesics between e and its antipode."""
    return tuple(geodesic_changes(q, e, pi) for pi in range(6))


@dataclass(frozen=True)
class Classification:
    """Good/bad verdict for a Q_3 colouring.

    `witness` holds one geodesic per antipodal pair (started at the even
    endpoint, ordered by even endpoint id) when good, None when bad.
    `min_total_changes` is the best achievable total over all 6^4 one-per-pair
    assignments either way.
    """

    good: bool
    min_total_changes: int
    witness: tuple | None


def classify(q: int) -> Classification:
    """Classify a 12-bit Q_3 colouring as good or bad, with a minimal witness.

    The one-geodesic-per-pair assignments are independent across pairs, so
    the minimal total is the sum of per-pair minima; ties go to the
    lexicographically smallest direction sequence.
    """
    if not 0 <= q < N_Q3_COLOURINGS:
        raise ValueError(f"Q3 colouring must be a 12-bit value, got {q}")
    total = 0
    witness = []
    for e in EVEN_ENDPOINTS:
        ch = pair_changes(q, e)
        best = min(ch)
        total += best
        witness.append(Geodesic(e, PERMS[ch.index(best)]))
    if total <= 2:
        return Classification(True, total, tuple(witness))
    return Classification(False, total, None)


@dataclass(frozen=True)
class SelectorEntry:
    """A chosen antipodal geodesic (x, first, second, y) inside a Q_3."""

    x: int
    y: int
    first: int
    second: int

    def geodesic(self) -> Geodesic:
        d0 = (self.x ^ self.first).bit_length() - 1
        d1 = (self.first ^ self.second).bit_length() - 1
        d2 = (self.second ^ self.y).bit_length() - 1
        return Geodesic(self.x, (d0, d1, d2))


def _oriented_entry(e: int, perm: tuple, x: int, y: int) -> SelectorEntry:
    """Build a SelectorEntry for ordered pair (x, y) from the geodesic
    starting at even endpoint e with direction sequence perm."""
    first_e = e ^ (1 << perm[0])
    second_e = e ^ (1 << perm[0]) ^ (1 << perm[1])
    if x == e:
        return SelectorEntry(x, y, first_e, second_e)
    return SelectorEntry(x, y, second_e, first_e)


def _check_antipodal_q3(x: int, y: int) -> int:
    if x ^ y != 7 or not 0 <= x < 8:
        raise ValueError(f"vertices {x} and {y} are not antipodal in Q3")
    return x if parity(x) == 0 else y


def select_good_geodesic(q: int, x: int, y: int) -> SelectorEntry:
    """Minimal-changes geodesic between antipodal x, y in a good colouring."""
    e = _check_antipodal_q3(x, y)
    cls = classify(q)
    if not cls.good:
        raise ValueError("select_good_geodesic called on a bad colouring")
    ch = pair_changes(q, e)
    pi = ch.index(min(ch))
    return _oriented_entry(e, PERMS[pi], x, y)


def select_bad_geodesic(q: int, x: int, y: int, variant: FVariant) -> SelectorEntry:
    """One-change geodesic with the variant's endpoint colour pattern.

    F1: blue edge at the even endpoint, red edge at the odd one; F2 is the
    colour-swapped pattern.  Existence is guaranteed for every bad colouring
    (verified exhaustively by verify_lemma8).
    """
    e = _check_antipodal_q3(x, y)
    if classify(q).good:
        raise ValueError("select_bad_geodesic called on a good colouring")
    want_first = Colour.BLUE if variant == FVariant.F1 else Colour.RED
    for pi in range(6):
        b0, b1, b2 = _GEO_BITS[e][pi]
        x0 = q >> b0 & 1
        x2 = q >> b2 & 1
        if x0 == want_first and x2 != want_first and geodesic_changes(q, e, pi) == 1:
            return _oriented_entry(e, PERMS[pi], x, y)
    raise AssertionError(f"no qualifying geodesic in bad colouring {q:#x}")


@dataclass(frozen=True)
class LemmaSweep:
    """Result of an exhaustive sweep: violating colourings + hypothesis hits."""

    counterexamples: tuple
    hypothesis_hits: int

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def verify_lemma6() -> LemmaSweep:
    """If some pair has all six geodesics with exactly two changes, the other
    three pairs must each admit a change-free geodesic."""
    bad = []
    hits = 0
    for q in range(N_Q3_COLOURINGS):
        per_pair = [pair_changes(q, e) for e in EVEN_ENDPOINTS]
        for i, ch in enumerate(per_pair):
            if all(c == 2 for c in ch):
                hits += 1
                if any(min(per_pair[j]) != 0 for j in range(4) if j != i):
                    bad.append(q)
                break
    return LemmaSweep(tuple(bad), hits)


def verify_lemma7() -> LemmaSweep:
    """A monochromatic edge-star at any vertex forces a good colouring."""
    table = tabulate()
    bad = []
    hits = 0
    for q in range(N_Q3_COLOURINGS):
        mono = any(
            (q >> b0 & 1) == (q >> b1 & 1) == (q >> b2 & 1)
            for b0, b1, b2 in _STAR_BITS
        )
        if mono:
            hits += 1
            if not table.good[q]:
                bad.append(q)
    return LemmaSweep(tuple(bad), hits)


def verify_lemma8() -> LemmaSweep:
    """Every bad colouring has, from every vertex, a one-change geodesic for
    both endpoint colour patterns (red/blue and blue/red)."""
    table = tabulate()
    bad = []
    hits = 0
    for q in range(N_Q3_COLOURINGS):
        if table.good[q]:
            continue
        hits += 1
        ok = True
        for e in EVEN_ENDPOINTS:
            found = [False, False]  # blue-at-even, red-at-even
            for pi in range(6):
                b0, b1, b2 = _GEO_BITS[e][pi]
                x0 = q >> b0 & 1
                x2 = q >> b2 & 1
                if x0 != x2 and geodesic_changes(q, e, pi) == 1:
                    found[1 - x0] = True
            if not all(found):
                ok = False
        if not ok:
            bad.append(q)
    return LemmaSweep(tuple(bad), hits)


@dataclass(frozen=True)
class Q3Table:
    """Precomputed classification and selector data for all 4096 colourings.

    good[q]              : bool, classification kind
    min_total[q]         : minimal witness total (classification threshold 2)
    pair_min[q]          : per even endpoint (order EVEN_ENDPOINTS), minimal
                           changes over the six geodesics of that pair
    min_antipodal[q]     : min over the four pairs of pair_min
    selectors[q]         : dict (x, variant_value) -> (first, second) for all
                           8 ordered antipodal pairs; good cubes store the
                           same entry under both variants
    first_edge_colour[q] : numpy array (8, 2): colour of the edge at vertex x
                           on the selected geodesic, per variant
    block_change_sum[q]  : sum over the 8 ordered pairs of the selected
                           geodesic's change count
    good_np / block_sum_np / first_edge_np / min_antipodal_np: the same data
    as numpy arrays for vectorized sweeps.
    """

    good: tuple
    min_total: tuple
    pair_min: tuple
    min_antipodal: tuple
    selectors: tuple
    good_np: np.ndarray
    block_sum_np: np.ndarray
    first_edge_np: np.ndarray
    min_antipodal_np: np.ndarray


@lru_cache(maxsize=1)
def tabulate() -> Q3Table:
    """Build the full 4096-entry classification/selector table (memoized)."""
    good = []
    min_total = []
    pair_min = []
    min_antip = []
    selectors = []
    block_sums = np.zeros(N_Q3_COLOURINGS, dtype=np.int16)
    first_edge = np.zeros((N_Q3_COLOURINGS, 8, 2), dtype=np.uint8)
    for q in range(N_Q3_COLOURINGS):
        per_pair = [pair_changes(q, e) for e in EVEN_ENDPOINTS]
        mins = tuple(min(ch) for ch in per_pair)
        total = sum(mins)
        is_good = total <= 2
        sel = {}
        if is_good:
            for e, ch, best in zip(EVEN_ENDPOINTS, per_pair, mins):
                pi = ch.index(best)
                o = 7 ^ e
                ent_e = _oriented_entry(e, PERMS[pi], e, o)
                ent_o = _oriented_entry(e, PERMS[pi], o, e)
                for vi in (0, 1):
                    sel[(e, vi)] = (ent_e.first, ent_e.second)
                    sel[(o, vi)] = (ent_o.first, ent_o.second)
                b0, _, b2 = _GEO_BITS[e][pi]
                first_edge[q, e, :] = q >> b0 & 1
                first_edge[q, o, :] = q >> b2 & 1
            block_sums[q] = 2 * total
        else:
            for e in EVEN_ENDPOINTS:
                o = 7 ^ e
                for vi, want_first in ((0, 1), (1, 0)):  # F1: blue at even
                    for pi in range(6):
                        b0, b1, b2 = _GEO_BITS[e][pi]
                        x0 = q >> b0 & 1
                        x2 = q >> b2 & 1
                        if (
                            x0 == want_first
                            and x2 != want_first
                            and geodesic_changes(q, e, pi) == 1
                        ):
                            ent_e = _oriented_entry(e, PERMS[pi], e, o)
                            ent_o = _oriented_entry(e, PERMS[pi], o, e)
                            sel[(e, vi)] = (ent_e.first, ent_e.second)
                            sel[(o, vi)] = (ent_o.first, ent_o.second)
                            first_edge[q, e, vi] = x0
                            first_edge[q, o, vi] = x2
                            break
                    else:
                        raise AssertionError(
                            f"lemma 8 selector missing for colouring {q:#x}"
                        )
            block_sums[q] = 8
        good.append(is_good)
        min_total.append(total)
        pair_min.append(mins)
        min_antip.append(min(mins))
        selectors.append(sel)
    return Q3Table(
        good=tuple(good),
        min_total=tuple(min_total),
        pair_min=tuple(pair_min),
        min_antipodal=tuple(min_antip),
        selectors=tuple(selectors),
        good_np=np.array(good, dtype=bool),
        block_sum_np=block_sums,
        first_edge_np=first_edge,
        min_antipodal_np=np.array(min_antip, dtype=np.int16),
    )


# --- symmetries, used to check classification invariance -------------------


def complement_q3(q: int) -> int:
    """Swap red and blue everywhere."""
    return q ^ (N_Q3_COLOURINGS - 1)


def transform_q3(q: int, perm: tuple, flips: int) -> int:
    """Apply the Q_3 isometry v -> permute_bits(v) ^ flips to a colouring."""
    out = 0
    for u in range(8):
        for d in range(3):
            if u >> d & 1:
                continue
            col = q >> _edge_bit(u, d) & 1
            tu = sum(1 << perm[i] for i in range(3) if u >> i & 1) ^ flips
            td = perm[d]
            out |= col << _edge_bit(tu & ~(1 << td), td)
    return out


def all_isometries():
    """The 48 isometries of Q_3 as (coordinate permutation, flip mask) pairs."""
    return [(perm, flips) for perm in PERMS for flips in range(8)]
