"""Minimum colour-change antipodal geodesics and adversarial colourings.

The minimum over all n! geodesics from a vertex to its antipode is computed
by dynamic programming over (set of used directions, colour of last edge),
replacing factorial enumeration with O(2^n * n) states per source.  A plain
full-enumeration oracle is kept for cross-checking at small n, and a seeded
hill-climber searches for colourings whose best antipodal geodesic still
needs many changes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import EdgeColouring, Geodesic, antipode, num_edges
from . import q3

_INF = 1 << 20


@dataclass(frozen=True)
class MinChangesResult:
    vertex: int
    antipode: int
    changes: int
    witness: Geodesic


def min_changes_from(c: EdgeColouring, v: int) -> MinChangesResult:
    """Exact minimum colour changes from v to its antipode, with a witness.

    g[S][l] = minimum changes still needed when the directions in S are used
    and the last edge had colour l.  The witness is rebuilt greedily from the
    start, taking the smallest direction that stays optimal, which yields the
    lexicographically smallest optimal direction sequence.
    """
    n = c.n
    full = (1 << n) - 1
    rows = c.rows
    g = [[0, 0] if s == full else [_INF, _INF] for s in range(full + 1)]
    for s in range(full - 1, -1, -1):
        gs = g[s]
        row_base = v ^ s
        for d in range(n):
            if s >> d & 1:
                continue
            col = rows[row_base][d]
            val = g[s | (1 << d)][col]
            if val + (col != 0) < gs[0]:
                gs[0] = val + (col != 0)
            if val + (col != 1) < gs[1]:
                gs[1] = val + (col != 1)
    best = min(g[1 << d][rows[v][d]] for d in range(n))
    dirs = []
    s, last, remaining = 0, None, best
    while s != full:
        for d in range(n):
            if s >> d & 1:
                continue
            col = rows[v ^ s][d]
            step = 0 if last is None else (col != last)
            if g[s | (1 << d)][col] + step == remaining:
                dirs.append(d)
                s |= 1 << d
                last = col
                remaining -= step
                break
    return MinChangesResult(v, antipode(v, n), best, Geodesic(v, tuple(dirs)))


def _min_changes_all_even(c: EdgeColouring):
    """Vectorized DP over all even source vertices at once.

    Returns (sources ascending, per-source minimum changes).  Change counts
    are reversal-invariant, so running from even endpoints covers all pairs.
    """
    n = c.n
    nverts = 1 << n
    full = nverts - 1
    ct = c.table
    srcs = np.array([v for v in range(nverts) if v.bit_count() % 2 == 0])
    g = np.full((nverts, 2, len(srcs)), _INF, dtype=np.int32)
    g[full] = 0
    for s in range(full - 1, -1, -1):
        cur = srcs ^ s
        for d in range(n):
            if s >> d & 1:
                continue
            col = ct[cur, d].astype(np.int32)
            nxt_pair = g[s | (1 << d)]
            nxt = np.where(col == 0, nxt_pair[0], nxt_pair[1])
            np.minimum(g[s, 0], nxt + col, out=g[s, 0])
            np.minimum(g[s, 1], nxt + 1 - col, out=g[s, 1])
    best = np.full(len(srcs), _INF, dtype=np.int32)
    for d in range(n):
        col = ct[srcs, d]
        pair = g[1 << d]
        np.minimum(best, np.where(col == 0, pair[0], pair[1]), out=best)
    return srcs, best


def min_antipodal_changes(c: EdgeColouring) -> MinChangesResult:
    """Minimum over all antipodal pairs; ties go to the smallest even id."""
    srcs, best = _min_changes_all_even(c)
    v = int(srcs[int(np.argmin(best))])
    return min_changes_from(c, v)


def min_antipodal_value(c: EdgeColouring) -> int:
    """Just the minimum change count (no witness reconstruction)."""
    if c.n == 3:
        return q3.tabulate().min_antipodal[c.bits]
    _, best = _min_changes_all_even(c)
    return int(best.min())


def brute_force_min(c: EdgeColouring) -> MinChangesResult:
    """Independent oracle: enumerate every geodesic of every antipodal pair."""
    n = c.n
    if n > 7:
        raise ValueError("brute force is limited to n <= 7")
    rows = c.rows
    best = None
    for v in range(1 << n):
        if v.bit_count() % 2:
            continue
        for perm in itertools.permutations(range(n)):
            u = v
            prev = None
            count = 0
            for d in perm:
                col = rows[u][d]
                if prev is not None and col != prev:
                    count += 1
                prev = col
                u ^= 1 << d
            if best is None or count < best[0]:
                best = (count, v, perm)
    count, v, perm = best
    return MinChangesResult(v, antipode(v, n), count, Geodesic(v, perm))


@dataclass(frozen=True)
class AdversaryResult:
    colouring: EdgeColouring
    value: int
    iterations: int
    seed: int


def adversary_search(n: int, seed: int, iterations: int) -> AdversaryResult:
    """Seeded hill-climb maximizing min_antipodal_changes by single-edge flips.

    Sideways moves are accepted; after n * 2^n steps without improving the
    best value seen, the climb restarts from a fresh random colouring drawn
    from the same stream, keeping the whole run deterministic per seed.
    """
    if not 3 <= n <= 12:
        raise ValueError("adversary search supports 3 <= n <= 12")
    if iterations < 1:
        raise ValueError("need at least one iteration")
    rng = np.random.default_rng(seed)
    m = num_edges(n)
    if n == 3:
        minval = q3.tabulate().min_antipodal

        def evaluate(bits):
            return minval[bits]

    else:

        def evaluate(bits):
            return min_antipodal_value(EdgeColouring(n, bits))

    def fresh():
        raw = rng.integers(0, 2, size=m)
        bits = 0
        for i, b in enumerate(raw):
            if b:
                bits |= 1 << i
        return bits

    plateau_limit = n << n
    cur = fresh()
    cur_val = evaluate(cur)
    best_bits, best_val = cur, cur_val
    stall = 0
    for _ in range(iterations):
        flip = int(rng.integers(m))
        cand = cur ^ (1 << flip)
        val = evaluate(cand)
        if val >= cur_val:
            cur, cur_val = cand, val
        if val > best_val:
            best_bits, best_val = cand, val
            stall = 0
        else:
            stall += 1
            if stall >= plateau_limit:
                cur = fresh()
                cur_val = evaluate(cur)
                if cur_val > best_val:
                    best_bits, best_val = cur, cur_val
                stall = 0
    return AdversaryResult(EdgeColouring(n, best_bits), int(best_val), iterations, seed)
