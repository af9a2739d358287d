"""Bit-level primitives for the hypercube Q_n.

Vertices are integers in [0, 2^n); bit d of a vertex is its coordinate in
direction d.  Edges join vertices differing in exactly one bit.  A geodesic
is a path that uses each direction at most once; an antipodal geodesic uses
all n directions exactly once.

Edges are numbered canonically: the edge between u and u^(1<<d) is owned by
the endpoint with bit d clear, and its index is d*2^(n-1) + compress(u, d),
where compress drops bit d from u.  Colourings are bit-packed integers over
this numbering ('0' = red, '1' = blue).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property

import numpy as np

MAX_DIM = 24


class Colour(IntEnum):
    RED = 0
    BLUE = 1


def check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in [1, {MAX_DIM}], got {n}")


def num_edges(n: int) -> int:
    """Number of edges of Q_n, i.e. n * 2^(n-1)."""
    return n << (n - 1)


def parity(v: int) -> int:
    """0 for even vertices (even distance from 0), 1 for odd ones."""
    return v.bit_count() & 1


def antipode(v: int, n: int) -> int:
    """Bitwise complement of v within n bits."""
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for n={n}")
    return v ^ ((1 << n) - 1)


def compress(u: int, d: int) -> int:
    """Remove bit d from u; higher bits shift down one position."""
    low = u & ((1 << d) - 1)
    high = (u >> (d + 1)) << d
    return high | low


def edge_index(n: int, u: int, d: int) -> int:
    """Canonical index of the edge (u, u^(1<<d)); u must have bit d clear."""
    if not 0 <= d < n:
        raise ValueError(f"direction {d} out of range for n={n}")
    if not 0 <= u < (1 << n):
        raise ValueError(f"vertex {u} out of range for n={n}")
    if u >> d & 1:
        raise ValueError(f"vertex {u} has bit {d} set; pass the canonical endpoint")
    return d * (1 << (n - 1)) + compress(u, d)


def edge_index_at(n: int, v: int, d: int) -> int:
    """Index of the edge incident to v in direction d (either endpoint)."""
    return edge_index(n, v & ~(1 << d), d)


@dataclass(frozen=True)
class EdgeColouring:
    """Immutable 2-colouring of all edges of Q_n, bit-packed into one integer."""

    n: int
    bits: int

    def __post_init__(self):
        check_dim(self.n)
        if not 0 <= self.bits < (1 << num_edges(self.n)):
            raise ValueError("colouring bits out of range for dimension")

    @classmethod
    def monochromatic(cls, n: int, colour: Colour = Colour.RED) -> "EdgeColouring":
        bits = 0 if colour == Colour.RED else (1 << num_edges(n)) - 1
        return cls(n, bits)

    @classmethod
    def direction_split(cls, n: int, red_dir: int = 0) -> "EdgeColouring":
        """All edges in one direction red, all others blue."""
        m = num_edges(n)
        bits = (1 << m) - 1
        half = 1 << (n - 1)
        bits &= ~(((1 << half) - 1) << (red_dir * half))
        return cls(n, bits)

    @classmethod
    def random(cls, n: int, seed: int) -> "EdgeColouring":
        """Uniformly random colouring, deterministic per (n, seed)."""
        check_dim(n)
        rng = np.random.default_rng(seed)
        raw = rng.integers(0, 2, size=num_edges(n))
        bits = 0
        for i, b in enumerate(raw):
            bits |= int(b) << i
        return cls(n, bits)

    def colour_at(self, v: int, d: int) -> Colour:
        """Colour of the edge incident to v in direction d."""
        return Colour(self.bits >> edge_index_at(self.n, v, d) & 1)

    def colour(self, u: int, v: int) -> Colour:
        """Colour of the edge {u, v}; order of arguments is irrelevant."""
        diff = u ^ v
        if diff == 0 or diff & (diff - 1):
            raise ValueError(f"vertices {u} and {v} are not adjacent")
        return self.colour_at(u, diff.bit_length() - 1)

    def flip_edge(self, index: int) -> "EdgeColouring":
        """New colouring with one edge bit toggled."""
        if not 0 <= index < num_edges(self.n):
            raise ValueError(f"edge index {index} out of range")
        return EdgeColouring(self.n, self.bits ^ (1 << index))

    @cached_property
    def table(self) -> np.ndarray:
        """Array of shape (2^n, n): table[v, d] = colour of edge at v along d."""
        n = self.n
        half = 1 << (n - 1)
        t = np.empty((1 << n, n), dtype=np.uint8)
        for d in range(n):
            base = d * half
            for u in range(1 << n):
                if u >> d & 1:
                    continue
                b = self.bits >> (base + compress(u, d)) & 1
                t[u, d] = b
                t[u ^ (1 << d), d] = b
        return t

    @cached_property
    def rows(self) -> list:
        """Same data as `table` but as nested lists, for tight Python loops."""
        return self.table.tolist()

    def serialize(self) -> str:
        m = num_edges(self.n)
        body = "".join("1" if self.bits >> i & 1 else "0" for i in range(m))
        return f"n={self.n}\n{body}\n"


def edge_colour(c: EdgeColouring, u: int, v: int) -> Colour:
    return c.colour(u, v)


def parse_colouring(text: str) -> EdgeColouring:
    """Parse the two-line colouring file format (see EdgeColouring.serialize)."""
    lines = text.splitlines()
    if len(lines) < 2:
        raise ValueError("colouring file needs a header line and a bit line")
    header = lines[0]
    if not header.startswith("n=") or not header[2:].isdigit():
        raise ValueError(f"malformed header {header!r}, expected 'n=<decimal>'")
    n = int(header[2:])
    check_dim(n)
    body = lines[1]
    if len(body) != num_edges(n):
        raise ValueError(
            f"expected {num_edges(n)} colour bits for n={n}, got {len(body)}"
        )
    if set(body) - {"0", "1"}:
        raise ValueError("colour bits must be characters '0' or '1'")
    bits = 0
    for i, ch in enumerate(body):
        if ch == "1":
            bits |= 1 << i
    return EdgeColouring(n, bits)


@dataclass(frozen=True)
class Geodesic:
    """A path in Q_n given by its start vertex and pairwise-distinct directions."""

    start: int
    dirs: tuple

    def __post_init__(self):
        if len(set(self.dirs)) != len(self.dirs):
            raise ValueError(f"geodesic directions must be distinct, got {self.dirs}")

    def __len__(self) -> int:
        return len(self.dirs)

    @property
    def end(self) -> int:
        v = self.start
        for d in self.dirs:
            v ^= 1 << d
        return v

    def vertices(self) -> list:
        out = [self.start]
        v = self.start
        for d in self.dirs:
            v ^= 1 << d
            out.append(v)
        return out

    def reverse(self) -> "Geodesic":
        return Geodesic(self.end, tuple(reversed(self.dirs)))


def enumerate_geodesics(v: int, w: int) -> list:
    """All popcount(v^w)! geodesics from v to w, lexicographic by directions."""
    diff = v ^ w
    ds = [d for d in range(diff.bit_length()) if diff >> d & 1]
    return [Geodesic(v, perm) for perm in itertools.permutations(ds)]


def colour_changes(c: EdgeColouring, g: Geodesic) -> int:
    """Number of consecutive edge pairs along g with differing colours."""
    changes = 0
    prev = None
    v = g.start
    rows = c.rows
    for d in g.dirs:
        col = rows[v][d]
        if prev is not None and col != prev:
            changes += 1
        prev = col
        v ^= 1 << d
    return changes


@dataclass(frozen=True)
class SubcubeEmbedding:
    """A Q_3 subcube of Q_n: anchor vertex (subcube bits clear) + 3 directions."""

    anchor: int
    dirs: tuple

    def __post_init__(self):
        if len(self.dirs) != 3 or tuple(sorted(set(self.dirs))) != self.dirs:
            raise ValueError(f"dirs must be 3 distinct sorted directions, got {self.dirs}")
        for d in self.dirs:
            if self.anchor >> d & 1:
                raise ValueError(f"anchor {self.anchor} has subcube bit {d} set")

    @property
    def mask(self) -> int:
        return sum(1 << d for d in self.dirs)

    def to_global(self, local: int) -> int:
        """Map a local Q_3 vertex (3 bits) to its vertex in Q_n."""
        v = self.anchor
        for i, d in enumerate(self.dirs):
            if local >> i & 1:
                v |= 1 << d
        return v

    def to_local(self, v: int) -> int:
        """Map a Q_n vertex of this subcube to its local 3-bit id."""
        local = 0
        for i, d in enumerate(self.dirs):
            if v >> d & 1:
                local |= 1 << i
        return local


def subcube_of_pair(v: int, w: int) -> SubcubeEmbedding:
    """The Q_3 spanned by the geodesics between v and w (distance 3 required)."""
    diff = v ^ w
    if diff.bit_count() != 3:
        raise ValueError(
            f"vertices {v} and {w} are at distance {diff.bit_count()}, need 3"
        )
    dirs = tuple(d for d in range(diff.bit_length()) if diff >> d & 1)
    return SubcubeEmbedding(v & ~diff, dirs)
