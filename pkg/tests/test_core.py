import pytest
from hypothesis import given, strategies as st

from cubegeo import core
from cubegeo.core import (
    Colour,
    EdgeColouring,
    Geodesic,
    colour_changes,
    edge_index,
    enumerate_geodesics,
    num_edges,
    parse_colouring,
    subcube_of_pair,
)


def test_edge_index_examples():
    assert edge_index(3, 0, 0) == 0
    assert edge_index(3, 6, 0) == 3      # compress(110, 0) = 11b
    assert edge_index(3, 2, 2) == 10     # 2*4 + compress(010, 2)


def test_edge_index_rejects_bad_args():
    with pytest.raises(ValueError):
        edge_index(3, 1, 0)  # bit 0 set: not the canonical endpoint
    with pytest.raises(ValueError):
        edge_index(3, 0, 3)  # direction out of range


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 10])
def test_edge_index_bijection(n):
    seen = set()
    for d in range(n):
        for u in range(1 << n):
            if u >> d & 1:
                continue
            seen.add(edge_index(n, u, d))
    assert seen == set(range(num_edges(n)))


def test_edge_colour_symmetry_and_examples():
    allred = EdgeColouring.monochromatic(3)
    assert allred.colour(0, 1) == Colour.RED
    split = EdgeColouring.direction_split(3, red_dir=0)
    assert split.colour(0, 2) == Colour.BLUE
    assert split.colour(0, 1) == Colour.RED
    rnd = EdgeColouring.random(4, 11)
    for u in range(16):
        for d in range(4):
            assert rnd.colour(u, u ^ (1 << d)) == rnd.colour(u ^ (1 << d), u)


def test_edge_colour_rejects_non_adjacent():
    c = EdgeColouring.monochromatic(3)
    with pytest.raises(ValueError):
        c.colour(0, 3)
    with pytest.raises(ValueError):
        c.colour(5, 5)


def test_vertex_ops():
    assert core.antipode(0, 3) == 7 and core.parity(0) == 0
    assert core.antipode(5, 3) == 2 and core.parity(5) == 0
    assert core.antipode(1, 4) == 14 and core.parity(1) == 1


def test_enumerate_geodesics():
    assert enumerate_geodesics(0, 0) == [Geodesic(0, ())]
    gs = enumerate_geodesics(0, 7)
    assert len(gs) == 6
    assert gs[0].dirs == (0, 1, 2)
    assert enumerate_geodesics(0, 3) == [Geodesic(0, (0, 1)), Geodesic(0, (1, 0))]
    assert all(g.end == 7 for g in gs)
    assert len(set(gs)) == 6


@given(v=st.integers(0, 31), w=st.integers(0, 31))
def test_enumerate_geodesics_count_and_ends(v, w):
    import math

    gs = enumerate_geodesics(v, w)
    k = (v ^ w).bit_count()
    assert len(gs) == math.factorial(k)
    assert all(g.start == v and g.end == w for g in gs)
    assert len(set(gs)) == len(gs)


def test_colour_changes_examples():
    mono = EdgeColouring.monochromatic(3, Colour.BLUE)
    for g in enumerate_geodesics(0, 7):
        assert colour_changes(mono, g) == 0
    split = EdgeColouring.direction_split(3)
    assert colour_changes(split, Geodesic(0, (1, 2, 0))) == 1  # blue, blue, red
    assert colour_changes(split, Geodesic(0, (1, 0, 2))) == 2  # blue, red, blue
    assert colour_changes(split, Geodesic(0, (0,))) == 0


@given(st.integers(0, 2**12 - 1), st.integers(0, 7))
def test_colour_changes_reversal_invariant(bits, v):
    c = EdgeColouring(3, bits)
    for g in enumerate_geodesics(v, 7 ^ v):
        assert colour_changes(c, g) == colour_changes(c, g.reverse())


@given(st.integers(0, 63), st.permutations(range(4)))
def test_parity_flips_along_geodesic(v, perm):
    v &= 15
    g = Geodesic(v, tuple(perm))
    verts = g.vertices()
    for i, u in enumerate(verts):
        assert core.parity(u) == core.parity(v) ^ (i & 1)


def test_subcube_of_pair():
    emb = subcube_of_pair(0, 7)
    assert emb.anchor == 0 and emb.dirs == (0, 1, 2)
    assert subcube_of_pair(7, 0) == emb
    assert subcube_of_pair(0b01001, 0b11100).dirs == (0, 2, 4)
    with pytest.raises(ValueError):
        subcube_of_pair(0b01001, 0b11110)  # distance 4


def test_subcube_local_global_roundtrip():
    emb = subcube_of_pair(0b01001, 0b01001 ^ 0b10110)  # dirs {1, 2, 4} in Q5
    for local in range(8):
        assert emb.to_local(emb.to_global(local)) == local


def test_codec_roundtrip_and_format():
    allred = EdgeColouring.monochromatic(3)
    assert allred.serialize() == "n=3\n" + "0" * 12 + "\n"
    for seed in range(100):
        c = EdgeColouring.random(5, seed)
        assert parse_colouring(c.serialize()) == c
    assert EdgeColouring.random(3, 42) == EdgeColouring.random(3, 42)


def test_codec_rejects_malformed():
    with pytest.raises(ValueError):
        parse_colouring("m=3\n" + "0" * 12)
    with pytest.raises(ValueError):
        parse_colouring("n=3\n" + "0" * 11)
    with pytest.raises(ValueError):
        parse_colouring("n=3\n" + "0" * 11 + "2")
    with pytest.raises(ValueError):
        parse_colouring("n=25\n" + "0" * (25 << 24))
    with pytest.raises(ValueError):
        parse_colouring("n=3")


def test_colour_table_matches_colour():
    c = EdgeColouring.random(4, 5)
    for v in range(16):
        for d in range(4):
            assert c.table[v, d] == c.colour_at(v, d)
