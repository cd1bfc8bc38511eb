"""Canonical forms, signs and enumeration of oriented ribbon graphs."""

import json
import random
from pathlib import Path

import pytest

from ribbonhom.graphs import (EMPTY_GRAPH, FullyOrderedGraph, RibbonGraph,
                              canonicalize, connected_components,
                              contract_edge, disjoint_union, enumerate_graphs,
                              expand_ideal_edge, ideal_edges, perfect_matchings,
                              valency_types)

PINNED = json.loads(
    (Path(__file__).parent / "data" / "pinned.json").read_text())

THETA_TWISTED = ((3, 3), ((0, 3), (1, 4), (2, 5)))
THETA_PLANAR = ((3, 3), ((0, 3), (1, 5), (2, 4)))
DUMBBELL = ((3, 3), ((0, 1), (2, 3), (4, 5)))
LOOP_PAIR = ((4,), ((0, 1), (2, 3)))
CROSS_LOOP = ((4,), ((0, 2), (1, 3)))


def test_pinned_canonical_classes_and_automorphisms():
    for name, info in PINNED["graphs"].items():
        vtype = tuple(info["type"])
        chords = tuple(tuple(c) for c in info["chords"])
        g, sign = canonicalize((vtype, chords))
        assert sign == 1
        assert g.chords == chords, name
        assert g.zero == info["zero"], name
        if not info["zero"]:
            assert g.aut == info["aut"], name


def test_enumeration_counts_match_pins():
    all_12 = enumerate_graphs(1, 2)
    assert len(all_12) == PINNED["classes_v1_e2"]["total"]
    assert sum(1 for g in all_12 if not g.zero) == \
        PINNED["classes_v1_e2"]["nonzero"]
    conn_23 = [g for g in enumerate_graphs(2, 3) if g.connected]
    assert len(conn_23) == PINNED["classes_v2_e3_connected"]["total"]


def test_edge_direction_flip_negates():
    base, s0 = canonicalize(THETA_TWISTED)
    flipped, s1 = canonicalize(((3, 3), ((3, 0), (1, 4), (2, 5))))
    assert flipped is base and s0 == 1 and s1 == -1


def test_vertex_swap_tracks_permutation_sign():
    # theta with its two vertices written in the other order: one odd
    # vertex shuffle, edge directions carried along, so the sign flips
    a, sa = canonicalize(THETA_TWISTED)
    b, sb = canonicalize(((3, 3), ((3, 0), (4, 1), (5, 2))))
    assert a is b and not a.zero
    assert sa == 1 and sb == -1


def test_relabeling_lands_in_same_class():
    rng = random.Random(5)
    for _ in range(60):
        e = rng.randint(2, 4)
        cells = list(enumerate_graphs(rng.randint(1, 2), e))
        if not cells:
            continue
        g = cells[rng.randrange(len(cells))]
        # rotate each block by a random amount: same cyclic orders
        blocks = []
        for blk in g.vertex_blocks():
            r = rng.randrange(len(blk))
            blocks.append(tuple(blk[r:] + blk[:r]))
        fog = FullyOrderedGraph(tuple(blocks), g.chords)
        h, _ = canonicalize(fog)
        assert h is g, (g, h)


def test_zero_class_from_odd_symmetry():
    g, sign = canonicalize(CROSS_LOOP)
    assert g.zero and sign == 1
    assert all(h.aut >= 1 for h in enumerate_graphs(1, 2))


def test_contract_and_expand_are_inverse_up_to_class():
    theta, _ = canonicalize(THETA_PLANAR)
    contracted, csign = contract_edge(theta, 0)
    assert contracted.nverts == 1 and contracted.nedges == 2
    # expanding every ideal edge of the result must hit theta again
    hits = 0
    for ie in ideal_edges(contracted):
        back, _ = expand_ideal_edge(contracted, ie)
        if back is theta:
            hits += 1
    assert hits > 0


def test_contract_loop_rejected():
    g, _ = canonicalize(DUMBBELL)
    loops = [i for i in range(3) if g.is_loop(i)]
    assert loops
    with pytest.raises(ValueError):
        contract_edge(g, loops[0])


def test_ideal_edge_counts_match_pins():
    for valency, count in PINNED["ideal_edge_count"].items():
        g, _ = canonicalize(((int(valency),),
                             tuple((2 * i, 2 * i + 1)
                                   for i in range(int(valency) // 2))))
        assert len(ideal_edges(g)) == count


def test_contract_opposite_order_gives_opposite_orientation():
    # contracting the two non-loop edges of a 2-vertex graph in the two
    # orders produces the same class with opposite signs overall when the
    # intermediate steps differ by an odd shuffle; verified via d2 = 0 in
    # the complexes tests, here just sign bookkeeping sanity on one edge
    theta, _ = canonicalize(THETA_TWISTED)
    g1, s1 = contract_edge(theta, 0)
    g2, s2 = contract_edge(theta, 1)
    assert {g1.nverts, g2.nverts} == {1}
    assert s1 in (-1, 1) and s2 in (-1, 1)


def test_disjoint_union_and_components():
    theta, _ = canonicalize(THETA_TWISTED)
    loop, _ = canonicalize(LOOP_PAIR)
    u, sign = disjoint_union(theta, loop)
    assert u.nverts == 3 and u.nedges == 5
    assert not u.connected
    comps, csign = connected_components(u)
    assert sorted(c.nedges for c in comps) == [2, 3]
    assert csign in (-1, 1)
    assert EMPTY_GRAPH.nverts == 0 and not EMPTY_GRAPH.zero


def test_valency_types_and_matchings():
    assert list(valency_types(2, 3)) == [(3, 3)]
    assert list(valency_types(1, 2)) == [(4,)]
    assert len(list(perfect_matchings(range(6)))) == 15


def test_enumerate_rejects_large_windows():
    with pytest.raises(NotImplementedError):
        enumerate_graphs(6, 9)
