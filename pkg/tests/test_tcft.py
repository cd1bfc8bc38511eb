"""Legged graphs, gluing, correlation tensors, and composition."""

import random
from fractions import Fraction

import pytest

from ribbonhom.ainfinity import partition_function
from ribbonhom.fixtures import frobenius_pair, twisted_11
from ribbonhom.superspace import koszul_apply
from ribbonhom.tcft import (EMPTY_LEGGED, MorphismChain, canonicalize_legged,
                            compose, compose_tensors,
                            composition_compatibility, correlation,
                            enumerate_legged_graphs, glue)

A = frobenius_pair()


def random_diagram(rng, nin, nout, nedges):
    size = 2 * nedges + nin + nout
    parts = []
    left = size
    while left > 5:
        k = rng.choice([3, 3, 3, 4, 5])
        if left - k < 3 and left != k:
            continue
        parts.append(k)
        left -= k
    if left >= 3:
        parts.append(left)
    vtype = tuple(sorted(parts))
    slots = list(range(sum(vtype)))
    rng.shuffle(slots)
    li = tuple(slots[:nin])
    lo = tuple(slots[nin:nin + nout])
    rest = slots[nin + nout:]
    ch = tuple((rest[2 * i], rest[2 * i + 1]) for i in range(len(rest) // 2))
    return (vtype, li, lo, ch)


def test_canonical_forms_rotation_and_flip():
    g, s = canonicalize_legged(((3,), (), (0, 1, 2), ()))
    assert s == 1 and g.vtype == (3,)
    g2, s2 = canonicalize_legged(((3,), (), (1, 2, 0), ()))
    assert (g2, s2) == (g, 1)
    ga, sa = canonicalize_legged(((3, 3), (0,), (1,), ((2, 3), (4, 5))))
    gb, sb = canonicalize_legged(((3, 3), (0,), (1,), ((3, 2), (4, 5))))
    assert ga is gb and sb == -sa


def test_random_flips_negate():
    rng = random.Random(31)
    for _ in range(80):
        d = random_diagram(rng, rng.randrange(3), rng.randrange(3),
                           rng.randrange(4))
        vt, li, lo, ch = d
        if not ch:
            continue
        g, s = canonicalize_legged(d)
        i = rng.randrange(len(ch))
        flipped = ch[:i] + ((ch[i][1], ch[i][0]),) + ch[i + 1:]
        g2, s2 = canonicalize_legged((vt, li, lo, flipped))
        assert g2 is g and (g.zero or s2 == -s)


def test_correlation_respects_orientation_classes():
    rng = random.Random(37)
    zeros = 0
    for algebra in (A, twisted_11()):
        for _ in range(80):
            d = random_diagram(rng, rng.randrange(3), rng.randrange(3),
                               rng.randrange(3))
            g, s = canonicalize_legged(d)
            raw = correlation(algebra, d)
            if g.zero:
                assert not raw.terms
                zeros += 1
            else:
                assert raw == correlation(algebra, g.diagram()).scale(s)
    assert zeros


def test_one_vertex_correlators_give_hamiltonian():
    h3 = A.hamiltonian(3)
    assert correlation(A, ((3,), (), (0, 1, 2), ())) == h3
    assert correlation(A, ((3,), (0, 1, 2), (), ())) == h3
    assert correlation(A, ((3,), (0,), (1, 2), ())) == h3
    assert not correlation(A, ((4,), (0, 1), (2, 3), ())).terms


def test_leg_relabeling_acts_by_koszul_permutation():
    rng = random.Random(41)
    for _ in range(60):
        d = random_diagram(rng, 3, 1, rng.randrange(3))
        vt, li, lo, ch = d
        tau = list(range(3))
        rng.shuffle(tau)
        li2 = tuple(li[tau[i]] for i in range(3))
        base = correlation(A, d)
        moved = correlation(A, (vt, li2, lo, ch))
        perm = [0] * base.rank
        for i in range(3):
            perm[tau[i]] = i
        for j in range(3, base.rank):
            perm[j] = j
        assert moved == koszul_apply(tuple(perm), base)


def test_legless_correlator_is_aut_times_partition_value():
    pf = partition_function(A, (4, 4))
    for g0, z in pf.chain.terms.items():
        if g0.nverts == 0:
            continue
        val = correlation(A, (g0.vtype, (), (), g0.chords))
        assert val.terms.get((), 0) == z * g0.aut


def test_glue_bookkeeping():
    gout = canonicalize_legged(((3,), (), (0, 1, 2), ()))[0]
    g_in3 = canonicalize_legged(((3,), (0, 1, 2), (), ()))[0]
    with pytest.raises(ValueError):
        glue(gout, gout)
    gg, _ = glue(gout, g_in3)
    assert gg.nedges == 3 and gg.nin == 0 and gg.nout == 0
    assert glue(EMPTY_LEGGED, EMPTY_LEGGED) == (EMPTY_LEGGED, 1)


def test_compose_chains():
    gout = canonicalize_legged(((3,), (), (0, 1, 2), ()))[0]
    g_in3 = canonicalize_legged(((3,), (0, 1, 2), (), ()))[0]
    zero_chain = MorphismChain(0, 3)
    assert not compose(zero_chain, MorphismChain.of(g_in3)).terms
    x = MorphismChain.of(gout) + MorphismChain.of(gout, Fraction(2))
    y = MorphismChain.of(g_in3, Fraction(1, 3))
    assert compose(x, y) == compose(MorphismChain.of(gout), y).scale(3)


def test_compose_associative_on_single_vertex_classes():
    singles = {}
    for (m, n) in [(0, 3), (3, 0), (1, 2), (2, 1)]:
        singles[(m, n)] = [MorphismChain.of(g)
                           for g in enumerate_legged_graphs(m, n, 0)
                           if not g.zero and g.nverts == 1]
        assert singles[(m, n)]
    checked = 0
    for (m, n) in singles:
        for (n2, k) in singles:
            if n2 != n:
                continue
            for (k2, l) in singles:
                if k2 != k:
                    continue
                for x in singles[(m, n)][:2]:
                    for y in singles[(n, k)][:2]:
                        for z in singles[(k, l)][:2]:
                            assert compose(compose(x, y), z) == \
                                compose(x, compose(y, z))
                            checked += 1
    assert checked


def test_compose_tensors_slot_bound():
    h3 = A.hamiltonian(3)
    with pytest.raises(ValueError):
        compose_tensors(h3, h3, 4, A.dual_pairing())


def test_composition_compatibility_sampled():
    rng = random.Random(43)
    pairs = 0
    for (m, n, k) in [(0, 2, 1), (1, 1, 1), (0, 3, 0), (2, 1, 2)]:
        for e1 in range(2):
            for e2 in range(2):
                side1 = [g for g in enumerate_legged_graphs(m, n, e1)
                         if all(bool(A.hamiltonian(v)) for v in g.vtype)]
                side2 = [g for g in enumerate_legged_graphs(n, k, e2)
                         if all(bool(A.hamiltonian(v)) for v in g.vtype)]
                rng.shuffle(side1)
                rng.shuffle(side2)
                for g1 in side1[:4]:
                    for g2 in side2[:4]:
                        rep = composition_compatibility(A, g1, g2)
                        assert rep.valid, (g1, g2, rep)
                        pairs += 1
    assert pairs


def test_enumeration_sanity():
    assert enumerate_legged_graphs(0, 0, 0) == (EMPTY_LEGGED,)
    e03 = enumerate_legged_graphs(0, 3, 0)
    assert e03 and all(g.nin == 0 and g.nout == 3 for g in e03)
    first = len(enumerate_legged_graphs(1, 1, 2))
    again = len(enumerate_legged_graphs(1, 1, 2))
    assert first == again and first > 0
