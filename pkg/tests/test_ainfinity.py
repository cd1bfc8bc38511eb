"""Algebra validation, partition functions, twists, characteristic classes."""

import random
from fractions import Fraction

import pytest

from ribbonhom.ainfinity import (AInfinityAlgebra, characteristic_class,
                                 connected_partition_function, direct_sum,
                                 exp_chain, hamiltonian_from_products,
                                 inverse_form, partition_function, twist,
                                 validate)
from ribbonhom.complexes import GraphChain, coboundary, is_boundary
from ribbonhom.feynman import pair_chain_graph
from ribbonhom.fixtures import (frobenius_pair, nilpotent_11,
                                sphere_cohomology, trivial, twisted_11)
from ribbonhom.graphs import canonicalize, enumerate_graphs
from ribbonhom.lie import CEChain, CyclicWord, DarbouxError, ce_differential
from ribbonhom.superspace import SuperDim, SuperTensor, SymplecticForm

DUMBBELL = canonicalize(((3, 3), ((0, 1), (2, 3), (4, 5))))[0]
THETA_TWISTED = canonicalize(((3, 3), ((0, 3), (1, 4), (2, 5))))[0]
THETA_PLANAR = canonicalize(((3, 3), ((0, 3), (1, 5), (2, 4))))[0]
LOOP_PAIR = canonicalize(((4,), ((0, 1), (2, 3))))[0]


def test_fixtures_validate():
    for a in (trivial(1, 1), frobenius_pair(), sphere_cohomology(),
              nilpotent_11(), twisted_11()):
        rep = validate(a)
        assert rep.valid, rep.failures
    assert sorted(twisted_11().hamiltonians) == [3, 5, 7]


def test_validate_catches_structure_failure():
    d01 = SuperDim(0, 1)
    lone = AInfinityAlgebra(
        SymplecticForm.canonical(d01),
        {3: SuperTensor(d01, 3, {(0, 0, 0): Fraction(1)})}, 5)
    assert validate(lone).valid  # x^4 is cyclically zero on one odd letter
    d02 = SuperDim(0, 2)
    s1 = SuperTensor(d02, 3, {(0, 0, 1): Fraction(1), (0, 1, 0): Fraction(1),
                              (1, 0, 0): Fraction(1)})
    rep = validate(AInfinityAlgebra(SymplecticForm.canonical(d02), {3: s1}, 5))
    assert not rep.valid
    assert rep.failures[0][0] == "structure-equation"


def test_hamiltonian_from_products():
    d01 = SuperDim(0, 1)
    assert hamiltonian_from_products({2: {}},
                                     SymplecticForm.canonical(d01)) == {}
    h3 = sphere_cohomology().hamiltonian(3)
    assert h3.terms == {(0, 0, 1): Fraction(1), (0, 1, 0): Fraction(1),
                        (1, 0, 0): Fraction(1)}
    with pytest.raises(ValueError):
        hamiltonian_from_products(
            {2: {(0, 0): {1: Fraction(1)}}},
            SymplecticForm(SuperDim(0, 2), [[Fraction(1), Fraction(0)],
                                            [Fraction(0), Fraction(1)]]))


def test_inverse_form():
    d01 = SuperDim(0, 1)
    f = SymplecticForm(d01, [[Fraction(4)]])
    assert inverse_form(f) == [[Fraction(1, 4)]]
    can = SymplecticForm.canonical(SuperDim(1, 0))
    assert inverse_form(can) == [list(r) for r in can.matrix]
    assert inverse_form(SymplecticForm(d01, inverse_form(f))) == [[Fraction(4)]]


def test_partition_function_pinned_values():
    pf = partition_function(frobenius_pair(), (4, 6))
    assert pf.value(DUMBBELL) == 1
    assert pf.value(THETA_TWISTED) == Fraction(-1, 3)
    assert pf.value(THETA_PLANAR) == Fraction(1, 3)
    assert pf.chain.terms[DUMBBELL] == 1
    assert pf.value(LOOP_PAIR) == 0  # odd vertex count


def test_partition_function_is_a_cycle():
    pf = partition_function(frobenius_pair(), (3, 4))
    for v in range(1, 3):
        for e in range(1, 4):
            for g in enumerate_graphs(v, e):
                dg = coboundary(GraphChain.of(g))
                tot = sum((c * pf.value(h) for h, c in dg.terms.items()),
                          Fraction(0))
                assert tot == 0, (g, tot)


def test_exponential_identity_and_wreath_factor():
    A = frobenius_pair()
    pf = partition_function(A, (4, 6))
    zc = connected_partition_function(A, (4, 6))
    assert all(g.connected for g in zc.terms)
    assert exp_chain(zc, (4, 6)) == pf.chain
    c = Fraction(5)
    sq = exp_chain(GraphChain.of(THETA_TWISTED, c), (4, 6))
    double = canonicalize(((3, 3, 3, 3),
                           ((0, 3), (1, 4), (2, 5),
                            (6, 9), (7, 10), (8, 11))))[0]
    assert sq.terms[double] == c * c / 2


def test_direct_sum():
    A = frobenius_pair()
    S = direct_sum(A, trivial(0, 0))
    assert S.dim == A.dim and S.hamiltonians == A.hamiltonians
    AA = direct_sum(A, A)
    assert validate(AA).valid
    pf = partition_function(A, (2, 4))
    pf2 = partition_function(AA, (2, 4))
    assert pf2.value(THETA_TWISTED) == 2 * pf.value(THETA_TWISTED)


def test_twist_difference_is_a_boundary():
    A = frobenius_pair()
    assert twist(A, CyclicWord(A.dim)).hamiltonians == A.hamiltonians
    pf = partition_function(A, (2, 4))
    tried = 0
    for seed in range(4):
        r = random.Random(seed)
        terms = {}
        for _ in range(2):
            w = tuple(r.randrange(2) for _ in range(4))
            terms[w] = terms.get(w, 0) + Fraction(r.randint(-2, 2))
        gamma = CyclicWord(A.dim, terms)
        if not gamma:
            continue
        B = twist(A, gamma)
        assert validate(B).valid, (seed, validate(B).failures)
        pfB = partition_function(B, (2, 4))
        for v in range(1, 3):
            for e in range(1, 5):
                diff = GraphChain(
                    {g: pfB.value(g) - pf.value(g)
                     for g in enumerate_graphs(v, e) if g.connected})
                if not diff:
                    continue
                witness = is_boundary(diff)
                assert witness is not None, (seed, v, e, diff.terms)
                tried += 1
    assert tried


def test_characteristic_class_matches_partition_function():
    cc0 = characteristic_class(trivial(0, 1), 3)
    assert cc0.chain == CEChain.one(SuperDim(0, 1))
    A = frobenius_pair()
    cc = characteristic_class(A, 4)
    pf = partition_function(A, (4, 4))
    for v in range(1, 4):
        for e in range(1, 4):
            for g in enumerate_graphs(v, e):
                assert pair_chain_graph(cc.chain, g) == pf.value(g)
    assert not ce_differential(cc.chain)
    with pytest.raises(DarbouxError):
        characteristic_class(sphere_cohomology(), 2)


def test_scaled_form_class_agrees_through_surd_darboux():
    dimx = SuperDim(0, 1)
    Ax = AInfinityAlgebra(SymplecticForm(dimx, [[Fraction(4)]]),
                          {3: SuperTensor(dimx, 3, {(0, 0, 0): Fraction(1)})},
                          7)
    assert validate(Ax).valid
    pfx = partition_function(Ax, (4, 5))
    ccx = characteristic_class(Ax, 4)
    for v in range(1, 4):
        for e in range(1, 5):
            for g in enumerate_graphs(v, e):
                assert pair_chain_graph(ccx.chain, g) == pfx.value(g)
