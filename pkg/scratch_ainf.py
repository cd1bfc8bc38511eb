import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")

from ribbonhom.ainfinity import (AInfinityAlgebra, characteristic_class,
                                 connected_partition_function, direct_sum,
                                 exp_chain, hamiltonian_from_products,
                                 inverse_form, partition_function, twist,
                                 validate)
from ribbonhom.complexes import GraphChain, coboundary, is_boundary
from ribbonhom.feynman import pair_chain_graph
from ribbonhom.fixtures import (frobenius_pair, nilpotent_11,
                                sphere_cohomology, trivial, twisted_11)
from ribbonhom.graphs import EMPTY_GRAPH, canonicalize, enumerate_graphs
from ribbonhom.lie import CEChain, CyclicWord, DarbouxError, ce_differential
from ribbonhom.superspace import SuperDim, SuperTensor, SymplecticForm

rng = random.Random(23)

# 1. validation: fixtures valid, x^3 on a lone odd letter invalid
for a in (trivial(1, 1), frobenius_pair(), sphere_cohomology(),
          nilpotent_11(), twisted_11()):
    rep = validate(a)
    assert rep.valid, (a, rep)
d01 = SuperDim(0, 1)
lone = AInfinityAlgebra(
    SymplecticForm.canonical(d01),
    {3: SuperTensor(d01, 3, {(0, 0, 0): Fraction(1)})}, 5)
assert validate(lone).valid  # x^4 is cyclically zero on one odd letter
d02 = SuperDim(0, 2)
s1 = SuperTensor(d02, 3, {(0, 0, 1): Fraction(1), (0, 1, 0): Fraction(1),
                          (1, 0, 0): Fraction(1)})
bad = AInfinityAlgebra(SymplecticForm.canonical(d02), {3: s1}, 5)
rep = validate(bad)
assert not rep.valid and rep.failures[0][0] == "structure-equation", rep
print("1. validate: fixtures + lone x^3 pass; sphere tensor with the"
      " wrong form fails:", rep.failures[0][1])
assert sorted(twisted_11().hamiltonians) == [3, 5, 7]

# 2. hamiltonian_from_products: m2=0 -> zero; sphere values; broken m2
assert hamiltonian_from_products({2: {}}, SymplecticForm.canonical(d01)) == {}
h3 = sphere_cohomology().hamiltonian(3)
assert h3.terms == {(0, 0, 1): Fraction(1), (0, 1, 0): Fraction(1),
                    (1, 0, 0): Fraction(1)}, h3.terms
try:
    hamiltonian_from_products(
        {2: {(0, 0): {1: Fraction(1)}}},
        SymplecticForm(SuperDim(0, 2), [[Fraction(1), Fraction(0)],
                                        [Fraction(0), Fraction(1)]]))
    raise SystemExit("expected cyclicity error")
except ValueError as e:
    print("2. products: zero/sphere/cyclicity-error ok:", e)

# 3. inverse_form examples
f = SymplecticForm(d01, [[Fraction(4)]])
assert inverse_form(f) == [[Fraction(1, 4)]]
d10 = SuperDim(1, 0)
can = SymplecticForm.canonical(d10)
inv = inverse_form(can)
assert inv == [list(r) for r in can.matrix], inv
twice = inverse_form(SymplecticForm(d01, inverse_form(f)))
assert twice == [[Fraction(4)]]
print("3. inverse_form: 1/c, canonical fixed, involutive")

# 4. partition function vs pinned fixture values
A = frobenius_pair()
pf = partition_function(A, (4, 6))
dumbbell = canonicalize(((3, 3), ((0, 1), (2, 3), (4, 5))))[0]
theta_tw = canonicalize(((3, 3), ((0, 3), (1, 4), (2, 5))))[0]
theta_pl = canonicalize(((3, 3), ((0, 3), (1, 5), (2, 4))))[0]
assert pf.value(dumbbell) == 1, pf.value(dumbbell)
assert pf.value(theta_tw) == Fraction(-1, 3), pf.value(theta_tw)
assert pf.value(theta_pl) == Fraction(1, 3), pf.value(theta_pl)
assert pf.chain.terms[dumbbell] == 1
loop_pair = canonicalize(((4,), ((0, 1), (2, 3))))[0]
assert pf.value(loop_pair) == 0  # odd vertex count
print("4. partition function reproduces the pinned fixture values")

# 5. Z(delta G) = 0 for all graphs in window (cycle property)
for v in range(1, 4):
    for e in range(1, 5):
        for g in enumerate_graphs(v, e):
            dg = coboundary(GraphChain.of(g))
            tot = sum((c * pf.value(h) for h, c in dg.terms.items()),
                      Fraction(0))
            assert tot == 0, (g, tot)
print("5. Z(delta G) = 0 across the window")

# 6. exponential identity and wreath factor
zc = connected_partition_function(A, (4, 6))
assert all(g.connected for g in zc.terms)
assert exp_chain(zc, (4, 6)) == pf.chain
c = Fraction(5)
single = GraphChain.of(theta_tw, c)
sq = exp_chain(single, (4, 6))
dd = canonicalize(
    ((3, 3, 3, 3), ((0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11))))[0]
assert sq.terms[dd] == c * c / 2, sq.terms[dd]
print("6. exp identity exact on the window; wreath factor c^2/2")

# 7. direct sums
T = trivial(0, 0)
S = direct_sum(A, T)
assert S.dim == A.dim and S.hamiltonians == A.hamiltonians
AA = direct_sum(A, A)
assert validate(AA).valid
pf2 = partition_function(AA, (2, 4))
# the one-vertex-per-component values add; theta value doubles
assert pf2.value(theta_tw) == 2 * pf.value(theta_tw)
print("7. direct sum: unit, validity, additivity on connected graphs")

# 8. twist: gamma = 0 identity; validity; Z difference is a boundary
g0 = CyclicWord(A.dim)
tw0 = twist(A, g0)
assert tw0.hamiltonians == A.hamiltonians
for seed in range(6):
    r = random.Random(seed)
    terms = {}
    for _ in range(2):
        w = tuple(r.randrange(2) for _ in range(4))
        terms[w] = terms.get(w, 0) + Fraction(r.randint(-2, 2))
    gamma = CyclicWord(A.dim, terms)
    if not gamma:
        continue
    B = twist(A, gamma)
    assert validate(B).valid, (seed, validate(B))
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
print("8. twists: identity, validity, Z-difference is a boundary")

# 9. characteristic class: unit for h=0, equivalence with Z, d(c)=0
cc0 = characteristic_class(trivial(0, 1), 3)
assert cc0.chain == CEChain.one(SuperDim(0, 1))
cc = characteristic_class(A, 4)
for v in range(1, 5):
    for e in range(1, 5):
        for g in enumerate_graphs(v, e):
            lhs = pair_chain_graph(cc.chain, g)
            rhs = pf.value(g)
            assert lhs == rhs, (g, lhs, rhs)
dcc = ce_differential(cc.chain)
assert not dcc, dcc
try:
    characteristic_class(sphere_cohomology(), 2)
    raise SystemExit("expected DarbouxError")
except DarbouxError as e:
    print("9. characteristic class: unit, equals Z on <=4 edges, closed;"
          " hyperbolic form rejected:", e)

# 10. scaled form: Z and class agree through a genuine surd Darboux
dimx = SuperDim(0, 1)
form4 = SymplecticForm(dimx, [[Fraction(4)]])
Ax = AInfinityAlgebra(form4,
                      {3: SuperTensor(dimx, 3, {(0, 0, 0): Fraction(1)})}, 7)
assert validate(Ax).valid
pfx = partition_function(Ax, (4, 6))
ccx = characteristic_class(Ax, 4)
for v in range(1, 5):
    for e in range(1, 6):
        for g in enumerate_graphs(v, e):
            assert pair_chain_graph(ccx.chain, g) == pfx.value(g), g
print("10. surd-normalized algebra: class and Z agree exactly")
print("ALL AINFINITY CHECKS PASS")
