import itertools
import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")

from ribbonhom.complexes import GraphChain, basis, coboundary, pairing
from ribbonhom.feynman import (amplitude, amplitude_ordered, beta,
                               integral_I, integral_I_inverse, kappa,
                               pair_chain_graph, sigma_chords)
from ribbonhom.graphs import (FullyOrderedGraph, canonicalize, disjoint_union,
                              enumerate_graphs)
from ribbonhom.lie import CEChain, CyclicWord, ce_differential
from ribbonhom.superspace import (SuperDim, SuperTensor, invert_perm,
                                  koszul_apply)

rng = random.Random(11)

d11 = SuperDim(1, 1)
P1, Q1, X1 = 0, 1, 2

# 1. kappa pinned examples
assert kappa(SuperTensor.word(d11, (P1, Q1))) == 1
assert kappa(SuperTensor.word(d11, (P1, P1))) == 0
assert kappa(SuperTensor.word(d11, (P1, Q1, X1, X1))) == 1
print("1. kappa examples")

# 2. beta: identity diagram = kappa; crossing diagram; equivariance
for _ in range(50):
    t = SuperTensor(d11, 4, {tuple(rng.randrange(3) for _ in range(4)):
                             Fraction(rng.randint(-3, 3)) for _ in range(3)})
    assert beta(((0, 1), (2, 3)), t) == kappa(t)
d10 = SuperDim(1, 0)
assert beta(((0, 2), (1, 3)), SuperTensor.word(d10, (0, 0, 1, 1))) == 1

for _ in range(40):
    t = SuperTensor(d11, 4, {tuple(rng.randrange(3) for _ in range(4)):
                             Fraction(rng.randint(-3, 3)) for _ in range(3)})
    c = ((0, 2), (1, 3))
    tau = tuple(rng.sample(range(4), 4))
    tc = tuple((tau[a], tau[b]) for a, b in c)
    lhs = beta(tc, t)
    rhs = beta(c, koszul_apply(invert_perm(tau), t))
    assert lhs == rhs, (tau, lhs, rhs)
print("2. beta identity/crossing/equivariance")

# 3. amplitude_ordered: theta example, mismatch, edge flip
fog = FullyOrderedGraph(((0, 1, 2), (3, 4, 5)), ((0, 3), (1, 4), (2, 5)))
b1 = SuperTensor.word(d10, (0, 0, 0))
b2 = SuperTensor.word(d10, (1, 1, 1))
assert amplitude_ordered(fog, (b1, b2)) == 1
assert amplitude_ordered(fog, (b1, SuperTensor.word(d10, (1, 1)))) == 0
for _ in range(30):
    blocks = [SuperTensor(d11, 3, {tuple(rng.randrange(3) for _ in range(3)):
                                   Fraction(rng.randint(-2, 2))})
              for _ in range(2)]
    base = amplitude_ordered(fog, blocks)
    flipped = FullyOrderedGraph(fog.vertices, ((3, 0), (1, 4), (2, 5)))
    assert amplitude_ordered(flipped, blocks) == -base
print("3. amplitude_ordered theta=1, mismatch=0, edge flip negates")

# 4. amplitude on ribbon graphs: orientation reversal, degree mismatch
theta = canonicalize(((3, 3), ((0, 3), (1, 4), (2, 5))))[0]


def rand_wedge(dim, ranks):
    parts = []
    for k in ranks:
        w = CyclicWord(dim, {tuple(rng.randrange(dim.total) for _ in range(k)):
                             Fraction(rng.randint(-2, 2))})
        if not w:
            return None
        parts.append(w)
    return CEChain.wedge(parts)


for _ in range(40):
    x = rand_wedge(d11, (3, 3))
    if x is None or not x:
        continue
    base = amplitude(theta, x)
    rev = amplitude(((3, 3), ((3, 0), (1, 4), (2, 5))), x)
    assert rev == -base, (x, base, rev)
    assert amplitude(theta, CEChain.wedge([CyclicWord.word(d11, (P1, Q1, X1))])) == 0
print("4. amplitude orientation reversal negates; degree mismatch is 0")

# 5. roundtrip I(I_inv(G)) = G for connected graphs up to 4 edges
count = 0
for e in range(1, 5):
    for v in range(1, e + 1):
        for g in enumerate_graphs(v, e):
            if not g.connected or g.zero:
                continue
            back = integral_I(integral_I_inverse(g))
            assert back == GraphChain.of(g), (g, back.terms)
            count += 1
print(f"5. I(I_inverse(G)) = G for all {count} connected classes <= 4 edges")

# 6. triangle: <<x, G>> = <I(x), G> (sampled here, full range in tests)
def check_triangle(dim, ranks, edges):
    x = rand_wedge(dim, ranks)
    if x is None:
        return
    ix = integral_I(x)
    for v in range(1, edges + 1):
        for g in enumerate_graphs(v, edges):
            if g.zero:
                continue
            lhs = pair_chain_graph(x, g)
            rhs = pairing(ix, GraphChain.of(g))
            assert lhs == rhs, (dim, ranks, g, lhs, rhs)

for _ in range(12):
    check_triangle(SuperDim(1, 1), (3, 3), 3)
    check_triangle(SuperDim(2, 0), (4,), 2)
    check_triangle(SuperDim(1, 2), (3, 5), 4)
print("6. triangle <<x,G>> = <I(x),G> on sampled chains")

# 7. adjointness: <<dx, G>> = <<x, deltaG>> (sampled)
def check_adjoint(dim, ranks, target_edges):
    x = rand_wedge(dim, ranks)
    if x is None:
        return
    dx = ce_differential(x)
    for v in range(1, target_edges + 1):
        for g in enumerate_graphs(v, target_edges):
            if g.zero:
                continue
            lhs = pair_chain_graph(dx, g)
            rhs = pair_chain_graph(x, coboundary(GraphChain.of(g)))
            assert lhs == rhs, (dim, ranks, g, lhs, rhs)

for _ in range(10):
    check_adjoint(SuperDim(1, 1), (3, 3), 2)
    check_adjoint(SuperDim(2, 0), (3, 3, 4), 4)
    check_adjoint(SuperDim(1, 2), (4, 4), 3)
print("7. adjointness <<dx,G>> = <<x,deltaG>> on sampled chains")

# 8. multiplicativity of I under left/right embedding
lp = canonicalize(((4,), ((0, 1), (2, 3))))[0]
th = theta
xl = integral_I_inverse(lp)      # over C^{4|0}
yr = integral_I_inverse(th)      # over C^{6|0}
k1, k2 = 2, 3
big = SuperDim(k1 + k2, 0)

def embed(ch, offset_p, k_from, shift):
    out = {}
    for fs, c in ch.terms.items():
        nfs = tuple(tuple(a + offset_p if a < k_from else a + shift for a in w)
                    for w in fs)
        out[nfs] = c
    return CEChain(big, out)

xl_b = embed(xl, 0, k1, k1 + k2 - k1)          # p_r -> p_r, q_r -> q_{r}
yr_b = embed(yr, k1, k2, k1 + k1 + k2 - k2)    # p_r -> p_{k1+r}, q_r -> q_{k1+r}
prod = xl_b.wedge_mul(yr_b)
left = integral_I(prod)
right = GraphChain({})
for g1, c1 in integral_I(xl).terms.items():
    for g2, c2 in integral_I(th and yr).terms.items():
        gu, su = disjoint_union(g1, g2)
        right = right + GraphChain({gu: c1 * c2 * su})
assert left == right, (left.terms, right.terms)
print("8. I is multiplicative under left/right embedding")
print("ALL FEYNMAN CHECKS PASS")
