"""Amplitudes pairing wedge chains of cyclic words with ribbon graphs.

An oriented chord diagram on 2k points determines a shuffle that gathers
each chord's two slots next to each other; composing with the product of
canonical pairings gives the basic amplitude beta.  Distributing the wedge
factors of a chain over the vertices of a graph (all assignments, graded
signs) turns beta into a pairing between chains and graphs, and summing
graphs against all chord diagrams turns a chain into a graph chain -- a
combinatorial shadow of Gaussian integration.  Both directions are exact
and are checked against each other: the two differentials are adjoint and
the triangle chain-pairing = graph-pairing after integration commutes.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .complexes import GraphChain
from .graphs import (EMPTY_GRAPH, FullyOrderedGraph, RibbonGraph,
                     canonicalize, perfect_matchings)
from .lie import CEChain
from .superspace import (SuperDim, SuperTensor, canonical_form_matrix,
                         koszul_apply, koszul_sign, norm, perm_parity)


def sigma_chords(chords, rank: int):
    """The permutation sending chord r's slots to positions 2r, 2r+1.

    Returned in image form: perm[slot] is the new position of `slot`.
    """
    perm = [None] * rank
    for r, (a, b) in enumerate(chords):
        perm[a] = 2 * r
        perm[b] = 2 * r + 1
    if None in perm:
        raise ValueError("chords do not cover the slots")
    return tuple(perm)


def kappa(t: SuperTensor):
    """Pair consecutive slots (0,1), (2,3), ... through the canonical
    inner product and multiply."""
    if t.rank % 2:
        raise ValueError("kappa needs an even-rank tensor")
    mat = canonical_form_matrix(t.dim)
    total = Fraction(0)
    for word, coeff in t.terms.items():
        val = coeff
        for r in range(0, t.rank, 2):
            val = val * mat[word[r]][word[r + 1]]
            if not val:
                break
        total = total + val
    return total


def beta(chords, t: SuperTensor):
    """Amplitude of an oriented chord diagram on a tensor: shuffle each
    chord's slots together (with Koszul signs), then apply kappa."""
    chords = tuple(chords)
    if 2 * len(chords) != t.rank:
        raise ValueError("chord diagram size does not match tensor rank")
    return kappa(koszul_apply(sigma_chords(chords, t.rank), t))


def amplitude_ordered(graph: FullyOrderedGraph, blocks):
    """Amplitude of a fully ordered graph on a tuple of per-vertex tensors.

    Zero when the block ranks do not match the valencies; otherwise beta of
    the graph's chord diagram on the product tensor, with chords read in
    the graph's own labelling.
    """
    blocks = list(blocks)
    if tuple(t.rank for t in blocks) != tuple(len(v) for v in graph.vertices):
        return Fraction(0)
    slot = {}
    for v in graph.vertices:
        for h in v:
            slot[h] = len(slot)
    chords = tuple((slot[a], slot[b]) for a, b in graph.edges)
    total = blocks[0]
    for t in blocks[1:]:
        total = total.tensor(t)
    return beta(chords, total)


def _norm_blocks(dim: SuperDim, factors, project: bool):
    """Per-factor rotation sums N(w), optionally divided by the word
    length (the projector onto invariants).

    The amplitude of a graph uses the plain norm; the integration map uses
    the projector, because its sum over chord diagrams already runs over
    every rotation of every vertex.  With this split the pairing
    factorizes exactly through integration.
    """
    out = []
    for w in factors:
        t = norm(SuperTensor.word(dim, w))
        if project:
            t = t.scale(Fraction(1, len(w)))
        out.append(t)
    return out


def amplitude(graph, x: CEChain):
    """Amplitude of an oriented ribbon graph on a wedge chain: distribute
    the wedge factors over the vertices in all rank-compatible ways, with
    the graded sign of each redistribution."""
    g, gsign = canonicalize(graph)
    if g.zero or g is EMPTY_GRAPH:
        return Fraction(0)
    dim = x.dim
    nv = len(g.vtype)
    total = Fraction(0)
    for factors, coeff in x.terms.items():
        if len(factors) != nv:
            continue
        ranks = tuple(len(w) for w in factors)
        if sorted(ranks) != list(g.vtype):
            continue
        pars = [sum(dim.parities(w)) % 2 for w in factors]
        blocks = _norm_blocks(dim, factors, project=False)
        for assign in itertools.permutations(range(nv)):
            # vertex v receives factor assign[v]
            if any(ranks[assign[v]] != g.vtype[v] for v in range(nv)):
                continue
            perm = [None] * nv
            for v, f in enumerate(assign):
                perm[f] = v
            sign = perm_parity(tuple(perm)) * koszul_sign(pars, perm)
            t = blocks[assign[0]]
            for v in range(1, nv):
                t = t.tensor(blocks[assign[v]])
            val = beta(g.chords, t)
            if val:
                total = total + coeff * val * sign
    return total * gsign


def pair_chain_graph(x: CEChain, graph):
    """Pairing of a wedge chain with a graph (or graph chain): amplitude
    divided by the automorphism count, extended linearly."""
    if isinstance(graph, GraphChain):
        total = Fraction(0)
        for g, c in graph.terms.items():
            total = total + c * amplitude(g, x) / g.aut
        return total
    g, gsign = canonicalize(graph)
    if g.zero or g is EMPTY_GRAPH:
        return Fraction(0)
    return gsign * amplitude(g, x) / g.aut


def integral_I(x: CEChain) -> GraphChain:
    """Integrate a wedge chain to a graph chain: sum each term's amplitude
    against every chord diagram on its slots, the diagram oriented by
    increasing pairs."""
    dim = x.dim
    acc: dict = {}
    for factors, coeff in x.terms.items():
        ranks = tuple(len(w) for w in factors)
        if any(k < 3 for k in ranks):
            raise ValueError("wedge factors shorter than three letters "
                             "do not define graph vertices")
        order = sum(ranks)
        if order % 2:
            continue
        blocks = _norm_blocks(dim, factors, project=True)
        t = blocks[0]
        for b in blocks[1:]:
            t = t.tensor(b)
        for matching in perfect_matchings(range(order)):
            val = beta(matching, t)
            if not val:
                continue
            fog = FullyOrderedGraph.from_chords(ranks, matching)
            vtype, chords, fsign = fog.standardize()
            g, csign = canonicalize((vtype, chords))
            if g.zero:
                continue
            acc[g] = acc.get(g, 0) + coeff * val * fsign * csign
    return GraphChain(acc)


def integral_I_inverse(graph) -> CEChain:
    """A wedge chain integrating back to the given graph: one letter pair
    p_r, q_r per edge, placed at the edge's two slots, over C^{2k|0}."""
    g, gsign = canonicalize(graph)
    if g.zero:
        return CEChain(SuperDim(len(g.chords), 0))
    k = len(g.chords)
    dim = SuperDim(k, 0)
    word = [None] * (2 * k)
    for r, (a, b) in enumerate(g.chords):
        word[a] = r          # p_{r+1}
        word[b] = k + r      # q_{r+1}
    factors = []
    pos = 0
    for val in g.vtype:
        factors.append(tuple(word[pos:pos + val]))
        pos += val
    return CEChain(dim, {tuple(factors): Fraction(gsign)})
