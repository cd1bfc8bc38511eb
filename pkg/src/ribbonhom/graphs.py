"""Oriented ribbon graphs as chord diagrams, with exact orientation signs.

A graph of type ``(k_1 <= ... <= k_m)`` (vertex valencies, all >= 3) is
stored on half-edges ``0 .. 2e-1``: vertex v owns the consecutive block of
length k_v starting at ``k_1 + ... + k_{v-1}``, the block order being the
cyclic order at the vertex, and the edges form a perfect matching of the
half-edges.  An orientation is an ordering of the vertices together with a
direction of every edge; transposing two vertices or flipping one edge
negates the graph.

Two diagrams give the same oriented graph exactly when a relabeling built
from a valency-preserving vertex permutation and rotations of the cyclic
orders carries one matching to the other; the sign of the relabeling is
the vertex-permutation sign times (-1) per reversed edge.  Canonical forms
take the minimum matching over this group (as partner arrays, compared
lexicographically); a class is ZERO when some relabeling stabilizes the
matching with sign -1.  The group action is evaluated for all elements at
once with numpy on small integer matrices, which keeps whole-window sweeps
over six-edge graphs cheap.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from functools import lru_cache

import numpy as np

from .superspace import perm_parity


# ------------------------------------------------------------- type tools

def type_offsets(vtype):
    offs, run = [], 0
    for k in vtype:
        offs.append(run)
        run += k
    return offs


def vertex_of(vtype, h):
    run = 0
    for v, k in enumerate(vtype):
        if h < run + k:
            return v
        run += k
    raise ValueError(f"half-edge {h} outside type {vtype}")


def valency_types(nvert, nedge):
    """Ascending valency tuples: nvert parts >= 3 summing to 2*nedge."""

    def rec(total, parts, floor):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for head in range(floor, total // parts + 1):
            for tail in rec(total - head, parts - 1, head):
                yield (head,) + tail

    yield from rec(2 * nedge, nvert, 3)


def perfect_matchings(points):
    """Perfect matchings of sorted points, as sorted tuples of pairs."""
    pts = list(points)
    if not pts:
        yield ()
        return
    first = pts[0]
    for i in range(1, len(pts)):
        rest = pts[1:i] + pts[i + 1:]
        for sub in perfect_matchings(rest):
            yield ((first, pts[i]),) + sub


# -------------------------------------------------------- canonical scans

@lru_cache(maxsize=None)
def _group_arrays(vtype):
    """All relabelings of a type, precomputed for vectorized scans.

    Returns (P, vsign, flat, width): P[g, h] is the new label of half-edge
    h, vsign[g] the vertex-permutation sign, `flat` the flattened scatter
    indices g*width + P[g, h] into a zero-padded byte buffer of row length
    `width` (8 or 16, so rows can be compared as big-endian machine words).
    """
    m = len(vtype)
    size = sum(vtype)
    if size > 16:
        raise NotImplementedError("graphs beyond 8 edges are out of scope")
    offs = type_offsets(vtype)
    sigmas = [s for s in itertools.permutations(range(m))
              if all(vtype[s[v]] == vtype[v] for v in range(m))]
    rot_space = list(itertools.product(*[range(k) for k in vtype]))
    count = len(sigmas) * len(rot_space)
    P = np.empty((count, size), dtype=np.int64)
    vsign = np.empty(count, dtype=np.int64)
    row = 0
    for sigma in sigmas:
        sgn = perm_parity(sigma)
        for rots in rot_space:
            for v in range(m):
                k = vtype[v]
                tgt = offs[sigma[v]]
                r = rots[v]
                for s in range(k):
                    P[row, offs[v] + s] = tgt + (s - r) % k
            vsign[row] = sgn
            row += 1
    width = 8 if size <= 8 else 16
    flat = (np.arange(count, dtype=np.int64)[:, None] * width + P).ravel()
    return P.astype(np.int16), vsign.astype(np.int8), flat, width


def _partner_array(size, chords):
    partner = np.empty(size, dtype=np.int64)
    for a, b in chords:
        partner[a] = b
        partner[b] = a
    return partner


def _chords_of_partner(partner):
    out = []
    for a, b in enumerate(partner):
        if a < b:
            out.append((a, int(b)))
    return tuple(out)


def _pack_single(size, chords):
    """Orbit-code of one matching, for membership tests against scan codes."""
    if size > 16:
        raise NotImplementedError("graphs beyond 8 edges are out of scope")
    width = 8 if size <= 8 else 16
    buf = np.zeros(width, dtype=np.uint8)
    buf[:size] = _partner_array(size, chords)
    return tuple(buf.view(">u8").tolist())


def _scan(vtype, chords):
    """Full orbit data of an oriented diagram.  The returned `sign`
    satisfies [input] = sign * [canonical]; `codes` carries one
    lexicographic key per group element for orbit dedup."""
    size = sum(vtype)
    P, vsign, flat, width = _group_arrays(vtype)
    count = len(vsign)
    partner = _partner_array(size, chords)
    buf = np.zeros((count, width), dtype=np.uint8)
    buf.ravel()[flat] = P[:, partner].ravel()
    codes = buf.view(">u8")  # (count, width//8), rows compare lexicographically
    starts = np.fromiter((a for a, _ in chords), dtype=np.int64, count=len(chords))
    ends = np.fromiter((b for _, b in chords), dtype=np.int64, count=len(chords))
    flips = np.bitwise_xor.reduce(P[:, starts] > P[:, ends], axis=1)
    signs = np.where(flips, -vsign, vsign)
    eq = codes[:, 0] == codes[:, 0].min()
    for col in range(1, codes.shape[1]):
        sub = codes[eq, col]
        eq &= codes[:, col] == sub.min()
    eq_signs = signs[eq]
    zero = bool(eq_signs.min() != eq_signs.max())
    stab = int(eq.sum())
    winner = int(np.argmax(eq))
    canonical = _chords_of_partner(buf[winner, :size])
    return {
        "canonical": canonical,
        "sign": None if zero else int(eq_signs[0]),
        "aut": stab // 2 if zero else stab,
        "zero": zero,
        "codes": codes,
    }


@lru_cache(maxsize=500_000)
def _scan_cached(vtype, chords):
    data = _scan(vtype, chords)
    return data["canonical"], data["sign"], data["aut"], data["zero"]


def _scan_batch(vtype, chord_lists):
    """Scan many oriented diagrams of one type in a single vectorized pass.

    Returns one (canonical, sign, aut, zero) tuple per input; used by the
    coboundary, whose expansions of a single graph share few types.
    """
    size = sum(vtype)
    P, vsign, flat, width = _group_arrays(vtype)
    count = len(vsign)
    nb = len(chord_lists)
    ne = len(chord_lists[0])
    partners = np.empty((nb, size), dtype=np.int64)
    starts = np.empty((nb, ne), dtype=np.int64)
    ends = np.empty((nb, ne), dtype=np.int64)
    for b, chords in enumerate(chord_lists):
        for r, (x, y) in enumerate(chords):
            partners[b, x] = y
            partners[b, y] = x
            starts[b, r] = x
            ends[b, r] = y
    images = np.moveaxis(P[:, partners], 1, 0)  # (nb, count, size)
    buf = np.zeros((nb, count, width), dtype=np.uint8)
    flat_b = (np.arange(nb, dtype=np.int64)[:, None] * (count * width)) + flat
    buf.ravel()[flat_b.ravel()] = images.ravel()
    codes = buf.view(">u8")  # (nb, count, width//8)
    flips = np.bitwise_xor.reduce(P[:, starts] > P[:, ends], axis=2)  # (count, nb)
    signs = np.where(flips, -vsign[:, None], vsign[:, None])
    out = []
    for b in range(nb):
        cb = codes[b]
        eq = cb[:, 0] == cb[:, 0].min()
        for col in range(1, cb.shape[1]):
            eq &= cb[:, col] == cb[eq, col].min()
        eq_signs = signs[:, b][eq]
        zero = bool(eq_signs.min() != eq_signs.max())
        stab = int(eq.sum())
        canonical = _chords_of_partner(buf[b, int(np.argmax(eq)), :size])
        out.append((canonical,
                    None if zero else int(eq_signs[0]),
                    stab // 2 if zero else stab,
                    zero))
    return out


# ------------------------------------------------------------ graph class

class RibbonGraph:
    """Canonical representative of an oriented ribbon graph class.

    Instances are interned by (vtype, chords); `zero` flags classes killed
    by an orientation-reversing automorphism, `aut` counts the
    orientation-preserving automorphisms.
    """

    __slots__ = ("vtype", "chords", "aut", "zero")
    _intern: dict = {}

    def __init__(self, vtype, chords, aut, zero):
        self.vtype = vtype
        self.chords = chords
        self.aut = aut
        self.zero = zero

    @property
    def nverts(self):
        return len(self.vtype)

    @property
    def nedges(self):
        return len(self.chords)

    @property
    def sort_key(self):
        return (self.nedges, self.nverts, self.vtype, self.chords)

    def __eq__(self, other):
        return (isinstance(other, RibbonGraph)
                and self.vtype == other.vtype and self.chords == other.chords)

    def __hash__(self):
        return hash((self.vtype, self.chords))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        flag = ", zero" if self.zero else ""
        return f"RibbonGraph({self.vtype}, {self.chords}{flag})"

    def vertex_blocks(self):
        offs = type_offsets(self.vtype)
        return [tuple(range(offs[v], offs[v] + self.vtype[v]))
                for v in range(self.nverts)]

    def is_loop(self, edge_index):
        a, b = self.chords[edge_index]
        return vertex_of(self.vtype, a) == vertex_of(self.vtype, b)

    @property
    def connected(self):
        if self.nverts == 0:
            return False
        parent = list(range(self.nverts))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.chords:
            ra, rb = find(vertex_of(self.vtype, a)), find(vertex_of(self.vtype, b))
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(self.nverts)}) == 1


def _make_graph(vtype, chords, aut, zero) -> RibbonGraph:
    key = (vtype, chords)
    g = RibbonGraph._intern.get(key)
    if g is None:
        g = RibbonGraph(vtype, chords, aut, zero)
        RibbonGraph._intern[key] = g
    return g


EMPTY_GRAPH = _make_graph((), (), 1, False)


# --------------------------------------------------- fully ordered graphs

class FullyOrderedGraph:
    """A ribbon graph with every choice made: vertices as tuples of
    half-edge labels (the tuple order is the cyclic order), edges as
    ordered label pairs.  Labels may be arbitrary integers."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        self.vertices = tuple(tuple(v) for v in vertices)
        self.edges = tuple((a, b) for a, b in edges)
        labels = [h for v in self.vertices for h in v]
        ends = [h for e in self.edges for h in e]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate half-edge label")
        if sorted(labels) != sorted(ends):
            raise ValueError("edges do not match half-edges")
        if any(len(v) < 3 for v in self.vertices):
            raise ValueError("valencies must be >= 3")

    @classmethod
    def from_chords(cls, vtype, chords):
        offs = type_offsets(vtype)
        vertices = [tuple(range(offs[v], offs[v] + vtype[v]))
                    for v in range(len(vtype))]
        return cls(vertices, chords)

    def standardize(self):
        """Stable-sort vertices by valency and relabel half-edges to the
        standard consecutive scheme; returns (vtype, chords, sign)."""
        order = sorted(range(len(self.vertices)), key=lambda i: len(self.vertices[i]))
        relabel = {}
        nxt = 0
        for i in order:
            for h in self.vertices[i]:
                relabel[h] = nxt
                nxt += 1
        vtype = tuple(len(self.vertices[i]) for i in order)
        chords = tuple((relabel[a], relabel[b]) for a, b in self.edges)
        return vtype, chords, perm_parity(tuple(order))

    def __repr__(self):
        return f"FullyOrderedGraph({self.vertices}, {self.edges})"


def graph_from_chords(vtype, chords) -> FullyOrderedGraph:
    return FullyOrderedGraph.from_chords(tuple(vtype), tuple(tuple(c) for c in chords))


def chords_from_graph(fog: FullyOrderedGraph):
    """Standard-form (vtype, chords, sign) of a fully ordered graph."""
    return fog.standardize()


# ----------------------------------------------------------------- moves

def canonicalize(obj):
    """Canonical class and sign of a diagram: (RibbonGraph, sign) with
    [input] = sign * [canonical].  For ZERO classes the sign is +1 by
    convention and the class must be discarded by chain arithmetic."""
    if isinstance(obj, RibbonGraph):
        return obj, 1
    if isinstance(obj, FullyOrderedGraph):
        vtype, chords, sign = obj.standardize()
    else:
        vtype, chords = obj
        vtype = tuple(vtype)
        chords = tuple(tuple(c) for c in chords)
        sign = 1
    if not vtype:
        return EMPTY_GRAPH, sign
    canonical, csign, aut, zero = _scan_cached(vtype, chords)
    g = _make_graph(vtype, canonical, aut, zero)
    return g, sign * (1 if zero else csign)


def contract_edge(g: RibbonGraph, edge_index: int):
    """Contract one non-loop edge: (RibbonGraph, sign).

    The edge's start vertex moves to the front of the vertex order, its end
    vertex second (sign of that shuffle); the cyclic orders are rotated so
    the two half-edges sit last in their blocks, and the merged vertex
    keeps the remaining half-edges in that order, placed first.
    """
    a, b = g.chords[edge_index]
    va, vb = vertex_of(g.vtype, a), vertex_of(g.vtype, b)
    if va == vb:
        raise ValueError("cannot contract a loop")
    blocks = [list(v) for v in g.vertex_blocks()]
    rest = [i for i in range(g.nverts) if i not in (va, vb)]
    sign = perm_parity(tuple([va, vb] + rest))

    def to_last(block, h):
        i = block.index(h)
        return block[i + 1:] + block[:i + 1]

    merged = to_last(blocks[va], a)[:-1] + to_last(blocks[vb], b)[:-1]
    vertices = [merged] + [blocks[i] for i in rest]
    edges = [c for j, c in enumerate(g.chords) if j != edge_index]
    rg, s2 = canonicalize(FullyOrderedGraph(vertices, edges))
    return rg, sign * s2


IdealEdge = namedtuple("IdealEdge", ["vertex", "arc_a", "arc_b"])


def ideal_edges(g: RibbonGraph):
    """Unordered splittings of one vertex's cyclic order into two arcs of
    length >= 2; a vertex of valency k contributes k(k-3)/2 of them."""
    out = []
    for v, block in enumerate(g.vertex_blocks()):
        k = len(block)
        if k < 4:
            continue
        seen = set()
        for start in range(k):
            rot = block[start:] + block[:start]
            for cut in range(2, k - 1):
                pair = frozenset((tuple(rot[:cut]), tuple(rot[cut:])))
                if pair in seen:
                    continue
                seen.add(pair)
                arc_a, arc_b = sorted(pair)
                out.append(IdealEdge(v, arc_a, arc_b))
    out.sort()
    return out


def expand_ideal_edge_raw(g: RibbonGraph, ie: IdealEdge):
    """Ideal-edge expansion in standard labels, before canonicalization:
    (vtype, oriented chords, sign)."""
    v = ie.vertex
    blocks = g.vertex_blocks()
    if v >= len(blocks) or len(ie.arc_a) < 2 or len(ie.arc_b) < 2 \
            or sorted(ie.arc_a + ie.arc_b) != sorted(blocks[v]):
        raise ValueError("malformed ideal edge")
    sign = perm_parity(tuple([v] + [i for i in range(g.nverts) if i != v]))
    size = 2 * g.nedges
    na, nb = size, size + 1
    vertices = [tuple(ie.arc_a) + (na,), tuple(ie.arc_b) + (nb,)]
    vertices += [blocks[i] for i in range(g.nverts) if i != v]
    edges = list(g.chords) + [(na, nb)]
    vt, ch, s2 = FullyOrderedGraph(vertices, edges).standardize()
    return vt, ch, sign * s2


def expand_ideal_edge(g: RibbonGraph, ie: IdealEdge):
    """Blow one vertex up into two joined by a new edge: (RibbonGraph, sign).

    The split vertex moves to the front of the vertex order (sign); the two
    new vertices (arc_a + a) and (arc_b + b) take its place in positions
    one and two, and the new edge is directed (a, b).  Contracting the new
    edge of the result returns the original graph.
    """
    vt, ch, sign = expand_ideal_edge_raw(g, ie)
    rg, s2 = canonicalize((vt, ch))
    return rg, sign * s2


def disjoint_union(g1: RibbonGraph, g2: RibbonGraph):
    """Disjoint union, g1's vertices listed first: (RibbonGraph, sign)."""
    if g1.nverts == 0:
        return g2, 1
    if g2.nverts == 0:
        return g1, 1
    shift = 2 * g1.nedges
    vertices = list(g1.vertex_blocks())
    vertices += [tuple(h + shift for h in blk) for blk in g2.vertex_blocks()]
    edges = list(g1.chords) + [(a + shift, b + shift) for a, b in g2.chords]
    return canonicalize(FullyOrderedGraph(vertices, edges))


def connected_components(g: RibbonGraph):
    """Split into connected components: (components, sign) such that the
    disjoint union of the components, folded left to right in the returned
    order, equals sign * g."""
    if g.nverts == 0:
        return [], 1
    parent = list(range(g.nverts))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.chords:
        ra, rb = find(vertex_of(g.vtype, a)), find(vertex_of(g.vtype, b))
        if ra != rb:
            parent[ra] = rb
    roots = []
    for v in range(g.nverts):
        r = find(v)
        if r not in roots:
            roots.append(r)
    blocks = g.vertex_blocks()
    comps = []
    grouping = []
    total_sign = 1
    for r in roots:
        verts = [v for v in range(g.nverts) if find(v) == r]
        grouping.extend(verts)
        half_edges = {h for v in verts for h in blocks[v]}
        edges = [c for c in g.chords if c[0] in half_edges]
        comp, s = canonicalize(FullyOrderedGraph([blocks[v] for v in verts], edges))
        comps.append(comp)
        total_sign *= s
    # sign of regrouping the vertex order component by component
    total_sign *= perm_parity(tuple(grouping))
    return comps, total_sign


# ------------------------------------------------------------ enumeration

@lru_cache(maxsize=None)
def enumerate_graphs(nvert, nedge, connected=False):
    """All oriented ribbon graph classes with the given counts, sorted;
    ZERO classes are included and flagged."""
    if nvert == 0:
        if nedge == 0 and not connected:
            return (EMPTY_GRAPH,)
        return ()
    out = []
    for vtype in valency_types(nvert, nedge):
        seen = set()
        for mat in perfect_matchings(range(2 * nedge)):
            if _pack_single(2 * nedge, mat) in seen:
                continue
            data = _scan(vtype, mat)
            seen.update(map(tuple, data["codes"].tolist()))
            g = _make_graph(vtype, data["canonical"], data["aut"], data["zero"])
            if connected and not g.connected:
                continue
            out.append(g)
    return tuple(sorted(out, key=lambda g: g.sort_key))
