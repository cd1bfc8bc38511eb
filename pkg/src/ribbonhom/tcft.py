"""Ribbon graphs with labelled legs: gluing and correlation functions.

A legged graph keeps the chord-diagram storage of `graphs` for its
internal vertices (valencies >= 3, half-edge slots numbered vertex-major,
block order = cyclic order) and reserves some slots for legs:
``legs_in[i]`` is the slot carrying incoming label i, ``legs_out[j]`` the
slot carrying outgoing label j, and the remaining slots are matched up by
the internal edges.  An orientation is, as in the legless case, an
ordering of the vertices together with a direction of every internal
edge; leg labels are fixed by isomorphisms and carry no orientation data.
This is the convention the correlator below respects on the nose: the
vertex tensors are odd (transposing two vertices negates the state sum),
the edge pairing is super-skew (reversing a direction negates it) and
parity-even (the list order of the edges is immaterial).

Gluing joins outgoing leg j of the first graph to incoming leg j of the
second by a new internal edge directed first-to-second.  The correlator
of an algebra over a legged graph is the partition-function state sum --
one Hamiltonian tensor per vertex, internal edges contracted with the
dual inner product -- with the leg slots left open, ordered incoming
labels then outgoing labels, and no automorphism division (so a graph
without legs evaluates to |Aut| times its partition-function
coefficient).  Gluing then corresponds to composing correlators:
contract the outgoing slots of the first against the incoming slots of
the second with the same dual pairing.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .ainfinity import AInfinityAlgebra, ValidationReport
from .graphs import perfect_matchings, type_offsets
from .scalars import format_scalar
from .superspace import SuperTensor, koszul_apply, perm_parity


# ---------------------------------------------------------- canonical scan

@lru_cache(maxsize=None)
def _legged_group(vtype):
    """Relabelings of a type as (slot map, vertex sign) pairs: valency
    preserving vertex permutations combined with rotations of every
    cyclic order."""
    m = len(vtype)
    size = sum(vtype)
    offs = type_offsets(vtype)
    sigmas = [s for s in itertools.permutations(range(m))
              if all(vtype[s[v]] == vtype[v] for v in range(m))]
    out = []
    for sigma in sigmas:
        sgn = perm_parity(sigma)
        for rots in itertools.product(*[range(k) for k in vtype]):
            p = [0] * size
            for v in range(m):
                k = vtype[v]
                tgt = offs[sigma[v]]
                r = rots[v]
                for s in range(k):
                    p[offs[v] + s] = tgt + (s - r) % k
            out.append((tuple(p), sgn))
    return tuple(out)


def _image_key(p, vsgn, legs_in, legs_out, chords):
    sgn = vsgn
    ch = []
    for a, b in chords:
        x, y = p[a], p[b]
        if x > y:
            x, y = y, x
            sgn = -sgn
        ch.append((x, y))
    ch.sort()
    return (tuple(p[s] for s in legs_in), tuple(p[s] for s in legs_out),
            tuple(ch)), sgn


@lru_cache(maxsize=200_000)
def _legged_scan(vtype, legs_in, legs_out, chords):
    """Minimum image over the relabeling group: (canonical key, sign, aut,
    zero), the sign satisfying [input] = sign * [canonical] (None when the
    class is zero)."""
    best = None
    best_sign = 0
    stab = 0
    zero = False
    for p, vsgn in _legged_group(vtype):
        key, sgn = _image_key(p, vsgn, legs_in, legs_out, chords)
        if best is None or key < best:
            best, best_sign, stab, zero = key, sgn, 1, False
        elif key == best:
            stab += 1
            if sgn != best_sign:
                zero = True
    aut = stab // 2 if zero else stab
    return best, (None if zero else best_sign), aut, zero


# ------------------------------------------------------------- graph class

class LeggedGraph:
    """Canonical representative of an oriented ribbon graph class with
    labelled legs; interned, `zero`/`aut` as for RibbonGraph."""

    __slots__ = ("vtype", "legs_in", "legs_out", "chords", "aut", "zero")
    _intern: dict = {}

    def __init__(self, vtype, legs_in, legs_out, chords, aut, zero):
        self.vtype = vtype
        self.legs_in = legs_in
        self.legs_out = legs_out
        self.chords = chords
        self.aut = aut
        self.zero = zero

    @property
    def nin(self):
        return len(self.legs_in)

    @property
    def nout(self):
        return len(self.legs_out)

    @property
    def nverts(self):
        return len(self.vtype)

    @property
    def nedges(self):
        return len(self.chords)

    @property
    def sort_key(self):
        return (self.nedges, self.nverts, self.vtype,
                self.legs_in, self.legs_out, self.chords)

    def __eq__(self, other):
        return (isinstance(other, LeggedGraph)
                and self.vtype == other.vtype
                and self.legs_in == other.legs_in
                and self.legs_out == other.legs_out
                and self.chords == other.chords)

    def __hash__(self):
        return hash((self.vtype, self.legs_in, self.legs_out, self.chords))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        flag = ", zero" if self.zero else ""
        return (f"LeggedGraph({self.vtype}, in{self.legs_in}, "
                f"out{self.legs_out}, {self.chords}{flag})")

    def vertex_blocks(self):
        offs = type_offsets(self.vtype)
        return [tuple(range(offs[v], offs[v] + self.vtype[v]))
                for v in range(self.nverts)]

    def diagram(self):
        return (self.vtype, self.legs_in, self.legs_out, self.chords)


def _make_legged(vtype, legs_in, legs_out, chords, aut, zero) -> LeggedGraph:
    key = (vtype, legs_in, legs_out, chords)
    g = LeggedGraph._intern.get(key)
    if g is None:
        g = LeggedGraph(vtype, legs_in, legs_out, chords, aut, zero)
        LeggedGraph._intern[key] = g
    return g


EMPTY_LEGGED = _make_legged((), (), (), (), 1, False)


def _check_diagram(vtype, legs_in, legs_out, chords):
    if any(k < 3 for k in vtype):
        raise ValueError("internal valencies must be >= 3")
    ends = list(legs_in) + list(legs_out) + [h for c in chords for h in c]
    if sorted(ends) != list(range(sum(vtype))):
        raise ValueError("legs and edges must partition the half-edge slots")


def _standardize_diagram(vtype, legs_in, legs_out, chords):
    """Stable-sort the vertices by valency and relabel the slots to the
    consecutive scheme: (diagram, sign) with [input] = sign * [output]."""
    order = sorted(range(len(vtype)), key=lambda v: vtype[v])
    offs = type_offsets(vtype)
    relabel = {}
    nxt = 0
    for v in order:
        for s in range(vtype[v]):
            relabel[offs[v] + s] = nxt
            nxt += 1
    out = (tuple(vtype[v] for v in order),
           tuple(relabel[s] for s in legs_in),
           tuple(relabel[s] for s in legs_out),
           tuple((relabel[a], relabel[b]) for a, b in chords))
    return out, perm_parity(tuple(order))


def canonicalize_legged(diagram):
    """Canonical class and sign of a legged diagram: (LeggedGraph, sign)
    with [input] = sign * [canonical]; +1 on zero classes by the same
    convention as plain graphs."""
    if isinstance(diagram, LeggedGraph):
        return diagram, 1
    vtype, legs_in, legs_out, chords = diagram
    vtype = tuple(vtype)
    legs_in = tuple(legs_in)
    legs_out = tuple(legs_out)
    chords = tuple(tuple(c) for c in chords)
    _check_diagram(vtype, legs_in, legs_out, chords)
    if not vtype:
        return EMPTY_LEGGED, 1
    (vtype, legs_in, legs_out, chords), sign = \
        _standardize_diagram(vtype, legs_in, legs_out, chords)
    key, csign, aut, zero = _legged_scan(vtype, legs_in, legs_out, chords)
    li, lo, ch = key
    g = _make_legged(vtype, li, lo, ch, aut, zero)
    return g, sign * (1 if zero else csign)


# ----------------------------------------------------------------- gluing

def _as_diagram(g):
    if isinstance(g, LeggedGraph):
        return g.diagram()
    vtype, legs_in, legs_out, chords = g
    return (tuple(vtype), tuple(legs_in), tuple(legs_out),
            tuple(tuple(c) for c in chords))


def glue_diagram(g1, g2):
    """Join outgoing leg j of g1 to incoming leg j of g2 by a new internal
    edge directed first-to-second, the first graph's vertices listed
    first: (diagram, sign), standardized but not canonicalized."""
    vt1, li1, lo1, ch1 = _as_diagram(g1)
    vt2, li2, lo2, ch2 = _as_diagram(g2)
    if len(lo1) != len(li2):
        raise ValueError(f"cannot glue {len(lo1)} outgoing legs "
                         f"to {len(li2)} incoming legs")
    shift = sum(vt1)
    chords = list(ch1)
    chords += [(a + shift, b + shift) for a, b in ch2]
    chords += [(lo1[j], li2[j] + shift) for j in range(len(lo1))]
    vtype = vt1 + vt2
    legs_in = li1
    legs_out = tuple(s + shift for s in lo2)
    if not vtype:
        return ((), (), (), ()), 1
    return _standardize_diagram(vtype, legs_in, legs_out, tuple(chords))


def glue(g1, g2):
    """Glued canonical class: (LeggedGraph, sign)."""
    diagram, sign = glue_diagram(g1, g2)
    g, s2 = canonicalize_legged(diagram)
    return g, sign * s2


# ----------------------------------------------------------------- chains

class MorphismChain:
    """Finite linear combination of legged graph classes of one arity
    (nin incoming, nout outgoing legs); zero classes and zero
    coefficients are dropped."""

    __slots__ = ("nin", "nout", "terms")

    def __init__(self, nin, nout, terms=None):
        self.nin = nin
        self.nout = nout
        acc: dict = {}
        for g, c in (terms or {}).items():
            if g.nin != nin or g.nout != nout:
                raise ValueError(f"graph of arity ({g.nin},{g.nout}) "
                                 f"in a ({nin},{nout}) chain")
            if g.zero or not c:
                continue
            acc[g] = acc.get(g, 0) + c
        self.terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def of(cls, graph: LeggedGraph, coeff=Fraction(1)) -> "MorphismChain":
        return cls(graph.nin, graph.nout, {graph: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MorphismChain) and self.nin == other.nin
                and self.nout == other.nout and self.terms == other.terms)

    def __add__(self, other):
        if (self.nin, self.nout) != (other.nin, other.nout):
            raise ValueError("cannot add chains of different arities")
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return MorphismChain(self.nin, self.nout, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "MorphismChain":
        return MorphismChain(self.nin, self.nout,
                             {g: c * factor for g, c in self.terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def coefficient(self, graph: LeggedGraph):
        return self.terms.get(graph, Fraction(0))

    def bidegrees(self):
        return sorted({(g.nverts, g.nedges) for g in self.terms})

    def __repr__(self):
        return (f"MorphismChain({self.nin},{self.nout}; "
                f"{len(self.terms)} terms)")


def compose(x: MorphismChain, y: MorphismChain) -> MorphismChain:
    """Bilinear extension of gluing: an (m,n) chain with an (n,k) chain
    gives an (m,k) chain."""
    if x.nout != y.nin:
        raise ValueError(f"cannot compose ({x.nin},{x.nout}) "
                         f"with ({y.nin},{y.nout})")
    acc: dict = {}
    for g1, c1 in x.terms.items():
        for g2, c2 in y.terms.items():
            g, s = glue(g1, g2)
            if not g.zero:
                acc[g] = acc.get(g, 0) + c1 * c2 * s
    return MorphismChain(x.nin, y.nout, acc)


# ------------------------------------------------------------ correlators

def _contract_leading(t: SuperTensor, npairs, pairing) -> SuperTensor:
    """Contract the first npairs consecutive slot pairs with the pairing
    matrix; no residual sign since nonzero pairing entries are even."""
    out: dict = {}
    for word, coeff in t.terms.items():
        val = coeff
        for r in range(0, 2 * npairs, 2):
            val = val * pairing[word[r]][word[r + 1]]
            if not val:
                break
        if val:
            w = word[2 * npairs:]
            out[w] = out.get(w, 0) + val
    return SuperTensor(t.dim, t.rank - 2 * npairs, out)


def correlation(algebra: AInfinityAlgebra, graph) -> SuperTensor:
    """State-sum correlator of a legged graph: one Hamiltonian tensor per
    vertex, internal edges contracted with the dual pairing, leg slots
    left open and ordered incoming labels then outgoing labels.

    Accepts a canonical LeggedGraph or a raw diagram tuple; on canonical
    zero classes the result is the zero tensor, which is also what the
    state sum itself produces on any diagram of such a class."""
    dim = algebra.form.dim
    if isinstance(graph, LeggedGraph):
        if graph.zero:
            return SuperTensor.zero(dim, graph.nin + graph.nout)
        vtype, legs_in, legs_out, chords = graph.diagram()
    else:
        vtype, legs_in, legs_out, chords = _as_diagram(graph)
    rank = len(legs_in) + len(legs_out)
    if not vtype:
        return SuperTensor(dim, 0, {(): Fraction(1)})
    for k in vtype:
        if not algebra.hamiltonian(k):
            return SuperTensor.zero(dim, rank)
    t = algebra.hamiltonian(vtype[0])
    for k in vtype[1:]:
        t = t.tensor(algebra.hamiltonian(k))
    e = len(chords)
    perm = [0] * t.rank
    for r, (a, b) in enumerate(chords):
        perm[a] = 2 * r
        perm[b] = 2 * r + 1
    for i, s in enumerate(legs_in):
        perm[s] = 2 * e + i
    for j, s in enumerate(legs_out):
        perm[s] = 2 * e + len(legs_in) + j
    shuffled = koszul_apply(tuple(perm), t)
    return _contract_leading(shuffled, e, algebra.dual_pairing())


def compose_tensors(t1: SuperTensor, t2: SuperTensor, n, pairing):
    """Contract the last n slots of t1 against the first n slots of t2,
    label by label with the dual pairing -- the tensor image of gluing n
    legs.  Free slots keep their order: t1's inputs, then t2's outputs."""
    if n > t1.rank or n > t2.rank:
        raise ValueError("fewer tensor slots than legs to glue")
    m = t1.rank - n
    k = t2.rank - n
    big = t1.tensor(t2)
    perm = [0] * (t1.rank + t2.rank)
    for i in range(m):
        perm[i] = 2 * n + i
    for j in range(n):
        perm[m + j] = 2 * j
        perm[t1.rank + j] = 2 * j + 1
    for l in range(k):
        perm[t1.rank + n + l] = 2 * n + m + l
    return _contract_leading(koszul_apply(tuple(perm), big), n, pairing)


def composition_compatibility(algebra: AInfinityAlgebra, g1, g2):
    """Report whether the correlator of the glued graph equals the
    composition of the two correlators, exactly."""
    report = ValidationReport()
    g1, s1 = canonicalize_legged(g1)
    g2, s2 = canonicalize_legged(g2)
    if g1.nout != g2.nin:
        report.fail("arity", f"{g1.nout} outgoing legs against "
                             f"{g2.nin} incoming")
        return report
    diagram, s = glue_diagram(g1, g2)
    glued = correlation(algebra, diagram).scale(s * s1 * s2)
    composed = compose_tensors(correlation(algebra, g1).scale(s1),
                               correlation(algebra, g2).scale(s2),
                               g1.nout, algebra.dual_pairing())
    if glued != composed:
        diff = glued - composed
        w = min(diff.terms, key=lambda w: (len(w), w))
        name = ".".join(algebra.form.dim.letter_name(a) for a in w) or "1"
        report.fail("composition",
                    f"correlators differ at {name}: glued "
                    + format_scalar(glued.terms.get(w, Fraction(0)))
                    + " against composed "
                    + format_scalar(composed.terms.get(w, Fraction(0))))
    return report


# ------------------------------------------------------------ enumeration

def _valency_tuples(total, parts):
    def rec(tot, parts, floor):
        if parts == 0:
            if tot == 0:
                yield ()
            return
        for head in range(floor, tot // parts + 1):
            for tail in rec(tot - head, parts - 1, head):
                yield (head,) + tail

    yield from rec(total, parts, 3)


@lru_cache(maxsize=None)
def enumerate_legged_graphs(nin, nout, nedges):
    """All legged graph classes with the exact leg labels and internal
    edge count, sorted; zero classes are included and flagged."""
    size = 2 * nedges + nin + nout
    if size == 0:
        return (EMPTY_LEGGED,)
    out = []
    for nverts in range(1, size // 3 + 1):
        for vtype in _valency_tuples(size, nverts):
            seen = set()
            slots = range(size)
            for li in itertools.permutations(slots, nin):
                rest = [s for s in slots if s not in li]
                for lo in itertools.permutations(rest, nout):
                    taken = set(li) | set(lo)
                    pts = tuple(s for s in slots if s not in taken)
                    for mat in perfect_matchings(pts):
                        if (li, lo, mat) in seen:
                            continue
                        images = [_image_key(p, v, li, lo, mat)
                                  for p, v in _legged_group(vtype)]
                        seen.update(k for k, _ in images)
                        best = min(k for k, _ in images)
                        signs = {s for k, s in images if k == best}
                        stab = sum(1 for k, _ in images if k == best)
                        zero = len(signs) > 1
                        g = _make_legged(vtype, *best,
                                         stab // 2 if zero else stab, zero)
                        out.append(g)
    return tuple(sorted(out, key=lambda g: g.sort_key))
