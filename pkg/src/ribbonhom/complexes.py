"""The oriented ribbon graph chain complex, with exact coefficients.

Chains are finite linear combinations of nonzero canonical graph classes;
the classes form an orthonormal basis for the pairing.  The boundary sums
signed one-edge contractions (bidegree (-1,-1)); the coboundary sums ideal
edge expansions weighted by automorphism-count ratios (bidegree (+1,+1)),
making it the exact adjoint of the boundary for this pairing.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .graphs import (RibbonGraph, _make_graph, _scan_batch, contract_edge,
                     enumerate_graphs, expand_ideal_edge_raw, ideal_edges)
from .scalars import format_scalar, rank_exact, solve_exact


class GraphChain:
    """Finite linear combination of oriented ribbon graph classes.

    ZERO classes and zero coefficients are dropped on construction, so the
    zero chain is the one with no terms.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        for g, c in (terms or {}).items():
            if g.zero or not c:
                continue
            acc[g] = acc.get(g, 0) + c
        self.terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def of(cls, graph: RibbonGraph, coeff=Fraction(1)) -> "GraphChain":
        return cls({graph: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GraphChain) and self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return GraphChain(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "GraphChain":
        return GraphChain({g: c * factor for g, c in self.terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def coefficient(self, graph: RibbonGraph):
        return self.terms.get(graph, Fraction(0))

    def bidegree(self):
        """(vertices, edges) common to all terms; None for the zero chain;
        ValueError if mixed."""
        degs = {(g.nverts, g.nedges) for g in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"chain is not bihomogeneous: {sorted(degs)}")
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "GraphChain(0)"
        bits = [f"({format_scalar(c)})*{g!r}" for g, c in sorted(
            self.terms.items(), key=lambda it: it[0].sort_key)]
        return " + ".join(bits)


def _as_chain(x) -> GraphChain:
    if isinstance(x, RibbonGraph):
        return GraphChain.of(x)
    return x


@lru_cache(maxsize=None)
def _boundary_graph(g: RibbonGraph):
    acc: dict = {}
    for j in range(g.nedges):
        if g.is_loop(j):
            continue
        rg, s = contract_edge(g, j)
        if rg.zero:
            continue
        acc[rg] = acc.get(rg, 0) + s
    return tuple((rg, c) for rg, c in acc.items() if c)


@lru_cache(maxsize=None)
def _coboundary_graph(g: RibbonGraph):
    groups: dict = {}
    for ie in ideal_edges(g):
        vt, ch, s = expand_ideal_edge_raw(g, ie)
        groups.setdefault(vt, []).append((ch, s))
    acc: dict = {}
    for vt, items in groups.items():
        scans = _scan_batch(vt, [ch for ch, _ in items])
        for (ch, s), (canonical, csign, aut, zero) in zip(items, scans):
            if zero:
                continue
            rg = _make_graph(vt, canonical, aut, zero)
            acc[rg] = acc.get(rg, 0) + s * csign * Fraction(aut, g.aut)
    return tuple((rg, c) for rg, c in acc.items() if c)


def boundary(x) -> GraphChain:
    """Sum of signed non-loop edge contractions, extended linearly."""
    out: dict = {}
    for g, c in _as_chain(x).terms.items():
        for rg, s in _boundary_graph(g):
            out[rg] = out.get(rg, 0) + c * s
    return GraphChain(out)


def coboundary(x) -> GraphChain:
    """Sum of ideal-edge expansions weighted by automorphism ratios,
    extended linearly; the adjoint of `boundary`."""
    out: dict = {}
    for g, c in _as_chain(x).terms.items():
        for rg, s in _coboundary_graph(g):
            out[rg] = out.get(rg, 0) + c * s
    return GraphChain(out)


def pairing(x, y):
    """Orthonormal pairing in the basis of canonical nonzero classes."""
    x, y = _as_chain(x), _as_chain(y)
    small, large = (x.terms, y.terms) if len(x.terms) <= len(y.terms) \
        else (y.terms, x.terms)
    total = Fraction(0)
    for g, c in small.items():
        if g in large:
            total += c * large[g]
    return total


def basis(nvert, nedge, connected=False):
    """Nonzero classes at one bidegree, in canonical order."""
    return tuple(g for g in enumerate_graphs(nvert, nedge, connected) if not g.zero)


def _boundary_rank(nvert, nedge) -> int:
    """Rank of the boundary map leaving bidegree (nvert, nedge)."""
    src = basis(nvert, nedge)
    tgt = {g: i for i, g in enumerate(basis(nvert - 1, nedge - 1))}
    if not src or not tgt:
        return 0
    rows = []
    for g in src:
        row = [Fraction(0)] * len(tgt)
        for rg, c in _boundary_graph(g):
            row[tgt[rg]] = Fraction(c)
        rows.append(row)
    return rank_exact(rows)


def homology_dims(vrange, erange) -> dict:
    """Exact homology dimensions of the boundary complex.

    `vrange` and `erange` are inclusive (lo, hi) pairs; returns
    {(v, e): dim} for every bidegree in the window.
    """
    vlo, vhi = vrange
    elo, ehi = erange
    out = {}
    for v in range(vlo, vhi + 1):
        for e in range(elo, ehi + 1):
            dim = len(basis(v, e))
            if dim == 0:
                out[(v, e)] = 0
                continue
            out[(v, e)] = dim - _boundary_rank(v, e) - _boundary_rank(v + 1, e + 1)
    return out


def is_boundary(x: GraphChain):
    """A chain y with boundary(y) == x, or None if there is none.

    The witness is found by exact elimination over the one-higher
    bidegree's basis; x must be bihomogeneous and nonzero.
    """
    x = _as_chain(x)
    deg = x.bidegree()
    if deg is None:
        return GraphChain()
    v, e = deg
    src = basis(v + 1, e + 1)
    tgt = {g: i for i, g in enumerate(basis(v, e))}
    if not src:
        return None
    cols = []
    for g in src:
        col = [Fraction(0)] * len(tgt)
        for rg, c in _boundary_graph(g):
            col[tgt[rg]] = Fraction(c)
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))]
    rhs = [Fraction(0)] * len(tgt)
    for g, c in x.terms.items():
        rhs[tgt[g]] = Fraction(c)
    sol = solve_exact(rows, rhs)
    if sol is None:
        return None
    return GraphChain({g: c for g, c in zip(src, sol)})
