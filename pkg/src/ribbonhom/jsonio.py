"""Structured-text (JSON) forms of the library objects.

Scalars are serialized by `scalars.json_scalar` -- "num/den" strings for
rationals, explicit sqrt sums otherwise, never floats.  Schemas:

  tensor   {"signature": {"n", "m"}, "rank", "terms": [{"word", "coeff"}]}
  graph    {"half_edges", "vertices": [[slot..]..], "edges": [[a,b]..],
            "legs_in": [..], "legs_out": [..]}  (+ "aut"/"zero" on output)
  chain    [{"graph": {..}, "coeff": ".."}]
  cechain  {"signature": {..}, "terms": [{"factors": [[letter..]..],
            "coeff": ".."}]}
  algebra  {"signature": {..}, "omega": [[".."..]..],
            "h": [{"k", "tensor": {..}}..], "truncation"}

Readers canonicalize graphs and fold the resulting signs into chain
coefficients; a reader returns the same object its writer came from.
"""

from __future__ import annotations

import json

from .ainfinity import AInfinityAlgebra
from .complexes import GraphChain
from .graphs import RibbonGraph, canonicalize
from .lie import CEChain
from .scalars import json_scalar, parse_scalar
from .superspace import SuperDim, SuperTensor, SymplecticForm
from .tcft import LeggedGraph, canonicalize_legged


def _signature(dim: SuperDim) -> dict:
    return {"n": dim.n, "m": dim.m}


def _dim_of(obj) -> SuperDim:
    return SuperDim(int(obj["n"]), int(obj["m"]))


# ----------------------------------------------------------------- tensors

def tensor_to_json(t: SuperTensor) -> dict:
    return {"signature": _signature(t.dim), "rank": t.rank,
            "terms": [{"word": list(w), "coeff": json_scalar(c)}
                      for w, c in sorted(t.terms.items())]}


def tensor_from_json(obj) -> SuperTensor:
    dim = _dim_of(obj["signature"])
    terms = {tuple(item["word"]): parse_scalar(item["coeff"])
             for item in obj["terms"]}
    rank = obj.get("rank")
    if rank is None:
        if not terms:
            raise ValueError("tensor without terms needs an explicit rank")
        rank = len(next(iter(terms)))
    return SuperTensor(dim, int(rank), terms)


def matrix_to_json(matrix) -> list:
    return [[json_scalar(x) for x in row] for row in matrix]


def matrix_from_json(rows) -> list:
    return [[parse_scalar(x) for x in row] for row in rows]


# ------------------------------------------------------------------ graphs

def graph_to_json(g) -> dict:
    """Canonical graph as a diagram; legged graphs add the leg arrays."""
    out = {"half_edges": sum(g.vtype),
           "vertices": [list(b) for b in g.vertex_blocks()],
           "edges": [list(c) for c in g.chords]}
    if isinstance(g, LeggedGraph):
        out["legs_in"] = list(g.legs_in)
        out["legs_out"] = list(g.legs_out)
    out["aut"] = g.aut
    out["zero"] = g.zero
    return out


def graph_from_json(obj):
    """Read a (possibly legged) graph diagram: (graph, sign) with
    [diagram] = sign * [canonical].  Vertex blocks may use arbitrary
    half-edge ids; they are relabeled in block order."""
    blocks = [list(v) for v in obj["vertices"]]
    relabel = {}
    for blk in blocks:
        for h in blk:
            if h in relabel:
                raise ValueError(f"duplicate half-edge id {h}")
            relabel[h] = len(relabel)
    vtype = tuple(len(b) for b in blocks)
    edges = tuple((relabel[a], relabel[b]) for a, b in obj["edges"])
    legs_in = tuple(relabel[h] for h in obj.get("legs_in", ()))
    legs_out = tuple(relabel[h] for h in obj.get("legs_out", ()))
    if "half_edges" in obj and int(obj["half_edges"]) != len(relabel):
        raise ValueError("half_edges count does not match the vertices")
    if legs_in or legs_out or "legs_in" in obj or "legs_out" in obj:
        return canonicalize_legged((vtype, legs_in, legs_out, edges))
    return canonicalize((vtype, edges))


def chain_to_json(x: GraphChain) -> list:
    return [{"graph": graph_to_json(g), "coeff": json_scalar(c)}
            for g, c in sorted(x.terms.items(), key=lambda t: t[0].sort_key)]


def chain_from_json(items) -> GraphChain:
    acc: dict = {}
    for item in items:
        g, sign = graph_from_json(item["graph"])
        if isinstance(g, LeggedGraph):
            raise ValueError("legged graph inside a plain graph chain")
        c = parse_scalar(item["coeff"]) * sign
        if not g.zero:
            acc[g] = acc.get(g, 0) + c
    return GraphChain(acc)


# --------------------------------------------------------------- CE chains

def ce_chain_to_json(x: CEChain) -> dict:
    return {"signature": _signature(x.dim),
            "terms": [{"factors": [list(w) for w in fs],
                       "coeff": json_scalar(c)}
                      for fs, c in sorted(x.terms.items())]}


def ce_chain_from_json(obj) -> CEChain:
    dim = _dim_of(obj["signature"])
    terms: dict = {}
    for item in obj["terms"]:
        fs = tuple(tuple(w) for w in item["factors"])
        terms[fs] = terms.get(fs, 0) + parse_scalar(item["coeff"])
    return CEChain(dim, terms)


# ---------------------------------------------------------------- algebras

def algebra_to_json(a: AInfinityAlgebra) -> dict:
    return {"signature": _signature(a.dim),
            "omega": matrix_to_json(a.form.matrix),
            "h": [{"k": k, "tensor": tensor_to_json(a.hamiltonians[k])}
                  for k in sorted(a.hamiltonians)],
            "truncation": a.truncation}


def algebra_from_json(obj) -> AInfinityAlgebra:
    dim = _dim_of(obj["signature"])
    form = SymplecticForm(dim, matrix_from_json(obj["omega"]))
    hams = {}
    for item in obj["h"]:
        t = tensor_from_json(item["tensor"])
        if t.dim != dim:
            raise ValueError("Hamiltonian signature differs from the algebra")
        if t.rank != int(item["k"]):
            raise ValueError(f"tensor of rank {t.rank} filed under "
                             f"k={item['k']}")
        hams[int(item["k"])] = t
    return AInfinityAlgebra(form, hams, int(obj["truncation"]))


# ------------------------------------------------------------------- files

def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def save_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def read_algebra(path) -> AInfinityAlgebra:
    return algebra_from_json(load_json(path))
