"""Round trips through the structured-text forms."""

import json
import os
from fractions import Fraction

import pytest

from ribbonhom.ainfinity import validate
from ribbonhom.complexes import GraphChain, basis
from ribbonhom.fixtures import frobenius_pair, twisted_11
from ribbonhom.graphs import canonicalize
from ribbonhom.jsonio import (algebra_from_json, algebra_to_json,
                              ce_chain_from_json, ce_chain_to_json,
                              chain_from_json, chain_to_json, graph_from_json,
                              graph_to_json, read_algebra, tensor_from_json,
                              tensor_to_json)
from ribbonhom.lie import CEChain
from ribbonhom.scalars import Surd
from ribbonhom.superspace import SuperDim, SuperTensor
from ribbonhom.tcft import canonicalize_legged

DATA = os.path.join(os.path.dirname(__file__), "data")


def test_tensor_roundtrip_and_surd_coeff():
    t = SuperTensor(SuperDim(1, 1), 3, {
        (0, 1, 2): Fraction(-5, 3),
        (2, 2, 2): Surd.sqrt(2) * Fraction(1, 2)})
    blob = json.dumps(tensor_to_json(t))
    assert "." not in blob.replace('"."', "")  # no floats anywhere
    assert tensor_from_json(json.loads(blob)) == t
    empty = SuperTensor(SuperDim(1, 0), 2, {})
    assert tensor_from_json(tensor_to_json(empty)) == empty
    with pytest.raises(ValueError):
        tensor_from_json({"signature": {"n": 1, "m": 0}, "terms": []})


def test_graph_roundtrip_with_arbitrary_ids():
    g = canonicalize(((3, 3), ((0, 3), (1, 5), (2, 4))))[0]
    back, sign = graph_from_json(graph_to_json(g))
    assert back is g and sign == 1
    renamed = {"vertices": [[10, 11, 12], [20, 21, 22]],
               "edges": [[10, 20], [11, 22], [12, 21]]}
    back2, _ = graph_from_json(renamed)
    assert back2 is g
    with pytest.raises(ValueError):
        graph_from_json({"vertices": [[0, 1, 0]], "edges": []})
    with pytest.raises(ValueError):
        graph_from_json({"half_edges": 5, "vertices": [[0, 1, 2, 3]],
                         "edges": [[0, 1], [2, 3]]})


def test_legged_graph_roundtrip():
    g = canonicalize_legged(((3, 3), (0,), (1,), ((2, 3), (4, 5))))[0]
    blob = graph_to_json(g)
    assert blob["legs_in"] == list(g.legs_in)
    back, sign = graph_from_json(blob)
    assert back is g and sign == 1


def test_chain_roundtrip_folds_signs():
    chain = GraphChain({g: Fraction(i + 1, 3)
                        for i, g in enumerate(basis(2, 3))})
    assert chain_from_json(chain_to_json(chain)) == chain
    flipped = [{"graph": {"vertices": [[0, 1, 2], [3, 4, 5]],
                          "edges": [[3, 0], [1, 4], [2, 5]]},
                "coeff": "2"}]
    theta = canonicalize(((3, 3), ((0, 3), (1, 4), (2, 5))))[0]
    assert chain_from_json(flipped) == GraphChain({theta: -2})


def test_ce_chain_roundtrip():
    x = CEChain(SuperDim(1, 0), {((0, 0, 1), (1, 1, 0)): Fraction(2, 7)})
    assert ce_chain_from_json(ce_chain_to_json(x)) == x


def test_algebra_roundtrip():
    for a in (frobenius_pair(), twisted_11()):
        b = algebra_from_json(algebra_to_json(a))
        assert b.dim == a.dim and b.truncation == a.truncation
        assert b.hamiltonians == a.hamiltonians
        assert [list(r) for r in b.form.matrix] == \
            [list(r) for r in a.form.matrix]
    blob = algebra_to_json(frobenius_pair())
    blob["h"][0]["k"] = 4
    with pytest.raises(ValueError):
        algebra_from_json(blob)


def test_bundled_algebra_files_load_and_validate():
    a = read_algebra(os.path.join(DATA, "frobenius_02.json"))
    assert validate(a).valid
    b = read_algebra(os.path.join(DATA, "sphere_hyperbolic.json"))
    assert validate(b).valid
    assert b.form.matrix != a.form.matrix
