"""Exact computations in the oriented ribbon graph complex and its pairing
with symplectic cyclic A-infinity algebras.

Everything is over exact scalars (rationals, optionally extended by real
square roots); there are no floats anywhere in the computational path.
"""

from .ainfinity import (AInfinityAlgebra, CharacteristicClass,
                        characteristic_class, connected_partition_function,
                        direct_sum, exp_chain, hamiltonian_from_products,
                        inverse_form, partition_function, twist, validate)
from .complexes import (GraphChain, basis, boundary, coboundary,
                        homology_dims, is_boundary, pairing)
from .feynman import (amplitude, integral_I, integral_I_inverse,
                      pair_chain_graph)
from .graphs import (EMPTY_GRAPH, FullyOrderedGraph, RibbonGraph,
                     canonicalize, connected_components, contract_edge,
                     disjoint_union, enumerate_graphs, expand_ideal_edge,
                     ideal_edges)
from .lie import (CEChain, CoinvariantCoordinates, CyclicWord, DarbouxError,
                  SymplecticForm, bracket, ce_differential,
                  coinvariant_reduce, darboux_linear, osp_act, osp_basis)
from .scalars import Surd, format_scalar, json_scalar, parse_scalar
from .superspace import SuperDim, SuperTensor, koszul_apply
from .tcft import (EMPTY_LEGGED, LeggedGraph, MorphismChain,
                   canonicalize_legged, compose, compose_tensors,
                   composition_compatibility, correlation,
                   enumerate_legged_graphs, glue)

__version__ = "0.1.0"
