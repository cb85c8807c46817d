"""Exact combinatorics of colored graphs for colored tensor models."""
from .automorphisms import AutGroup, aut_group, lift, matrix_cycle_check, symmetry_factor
from .boundary import BoundaryResult, amputate, boundary, cone
from .enumeration import (EnumerationRequest, count_correlation_functions, enumerate_graphs,
                          stream_graphs)
from .graphs import (ColoredGraph, DisconnectedGraph, InteractionModel, OpenFeynmanGraph,
                     canonical_form, connected_components, disjoint_union, is_feynman_graph,
                     is_isomorphic, validate)
from .invariants import amplitude_exponent, faces, gurau_degree, is_melon, jackets
from .pi1 import (AbelianInvariants, GroupPresentation, abelianization, gagliardi_presentation,
                  is_crystallization, tietze_simplify)
from .realization import crystallization_pipeline, realize, realize_connected
from .surgery import EdgeRef, connected_sum, degree_bump, pretzel, remove_dipole, separatrix
from .wti import (ExpansionTerm, YTerm, delta_bookkeeping, free_energy_terms, graph_derivative,
                  sde_two_point_terms, y_expansion)

__version__ = "0.1.0"
