"""Enumeration of Cayley digraphs and graphs on the dihedral group D_2p."""

from .actions import ActionKind, Part
from .counting import (
    count_circulant_digraphs,
    count_circulant_digraphs_by_outdegree,
    count_circulant_graphs,
    count_connected_digraphs,
    count_connected_digraphs_by_outdegree,
    count_connected_graphs,
    count_digraphs,
    count_digraphs_by_outdegree,
    count_graphs,
    count_graphs_by_valency,
)
from .dihedral_core import Automorphism, DihedralGroup, GroupElement, NotOddPrime, make_group

__version__ = "0.1.0"
