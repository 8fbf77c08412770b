"""Triangulations of closed surfaces: moves, equivalence, generation, and the
29 irreducible triangulations of the Klein bottle."""

from .isomorphism import canonical_code, decode, equivalent, graph_isomorphic
from .moves import (
    InvalidSplit,
    NotAnEdge,
    NotContractible,
    contract,
    contractible_edges,
    count_triangles_through_edge,
    is_contractible,
    is_irreducible,
    split,
)
from .triangulation import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    SurfaceId,
    Triangulation,
    TriangulationError,
    degree_sequence,
    link_cycle,
    read_tri,
    surface_of,
    write_tri,
)

__all__ = [
    "KLEIN_BOTTLE",
    "PROJECTIVE_PLANE",
    "SPHERE",
    "TORUS",
    "InvalidSplit",
    "NotAnEdge",
    "NotContractible",
    "SurfaceId",
    "Triangulation",
    "TriangulationError",
    "canonical_code",
    "contract",
    "contractible_edges",
    "count_triangles_through_edge",
    "decode",
    "degree_sequence",
    "equivalent",
    "graph_isomorphic",
    "is_contractible",
    "is_irreducible",
    "link_cycle",
    "read_tri",
    "split",
    "surface_of",
    "write_tri",
]
