"""Farey paths, cutting sequences and octahedral volumes of modular links.

From a rational slope this package computes the shortest Farey triangle
path, the rotation orbits of slopes it generates, the AB cutting
sequences and LR words of the corresponding geodesics on the modular
surface, their traces, lengths and quadratic fields, and the octahedral
decomposition counts and volumes of the associated link complements.
Every symbolic algorithm has an independent geometric oracle in the test
suite.
"""

from .cutting import (
    ABWord,
    ContinuedFraction,
    UnsupportedSlopeError,
    ab_sequence,
    ab_sequence_geometric,
    ab_to_lr,
    continued_fraction,
    lr_geometric_oracle,
    slope_to_word,
)
from .farey import (
    INFINITY,
    ONE,
    ZERO,
    FareyPath,
    FareyTriangle,
    NegativeSlopeError,
    NotAChainError,
    NotNeighboursError,
    Slope,
    base_triangle,
    farey_path,
    is_farey_neighbour,
    mediant,
    nonnegative_representative,
    order_as_farey_chain,
    v_orbit,
    v_rotate,
)
from .links import (
    CoverScale,
    LinkFamily,
    OctahedralBlock,
    OctahedronCounts,
    OrbitRecord,
    VolumeReport,
    VolumeRow,
    build_family,
    census,
    cover_scale,
    gamma_sequence,
    v_oct,
    volume_length_table,
)
from .psl2z import (
    EllipticError,
    GeodesicWord,
    MatrixPSL2Z,
    NotHyperbolicError,
    ParabolicError,
    canonical_cyclic,
    field_discriminant,
    generator,
    geodesic_length,
    least_rotation,
    squarefree_part,
    trace_length,
    word_to_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ABWord",
    "ContinuedFraction",
    "CoverScale",
    "EllipticError",
    "FareyPath",
    "FareyTriangle",
    "GeodesicWord",
    "INFINITY",
    "LinkFamily",
    "MatrixPSL2Z",
    "NegativeSlopeError",
    "NotAChainError",
    "NotHyperbolicError",
    "NotNeighboursError",
    "OctahedralBlock",
    "OctahedronCounts",
    "ONE",
    "OrbitRecord",
    "ParabolicError",
    "Slope",
    "UnsupportedSlopeError",
    "VolumeReport",
    "VolumeRow",
    "ZERO",
    "ab_sequence",
    "ab_sequence_geometric",
    "ab_to_lr",
    "base_triangle",
    "build_family",
    "canonical_cyclic",
    "census",
    "continued_fraction",
    "cover_scale",
    "farey_path",
    "field_discriminant",
    "gamma_sequence",
    "generator",
    "geodesic_length",
    "is_farey_neighbour",
    "least_rotation",
    "lr_geometric_oracle",
    "mediant",
    "nonnegative_representative",
    "order_as_farey_chain",
    "slope_to_word",
    "squarefree_part",
    "trace_length",
    "v_oct",
    "v_orbit",
    "v_rotate",
    "volume_length_table",
    "word_to_matrix",
]
