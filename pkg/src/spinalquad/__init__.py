"""Spinal quadrangulations of closed orientable surfaces.

Pipeline: a spine graph G is doubled into its 2-fold interlacement,
a rotation system turns the interlacement into a quadrilateral
embedding, and independent checkers certify that the result is a
closed orientable surface with the predicted genus, homology, and
chromatic behavior.
"""

from .coloring import (
    CapExceededError,
    ChromaticEqualityReport,
    ColoringError,
    FaceColoring,
    PropernessReport,
    VertexColoring,
    chromatic_equality_check,
    chromatic_number_exact,
    face_adjacencies,
    face_coloring_from_sources,
    format_face_coloring,
    format_vertex_coloring,
    lift_coloring,
    parse_vertex_coloring,
    verify_proper_faces,
    verify_proper_vertices,
)
from .embed import (
    IsolatedVertexError,
    QuadEmbedding,
    QuadFace,
    RotationError,
    RotationSystem,
    default_rotations,
    format_quad,
    parse_quad,
    permute_rotations,
    quadrangulate,
)
from .families import (
    MinimalityCertificate,
    RecipeError,
    SpineRecipe,
    complete_graph,
    complete_minus_clique,
    complete_minus_edge,
    min_quad_vertices,
    minimality_report,
    random_tree,
    spine_for,
)
from .graph import (
    Graph,
    ParseError,
    components,
    cycle_rank,
    format_edge_list,
    parse_edge_list,
    spanning_forest,
)
from .homology import (
    BettiVector,
    EulerPoincareReport,
    SimplicialComplex,
    betti_numbers,
    boundary_matrix,
    boundary_rank,
    euler_poincare_check,
    format_complex,
    from_graph,
    matrix_rank_exact,
    parse_complex,
)
from .interlace import (
    Interlacement,
    TwinVertex,
    decode_twin,
    encode_twin,
    format_twin_edge_list,
    interlace,
    parse_twin_edge_list,
    parse_twin_token,
    project,
    twin_token,
)
from .verify import (
    ComponentReport,
    DualityReport,
    SurfaceReport,
    ThickeningIdentityReport,
    VerificationError,
    check_duality_formula,
    check_thickening_identities,
    thickening_report,
    verify_surface,
)

__version__ = "1.0.0"

__all__ = [
    "BettiVector",
    "CapExceededError",
    "ChromaticEqualityReport",
    "ColoringError",
    "ComponentReport",
    "DualityReport",
    "EulerPoincareReport",
    "FaceColoring",
    "Graph",
    "Interlacement",
    "IsolatedVertexError",
    "MinimalityCertificate",
    "ParseError",
    "PropernessReport",
    "QuadEmbedding",
    "QuadFace",
    "RecipeError",
    "RotationError",
    "RotationSystem",
    "SimplicialComplex",
    "SpineRecipe",
    "SurfaceReport",
    "ThickeningIdentityReport",
    "TwinVertex",
    "VerificationError",
    "VertexColoring",
    "betti_numbers",
    "boundary_matrix",
    "boundary_rank",
    "check_duality_formula",
    "check_thickening_identities",
    "chromatic_equality_check",
    "chromatic_number_exact",
    "complete_graph",
    "complete_minus_clique",
    "complete_minus_edge",
    "components",
    "cycle_rank",
    "decode_twin",
    "default_rotations",
    "encode_twin",
    "euler_poincare_check",
    "face_adjacencies",
    "face_coloring_from_sources",
    "format_complex",
    "format_edge_list",
    "format_face_coloring",
    "format_quad",
    "format_twin_edge_list",
    "format_vertex_coloring",
    "from_graph",
    "interlace",
    "lift_coloring",
    "matrix_rank_exact",
    "min_quad_vertices",
    "minimality_report",
    "parse_complex",
    "parse_edge_list",
    "parse_quad",
    "parse_twin_edge_list",
    "parse_twin_token",
    "parse_vertex_coloring",
    "permute_rotations",
    "project",
    "quadrangulate",
    "random_tree",
    "spanning_forest",
    "spine_for",
    "thickening_report",
    "twin_token",
    "verify_proper_faces",
    "verify_proper_vertices",
    "verify_surface",
]
