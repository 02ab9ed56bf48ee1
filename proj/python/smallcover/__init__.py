"""Simple polytopes, characteristic maps over Z_2 and their chromatic numbers."""

from ._smallcover import (
    BadFace,
    CharMap,
    ChromaticCertificate,
    Error,
    InvariantError,
    NoVectorFound,
    ParseError,
    Polytope,
    ResolutionReport,
    ResolutionStep,
    SchemaError,
    bad_faces,
    chromatic_number,
    circuits,
    dual_cyclic,
    f_vector,
    facet_adjacency,
    induced_coloring,
    is_face,
    is_nonsingular_at,
    lift_determinants,
    oriented_valid,
    preset,
    product,
    rank,
    reproduce,
    resolution_vector,
    resolve,
    segment,
    truncate_face,
    validate,
)

__all__ = [
    "BadFace",
    "CharMap",
    "ChromaticCertificate",
    "Error",
    "InvariantError",
    "NoVectorFound",
    "ParseError",
    "Polytope",
    "ResolutionReport",
    "ResolutionStep",
    "SchemaError",
    "bad_faces",
    "chromatic_number",
    "circuits",
    "dual_cyclic",
    "f_vector",
    "facet_adjacency",
    "induced_coloring",
    "is_face",
    "is_nonsingular_at",
    "lift_determinants",
    "oriented_valid",
    "preset",
    "product",
    "rank",
    "reproduce",
    "resolution_vector",
    "resolve",
    "segment",
    "truncate_face",
    "validate",
]
