"""Right-angled Coxeter groups and right-angled buildings."""

from ._rabuild import (
    AxiomError,
    BuildingBall,
    CapExceeded,
    CoxeterSystem,
    Error,
    ParseError,
    PreconditionError,
    TruncatedError,
    antipodal_homology,
    build_by_covering,
    build_regular,
    disjoint_pair,
    find_isomorphism,
    join_homology,
    render_svg,
)

__all__ = [
    "AxiomError",
    "BuildingBall",
    "CapExceeded",
    "CoxeterSystem",
    "Error",
    "ParseError",
    "PreconditionError",
    "TruncatedError",
    "antipodal_homology",
    "build_by_covering",
    "build_regular",
    "disjoint_pair",
    "find_isomorphism",
    "join_homology",
    "render_svg",
]
