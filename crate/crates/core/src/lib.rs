//! Polygonal curve families whose disjointness graphs are the shift graphs
//! `H_m`, together with exact-arithmetic machinery to certify them.
//!
//! * [`geometry`]: rational points, segments, polylines and intersection predicates.
//! * [`shift_graph`]: `H_m`, lex ranking, triangle and clique checks, colorings.
//! * [`constructions`]: the 4-segment and 3-segment families.
//! * [`verification`]: the per-family certification report.
//! * [`io`]: JSON family files, SVG rendering, DOT/JSON graph export.

pub mod constructions;
pub mod error;
pub mod geometry;
pub mod io;
pub mod shift_graph;
pub mod verification;

pub use constructions::{
    down_rank, four_segment_family, three_segment_family, touching_line, up_rank, CurveFamily,
    FamilyKind, FamilyParams, ParamProfile,
};
pub use error::{Error, Result};
pub use geometry::{
    curve_pair_intersections, orient, seg_intersect, tangency_profile, Line, Orientation, PartTag,
    Point, PolylineCurve, Rational, Segment, SegmentIntersection, Tangency,
};
pub use shift_graph::{
    build_shift_graph, chromatic_number_exact, clique_number, formula_coloring, is_triangle_free,
    lex_rank, lex_unrank, ChromaticOutcome, Coloring, Graph, PairGraph, PairVertex, ShiftGraph,
};
pub use verification::{
    combinatorial_oracle, disjointness_graph, part_pattern_audit, verify_family,
    VerificationReport, VerifyOptions,
};
