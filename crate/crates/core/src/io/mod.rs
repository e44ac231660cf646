//! File formats: family JSON, SVG drawings, graph exports.

pub mod family_file;
pub mod graph_export;
pub mod svg;

pub use family_file::{parse_family, serialize_family, FamilyFileV1};
pub use svg::{render_svg, RenderOptions, XCompression};
