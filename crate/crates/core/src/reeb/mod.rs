//! Labeled Reeb graphs of page Morse functions.
//!
//! A page is a compact connected surface `F` with a Morse function
//! `h: F -> [1/2, inf)` whose critical values sit at ranks `1..=s`. Its
//! Reeb graph has one vertex per critical point plus one `Boundary` vertex
//! per circle of `dF` (all at rank 0). Edges carry a `Z/2` twist recording
//! whether fiber circles are glued with an orientation flip.

mod graph;
mod iso;
mod page;
pub mod standard;
mod surface;
mod twist;
mod validate;

pub use graph::{Edge, LabeledReebGraph, Vertex, VertexKind};
pub use iso::{page_isomorphic, CanonicalPage};
pub use page::{Page, SaddleShape};
pub use standard::{standard_page, StandardKind};
pub use surface::SurfaceType;
pub(crate) use twist::gauge_span as gauge_span_of;
pub use twist::{twist_equivalent, TwistError, TwistLabeling};
pub use validate::{validate_page, ValidationReport, Violation};
