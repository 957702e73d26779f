//! Serialization, the manifold SPEC grammar, and diagram emitters.

mod json;
mod render;
mod spec;
mod table;

pub use json::{parse_graph, parse_page, serialize_graph, serialize_page, ParseError};
pub use render::{render_critical_values, render_reeb, RenderError, RenderFormat};
pub use spec::{parse_manifold_spec, SpecError};
pub use table::{render_table, TableFormat};
