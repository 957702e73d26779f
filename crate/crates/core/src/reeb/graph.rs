use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// A circle of the page boundary, at level 1/2.
    Boundary,
    Min,
    Max,
    /// Orientable saddle (pair of pants).
    SaddleP,
    /// Non-orientable saddle (Moebius band minus a disk).
    SaddleB,
}

impl VertexKind {
    pub fn is_critical(self) -> bool {
        self != VertexKind::Boundary
    }

    /// Definite folds have absolute index 2; indefinite ones 1.
    pub fn is_definite(self) -> bool {
        matches!(self, VertexKind::Min | VertexKind::Max)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Boundary => "boundary",
            VertexKind::Min => "min",
            VertexKind::Max => "max",
            VertexKind::SaddleP => "saddle_p",
            VertexKind::SaddleB => "saddle_b",
        }
    }

    pub(crate) fn code(self) -> u8 {
        match self {
            VertexKind::Boundary => 0,
            VertexKind::Min => 1,
            VertexKind::Max => 2,
            VertexKind::SaddleP => 3,
            VertexKind::SaddleB => 4,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
    pub rank: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub low: String,
    pub high: String,
    pub twist: bool,
}

/// Raw graph data. Nothing is checked here; see [`super::validate_page`]
/// and [`super::Page`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LabeledReebGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl LabeledReebGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, id: impl Into<String>, kind: VertexKind, rank: u32) -> &mut Self {
        self.vertices.push(Vertex {
            id: id.into(),
            kind,
            rank,
        });
        self
    }

    pub fn edge(
        &mut self,
        id: impl Into<String>,
        low: impl Into<String>,
        high: impl Into<String>,
        twist: bool,
    ) -> &mut Self {
        self.edges.push(Edge {
            id: id.into(),
            low: low.into(),
            high: high.into(),
            twist,
        });
        self
    }

    /// Renames every vertex and edge id through the given maps, leaving
    /// structure untouched. Used by tests to produce relabeled copies.
    pub fn relabeled(
        &self,
        vertex_id: impl Fn(&str) -> String,
        edge_id: impl Fn(&str) -> String,
    ) -> Self {
        Self {
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex {
                    id: vertex_id(&v.id),
                    ..v.clone()
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: edge_id(&e.id),
                    low: vertex_id(&e.low),
                    high: vertex_id(&e.high),
                    twist: e.twist,
                })
                .collect(),
        }
    }
}
