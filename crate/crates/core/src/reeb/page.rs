use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::graph::{LabeledReebGraph, VertexKind};
use super::surface::SurfaceType;
use super::twist::TwistLabeling;
use super::validate::{validate_page, ValidationReport};

/// Whether an orientable saddle joins two circles (going up) or splits one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaddleShape {
    /// Two edges below, one above.
    Merge,
    /// One edge below, two above.
    Split,
}

/// A validated page graph with resolved incidence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Page {
    graph: LabeledReebGraph,
    // (low, high) vertex indices, parallel to graph.edges.
    ends: Vec<(usize, usize)>,
    // by_rank[r - 1] is the vertex index of critical rank r.
    by_rank: Vec<usize>,
}

impl Page {
    pub fn new(graph: LabeledReebGraph) -> Result<Self, ValidationReport> {
        let report = validate_page(&graph);
        if !report.is_valid() {
            return Err(report);
        }
        let index: HashMap<&str, usize> = graph
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let ends = graph
            .edges
            .iter()
            .map(|e| (index[e.low.as_str()], index[e.high.as_str()]))
            .collect();
        let mut by_rank: Vec<(u32, usize)> = graph
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind.is_critical())
            .map(|(i, v)| (v.rank, i))
            .collect();
        by_rank.sort_unstable();
        let by_rank = by_rank.into_iter().map(|(_, i)| i).collect();
        Ok(Self {
            graph,
            ends,
            by_rank,
        })
    }

    pub fn graph(&self) -> &LabeledReebGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledReebGraph {
        self.graph
    }

    /// Number of critical points `s`.
    pub fn critical_count(&self) -> u32 {
        self.by_rank.len() as u32
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn kind(&self, vertex: usize) -> VertexKind {
        self.graph.vertices[vertex].kind
    }

    pub fn rank(&self, vertex: usize) -> u32 {
        self.graph.vertices[vertex].rank
    }

    /// Vertex index at critical rank `r` (1-based).
    pub fn vertex_at_rank(&self, r: u32) -> usize {
        self.by_rank[r as usize - 1]
    }

    pub fn kind_at_rank(&self, r: u32) -> VertexKind {
        self.kind(self.vertex_at_rank(r))
    }

    /// `(low, high)` vertex indices of an edge.
    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        self.ends[edge]
    }

    pub fn edge_ranks(&self, edge: usize) -> (u32, u32) {
        let (lo, hi) = self.ends[edge];
        (self.rank(lo), self.rank(hi))
    }

    pub fn incident_edges(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.ends
            .iter()
            .enumerate()
            .filter(move |(_, &(lo, hi))| lo == vertex || hi == vertex)
            .map(|(i, _)| i)
    }

    pub fn count_kind(&self, kind: VertexKind) -> usize {
        self.graph
            .vertices
            .iter()
            .filter(|v| v.kind == kind)
            .count()
    }

    pub fn saddle_shape(&self, vertex: usize) -> Option<SaddleShape> {
        if self.kind(vertex) != VertexKind::SaddleP {
            return None;
        }
        let below = self.ends.iter().filter(|&&(_, hi)| hi == vertex).count();
        Some(if below == 2 {
            SaddleShape::Merge
        } else {
            SaddleShape::Split
        })
    }

    pub fn twists(&self) -> TwistLabeling {
        TwistLabeling::new(self.graph.edges.iter().map(|e| e.twist).collect())
    }

    /// Same page with a different twist labeling.
    ///
    /// # Panics
    /// If the labeling length differs from the edge count.
    pub fn with_twists(&self, twists: &TwistLabeling) -> Page {
        assert_eq!(twists.len(), self.edge_count(), "labeling length mismatch");
        let mut page = self.clone();
        for (e, t) in page.graph.edges.iter_mut().zip(twists.iter()) {
            e.twist = t;
        }
        page
    }

    /// Euler characteristic of the page surface by Morse count.
    pub fn euler(&self) -> i64 {
        self.graph
            .vertices
            .iter()
            .map(|v| match v.kind {
                VertexKind::Boundary => 0,
                VertexKind::Min | VertexKind::Max => 1,
                VertexKind::SaddleP | VertexKind::SaddleB => -1,
            })
            .sum()
    }

    pub fn boundary_count(&self) -> u32 {
        self.count_kind(VertexKind::Boundary) as u32
    }

    /// No `SaddleB` and the twist cocycle is a coboundary, checked by
    /// propagating fiber orientations along a spanning forest.
    pub fn is_orientable(&self) -> bool {
        if self.count_kind(VertexKind::SaddleB) > 0 {
            return false;
        }
        let n = self.vertex_count();
        let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for (e, &(lo, hi)) in self.ends.iter().enumerate() {
            let t = self.graph.edges[e].twist;
            adjacency[lo].push((hi, t));
            adjacency[hi].push((lo, t));
        }
        let mut side: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].expect("visited");
                for &(w, t) in &adjacency[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(sv ^ t);
                            queue.push_back(w);
                        }
                        Some(sw) if sw != sv ^ t => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn surface_type(&self) -> SurfaceType {
        let euler = self.euler();
        let b = self.boundary_count();
        let orientable = self.is_orientable();
        SurfaceType::from_invariants(euler, b, orientable).unwrap_or_else(|| {
            panic!("inconsistent page invariants: euler {euler}, boundary {b}, orientable {orientable}")
        })
    }

    /// `c[r]` is the number of fiber circles strictly between ranks `r` and
    /// `r + 1`, for `r = 0..=s`.
    pub fn regular_fiber_counts(&self) -> Vec<u32> {
        let s = self.critical_count();
        (0..=s)
            .map(|r| {
                (0..self.edge_count())
                    .filter(|&e| {
                        let (lo, hi) = self.edge_ranks(e);
                        lo <= r && r < hi
                    })
                    .count() as u32
            })
            .collect()
    }

    /// Every vertex is a boundary circle, a merge, or the single maximum.
    pub fn has_directed_shape(&self) -> bool {
        (0..self.vertex_count()).all(|v| match self.kind(v) {
            VertexKind::Boundary | VertexKind::Max => true,
            VertexKind::SaddleP => self.saddle_shape(v) == Some(SaddleShape::Merge),
            VertexKind::Min | VertexKind::SaddleB => false,
        })
    }

    /// One-line human summary: `s=4 b=0 chi=0 T2 [min,split,merge,max]`.
    pub fn summary(&self) -> String {
        let kinds: Vec<&str> = (1..=self.critical_count())
            .map(|r| {
                let v = self.vertex_at_rank(r);
                match self.saddle_shape(v) {
                    Some(SaddleShape::Merge) => "merge",
                    Some(SaddleShape::Split) => "split",
                    None => self.kind(v).as_str(),
                }
            })
            .collect();
        format!(
            "s={} b={} chi={} {} [{}]",
            self.critical_count(),
            self.boundary_count(),
            self.euler(),
            self.surface_type(),
            kinds.join(",")
        )
    }
}

impl fmt::Display for Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

impl TryFrom<LabeledReebGraph> for Page {
    type Error = ValidationReport;

    fn try_from(graph: LabeledReebGraph) -> Result<Self, Self::Error> {
        Page::new(graph)
    }
}
