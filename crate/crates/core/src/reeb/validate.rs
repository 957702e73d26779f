use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use super::graph::{LabeledReebGraph, VertexKind};

/// A single broken structural rule, naming the offending ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertexId {
        id: String,
    },
    DuplicateEdgeId {
        id: String,
    },
    UnknownEndpoint {
        edge: String,
        vertex: String,
    },
    BoundaryRank {
        vertex: String,
        rank: u32,
    },
    NoCriticalVertices,
    CriticalRankZero {
        vertex: String,
    },
    DuplicateRank {
        rank: u32,
        vertices: Vec<String>,
    },
    MissingRank {
        rank: u32,
    },
    EdgeNotAscending {
        edge: String,
        low_rank: u32,
        high_rank: u32,
    },
    Degree {
        vertex: String,
        kind: VertexKind,
        below: usize,
        above: usize,
    },
    Disconnected {
        components: usize,
    },
    TopNotMax {
        vertex: String,
        kind: VertexKind,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertexId { id } => write!(f, "duplicate vertex id `{id}`"),
            Violation::DuplicateEdgeId { id } => write!(f, "duplicate edge id `{id}`"),
            Violation::UnknownEndpoint { edge, vertex } => {
                write!(f, "edge `{edge}` references unknown vertex `{vertex}`")
            }
            Violation::BoundaryRank { vertex, rank } => {
                write!(f, "boundary vertex `{vertex}` has rank {rank}, expected 0")
            }
            Violation::NoCriticalVertices => write!(f, "page has no critical vertex (s = 0)"),
            Violation::CriticalRankZero { vertex } => {
                write!(f, "critical vertex `{vertex}` has rank 0")
            }
            Violation::DuplicateRank { rank, vertices } => {
                write!(
                    f,
                    "rank {rank} is shared by critical vertices {}",
                    vertices.join(", ")
                )
            }
            Violation::MissingRank { rank } => write!(f, "no critical vertex at rank {rank}"),
            Violation::EdgeNotAscending {
                edge,
                low_rank,
                high_rank,
            } => write!(
                f,
                "edge `{edge}` does not ascend (low rank {low_rank}, high rank {high_rank})"
            ),
            Violation::Degree {
                vertex,
                kind,
                below,
                above,
            } => write!(
                f,
                "vertex `{vertex}` of kind {kind} has {below} edge(s) below and {above} above"
            ),
            Violation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            Violation::TopNotMax { vertex, kind } => {
                write!(f, "top vertex `{vertex}` is {kind}, expected max")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

fn degree_ok(kind: VertexKind, below: usize, above: usize) -> bool {
    match kind {
        VertexKind::Boundary | VertexKind::Min => (below, above) == (0, 1),
        VertexKind::Max => (below, above) == (1, 0),
        VertexKind::SaddleP => matches!((below, above), (2, 1) | (1, 2)),
        VertexKind::SaddleB => (below, above) == (1, 1),
    }
}

pub fn validate_page(graph: &LabeledReebGraph) -> ValidationReport {
    let mut out = Vec::new();

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        if index.insert(v.id.as_str(), i).is_some() {
            out.push(Violation::DuplicateVertexId { id: v.id.clone() });
        }
    }
    let mut edge_ids = HashSet::new();
    for e in &graph.edges {
        if !edge_ids.insert(e.id.as_str()) {
            out.push(Violation::DuplicateEdgeId { id: e.id.clone() });
        }
    }

    // Ranks.
    let mut by_rank: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
    for v in &graph.vertices {
        if v.kind == VertexKind::Boundary {
            if v.rank != 0 {
                out.push(Violation::BoundaryRank {
                    vertex: v.id.clone(),
                    rank: v.rank,
                });
            }
        } else if v.rank == 0 {
            out.push(Violation::CriticalRankZero {
                vertex: v.id.clone(),
            });
        } else {
            by_rank.entry(v.rank).or_default().push(&v.id);
        }
    }
    let critical = graph
        .vertices
        .iter()
        .filter(|v| v.kind.is_critical())
        .count();
    if critical == 0 {
        out.push(Violation::NoCriticalVertices);
    } else {
        for (rank, ids) in &by_rank {
            if ids.len() > 1 {
                out.push(Violation::DuplicateRank {
                    rank: *rank,
                    vertices: ids.iter().map(|s| s.to_string()).collect(),
                });
            }
        }
        let s = critical as u32;
        for rank in 1..=s {
            if !by_rank.contains_key(&rank) {
                out.push(Violation::MissingRank { rank });
            }
        }
    }

    // Incidence.
    let n = graph.vertices.len();
    let mut below = vec![0usize; n];
    let mut above = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in &graph.edges {
        let lo = index.get(e.low.as_str()).copied();
        let hi = index.get(e.high.as_str()).copied();
        for (end, id) in [(lo, &e.low), (hi, &e.high)] {
            if end.is_none() {
                out.push(Violation::UnknownEndpoint {
                    edge: e.id.clone(),
                    vertex: id.clone(),
                });
            }
        }
        let (Some(lo), Some(hi)) = (lo, hi) else {
            continue;
        };
        let (lr, hr) = (graph.vertices[lo].rank, graph.vertices[hi].rank);
        if lr >= hr {
            out.push(Violation::EdgeNotAscending {
                edge: e.id.clone(),
                low_rank: lr,
                high_rank: hr,
            });
        }
        above[lo] += 1;
        below[hi] += 1;
        let (a, b) = (find(&mut parent, lo), find(&mut parent, hi));
        parent[a] = b;
    }
    for (i, v) in graph.vertices.iter().enumerate() {
        if !degree_ok(v.kind, below[i], above[i]) {
            out.push(Violation::Degree {
                vertex: v.id.clone(),
                kind: v.kind,
                below: below[i],
                above: above[i],
            });
        }
    }
    let components = (0..n).filter(|&i| find(&mut parent, i) == i).count();
    if components > 1 {
        out.push(Violation::Disconnected { components });
    }

    if let Some(top) = graph
        .vertices
        .iter()
        .filter(|v| v.kind.is_critical())
        .max_by_key(|v| v.rank)
    {
        if top.kind != VertexKind::Max {
            out.push(Violation::TopNotMax {
                vertex: top.id.clone(),
                kind: top.kind,
            });
        }
    }

    ValidationReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexKind::*;

    fn disk() -> LabeledReebGraph {
        let mut g = LabeledReebGraph::new();
        g.vertex("b", Boundary, 0)
            .vertex("M", Max, 1)
            .edge("e", "b", "M", false);
        g
    }

    #[test]
    fn disk_is_valid() {
        assert!(validate_page(&disk()).is_valid());
    }

    #[test]
    fn two_disks_are_disconnected() {
        let mut g = disk();
        g.vertex("b2", Boundary, 0)
            .vertex("M2", Max, 2)
            .edge("e2", "b2", "M2", false);
        let report = validate_page(&g);
        assert_eq!(
            report.violations,
            vec![Violation::Disconnected { components: 2 }]
        );
    }

    #[test]
    fn merge_on_top_is_rejected() {
        // Annulus with the Max removed: the merge's upward end has nowhere to go.
        let mut g = LabeledReebGraph::new();
        g.vertex("b0", Boundary, 0)
            .vertex("b1", Boundary, 0)
            .vertex("m", SaddleP, 1)
            .edge("e0", "b0", "m", false)
            .edge("e1", "b1", "m", false);
        let report = validate_page(&g);
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::TopNotMax { vertex, kind: SaddleP } if vertex == "m")));
        assert!(report.iter().any(|v| matches!(v, Violation::Degree { .. })));
    }

    #[test]
    fn empty_graph_has_no_critical_vertices() {
        let report = validate_page(&LabeledReebGraph::new());
        assert_eq!(report.violations, vec![Violation::NoCriticalVertices]);
    }

    #[test]
    fn rank_errors_are_reported() {
        let mut g = LabeledReebGraph::new();
        g.vertex("a", Min, 1)
            .vertex("b", Max, 1)
            .vertex("c", Boundary, 3)
            .edge("e", "a", "b", false)
            .edge("f", "a", "zz", false);
        let report = validate_page(&g);
        let has = |pred: &dyn Fn(&Violation) -> bool| report.iter().any(pred);
        assert!(has(&|v| matches!(
            v,
            Violation::DuplicateRank { rank: 1, .. }
        )));
        assert!(has(&|v| matches!(v, Violation::MissingRank { rank: 2 })));
        assert!(has(&|v| matches!(
            v,
            Violation::BoundaryRank { rank: 3, .. }
        )));
        assert!(has(&|v| matches!(v, Violation::EdgeNotAscending { .. })));
        assert!(has(
            &|v| matches!(v, Violation::UnknownEndpoint { vertex, .. } if vertex == "zz")
        ));
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let mut g = disk();
        g.vertex("M", Min, 2).edge("e", "b", "M", false);
        let report = validate_page(&g);
        assert!(report
            .iter()
            .any(|v| *v == Violation::DuplicateVertexId { id: "M".into() }));
        assert!(report
            .iter()
            .any(|v| *v == Violation::DuplicateEdgeId { id: "e".into() }));
    }
}
