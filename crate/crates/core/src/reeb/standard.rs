//! Builders for the named pages used as witnesses and fixtures.

use thiserror::Error;

use super::graph::{LabeledReebGraph, VertexKind};
use super::page::Page;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Disk,
    Sphere,
    Annulus,
    Moebius,
    /// `s` boundary circles merged one at a time into a single maximum.
    Directed(u32),
    OrientableClosed(u32),
    NonOrientableClosed(u32),
    /// Disk with `a` orientable and `b` non-orientable 1-handles.
    HandlePage(u32, u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StandardError {
    #[error("directed pages need at least one critical point")]
    DirectedZero,
    #[error("non-orientable closed surfaces need at least one crosscap")]
    NoCrosscaps,
}

/// Builds pages bottom-up; each call appends one vertex at the next rank.
struct Builder {
    graph: LabeledReebGraph,
    rank: u32,
    edges: u32,
    boundaries: u32,
}

impl Builder {
    fn new() -> Self {
        Self {
            graph: LabeledReebGraph::new(),
            rank: 0,
            edges: 0,
            boundaries: 0,
        }
    }

    fn boundary(&mut self) -> String {
        let id = format!("b{}", self.boundaries);
        self.boundaries += 1;
        self.graph.vertex(id.clone(), VertexKind::Boundary, 0);
        id
    }

    /// Adds a critical vertex at the next rank, joined to each of `below`.
    fn critical(&mut self, kind: VertexKind, below: &[&str]) -> String {
        self.rank += 1;
        let id = format!("v{}", self.rank);
        self.graph.vertex(id.clone(), kind, self.rank);
        for low in below {
            self.edge(low, &id);
        }
        id
    }

    fn edge(&mut self, low: &str, high: &str) {
        let id = format!("e{}", self.edges);
        self.edges += 1;
        self.graph.edge(id, low, high, false);
    }

    fn finish(self) -> Page {
        Page::new(self.graph).expect("standard builders produce valid pages")
    }
}

fn directed(s: u32) -> Page {
    let mut b = Builder::new();
    let mut top = b.boundary();
    for _ in 1..s {
        let fresh = b.boundary();
        top = b.critical(VertexKind::SaddleP, &[&top, &fresh]);
    }
    b.critical(VertexKind::Max, &[&top]);
    b.finish()
}

fn orientable_closed(genus: u32) -> Page {
    let mut b = Builder::new();
    let mut top = b.critical(VertexKind::Min, &[]);
    for _ in 0..genus {
        let split = b.critical(VertexKind::SaddleP, &[&top]);
        b.rank += 1;
        let merge = format!("v{}", b.rank);
        b.graph.vertex(merge.clone(), VertexKind::SaddleP, b.rank);
        b.edge(&split, &merge);
        b.edge(&split, &merge);
        top = merge;
    }
    b.critical(VertexKind::Max, &[&top]);
    b.finish()
}

fn nonorientable_closed(crosscaps: u32) -> Page {
    let mut b = Builder::new();
    let mut top = b.critical(VertexKind::Min, &[]);
    for _ in 0..crosscaps {
        top = b.critical(VertexKind::SaddleB, &[&top]);
    }
    b.critical(VertexKind::Max, &[&top]);
    b.finish()
}

// Each orientable handle is a merge with a fresh boundary circle below it;
// each non-orientable one is a SaddleB on the trunk.
fn handle_page(orientable: u32, non_orientable: u32) -> Page {
    let mut b = Builder::new();
    let mut top = b.boundary();
    for _ in 0..orientable {
        let fresh = b.boundary();
        top = b.critical(VertexKind::SaddleP, &[&top, &fresh]);
    }
    for _ in 0..non_orientable {
        top = b.critical(VertexKind::SaddleB, &[&top]);
    }
    b.critical(VertexKind::Max, &[&top]);
    b.finish()
}

pub fn standard_page(kind: StandardKind) -> Result<Page, StandardError> {
    Ok(match kind {
        StandardKind::Disk => directed(1),
        StandardKind::Sphere => orientable_closed(0),
        StandardKind::Annulus => directed(2),
        StandardKind::Moebius => handle_page(0, 1),
        StandardKind::Directed(0) => return Err(StandardError::DirectedZero),
        StandardKind::Directed(s) => directed(s),
        StandardKind::OrientableClosed(g) => orientable_closed(g),
        StandardKind::NonOrientableClosed(0) => return Err(StandardError::NoCrosscaps),
        StandardKind::NonOrientableClosed(k) => nonorientable_closed(k),
        StandardKind::HandlePage(a, b) => handle_page(a, b),
    })
}

/// Infallible shorthands for the fixed pages.
pub fn disk() -> Page {
    directed(1)
}

pub fn sphere() -> Page {
    orientable_closed(0)
}

pub fn annulus() -> Page {
    directed(2)
}

pub fn moebius() -> Page {
    handle_page(0, 1)
}

pub fn torus() -> Page {
    orientable_closed(1)
}

/// The torus graph with the second of the two parallel edges twisted.
pub fn klein() -> Page {
    let torus = torus();
    let mut graph = torus.into_graph();
    let parallel = graph
        .edges
        .iter_mut()
        .rfind(|e| e.low == "v2" && e.high == "v3")
        .expect("torus has parallel edges");
    parallel.twist = true;
    Page::new(graph).expect("valid")
}
