//! Exhaustive enumeration of pages and the round fold maps they define.
//!
//! Pages are generated top-down. The maximum at rank `s` opens one
//! downward edge end; every lower rank then places a vertex that consumes
//! and opens ends:
//!
//! | vertex | consumes | opens |
//! |--------|----------|-------|
//! | max    | 0        | 1     |
//! | merge  | 1        | 2     |
//! | split  | 2        | 1     |
//! | min    | 1        | 0     |
//! | saddle_b | 1      | 1     |
//!
//! Ends still open below rank 1 become boundary circles. Each connected
//! skeleton is then decorated with one twist labeling per gauge coset, and
//! duplicates are removed by canonical form.

mod oracle;

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::canonical_form;
use crate::manifolds::ManifoldDescriptor;
use crate::reeb::{CanonicalPage, LabeledReebGraph, Page, TwistLabeling, VertexKind};
use crate::roundfold::RoundFoldDescriptor;

pub use oracle::{brute_force_isomorphic, ORACLE_MAX_CRITICAL};

/// Largest `s_max` accepted by [`enumerate_pages`].
pub const MAX_CRITICAL: u32 = 7;

/// Default bound on `|clutching|` for the `n = 4` sphere page.
pub const DEFAULT_K_MAX: u32 = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("s_max must be in 1..={MAX_CRITICAL}, got {0}")]
    OutOfRange(u32),
    #[error("brute-force oracle handles at most {ORACLE_MAX_CRITICAL} critical points, got {0}")]
    OracleLimit(u32),
    #[error("dimension must be at least 4, got {0}")]
    Dimension(u32),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PageFilter {
    pub allow_nonorientable: bool,
    pub allow_closed: bool,
}

impl Default for PageFilter {
    fn default() -> Self {
        Self {
            allow_nonorientable: true,
            allow_closed: true,
        }
    }
}

/// A page under construction, vertices numbered in creation order.
#[derive(Clone)]
struct Skeleton {
    kinds: Vec<(VertexKind, u32)>,
    // (low, high)
    edges: Vec<(usize, usize)>,
    // owners of dangling downward ends
    open: Vec<usize>,
}

impl Skeleton {
    fn push(&mut self, kind: VertexKind, rank: u32, consumed: &[usize], opens: usize) {
        let v = self.kinds.len();
        self.kinds.push((kind, rank));
        for &owner in consumed {
            let at = self
                .open
                .iter()
                .position(|&o| o == owner)
                .expect("open end");
            self.open.remove(at);
            self.edges.push((v, owner));
        }
        self.open.extend(std::iter::repeat_n(v, opens));
    }

    fn distinct_open(&self) -> Vec<usize> {
        let mut owners = self.open.clone();
        owners.sort_unstable();
        owners.dedup();
        owners
    }

    fn open_pairs(&self) -> Vec<[usize; 2]> {
        let owners = self.distinct_open();
        let mut out = Vec::new();
        for (i, &a) in owners.iter().enumerate() {
            if self.open.iter().filter(|&&o| o == a).count() >= 2 {
                out.push([a, a]);
            }
            for &b in &owners[i + 1..] {
                out.push([a, b]);
            }
        }
        out
    }

    fn into_page(mut self) -> Option<Page> {
        for owner in std::mem::take(&mut self.open) {
            self.push(VertexKind::Boundary, 0, &[], 0);
            let b = self.kinds.len() - 1;
            self.edges.push((b, owner));
        }
        let mut graph = LabeledReebGraph::new();
        let mut boundary = 0;
        let names: Vec<String> = self
            .kinds
            .iter()
            .map(|&(kind, rank)| {
                if kind == VertexKind::Boundary {
                    boundary += 1;
                    format!("b{}", boundary - 1)
                } else {
                    format!("v{rank}")
                }
            })
            .collect();
        for (name, &(kind, rank)) in names.iter().zip(&self.kinds) {
            graph.vertex(name.clone(), kind, rank);
        }
        let mut edges = self.edges.clone();
        edges.sort_by_key(|&(lo, hi)| (self.kinds[lo].1, self.kinds[hi].1, lo, hi));
        for (i, (lo, hi)) in edges.into_iter().enumerate() {
            graph.edge(format!("e{i}"), names[lo].clone(), names[hi].clone(), false);
        }
        // Disconnected skeletons are filtered here.
        Page::new(graph).ok()
    }
}

fn extend(sk: Skeleton, rank: u32, filter: PageFilter, out: &mut Vec<Page>) {
    if rank == 0 {
        if filter.allow_closed || !sk.open.is_empty() {
            out.extend(sk.into_page());
        }
        return;
    }
    // Everything below needs an end to attach to, and a fresh maximum could
    // never be joined back to a component with no open ends.
    if sk.open.is_empty() {
        return;
    }
    let mut step = |kind: VertexKind, consumed: &[usize], opens: usize| {
        let mut next = sk.clone();
        next.push(kind, rank, consumed, opens);
        extend(next, rank - 1, filter, out);
    };
    step(VertexKind::Max, &[], 1);
    for owner in sk.distinct_open() {
        step(VertexKind::SaddleP, &[owner], 2);
        step(VertexKind::Min, &[owner], 0);
        if filter.allow_nonorientable {
            step(VertexKind::SaddleB, &[owner], 1);
        }
    }
    for pair in sk.open_pairs() {
        step(VertexKind::SaddleP, &pair, 1);
    }
}

fn skeletons(s: u32, filter: PageFilter) -> Vec<Page> {
    let mut root = Skeleton {
        kinds: Vec::new(),
        edges: Vec::new(),
        open: Vec::new(),
    };
    root.push(VertexKind::Max, s, &[], 1);
    let mut out = Vec::new();
    extend(root, s - 1, filter, &mut out);
    out
}

/// One page per twist coset of the skeleton's gauge quotient.
fn twist_variants(skeleton: &Page, filter: PageFilter) -> Vec<Page> {
    let has_b = skeleton.count_kind(VertexKind::SaddleB) > 0;
    if !filter.allow_nonorientable {
        // Nonzero cosets on a SaddleB-free graph are non-orientable.
        return if has_b {
            Vec::new()
        } else {
            vec![skeleton.clone()]
        };
    }
    let free = crate::reeb::gauge_span_of(skeleton).free_coordinates();
    assert!(free.len() < 32, "cycle rank too large to enumerate");
    (0u32..1 << free.len())
        .map(|mask| {
            let mut bits = vec![false; skeleton.edge_count()];
            for (i, &coord) in free.iter().enumerate() {
                bits[coord] = mask >> i & 1 == 1;
            }
            skeleton.with_twists(&TwistLabeling::new(bits))
        })
        .collect()
}

/// One representative per isomorphism class of valid pages with
/// `1 <= s <= s_max`, sorted by canonical encoding.
pub fn enumerate_pages(s_max: u32, filter: PageFilter) -> Result<Vec<Page>, CensusError> {
    if !(1..=MAX_CRITICAL).contains(&s_max) {
        return Err(CensusError::OutOfRange(s_max));
    }
    let skeletons: Vec<Page> = (1..=s_max)
        .into_par_iter()
        .flat_map_iter(|s| skeletons(s, filter))
        .collect();
    let mut classes: Vec<(Vec<u8>, Page)> = skeletons
        .par_iter()
        .flat_map_iter(|sk| twist_variants(sk, filter))
        .map(|page| (CanonicalPage::of(&page).to_bytes(), page))
        .collect();
    // Ties keep the first-generated page, which depends only on the
    // (deterministic) generation order.
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    classes.dedup_by(|a, b| a.0 == b.0);
    Ok(classes.into_iter().map(|(_, page)| page).collect())
}

/// [`enumerate_pages`] on a dedicated pool with `workers` threads.
pub fn enumerate_pages_with_workers(
    s_max: u32,
    filter: PageFilter,
    workers: usize,
) -> Result<Vec<Page>, CensusError> {
    pool(workers)?.install(|| enumerate_pages(s_max, filter))
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, CensusError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CensusError::Pool(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub canonical: Vec<u8>,
    pub descriptor: RoundFoldDescriptor,
    pub summary: String,
    pub manifold: ManifoldDescriptor,
    pub directed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub n: u32,
    pub s_max: u32,
    pub k_max: u32,
    pub rows: Vec<CensusRow>,
}

fn row(descriptor: RoundFoldDescriptor) -> CensusRow {
    CensusRow {
        canonical: canonical_form(&descriptor),
        summary: descriptor.page().summary(),
        manifold: descriptor.build_total_space(),
        directed: descriptor.is_directed().unwrap_or(false),
        descriptor,
    }
}

/// One row per A-equivalence class of round fold maps with the given `n`
/// and `s <= s_max`. In dimension 4 the sphere page contributes one row
/// per `|clutching| <= k_max`.
pub fn census_table(n: u32, s_max: u32, k_max: u32) -> Result<CensusTable, CensusError> {
    if n < 4 {
        return Err(CensusError::Dimension(n));
    }
    let pages = enumerate_pages(s_max, PageFilter::default())?;
    let mut rows: Vec<CensusRow> = pages
        .into_par_iter()
        .flat_map_iter(|page| {
            let clutchings = if n == 4 && crate::roundfold::is_sphere_page(&page) {
                0..=i64::from(k_max)
            } else {
                0..=0
            };
            clutchings.map(move |k| {
                row(RoundFoldDescriptor::new(n, page.clone(), k)
                    .expect("enumerated pages are admissible"))
            })
        })
        .collect();
    rows.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    Ok(CensusTable {
        n,
        s_max,
        k_max,
        rows,
    })
}

pub fn census_table_with_workers(
    n: u32,
    s_max: u32,
    k_max: u32,
    workers: usize,
) -> Result<CensusTable, CensusError> {
    pool(workers)?.install(|| census_table(n, s_max, k_max))
}
