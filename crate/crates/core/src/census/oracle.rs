//! Exhaustive isomorphism check used to cross-examine [`page_isomorphic`].
//!
//! Nothing here reuses the canonical frame or the echelon span: vertex and
//! edge bijections are enumerated outright and the gauge group is expanded
//! element by element.
//!
//! [`page_isomorphic`]: crate::reeb::page_isomorphic

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;

use super::CensusError;
use crate::reeb::{Page, VertexKind};

/// Largest number of critical points the oracle accepts.
pub const ORACLE_MAX_CRITICAL: u32 = 5;

fn gauge_group(page: &Page) -> HashSet<Vec<bool>> {
    let e = page.edge_count();
    let mut gens: Vec<Vec<bool>> = Vec::new();
    for v in 0..page.vertex_count() {
        let mut flip = vec![false; e];
        for (i, slot) in flip.iter_mut().enumerate() {
            let (lo, hi) = page.edge_ends(i);
            *slot = lo == v || hi == v;
        }
        if page.kind(v) == VertexKind::SaddleB {
            for (i, &hit) in flip.iter().enumerate() {
                if hit {
                    let mut single = vec![false; e];
                    single[i] = true;
                    gens.push(single);
                }
            }
        }
        gens.push(flip);
    }
    let mut group: HashSet<Vec<bool>> = HashSet::from([vec![false; e]]);
    let mut frontier: Vec<Vec<bool>> = vec![vec![false; e]];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y: Vec<bool> = x.iter().zip(g).map(|(a, b)| a ^ b).collect();
            if group.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    group
}

/// All vertex bijections `p0 -> p1` that preserve kind and rank.
fn vertex_bijections(p0: &Page, p1: &Page) -> Vec<Vec<usize>> {
    let classes = |p: &Page| {
        let mut m: BTreeMap<(VertexKind, u32), Vec<usize>> = BTreeMap::new();
        for v in 0..p.vertex_count() {
            m.entry((p.kind(v), p.rank(v))).or_default().push(v);
        }
        m
    };
    let (c0, c1) = (classes(p0), classes(p1));
    if c0.keys().ne(c1.keys())
        || c0
            .values()
            .zip(c1.values())
            .any(|(a, b)| a.len() != b.len())
    {
        return Vec::new();
    }
    let per_class: Vec<Vec<Vec<(usize, usize)>>> = c0
        .values()
        .zip(c1.values())
        .map(|(src, dst)| {
            dst.iter()
                .permutations(dst.len())
                .map(|img| src.iter().copied().zip(img.into_iter().copied()).collect())
                .collect()
        })
        .collect();
    per_class
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| {
            let mut map = vec![usize::MAX; p0.vertex_count()];
            for (a, b) in parts.into_iter().flatten() {
                map[a] = b;
            }
            map
        })
        .collect()
}

/// Edge bijections `p0 -> p1` compatible with a vertex bijection.
fn edge_bijections(p0: &Page, p1: &Page, vmap: &[usize]) -> Vec<Vec<usize>> {
    let mut groups0: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..p0.edge_count() {
        let (lo, hi) = p0.edge_ends(e);
        groups0.entry((vmap[lo], vmap[hi])).or_default().push(e);
    }
    let mut groups1: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..p1.edge_count() {
        groups1.entry(p1.edge_ends(e)).or_default().push(e);
    }
    if groups0.keys().ne(groups1.keys())
        || groups0
            .values()
            .zip(groups1.values())
            .any(|(a, b)| a.len() != b.len())
    {
        return Vec::new();
    }
    let per_group: Vec<Vec<Vec<(usize, usize)>>> = groups0
        .values()
        .zip(groups1.values())
        .map(|(src, dst)| {
            dst.iter()
                .permutations(dst.len())
                .map(|img| src.iter().copied().zip(img.into_iter().copied()).collect())
                .collect()
        })
        .collect();
    if per_group.is_empty() {
        return vec![Vec::new()];
    }
    per_group
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| {
            let mut map = vec![usize::MAX; p0.edge_count()];
            for (a, b) in parts.into_iter().flatten() {
                map[a] = b;
            }
            map
        })
        .collect()
}

/// Exhaustive version of [`crate::reeb::page_isomorphic`].
pub fn brute_force_isomorphic(p0: &Page, p1: &Page) -> Result<bool, CensusError> {
    for p in [p0, p1] {
        if p.critical_count() > ORACLE_MAX_CRITICAL {
            return Err(CensusError::OracleLimit(p.critical_count()));
        }
    }
    if p0.vertex_count() != p1.vertex_count() || p0.edge_count() != p1.edge_count() {
        return Ok(false);
    }
    let t0 = p0.twists();
    let t1 = p1.twists();
    let gauge = gauge_group(p0);
    for vmap in vertex_bijections(p0, p1) {
        for emap in edge_bijections(p0, p1, &vmap) {
            let diff: Vec<bool> = (0..p0.edge_count())
                .map(|e| t0.as_slice()[e] ^ t1.as_slice()[emap[e]])
                .collect();
            if gauge.contains(&diff) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
