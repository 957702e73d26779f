//! Rank-preserving isomorphism of pages up to twist gauge.
//!
//! Critical vertices have distinct ranks, so an isomorphism is pinned on
//! them. The only freedom left is permuting boundary vertices that hang off
//! the same critical vertex, and permuting parallel edges between two
//! critical vertices. Boundary edges are gauge-trivial on their own (their
//! degree-1 vertex flips them), so only parallel edges need a search.

use std::ops::Range;

use itertools::Itertools;

use super::graph::VertexKind;
use super::page::Page;
use super::twist::gauge_generators;
use crate::gf2::{BitVec, Span};

/// Page data in rank coordinates, with edges sorted by `(low rank, high rank)`.
struct Frame {
    kinds: Vec<VertexKind>,
    edge_keys: Vec<(u32, u32)>,
    // order[i] is the page edge at canonical position i.
    order: Vec<usize>,
    parallel: Vec<Range<usize>>,
    gauge: Span,
}

impl Frame {
    fn of(page: &Page) -> Self {
        let s = page.critical_count();
        let kinds = (1..=s).map(|r| page.kind_at_rank(r)).collect();
        let mut order: Vec<usize> = (0..page.edge_count()).collect();
        order.sort_by_key(|&e| page.edge_ranks(e));
        let edge_keys: Vec<(u32, u32)> = order.iter().map(|&e| page.edge_ranks(e)).collect();

        let mut parallel = Vec::new();
        let mut start = 0;
        while start < edge_keys.len() {
            let end = start
                + edge_keys[start..]
                    .iter()
                    .take_while(|k| **k == edge_keys[start])
                    .count();
            // rank 0 is a boundary vertex; boundary edges never need permuting.
            if end - start > 1 && edge_keys[start].0 > 0 {
                parallel.push(start..end);
            }
            start = end;
        }

        let gauge = Span::from_generators(
            order.len(),
            gauge_generators(page)
                .into_iter()
                .map(|g| g.permuted(&order)),
        );
        Frame {
            kinds,
            edge_keys,
            order,
            parallel,
            gauge,
        }
    }

    fn same_shape(&self, other: &Frame) -> bool {
        self.kinds == other.kinds && self.edge_keys == other.edge_keys
    }

    fn twists(&self, page: &Page) -> BitVec {
        page.twists().to_bitvec().permuted(&self.order)
    }

    /// Every edge permutation that fixes incidence, as position maps.
    fn automorphisms(&self) -> Vec<Vec<usize>> {
        let identity: Vec<usize> = (0..self.order.len()).collect();
        if self.parallel.is_empty() {
            return vec![identity];
        }
        self.parallel
            .iter()
            .map(|range| range.clone().permutations(range.len()).collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(|choice| {
                let mut perm = identity.clone();
                for (range, images) in self.parallel.iter().zip(choice) {
                    for (slot, src) in range.clone().zip(images) {
                        perm[slot] = src;
                    }
                }
                perm
            })
            .collect()
    }
}

/// Complete invariant of a page up to rank-preserving isomorphism and twist
/// gauge. Ordering is lexicographic on the byte encoding's fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPage {
    kinds: Vec<VertexKind>,
    edges: Vec<(u32, u32)>,
    twists: BitVec,
}

impl CanonicalPage {
    pub fn of(page: &Page) -> Self {
        let frame = Frame::of(page);
        let t = frame.twists(page);
        let twists = frame
            .automorphisms()
            .into_iter()
            .map(|perm| frame.gauge.reduce(&t.permuted(&perm)))
            .min()
            .expect("identity automorphism");
        CanonicalPage {
            kinds: frame.kinds,
            edges: frame.edge_keys,
            twists,
        }
    }

    pub fn critical_count(&self) -> u32 {
        self.kinds.len() as u32
    }

    /// Byte layout: `s` (u32 LE), one kind code per rank, edge count
    /// (u32 LE), `(low rank, high rank)` per edge (u32 LE each), then one
    /// byte (0 or 1) per edge of the reduced twist representative.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.kinds.len() + 9 * self.edges.len());
        out.extend((self.kinds.len() as u32).to_le_bytes());
        out.extend(self.kinds.iter().map(|k| k.code()));
        out.extend((self.edges.len() as u32).to_le_bytes());
        for (lo, hi) in &self.edges {
            out.extend(lo.to_le_bytes());
            out.extend(hi.to_le_bytes());
        }
        out.extend(self.twists.iter().map(u8::from));
        out
    }
}

/// Whether two pages are related by a rank-, kind- and incidence-preserving
/// bijection under which their twist labelings are gauge-equivalent.
pub fn page_isomorphic(p0: &Page, p1: &Page) -> bool {
    let f0 = Frame::of(p0);
    let f1 = Frame::of(p1);
    if !f0.same_shape(&f1) {
        return false;
    }
    let t0 = f0.twists(p0);
    let t1 = f1.twists(p1);
    f1.automorphisms().into_iter().any(|perm| {
        let mut diff = t1.permuted(&perm);
        diff.xor_assign(&t0);
        f0.gauge.contains(&diff)
    })
}
