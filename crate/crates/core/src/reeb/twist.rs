use thiserror::Error;

use super::graph::VertexKind;
use super::page::Page;
use crate::gf2::{BitVec, Span};

/// One `Z/2` twist per edge, in the page's edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistLabeling(Vec<bool>);

impl TwistLabeling {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub(crate) fn to_bitvec(&self) -> BitVec {
        BitVec::from_bools(&self.0)
    }
}

impl From<Vec<bool>> for TwistLabeling {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwistError {
    #[error("labeling has {got} entries but the page has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
}

/// Gauge moves as vectors in `GF(2)^E`: one per vertex (toggle every
/// incident edge) and one per edge incident to a `SaddleB` vertex.
pub(crate) fn gauge_generators(page: &Page) -> Vec<BitVec> {
    let e = page.edge_count();
    let mut gens = Vec::new();
    for v in 0..page.vertex_count() {
        let mut flip = BitVec::zeros(e);
        for edge in page.incident_edges(v) {
            flip.toggle(edge);
        }
        gens.push(flip);
        if page.kind(v) == VertexKind::SaddleB {
            gens.extend(page.incident_edges(v).map(|edge| BitVec::unit(e, edge)));
        }
    }
    gens
}

pub(crate) fn gauge_span(page: &Page) -> Span {
    Span::from_generators(page.edge_count(), gauge_generators(page))
}

/// Whether two labelings of `page`'s edges differ by gauge moves.
pub fn twist_equivalent(
    page: &Page,
    t0: &TwistLabeling,
    t1: &TwistLabeling,
) -> Result<bool, TwistError> {
    for t in [t0, t1] {
        if t.len() != page.edge_count() {
            return Err(TwistError::LengthMismatch {
                expected: page.edge_count(),
                got: t.len(),
            });
        }
    }
    let mut diff = t0.to_bitvec();
    diff.xor_assign(&t1.to_bitvec());
    Ok(gauge_span(page).contains(&diff))
}
