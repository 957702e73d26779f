//! A-equivalence of round fold maps.
//!
//! Two standard-form maps are A-equivalent iff their pages are isomorphic
//! (rank-preserving, up to twist gauge) and, in dimension 4, their clutching
//! integers agree up to sign. The clutching is zero whenever the page has an
//! indefinite fold or is the disk, so the rule is uniform.

use thiserror::Error;

use crate::reeb::{page_isomorphic, CanonicalPage};
use crate::roundfold::RoundFoldDescriptor;

/// Leading bytes of every canonical encoding.
pub const CANONICAL_MAGIC: &[u8; 4] = b"RFCF";
pub const CANONICAL_VERSION: u8 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("dimensions differ: {0} vs {1}")]
    DimensionMismatch(u32, u32),
}

pub fn a_equivalent(rf0: &RoundFoldDescriptor, rf1: &RoundFoldDescriptor) -> bool {
    rf0.n() == rf1.n()
        && rf0.clutching().unsigned_abs() == rf1.clutching().unsigned_abs()
        && page_isomorphic(rf0.page(), rf1.page())
}

/// Deterministic encoding with `canonical_form(a) == canonical_form(b)` iff
/// `a_equivalent(a, b)`.
///
/// Layout: magic `RFCF`, version byte, `n` (u32 LE), `|clutching|` (u64 LE),
/// then the page encoding of [`CanonicalPage::to_bytes`].
pub fn canonical_form(rf: &RoundFoldDescriptor) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend(CANONICAL_MAGIC);
    out.push(CANONICAL_VERSION);
    out.extend(rf.n().to_le_bytes());
    out.extend(rf.clutching().unsigned_abs().to_le_bytes());
    out.extend(CanonicalPage::of(rf.page()).to_bytes());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub equivalent: bool,
    pub note: Option<&'static str>,
}

/// R-equivalence of standard-form maps, which for `n >= 5` is already
/// decided by the page.
pub fn r_equivalent_standard(
    rf0: &RoundFoldDescriptor,
    rf1: &RoundFoldDescriptor,
) -> Result<Verdict, ClassifyError> {
    if rf0.n() != rf1.n() {
        return Err(ClassifyError::DimensionMismatch(rf0.n(), rf1.n()));
    }
    let note = (rf0.n() == 4).then_some(
        "n = 4: page data alone does not decide R-equivalence; delegated to A-equivalence",
    );
    Ok(Verdict {
        equivalent: a_equivalent(rf0, rf1),
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reeb::standard::{annulus, disk, klein, sphere, torus};
    use crate::reeb::{standard_page, Page, StandardKind};

    fn rf(n: u32, page: Page, k: i64) -> RoundFoldDescriptor {
        RoundFoldDescriptor::new(n, page, k).unwrap()
    }

    fn permuted_torus() -> Page {
        let mut g = torus()
            .graph()
            .relabeled(|v| format!("q{v}"), |e| format!("f{e}"));
        g.vertices.reverse();
        g.edges.rotate_left(1);
        Page::new(g).unwrap()
    }

    #[test]
    fn a_equivalence_examples() {
        assert!(a_equivalent(&rf(4, sphere(), 2), &rf(4, sphere(), -2)));
        assert!(!a_equivalent(&rf(4, sphere(), 1), &rf(4, sphere(), 2)));
        assert!(!a_equivalent(&rf(5, torus(), 0), &rf(5, klein(), 0)));
        assert!(a_equivalent(
            &rf(5, torus(), 0),
            &rf(5, permuted_torus(), 0)
        ));
        assert!(!a_equivalent(&rf(5, torus(), 0), &rf(6, torus(), 0)));
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            canonical_form(&rf(5, torus(), 0)),
            canonical_form(&rf(5, permuted_torus(), 0))
        );
        assert_ne!(
            canonical_form(&rf(5, torus(), 0)),
            canonical_form(&rf(5, klein(), 0))
        );
        assert_eq!(
            canonical_form(&rf(4, sphere(), 3)),
            canonical_form(&rf(4, sphere(), -3))
        );
        let bytes = canonical_form(&rf(5, disk(), 0));
        assert_eq!(&bytes[..4], b"RFCF");
        assert_eq!(bytes[4], 1);
        assert_eq!(&bytes[5..9], &5u32.to_le_bytes());
    }

    #[test]
    fn r_equivalence_examples() {
        let d2 = standard_page(StandardKind::Directed(2)).unwrap();
        let v = r_equivalent_standard(&rf(5, d2, 0), &rf(5, annulus(), 0)).unwrap();
        assert!(v.equivalent && v.note.is_none());
        let v = r_equivalent_standard(&rf(5, disk(), 0), &rf(5, sphere(), 0)).unwrap();
        assert!(!v.equivalent);
        assert!(
            r_equivalent_standard(&rf(6, torus(), 0), &rf(6, torus(), 0))
                .unwrap()
                .equivalent
        );
        let v = r_equivalent_standard(&rf(4, sphere(), 1), &rf(4, sphere(), -1)).unwrap();
        assert!(v.equivalent && v.note.is_some());
        assert_eq!(
            r_equivalent_standard(&rf(4, disk(), 0), &rf(5, disk(), 0)),
            Err(ClassifyError::DimensionMismatch(4, 5))
        );
    }
}
