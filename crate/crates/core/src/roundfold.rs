//! Round fold maps in standard form and the manifolds they live on.
//!
//! A standard-form round fold map `f: M -> R^(n-1)` has singular value set
//! the concentric spheres `C_1, ..., C_s`. The preimage of a ray from the
//! origin is the page surface `F`, and `M` is the open book with page `F`,
//! binding `dF` and trivial monodromy. For `n >= 5` this makes
//! `M = d(F x D^(n-1))`. For `n = 4` and `F = S^2` the two definite folds
//! may be glued with a clutching twist `k`, giving `S^2 x S^2` for even `k`
//! and the twisted bundle for odd `k`.

use std::fmt;

use thiserror::Error;

use crate::manifolds::ManifoldDescriptor;
use crate::reeb::standard::{self, StandardKind};
use crate::reeb::{standard_page, LabeledReebGraph, Page, SurfaceType, VertexKind, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RoundFoldDescriptor {
    n: u32,
    page: Page,
    clutching: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescriptorViolation {
    DimensionTooSmall {
        n: u32,
    },
    Page(Violation),
    /// Clutching is only meaningful in dimension 4.
    ClutchingAboveDimensionFour {
        n: u32,
        clutching: i64,
    },
    /// The disk page forces the trivial gluing.
    ClutchingOnDisk {
        clutching: i64,
    },
    ClutchingOnOtherPage {
        clutching: i64,
    },
}

impl fmt::Display for DescriptorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorViolation::DimensionTooSmall { n } => {
                write!(f, "dimension {n} is below 4")
            }
            DescriptorViolation::Page(v) => write!(f, "page: {v}"),
            DescriptorViolation::ClutchingAboveDimensionFour { n, clutching } => write!(
                f,
                "clutching {clutching} given for n = {n}; the page determines the map when n >= 5"
            ),
            DescriptorViolation::ClutchingOnDisk { clutching } => write!(
                f,
                "clutching {clutching} on the disk page; only the trivial gluing closes up"
            ),
            DescriptorViolation::ClutchingOnOtherPage { clutching } => write!(
                f,
                "clutching {clutching} is only allowed on the two-point sphere page"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Error)]
#[error("{}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct DescriptorReport {
    pub violations: Vec<DescriptorViolation>,
}

impl DescriptorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RoundFoldError {
    #[error("fold directions are only defined on orientable manifolds")]
    NonOrientable,
    #[error("the fold-count Euler formula needs even n, got {0}")]
    OddDimension(u32),
    #[error(
        "open book with clutching {0} on the sphere page has non-trivial monodromy; not modeled"
    )]
    UnsupportedOpenBook(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The fiber gains a circle when crossing toward the origin.
    Inward,
    Outward,
}

/// Connected components of the singular set by absolute index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldCounts {
    /// `n0`: definite folds (absolute index 2).
    pub definite: u32,
    /// `n1`: indefinite folds (absolute index 1).
    pub indefinite: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpenBookDescriptor {
    pub page: SurfaceType,
    pub binding_circles: u32,
    pub monodromy_trivial: bool,
}

/// The two-critical-point page on `S^2`.
pub(crate) fn is_sphere_page(page: &Page) -> bool {
    page.critical_count() == 2
        && page.kind_at_rank(1) == VertexKind::Min
        && page.kind_at_rank(2) == VertexKind::Max
}

fn is_disk_page(page: &Page) -> bool {
    page.critical_count() == 1 && page.boundary_count() == 1
}

fn check(n: u32, page: Option<&Page>, clutching: i64, out: &mut Vec<DescriptorViolation>) {
    if n < 4 {
        out.push(DescriptorViolation::DimensionTooSmall { n });
    }
    let Some(page) = page else { return };
    if clutching == 0 {
        return;
    }
    if is_disk_page(page) {
        out.push(DescriptorViolation::ClutchingOnDisk { clutching });
    } else if !is_sphere_page(page) {
        out.push(DescriptorViolation::ClutchingOnOtherPage { clutching });
    }
    if n >= 5 {
        out.push(DescriptorViolation::ClutchingAboveDimensionFour { n, clutching });
    }
}

/// Checks page validity, the dimension bound and the clutching constraints.
pub fn validate_descriptor(n: u32, graph: &LabeledReebGraph, clutching: i64) -> DescriptorReport {
    let mut violations = Vec::new();
    match Page::new(graph.clone()) {
        Ok(page) => check(n, Some(&page), clutching, &mut violations),
        Err(report) => {
            check(n, None, clutching, &mut violations);
            violations.extend(report.violations.into_iter().map(DescriptorViolation::Page));
        }
    }
    DescriptorReport { violations }
}

impl RoundFoldDescriptor {
    pub fn new(n: u32, page: Page, clutching: i64) -> Result<Self, DescriptorReport> {
        let mut violations = Vec::new();
        check(n, Some(&page), clutching, &mut violations);
        if !violations.is_empty() {
            return Err(DescriptorReport { violations });
        }
        Ok(Self { n, page, clutching })
    }

    pub fn from_graph(
        n: u32,
        graph: LabeledReebGraph,
        clutching: i64,
    ) -> Result<Self, DescriptorReport> {
        let report = validate_descriptor(n, &graph, clutching);
        if !report.is_valid() {
            return Err(report);
        }
        Ok(Self {
            n,
            page: Page::new(graph).expect("validated"),
            clutching,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn page(&self) -> &Page {
        &self.page
    }

    pub fn clutching(&self) -> i64 {
        self.clutching
    }

    pub fn build_total_space(&self) -> ManifoldDescriptor {
        let n = self.n;
        let st = self.page.surface_type();
        if st.is_closed() {
            if n == 4 && st == SurfaceType::SPHERE && self.clutching % 2 != 0 {
                return ManifoldDescriptor::TwistedS2S2;
            }
            return ManifoldDescriptor::SurfaceProduct { n, sigma: st };
        }
        if st == SurfaceType::DISK {
            return ManifoldDescriptor::Sphere { n };
        }
        let handles = (1 - st.euler()) as u32;
        let b = u32::from(!st.orientable);
        ManifoldDescriptor::HandleSum {
            n,
            a: handles - b,
            b,
        }
    }

    pub fn fold_counts(&self) -> FoldCounts {
        let page = &self.page;
        FoldCounts {
            definite: (page.count_kind(VertexKind::Min) + page.count_kind(VertexKind::Max)) as u32,
            indefinite: (page.count_kind(VertexKind::SaddleP)
                + page.count_kind(VertexKind::SaddleB)) as u32,
        }
    }

    /// Numbers of critical points of even and odd index of a generic linear
    /// function composed with the map: `(2 n0, 2 n1)`.
    pub fn linear_critical_parity(&self) -> (u32, u32) {
        let c = self.fold_counts();
        (2 * c.definite, 2 * c.indefinite)
    }

    /// `chi(M) = 2 (n0 - n1)` for even `n`.
    pub fn euler_via_folds(&self) -> Result<i64, RoundFoldError> {
        if !self.n.is_multiple_of(2) {
            return Err(RoundFoldError::OddDimension(self.n));
        }
        let (even, odd) = self.linear_critical_parity();
        Ok(i64::from(even) - i64::from(odd))
    }

    /// Direction of each critical sphere `C_r`, `r = 1..=s`.
    pub fn component_directions(&self) -> Result<Vec<(u32, Direction)>, RoundFoldError> {
        if !self.page.is_orientable() {
            return Err(RoundFoldError::NonOrientable);
        }
        let c = self.page.regular_fiber_counts();
        Ok((1..=self.page.critical_count())
            .map(|r| {
                let (inner, outer) = (c[r as usize - 1], c[r as usize]);
                debug_assert_ne!(
                    inner, outer,
                    "orientable pages change the count at every rank"
                );
                let d = if inner > outer {
                    Direction::Inward
                } else {
                    Direction::Outward
                };
                (r, d)
            })
            .collect())
    }

    pub fn is_directed(&self) -> Result<bool, RoundFoldError> {
        Ok(self
            .component_directions()?
            .iter()
            .all(|(_, d)| *d == Direction::Inward))
    }

    pub fn open_book(&self) -> Result<OpenBookDescriptor, RoundFoldError> {
        if self.clutching != 0 {
            return Err(RoundFoldError::UnsupportedOpenBook(self.clutching));
        }
        Ok(OpenBookDescriptor {
            page: self.page.surface_type(),
            binding_circles: self.page.boundary_count(),
            monodromy_trivial: true,
        })
    }
}

impl fmt::Display for RoundFoldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} clutching={} page {}",
            self.n, self.clutching, self.page
        )
    }
}

fn witness(n: u32, page: Page, clutching: i64) -> RoundFoldDescriptor {
    RoundFoldDescriptor::new(n, page, clutching).expect("witness pages are admissible")
}

/// A standard-form round fold map on `d`, or `None` if `d` is malformed.
pub fn admits_round_fold(d: &ManifoldDescriptor) -> Option<RoundFoldDescriptor> {
    d.validate().ok()?;
    Some(match *d {
        ManifoldDescriptor::Sphere { n } => witness(n, standard::disk(), 0),
        ManifoldDescriptor::HandleSum { n, a, b } => {
            witness(n, standard_page(StandardKind::HandlePage(a, b)).ok()?, 0)
        }
        ManifoldDescriptor::SurfaceProduct { n, sigma } => {
            let kind = if sigma.orientable {
                StandardKind::OrientableClosed(sigma.handles)
            } else {
                StandardKind::NonOrientableClosed(sigma.handles)
            };
            witness(n, standard_page(kind).ok()?, 0)
        }
        ManifoldDescriptor::TwistedS2S2 => witness(4, standard::sphere(), 1),
    })
}

/// A directed round fold map on `d`. Exists exactly for spheres and
/// orientable handle sums.
pub fn admits_directed(d: &ManifoldDescriptor) -> Option<RoundFoldDescriptor> {
    d.validate().ok()?;
    match *d {
        ManifoldDescriptor::Sphere { n } => Some(witness(n, standard::disk(), 0)),
        ManifoldDescriptor::HandleSum { n, a, b: 0 } => Some(witness(
            n,
            standard_page(StandardKind::Directed(a + 1)).ok()?,
            0,
        )),
        _ => None,
    }
}
