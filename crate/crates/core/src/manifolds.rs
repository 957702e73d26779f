//! Normal forms of the closed manifolds that carry round fold maps into
//! codimension-one Euclidean space.
//!
//! `HandleSum { a, b }` is the connected sum of `a` copies of
//! `S^1 x S^(n-1)` and `b` copies of the non-orientable bundle
//! `S^1 x~ S^(n-1)`. It bounds a 1-handlebody of dimension `n + 1 >= 5`,
//! which is determined by its handle count and orientability, so the
//! normal form only keeps `b` in `{0, 1}`: `(a, b) -> (a + b - 1, 1)` when
//! `b >= 1`. This identification comes from the handle-slide argument and
//! is the one place where the normal form goes beyond plain bookkeeping.

use std::fmt;

use thiserror::Error;

use crate::reeb::SurfaceType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ManifoldDescriptor {
    Sphere {
        n: u32,
    },
    HandleSum {
        n: u32,
        a: u32,
        b: u32,
    },
    SurfaceProduct {
        n: u32,
        sigma: SurfaceType,
    },
    /// The non-trivial `S^2`-bundle over `S^2`; `n = 4` only.
    TwistedS2S2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Trivial,
    Free { rank: u32 },
    SurfaceGroup { sigma: SurfaceType },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("dimension {0} is below 4")]
    DimensionTooSmall(u32),
    #[error("handle sum with no summands; use the sphere")]
    EmptyHandleSum,
    #[error("surface factor {0} has boundary")]
    SurfaceWithBoundary(SurfaceType),
}

use ManifoldDescriptor::*;

impl ManifoldDescriptor {
    pub fn dimension(&self) -> u32 {
        match *self {
            Sphere { n } | HandleSum { n, .. } | SurfaceProduct { n, .. } => n,
            TwistedS2S2 => 4,
        }
    }

    pub fn validate(&self) -> Result<(), ManifoldError> {
        let n = self.dimension();
        if n < 4 {
            return Err(ManifoldError::DimensionTooSmall(n));
        }
        match *self {
            HandleSum { a: 0, b: 0, .. } => Err(ManifoldError::EmptyHandleSum),
            SurfaceProduct { sigma, .. } if !sigma.is_closed() => {
                Err(ManifoldError::SurfaceWithBoundary(sigma))
            }
            _ => Ok(()),
        }
    }

    pub fn normalize(&self) -> Result<ManifoldDescriptor, ManifoldError> {
        self.validate()?;
        Ok(match *self {
            HandleSum { n, a, b } if b >= 1 => HandleSum {
                n,
                a: a + b - 1,
                b: 1,
            },
            other => other,
        })
    }

    /// Field-wise equality of normal forms; malformed descriptors are never
    /// equivalent to anything.
    pub fn equivalent(&self, other: &ManifoldDescriptor) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        }
    }

    /// Odd dimensions return 0 by Poincare duality.
    pub fn euler_characteristic(&self) -> i64 {
        let n = self.dimension();
        let even = n.is_multiple_of(2);
        match *self {
            Sphere { .. } => {
                if even {
                    2
                } else {
                    0
                }
            }
            HandleSum { a, b, .. } if even => 2 - 2 * i64::from(a + b),
            SurfaceProduct { sigma, .. } if even => 2 * sigma.euler(),
            HandleSum { .. } | SurfaceProduct { .. } => 0,
            TwistedS2S2 => 4,
        }
    }

    pub fn fundamental_group(&self) -> GroupDescriptor {
        match *self {
            Sphere { .. } | TwistedS2S2 => GroupDescriptor::Trivial,
            HandleSum { a, b, .. } => GroupDescriptor::Free { rank: a + b },
            SurfaceProduct { sigma, .. } if sigma == SurfaceType::SPHERE => {
                GroupDescriptor::Trivial
            }
            SurfaceProduct { sigma, .. } => GroupDescriptor::SurfaceGroup { sigma },
        }
    }

    pub fn is_orientable(&self) -> bool {
        match *self {
            HandleSum { b, .. } => b == 0,
            SurfaceProduct { sigma, .. } => sigma.orientable,
            Sphere { .. } | TwistedS2S2 => true,
        }
    }
}

impl fmt::Display for ManifoldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sphere { n } => write!(f, "Sphere n={n}"),
            HandleSum { n, a, b } => write!(f, "HandleSum n={n} a={a} b={b}"),
            SurfaceProduct { n, sigma } => write!(f, "SurfaceProduct n={n} sigma={sigma}"),
            TwistedS2S2 => f.write_str("TwistedS2S2"),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Trivial => f.write_str("trivial"),
            GroupDescriptor::Free { rank } => write!(f, "free of rank {rank}"),
            GroupDescriptor::SurfaceGroup { sigma } => write!(f, "pi1({sigma})"),
        }
    }
}
