use std::fmt;

/// Topological type of a compact connected surface.
///
/// `handles` is the genus when orientable and the number of crosscaps
/// (at least 1) otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub orientable: bool,
    pub handles: u32,
    pub boundary_circles: u32,
}

impl SurfaceType {
    pub const SPHERE: SurfaceType = SurfaceType::orientable(0, 0);
    pub const TORUS: SurfaceType = SurfaceType::orientable(1, 0);
    pub const PROJECTIVE_PLANE: SurfaceType = SurfaceType::non_orientable(1, 0);
    pub const KLEIN_BOTTLE: SurfaceType = SurfaceType::non_orientable(2, 0);
    pub const DISK: SurfaceType = SurfaceType::orientable(0, 1);
    pub const ANNULUS: SurfaceType = SurfaceType::orientable(0, 2);
    pub const MOEBIUS_BAND: SurfaceType = SurfaceType::non_orientable(1, 1);

    pub const fn orientable(genus: u32, boundary_circles: u32) -> Self {
        Self {
            orientable: true,
            handles: genus,
            boundary_circles,
        }
    }

    /// # Panics
    /// If `crosscaps == 0`.
    pub const fn non_orientable(crosscaps: u32, boundary_circles: u32) -> Self {
        assert!(crosscaps >= 1, "non-orientable surfaces need a crosscap");
        Self {
            orientable: false,
            handles: crosscaps,
            boundary_circles,
        }
    }

    /// Recovers the type from Euler characteristic, boundary count and
    /// orientability. Returns `None` when the data is inconsistent.
    pub fn from_invariants(euler: i64, boundary_circles: u32, orientable: bool) -> Option<Self> {
        let deficit = 2 - i64::from(boundary_circles) - euler;
        if orientable {
            (deficit >= 0 && deficit % 2 == 0)
                .then(|| Self::orientable((deficit / 2) as u32, boundary_circles))
        } else {
            (deficit >= 1).then(|| Self::non_orientable(deficit as u32, boundary_circles))
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_circles == 0
    }

    pub fn genus(&self) -> Option<u32> {
        self.orientable.then_some(self.handles)
    }

    pub fn crosscaps(&self) -> Option<u32> {
        (!self.orientable).then_some(self.handles)
    }

    pub fn euler(&self) -> i64 {
        let h = i64::from(self.handles);
        let b = i64::from(self.boundary_circles);
        if self.orientable {
            2 - 2 * h - b
        } else {
            2 - h - b
        }
    }
}

impl fmt::Display for SurfaceType {
    /// `S2`, `T2`, `RP2`, `Klein`, otherwise `Sg`/`Nk`, with `-bB` for
    /// boundary circles (`S0-b1` is the disk).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.orientable, self.handles) {
            (true, 0) if self.is_closed() => "S2".to_string(),
            (true, 1) if self.is_closed() => "T2".to_string(),
            (false, 1) if self.is_closed() => "RP2".to_string(),
            (false, 2) if self.is_closed() => "Klein".to_string(),
            (true, g) => format!("S{g}"),
            (false, k) => format!("N{k}"),
        };
        if self.is_closed() {
            f.write_str(&name)
        } else {
            write!(f, "{name}-b{}", self.boundary_circles)
        }
    }
}
