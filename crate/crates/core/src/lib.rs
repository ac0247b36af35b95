//! Spherical convex bodies on the unit sphere: polar duals, widths and
//! thickness, minimal enclosing caps, the classical body catalog
//! (disks, quarter-disks, Reuleaux polygons and their polars), closed-form
//! circumradius bounds, and numerical verification suites for them.

pub mod body;
pub mod bounds;
pub mod enclosing;
pub mod shapes;
pub mod sphere;
pub mod verify;

pub use body::SphericalConvexPolygon;
pub use enclosing::{circumcap2, circumcap3, min_enclosing_cap, min_enclosing_cap_bruteforce};
pub use sphere::{distance, Cap, Lune, RightTriangleData, SpherePoint};

/// Angular tolerance shared by every geometric predicate.
pub const EPS_ANG: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vector norm {0:e} is too small to normalize")]
    DegenerateVector(f64),
    #[error("{what} = {value} is outside its domain")]
    Domain { what: &'static str, value: f64 },
    #[error("hemisphere poles are equal or antipodal; not a lune")]
    DegenerateLune,
    #[error("points are not contained in any open hemisphere")]
    Hemisphere,
    #[error("points lie on a single great circle")]
    Collinear,
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("polygon is not convex at edge {edge} (offending vertex {vertex}, offset {offset:e})")]
    NotConvex {
        edge: usize,
        vertex: usize,
        offset: f64,
    },
    #[error("antipodal points have no unique circumscribed cap")]
    Antipodal,
    #[error("hemisphere H(pole) does not support the body")]
    NotSupporting,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
