//! The body catalog, sampled as convex polygons and parameterized by
//! thickness.
//!
//! Shapes sit in a canonical pose: apex or centroid at the north pole, first
//! feature on the prime meridian. Circular arcs are sampled uniformly in arc
//! parameter and keep their endpoints exactly.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use nalgebra::{Rotation3, Vector3};
use serde::{Deserialize, Serialize};

use crate::body::SphericalConvexPolygon;
use crate::bounds::{isosceles_side, rho_equilateral};
use crate::sphere::SpherePoint;
use crate::{Error, Result};

/// Default sampling density for smooth outlines.
pub const DEFAULT_SAMPLES: usize = 512;

/// Smallest density a [`ShapeSpec`] accepts.
pub const MIN_SAMPLES: usize = 64;

fn domain(what: &'static str, value: f64, ok: bool) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}

/// Tangent basis `(u, w)` at `c` with `u × w = c`, so increasing angle runs
/// counterclockwise seen from outside.
fn tangent_frame(c: &SpherePoint) -> (Vector3<f64>, Vector3<f64>) {
    let v = c.vector();
    let seed = if v.z.abs() < 0.9 {
        Vector3::z()
    } else {
        Vector3::x()
    };
    let w = v.cross(&seed).normalize();
    let u = w.cross(v);
    (u, w)
}

/// Point at distance `r` from `c` in direction `theta` of its tangent frame.
fn on_circle(
    c: &SpherePoint,
    r: f64,
    theta: f64,
    frame: &(Vector3<f64>, Vector3<f64>),
) -> SpherePoint {
    let (sr, cr) = r.sin_cos();
    let (st, ct) = theta.sin_cos();
    let v = c.vector() * cr + (frame.0 * ct + frame.1 * st) * sr;
    SpherePoint::from_vector(v).expect("unit combination")
}

fn frame_angle(c: &SpherePoint, p: &SpherePoint, frame: &(Vector3<f64>, Vector3<f64>)) -> f64 {
    let t = p.vector() - c.vector() * c.dot(p);
    t.dot(&frame.1).atan2(t.dot(&frame.0))
}

/// Samples the circle of radius `r` about `center` from `from` to `to`
/// (both on that circle) along the shorter way round: `samples` points
/// including `from`, excluding `to`.
fn arc_samples(
    center: &SpherePoint,
    r: f64,
    from: &SpherePoint,
    to: &SpherePoint,
    samples: usize,
) -> Vec<SpherePoint> {
    let frame = tangent_frame(center);
    let t0 = frame_angle(center, from, &frame);
    let mut sweep = frame_angle(center, to, &frame) - t0;
    if sweep > PI {
        sweep -= 2.0 * PI;
    } else if sweep < -PI {
        sweep += 2.0 * PI;
    }
    let mut out = Vec::with_capacity(samples);
    out.push(*from);
    for i in 1..samples {
        let t = t0 + sweep * i as f64 / samples as f64;
        out.push(on_circle(center, r, t, &frame));
    }
    out
}

/// Regular `n`-gon inscribed in the circle of radius `r` about `center`.
pub fn make_disk(center: SpherePoint, r: f64, n: usize) -> Result<SphericalConvexPolygon> {
    domain("disk radius", r, r > 0.0 && r < FRAC_PI_2)?;
    domain("samples", n as f64, n >= 3)?;
    let frame = tangent_frame(&center);
    let pts = (0..n)
        .map(|i| on_circle(&center, r, 2.0 * PI * i as f64 / n as f64, &frame))
        .collect();
    SphericalConvexPolygon::new(pts)
}

/// Corners `(c, a, b)` of the quarter-disk of radius `delta`: the apex at the
/// north pole and the two arc ends on the meridians 0 and π/2.
pub fn quarter_disk_corners(delta: f64) -> (SpherePoint, SpherePoint, SpherePoint) {
    (
        SpherePoint::north(),
        SpherePoint::from_polar(delta, 0.0),
        SpherePoint::from_polar(delta, FRAC_PI_2),
    )
}

/// Quarter of the disk of radius `delta` about the north pole, its circular
/// edge sampled with `n` points.
pub fn make_quarter_disk(delta: f64, n: usize) -> Result<SphericalConvexPolygon> {
    domain(
        "quarter-disk thickness",
        delta,
        delta > 0.0 && delta <= FRAC_PI_2,
    )?;
    domain("samples", n as f64, n >= 2)?;
    let (c, a, b) = quarter_disk_corners(delta);
    let mut pts = vec![c];
    pts.extend(
        (0..n - 1).map(|i| SpherePoint::from_polar(delta, FRAC_PI_2 * i as f64 / (n - 1) as f64)),
    );
    pts[1] = a;
    pts.push(b);
    SphericalConvexPolygon::from_boundary(pts)
}

/// Corners of the regular Reuleaux `k`-gon of width `delta`: colatitude
/// chosen so each corner is `delta` from its two opposite corners.
pub fn reuleaux_corners(delta: f64, k: usize) -> Result<Vec<SpherePoint>> {
    domain("Reuleaux width", delta, delta > 0.0 && delta <= FRAC_PI_2)?;
    domain("Reuleaux order", k as f64, k >= 3 && k % 2 == 1)?;
    let kf = k as f64;
    let half_gap = PI * (kf - 1.0) / (2.0 * kf);
    let colat = ((0.5 * delta).sin() / half_gap.sin()).asin();
    Ok((0..k)
        .map(|i| SpherePoint::from_polar(colat, 2.0 * PI * i as f64 / kf))
        .collect())
}

/// Regular Reuleaux `k`-gon (`k` odd) of width `delta`; each side is an arc
/// of radius `delta` about the opposite corner, sampled with about `n / k`
/// points.
pub fn make_reuleaux_odd_gon(delta: f64, k: usize, n: usize) -> Result<SphericalConvexPolygon> {
    let corners = reuleaux_corners(delta, k)?;
    domain("samples", n as f64, n >= k)?;
    let per_arc = (n / k).max(1);
    let half = (k - 1) / 2;
    let mut pts = Vec::with_capacity(per_arc * k);
    for i in 0..k {
        let center = corners[(i + k - half) % k];
        pts.extend(arc_samples(
            &center,
            delta,
            &corners[i],
            &corners[(i + 1) % k],
            per_arc,
        ));
    }
    SphericalConvexPolygon::from_boundary(pts)
}

/// Reuleaux triangle of width `delta`.
pub fn make_reuleaux_triangle(delta: f64, n: usize) -> Result<SphericalConvexPolygon> {
    make_reuleaux_odd_gon(delta, 3, n)
}

/// Equilateral triangle whose three heights equal `delta < π/2`.
pub fn make_equilateral_triangle(delta: f64) -> Result<[SpherePoint; 3]> {
    let rho = rho_equilateral(delta)?;
    Ok([0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0].map(|phi| SpherePoint::from_polar(rho, phi)))
}

/// Isosceles triangle `(e1, g, j)` with apex angle `2 alpha` at `e1` (north
/// pole) and both heights from `g` and `j` equal to `delta`.
pub fn make_isosceles_two_height(alpha: f64, delta: f64) -> Result<[SpherePoint; 3]> {
    domain(
        "half apex angle",
        alpha,
        alpha > 0.0 && alpha <= FRAC_PI_4 + 1e-15,
    )?;
    let side = isosceles_side(alpha, delta)?;
    Ok([
        SpherePoint::north(),
        SpherePoint::from_polar(side, -alpha),
        SpherePoint::from_polar(side, alpha),
    ])
}

/// Polar body of the Reuleaux `k`-gon of width `π − delta`: constant width
/// `delta ∈ [π/2, π)`.
pub fn make_polar_reuleaux(delta: f64, k: usize, n: usize) -> Result<SphericalConvexPolygon> {
    domain("constant width", delta, (FRAC_PI_2..PI).contains(&delta))?;
    make_reuleaux_odd_gon(PI - delta, k, n)?.polar()
}

/// Constant-width body of width `delta ∈ [π/2, π)` whose polar is a Reuleaux
/// triangle.
pub fn make_polar_constant_width(delta: f64, n: usize) -> Result<SphericalConvexPolygon> {
    make_polar_reuleaux(delta, 3, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    Disk,
    QuarterDisk,
    ReuleauxTriangle,
    ReuleauxOddGon,
    EquilateralTriangle,
    IsoscelesTwoHeight,
    PolarConstantWidth,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 7] = [
        ShapeKind::Disk,
        ShapeKind::QuarterDisk,
        ShapeKind::ReuleauxTriangle,
        ShapeKind::ReuleauxOddGon,
        ShapeKind::EquilateralTriangle,
        ShapeKind::IsoscelesTwoHeight,
        ShapeKind::PolarConstantWidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::Disk => "disk",
            ShapeKind::QuarterDisk => "quarter_disk",
            ShapeKind::ReuleauxTriangle => "reuleaux_triangle",
            ShapeKind::ReuleauxOddGon => "reuleaux_odd_gon",
            ShapeKind::EquilateralTriangle => "equilateral_triangle",
            ShapeKind::IsoscelesTwoHeight => "isosceles_two_height",
            ShapeKind::PolarConstantWidth => "polar_constant_width",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        let name = name.replace('-', "_");
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// A catalog body request: kind, thickness and sampling.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeSpec {
    pub kind: ShapeKind,
    pub delta: f64,
    pub n: usize,
    /// Order of a Reuleaux odd-gon.
    pub k: Option<usize>,
    /// Half apex angle of the isosceles two-height triangle.
    pub alpha: Option<f64>,
    pub rotation: Option<Rotation3<f64>>,
}

impl ShapeSpec {
    pub fn new(kind: ShapeKind, delta: f64) -> Self {
        ShapeSpec {
            kind,
            delta,
            n: DEFAULT_SAMPLES,
            k: None,
            alpha: None,
            rotation: None,
        }
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn with_order(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_rotation(mut self, rotation: Rotation3<f64>) -> Self {
        self.rotation = Some(rotation);
        self
    }

    /// Builds the body as a polygon (triangles included).
    pub fn build(&self) -> Result<SphericalConvexPolygon> {
        domain("samples", self.n as f64, self.n >= MIN_SAMPLES)?;
        let body = match self.kind {
            ShapeKind::Disk => {
                domain(
                    "disk thickness",
                    self.delta,
                    self.delta > 0.0 && self.delta < PI,
                )?;
                make_disk(SpherePoint::north(), 0.5 * self.delta, self.n)?
            }
            ShapeKind::QuarterDisk => make_quarter_disk(self.delta, self.n)?,
            ShapeKind::ReuleauxTriangle => make_reuleaux_triangle(self.delta, self.n)?,
            ShapeKind::ReuleauxOddGon => {
                make_reuleaux_odd_gon(self.delta, self.k.unwrap_or(5), self.n)?
            }
            ShapeKind::EquilateralTriangle => {
                SphericalConvexPolygon::new(make_equilateral_triangle(self.delta)?.to_vec())?
            }
            ShapeKind::IsoscelesTwoHeight => {
                let alpha = self.alpha.unwrap_or(FRAC_PI_4);
                SphericalConvexPolygon::new(make_isosceles_two_height(alpha, self.delta)?.to_vec())?
            }
            ShapeKind::PolarConstantWidth => {
                make_polar_reuleaux(self.delta, self.k.unwrap_or(3), self.n)?
            }
        };
        Ok(match &self.rotation {
            Some(r) => body.rotate(r),
            None => body,
        })
    }
}
