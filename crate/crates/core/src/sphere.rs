//! Points, caps, lunes and right triangles on the unit sphere.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Rotation3, Unit, Vector3};
use serde::{Deserialize, Serialize};

use crate::{Error, Result, EPS_ANG};

/// Vectors shorter than this are rejected instead of normalized.
pub const MIN_NORM: f64 = 1e-8;

/// A unit vector in three-space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct SpherePoint(Vector3<f64>);

impl SpherePoint {
    /// Normalizes `(x, y, z)` onto the sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(x, y, z))
    }

    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        let norm = v.norm();
        if !norm.is_finite() || norm < MIN_NORM {
            return Err(Error::DegenerateVector(norm));
        }
        Ok(SpherePoint(v / norm))
    }

    /// Point at colatitude `theta` (from +z) and longitude `phi` (from +x toward +y).
    pub fn from_polar(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        SpherePoint(Vector3::new(st * cp, st * sp, ct))
    }

    pub fn north() -> Self {
        SpherePoint(Vector3::z())
    }

    pub fn south() -> Self {
        SpherePoint(-Vector3::z())
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }

    pub fn y(&self) -> f64 {
        self.0.y
    }

    pub fn z(&self) -> f64 {
        self.0.z
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn antipode(&self) -> Self {
        SpherePoint(-self.0)
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.0.dot(&other.0)
    }

    /// Great-circle distance in `[0, π]`.
    pub fn distance(&self, other: &SpherePoint) -> f64 {
        distance(self, other)
    }

    /// Colatitude measured from the north pole.
    pub fn colatitude(&self) -> f64 {
        self.distance(&SpherePoint::north())
    }

    pub fn rotate(&self, rotation: &Rotation3<f64>) -> Self {
        SpherePoint((rotation * self.0).normalize())
    }

    /// Midpoint of the shorter arc to `other`; `None` for antipodes.
    pub fn midpoint(&self, other: &SpherePoint) -> Option<SpherePoint> {
        SpherePoint::from_vector(self.0 + other.0).ok()
    }

    /// Point reached after travelling `angle` along the great circle toward `toward`.
    pub fn toward(&self, toward: &SpherePoint, angle: f64) -> Result<SpherePoint> {
        let tangent = toward.0 - self.0 * self.0.dot(&toward.0);
        let tangent = SpherePoint::from_vector(tangent)?;
        let (s, c) = angle.sin_cos();
        SpherePoint::from_vector(self.0 * c + tangent.0 * s)
    }
}

impl TryFrom<[f64; 3]> for SpherePoint {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        SpherePoint::new(v[0], v[1], v[2])
    }
}

impl From<SpherePoint> for [f64; 3] {
    fn from(p: SpherePoint) -> Self {
        p.to_array()
    }
}

/// Spherical distance via `atan2(|p × q|, p · q)`, accurate near 0 and π.
pub fn distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let cross = p.0.cross(&q.0).norm();
    cross.atan2(p.0.dot(&q.0))
}

/// Signed angular distance of `p` from the great circle through `a` then `b`.
///
/// Positive on the left of the directed arc (the side of the pole `a × b`).
/// Returns `None` when `a` and `b` do not determine a great circle.
pub fn side(a: &SpherePoint, b: &SpherePoint, p: &SpherePoint) -> Option<f64> {
    let normal = a.0.cross(&b.0);
    let len = normal.norm();
    if len < f64::EPSILON {
        return None;
    }
    let n = normal / len;
    // measured from `a` so nearby points do not cancel
    let off = n.dot(&(p.0 - a.0));
    let along = (p.0 - n * off).norm();
    Some(off.atan2(along))
}

/// Angle at `vertex` between the arcs toward `a` and `b`, in `[0, π]`.
pub fn angle_at(vertex: &SpherePoint, a: &SpherePoint, b: &SpherePoint) -> f64 {
    let v = vertex.0;
    let ta = a.0 - v * v.dot(&a.0);
    let tb = b.0 - v * v.dot(&b.0);
    ta.cross(&tb).norm().atan2(ta.dot(&tb))
}

/// Rotation about `axis` by `angle` (right-handed).
pub fn rotation_about(axis: &SpherePoint, angle: f64) -> Rotation3<f64> {
    Rotation3::from_axis_angle(&Unit::new_unchecked(axis.0), angle)
}

/// Closed spherical disk. Radius is in `[0, π/2]`; zero marks a degenerate
/// single-point cap produced by the enclosing-cap solvers.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cap {
    pub center: SpherePoint,
    pub radius: f64,
}

impl Cap {
    /// A disk in the strict sense, radius in `(0, π/2]`.
    pub fn new(center: SpherePoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius <= FRAC_PI_2) {
            return Err(Error::Domain {
                what: "cap radius",
                value: radius,
            });
        }
        Ok(Cap { center, radius })
    }

    pub fn point(center: SpherePoint) -> Self {
        Cap {
            center,
            radius: 0.0,
        }
    }

    pub fn hemisphere(pole: SpherePoint) -> Self {
        Cap {
            center: pole,
            radius: FRAC_PI_2,
        }
    }

    pub fn contains(&self, p: &SpherePoint) -> bool {
        cap_contains(self, p)
    }

    /// Containment with an explicit angular slack.
    pub fn contains_within(&self, p: &SpherePoint, tol: f64) -> bool {
        self.center.distance(p) <= self.radius + tol
    }

    pub fn rotate(&self, rotation: &Rotation3<f64>) -> Self {
        Cap {
            center: self.center.rotate(rotation),
            radius: self.radius,
        }
    }
}

pub fn cap_contains(cap: &Cap, p: &SpherePoint) -> bool {
    cap.contains_within(p, EPS_ANG)
}

/// Intersection of the hemispheres `H(pole_g)` and `H(pole_h)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lune {
    pole_g: SpherePoint,
    pole_h: SpherePoint,
}

impl Lune {
    pub fn new(pole_g: SpherePoint, pole_h: SpherePoint) -> Result<Self> {
        let d = pole_g.distance(&pole_h);
        if d <= EPS_ANG || d >= PI - EPS_ANG {
            return Err(Error::DegenerateLune);
        }
        Ok(Lune { pole_g, pole_h })
    }

    pub fn pole_g(&self) -> SpherePoint {
        self.pole_g
    }

    pub fn pole_h(&self) -> SpherePoint {
        self.pole_h
    }

    pub fn thickness(&self) -> f64 {
        PI - self.pole_g.distance(&self.pole_h)
    }
}

/// Thickness of the lune; poles that are equal or antipodal do not form one.
pub fn lune_thickness(pole_g: &SpherePoint, pole_h: &SpherePoint) -> Result<f64> {
    Lune::new(*pole_g, *pole_h).map(|l| l.thickness())
}

/// Right spherical triangle with legs `a`, `b`, hypotenuse `c`, and angles
/// `alpha`, `beta` opposite the legs `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RightTriangleData {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl RightTriangleData {
    /// Residuals of the four right-triangle identities:
    /// `tan A = cos β tan C`, `sin A = sin α sin C`, `cos C = cos A cos B`,
    /// `cos C = cot α cot β`.
    ///
    /// The tangent identity is compared relative to `max(1, tan A)` since both
    /// sides blow up at the octant limit.
    pub fn identity_residuals(&self) -> [f64; 4] {
        // tangent identities with denominators cleared, so they stay
        // well-conditioned as C approaches π/2
        let r1 =
            (self.a.sin() * self.c.cos() - self.beta.cos() * self.c.sin() * self.a.cos()).abs();
        let r2 = (self.a.sin() - self.alpha.sin() * self.c.sin()).abs();
        let r3 = (self.c.cos() - self.a.cos() * self.b.cos()).abs();
        let r4 = (self.c.cos() * self.alpha.sin() * self.beta.sin()
            - self.alpha.cos() * self.beta.cos())
        .abs();
        [r1, r2, r3, r4]
    }
}

/// Solves the right triangle from its legs.
pub fn solve_right_triangle(a: f64, b: f64) -> Result<RightTriangleData> {
    for (what, v) in [("leg A", a), ("leg B", b)] {
        if !(v > 0.0 && v < FRAC_PI_2) {
            return Err(Error::Domain { what, value: v });
        }
    }
    let (sa, ca) = a.sin_cos();
    let (sb, cb) = b.sin_cos();
    // sin²C = 1 - cos²A cos²B, expanded to avoid cancellation near C = 0.
    let sin_c = (sa * sa + ca * ca * sb * sb).sqrt();
    let c = sin_c.atan2(ca * cb);
    // tan A = tan α sin B, tan B = tan β sin A.
    let alpha = sa.atan2(ca * sb);
    let beta = sb.atan2(cb * sa);
    Ok(RightTriangleData {
        a,
        b,
        c,
        alpha,
        beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    fn p(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new(x, y, z).unwrap()
    }

    #[test]
    fn distance_corner_cases() {
        assert_eq!(distance(&p(1.0, 0.0, 0.0), &p(0.0, 1.0, 0.0)), FRAC_PI_2);
        assert_eq!(distance(&p(1.0, 0.0, 0.0), &p(-1.0, 0.0, 0.0)), PI);
        let q = p(0.3, -0.2, 0.9);
        assert_eq!(distance(&q, &q), 0.0);
    }

    #[test]
    fn distance_is_accurate_near_zero_and_pi() {
        let a = SpherePoint::from_polar(FRAC_PI_2, 0.0);
        let b = SpherePoint::from_polar(FRAC_PI_2, 1e-9);
        assert_abs_diff_eq!(a.distance(&b), 1e-9, epsilon = 1e-20);
        let c = SpherePoint::from_polar(FRAC_PI_2, PI - 1e-9);
        assert_abs_diff_eq!(a.distance(&c), PI - 1e-9, epsilon = 1e-15);
    }

    #[test]
    fn rejects_near_zero_vector() {
        assert!(matches!(
            SpherePoint::new(1e-9, 0.0, 0.0),
            Err(Error::DegenerateVector(_))
        ));
        assert!(SpherePoint::new(f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn construction_normalizes() {
        let q = p(3.0, 4.0, 12.0);
        assert_abs_diff_eq!(q.vector().norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn right_triangle_pi3_pi4() {
        let t = solve_right_triangle(FRAC_PI_3, FRAC_PI_4).unwrap();
        assert_abs_diff_eq!(t.c, 1.2094292, epsilon = 1e-7);
        assert_abs_diff_eq!(t.alpha, 1.1831996, epsilon = 1e-7);
        assert_abs_diff_eq!(t.beta, 0.8570719, epsilon = 1e-7);
        assert_abs_diff_eq!(t.beta.cos() * t.c.tan(), FRAC_PI_3.tan(), epsilon = 1e-12);
        for r in t.identity_residuals() {
            assert!(r < 1e-12, "{r}");
        }
    }

    #[test]
    fn right_triangle_limits() {
        let t = solve_right_triangle(FRAC_PI_2 - 1e-9, FRAC_PI_2 - 1e-9).unwrap();
        assert_abs_diff_eq!(t.c, FRAC_PI_2, epsilon = 1e-8);
        assert_abs_diff_eq!(t.alpha, FRAC_PI_2, epsilon = 1e-8);
        assert_abs_diff_eq!(t.beta, FRAC_PI_2, epsilon = 1e-8);
        for r in t.identity_residuals() {
            assert!(r < 1e-10, "{r}");
        }

        let t = solve_right_triangle(FRAC_PI_4, 1e-8).unwrap();
        assert_abs_diff_eq!(t.c, FRAC_PI_4, epsilon = 1e-12);
        assert_abs_diff_eq!(t.alpha, FRAC_PI_2, epsilon = 1e-7);
        for r in t.identity_residuals() {
            assert!(r < 1e-10, "{r}");
        }
    }

    #[test]
    fn right_triangle_domain() {
        assert!(solve_right_triangle(0.0, 0.5).is_err());
        assert!(solve_right_triangle(0.5, FRAC_PI_2).is_err());
        assert!(solve_right_triangle(-0.1, 0.5).is_err());
    }

    #[test]
    fn lune_examples() {
        let n = SpherePoint::north();
        let e = SpherePoint::from_polar(FRAC_PI_2, 0.0);
        assert_abs_diff_eq!(lune_thickness(&n, &e).unwrap(), FRAC_PI_2, epsilon = 1e-15);
        let q = SpherePoint::from_polar(2.0 * FRAC_PI_3, 0.3);
        assert_abs_diff_eq!(lune_thickness(&n, &q).unwrap(), FRAC_PI_3, epsilon = 1e-14);
        assert!(matches!(lune_thickness(&n, &n), Err(Error::DegenerateLune)));
        assert!(lune_thickness(&n, &n.antipode()).is_err());
    }

    #[test]
    fn cap_contains_examples() {
        let cap = Cap::new(SpherePoint::north(), FRAC_PI_4).unwrap();
        assert!(cap.contains(&SpherePoint::north()));
        assert!(cap.contains(&SpherePoint::from_polar(FRAC_PI_4, 1.0)));
        assert!(!cap.contains(&SpherePoint::south()));
        assert!(Cap::new(SpherePoint::north(), 0.0).is_err());
        assert!(Cap::new(SpherePoint::north(), 1.6).is_err());
    }

    #[test]
    fn side_sign_and_magnitude() {
        let a = SpherePoint::from_polar(FRAC_PI_2, 0.0);
        let b = SpherePoint::from_polar(FRAC_PI_2, 1.0);
        let up = SpherePoint::from_polar(FRAC_PI_2 - 0.2, 0.5);
        assert_abs_diff_eq!(side(&a, &b, &up).unwrap(), 0.2, epsilon = 1e-14);
        assert!(side(&b, &a, &up).unwrap() < 0.0);
        assert!(side(&a, &a, &up).is_none());
    }

    #[test]
    fn angle_at_octant_corner() {
        let x = p(1.0, 0.0, 0.0);
        let y = p(0.0, 1.0, 0.0);
        let z = p(0.0, 0.0, 1.0);
        assert_abs_diff_eq!(angle_at(&z, &x, &y), FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn toward_travels_along_arc() {
        let n = SpherePoint::north();
        let e = SpherePoint::from_polar(FRAC_PI_2, 0.7);
        let q = n.toward(&e, 0.4).unwrap();
        assert_abs_diff_eq!(q.distance(&n), 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(q.distance(&e), FRAC_PI_2 - 0.4, epsilon = 1e-15);
    }
}
