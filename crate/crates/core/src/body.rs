//! Convex spherical polygons and their measurements.
//!
//! Every body, exact or sampled from a smooth outline, is a
//! [`SphericalConvexPolygon`]: a counterclockwise vertex cycle (seen from
//! outside the sphere) inside an open hemisphere. Width and thickness are
//! read off the polar body: the width determined by a supporting
//! hemisphere `H(a)` is `π` minus the largest distance from `a` to the polar
//! body, and the thickness is `π − diam(C^⊕)`.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Rotation3, Vector3};

use crate::enclosing::min_enclosing_cap;
use crate::sphere::{side, Cap, SpherePoint};
use crate::{Error, Result, EPS_ANG};

/// A hemisphere supports a body when no vertex is farther than
/// `π/2 + SUPPORT_SLACK` from its pole ...
pub const SUPPORT_SLACK: f64 = 1e-9;
/// ... and some vertex is within `SUPPORT_CONTACT` of its boundary.
pub const SUPPORT_CONTACT: f64 = 1e-6;
/// Spacing of the poles sampled along each polar edge by the
/// constant-width test.
pub const WIDTH_SAMPLE_STEP: f64 = 5e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct SphericalConvexPolygon {
    vertices: Vec<SpherePoint>,
    witness: Cap,
}

/// Outward deviation of `b` from the arc `a → c`; positive for a left
/// (convex) turn at `b` on a counterclockwise cycle.
fn turn(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> f64 {
    side(a, c, b).map_or(0.0, |s| -s)
}

impl SphericalConvexPolygon {
    /// Validates a counterclockwise vertex cycle.
    pub fn new(vertices: Vec<SpherePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon(format!("{n} vertices")));
        }
        for i in 0..n {
            let d = vertices[i].distance(&vertices[(i + 1) % n]);
            if d <= EPS_ANG {
                return Err(Error::DegeneratePolygon(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
            if d >= PI - EPS_ANG {
                return Err(Error::DegeneratePolygon(format!(
                    "vertices {i} and {} are antipodal",
                    (i + 1) % n
                )));
            }
        }
        let witness = min_enclosing_cap(&vertices)?;
        let tol = EPS_ANG.sin();
        for i in 0..n {
            let a = vertices[i].vector();
            let b = vertices[(i + 1) % n].vector();
            let normal = a.cross(b).normalize();
            for (j, v) in vertices.iter().enumerate() {
                let offset = normal.dot(&(v.vector() - a));
                if offset < -tol {
                    return Err(Error::NotConvex {
                        edge: i,
                        vertex: j,
                        offset,
                    });
                }
            }
        }
        Ok(SphericalConvexPolygon { vertices, witness })
    }

    /// Builds a polygon from an ordered boundary trace of either orientation.
    ///
    /// Repeated points and vertices lying on the arc between their
    /// neighbours (deviation at most [`EPS_ANG`]) are dropped.
    pub fn from_boundary(points: Vec<SpherePoint>) -> Result<Self> {
        let mut pts: Vec<SpherePoint> = Vec::with_capacity(points.len());
        for p in points {
            if pts.last().is_none_or(|q| q.distance(&p) > EPS_ANG) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts[0].distance(&pts[pts.len() - 1]) <= EPS_ANG {
            pts.pop();
        }
        if pts.len() < 3 {
            return Err(Error::DegeneratePolygon(format!("{} vertices", pts.len())));
        }
        let center = min_enclosing_cap(&pts)?.center;
        let winding: f64 = (0..pts.len())
            .map(|i| {
                let a = pts[i].vector();
                let b = pts[(i + 1) % pts.len()].vector();
                a.cross(b).dot(center.vector())
            })
            .sum();
        if winding < 0.0 {
            pts.reverse();
        }
        Self::new(drop_straight_vertices(pts)?)
    }

    /// Smallest convex polygon containing `points`, via a planar hull in the
    /// central projection about the points' enclosing-cap center.
    ///
    /// The output vertices are a subset of the inputs, counterclockwise.
    pub fn convex_hull(points: &[SpherePoint]) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::DegeneratePolygon(format!("{} points", points.len())));
        }
        let center = min_enclosing_cap(points)?.center;
        let w = *center.vector();
        let seed = if w.x.abs() < 0.9 {
            Vector3::x()
        } else {
            Vector3::y()
        };
        let u = seed.cross(&w).normalize();
        let v = w.cross(&u);

        let mut projected: Vec<(f64, f64, SpherePoint)> = points
            .iter()
            .map(|p| {
                let depth = p.vector().dot(&w);
                (p.vector().dot(&u) / depth, p.vector().dot(&v) / depth, *p)
            })
            .collect();
        projected.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

        // Andrew's monotone chain; orientation comes from the sphere itself
        // since central projection maps great circles to lines.
        let mut hull: Vec<SpherePoint> = Vec::with_capacity(points.len() + 1);
        let chain = |hull: &mut Vec<SpherePoint>, p: SpherePoint, floor: usize| {
            while hull.len() >= floor + 2 {
                let k = hull.len();
                if turn(&hull[k - 2], &hull[k - 1], &p) > EPS_ANG {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        };
        for &(_, _, p) in &projected {
            chain(&mut hull, p, 0);
        }
        let lower = hull.len() - 1;
        for &(_, _, p) in projected.iter().rev().skip(1) {
            chain(&mut hull, p, lower);
        }
        hull.pop();
        hull.dedup_by(|a, b| a.distance(b) <= EPS_ANG);
        if hull.len() < 3 {
            return Err(Error::Collinear);
        }
        Self::new(hull)
    }

    pub fn vertices(&self) -> &[SpherePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// A cap of radius below π/2 containing the body (its enclosing cap).
    pub fn witness(&self) -> Cap {
        self.witness
    }

    pub fn edges(&self) -> impl Iterator<Item = (SpherePoint, SpherePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Closed containment with tolerance [`EPS_ANG`].
    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.edges()
            .all(|(a, b)| side(&a, &b, p).is_some_and(|s| s >= -EPS_ANG))
    }

    /// The polar body `{p : C ⊂ H(p)}`, whose vertices are the inward poles
    /// of this body's edges (vertex `i` is dual to edge `i → i+1`).
    pub fn polar(&self) -> Result<Self> {
        let poles = self
            .edges()
            .map(|(a, b)| SpherePoint::from_vector(a.vector().cross(b.vector())))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::DegeneratePolygon("edge without a great circle".into()))?;
        let n = poles.len();
        for i in 0..n {
            if poles[i].distance(&poles[(i + 1) % n]) <= EPS_ANG {
                return Err(Error::DegeneratePolygon(format!(
                    "edges {i} and {} lie on one great circle",
                    (i + 1) % n
                )));
            }
        }
        Self::new(poles)
    }

    /// Largest distance between two points of the body.
    ///
    /// One end of a farthest pair is always a vertex; the other may be
    /// inside an edge once the diameter exceeds π/2.
    pub fn diameter(&self) -> f64 {
        let edges = self.edge_normals();
        self.vertices
            .iter()
            .map(|v| self.farthest_with(v, &edges))
            .fold(0.0, f64::max)
    }

    /// Largest vertex-pair distance, with the pair attaining it.
    pub fn vertex_diameter_pair(&self) -> (usize, usize, f64) {
        let (i, j) = farthest_pair(&self.vertices);
        (i, j, self.vertices[i].distance(&self.vertices[j]))
    }

    /// Largest distance from `p` to a point of the body.
    pub fn farthest_distance(&self, p: &SpherePoint) -> f64 {
        self.farthest_with(p, &self.edge_normals())
    }

    fn edge_normals(&self) -> Vec<Vector3<f64>> {
        self.edges()
            .map(|(a, b)| a.vector().cross(b.vector()).normalize())
            .collect()
    }

    fn farthest_with(&self, p: &SpherePoint, normals: &[Vector3<f64>]) -> f64 {
        let far_vertex = self
            .vertices
            .iter()
            .min_by(|a, b| a.dot(p).total_cmp(&b.dot(p)))
            .expect("polygon has vertices");
        let mut best = p.distance(far_vertex);
        let n = self.vertices.len();
        for (i, normal) in normals.iter().enumerate() {
            // the point of the edge's great circle farthest from p
            let foot = -(p.vector() - normal * normal.dot(p.vector()));
            let Ok(foot) = SpherePoint::from_vector(foot) else {
                continue;
            };
            let (a, b) = (
                self.vertices[i].vector(),
                self.vertices[(i + 1) % n].vector(),
            );
            if a.cross(foot.vector()).dot(normal) > 0.0 && foot.vector().cross(b).dot(normal) > 0.0
            {
                best = best.max(p.distance(&foot));
            }
        }
        best
    }

    /// Does `H(pole)` support the body?
    pub fn is_supported_by(&self, pole: &SpherePoint) -> bool {
        let mut touches = false;
        for v in &self.vertices {
            let d = pole.distance(v);
            if d > FRAC_PI_2 + SUPPORT_SLACK {
                return false;
            }
            touches |= d >= FRAC_PI_2 - SUPPORT_CONTACT;
        }
        touches
    }

    /// Width determined by the supporting hemisphere `H(pole)`.
    pub fn width_at(&self, pole: &SpherePoint) -> Result<f64> {
        if !self.is_supported_by(pole) {
            return Err(Error::NotSupporting);
        }
        Ok(PI - self.polar()?.farthest_distance(pole))
    }

    /// Widths determined by the hemispheres through each edge, i.e. at every
    /// polar vertex, in edge order.
    pub fn widths(&self) -> Result<Vec<f64>> {
        let polar = self.polar()?;
        let normals = polar.edge_normals();
        Ok(polar
            .vertices
            .iter()
            .map(|q| PI - polar.farthest_with(q, &normals))
            .collect())
    }

    /// Minimum width over supporting hemispheres, `π − diam(C^⊕)`.
    pub fn thickness(&self) -> Result<f64> {
        Ok(PI - self.polar()?.diameter())
    }

    /// Spread (max − min) of the widths over the whole polar boundary.
    ///
    /// Polar vertices give the widths at hemispheres through edges; polar
    /// edges give those at hemispheres pivoting about a vertex, which are
    /// sampled every [`WIDTH_SAMPLE_STEP`] radians. Without them a quarter
    /// disk would look like a body of constant width.
    pub fn width_spread(&self) -> Result<f64> {
        let polar = self.polar()?;
        let normals = polar.edge_normals();
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        for (a, b) in polar.edges() {
            let steps = (a.distance(&b) / WIDTH_SAMPLE_STEP).ceil().max(1.0) as usize;
            for s in 0..steps {
                let pole = a.toward(&b, a.distance(&b) * s as f64 / steps as f64)?;
                let w = PI - polar.farthest_with(&pole, &normals);
                min = min.min(w);
                max = max.max(w);
            }
        }
        Ok(max - min)
    }

    pub fn is_constant_width(&self, tol: f64) -> Result<bool> {
        Ok(self.width_spread()? <= tol)
    }

    pub fn min_enclosing_cap(&self) -> Result<Cap> {
        min_enclosing_cap(&self.vertices)
    }

    pub fn rotate(&self, rotation: &Rotation3<f64>) -> Self {
        SphericalConvexPolygon {
            vertices: self.vertices.iter().map(|v| v.rotate(rotation)).collect(),
            witness: self.witness.rotate(rotation),
        }
    }

    /// The polygon with vertex `index` removed, if still a valid body.
    pub fn without_vertex(&self, index: usize) -> Result<Self> {
        let mut vertices = self.vertices.clone();
        vertices.remove(index);
        Self::new(vertices)
    }
}

/// Indices of the pair with the smallest dot product, i.e. farthest apart.
fn farthest_pair(points: &[SpherePoint]) -> (usize, usize) {
    let mut best = (0, 0, f64::INFINITY);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = points[i].dot(&points[j]);
            if d < best.2 {
                best = (i, j, d);
            }
        }
    }
    (best.0, best.1)
}

/// Removes vertices whose outward turn is at most [`EPS_ANG`].
fn drop_straight_vertices(mut pts: Vec<SpherePoint>) -> Result<Vec<SpherePoint>> {
    loop {
        let n = pts.len();
        if n < 3 {
            return Err(Error::Collinear);
        }
        let keep: Vec<bool> = (0..n)
            .map(|i| turn(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]) > EPS_ANG)
            .collect();
        if keep.iter().all(|&k| k) {
            return Ok(pts);
        }
        // Drop every other straight vertex per pass so a removed vertex is
        // never the only witness for its neighbour's straightness.
        let mut dropped_prev = false;
        let mut next = Vec::with_capacity(n);
        for (i, p) in pts.iter().enumerate() {
            if !keep[i] && !dropped_prev {
                dropped_prev = true;
                continue;
            }
            dropped_prev = false;
            next.push(*p);
        }
        pts = next;
    }
}

/// Symmetric Hausdorff distance between two finite vertex sets.
pub fn vertex_set_distance(a: &[SpherePoint], b: &[SpherePoint]) -> f64 {
    let directed = |from: &[SpherePoint], to: &[SpherePoint]| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| p.distance(q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn octant() -> SphericalConvexPolygon {
        SphericalConvexPolygon::new(vec![
            SpherePoint::new(1.0, 0.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 1.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 0.0, 1.0).unwrap(),
        ])
        .unwrap()
    }

    fn regular(center_colat: f64, r: f64, n: usize) -> SphericalConvexPolygon {
        let rot = Rotation3::from_axis_angle(&Vector3::y_axis(), center_colat);
        let pts = (0..n)
            .map(|i| SpherePoint::from_polar(r, 2.0 * PI * i as f64 / n as f64).rotate(&rot))
            .collect();
        SphericalConvexPolygon::new(pts).unwrap()
    }

    #[test]
    fn rejects_clockwise_and_degenerate() {
        let o = octant();
        let mut cw = o.vertices().to_vec();
        cw.reverse();
        assert!(matches!(
            SphericalConvexPolygon::new(cw),
            Err(Error::NotConvex { .. })
        ));
        let v = o.vertices();
        assert!(SphericalConvexPolygon::new(vec![v[0], v[1]]).is_err());
        assert!(SphericalConvexPolygon::new(vec![v[0], v[0], v[1], v[2]]).is_err());
    }

    #[test]
    fn rejects_polygons_outside_a_hemisphere() {
        let ring: Vec<_> = (0..4)
            .map(|i| SpherePoint::from_polar(FRAC_PI_2, FRAC_PI_2 * i as f64))
            .collect();
        assert!(SphericalConvexPolygon::new(ring).is_err());
    }

    #[test]
    fn hull_examples() {
        let o = octant();
        let hull = SphericalConvexPolygon::convex_hull(o.vertices()).unwrap();
        assert_eq!(hull.len(), 3);
        assert!(vertex_set_distance(hull.vertices(), o.vertices()) == 0.0);

        let mut pts = o.vertices().to_vec();
        pts.push(SpherePoint::new(1.0, 1.0, 1.0).unwrap());
        let hull = SphericalConvexPolygon::convex_hull(&pts).unwrap();
        assert_eq!(hull.len(), 3);

        let bad = [
            SpherePoint::new(1.0, 0.0, 0.0).unwrap(),
            SpherePoint::new(-1.0, 0.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 1.0, 0.0).unwrap(),
        ];
        assert_eq!(
            SphericalConvexPolygon::convex_hull(&bad),
            Err(Error::Hemisphere)
        );

        let line: Vec<_> = (0..4)
            .map(|i| SpherePoint::from_polar(FRAC_PI_2, 0.2 * i as f64))
            .collect();
        assert_eq!(
            SphericalConvexPolygon::convex_hull(&line),
            Err(Error::Collinear)
        );
    }

    #[test]
    fn contains_examples() {
        let o = octant();
        assert!(o.contains(&SpherePoint::new(1.0, 1.0, 1.0).unwrap()));
        assert!(!o.contains(&SpherePoint::south()));
        assert!(o.contains(&SpherePoint::new(1.0, 0.0, 0.0).unwrap()));
        assert!(!o.contains(&SpherePoint::new(-1.0, -1.0, -1.0).unwrap()));
    }

    #[test]
    fn octant_is_self_polar() {
        let o = octant();
        let p = o.polar().unwrap();
        assert!(vertex_set_distance(o.vertices(), p.vertices()) < 1e-15);
        assert_abs_diff_eq!(o.diameter(), FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(o.thickness().unwrap(), FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn disk_polar_is_complementary_disk() {
        let r = 0.6;
        let n = 512;
        let disk = regular(0.4, r, n);
        let polar = disk.polar().unwrap();
        let center =
            SpherePoint::north().rotate(&Rotation3::from_axis_angle(&Vector3::y_axis(), 0.4));
        let worst = polar
            .vertices()
            .iter()
            .map(|q| (center.distance(q) - (FRAC_PI_2 - r)).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-3, "{worst}");
    }

    #[test]
    fn disk_measurements() {
        let disk = regular(0.0, 0.4, 1024);
        assert_abs_diff_eq!(disk.diameter(), 0.8, epsilon = 1e-4);
        let disk = regular(0.3, 0.5, 1024);
        assert_abs_diff_eq!(disk.thickness().unwrap(), 1.0, epsilon = 1e-4);
        assert!(disk.is_constant_width(1e-3).unwrap());
        let polar = disk.polar().unwrap();
        let pole = polar.vertices()[17];
        assert_abs_diff_eq!(disk.width_at(&pole).unwrap(), 1.0, epsilon = 1e-4);
    }

    #[test]
    fn width_at_requires_support() {
        let o = octant();
        assert_eq!(o.width_at(&SpherePoint::south()), Err(Error::NotSupporting));
        let inner = SpherePoint::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(o.width_at(&inner), Err(Error::NotSupporting));
        let w = o.width_at(&SpherePoint::north()).unwrap();
        assert_abs_diff_eq!(w, FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn from_boundary_orients_and_merges() {
        // octant traced clockwise with points along its equatorial edge
        let mut pts = vec![SpherePoint::north()];
        for k in (0..=8).rev() {
            pts.push(SpherePoint::from_polar(
                FRAC_PI_2,
                FRAC_PI_2 * k as f64 / 8.0,
            ));
        }
        pts.push(SpherePoint::north());
        let body = SphericalConvexPolygon::from_boundary(pts).unwrap();
        assert_eq!(body.len(), 3);
        assert!(vertex_set_distance(body.vertices(), octant().vertices()) < 1e-15);
    }

    #[test]
    fn polar_rejects_straight_vertices() {
        let pts = vec![
            SpherePoint::north(),
            SpherePoint::from_polar(FRAC_PI_2, 0.0),
            SpherePoint::from_polar(FRAC_PI_2, 0.7),
            SpherePoint::from_polar(FRAC_PI_2, FRAC_PI_2),
        ];
        let body = SphericalConvexPolygon::new(pts).unwrap();
        assert!(matches!(body.polar(), Err(Error::DegeneratePolygon(_))));
    }
}
