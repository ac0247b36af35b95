//! Circumscribed caps of two or three points and the minimal enclosing cap of
//! a point set.
//!
//! The fast solver is Welzl's randomized incremental algorithm with the
//! move-to-front heuristic, carried over to the sphere: inside an open
//! hemisphere every circle through two or three points bounds a unique cap of
//! radius below π/2, so the planar basis argument goes through unchanged.
//! [`min_enclosing_cap_bruteforce`] is an independent O(n⁴) oracle.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sphere::{Cap, SpherePoint};
use crate::{Error, Result, EPS_ANG};

/// Seed used by [`min_enclosing_cap`] when the caller does not supply an RNG.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Largest input accepted by the brute-force oracle.
pub const BRUTEFORCE_MAX_POINTS: usize = 200;

/// Cap with `p` and `q` diametrically opposite on its boundary.
///
/// Coincident points give the radius-0 cap at `p`.
pub fn circumcap2(p: &SpherePoint, q: &SpherePoint) -> Result<Cap> {
    let d = p.distance(q);
    if d >= PI - EPS_ANG {
        return Err(Error::Antipodal);
    }
    if d == 0.0 {
        return Ok(Cap::point(*p));
    }
    let center = p.midpoint(q).ok_or(Error::Antipodal)?;
    Ok(Cap {
        center,
        radius: 0.5 * d,
    })
}

/// Cap whose boundary circle passes through `a`, `b` and `c`.
///
/// Of the two caps bounded by that circle the one with radius below π/2 is
/// returned. Triples on one great circle (including repeated points) have no
/// such cap and yield [`Error::Collinear`].
pub fn circumcap3(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> Result<Cap> {
    let (va, vb, vc) = (a.vector(), b.vector(), c.vector());
    let normal = (vb - va).cross(&(vc - va));
    let center = SpherePoint::from_vector(normal).map_err(|_| Error::Collinear)?;
    let center = if center.dot(a) < 0.0 {
        center.antipode()
    } else {
        center
    };
    let radius = (center.distance(a) + center.distance(b) + center.distance(c)) / 3.0;
    if radius >= FRAC_PI_2 - EPS_ANG {
        return Err(Error::Collinear);
    }
    Ok(Cap { center, radius })
}

/// Largest of the pair caps of a triple; the fallback for collinear triples.
fn widest_pair_cap(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> Result<Cap> {
    let mut best: Option<Cap> = None;
    for (p, q) in [(a, b), (b, c), (a, c)] {
        let cap = circumcap2(p, q).map_err(|_| Error::Hemisphere)?;
        if best.is_none_or(|b| cap.radius > b.radius) {
            best = Some(cap);
        }
    }
    Ok(best.expect("three pairs"))
}

fn check_result(cap: Cap, points: &[SpherePoint]) -> Result<Cap> {
    if cap.radius > FRAC_PI_2 - EPS_ANG || !points.iter().all(|p| cap.contains(p)) {
        return Err(Error::Hemisphere);
    }
    Ok(Cap {
        radius: cap.radius.clamp(0.0, FRAC_PI_2),
        ..cap
    })
}

/// Minimal enclosing cap with the solver's default seed.
pub fn min_enclosing_cap(points: &[SpherePoint]) -> Result<Cap> {
    min_enclosing_cap_seeded(points, DEFAULT_SEED)
}

/// Minimal enclosing cap with the input shuffle seeded by `seed`.
pub fn min_enclosing_cap_seeded(points: &[SpherePoint], seed: u64) -> Result<Cap> {
    min_enclosing_cap_with_rng(points, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Minimal enclosing cap; `rng` only drives the input shuffle.
pub fn min_enclosing_cap_with_rng<R: Rng + ?Sized>(
    points: &[SpherePoint],
    rng: &mut R,
) -> Result<Cap> {
    if points.is_empty() {
        return Err(Error::Domain {
            what: "point count",
            value: 0.0,
        });
    }
    let mut pts = points.to_vec();
    pts.shuffle(rng);

    let mut cap = Cap::point(pts[0]);
    for i in 1..pts.len() {
        if cap.contains(&pts[i]) {
            continue;
        }
        let pi = pts[i];
        cap = Cap::point(pi);
        for j in 0..i {
            if cap.contains(&pts[j]) {
                continue;
            }
            let pj = pts[j];
            cap = circumcap2(&pi, &pj).map_err(|_| Error::Hemisphere)?;
            for pk in &pts[..j] {
                if cap.contains(pk) {
                    continue;
                }
                cap = match circumcap3(&pi, &pj, pk) {
                    Ok(c) => c,
                    Err(Error::Collinear) => widest_pair_cap(&pi, &pj, pk)?,
                    Err(e) => return Err(e),
                };
            }
        }
        // move-to-front: boundary points are tested first from now on
        pts[..=i].rotate_right(1);
    }
    check_result(cap, points)
}

/// Exhaustive oracle: the smallest enclosing cap among all single-point, pair
/// and triple caps. Cost O(n⁴); limited to [`BRUTEFORCE_MAX_POINTS`] inputs.
pub fn min_enclosing_cap_bruteforce(points: &[SpherePoint]) -> Result<Cap> {
    let n = points.len();
    if n == 0 || n > BRUTEFORCE_MAX_POINTS {
        return Err(Error::Domain {
            what: "point count",
            value: n as f64,
        });
    }
    let encloses = |cap: &Cap| points.iter().all(|p| cap.contains(p));

    let mut best: Option<Cap> = None;
    let consider = |cap: Cap, best: &mut Option<Cap>| {
        if best.is_none_or(|b| cap.radius < b.radius) && encloses(&cap) {
            *best = Some(cap);
        }
    };

    consider(Cap::point(points[0]), &mut best);
    for i in 0..n {
        for j in (i + 1)..n {
            if let Ok(cap) = circumcap2(&points[i], &points[j]) {
                consider(cap, &mut best);
            }
            for k in (j + 1)..n {
                if let Ok(cap) = circumcap3(&points[i], &points[j], &points[k]) {
                    consider(cap, &mut best);
                }
            }
        }
    }
    check_result(best.ok_or(Error::Hemisphere)?, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn octant() -> [SpherePoint; 3] {
        [
            SpherePoint::new(1.0, 0.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 1.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 0.0, 1.0).unwrap(),
        ]
    }

    #[test]
    fn circumcap2_examples() {
        let [x, y, _] = octant();
        let cap = circumcap2(&x, &y).unwrap();
        assert_abs_diff_eq!(cap.radius, FRAC_PI_4, epsilon = 1e-15);
        let mid = SpherePoint::new(1.0, 1.0, 0.0).unwrap();
        assert!(cap.center.distance(&mid) < 1e-15);

        let same = circumcap2(&x, &x).unwrap();
        assert_eq!(same.radius, 0.0);
        assert_eq!(same.center, x);

        assert_eq!(circumcap2(&x, &x.antipode()), Err(Error::Antipodal));
    }

    #[test]
    fn circumcap3_symmetric_triple() {
        let pts: Vec<_> = (0..3)
            .map(|i| SpherePoint::from_polar(0.7, 2.0 * PI * i as f64 / 3.0))
            .collect();
        let cap = circumcap3(&pts[0], &pts[1], &pts[2]).unwrap();
        assert!(cap.center.distance(&SpherePoint::north()) < 1e-14);
        assert_abs_diff_eq!(cap.radius, 0.7, epsilon = 1e-14);
        for p in &pts {
            assert_abs_diff_eq!(cap.center.distance(p), cap.radius, epsilon = 1e-12);
        }
    }

    #[test]
    fn circumcap3_quarter_triangle() {
        // apex with two orthogonal legs of length π/3
        let c = SpherePoint::north();
        let a = SpherePoint::from_polar(FRAC_PI_3, 0.0);
        let b = SpherePoint::from_polar(FRAC_PI_3, FRAC_PI_2);
        let cap = circumcap3(&c, &a, &b).unwrap();
        let expected = (2f64.sqrt() * FRAC_PI_6.tan()).atan();
        assert_abs_diff_eq!(cap.radius, expected, epsilon = 1e-14);
        assert_abs_diff_eq!(cap.radius, 0.6847192, epsilon = 1e-7);
    }

    #[test]
    fn circumcap3_rejects_great_circle_triples() {
        let pts: Vec<_> = (0..3)
            .map(|i| SpherePoint::from_polar(FRAC_PI_2, 0.4 * i as f64))
            .collect();
        assert_eq!(circumcap3(&pts[0], &pts[1], &pts[2]), Err(Error::Collinear));
        assert_eq!(circumcap3(&pts[0], &pts[0], &pts[2]), Err(Error::Collinear));
    }

    #[test]
    fn min_cap_single_point() {
        let p = SpherePoint::new(0.2, 0.3, 0.9).unwrap();
        let cap = min_enclosing_cap(&[p]).unwrap();
        assert_eq!(cap.radius, 0.0);
        assert_eq!(cap.center, p);
        assert_eq!(min_enclosing_cap_bruteforce(&[p]).unwrap().radius, 0.0);
    }

    #[test]
    fn min_cap_octant() {
        let pts = octant();
        let expected = 2f64.sqrt().atan();
        let fast = min_enclosing_cap(&pts).unwrap();
        let slow = min_enclosing_cap_bruteforce(&pts).unwrap();
        assert_abs_diff_eq!(fast.radius, expected, epsilon = 1e-14);
        assert_abs_diff_eq!(slow.radius, fast.radius, epsilon = 1e-10);
        assert_abs_diff_eq!(fast.radius, 0.9553166, epsilon = 1e-7);
    }

    #[test]
    fn min_cap_two_points_is_pair_cap() {
        let p = SpherePoint::from_polar(0.3, 0.1);
        let q = SpherePoint::from_polar(1.1, 2.0);
        let pair = circumcap2(&p, &q).unwrap();
        for cap in [
            min_enclosing_cap(&[p, q]).unwrap(),
            min_enclosing_cap_bruteforce(&[p, q]).unwrap(),
        ] {
            assert_abs_diff_eq!(cap.radius, pair.radius, epsilon = 1e-15);
            assert!(cap.center.distance(&pair.center) < 1e-12);
        }
    }

    #[test]
    fn min_cap_obtuse_triangle_uses_pair() {
        let a = SpherePoint::from_polar(FRAC_PI_2, -0.5);
        let b = SpherePoint::from_polar(FRAC_PI_2, 0.5);
        let c = SpherePoint::from_polar(FRAC_PI_2 - 0.05, 0.0);
        let cap = min_enclosing_cap(&[a, b, c]).unwrap();
        assert_abs_diff_eq!(cap.radius, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn min_cap_collinear_points() {
        let pts: Vec<_> = (0..5)
            .map(|i| SpherePoint::from_polar(FRAC_PI_2, 0.3 * i as f64))
            .collect();
        let cap = min_enclosing_cap(&pts).unwrap();
        assert_abs_diff_eq!(cap.radius, 0.6, epsilon = 1e-14);
        let slow = min_enclosing_cap_bruteforce(&pts).unwrap();
        assert_abs_diff_eq!(slow.radius, 0.6, epsilon = 1e-14);
    }

    #[test]
    fn min_cap_hemisphere_violation() {
        let [x, y, z] = octant();
        let pts = [x, y, z, x.antipode()];
        assert_eq!(min_enclosing_cap(&pts), Err(Error::Hemisphere));
        assert_eq!(min_enclosing_cap_bruteforce(&pts), Err(Error::Hemisphere));
        let ring: Vec<_> = (0..6)
            .map(|i| SpherePoint::from_polar(FRAC_PI_2, PI * i as f64 / 3.0))
            .collect();
        assert_eq!(min_enclosing_cap(&ring), Err(Error::Hemisphere));
    }

    #[test]
    fn min_cap_empty_and_oversized() {
        assert!(min_enclosing_cap(&[]).is_err());
        let many = vec![SpherePoint::north(); BRUTEFORCE_MAX_POINTS + 1];
        assert!(min_enclosing_cap_bruteforce(&many).is_err());
        assert_eq!(min_enclosing_cap(&many).unwrap().radius, 0.0);
    }
}
