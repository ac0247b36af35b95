//! Browser demo bindings. Each export returns a JSON string so the page
//! needs no generated TypeScript types; the plain-Rust functions behind
//! them are what the tests exercise.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::Serialize;
use sphcover::bounds;
use sphcover::shapes::{ShapeKind, ShapeSpec};
use sphcover::SpherePoint;
use wasm_bindgen::prelude::*;

/// A body drawn in orthographic view from above its circumcenter.
#[derive(Debug, Serialize)]
pub struct Outline {
    pub kind: &'static str,
    pub delta: f64,
    /// Boundary in view coordinates, unit sphere radius = 1.
    pub points: Vec<[f64; 2]>,
    /// Projected radius of the minimal enclosing cap's circle.
    pub cap_circle: f64,
    pub vertices: usize,
    pub thickness: f64,
    pub diameter: f64,
    pub circumradius: f64,
    /// Upper bound on the circumradius for this thickness, where one applies.
    pub bound: Option<f64>,
    pub bound_name: Option<&'static str>,
    pub width_spread: f64,
}

pub fn outline(kind: &str, delta: f64, n: usize, k: usize) -> Result<Outline, String> {
    let kind = ShapeKind::parse(kind).ok_or_else(|| format!("unknown shape `{kind}`"))?;
    let mut spec = ShapeSpec::new(kind, delta).with_samples(n);
    if matches!(
        kind,
        ShapeKind::ReuleauxOddGon | ShapeKind::PolarConstantWidth
    ) {
        spec = spec.with_order(k);
    }
    let body = spec.build().map_err(|e| e.to_string())?;
    let cap = body.min_enclosing_cap().map_err(|e| e.to_string())?;
    let (u, v) = tangent_basis(&cap.center);
    let points = body
        .vertices()
        .iter()
        .map(|p| {
            let p = p.to_array();
            [dot(&p, &u), dot(&p, &v)]
        })
        .collect();
    let thickness = body.thickness().map_err(|e| e.to_string())?;
    let (bound, bound_name) = if thickness <= FRAC_PI_2 {
        (bounds::rho_reduced(thickness).ok(), Some("reduced body"))
    } else if body.is_constant_width(2e-3).unwrap_or(false) {
        (
            bounds::rho_constant_width_large(thickness.min(PI - 1e-9)).ok(),
            Some("constant width"),
        )
    } else {
        (None, None)
    };
    Ok(Outline {
        kind: kind.name(),
        delta,
        points,
        cap_circle: cap.radius.sin(),
        vertices: body.len(),
        thickness,
        diameter: body.diameter(),
        circumradius: cap.radius,
        bound,
        bound_name,
        width_spread: body.width_spread().map_err(|e| e.to_string())?,
    })
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Orthonormal tangent basis at `center`.
fn tangent_basis(center: &SpherePoint) -> ([f64; 3], [f64; 3]) {
    let w = center.to_array();
    let seed = if w[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let u = cross(&seed, &w);
    let norm = dot(&u, &u).sqrt();
    let u = [u[0] / norm, u[1] / norm, u[2] / norm];
    (u, cross(&w, &u))
}

/// One named curve sampled on a thickness grid.
#[derive(Debug, Serialize)]
pub struct Curve {
    pub name: &'static str,
    pub points: Vec<[f64; 2]>,
}

/// Circumradius bounds as functions of thickness (or diameter for the
/// Dekster bound), each on its own domain.
pub fn bound_curves(samples: usize) -> Vec<Curve> {
    let samples = samples.max(2);
    let sample = |name, lo: f64, hi: f64, f: fn(f64) -> sphcover::Result<f64>| Curve {
        name,
        points: (0..samples)
            .filter_map(|i| {
                let x = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
                f(x).ok().map(|y| [x, y])
            })
            .collect(),
    };
    vec![
        sample("quarter disk", 1e-3, FRAC_PI_2, bounds::rho_quarter),
        sample("Reuleaux triangle", 1e-3, FRAC_PI_2, bounds::rho_reuleaux),
        sample(
            "equilateral triangle",
            1e-3,
            FRAC_PI_2 - 1e-3,
            bounds::rho_equilateral,
        ),
        sample(
            "Dekster (diameter)",
            1e-3,
            2.0 * PI / 3.0,
            bounds::dekster_bound,
        ),
        sample(
            "constant width ≥ π/2",
            FRAC_PI_2,
            PI - 1e-3,
            bounds::rho_constant_width_large,
        ),
    ]
}

/// Circumradius of the isosceles two-height triangle across its half apex
/// angle range `[α_eq, π/4]`, with the two end values.
#[derive(Debug, Serialize)]
pub struct SigmaChain {
    pub delta: f64,
    pub alpha_eq: f64,
    pub points: Vec<[f64; 2]>,
    pub equilateral_end: f64,
    pub quarter_end: f64,
}

pub fn sigma_chain(delta: f64, samples: usize) -> Result<SigmaChain, String> {
    let samples = samples.max(2);
    let alpha_eq = bounds::alpha_equilateral(delta).map_err(|e| e.to_string())?;
    let points = (0..samples)
        .map(|i| {
            let alpha = alpha_eq + (FRAC_PI_4 - alpha_eq) * i as f64 / (samples - 1) as f64;
            bounds::sigma_isosceles(alpha, delta).map(|s| [alpha, s])
        })
        .collect::<sphcover::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    Ok(SigmaChain {
        delta,
        alpha_eq,
        equilateral_end: points[0][1],
        quarter_end: points[samples - 1][1],
        points,
    })
}

fn to_json<T: Serialize>(value: Result<T, String>) -> Result<String, JsError> {
    let value = value.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

/// JSON [`Outline`] of a catalog shape.
#[wasm_bindgen(js_name = shapeOutline)]
pub fn shape_outline(kind: &str, delta: f64, n: usize, k: usize) -> Result<String, JsError> {
    to_json(outline(kind, delta, n, k))
}

/// JSON array of [`Curve`]s.
#[wasm_bindgen(js_name = boundCurves)]
pub fn bound_curves_json(samples: usize) -> Result<String, JsError> {
    to_json(Ok(bound_curves(samples)))
}

/// JSON [`SigmaChain`] for thickness `delta`.
#[wasm_bindgen(js_name = sigmaChain)]
pub fn sigma_chain_json(delta: f64, samples: usize) -> Result<String, JsError> {
    to_json(sigma_chain(delta, samples))
}
