//! Verification suites: each suite rebuilds the bodies behind one family of
//! claims, measures them numerically and compares against the closed forms.
//!
//! A suite is a pure function of its [`SuiteConfig`]; rows come back in a
//! fixed order whether or not grid points are evaluated in parallel.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use nalgebra::Rotation3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::body::{vertex_set_distance, SphericalConvexPolygon};
use crate::bounds::{self, JUNG};
use crate::enclosing::{
    circumcap3, min_enclosing_cap, min_enclosing_cap_bruteforce, min_enclosing_cap_with_rng,
};
use crate::shapes::{self, MIN_SAMPLES};
use crate::sphere::{angle_at, solve_right_triangle, SpherePoint};
use crate::{Error, Result};

/// Tolerance for closed form against closed form, and for exact triangles.
pub const EXACT_TOL: f64 = 1e-9;

/// Column order of the CSV report.
pub const CSV_HEADER: [&str; 10] = [
    "claim_id",
    "delta",
    "n",
    "alpha",
    "seed",
    "formula_value",
    "numeric_value",
    "abs_error",
    "tolerance",
    "passed",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub delta: Option<f64>,
    pub n: Option<usize>,
    pub alpha: Option<f64>,
    pub seed: Option<u64>,
}

impl Params {
    fn delta(delta: f64) -> Self {
        Params {
            delta: Some(delta),
            ..Params::default()
        }
    }

    fn seed(seed: u64) -> Self {
        Params {
            seed: Some(seed),
            ..Params::default()
        }
    }

    fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = Some(alpha);
        self
    }
}

/// One checked claim instance.
///
/// For two-sided claims `abs_error = |formula − numeric|`; for one-sided
/// claims (`numeric ≤ formula`) it is the violation `max(0, numeric − formula)`.
/// Either way `passed ⇔ abs_error ≤ tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    #[serde(flatten)]
    pub params: Params,
    pub formula_value: f64,
    pub numeric_value: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn equality(
        claim_id: impl Into<String>,
        params: Params,
        formula_value: f64,
        numeric_value: f64,
        tolerance: f64,
    ) -> Self {
        Self::finish(
            claim_id.into(),
            params,
            formula_value,
            numeric_value,
            (formula_value - numeric_value).abs(),
            tolerance,
        )
    }

    /// The claim `numeric_value ≤ formula_value`, up to `tolerance`.
    pub fn upper_bound(
        claim_id: impl Into<String>,
        params: Params,
        formula_value: f64,
        numeric_value: f64,
        tolerance: f64,
    ) -> Self {
        Self::finish(
            claim_id.into(),
            params,
            formula_value,
            numeric_value,
            (numeric_value - formula_value).max(0.0),
            tolerance,
        )
    }

    fn finish(
        claim_id: String,
        params: Params,
        formula_value: f64,
        numeric_value: f64,
        abs_error: f64,
        tolerance: f64,
    ) -> Self {
        VerificationReport {
            claim_id,
            params,
            formula_value,
            numeric_value,
            abs_error,
            tolerance,
            // NaN errors fail
            passed: abs_error <= tolerance,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    PropPolar,
    PropConstantWidthPolar,
    Dekster,
    Theorem1,
    Lemma4,
    Lemma5,
    SigmaIsosceles,
    Theorem2,
    Napier,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::PropPolar,
        Suite::PropConstantWidthPolar,
        Suite::Dekster,
        Suite::Theorem1,
        Suite::Lemma4,
        Suite::Lemma5,
        Suite::SigmaIsosceles,
        Suite::Theorem2,
        Suite::Napier,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::PropPolar => "prop_polar",
            Suite::PropConstantWidthPolar => "prop_constant_width_polar",
            Suite::Dekster => "dekster",
            Suite::Theorem1 => "theorem1",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::SigmaIsosceles => "sigma_isosceles",
            Suite::Theorem2 => "theorem2",
            Suite::Napier => "napier",
            Suite::Oracle => "oracle",
        }
    }

    /// Default configuration. Fields a suite does not use are left at
    /// neutral values and ignored.
    ///
    /// | suite | delta grid | n | count | tol |
    /// |---|---|---|---|---|
    /// | lemma1, lemma2 | 0.3, 0.6, 1.0, π/2 | 1024 samples | | 1e-3 |
    /// | lemma3 | 0.3, 0.6, 1.0, 1.4 | | | 1e-9 |
    /// | prop_polar | 0.3, 0.6, 1.0, π/2 (disk thickness) | 512 samples, ≤ 50 points | 100 | 1e-9, 1e-3 |
    /// | prop_constant_width_polar | 0.6, 1.0, 1.4 | 1024 samples | | 2e-3 |
    /// | dekster | | 50 points | 100 | 1e-9 |
    /// | theorem1 | π/2, 1.8, 2π/3 | 2048 samples | | 2e-3 |
    /// | lemma4 | | 10⁵ grid points | | 1e-12 |
    /// | lemma5 | | 10³ splits | 100 | 1e-10, 1e-9 |
    /// | sigma_isosceles | 0.3, 0.6, 1.0, π/2 | 10⁴ α grid points | | 1e-9, 1e-10 |
    /// | theorem2 | 0.3, 0.6, 1.0, π/2 | 1024 samples | | 2e-3 |
    /// | napier | | | 10⁴ | 1e-10 |
    /// | oracle | | 50 points | 100 | 1e-10 |
    pub fn default_config(self) -> SuiteConfig {
        let grid = vec![0.3, 0.6, 1.0, FRAC_PI_2];
        let base = SuiteConfig {
            delta_grid: Vec::new(),
            n: 0,
            alpha: None,
            seed: 0,
            count: 0,
            tol: 1e-3,
        };
        match self {
            Suite::Lemma1 | Suite::Lemma2 => SuiteConfig {
                delta_grid: grid,
                n: 1024,
                ..base
            },
            Suite::Lemma3 => SuiteConfig {
                delta_grid: vec![0.3, 0.6, 1.0, 1.4],
                tol: EXACT_TOL,
                ..base
            },
            Suite::PropPolar => SuiteConfig {
                delta_grid: grid,
                n: 512,
                count: 100,
                tol: 1e-3,
                ..base
            },
            Suite::PropConstantWidthPolar => SuiteConfig {
                delta_grid: vec![0.6, 1.0, 1.4],
                n: 1024,
                tol: 2e-3,
                ..base
            },
            Suite::Dekster => SuiteConfig {
                n: 50,
                count: 100,
                tol: 1e-9,
                ..base
            },
            Suite::Theorem1 => SuiteConfig {
                delta_grid: vec![FRAC_PI_2, 1.8, 2.0 * FRAC_PI_3],
                n: 2048,
                tol: 2e-3,
                ..base
            },
            Suite::Lemma4 => SuiteConfig {
                n: 100_000,
                tol: 1e-12,
                ..base
            },
            Suite::Lemma5 => SuiteConfig {
                n: 1000,
                count: 100,
                tol: 1e-10,
                ..base
            },
            Suite::SigmaIsosceles => SuiteConfig {
                delta_grid: grid,
                n: 10_000,
                tol: 1e-10,
                ..base
            },
            Suite::Theorem2 => SuiteConfig {
                delta_grid: grid,
                n: 1024,
                tol: 2e-3,
                ..base
            },
            Suite::Napier => SuiteConfig {
                count: 10_000,
                tol: 1e-10,
                ..base
            },
            Suite::Oracle => SuiteConfig {
                n: 50,
                count: 100,
                tol: 1e-10,
                ..base
            },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_owned()))
    }
}

/// Suite parameters; see [`Suite::default_config`] for what each suite
/// reads. `n` is a sampling density for shape suites, a point count for
/// random point sets and a grid size for scalar sweeps. `tol` is the
/// suite's headline tolerance; closed-form cross-checks inside sampled
/// suites use [`EXACT_TOL`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub delta_grid: Vec<f64>,
    pub n: usize,
    pub alpha: Option<f64>,
    pub seed: u64,
    pub count: usize,
    pub tol: f64,
}

impl SuiteConfig {
    fn validate(&self, suite: Suite) -> Result<()> {
        if !(self.tol >= 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} must be finite and non-negative",
                self.tol
            )));
        }
        if let Some(d) = self.delta_grid.iter().find(|d| !d.is_finite()) {
            return Err(Error::InvalidConfig(format!("delta {d} is not finite")));
        }
        let min_n = match suite {
            Suite::Lemma1
            | Suite::Lemma2
            | Suite::PropConstantWidthPolar
            | Suite::Theorem1
            | Suite::Theorem2 => MIN_SAMPLES,
            Suite::PropPolar => MIN_SAMPLES,
            Suite::Dekster | Suite::Oracle => 2,
            Suite::Lemma4 | Suite::Lemma5 | Suite::SigmaIsosceles => 2,
            Suite::Lemma3 | Suite::Napier => 0,
        };
        if self.n < min_n {
            return Err(Error::InvalidConfig(format!(
                "{suite} needs n >= {min_n}, got {}",
                self.n
            )));
        }
        if suite == Suite::Oracle && self.n > crate::enclosing::BRUTEFORCE_MAX_POINTS {
            return Err(Error::InvalidConfig(format!(
                "oracle needs n <= {}, got {}",
                crate::enclosing::BRUTEFORCE_MAX_POINTS,
                self.n
            )));
        }
        Ok(())
    }
}

/// Runs a suite by name with its default configuration.
pub fn run_named_suite(name: &str) -> Result<Vec<VerificationReport>> {
    let suite: Suite = name.parse()?;
    run_suite(suite, &suite.default_config())
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    config.validate(suite)?;
    match suite {
        Suite::Lemma1 => lemma1(config),
        Suite::Lemma2 => lemma2(config),
        Suite::Lemma3 => lemma3(config),
        Suite::PropPolar => prop_polar(config),
        Suite::PropConstantWidthPolar => prop_constant_width_polar(config),
        Suite::Dekster => dekster(config),
        Suite::Theorem1 => theorem1(config),
        Suite::Lemma4 => lemma4(config),
        Suite::Lemma5 => lemma5(config),
        Suite::SigmaIsosceles => sigma_chain(config),
        Suite::Theorem2 => theorem2(config),
        Suite::Napier => napier(config),
        Suite::Oracle => oracle(config),
    }
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on,
/// keeping input order.
fn ordered_map<T, R, F>(items: Vec<T>, f: F) -> Result<Vec<R>>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Result<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

fn flatten(rows: Vec<Vec<VerificationReport>>) -> Vec<VerificationReport> {
    rows.into_iter().flatten().collect()
}

fn seeds(config: &SuiteConfig) -> Vec<u64> {
    (0..config.count as u64)
        .map(|i| config.seed.wrapping_add(i))
        .collect()
}

fn lemma1(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    ordered_map(config.delta_grid.clone(), |delta| {
        let radius = shapes::make_quarter_disk(delta, n)?
            .min_enclosing_cap()?
            .radius;
        Ok(VerificationReport::equality(
            "lemma1",
            Params::delta(delta).with_n(n),
            bounds::rho_quarter(delta)?,
            radius,
            config.tol,
        ))
    })
}

fn lemma2(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    ordered_map(config.delta_grid.clone(), |delta| {
        let radius = shapes::make_reuleaux_triangle(delta, n)?
            .min_enclosing_cap()?
            .radius;
        Ok(VerificationReport::equality(
            "lemma2",
            Params::delta(delta).with_n(n),
            bounds::rho_reuleaux(delta)?,
            radius,
            config.tol,
        ))
    })
}

fn lemma3(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    ordered_map(config.delta_grid.clone(), |delta| {
        let [a, b, c] = shapes::make_equilateral_triangle(delta)?;
        Ok(VerificationReport::equality(
            "lemma3",
            Params::delta(delta),
            bounds::rho_equilateral(delta)?,
            circumcap3(&a, &b, &c)?.radius,
            config.tol,
        ))
    })
}

fn prop_polar(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let involution = ordered_map(seeds(config), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let body = fixtures::random_convex_polygon(&mut rng, 50)?;
        let back = body.polar()?.polar()?;
        Ok(VerificationReport::equality(
            "prop_polar.involution",
            Params::seed(seed).with_n(body.len()),
            0.0,
            vertex_set_distance(body.vertices(), back.vertices()),
            EXACT_TOL,
        ))
    })?;
    let n = config.n;
    let caps = ordered_map(config.delta_grid.clone(), |delta| {
        let center = SpherePoint::north();
        let polar = shapes::make_disk(center, 0.5 * delta, n)?.polar()?;
        let expected = FRAC_PI_2 - 0.5 * delta;
        // the polar vertex colatitude farthest from the expected radius
        let worst = polar
            .vertices()
            .iter()
            .map(|v| center.distance(v))
            .max_by(|a, b| (a - expected).abs().total_cmp(&(b - expected).abs()))
            .expect("polygon has vertices");
        Ok(vec![
            VerificationReport::equality(
                "prop_polar.cap_radius",
                Params::delta(delta).with_n(n),
                expected,
                worst,
                config.tol,
            ),
            VerificationReport::equality(
                "prop_polar.thickness",
                Params::delta(delta).with_n(n),
                PI - delta,
                polar.thickness()?,
                config.tol,
            ),
        ])
    })?;
    Ok(involution.into_iter().chain(flatten(caps)).collect())
}

fn prop_constant_width_polar(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    let rows = ordered_map(config.delta_grid.clone(), |delta| {
        let polar = shapes::make_reuleaux_triangle(delta, n)?.polar()?;
        let params = Params::delta(delta).with_n(n);
        let thickness = polar.thickness()?;
        Ok(vec![
            VerificationReport::equality(
                "prop_constant_width_polar.thickness",
                params,
                PI - delta,
                thickness,
                config.tol,
            ),
            VerificationReport::equality(
                "prop_constant_width_polar.width_spread",
                params,
                0.0,
                polar.width_spread()?,
                config.tol,
            ),
            VerificationReport::equality(
                "prop_constant_width_polar.diameter",
                params,
                thickness,
                polar.diameter(),
                config.tol,
            ),
        ])
    })?;
    Ok(flatten(rows))
}

fn dekster(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    ordered_map(seeds(config), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // a cap of radius ≤ π/3 keeps the diameter within 2π/3
        let center = fixtures::random_point(&mut rng);
        let spread = rng.random_range(0.05..FRAC_PI_3);
        let points: Vec<SpherePoint> = (0..n)
            .map(|_| fixtures::random_point_in_cap(&mut rng, &center, spread))
            .collect();
        let d = fixtures::point_set_diameter(&points);
        let sigma = min_enclosing_cap(&points)?.radius;
        Ok(VerificationReport::upper_bound(
            "dekster",
            Params::seed(seed).with_n(n),
            JUNG * (0.5 * d).sin(),
            sigma.sin(),
            config.tol,
        ))
    })
}

fn theorem1(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    let rows = ordered_map(config.delta_grid.clone(), |delta| {
        let bound = bounds::rho_constant_width_large(delta)?;
        let params = Params::delta(delta).with_n(n);
        let mut rows = vec![VerificationReport::equality(
            "theorem1.equality",
            params,
            bound,
            shapes::make_polar_constant_width(delta, n)?
                .min_enclosing_cap()?
                .radius,
            config.tol,
        )];
        for k in [5, 7] {
            rows.push(VerificationReport::upper_bound(
                format!("theorem1.polar_reuleaux_{k}"),
                params,
                bound,
                shapes::make_polar_reuleaux(delta, k, n)?
                    .min_enclosing_cap()?
                    .radius,
                config.tol,
            ));
        }
        Ok(rows)
    })?;
    Ok(flatten(rows))
}

/// `(c, a)` pairs checked by the lemma4 suite. `a = None` stands for the
/// right root of `x² − x + c`.
pub const LEMMA4_CASES: [(f64, Option<f64>); 4] = [
    (0.05, Some(0.7)),
    (0.1, Some(0.6)),
    (0.2, None),
    (0.24, Some(0.52)),
];

fn lemma4(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    ordered_map(LEMMA4_CASES.to_vec(), |(c, a)| {
        let a = match a {
            Some(a) => a,
            None => bounds::lemma4_roots(c)?.1,
        };
        let m = bounds::lemma4_endpoint_max(c, a, n)?;
        Ok(VerificationReport::upper_bound(
            format!("lemma4[c={c},a={a:.7}]"),
            Params::default().with_n(n),
            m.max_endpoints,
            m.max_interior,
            config.tol,
        ))
    })
}

fn lemma5(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let grid = config.n;
    let rows = ordered_map(seeds(config), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = rng.random_range(0.05..FRAC_PI_2 - 0.05);
        // total half central angle α + β, each part below π/2
        let total = rng.random_range(0.1..PI - 0.1);
        let (lo, hi) = ((total - FRAC_PI_2).max(0.0), total.min(FRAC_PI_2));
        let mut best = f64::NEG_INFINITY;
        for i in 1..grid {
            let alpha = lo + (hi - lo) * i as f64 / grid as f64;
            best = best.max(bounds::inscribed_angle(rho, alpha, total - alpha)?);
        }
        let equidistant = bounds::inscribed_angle(rho, 0.5 * total, 0.5 * total)?;
        let params = Params::seed(seed).with_n(grid);

        let alpha = rng.random_range(lo..hi);
        let measured = fixtures::measured_inscribed_angle(rho, alpha, total - alpha);
        Ok(vec![
            VerificationReport::upper_bound(
                "lemma5.equidistant_max",
                params,
                equidistant,
                best,
                config.tol,
            ),
            VerificationReport::equality(
                "lemma5.construction",
                params.with_alpha(alpha),
                bounds::inscribed_angle(rho, alpha, total - alpha)?,
                measured,
                EXACT_TOL,
            ),
        ])
    })?;
    Ok(flatten(rows))
}

fn sigma_chain(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let grid = config.n;
    let rows = ordered_map(config.delta_grid.clone(), |delta| {
        let alpha_eq = bounds::alpha_equilateral(delta)?;
        let sigma_1 = bounds::sigma_isosceles(FRAC_PI_4, delta)?;
        let sigma_2 = bounds::sigma_isosceles(alpha_eq, delta)?;
        let equilateral = if delta < FRAC_PI_2 {
            bounds::rho_equilateral(delta)?
        } else {
            bounds::rho_equilateral_closure(delta)
        };
        let params = Params::delta(delta);

        let tan_ends = bounds::tan_sigma_isosceles(FRAC_PI_4, delta)?
            .max(bounds::tan_sigma_isosceles(alpha_eq, delta)?);
        let mut tan_max = f64::NEG_INFINITY;
        for i in 0..grid {
            let alpha = alpha_eq + (FRAC_PI_4 - alpha_eq) * i as f64 / (grid - 1) as f64;
            tan_max = tan_max.max(bounds::tan_sigma_isosceles(alpha, delta)?);
        }

        let alpha = config.alpha.unwrap_or(0.5 * (alpha_eq + FRAC_PI_4));
        let [e1, g, j] = shapes::make_isosceles_two_height(alpha, delta)?;
        Ok(vec![
            VerificationReport::equality(
                "sigma_isosceles.quarter_end",
                params.with_alpha(FRAC_PI_4),
                bounds::rho_quarter(delta)?,
                sigma_1,
                EXACT_TOL,
            ),
            VerificationReport::equality(
                "sigma_isosceles.equilateral_end",
                params.with_alpha(alpha_eq),
                equilateral,
                sigma_2,
                EXACT_TOL,
            ),
            VerificationReport::upper_bound(
                "sigma_isosceles.endpoint_max",
                params.with_n(grid),
                tan_ends,
                tan_max,
                config.tol,
            ),
            VerificationReport::upper_bound("sigma_isosceles.order", params, sigma_1, sigma_2, 0.0),
            VerificationReport::equality(
                "sigma_isosceles.circumcap",
                params.with_alpha(alpha),
                bounds::sigma_isosceles(alpha, delta)?,
                circumcap3(&e1, &g, &j)?.radius,
                EXACT_TOL,
            ),
        ])
    })?;
    Ok(flatten(rows))
}

fn theorem2(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    let rows = ordered_map(config.delta_grid.clone(), |delta| {
        let bound = bounds::rho_reduced(delta)?;
        let params = Params::delta(delta).with_n(n);
        let quarter = shapes::make_quarter_disk(delta, n)?;
        let catalog: [(&str, SphericalConvexPolygon); 5] = [
            (
                "disk",
                shapes::make_disk(SpherePoint::north(), 0.5 * delta, n)?,
            ),
            ("quarter_disk", quarter.clone()),
            (
                "reuleaux_triangle",
                shapes::make_reuleaux_triangle(delta, n)?,
            ),
            ("reuleaux_5", shapes::make_reuleaux_odd_gon(delta, 5, n)?),
            ("reuleaux_7", shapes::make_reuleaux_odd_gon(delta, 7, n)?),
        ];
        let mut rows = Vec::with_capacity(catalog.len() + 2);
        for (name, body) in &catalog {
            rows.push(VerificationReport::upper_bound(
                format!("theorem2.bound.{name}"),
                params,
                bound,
                body.min_enclosing_cap()?.radius,
                config.tol,
            ));
        }
        rows.push(VerificationReport::equality(
            "theorem2.equality.quarter_disk",
            params,
            bound,
            quarter.min_enclosing_cap()?.radius,
            config.tol,
        ));
        let (_, a, b) = shapes::quarter_disk_corners(delta);
        rows.push(VerificationReport::equality(
            "theorem2.extreme_pair.quarter_disk",
            Params::delta(delta),
            delta.cos().powi(2).acos(),
            a.distance(&b),
            EXACT_TOL,
        ));
        Ok(rows)
    })?;
    Ok(flatten(rows))
}

fn napier(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut worst = [0.0f64; 4];
    for _ in 0..config.count {
        let a = rng.random_range(1e-6..FRAC_PI_2 - 1e-6);
        let b = rng.random_range(1e-6..FRAC_PI_2 - 1e-6);
        let residuals = solve_right_triangle(a, b)?.identity_residuals();
        for (w, r) in worst.iter_mut().zip(residuals) {
            *w = w.max(r);
        }
    }
    Ok(worst
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            VerificationReport::equality(
                format!("napier.identity{}", i + 1),
                Params::seed(config.seed).with_n(config.count),
                0.0,
                w,
                config.tol,
            )
        })
        .collect())
}

fn oracle(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let n = config.n;
    ordered_map(seeds(config), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = fixtures::oracle_points(&mut rng, n);
        let fast = min_enclosing_cap_with_rng(&points, &mut rng)?;
        let slow = min_enclosing_cap_bruteforce(&points)?;
        Ok(VerificationReport::equality(
            "oracle",
            Params::seed(seed).with_n(n),
            slow.radius,
            fast.radius,
            config.tol,
        ))
    })
}

/// Writes `rows` as CSV with [`CSV_HEADER`]; reals carry 12 significant
/// digits, absent parameters are empty cells.
pub fn write_csv<W: Write>(rows: &[VerificationReport], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    writer.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let opt = |v: Option<f64>| v.map(format_g12).unwrap_or_default();
        writer
            .write_record([
                r.claim_id.clone(),
                opt(r.params.delta),
                r.params.n.map(|n| n.to_string()).unwrap_or_default(),
                opt(r.params.alpha),
                r.params.seed.map(|s| s.to_string()).unwrap_or_default(),
                format_g12(r.formula_value),
                format_g12(r.numeric_value),
                format_g12(r.abs_error),
                format_g12(r.tolerance),
                r.passed.to_string(),
            ])
            .map_err(io)?;
    }
    writer.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Writes `rows` as a pretty-printed JSON array with the CSV's fields.
pub fn write_json<W: Write>(rows: &[VerificationReport], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, rows).map_err(|e| Error::Io(e.to_string()))
}

/// Parses a CSV report back into rows.
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<VerificationReport>> {
    let mut reader = csv::Reader::from_reader(input);
    let bad = |what: &str| Error::InvalidConfig(format!("malformed report field `{what}`"));
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Io(e.to_string()))?;
        let field = |i: usize| record.get(i).ok_or_else(|| bad(CSV_HEADER[i]));
        let real = |i: usize| -> Result<f64> { field(i)?.parse().map_err(|_| bad(CSV_HEADER[i])) };
        let opt_real = |i: usize| -> Result<Option<f64>> {
            let s = field(i)?;
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| bad(CSV_HEADER[i]))
            }
        };
        let opt_int = |i: usize| -> Result<Option<u64>> {
            let s = field(i)?;
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| bad(CSV_HEADER[i]))
            }
        };
        rows.push(VerificationReport {
            claim_id: field(0)?.to_owned(),
            params: Params {
                delta: opt_real(1)?,
                n: opt_int(2)?.map(|n| n as usize),
                alpha: opt_real(3)?,
                seed: opt_int(4)?,
            },
            formula_value: real(5)?,
            numeric_value: real(6)?,
            abs_error: real(7)?,
            tolerance: real(8)?,
            passed: field(9)?.parse().map_err(|_| bad(CSV_HEADER[9]))?,
        });
    }
    Ok(rows)
}

/// Runs a suite and writes its CSV report to `path`; returns the row count.
pub fn sweep_csv(suite: Suite, config: &SuiteConfig, path: &Path) -> Result<usize> {
    let rows = run_suite(suite, config)?;
    let file =
        std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    write_csv(&rows, std::io::BufWriter::new(file))?;
    Ok(rows.len())
}

/// `%.12g`: 12 significant digits, fixed notation for exponents in
/// `[-5, 12)`, trailing zeros trimmed.
pub fn format_g12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_owned();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Random inputs shared by the suites and the tests.
pub mod fixtures {
    use super::*;

    /// Uniform point on the sphere.
    pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> SpherePoint {
        let z: f64 = rng.random_range(-1.0..=1.0);
        let phi: f64 = rng.random_range(0.0..2.0 * PI);
        SpherePoint::from_polar(z.clamp(-1.0, 1.0).acos(), phi)
    }

    /// Point uniform by area in the cap of `radius` about `center`.
    pub fn random_point_in_cap<R: Rng + ?Sized>(
        rng: &mut R,
        center: &SpherePoint,
        radius: f64,
    ) -> SpherePoint {
        let z = 1.0 - rng.random_range(0.0..=1.0) * (1.0 - radius.cos());
        let phi: f64 = rng.random_range(0.0..2.0 * PI);
        SpherePoint::from_polar(z.clamp(-1.0, 1.0).acos(), phi).rotate(&from_north(center))
    }

    /// Rotation taking the north pole to `target`.
    pub fn from_north(target: &SpherePoint) -> Rotation3<f64> {
        Rotation3::rotation_between(SpherePoint::north().vector(), target.vector())
            .unwrap_or_else(|| Rotation3::from_axis_angle(&nalgebra::Vector3::x_axis(), PI))
    }

    /// Hull of up to `max_points` random points in a random cap of radius
    /// in `[0.2, 1.2]`; retries until the hull is a proper polygon.
    pub fn random_convex_polygon<R: Rng + ?Sized>(
        rng: &mut R,
        max_points: usize,
    ) -> Result<SphericalConvexPolygon> {
        let max_points = max_points.max(3);
        loop {
            let center = random_point(rng);
            let radius = rng.random_range(0.2..1.2);
            let count = rng.random_range(3..=max_points);
            let points: Vec<SpherePoint> = (0..count)
                .map(|_| random_point_in_cap(rng, &center, radius))
                .collect();
            match SphericalConvexPolygon::convex_hull(&points) {
                Ok(body) => return Ok(body),
                Err(Error::Collinear | Error::DegeneratePolygon(_) | Error::NotConvex { .. }) => {
                    continue
                }
                Err(e) => return Err(e),
            }
        }
    }

    /// The oracle workload: `n` points in a random cap of radius 0.5.
    pub fn oracle_points<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<SpherePoint> {
        let center = random_point(rng);
        (0..n)
            .map(|_| random_point_in_cap(rng, &center, 0.5))
            .collect()
    }

    /// Largest pairwise distance.
    pub fn point_set_diameter(points: &[SpherePoint]) -> f64 {
        let mut best = 0.0f64;
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                best = best.max(p.distance(q));
            }
        }
        best
    }

    /// Builds `a`, `t`, `b` on the circle of radius `rho` about the north
    /// pole with central angles `2α` from `a` to `t` and `2β` from `t` to
    /// `b`, and measures `∠atb`.
    pub fn measured_inscribed_angle(rho: f64, alpha: f64, beta: f64) -> f64 {
        let a = SpherePoint::from_polar(rho, 0.0);
        let t = SpherePoint::from_polar(rho, 2.0 * alpha);
        let b = SpherePoint::from_polar(rho, 2.0 * (alpha + beta));
        angle_at(&t, &a, &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g12_formatting() {
        assert_eq!(format_g12(0.0), "0");
        assert_eq!(format_g12(1.0), "1");
        assert_eq!(format_g12(FRAC_PI_2), "1.57079632679");
        assert_eq!(format_g12(1e-13), "1e-13");
        assert_eq!(format_g12(2.5e-5), "2.5e-05");
        assert_eq!(format_g12(1.23456789012345e-4), "0.000123456789012");
        assert_eq!(format_g12(-3.0e15), "-3e+15");
        assert_eq!(format_g12(123456789012.0), "123456789012");
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert_eq!(
            "lemma9".parse::<Suite>(),
            Err(Error::UnknownSuite("lemma9".into()))
        );
    }

    #[test]
    fn upper_bound_rows() {
        let ok = VerificationReport::upper_bound("x", Params::default(), 1.0, 0.5, 0.0);
        assert!(ok.passed);
        assert_eq!(ok.abs_error, 0.0);
        let bad = VerificationReport::upper_bound("x", Params::default(), 1.0, 1.5, 0.1);
        assert!(!bad.passed);
        assert_eq!(bad.abs_error, 0.5);
        let nan = VerificationReport::equality("x", Params::default(), 1.0, f64::NAN, 1.0);
        assert!(!nan.passed);
    }

    #[test]
    fn measured_angle_matches_formula() {
        for (rho, a, b) in [(0.3, 0.4, 0.9), (1.2, 1.0, 0.2), (FRAC_PI_3, 0.5, 0.5)] {
            let f = bounds::inscribed_angle(rho, a, b).unwrap();
            assert!((fixtures::measured_inscribed_angle(rho, a, b) - f).abs() < 1e-12);
        }
    }
}
