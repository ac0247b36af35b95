//! Closed-form circumradius bounds and the scalar functions behind them.
//!
//! Every radius is in radians. Domains are checked; a value outside the
//! domain is an [`Error::Domain`], never a NaN.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::Serialize;

use crate::{Error, Result};

/// `2√3/3`, the Jung-type constant on the sphere.
pub const JUNG: f64 = 1.154_700_538_379_251_5;

/// Radicands this close below zero are treated as zero.
pub const RADICAND_CLAMP: f64 = 1e-13;

/// Tolerance of the `α_eq` bisection.
pub const ALPHA_EQ_TOL: f64 = 1e-12;

fn check(what: &'static str, value: f64, ok: bool) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}

fn clamped_sqrt(what: &'static str, radicand: f64) -> Result<f64> {
    if radicand < -RADICAND_CLAMP || radicand.is_nan() {
        return Err(Error::Domain {
            what,
            value: radicand,
        });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// `arccot y = π/2 − arctan y`, with range `(0, π)`.
pub fn arccot(y: f64) -> f64 {
    FRAC_PI_2 - y.atan()
}

/// Circumradius of a quarter-disk of thickness `delta`:
/// `arctan(√2 · tan(Δ/2))`.
pub fn rho_quarter(delta: f64) -> Result<f64> {
    check(
        "quarter-disk thickness",
        delta,
        delta > 0.0 && delta <= FRAC_PI_2,
    )?;
    Ok((2f64.sqrt() * (0.5 * delta).tan()).atan())
}

/// Circumradius of a Reuleaux triangle of width `delta`:
/// `arcsin(2√3/3 · sin(Δ/2))`.
pub fn rho_reuleaux(delta: f64) -> Result<f64> {
    check("Reuleaux width", delta, delta > 0.0 && delta <= FRAC_PI_2)?;
    Ok((JUNG * (0.5 * delta).sin()).asin())
}

/// Circumradius of an equilateral triangle whose heights are `delta < π/2`.
///
/// Evaluates `arctan((√(9 + 8 tan²Δ) − 3) / (2 tan Δ))` in the
/// rationalized form `arctan(4 tan Δ / (√(9 + 8 tan²Δ) + 3))`.
pub fn rho_equilateral(delta: f64) -> Result<f64> {
    check(
        "equilateral thickness",
        delta,
        delta > 0.0 && delta < FRAC_PI_2,
    )?;
    Ok(rho_equilateral_closure(delta))
}

/// Continuous extension of [`rho_equilateral`] to `(0, π/2]`; the value at
/// `π/2` is the left limit `arctan √2` (the octant triangle).
pub fn rho_equilateral_closure(delta: f64) -> f64 {
    let (s, c) = delta.sin_cos();
    // 4t / (√(9 + 8t²) + 3) with t = s / c, multiplied through by c
    (4.0 * s / ((9.0 * c * c + 8.0 * s * s).sqrt() + 3.0 * c)).atan()
}

/// Upper bound on the circumradius of a set of diameter `d ≤ 2π/3`:
/// `arcsin(2√3/3 · sin(d/2))`.
pub fn dekster_bound(d: f64) -> Result<f64> {
    check("diameter", d, d > 0.0 && d <= 2.0 * PI / 3.0 + 1e-15)?;
    Ok((JUNG * (0.5 * d).sin()).min(1.0).asin())
}

/// Circumradius bound for constant width `delta ∈ [π/2, π)`:
/// `Δ + arcsin(2√3/3 · cos(Δ/2)) − π/2`.
pub fn rho_constant_width_large(delta: f64) -> Result<f64> {
    check("constant width", delta, (FRAC_PI_2..PI).contains(&delta))?;
    Ok(delta + (JUNG * (0.5 * delta).cos()).asin() - FRAC_PI_2)
}

/// Circumradius bound for reduced bodies of thickness `delta ≤ π/2`; the
/// same function as [`rho_quarter`], attained by the quarter-disk.
pub fn rho_reduced(delta: f64) -> Result<f64> {
    check(
        "reduced thickness",
        delta,
        delta > 0.0 && delta <= FRAC_PI_2,
    )?;
    rho_quarter(delta)
}

/// Roots of `x² − x + c`, the ends of the interval where [`lemma4_f`] is real.
pub fn lemma4_roots(c: f64) -> Result<(f64, f64)> {
    check("c", c, c > 0.0 && c < 0.25)?;
    let r = (0.25 - c).sqrt();
    Ok((0.5 - r, 0.5 + r))
}

/// `f(x) = √(1 − x) − √(1 − x − c/x)` for `c ∈ (0, 1/4)`.
pub fn lemma4_f(x: f64, c: f64) -> Result<f64> {
    let (lo, hi) = lemma4_roots(c)?;
    check("x", x, x > 0.0 && x >= lo - 1e-12 && x <= hi + 1e-12)?;
    let outer = (1.0 - x).sqrt();
    let inner = clamped_sqrt("1 - x - c/x", 1.0 - x - c / x)?;
    // difference of roots, rationalized
    Ok((c / x) / (outer + inner))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EndpointMax {
    /// Largest value of `f` over the grid on `[1/2, a]`.
    pub max_interior: f64,
    /// `max(f(1/2), f(a))`.
    pub max_endpoints: f64,
}

/// Grid maximum of [`lemma4_f`] on `[1/2, a]` against its endpoint maximum.
///
/// `a` may equal the right root of `x² − x + c`, where `f` is still defined.
pub fn lemma4_endpoint_max(c: f64, a: f64, grid_n: usize) -> Result<EndpointMax> {
    let (_, hi) = lemma4_roots(c)?;
    check("a", a, a > 0.5 && a <= hi)?;
    check("grid size", grid_n as f64, grid_n >= 2)?;
    let step = (a - 0.5) / (grid_n - 1) as f64;
    let mut max_interior = f64::NEG_INFINITY;
    for i in 0..grid_n {
        let x = if i + 1 == grid_n {
            a
        } else {
            0.5 + step * i as f64
        };
        max_interior = max_interior.max(lemma4_f(x, c)?);
    }
    Ok(EndpointMax {
        max_interior,
        max_endpoints: lemma4_f(0.5, c)?.max(lemma4_f(a, c)?),
    })
}

/// Angle `∠atb` at a point `t` of a circle of radius `rho` whose arcs to `a`
/// and `b` subtend central angles `2α` and `2β`:
/// `arccot(cos ρ tan α) + arccot(cos ρ tan β)`.
pub fn inscribed_angle(rho: f64, alpha: f64, beta: f64) -> Result<f64> {
    check("rho", rho, rho > 0.0 && rho < FRAC_PI_2)?;
    check("alpha", alpha, alpha > 0.0 && alpha < FRAC_PI_2)?;
    check("beta", beta, beta > 0.0 && beta < FRAC_PI_2)?;
    let c = rho.cos();
    Ok(arccot(c * alpha.tan()) + arccot(c * beta.tan()))
}

/// Equal side `B = arcsin(sin Δ / sin 2α)` of the isosceles triangle with
/// apex angle `2α` whose two base heights are `delta`.
pub fn isosceles_side(alpha: f64, delta: f64) -> Result<f64> {
    check("thickness", delta, delta > 0.0 && delta <= FRAC_PI_2)?;
    check(
        "half apex angle",
        alpha,
        alpha > 0.0 && alpha <= FRAC_PI_4 + 1e-15,
    )?;
    let ratio = delta.sin() / (2.0 * alpha).sin();
    check("sin Δ / sin 2α", ratio, ratio <= 1.0 + 1e-15)?;
    Ok(ratio.min(1.0).asin())
}

/// Height from the apex of that isosceles triangle to its base:
/// `arctan(cos α · tan B)`.
pub fn isosceles_apex_height(alpha: f64, delta: f64) -> Result<f64> {
    let b = isosceles_side(alpha, delta)?;
    let (sb, cb) = b.sin_cos();
    Ok((alpha.cos() * sb).atan2(cb))
}

/// Half apex angle at which the isosceles triangle becomes equilateral
/// (all three heights equal `delta`), by bisection on the apex height.
pub fn alpha_equilateral(delta: f64) -> Result<f64> {
    check("thickness", delta, delta > 0.0 && delta <= FRAC_PI_2)?;
    // apex height falls from π/2 at α = Δ/2 to below Δ at α = π/4
    let (mut lo, mut hi) = (0.5 * delta, FRAC_PI_4);
    if isosceles_apex_height(hi, delta)? >= delta {
        return Ok(hi);
    }
    while hi - lo > ALPHA_EQ_TOL {
        let mid = 0.5 * (lo + hi);
        if isosceles_apex_height(mid, delta)? > delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Circumradius `σ` of the isosceles two-height triangle, from
/// `tan σ = 2(√(1 − x) − √(1 − x − c/x)) / sin Δ` with `x = cos²α`,
/// `c = sin²Δ / 4`.
pub fn sigma_isosceles(alpha: f64, delta: f64) -> Result<f64> {
    check("thickness", delta, delta > 0.0 && delta <= FRAC_PI_2)?;
    let alpha_eq = alpha_equilateral(delta)?;
    check(
        "half apex angle",
        alpha,
        alpha >= alpha_eq - 10.0 * ALPHA_EQ_TOL && alpha <= FRAC_PI_4 + 1e-15,
    )?;
    Ok(tan_sigma_isosceles(alpha, delta)?.atan())
}

/// `tan σ` of [`sigma_isosceles`], without the `α ≥ α_eq` check.
pub fn tan_sigma_isosceles(alpha: f64, delta: f64) -> Result<f64> {
    let s = delta.sin();
    let x = alpha.cos().powi(2);
    let c = 0.25 * s * s;
    let outer = (1.0 - x).sqrt();
    let inner = clamped_sqrt("1 - x - c/x", 1.0 - x - c / x)?;
    Ok(2.0 * (c / x) / (s * (outer + inner)))
}

/// The closed-form bounds, for tabulation and reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Quarter,
    Reuleaux,
    Equilateral,
    Dekster,
    ConstantWidthLarge,
    Reduced,
}

impl Bound {
    pub const ALL: [Bound; 6] = [
        Bound::Quarter,
        Bound::Reuleaux,
        Bound::Equilateral,
        Bound::Dekster,
        Bound::ConstantWidthLarge,
        Bound::Reduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bound::Quarter => "rho_quarter",
            Bound::Reuleaux => "rho_reuleaux",
            Bound::Equilateral => "rho_equilateral",
            Bound::Dekster => "dekster_bound",
            Bound::ConstantWidthLarge => "rho_constant_width_large",
            Bound::Reduced => "rho_reduced",
        }
    }

    pub fn evaluate(self, delta: f64) -> Result<BoundResult> {
        let value = match self {
            Bound::Quarter => rho_quarter(delta),
            Bound::Reuleaux => rho_reuleaux(delta),
            Bound::Equilateral => rho_equilateral(delta),
            Bound::Dekster => dekster_bound(delta),
            Bound::ConstantWidthLarge => rho_constant_width_large(delta),
            Bound::Reduced => rho_reduced(delta),
        }?;
        Ok(BoundResult {
            claim_id: self.name(),
            input_delta: delta,
            value,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundResult {
    pub claim_id: &'static str,
    pub input_delta: f64,
    pub value: f64,
}
