use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use sphcover_demo::{bound_curves, outline, sigma_chain};

#[test]
fn outlines_fit_their_cap_circle() {
    for kind in [
        "disk",
        "quarter_disk",
        "reuleaux_triangle",
        "reuleaux_odd_gon",
    ] {
        let o = outline(kind, 1.0, 512, 5).unwrap();
        assert_eq!(o.points.len(), o.vertices);
        let reach = o
            .points
            .iter()
            .map(|[x, y]| (x * x + y * y).sqrt())
            .fold(0.0, f64::max);
        assert!((reach - o.cap_circle).abs() < 1e-9, "{kind}");
        assert!(o.circumradius <= o.bound.unwrap() + 2e-3, "{kind}");
    }
}

#[test]
fn polar_body_uses_the_large_width_bound() {
    let o = outline("polar_constant_width", 2.0 * FRAC_PI_3, 1024, 3).unwrap();
    assert_eq!(o.bound_name, Some("constant width"));
    assert!((o.circumradius - o.bound.unwrap()).abs() < 2e-3);
}

#[test]
fn bad_requests_are_errors() {
    assert!(outline("hexagon", 1.0, 512, 3).is_err());
    assert!(outline("quarter_disk", 2.0, 512, 3).is_err());
    assert!(sigma_chain(0.0, 10).is_err());
}

#[test]
fn curves_cover_their_domains() {
    let curves = bound_curves(100);
    assert_eq!(curves.len(), 5);
    for c in &curves {
        assert!(c.points.len() >= 99, "{}", c.name);
        assert!(
            c.points.windows(2).all(|w| w[1][1] > w[0][1]),
            "{} increases",
            c.name
        );
    }
}

#[test]
fn sigma_chain_ends() {
    let chain = sigma_chain(FRAC_PI_3, 50).unwrap();
    assert_eq!(chain.points.len(), 50);
    assert!((chain.quarter_end - sphcover::bounds::rho_quarter(FRAC_PI_3).unwrap()).abs() < 1e-12);
    assert!(
        (chain.equilateral_end - sphcover::bounds::rho_equilateral(FRAC_PI_3).unwrap()).abs()
            < 1e-9
    );
    let top = chain.points.iter().map(|p| p[1]).fold(0.0, f64::max);
    assert!(top <= chain.quarter_end.max(chain.equilateral_end) + 1e-12);
    assert!(sigma_chain(FRAC_PI_2, 10).is_ok());
}

#[test]
fn json_exports_parse() {
    let text = sphcover_demo::shape_outline("reuleaux_triangle", 1.0, 256, 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "reuleaux_triangle");
    let text = sphcover_demo::bound_curves_json(10).unwrap();
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&text)
            .unwrap()
            .as_array()
            .unwrap()
            .len(),
        5
    );
}
