//! Parsing of angle arguments and point-set files.

use std::f64::consts::PI;
use std::path::Path;

use serde::Deserialize;
use sphcover::{Error, Result, SpherePoint};

/// Parses an angle in radians: a plain number, or a multiple of `pi`
/// such as `pi`, `pi/2`, `2pi/3`, `0.5*pi`.
pub fn parse_angle(text: &str) -> std::result::Result<f64, String> {
    let s = text.trim().to_ascii_lowercase().replace(' ', "");
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let bad = || format!("`{text}` is not an angle (use e.g. 1.2, pi/2 or 2pi/3)");
    let (head, den) = match s.split_once('/') {
        Some((h, d)) => (h, d.parse::<f64>().map_err(|_| bad())?),
        None => (s.as_str(), 1.0),
    };
    let coef = head.strip_suffix("pi").ok_or_else(bad)?;
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let coef = match coef {
        "" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(coef * PI / den)
}

/// Parses a comma-separated list of angles; an item `lo:hi:count` expands
/// to `count` evenly spaced values from `lo` to `hi` inclusive.
pub fn parse_grid(text: &str) -> std::result::Result<Vec<f64>, String> {
    let mut grid = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [one] => grid.push(parse_angle(one)?),
            [lo, hi, count] => {
                let (lo, hi) = (parse_angle(lo)?, parse_angle(hi)?);
                let count: usize = count
                    .parse()
                    .map_err(|_| format!("`{count}` is not a count"))?;
                match count {
                    0 => {}
                    1 => grid.push(lo),
                    _ => grid
                        .extend((0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)),
                }
            }
            _ => return Err(format!("`{item}` is neither an angle nor lo:hi:count")),
        }
    }
    Ok(grid)
}

#[derive(Deserialize)]
struct PointsFile {
    points: Vec<[f64; 3]>,
}

/// Reads `{"points": [[x, y, z], ...]}`, normalizing each point.
pub fn read_points(path: &Path) -> Result<Vec<SpherePoint>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file: PointsFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
    file.points
        .into_iter()
        .map(|[x, y, z]| SpherePoint::new(x, y, z))
        .collect()
}
