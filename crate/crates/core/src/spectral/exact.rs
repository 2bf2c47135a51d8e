//! Closed-form reference spectra.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Discrete levels of the one-sheeted hyperboloid of radius `r`:
/// `(n - |ell|)(n - |ell| + 1) / R^2` for integers `0 <= n < |ell| - 1/2`,
/// ascending. Empty for `|ell| <= 1/2`.
pub fn poschl_teller_exact(r: f64, ell: f64) -> Vec<f64> {
    let l = ell.abs();
    let mut out = Vec::new();
    let mut n = 0.0;
    while n < l - 0.5 {
        let m = n - l;
        out.push(m * (m + 1.0) / (r * r));
        n += 1.0;
    }
    out.sort_by(f64::total_cmp);
    out
}

/// `n (n + 1) / R^2` for `|ell| <= n <= n_max`.
pub fn sphere_reference_exact(r: f64, ell: i64, n_max: i64) -> Vec<f64> {
    (ell.abs()..=n_max).map(|n| (n * (n + 1)) as f64 / (r * r)).collect()
}

/// Rectangular box in Minkowski space, `x1` being the time-like side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n: [u32; 3],
}

impl BoxSpec {
    pub fn new(a: f64, b: f64, c: f64, n: [u32; 3]) -> Result<Self> {
        for (name, side) in [("a", a), ("b", b), ("c", c)] {
            if !(side.is_finite() && side > 0.0) {
                return Err(Error::InvalidArgument(format!("box side {name} must be positive, got {side}")));
            }
        }
        if n.contains(&0) {
            return Err(Error::InvalidArgument(format!("mode numbers must be >= 1, got {n:?}")));
        }
        Ok(Self { a, b, c, n })
    }
}

/// `pi^2 (-n1^2/a^2 + n2^2/b^2 + n3^2/c^2)`.
pub fn box_spectrum(spec: &BoxSpec) -> f64 {
    let [n1, n2, n3] = spec.n.map(f64::from);
    let t = n1 * n1 / (spec.a * spec.a);
    let s = n2 * n2 / (spec.b * spec.b) + n3 * n3 / (spec.c * spec.c);
    PI * PI * (s - t)
}

/// All `(n1, n2, n3)` in `[1, n_max]^3` with `|E| <= tol`, lexicographic order.
pub fn zero_energy_modes(a: f64, b: f64, c: f64, n_max: u32, tol: f64) -> Result<Vec<[u32; 3]>> {
    let mut out = Vec::new();
    for n1 in 1..=n_max {
        for n2 in 1..=n_max {
            for n3 in 1..=n_max {
                let spec = BoxSpec::new(a, b, c, [n1, n2, n3])?;
                if box_spectrum(&spec).abs() <= tol {
                    out.push([n1, n2, n3]);
                }
            }
        }
    }
    Ok(out)
}
