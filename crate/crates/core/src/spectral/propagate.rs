//! Implicit-midpoint (Crank-Nicolson) time evolution of
//! `i d/dt psi = H psi`, `H = -(1/eta) D2 + V`, and a discrete check of the
//! continuity equation.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::problem::{EffectiveProblem1D, Grid1D};
use super::tridiag::solve_tridiagonal;

/// Complex amplitudes on the interior points of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction1D {
    pub grid: Grid1D,
    pub amplitudes: Vec<Complex64>,
    pub time: f64,
    /// `sum |psi|^2 h` at construction
    pub norm: f64,
}

impl Wavefunction1D {
    pub fn new(grid: Grid1D, amplitudes: Vec<Complex64>, time: f64) -> Result<Self> {
        if amplitudes.len() != grid.interior_len() {
            return Err(Error::GridMismatch(format!(
                "{} amplitudes for {} interior points",
                amplitudes.len(),
                grid.interior_len()
            )));
        }
        if amplitudes.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidArgument("non-finite amplitude".into()));
        }
        let norm = grid_norm(&grid, &amplitudes);
        Ok(Self { grid, amplitudes, time, norm })
    }

    /// Normalized Gaussian packet `exp(-(x-x0)^2 / (4 sigma^2) + i k0 x)`.
    pub fn gaussian(grid: Grid1D, x0: f64, sigma: f64, k0: f64) -> Result<Self> {
        let amps: Vec<Complex64> = grid
            .interior()
            .into_iter()
            .map(|x| {
                let d = (x - x0) / sigma;
                Complex64::from_polar((-0.25 * d * d).exp(), k0 * x)
            })
            .collect();
        let nrm = grid_norm(&grid, &amps).sqrt();
        if !(nrm > 0.0) {
            return Err(Error::InvalidArgument("packet vanishes on the grid".into()));
        }
        Self::new(grid, amps.into_iter().map(|z| z / nrm).collect(), 0.0)
    }

    /// Real samples (an eigenvector) promoted to a wavefunction.
    pub fn from_real(grid: Grid1D, samples: &[f64]) -> Result<Self> {
        Self::new(grid, samples.iter().map(|&x| Complex64::new(x, 0.0)).collect(), 0.0)
    }

    /// `sum |psi|^2 h`, recomputed.
    pub fn probability(&self) -> f64 {
        grid_norm(&self.grid, &self.amplitudes)
    }

    pub fn density(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|z| z.norm_sqr()).collect()
    }
}

fn grid_norm(grid: &Grid1D, amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.h()
}

fn same_grid(a: &Grid1D, b: &Grid1D) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GridMismatch(format!(
            "[{}, {}] n={} vs [{}, {}] n={}",
            a.a, a.b, a.n, b.a, b.b, b.n
        )))
    }
}

/// Upper bound on `||H||` from Gershgorin discs.
pub fn hamiltonian_norm_bound(prob: &EffectiveProblem1D) -> f64 {
    let h = prob.grid.h();
    let c = prob.kinetic_coefficient().abs() / (h * h);
    prob.potential.iter().map(|v| (2.0 * c + v.abs()) + 2.0 * c).fold(0.0, f64::max)
}

/// Step with `||H|| dt = 0.5`. The scheme is unconditionally stable and
/// unitary; this only keeps the phase error of the fastest modes small.
pub fn recommended_dt(prob: &EffectiveProblem1D) -> f64 {
    0.5 / hamiltonian_norm_bound(prob)
}

/// Evolve `psi0` by `steps` implicit-midpoint steps of size `dt`:
/// `(1 + i dt H / 2) psi' = (1 - i dt H / 2) psi`.
pub fn propagate(prob: &EffectiveProblem1D, psi0: &Wavefunction1D, dt: f64, steps: usize) -> Result<Wavefunction1D> {
    same_grid(&prob.grid, &psi0.grid)?;
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidArgument(format!("time step must be positive, got {dt}")));
    }
    let h = prob.grid.h();
    let c = prob.kinetic_coefficient() / (h * h);
    let m = prob.potential.len();
    let half = Complex64::new(0.0, 0.5 * dt);
    let off = half * (-c);
    let sub = vec![off; m - 1];
    let diag_a: Vec<Complex64> = prob.potential.iter().map(|v| 1.0 + half * (2.0 * c + v)).collect();
    let diag_b: Vec<Complex64> = prob.potential.iter().map(|v| 1.0 - half * (2.0 * c + v)).collect();

    let mut psi = psi0.amplitudes.clone();
    let mut rhs = vec![Complex64::new(0.0, 0.0); m];
    for step in 0..steps {
        for i in 0..m {
            let mut s = diag_b[i] * psi[i];
            if i > 0 {
                s -= off * psi[i - 1];
            }
            if i + 1 < m {
                s -= off * psi[i + 1];
            }
            rhs[i] = s;
        }
        psi = solve_tridiagonal(&sub, &diag_a, &sub, &rhs)
            .ok_or_else(|| Error::UnstableStep(format!("singular system at step {step}")))?;
    }
    Wavefunction1D::new(psi0.grid, psi, psi0.time + dt * steps as f64)
}

/// `j_i = 2 c Im(conj(psi_i) (psi_{i+1} - psi_{i-1}) / 2h)` with zero
/// values beyond the walls; `c` is the kinetic coefficient `1/eta`.
fn current(psi: &[Complex64], c: f64, h: f64) -> Vec<f64> {
    let m = psi.len();
    let zero = Complex64::new(0.0, 0.0);
    (0..m)
        .map(|i| {
            let left = if i > 0 { psi[i - 1] } else { zero };
            let right = if i + 1 < m { psi[i + 1] } else { zero };
            2.0 * c * (psi[i].conj() * (right - left)).im / (2.0 * h)
        })
        .collect()
}

/// Max-norm of `(rho_after - rho_before)/dt + div j`, with `j` averaged
/// over the two time levels and differentiated by central differences.
///
/// For a pair produced by [`propagate`] this is `O(dt^2 + h^2)`.
pub fn continuity_residual(
    prob: &EffectiveProblem1D,
    before: &Wavefunction1D,
    after: &Wavefunction1D,
    dt: f64,
) -> Result<f64> {
    same_grid(&before.grid, &after.grid)?;
    same_grid(&prob.grid, &before.grid)?;
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidArgument(format!("time step must be positive, got {dt}")));
    }
    let h = prob.grid.h();
    let c = prob.kinetic_coefficient();
    let jb = current(&before.amplitudes, c, h);
    let ja = current(&after.amplitudes, c, h);
    let j: Vec<f64> = jb.iter().zip(&ja).map(|(a, b)| 0.5 * (a + b)).collect();
    let m = j.len();
    let mut worst: f64 = 0.0;
    for i in 0..m {
        let rate = (after.amplitudes[i].norm_sqr() - before.amplitudes[i].norm_sqr()) / dt;
        let jl = if i > 0 { j[i - 1] } else { 0.0 };
        let jr = if i + 1 < m { j[i + 1] } else { 0.0 };
        worst = worst.max((rate + (jr - jl) / (2.0 * h)).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::problem::Wall;
    use crate::spectral::solve::solve_bound_states;

    fn free(n: usize) -> EffectiveProblem1D {
        let grid = Grid1D::new(-20.0, 20.0, n).unwrap();
        EffectiveProblem1D::from_fn(grid, 1, 0.0, [Wall::Truncation; 2], |_| 0.0).unwrap()
    }

    #[test]
    fn free_packet_spreads_symmetrically() {
        let p = free(2001);
        let psi = Wavefunction1D::gaussian(p.grid, 0.0, 1.0, 0.0).unwrap();
        let out = propagate(&p, &psi, 0.01, 1000).unwrap();
        assert!((out.probability() - psi.probability()).abs() < 1e-10);
        let d = out.density();
        let m = d.len();
        for i in 0..m / 2 {
            assert!((d[i] - d[m - 1 - i]).abs() < 1e-12);
        }
        // it spread
        assert!(d[m / 2] < psi.density()[m / 2]);
        assert!((out.time - 10.0).abs() < 1e-12);
    }

    #[test]
    fn stationary_state_only_rotates() {
        let grid = Grid1D::new(-10.0, 10.0, 1001).unwrap();
        let p = EffectiveProblem1D::from_fn(grid, 1, 0.0, [Wall::Truncation; 2], |x| x * x).unwrap();
        let s = solve_bound_states(&p, 1).unwrap();
        let psi = Wavefunction1D::from_real(grid, &s.eigenvectors[0]).unwrap();
        let out = propagate(&p, &psi, 0.01, 200).unwrap();
        for (a, b) in out.amplitudes.iter().zip(&psi.amplitudes) {
            assert!((a.norm() - b.norm()).abs() < 1e-9);
        }
        assert!(continuity_residual(&p, &psi, &out, 2.0).unwrap() < 1e-8);
    }

    #[test]
    fn identical_pair_reports_divergence_only() {
        let p = free(801);
        let psi = Wavefunction1D::gaussian(p.grid, 0.0, 1.0, 1.5).unwrap();
        let r = continuity_residual(&p, &psi, &psi, 0.1).unwrap();
        let j = current(&psi.amplitudes, 1.0, p.grid.h());
        let h = p.grid.h();
        let div = (1..j.len() - 1).map(|i| ((j[i + 1] - j[i - 1]) / (2.0 * h)).abs()).fold(0.0, f64::max);
        assert!(r > 0.0 && (r - div).abs() < 1e-12 * div.max(1.0));
    }

    #[test]
    fn mismatched_grids_are_rejected() {
        let p = free(101);
        let a = Wavefunction1D::gaussian(p.grid, 0.0, 1.0, 0.0).unwrap();
        let b = Wavefunction1D::gaussian(Grid1D::new(-20.0, 20.0, 103).unwrap(), 0.0, 1.0, 0.0).unwrap();
        assert_eq!(continuity_residual(&p, &a, &b, 0.1).unwrap_err().name(), "GridMismatch");
        assert_eq!(propagate(&p, &b, 0.1, 1).unwrap_err().name(), "GridMismatch");
    }
}
