use crate::error::{Error, Result};

use super::problem::{EffectiveProblem1D, Grid1D, Wall};
use super::tridiag::SymTridiag;

/// What a [`Spectrum`] contains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumKind {
    /// states below the continuum floor (or all states in a closed box)
    BoundStates,
    /// every discrete eigenvalue of the boxed operator with `lo <= E <= hi`
    Window { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// ascending
    pub eigenvalues: Vec<f64>,
    /// interior samples, normalized so that `sum y^2 h = 1`
    pub eigenvectors: Vec<Vec<f64>>,
    pub kind: SpectrumKind,
    pub requested: usize,
    /// number of states that qualified before the `requested` cap
    pub found: usize,
    pub grid: Grid1D,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// The symmetric operator `T = -D2 + eta V`, whose eigenvalues are `eta E`.
pub fn signed_operator(prob: &EffectiveProblem1D) -> SymTridiag {
    let h = prob.grid.h();
    let inv = 1.0 / (h * h);
    let eta = f64::from(prob.eta);
    let diag = prob.potential.iter().map(|v| 2.0 * inv + eta * v).collect();
    let off = vec![-inv; prob.potential.len() - 1];
    SymTridiag::new(diag, off)
}

/// Estimated discretization error of eigenvalues near `floor`.
fn truncation_estimate(h: f64, floor: f64) -> f64 {
    h * h * floor.abs().max(1.0).powi(2) / 12.0
}

fn assemble(
    prob: &EffectiveProblem1D,
    op: &SymTridiag,
    k0: usize,
    k1: usize,
    kind: SpectrumKind,
    requested: usize,
    found: usize,
) -> Result<Spectrum> {
    if !op.is_finite() {
        return Err(Error::NotConverged("operator has non-finite entries".into()));
    }
    let (mu, vecs) = op
        .eigenpairs(k0, k1)
        .ok_or_else(|| Error::NotConverged(format!("inverse iteration failed for states {k0}..{k1}")))?;
    let eta = f64::from(prob.eta);
    let scale = 1.0 / prob.grid.h().sqrt();
    let mut pairs: Vec<(f64, Vec<f64>)> = mu
        .into_iter()
        .zip(vecs)
        .map(|(m, v)| (eta * m, v.into_iter().map(|x| x * scale).collect()))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(Spectrum { eigenvalues, eigenvectors, kind, requested, found, grid: prob.grid })
}

/// Bound states of the boxed problem, at most `max_states` of them.
///
/// For `eta = -1` the kinetic term is negative and the spectrum has no
/// lower bound; the solver works with `T = -D2 + eta V`, keeps the states
/// of `T` below its continuum floor and reports them as `E = eta mu`.
/// An empty spectrum means no bound state, not a failure.
pub fn solve_bound_states(prob: &EffectiveProblem1D, max_states: usize) -> Result<Spectrum> {
    let op = signed_operator(prob);
    let floor = prob.continuum_floor();
    let count = if floor.is_finite() {
        let threshold = floor - 10.0 * truncation_estimate(prob.grid.h(), floor);
        op.count_below(threshold)
    } else {
        op.len()
    };
    let k = count.min(max_states);
    assemble(prob, &op, 0, k, SpectrumKind::BoundStates, max_states, count)
}

/// Eigenvalues of the boxed problem with `lo <= E <= hi`, lowest `|eta E|`
/// side first, at most `max_states` of them.
pub fn solve_window(prob: &EffectiveProblem1D, lo: f64, hi: f64, max_states: usize) -> Result<Spectrum> {
    if !(lo <= hi) {
        return Err(Error::InvalidArgument(format!("empty window [{lo}, {hi}]")));
    }
    let op = signed_operator(prob);
    let (mlo, mhi) = if prob.eta > 0 { (lo, hi) } else { (-hi, -lo) };
    let k0 = if mlo == f64::NEG_INFINITY { 0 } else { op.count_below(mlo) };
    let k_end = if mhi == f64::INFINITY { op.len() } else { op.count_below(next_up(mhi)) };
    let found = k_end.saturating_sub(k0);
    let k1 = k0 + found.min(max_states);
    assemble(prob, &op, k0, k1, SpectrumKind::Window { lo, hi }, max_states, found)
}

fn next_up(x: f64) -> f64 {
    if x.is_finite() {
        x + x.abs().max(f64::MIN_POSITIVE) * f64::EPSILON
    } else {
        x
    }
}

/// Default number of grid points for the sphere reference problem.
pub const SPHERE_DEFAULT_POINTS: usize = 2001;

/// Effective problem of the Euclidean round sphere of radius `r`:
/// `-psi'' + [-1/(4R^2) + (ell^2 - 1/4) csc^2(s/R) / R^2] psi = E psi` on `(0, pi R)`.
pub fn sphere_problem(r: f64, ell: i64, n: usize) -> Result<EffectiveProblem1D> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidArgument(format!("sphere radius must be positive, got {r}")));
    }
    if ell == 0 {
        return Err(Error::SingularChannel);
    }
    if n < super::problem::MIN_GRID_POINTS {
        return Err(Error::GridTooCoarse { n, min: super::problem::MIN_GRID_POINTS });
    }
    let l2 = (ell * ell) as f64;
    let grid = Grid1D::new(0.0, std::f64::consts::PI * r, n)?;
    EffectiveProblem1D::from_fn(grid, 1, ell as f64, [Wall::Physical, Wall::Physical], |s| {
        let c = 1.0 / (s / r).sin();
        (-0.25 + (l2 - 0.25) * c * c) / (r * r)
    })
}

pub fn sphere_effective_solve(r: f64, ell: i64, max_states: usize) -> Result<Spectrum> {
    sphere_effective_solve_with(r, ell, max_states, SPHERE_DEFAULT_POINTS)
}

pub fn sphere_effective_solve_with(r: f64, ell: i64, max_states: usize, n: usize) -> Result<Spectrum> {
    solve_bound_states(&sphere_problem(r, ell, n)?, max_states)
}

/// Largest asymmetry `|H_ij - H_ji|` of the assembled Hamiltonian
/// `H = -(1/eta) D2 + V`, built row by row from the stencil.
pub fn hermiticity_check(prob: &EffectiveProblem1D) -> f64 {
    let h = prob.grid.h();
    let c = prob.kinetic_coefficient() / (h * h);
    let m = prob.potential.len();
    // row i has entries at columns i-1, i, i+1
    let row = |i: usize| -> [f64; 3] {
        let left = if i > 0 { -c } else { 0.0 };
        let right = if i + 1 < m { -c } else { 0.0 };
        [left, 2.0 * c + prob.potential[i], right]
    };
    let mut worst: f64 = 0.0;
    for i in 0..m.saturating_sub(1) {
        let upper = row(i)[2];
        let lower = row(i + 1)[0];
        worst = worst.max((upper - lower).abs());
    }
    if prob.potential.iter().any(|v| !v.is_finite()) {
        return f64::INFINITY;
    }
    worst
}
