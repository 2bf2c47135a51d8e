//! Tridiagonal linear algebra: Sturm-sequence bisection and inverse
//! iteration for real symmetric matrices, and a partially pivoted solver
//! for general (real or complex) tridiagonal systems.

use num_complex::ComplexFloat;

/// Real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    /// `off[i]` couples rows `i` and `i + 1`
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "empty matrix");
        assert_eq!(off.len() + 1, diag.len(), "off-diagonal length must be n - 1");
        Self { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.diag.iter().chain(&self.off).all(|x| x.is_finite())
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    pub fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE.max(f64::EPSILON * f64::EPSILON * self.norm_bound());
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.len() {
            if i > 0 {
                let e = self.off[i - 1];
                q = self.diag[i] - x - e * e / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based), by bisection.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.len());
        let (mut lo, mut hi) = self.gershgorin();
        let pad = f64::EPSILON * (lo.abs().max(hi.abs()) + 1.0);
        lo -= pad;
        hi += pad;
        for _ in 0..256 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvalues `k0..k1` with unit Euclidean-norm eigenvectors.
    pub fn eigenpairs(&self, k0: usize, k1: usize) -> Option<(Vec<f64>, Vec<Vec<f64>>)> {
        let n = self.len();
        let k1 = k1.min(n);
        let mut vals = Vec::with_capacity(k1.saturating_sub(k0));
        let mut vecs: Vec<Vec<f64>> = Vec::with_capacity(vals.capacity());
        let scale = self.norm_bound().max(f64::MIN_POSITIVE);
        for k in k0..k1 {
            let lambda = self.eigenvalue(k);
            let v = self.inverse_iteration(lambda, scale, &vecs)?;
            vals.push(lambda);
            vecs.push(v);
        }
        Some((vals, vecs))
    }

    fn inverse_iteration(&self, lambda: f64, scale: f64, prev: &[Vec<f64>]) -> Option<Vec<f64>> {
        let n = self.len();
        // shift just off the eigenvalue so the factorization stays finite
        let shift = lambda + 4.0 * f64::EPSILON * scale;
        let sub = self.off.clone();
        let sup = self.off.clone();
        let diag: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * (0.7137 * i as f64 + 0.3).sin()).collect();
        for _ in 0..4 {
            let mut y = solve_tridiagonal(&sub, &diag, &sup, &x)?;
            for p in prev {
                let c: f64 = p.iter().zip(&y).map(|(a, b)| a * b).sum();
                for (yi, pi) in y.iter_mut().zip(p) {
                    *yi -= c * pi;
                }
            }
            let nrm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !(nrm.is_finite() && nrm > 0.0) {
                return None;
            }
            x = y.into_iter().map(|v| v / nrm).collect();
        }
        let imax = x
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .map(|(i, _)| i)?;
        if x[imax] < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
        Some(x)
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * x[i];
                if i > 0 {
                    s += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * x[i + 1];
                }
                s
            })
            .collect()
    }
}

/// Solve `A x = b` for tridiagonal `A` by Gaussian elimination with
/// partial pivoting. `sub[i] = A[i+1][i]`, `sup[i] = A[i][i+1]`.
///
/// Returns `None` on an exactly singular pivot or a non-finite result.
pub fn solve_tridiagonal<T: ComplexFloat>(sub: &[T], diag: &[T], sup: &[T], rhs: &[T]) -> Option<Vec<T>> {
    let n = diag.len();
    if n == 0 || sub.len() + 1 != n || sup.len() + 1 != n || rhs.len() != n {
        return None;
    }
    let mut d = diag.to_vec();
    let mut du = sup.to_vec();
    // after elimination dl[i] holds the second superdiagonal of U
    let mut dl = sub.to_vec();
    let mut b = rhs.to_vec();
    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            if d[i].is_zero() {
                return None;
            }
            let fact = dl[i] / d[i];
            d[i + 1] = d[i + 1] - fact * du[i];
            b[i + 1] = b[i + 1] - fact * b[i];
            dl[i] = T::zero();
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if i + 2 < n {
                dl[i] = du[i + 1];
                du[i + 1] = -fact * dl[i];
            } else {
                dl[i] = T::zero();
            }
            du[i] = temp;
            let tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
    }
    if d[n - 1].is_zero() {
        return None;
    }
    let mut x = vec![T::zero(); n];
    x[n - 1] = b[n - 1] / d[n - 1];
    if n >= 2 {
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (b[i] - du[i] * x[i + 1] - dl[i] * x[i + 2]) / d[i];
    }
    if x.iter().all(|v| v.is_finite()) {
        Some(x)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{DMatrix, SymmetricEigen};
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(n: usize, seed: u64) -> SymTridiag {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SymTridiag::new(
            (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect(),
            (0..n - 1).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )
    }

    fn dense(t: &SymTridiag) -> DMatrix<f64> {
        let n = t.len();
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                t.diag[i]
            } else if i + 1 == j {
                t.off[i]
            } else if j + 1 == i {
                t.off[j]
            } else {
                0.0
            }
        })
    }

    #[test]
    fn eigenvalues_match_dense_oracle() {
        for seed in 0..5 {
            let t = random_matrix(40, seed);
            let mut oracle: Vec<f64> = SymmetricEigen::new(dense(&t)).eigenvalues.iter().copied().collect();
            oracle.sort_by(f64::total_cmp);
            for (k, want) in oracle.iter().enumerate() {
                assert!((t.eigenvalue(k) - want).abs() < 1e-12, "k={k}");
            }
            assert_eq!(t.count_below(oracle[10] + 1e-9), 11);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_residual_free() {
        let t = random_matrix(60, 9);
        let (vals, vecs) = t.eigenpairs(0, 8).unwrap();
        for (i, v) in vecs.iter().enumerate() {
            let av = t.apply(v);
            let res = av.iter().zip(v).map(|(a, b)| (a - vals[i] * b).abs()).fold(0.0, f64::max);
            assert!(res < 1e-10);
            for (j, w) in vecs.iter().enumerate() {
                let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn clustered_eigenvalues_stay_orthogonal() {
        // two decoupled identical blocks give exactly double eigenvalues
        let a = random_matrix(10, 4);
        let mut diag = a.diag.clone();
        diag.push(50.0);
        diag.extend_from_slice(&a.diag);
        let mut off = a.off.clone();
        off.extend_from_slice(&[0.0, 0.0]);
        off.extend_from_slice(&a.off);
        let t = SymTridiag::new(diag, off);
        let (_, vecs) = t.eigenpairs(0, 6).unwrap();
        for i in 0..vecs.len() {
            for j in 0..i {
                let dot: f64 = vecs[i].iter().zip(&vecs[j]).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pivoted_solver_real_and_complex() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 30;
        let sub: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let sup: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-2.0..2.0)).collect();
        // tiny diagonal forces row swaps
        let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-1e-3..1e-3)).collect();
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..n)
            .map(|i| {
                let mut s = diag[i] * x[i];
                if i > 0 {
                    s += sub[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += sup[i] * x[i + 1];
                }
                s
            })
            .collect();
        let got = solve_tridiagonal(&sub, &diag, &sup, &b).unwrap();
        for (g, w) in got.iter().zip(&x) {
            assert!((g - w).abs() < 1e-9);
        }

        let c = |v: &Vec<f64>, s: f64| -> Vec<Complex64> { v.iter().map(|r| Complex64::new(*r, s * r)).collect() };
        let (subc, diagc, supc) = (c(&sub, 0.5), c(&diag, -1.0), c(&sup, 2.0));
        let xc: Vec<Complex64> = x.iter().map(|r| Complex64::new(*r, 1.0 - r)).collect();
        let bc: Vec<Complex64> = (0..n)
            .map(|i| {
                let mut s = diagc[i] * xc[i];
                if i > 0 {
                    s += subc[i - 1] * xc[i - 1];
                }
                if i + 1 < n {
                    s += supc[i] * xc[i + 1];
                }
                s
            })
            .collect();
        // the tiny diagonal makes this system ill-conditioned; check the
        // backward error
        let got = solve_tridiagonal(&subc, &diagc, &supc, &bc).unwrap();
        for i in 0..n {
            let mut s = diagc[i] * got[i];
            if i > 0 {
                s += subc[i - 1] * got[i - 1];
            }
            if i + 1 < n {
                s += supc[i] * got[i + 1];
            }
            assert!((s - bc[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn singular_system_is_reported() {
        assert!(solve_tridiagonal(&[0.0], &[0.0, 1.0], &[0.0], &[1.0, 1.0]).is_none());
    }
}
