//! Local geometry of parametrized surfaces in Minkowski 3-space.
//!
//! A [`Chart`] supplies the position map `r(q1, q2)` and, optionally, its
//! first and second partial derivatives. Anything not supplied is obtained
//! with the finite differences of [`crate::numdiff`].
//!
//! Conventions:
//!
//! * the unit normal is `N = |det g|^(-1/2) (d1 r x_1 d2 r)`, never re-oriented;
//! * `eps = <N, N>_1`, `+1` on time-like and `-1` on space-like surfaces;
//! * the Weingarten matrix satisfies `dN/dq_i = sum_j a_ij dr/dq_j`, i.e.
//!   `[a] = -[h][g]^-1` with `h_ij = <N, d_ij r>_1`;
//! * `H = (eps/2) tr(a)` and `K = eps det(a)`.
//!
//! The sign of `H` and of the principal curvatures follows the orientation of
//! `N`. Everything downstream (`H^2`, `K`, the geometric potential, the volume
//! factor of a symmetric layer) is insensitive to flipping `N`.

use crate::error::{Error, Result};
use crate::lorentz::{classify_signature, lorentz_cross, MinkVector, Signature2, TAU_C};
use crate::numdiff;

/// Closed parameter rectangle; bounds may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDomain {
    pub q1: (f64, f64),
    pub q2: (f64, f64),
}

impl ParamDomain {
    pub const UNBOUNDED: ParamDomain = ParamDomain {
        q1: (f64::NEG_INFINITY, f64::INFINITY),
        q2: (f64::NEG_INFINITY, f64::INFINITY),
    };

    pub fn contains(&self, q: [f64; 2]) -> bool {
        q[0].is_finite()
            && q[1].is_finite()
            && q[0] >= self.q1.0
            && q[0] <= self.q1.1
            && q[1] >= self.q2.0
            && q[1] <= self.q2.1
    }
}

/// A parametrized surface patch `r: domain -> R^3_1`.
///
/// Implementations must be pure functions of `q`.
pub trait Chart: Send + Sync {
    fn position(&self, q: [f64; 2]) -> MinkVector;

    fn domain(&self) -> ParamDomain {
        ParamDomain::UNBOUNDED
    }

    /// `[d1 r, d2 r]`, if known in closed form.
    fn first_partials(&self, _q: [f64; 2]) -> Option<[MinkVector; 2]> {
        None
    }

    /// `[d11 r, d12 r, d22 r]`, if known in closed form.
    fn second_partials(&self, _q: [f64; 2]) -> Option<[MinkVector; 3]> {
        None
    }
}

impl<C: Chart + ?Sized> Chart for &C {
    fn position(&self, q: [f64; 2]) -> MinkVector {
        (**self).position(q)
    }
    fn domain(&self) -> ParamDomain {
        (**self).domain()
    }
    fn first_partials(&self, q: [f64; 2]) -> Option<[MinkVector; 2]> {
        (**self).first_partials(q)
    }
    fn second_partials(&self, q: [f64; 2]) -> Option<[MinkVector; 3]> {
        (**self).second_partials(q)
    }
}

/// Chart backed by a closure for the position only.
pub struct FnChart<F> {
    f: F,
    domain: ParamDomain,
}

impl<F> FnChart<F>
where
    F: Fn(f64, f64) -> MinkVector + Send + Sync,
{
    pub fn new(domain: ParamDomain, f: F) -> Self {
        Self { f, domain }
    }
}

impl<F> Chart for FnChart<F>
where
    F: Fn(f64, f64) -> MinkVector + Send + Sync,
{
    fn position(&self, q: [f64; 2]) -> MinkVector {
        (self.f)(q[0], q[1])
    }
    fn domain(&self) -> ParamDomain {
        self.domain
    }
}

/// Wraps a chart and hides its analytic derivatives, forcing the
/// finite-difference path.
pub struct NumericOnly<C>(pub C);

impl<C: Chart> Chart for NumericOnly<C> {
    fn position(&self, q: [f64; 2]) -> MinkVector {
        self.0.position(q)
    }
    fn domain(&self) -> ParamDomain {
        self.0.domain()
    }
}

/// Position and partial derivatives up to second order at one point.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceJet {
    pub r: MinkVector,
    pub r1: MinkVector,
    pub r2: MinkVector,
    pub r11: MinkVector,
    pub r12: MinkVector,
    pub r22: MinkVector,
}

pub fn surface_jet<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<SurfaceJet> {
    if !chart.domain().contains(q) {
        return Err(Error::OutOfDomain { q });
    }
    let r = chart.position(q);
    let [r1, r2] = chart.first_partials(q).unwrap_or_else(|| {
        [
            numdiff::derivative(|x| chart.position([x, q[1]]), q[0]),
            numdiff::derivative(|y| chart.position([q[0], y]), q[1]),
        ]
    });
    let [r11, r12, r22] = chart.second_partials(q).unwrap_or_else(|| {
        [
            numdiff::second_derivative(|x| chart.position([x, q[1]]), q[0]),
            numdiff::mixed_partial(|x, y| chart.position([x, y]), q[0], q[1]),
            numdiff::second_derivative(|y| chart.position([q[0], y]), q[1]),
        ]
    });
    Ok(SurfaceJet { r, r1, r2, r11, r12, r22 })
}

/// First fundamental form `g_ij = <d_i r, d_j r>_1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstForm {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

impl FirstForm {
    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.g11, self.g12], [self.g12, self.g22]]
    }

    pub fn inverse(&self) -> [[f64; 2]; 2] {
        let d = self.det();
        [[self.g22 / d, -self.g12 / d], [-self.g12 / d, self.g11 / d]]
    }

    pub fn signature(&self) -> Result<Signature2> {
        classify_signature(self.matrix())
    }
}

fn first_form_of(jet: &SurfaceJet, q: [f64; 2]) -> Result<FirstForm> {
    let g = FirstForm {
        g11: jet.r1.dot(jet.r1),
        g12: jet.r1.dot(jet.r2),
        g22: jet.r2.dot(jet.r2),
    };
    let e1 = jet.r1.euclidean_norm();
    let e2 = jet.r2.euclidean_norm();
    let scale = e1 * e1 * e2 * e2;
    if !(scale > 0.0) || !(g.det().abs() / scale >= TAU_C) {
        return Err(Error::DegenerateMetric { q });
    }
    Ok(g)
}

pub fn first_fundamental_form<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<FirstForm> {
    let jet = surface_jet(chart, q)?;
    first_form_of(&jet, q)
}

fn normal_of(jet: &SurfaceJet, g: &FirstForm, q: [f64; 2]) -> Result<(MinkVector, i8)> {
    let c = lorentz_cross(jet.r1, jet.r2);
    let detg = g.det();
    let n = c * (1.0 / detg.abs().sqrt());
    let nn = n.norm_squared();
    if !nn.is_finite() || (nn.abs() - 1.0).abs() > 0.5 {
        return Err(Error::LightLikePoint { q });
    }
    // <c, c>_1 = -det g, so eps = -sign(det g)
    let eps = if nn > 0.0 { 1 } else { -1 };
    Ok((n, eps))
}

/// Unit normal and its causal sign `eps = <N, N>_1`.
pub fn unit_normal<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<(MinkVector, i8)> {
    let jet = surface_jet(chart, q)?;
    let g = first_form_of(&jet, q).map_err(|_| Error::LightLikePoint { q })?;
    normal_of(&jet, &g, q)
}

/// Both fundamental forms plus the normal sign at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
    pub h11: f64,
    pub h12: f64,
    pub h22: f64,
    pub detg: f64,
    pub epsilon: i8,
}

impl FundamentalForms {
    pub fn first(&self) -> FirstForm {
        FirstForm { g11: self.g11, g12: self.g12, g22: self.g22 }
    }
}

pub fn fundamental_forms<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<FundamentalForms> {
    Ok(point_geometry(chart, q)?.forms)
}

/// Weingarten matrix and curvatures at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeData {
    /// `a[i][j]` with `dN/dq_i = sum_j a_ij dr/dq_j`
    pub a: [[f64; 2]; 2],
    pub mean_curvature: f64,
    pub gaussian_curvature: f64,
    pub epsilon: i8,
    /// real eigenvalues and a full eigenbasis
    pub diagonalizable: bool,
}

impl ShapeData {
    pub fn trace(&self) -> f64 {
        self.a[0][0] + self.a[1][1]
    }

    pub fn det(&self) -> f64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    /// `H^2 - eps K`, one quarter of the discriminant of the characteristic
    /// polynomial of `a`; zero exactly at umbilics.
    pub fn umbilicity(&self) -> f64 {
        let h = self.mean_curvature;
        h * h - f64::from(self.epsilon) * self.gaussian_curvature
    }

    /// Geometry-induced potential `-(eps H^2 - K)` in units `hbar^2/2m = 1`.
    pub fn geometric_potential(&self) -> f64 {
        let h = self.mean_curvature;
        -(f64::from(self.epsilon) * h * h - self.gaussian_curvature)
    }

    /// Real eigenvalues of `a` (principal curvatures), ascending, when they exist.
    pub fn principal_curvatures(&self) -> Option<(f64, f64)> {
        let half_tr = 0.5 * self.trace();
        let disc = half_tr * half_tr - self.det();
        let scale = self.a.iter().flatten().fold(0.0_f64, |m, x| m.max(x.abs())).max(1e-300);
        if disc < -TAU_C * scale * scale {
            return None;
        }
        let rad = disc.max(0.0).sqrt();
        Some((half_tr - rad, half_tr + rad))
    }
}

fn shape_from(forms: &FundamentalForms) -> ShapeData {
    let ginv = forms.first().inverse();
    let h = [[forms.h11, forms.h12], [forms.h12, forms.h22]];
    let mut a = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            a[i][j] = -(h[i][0] * ginv[0][j] + h[i][1] * ginv[1][j]);
        }
    }
    let eps = f64::from(forms.epsilon);
    let tr = a[0][0] + a[1][1];
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    let scale = a.iter().flatten().fold(0.0_f64, |m, x| m.max(x.abs()));
    let disc = 0.25 * tr * tr - det;
    let diagonalizable = if scale == 0.0 || disc > TAU_C * scale * scale {
        true
    } else if disc < -TAU_C * scale * scale {
        false
    } else {
        // repeated eigenvalue: diagonalizable only if a is a multiple of I
        let off = a[0][1].abs().max(a[1][0].abs()).max((a[0][0] - a[1][1]).abs());
        off <= 1e-5 * scale
    };
    ShapeData {
        a,
        mean_curvature: 0.5 * eps * tr,
        gaussian_curvature: eps * det,
        epsilon: forms.epsilon,
        diagonalizable,
    }
}

/// Everything local about the surface at one point.
#[derive(Debug, Clone, Copy)]
pub struct PointGeometry {
    pub jet: SurfaceJet,
    pub normal: MinkVector,
    pub forms: FundamentalForms,
    pub shape: ShapeData,
}

pub fn point_geometry<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<PointGeometry> {
    let jet = surface_jet(chart, q)?;
    let g = first_form_of(&jet, q)?;
    let (n, eps) = normal_of(&jet, &g, q)?;
    let forms = FundamentalForms {
        g11: g.g11,
        g12: g.g12,
        g22: g.g22,
        h11: n.dot(jet.r11),
        h12: n.dot(jet.r12),
        h22: n.dot(jet.r22),
        detg: g.det(),
        epsilon: eps,
    };
    let shape = shape_from(&forms);
    Ok(PointGeometry { jet, normal: n, forms, shape })
}

pub fn shape_data<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<ShapeData> {
    Ok(point_geometry(chart, q)?.shape)
}

/// `V_S = -(eps H^2 - K)`, units `hbar^2/2m = 1`.
pub fn geometric_potential<C: Chart + ?Sized>(chart: &C, q: [f64; 2]) -> Result<f64> {
    Ok(shape_data(chart, q)?.geometric_potential())
}

/// Metric of the normal tube `R = r + q3 N` at `(q1, q2, q3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubularMetric {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
    pub g33: f64,
    /// volume factor: `dV = |f| dS dq3`
    pub f: f64,
}

pub fn tubular_metric<C: Chart + ?Sized>(chart: &C, q: [f64; 2], q3: f64) -> Result<TubularMetric> {
    let geo = point_geometry(chart, q)?;
    tubular_from(&geo, q, q3)
}

pub fn tubular_from(geo: &PointGeometry, q: [f64; 2], q3: f64) -> Result<TubularMetric> {
    let a = geo.shape.a;
    let g = geo.forms.first().matrix();
    // M = I + q3 a, G = M g M^T
    let m = [
        [1.0 + q3 * a[0][0], q3 * a[0][1]],
        [q3 * a[1][0], 1.0 + q3 * a[1][1]],
    ];
    let mut big = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut s = 0.0;
            for k in 0..2 {
                for l in 0..2 {
                    s += m[i][k] * m[j][l] * g[k][l];
                }
            }
            big[i][j] = s;
        }
    }
    let eps = f64::from(geo.forms.epsilon);
    let f = eps * (1.0 + q3 * geo.shape.trace() + q3 * q3 * geo.shape.det());
    if f.abs() < TAU_C {
        return Err(Error::FocalPoint { q, q3 });
    }
    Ok(TubularMetric { g11: big[0][0], g12: big[0][1], g22: big[1][1], g33: eps, f })
}
