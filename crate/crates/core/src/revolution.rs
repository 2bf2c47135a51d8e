//! Surfaces of revolution in Minkowski 3-space and their reduction to
//! one-dimensional effective problems.
//!
//! A profile curve `alpha(s)` is swept by a one-parameter group of
//! isometries fixing an axis. With `q1` the group parameter and `q2 = s`
//! the profile arc length the three geometric settings are
//!
//! | axis       | profile plane | `r(q1, q2)`                      | `g`            |
//! |------------|---------------|----------------------------------|----------------|
//! | time-like  | `x1 x3`       | `(u, v sin q1, v cos q1)`        | `diag(v², η)`  |
//! | space-like | `x1 x3`       | `(u cosh q1, u sinh q1, v)`      | `diag(u², η)`  |
//! | space-like | `x2 x3`       | `(u sinh q1, u cosh q1, v)`      | `diag(-u², 1)` |
//!
//! where `η = <alpha', alpha'>_1`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lorentz::{CausalClass, MinkVector, TAU_C};
use crate::spectral::{EffectiveProblem1D, Grid1D, Wall, MIN_GRID_POINTS};
use crate::surface::{Chart, FirstForm, ParamDomain};

/// Default half-width of the box for unbounded profiles, in units of the
/// profile scale.
pub const DEFAULT_BOX_FACTOR: f64 = 60.0;
pub const DEFAULT_GRID_POINTS: usize = 12001;

/// Profile values and derivatives at one arc-length parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileJet {
    pub u: f64,
    pub v: f64,
    pub du: f64,
    pub dv: f64,
    pub d2u: f64,
    pub d2v: f64,
    /// `u' v'' - v' u''` in closed form, when the direct difference would
    /// cancel catastrophically
    pub turning: Option<f64>,
}

impl ProfileJet {
    pub fn turning(&self) -> f64 {
        self.turning.unwrap_or(self.du * self.d2v - self.dv * self.d2u)
    }
}

type JetFn = dyn Fn(f64) -> ProfileJet + Send + Sync;

/// Arc-length parametrized profile `(u(s), v(s))` with analytic derivatives.
#[derive(Clone)]
pub struct ProfileCurve {
    name: String,
    domain: (f64, f64),
    scale: f64,
    jet: Arc<JetFn>,
}

impl fmt::Debug for ProfileCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProfileCurve")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("scale", &self.scale)
            .finish()
    }
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must be positive, got {x}")))
    }
}

impl ProfileCurve {
    /// `domain` is the open interval of admissible `s`; `scale` sets the
    /// default box size.
    pub fn new(
        name: impl Into<String>,
        domain: (f64, f64),
        scale: f64,
        jet: impl Fn(f64) -> ProfileJet + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), domain, scale, jet: Arc::new(jet) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn jet(&self, s: f64) -> ProfileJet {
        (self.jet)(s)
    }

    /// Finite part of the domain used for validation sweeps:
    /// the domain clipped to `+-10 scale` around its finite end (or 0).
    pub fn sample_range(&self) -> (f64, f64) {
        let (lo, hi) = self.domain;
        let w = 10.0 * self.scale;
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => (lo, hi),
            (true, false) => (lo, lo + w),
            (false, true) => (hi - w, hi),
            (false, false) => (-w, w),
        }
    }

    /// `(R sinh(s/R), R cosh(s/R))`: time-like curve, one-sheeted hyperboloid
    /// about the time-like axis.
    pub fn one_sheeted_hyperboloid(r: f64) -> Result<Self> {
        positive("R", r)?;
        Ok(Self::new(format!("one_sheeted_hyperboloid(R={r})"), (f64::NEG_INFINITY, f64::INFINITY), r, move |s| {
            let (sh, ch) = ((s / r).sinh(), (s / r).cosh());
            ProfileJet { u: r * sh, v: r * ch, du: ch, dv: sh, d2u: sh / r, d2v: ch / r, turning: Some(1.0 / r) }
        }))
    }

    /// `(R cosh(s/R), R sinh(s/R))`, `s > 0`: space-like curve, upper sheet
    /// of the two-sheeted hyperboloid.
    pub fn two_sheeted_hyperboloid(r: f64) -> Result<Self> {
        positive("R", r)?;
        Ok(Self::new(format!("two_sheeted_hyperboloid(R={r})"), (0.0, f64::INFINITY), r, move |s| {
            let (sh, ch) = ((s / r).sinh(), (s / r).cosh());
            ProfileJet { u: r * ch, v: r * sh, du: sh, dv: ch, d2u: ch / r, d2v: sh / r, turning: Some(-1.0 / r) }
        }))
    }

    /// `(u0, s)` in the space-like plane.
    pub fn pseudo_cylinder(u0: f64) -> Result<Self> {
        positive("u0", u0)?;
        Ok(Self::new(format!("pseudo_cylinder(u0={u0})"), (f64::NEG_INFINITY, f64::INFINITY), u0, move |s| {
            ProfileJet { u: u0, v: s, du: 0.0, dv: 1.0, d2u: 0.0, d2v: 0.0, turning: Some(0.0) }
        }))
    }

    /// `(u0 + sinh(a s)/a, cosh(a s)/a)` for `u > 0`: time-like curve.
    pub fn boosted_timelike_hyperbola(a: f64, u0: f64) -> Result<Self> {
        positive("a", a)?;
        if !u0.is_finite() {
            return Err(Error::InvalidArgument(format!("u0 must be finite, got {u0}")));
        }
        let s0 = -(a * u0).asinh() / a;
        Ok(Self::new(
            format!("boosted_timelike_hyperbola(a={a}, u0={u0})"),
            (s0, f64::INFINITY),
            1.0 / a,
            move |s| {
                let (sh, ch) = ((a * s).sinh(), (a * s).cosh());
                ProfileJet { u: u0 + sh / a, v: ch / a, du: ch, dv: sh, d2u: a * sh, d2v: a * ch, turning: Some(a) }
            },
        ))
    }

    /// `(u0 + cosh(a s)/a, sinh(a s)/a)`, `u0 > -1/a`: space-like curve.
    pub fn boosted_spacelike_hyperbola(a: f64, u0: f64) -> Result<Self> {
        positive("a", a)?;
        if !(u0.is_finite() && u0 > -1.0 / a) {
            return Err(Error::InvalidArgument(format!("u0 must exceed -1/a = {}, got {u0}", -1.0 / a)));
        }
        Ok(Self::new(
            format!("boosted_spacelike_hyperbola(a={a}, u0={u0})"),
            (f64::NEG_INFINITY, f64::INFINITY),
            1.0 / a,
            move |s| {
                let (sh, ch) = ((a * s).sinh(), (a * s).cosh());
                ProfileJet { u: u0 + ch / a, v: sh / a, du: sh, dv: ch, d2u: a * ch, d2v: a * sh, turning: Some(-a) }
            },
        ))
    }

    /// `(c, s)`, `s > 0`: the space-like plane `x1 = c` in polar form.
    pub fn flat_plane(c: f64) -> Result<Self> {
        if !c.is_finite() {
            return Err(Error::InvalidArgument(format!("c must be finite, got {c}")));
        }
        Ok(Self::new(format!("flat_plane(c={c})"), (0.0, f64::INFINITY), 1.0, move |s| ProfileJet {
            u: c,
            v: s,
            du: 0.0,
            dv: 1.0,
            d2u: 0.0,
            d2v: 0.0,
            turning: Some(0.0),
        }))
    }
}

/// The five causal types of surfaces of revolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    SpacelikeAxisTimelikePlaneTimelikeCurve,
    SpacelikeAxisTimelikePlaneSpacelikeCurve,
    SpacelikeAxisSpacelikePlane,
    TimelikeAxisTimelikeCurve,
    TimelikeAxisSpacelikeCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Setting {
    TimelikeAxis,
    SpacelikeAxisTimelikePlane,
    SpacelikeAxisSpacelikePlane,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve,
        FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve,
        FamilyTag::SpacelikeAxisSpacelikePlane,
        FamilyTag::TimelikeAxisTimelikeCurve,
        FamilyTag::TimelikeAxisSpacelikeCurve,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve => "spacelike-axis/timelike-plane/timelike-curve",
            FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve => "spacelike-axis/timelike-plane/spacelike-curve",
            FamilyTag::SpacelikeAxisSpacelikePlane => "spacelike-axis/spacelike-plane",
            FamilyTag::TimelikeAxisTimelikeCurve => "timelike-axis/timelike-curve",
            FamilyTag::TimelikeAxisSpacelikeCurve => "timelike-axis/spacelike-curve",
        }
    }

    fn setting(self) -> Setting {
        match self {
            FamilyTag::TimelikeAxisTimelikeCurve | FamilyTag::TimelikeAxisSpacelikeCurve => Setting::TimelikeAxis,
            FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve | FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve => {
                Setting::SpacelikeAxisTimelikePlane
            }
            FamilyTag::SpacelikeAxisSpacelikePlane => Setting::SpacelikeAxisSpacelikePlane,
        }
    }

    /// Causal sign of the profile curve.
    pub fn eta(self) -> i8 {
        match self {
            FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve | FamilyTag::TimelikeAxisTimelikeCurve => -1,
            _ => 1,
        }
    }

    pub fn axis_timelike(self) -> bool {
        self.setting() == Setting::TimelikeAxis
    }

    /// Surface causal character.
    pub fn surface_class(self) -> CausalClass {
        match self {
            FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve | FamilyTag::TimelikeAxisSpacelikeCurve => {
                CausalClass::SpaceLike
            }
            _ => CausalClass::TimeLike,
        }
    }

    /// `+1` on time-like surfaces, `-1` on space-like ones.
    pub fn epsilon(self) -> i8 {
        match self.surface_class() {
            CausalClass::TimeLike => 1,
            _ => -1,
        }
    }

    /// Angular parameter restricted to integers (closed orbits).
    pub fn periodic(self) -> bool {
        self.axis_timelike()
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family tag {s:?}")))
    }
}

/// A profile curve together with the way it is rotated.
#[derive(Debug, Clone)]
pub struct RevolutionFamily {
    pub tag: FamilyTag,
    pub profile: ProfileCurve,
}

const VALIDATION_SAMPLES: usize = 201;

fn causal_name(sign: f64) -> &'static str {
    if sign.abs() < TAU_C {
        "light-like"
    } else if sign > 0.0 {
        "space-like"
    } else {
        "time-like"
    }
}

/// Validate `profile` against `tag` and assemble the family.
pub fn build_family(tag: FamilyTag, profile: ProfileCurve) -> Result<RevolutionFamily> {
    let (a, b) = profile.sample_range();
    let m = VALIDATION_SAMPLES;
    let setting = tag.setting();
    let eta = f64::from(tag.eta());
    let expected = causal_name(eta);
    for i in 0..m {
        let s = a + (i as f64 + 0.5) / m as f64 * (b - a);
        let j = profile.jet(s);
        let (speed, want) = match setting {
            Setting::SpacelikeAxisSpacelikePlane => (j.du * j.du + j.dv * j.dv, 1.0),
            _ => (j.dv * j.dv - j.du * j.du, eta),
        };
        let found = causal_name(speed / (j.du * j.du + j.dv * j.dv).max(1.0));
        if found != expected {
            return Err(Error::WrongCausalCharacter { expected, found });
        }
        let residual = (speed - want).abs();
        if !(residual <= 1e-8 * (j.du * j.du + j.dv * j.dv).max(1.0)) {
            return Err(Error::ArcLengthViolation { q2: s, residual });
        }
        let rho = match setting {
            Setting::TimelikeAxis => j.v,
            _ => j.u,
        };
        if !(rho > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "profile distance to the axis must be positive, got {rho} at q2 = {s}"
            )));
        }
    }
    Ok(RevolutionFamily { tag, profile })
}

/// The five reference families, one per tag.
pub fn family_samples() -> Vec<RevolutionFamily> {
    let fams = [
        (FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve, ProfileCurve::boosted_timelike_hyperbola(1.0, 2.0)),
        (FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve, ProfileCurve::boosted_spacelike_hyperbola(1.0, 0.5)),
        (FamilyTag::SpacelikeAxisSpacelikePlane, ProfileCurve::pseudo_cylinder(1.0)),
        (FamilyTag::TimelikeAxisTimelikeCurve, ProfileCurve::one_sheeted_hyperboloid(1.0)),
        (FamilyTag::TimelikeAxisSpacelikeCurve, ProfileCurve::two_sheeted_hyperboloid(1.0)),
    ];
    fams.into_iter()
        .map(|(tag, p)| build_family(tag, p.expect("valid sample parameters")).expect("valid sample family"))
        .collect()
}

impl RevolutionFamily {
    pub fn eta(&self) -> i8 {
        self.tag.eta()
    }

    pub fn epsilon(&self) -> i8 {
        self.tag.epsilon()
    }

    /// Distance function entering the centripetal term: `v` for a
    /// time-like axis, `u` otherwise.
    fn rho(&self, j: &ProfileJet) -> (f64, f64, f64, &'static str) {
        match self.tag.setting() {
            Setting::TimelikeAxis => (j.v, j.dv, j.d2v, "v"),
            _ => (j.u, j.du, j.d2u, "u"),
        }
    }

    fn rho_checked(&self, q2: f64) -> Result<(ProfileJet, f64, f64, f64)> {
        let j = self.profile.jet(q2);
        let (rho, d1, d2, what) = self.rho(&j);
        if !(rho.abs() >= TAU_C * self.profile.scale()) {
            return Err(Error::DivisionByZero { what, q2 });
        }
        Ok((j, rho, d1, d2))
    }

    /// `g11(q2)`, the coefficient of `dq1^2`.
    pub fn g11(&self, q2: f64) -> f64 {
        let j = self.profile.jet(q2);
        match self.tag.setting() {
            Setting::TimelikeAxis => j.v * j.v,
            Setting::SpacelikeAxisTimelikePlane => j.u * j.u,
            Setting::SpacelikeAxisSpacelikePlane => -j.u * j.u,
        }
    }

    pub fn closed_form_metric(&self, q2: f64) -> FirstForm {
        let g22 = match self.tag.setting() {
            Setting::SpacelikeAxisSpacelikePlane => 1.0,
            _ => f64::from(self.eta()),
        };
        FirstForm { g11: self.g11(q2), g12: 0.0, g22 }
    }

    /// Diagonal Weingarten entries `(a11, a22)` at `q2`.
    pub fn closed_form_curvatures(&self, q2: f64) -> Result<(f64, f64)> {
        let (j, rho, _, _) = self.rho_checked(q2)?;
        let turning = j.turning();
        Ok(match self.tag.setting() {
            Setting::TimelikeAxis => (-j.du / rho, f64::from(self.eta()) * turning),
            Setting::SpacelikeAxisTimelikePlane => (-j.dv / rho, f64::from(self.eta()) * turning),
            Setting::SpacelikeAxisSpacelikePlane => (-j.dv / rho, -turning),
        })
    }

    /// `eps H^2 - K = (eps/4)(a11 - a22)^2`.
    fn umbilic_defect(&self, q2: f64) -> Result<f64> {
        let (k1, k2) = self.closed_form_curvatures(q2)?;
        Ok(0.25 * f64::from(self.epsilon()) * (k1 - k2) * (k1 - k2))
    }

    /// `V_S = -(eps H^2 - K)` from the closed-form curvatures.
    pub fn geometric_potential(&self, q2: f64) -> Result<f64> {
        Ok(-self.umbilic_defect(q2)?)
    }

    /// Substitution weight `w = rho^(-1/2)`, `chi2 = y w`.
    pub fn weight(&self, q2: f64) -> Result<f64> {
        let (_, rho, _, _) = self.rho_checked(q2)?;
        Ok(rho.abs().powf(-0.5))
    }

    /// Effective potential in the normal form `-(1/eta) y'' + (V - E) y = 0`,
    /// assembled from its definition:
    /// `ell^2/g11 - (eps H^2 - K) - eta (rho'^2 - 2 rho rho'') / (4 rho^2)`.
    pub fn effective_potential(&self, ell: f64, q2: f64) -> Result<f64> {
        self.effective_potential_with(ell, q2, true)
    }

    /// As [`Self::effective_potential`], optionally leaving out the
    /// geometry-induced term.
    pub fn effective_potential_with(&self, ell: f64, q2: f64, include_vs: bool) -> Result<f64> {
        let (_, rho, d1, d2) = self.rho_checked(q2)?;
        let eta = f64::from(self.eta());
        let vs = if include_vs { -self.umbilic_defect(q2)? } else { 0.0 };
        let centrifugal = ell * ell / self.g11(q2);
        let measure = -eta * (d1 * d1 - 2.0 * rho * d2) / (4.0 * rho * rho);
        Ok(centrifugal + vs + measure)
    }

    /// Decomposition of the effective potential into the `1/rho^2` term and
    /// the profile-curvature term, from the reduced closed forms.
    pub fn potential_terms(&self, ell: f64, q2: f64) -> Result<PotentialTerms> {
        let (_, rho, _, _) = self.rho_checked(q2)?;
        let (_, k2) = self.closed_form_curvatures(q2)?;
        let eta = f64::from(self.eta());
        let l2 = ell * ell;
        let r2 = rho * rho;
        let (centripetal, curve) = match self.tag.setting() {
            Setting::TimelikeAxis => ((l2 - 0.25) / r2, eta * k2 * k2 / 4.0),
            Setting::SpacelikeAxisTimelikePlane => ((l2 + 0.25) / r2, eta * k2 * k2 / 4.0),
            Setting::SpacelikeAxisSpacelikePlane => (-(l2 + 0.25) / r2, -k2 * k2 / 4.0),
        };
        Ok(PotentialTerms {
            q2,
            v_eff: centripetal + curve,
            v_s: self.geometric_potential(q2)?,
            centripetal,
            curve,
        })
    }

    fn rotate(&self, t: f64, u: f64, v: f64, order: u8) -> MinkVector {
        match self.tag.setting() {
            Setting::TimelikeAxis => {
                let (s, c) = t.sin_cos();
                match order {
                    0 => MinkVector::new(u, v * s, v * c),
                    1 => MinkVector::new(0.0, v * c, -v * s),
                    _ => MinkVector::new(0.0, -v * s, -v * c),
                }
            }
            Setting::SpacelikeAxisTimelikePlane => {
                let (s, c) = (t.sinh(), t.cosh());
                match order {
                    0 | 2 => MinkVector::new(u * c, u * s, if order == 0 { v } else { 0.0 }),
                    _ => MinkVector::new(u * s, u * c, 0.0),
                }
            }
            Setting::SpacelikeAxisSpacelikePlane => {
                let (s, c) = (t.sinh(), t.cosh());
                match order {
                    0 | 2 => MinkVector::new(u * s, u * c, if order == 0 { v } else { 0.0 }),
                    _ => MinkVector::new(u * c, u * s, 0.0),
                }
            }
        }
    }
}

impl Chart for RevolutionFamily {
    fn position(&self, q: [f64; 2]) -> MinkVector {
        let j = self.profile.jet(q[1]);
        self.rotate(q[0], j.u, j.v, 0)
    }

    fn domain(&self) -> ParamDomain {
        ParamDomain { q1: (f64::NEG_INFINITY, f64::INFINITY), q2: self.profile.domain() }
    }

    fn first_partials(&self, q: [f64; 2]) -> Option<[MinkVector; 2]> {
        let j = self.profile.jet(q[1]);
        Some([self.rotate(q[0], j.u, j.v, 1), self.rotate(q[0], j.du, j.dv, 0)])
    }

    fn second_partials(&self, q: [f64; 2]) -> Option<[MinkVector; 3]> {
        let j = self.profile.jet(q[1]);
        Some([
            self.rotate(q[0], j.u, j.v, 2),
            self.rotate(q[0], j.du, j.dv, 1),
            self.rotate(q[0], j.d2u, j.d2v, 0),
        ])
    }
}

/// One row of the effective-potential decomposition;
/// `v_eff = centripetal + curve`, with `v_s` already contained in them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialTerms {
    pub q2: f64,
    pub v_eff: f64,
    pub v_s: f64,
    pub centripetal: f64,
    pub curve: f64,
}

/// Box for the effective problem: half-width (or length for half-infinite
/// profiles) and number of grid points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// defaults to `DEFAULT_BOX_FACTOR * scale`
    pub length: Option<f64>,
    pub n: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { length: None, n: DEFAULT_GRID_POINTS }
    }
}

fn check_ell(tag: FamilyTag, ell: f64) -> Result<()> {
    if !ell.is_finite() || (tag.periodic() && ell.fract() != 0.0) {
        return Err(Error::NonIntegerEll { ell });
    }
    Ok(())
}

/// Reduced radial problem for angular parameter `ell`.
pub fn effective_problem(fam: &RevolutionFamily, ell: f64, grid: GridSpec) -> Result<EffectiveProblem1D> {
    check_ell(fam.tag, ell)?;
    if grid.n < MIN_GRID_POINTS {
        return Err(Error::GridTooCoarse { n: grid.n, min: MIN_GRID_POINTS });
    }
    let len = grid.length.unwrap_or(DEFAULT_BOX_FACTOR * fam.profile.scale());
    if !(len.is_finite() && len > 0.0) {
        return Err(Error::InvalidGrid(format!("box length must be positive, got {len}")));
    }
    let (lo, hi) = fam.profile.domain();
    let (a, b, walls) = match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (lo, hi, [Wall::Physical, Wall::Physical]),
        (true, false) => (lo, lo + len, [Wall::Physical, Wall::Truncation]),
        (false, true) => (hi - len, hi, [Wall::Truncation, Wall::Physical]),
        (false, false) => (-len, len, [Wall::Truncation, Wall::Truncation]),
    };
    let g = Grid1D::new(a, b, grid.n)?;
    let xs = g.interior();
    let potential = xs.iter().map(|&s| fam.effective_potential(ell, s)).collect::<Result<Vec<_>>>()?;
    let weight = xs.iter().map(|&s| fam.weight(s)).collect::<Result<Vec<_>>>()?;
    EffectiveProblem1D::new(g, potential, fam.eta(), ell, weight, walls)
}

/// Plane containing a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneKind {
    SpaceLike,
    TimeLike,
}

/// Geometry-induced potential of a particle confined to a plane curve of
/// curvature `kappa`; `eps_curve` is `+1` (`-1`) for a time-like
/// (space-like) curve and only matters in a time-like plane.
pub fn curve_1d_potential(kappa: f64, plane: PlaneKind, eps_curve: i8) -> f64 {
    match plane {
        PlaneKind::SpaceLike => -kappa * kappa / 4.0,
        PlaneKind::TimeLike => -f64::from(eps_curve) * kappa * kappa / 4.0,
    }
}

/// Separated angular factor `chi1 = exp(i ell q1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularMode {
    pub ell: f64,
    /// `E1 = ell^2`
    pub e1: f64,
    /// discrete for closed (periodic) orbits, a continuum otherwise
    pub discrete: bool,
    pub chi1: String,
}

pub fn angular_mode(fam: &RevolutionFamily, ell: f64) -> Result<AngularMode> {
    check_ell(fam.tag, ell)?;
    let discrete = fam.tag.periodic();
    let domain = if discrete { "q1 in [0, 2pi), periodic" } else { "q1 in R" };
    Ok(AngularMode { ell, e1: ell * ell, discrete, chi1: format!("exp(i*{ell}*q1), {domain}") })
}
