//! Vector algebra in Minkowski 3-space with metric `diag(-1, 1, 1)`.
//!
//! The first coordinate is the time-like one. Causal characters of vectors
//! and of 2x2 induced metrics are decided with the absolute tolerance
//! [`TAU_C`] applied to normalized quantities.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Zero tolerance for light-like / degenerate detection, applied after
/// normalizing the input by its largest component magnitude.
pub const TAU_C: f64 = 1e-10;

/// A vector of Minkowski 3-space, components `(x1, x2, x3)` with `x1` time-like.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MinkVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl MinkVector {
    pub const ZERO: MinkVector = MinkVector { x1: 0.0, x2: 0.0, x3: 0.0 };

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    /// Euclidean length, used only for scale normalization.
    pub fn euclidean_norm(self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    pub fn dot(self, other: MinkVector) -> f64 {
        lorentz_inner(self, other)
    }

    pub fn cross(self, other: MinkVector) -> MinkVector {
        lorentz_cross(self, other)
    }

    /// `<v, v>_1`, which may be negative.
    pub fn norm_squared(self) -> f64 {
        lorentz_inner(self, self)
    }
}

impl fmt::Display for MinkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

impl Add for MinkVector {
    type Output = MinkVector;
    fn add(self, o: MinkVector) -> MinkVector {
        MinkVector::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl AddAssign for MinkVector {
    fn add_assign(&mut self, o: MinkVector) {
        *self = *self + o;
    }
}

impl Sub for MinkVector {
    type Output = MinkVector;
    fn sub(self, o: MinkVector) -> MinkVector {
        MinkVector::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for MinkVector {
    type Output = MinkVector;
    fn neg(self) -> MinkVector {
        MinkVector::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<f64> for MinkVector {
    type Output = MinkVector;
    fn mul(self, s: f64) -> MinkVector {
        MinkVector::new(s * self.x1, s * self.x2, s * self.x3)
    }
}

impl Mul<MinkVector> for f64 {
    type Output = MinkVector;
    fn mul(self, v: MinkVector) -> MinkVector {
        v * self
    }
}

/// `<a, b>_1 = -a1 b1 + a2 b2 + a3 b3`.
pub fn lorentz_inner(a: MinkVector, b: MinkVector) -> f64 {
    -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3
}

/// Lorentzian vector product, fixed by `<a x b, c>_1 = det(a, b, c)`.
pub fn lorentz_cross(a: MinkVector, b: MinkVector) -> MinkVector {
    MinkVector::new(
        -(a.x2 * b.x3 - a.x3 * b.x2),
        -(a.x1 * b.x3 - a.x3 * b.x1),
        a.x1 * b.x2 - a.x2 * b.x1,
    )
}

/// Causal character of a vector (or of a curve through its tangent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    SpaceLike,
    TimeLike,
    LightLike,
}

impl CausalClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CausalClass::SpaceLike => "space-like",
            CausalClass::TimeLike => "time-like",
            CausalClass::LightLike => "light-like",
        }
    }
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies `v` by the sign of `<v, v>_1`; the zero vector is space-like.
pub fn classify_vector(v: MinkVector) -> CausalClass {
    let scale = v.max_abs();
    if scale == 0.0 {
        return CausalClass::SpaceLike;
    }
    let q = (v * (1.0 / scale)).norm_squared();
    if q.abs() < TAU_C {
        CausalClass::LightLike
    } else if q > 0.0 {
        CausalClass::SpaceLike
    } else {
        CausalClass::TimeLike
    }
}

/// Metric signature label of a 2x2 symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureLabel {
    /// `(+, +)`
    Riemannian,
    /// `(-, +)`
    Lorentzian,
    /// one vanishing eigenvalue
    Degenerate,
    /// `(-, -)`; cannot be induced on a surface of Minkowski 3-space
    NegativeDefinite,
}

impl SignatureLabel {
    /// Causal character of a surface whose induced metric has this signature.
    pub fn surface_class(self) -> Option<CausalClass> {
        match self {
            SignatureLabel::Riemannian => Some(CausalClass::SpaceLike),
            SignatureLabel::Lorentzian => Some(CausalClass::TimeLike),
            SignatureLabel::Degenerate => Some(CausalClass::LightLike),
            SignatureLabel::NegativeDefinite => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignatureLabel::Riemannian => "riemannian",
            SignatureLabel::Lorentzian => "lorentzian",
            SignatureLabel::Degenerate => "degenerate",
            SignatureLabel::NegativeDefinite => "negative-definite",
        }
    }
}

/// Signs of the two eigenvalues (ascending) of a 2x2 symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature2 {
    pub s1: i8,
    pub s2: i8,
    pub label: SignatureLabel,
}

/// Signature of the symmetric matrix `g`; eigenvalues with `|lambda| < TAU_C`
/// (after dividing by the largest entry) count as zero.
pub fn classify_signature(g: [[f64; 2]; 2]) -> Result<Signature2> {
    let scale = g
        .iter()
        .flatten()
        .fold(0.0_f64, |m, x| m.max(x.abs()));
    if !scale.is_finite() {
        return Err(Error::InvalidArgument("metric entries must be finite".into()));
    }
    if (g[0][1] - g[1][0]).abs() > TAU_C * scale.max(1.0) {
        return Err(Error::NonSymmetricMetric { g12: g[0][1], g21: g[1][0] });
    }
    let sign = |x: f64| -> i8 {
        if x.abs() < TAU_C {
            0
        } else if x > 0.0 {
            1
        } else {
            -1
        }
    };
    let (s1, s2) = if scale == 0.0 {
        (0, 0)
    } else {
        let a = g[0][0] / scale;
        let b = 0.5 * (g[0][1] + g[1][0]) / scale;
        let d = g[1][1] / scale;
        let half_tr = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        // product of roots is the determinant; avoids cancellation in the small root
        let det = a * d - b * b;
        let (lo, hi) = if half_tr >= 0.0 {
            let hi = half_tr + rad;
            (if hi != 0.0 { det / hi } else { 0.0 }, hi)
        } else {
            let lo = half_tr - rad;
            (lo, if lo != 0.0 { det / lo } else { 0.0 })
        };
        (sign(lo), sign(hi))
    };
    let label = match (s1, s2) {
        (1, 1) => SignatureLabel::Riemannian,
        (-1, 1) => SignatureLabel::Lorentzian,
        (-1, -1) => SignatureLabel::NegativeDefinite,
        _ => SignatureLabel::Degenerate,
    };
    Ok(Signature2 { s1, s2, label })
}
