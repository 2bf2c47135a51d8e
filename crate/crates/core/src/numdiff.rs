//! Central finite differences with one Richardson extrapolation level.
//!
//! The base stencils are fourth order; combining the step `h` with `2h`
//! cancels the `h^4` term. Steps follow `h = max(1e-4, 1e-4 |x|)`.

use std::ops::{Add, Mul, Sub};

/// Values that can be combined linearly (scalars, Minkowski vectors).
pub trait Linear: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> Linear for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

/// Default step for differentiating at `x`.
pub fn step_for(x: f64) -> f64 {
    1e-4_f64.max(1e-4 * x.abs())
}

const C4: [f64; 5] = [1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0];

fn d1_o4<V: Linear>(f: &impl Fn(f64) -> V, x: f64, h: f64) -> V {
    let a = f(x + h) - f(x - h);
    let b = f(x + 2.0 * h) - f(x - 2.0 * h);
    (a * 8.0 - b) * (1.0 / (12.0 * h))
}

fn d2_o4<V: Linear>(f: &impl Fn(f64) -> V, x: f64, h: f64) -> V {
    let c = f(x);
    let s1 = f(x + h) + f(x - h);
    let s2 = f(x + 2.0 * h) + f(x - 2.0 * h);
    (s1 * 16.0 - s2 - c * 30.0) * (1.0 / (12.0 * h * h))
}

fn richardson<V: Linear>(fine: V, coarse: V) -> V {
    (fine * 16.0 - coarse) * (1.0 / 15.0)
}

/// First derivative of `f` at `x` with step `h`.
pub fn derivative_with<V: Linear>(f: impl Fn(f64) -> V, x: f64, h: f64) -> V {
    richardson(d1_o4(&f, x, h), d1_o4(&f, x, 2.0 * h))
}

pub fn derivative<V: Linear>(f: impl Fn(f64) -> V, x: f64) -> V {
    derivative_with(f, x, step_for(x))
}

/// Second derivative of `f` at `x` with step `h`.
pub fn second_derivative_with<V: Linear>(f: impl Fn(f64) -> V, x: f64, h: f64) -> V {
    richardson(d2_o4(&f, x, h), d2_o4(&f, x, 2.0 * h))
}

pub fn second_derivative<V: Linear>(f: impl Fn(f64) -> V, x: f64) -> V {
    second_derivative_with(f, x, step_for(x))
}

fn mixed_o4<V: Linear>(f: &impl Fn(f64, f64) -> V, x: f64, y: f64, hx: f64, hy: f64) -> V {
    let mut acc: Option<V> = None;
    for (i, ci) in C4.iter().enumerate() {
        if *ci == 0.0 {
            continue;
        }
        let xi = x + (i as f64 - 2.0) * hx;
        for (j, cj) in C4.iter().enumerate() {
            if *cj == 0.0 {
                continue;
            }
            let term = f(xi, y + (j as f64 - 2.0) * hy) * (ci * cj);
            acc = Some(match acc {
                Some(a) => a + term,
                None => term,
            });
        }
    }
    acc.expect("stencil is non-empty") * (1.0 / (hx * hy))
}

/// Mixed partial `d^2 f / dx dy` at `(x, y)`.
pub fn mixed_partial<V: Linear>(f: impl Fn(f64, f64) -> V, x: f64, y: f64) -> V {
    let (hx, hy) = (step_for(x), step_for(y));
    richardson(
        mixed_o4(&f, x, y, hx, hy),
        mixed_o4(&f, x, y, 2.0 * hx, 2.0 * hy),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_of_smooth_functions() {
        let x = 0.7;
        assert!((derivative(f64::sin, x) - x.cos()).abs() < 1e-10);
        assert!((second_derivative(f64::sin, x) + x.sin()).abs() < 1e-7);
        let g = |x: f64| (3.0 * x).exp();
        assert!((derivative(g, 2.0) - 3.0 * g(2.0)).abs() / g(2.0) < 1e-10);
    }

    #[test]
    fn mixed_partial_of_product() {
        let f = |x: f64, y: f64| x.sin() * (2.0 * y).cosh();
        let (x, y) = (0.4_f64, -0.3_f64);
        let exact = x.cos() * 2.0 * (2.0 * y).sinh();
        assert!((mixed_partial(f, x, y) - exact).abs() < 1e-7);
    }

    #[test]
    fn step_scales_with_argument() {
        assert_eq!(step_for(0.0), 1e-4);
        assert_eq!(step_for(100.0), 1e-2);
    }

    #[test]
    fn richardson_raises_order() {
        // x^5 has a non-vanishing fifth derivative, so the plain fourth-order
        // stencil leaves an h^4 error that the extrapolation removes
        let f = |x: f64| x.powi(5);
        let h = 0.05;
        let plain = d1_o4(&f, 1.0, h);
        let rich = derivative_with(f, 1.0, h);
        assert!((rich - 5.0).abs() < 1e-3 * (plain - 5.0).abs());
    }
}
