use minkq::lorentz::MinkVector;
use minkq::numdiff;
use minkq::spectral::tridiag::SymTridiag;
use minkq::spectral::{box_spectrum, solve_bound_states, BoxSpec, EffectiveProblem1D, Grid1D, Wall};
use minkq::surface::{point_geometry, tubular_from, unit_normal, FnChart, ParamDomain};
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;

/// Space-like graph `x1 = c0 x2^2 + c1 x2 x3 + c2 x3^2 + c3 x2^3` near the origin.
fn graph(c: [f64; 4]) -> impl minkq::surface::Chart {
    FnChart::new(ParamDomain::UNBOUNDED, move |x, y| {
        MinkVector::new(c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x * x * x, x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_orthogonality_and_space_like_repulsion(
        c in prop::array::uniform4(-0.4f64..0.4), x in -0.5f64..0.5, y in -0.5f64..0.5,
    ) {
        let chart = graph(c);
        let geo = point_geometry(&chart, [x, y]).unwrap();
        prop_assert!(geo.normal.dot(geo.jet.r1).abs() < 1e-10);
        prop_assert!(geo.normal.dot(geo.jet.r2).abs() < 1e-10);
        prop_assert_eq!(geo.forms.epsilon, -1);
        prop_assert!(geo.shape.geometric_potential() >= -1e-12);
    }

    #[test]
    fn weingarten_map_differentiates_the_normal(
        c in prop::array::uniform4(-0.4f64..0.4), x in -0.5f64..0.5, y in -0.5f64..0.5,
    ) {
        let chart = graph(c);
        let geo = point_geometry(&chart, [x, y]).unwrap();
        let n = |a: f64, b: f64| unit_normal(&chart, [a, b]).unwrap().0;
        let dn = [
            numdiff::derivative(|a| n(a, y), x),
            numdiff::derivative(|b| n(x, b), y),
        ];
        for (i, d) in dn.iter().enumerate() {
            let rhs = geo.jet.r1 * geo.shape.a[i][0] + geo.jet.r2 * geo.shape.a[i][1];
            prop_assert!((*d - rhs).max_abs() < 1e-5);
        }
    }

    #[test]
    fn tubular_volume_factor_matches_metric_determinants(
        c in prop::array::uniform4(-0.4f64..0.4), x in -0.5f64..0.5, y in -0.5f64..0.5, q3 in -0.3f64..0.3,
    ) {
        let chart = graph(c);
        let geo = point_geometry(&chart, [x, y]).unwrap();
        let t = tubular_from(&geo, [x, y], q3).unwrap();
        let det_big = t.g11 * t.g22 - t.g12 * t.g12;
        prop_assert!((t.f * t.f - det_big / geo.forms.detg).abs() < 1e-9);
        let t0 = tubular_from(&geo, [x, y], 0.0).unwrap();
        prop_assert_eq!((t0.g11, t0.g12, t0.g22), (geo.forms.g11, geo.forms.g12, geo.forms.g22));
        prop_assert_eq!(t0.f, f64::from(geo.forms.epsilon));
    }

    #[test]
    fn bisection_agrees_with_dense_eigensolver(
        diag in prop::collection::vec(-5.0f64..5.0, 12), off in prop::collection::vec(-2.0f64..2.0, 11),
    ) {
        let t = SymTridiag::new(diag.clone(), off.clone());
        let dense = DMatrix::from_fn(12, 12, |i, j| {
            if i == j { diag[i] } else if i + 1 == j { off[i] } else if j + 1 == i { off[j] } else { 0.0 }
        });
        let mut want: Vec<f64> = SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
        want.sort_by(f64::total_cmp);
        for (k, w) in want.iter().enumerate() {
            prop_assert!((t.eigenvalue(k) - w).abs() < 1e-11);
        }
    }

    #[test]
    fn raising_the_potential_never_lowers_a_level(
        center in -3.0f64..3.0, width in 0.2f64..2.0, height in 0.0f64..5.0,
    ) {
        let grid = Grid1D::new(-8.0, 8.0, 801).unwrap();
        let base = EffectiveProblem1D::from_fn(grid, 1, 0.0, [Wall::Physical; 2], |x| 0.5 * x * x).unwrap();
        let bumped = EffectiveProblem1D::from_fn(grid, 1, 0.0, [Wall::Physical; 2], |x| {
            let d = (x - center) / width;
            0.5 * x * x + height * (-d * d).exp()
        }).unwrap();
        let a = solve_bound_states(&base, 6).unwrap();
        let b = solve_bound_states(&bumped, 6).unwrap();
        for (ea, eb) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            prop_assert!(eb >= &(ea - 1e-10));
        }
    }

    #[test]
    fn box_energy_symmetry_and_scaling(
        a in 0.5f64..3.0, b in 0.5f64..3.0, c in 0.5f64..3.0,
        n in prop::array::uniform3(1u32..8), s in 0.5f64..4.0,
    ) {
        let e = box_spectrum(&BoxSpec::new(a, b, c, n).unwrap());
        let swapped = box_spectrum(&BoxSpec::new(a, c, b, [n[0], n[2], n[1]]).unwrap());
        prop_assert!((e - swapped).abs() <= 1e-12 * e.abs().max(1.0));
        let scaled = box_spectrum(&BoxSpec::new(s * a, s * b, s * c, n).unwrap());
        prop_assert!((scaled * s * s - e).abs() <= 1e-10 * e.abs().max(1.0));
    }
}
