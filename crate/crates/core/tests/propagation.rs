use minkq::revolution::{build_family, effective_problem, FamilyTag, GridSpec, ProfileCurve};
use minkq::spectral::{continuity_residual, propagate, recommended_dt, solve_bound_states, EffectiveProblem1D, Wavefunction1D};

fn two_sheeted_problem(n: usize) -> EffectiveProblem1D {
    let fam = build_family(FamilyTag::TimelikeAxisSpacelikeCurve, ProfileCurve::two_sheeted_hyperboloid(1.0).unwrap()).unwrap();
    effective_problem(&fam, 1.0, GridSpec { length: Some(20.0), n }).unwrap()
}

#[test]
fn packet_on_the_two_sheeted_hyperboloid_keeps_its_norm() {
    let p = two_sheeted_problem(2001);
    let psi = Wavefunction1D::gaussian(p.grid, 8.0, 1.0, 1.0).unwrap();
    let out = propagate(&p, &psi, 0.01, 1000).unwrap();
    assert!((out.probability() - psi.probability()).abs() < 1e-10);
    assert!((psi.norm - 1.0).abs() < 1e-12);
}

/// Residual after one step taken at `t = 1`, with `dt` proportional to `h`.
fn residual_at(n: usize, dt: f64) -> f64 {
    let p = two_sheeted_problem(n);
    let psi = Wavefunction1D::gaussian(p.grid, 8.0, 1.0, 1.0).unwrap();
    let steps = (1.0 / dt).round() as usize;
    let before = propagate(&p, &psi, dt, steps).unwrap();
    let after = propagate(&p, &before, dt, 1).unwrap();
    continuity_residual(&p, &before, &after, dt).unwrap()
}

#[test]
fn continuity_residual_is_second_order() {
    let r = [residual_at(501, 0.04), residual_at(1001, 0.02), residual_at(2001, 0.01)];
    for w in r.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!(order >= 1.8, "residuals {r:?}");
    }
}

#[test]
fn eigenstate_evolves_by_a_phase() {
    let fam = build_family(FamilyTag::TimelikeAxisTimelikeCurve, ProfileCurve::one_sheeted_hyperboloid(1.0).unwrap()).unwrap();
    let p = effective_problem(&fam, 3.0, GridSpec { length: Some(20.0), n: 2001 }).unwrap();
    let s = solve_bound_states(&p, 3).unwrap();
    let psi = Wavefunction1D::from_real(p.grid, &s.eigenvectors[1]).unwrap();
    let dt = 0.01;
    let out = propagate(&p, &psi, dt, 300).unwrap();
    for (a, b) in out.amplitudes.iter().zip(&psi.amplitudes) {
        assert!((a.norm() - b.norm()).abs() < 1e-9);
    }
    assert!(continuity_residual(&p, &psi, &out, 300.0 * dt).unwrap() < 1e-8);
    // phase rotation at the eigenvalue (negative-mass sign convention)
    let i = psi.amplitudes.iter().enumerate().max_by(|a, b| a.1.norm().total_cmp(&b.1.norm())).unwrap().0;
    let phase = (out.amplitudes[i] / psi.amplitudes[i]).arg();
    let e = s.eigenvalues[1];
    let want = (-e * 3.0).rem_euclid(2.0 * std::f64::consts::PI);
    let got = phase.rem_euclid(2.0 * std::f64::consts::PI);
    // implicit midpoint phase error is O(E^3 dt^2 t)
    assert!((got - want).abs() < 1e-3 || (got - want).abs() > 2.0 * std::f64::consts::PI - 1e-3);
}

#[test]
fn recommended_step_is_positive_and_small() {
    let p = two_sheeted_problem(2001);
    let dt = recommended_dt(&p);
    assert!(dt > 0.0 && dt < 1e-4);
}
