use minkq::lorentz::{CausalClass, SignatureLabel};
use minkq::numdiff;
use minkq::revolution::{build_family, family_samples, FamilyTag, ProfileCurve, RevolutionFamily};
use minkq::surface::{first_fundamental_form, point_geometry, shape_data, NumericOnly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Interior window of `q2` where finite differences of the chart stay well
/// conditioned: `|r| = O(1)` keeps the rounding error of the second
/// differences below 1e-7.
fn window(f: &RevolutionFamily) -> (f64, f64) {
    let (lo, hi) = f.profile.domain();
    let sc = f.profile.scale();
    match (lo.is_finite(), hi.is_finite()) {
        (true, _) => (lo + 0.1 * sc, hi.min(lo + 3.0 * sc)),
        (false, true) => (hi - 3.0 * sc, hi - 0.1 * sc),
        (false, false) => (-1.5 * sc, 1.5 * sc),
    }
}

#[test]
fn family_causal_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for f in family_samples() {
        let (a, b) = window(&f);
        for _ in 0..50 {
            let q = [rng.gen_range(-3.0..3.0), rng.gen_range(a..b)];
            let sig = first_fundamental_form(&f, q).unwrap().signature().unwrap();
            let class = match sig.label {
                SignatureLabel::Riemannian => CausalClass::SpaceLike,
                SignatureLabel::Lorentzian => CausalClass::TimeLike,
                other => panic!("{}: unexpected signature {other:?}", f.tag),
            };
            assert_eq!(class, f.tag.surface_class(), "{} at {q:?}", f.tag);
            assert_eq!(point_geometry(&f, q).unwrap().forms.epsilon, f.epsilon());
        }
    }
}

#[test]
fn closed_forms_agree_with_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for f in family_samples() {
        let (a, b) = window(&f);
        let numeric = NumericOnly(&f);
        for _ in 0..100 {
            let q = [rng.gen_range(-1.0..1.0), rng.gen_range(a..b)];
            let s = shape_data(&numeric, q).unwrap();
            let (k1, k2) = f.closed_form_curvatures(q[1]).unwrap();
            assert!((s.a[0][0] - k1).abs() < 1e-6, "{} a11 at {q:?}: {} vs {k1}", f.tag, s.a[0][0]);
            assert!((s.a[1][1] - k2).abs() < 1e-6, "{} a22 at {q:?}: {} vs {k2}", f.tag, s.a[1][1]);
            assert!(s.a[0][1].abs() < 1e-6 && s.a[1][0].abs() < 1e-6);
            let (p, q_) = s.principal_curvatures().unwrap();
            let (lo, hi) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
            assert!((p - lo).abs() < 1e-6 && (q_ - hi).abs() < 1e-6, "{}: {p} {q_} vs {lo} {hi}", f.tag);
            let vs = f.geometric_potential(q[1]).unwrap();
            assert!((s.geometric_potential() - vs).abs() < 1e-6 * vs.abs().max(1.0), "{} {q:?}: {} vs {vs} eps {}", f.tag, s.geometric_potential(), s.epsilon);
        }
    }
}

#[test]
fn hyperboloids_are_umbilic_with_constant_curvature() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in [0.5, 1.0, 2.0] {
        let one = build_family(FamilyTag::TimelikeAxisTimelikeCurve, ProfileCurve::one_sheeted_hyperboloid(r).unwrap()).unwrap();
        let two = build_family(FamilyTag::TimelikeAxisSpacelikeCurve, ProfileCurve::two_sheeted_hyperboloid(r).unwrap()).unwrap();
        for _ in 0..100 {
            let t = rng.gen_range(-3.0..3.0);
            let s1 = shape_data(&NumericOnly(&one), [t, rng.gen_range(-2.0 * r..2.0 * r)]).unwrap();
            let s2 = shape_data(&NumericOnly(&two), [t, rng.gen_range(0.1 * r..2.0 * r)]).unwrap();
            assert!(s1.umbilicity().abs() < 1e-10 && s2.umbilicity().abs() < 1e-10);
            assert!((s1.gaussian_curvature - 1.0 / (r * r)).abs() < 1e-6);
            assert!((s2.gaussian_curvature + 1.0 / (r * r)).abs() < 1e-6);
        }
    }
}

#[test]
fn umbilic_families_have_no_geometric_term() {
    let fams = [
        build_family(FamilyTag::TimelikeAxisTimelikeCurve, ProfileCurve::one_sheeted_hyperboloid(1.0).unwrap()).unwrap(),
        build_family(FamilyTag::TimelikeAxisSpacelikeCurve, ProfileCurve::two_sheeted_hyperboloid(1.0).unwrap()).unwrap(),
    ];
    for f in &fams {
        for i in 1..200 {
            let s = 0.05 * i as f64;
            for ell in [0.0, 1.0, 2.0] {
                let with = f.effective_potential_with(ell, s, true).unwrap();
                let without = f.effective_potential_with(ell, s, false).unwrap();
                assert!((with - without).abs() < 1e-12);
            }
        }
    }
}

/// The separated radial equation in `chi2`,
/// `chi'' + (rho'/rho) chi' + eta [(eps H^2 - K) + E - ell^2/g11] chi`, applied
/// to `chi = w y` must equal `-eta w` times the normal form
/// `-eta y'' + (V_eff - E) y`.
#[test]
fn substitution_reproduces_the_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for f in family_samples() {
        let (a, b) = window(&f);
        let eta = f64::from(f.eta());
        let eps = f64::from(f.epsilon());
        for _ in 0..10 {
            let (c1, c2, c3) = (rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.2..1.5));
            let y = move |s: f64| (c1 * s).sin() + c2 * s * s + (c3 * s).cosh().recip();
            let ell = f64::from(rng.gen_range(0..4));
            let energy = rng.gen_range(-2.0..2.0);
            let rho = |s: f64| {
                let j = f.profile.jet(s);
                if f.tag.axis_timelike() { j.v } else { j.u }
            };
            let chi = |s: f64| f.weight(s).unwrap() * y(s);
            for _ in 0..10 {
                let s = rng.gen_range(a + 0.1 * (b - a)..b - 0.1 * (b - a));
                let j = f.profile.jet(s);
                let drho = if f.tag.axis_timelike() { j.dv } else { j.du };
                let (k1, k2) = f.closed_form_curvatures(s).unwrap();
                let defect = 0.25 * eps * (k1 - k2) * (k1 - k2);
                let pre = numdiff::second_derivative(chi, s)
                    + drho / rho(s) * numdiff::derivative(chi, s)
                    + eta * (defect + energy - ell * ell / f.g11(s)) * chi(s);
                let normal = -eta * numdiff::second_derivative(y, s)
                    + (f.effective_potential(ell, s).unwrap() - energy) * y(s);
                let want = -eta * f.weight(s).unwrap() * normal;
                assert!((pre - want).abs() < 1e-6 * want.abs().max(1.0), "{} s={s}: {pre} vs {want}", f.tag);
            }
        }
    }
}
