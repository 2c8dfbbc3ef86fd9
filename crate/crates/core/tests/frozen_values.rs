mod frozen;

use hyperd::gammakit::{digamma, gamma};
use hyperd::hyperu::{bessel, BesselKind};
use hyperd::{d_eval, f_norm, u0, u1, u2, DSpec, EquationParams, URoute, C64};

fn c(p: (f64, f64)) -> C64 {
    C64::new(p.0, p.1)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn gamma_matches_reference() {
    for &(z, g) in frozen::GAMMA {
        let got = gamma(c(z)).unwrap();
        assert!(rel(got, c(g)) < 1e-13, "Gamma({z:?}) = {got}, want {g:?}: {:e}", rel(got, c(g)));
    }
}

#[test]
fn digamma_matches_reference() {
    for &(z, g) in frozen::DIGAMMA {
        let got = digamma(c(z)).unwrap();
        assert!(rel(got, c(g)) < 1e-13, "psi({z:?}) = {got}, want {g:?}: {:e}", rel(got, c(g)));
    }
}

#[test]
fn functions_match_reference() {
    for &(tag, p, z, want) in frozen::VALUES {
        let z = c(z);
        let want = c(want);
        let p: Vec<C64> = p.iter().map(|&x| c(x)).collect();
        let m = |x: C64| x.re.round() as i64;
        let got = match tag {
            "F0" => f_norm(&EquationParams::f0(p[0]), z),
            "F1" => f_norm(&EquationParams::f1(p[0], p[1]), z),
            "F2" => f_norm(&EquationParams::f2(p[0], p[1], p[2]), z),
            "D0" => d_eval(&DSpec::f0(m(p[0])), z),
            "D1" => d_eval(&DSpec::f1(p[0], m(p[1])), z),
            "D2" => d_eval(&DSpec::f2(m(p[0]), p[1], p[2]), z),
            "U0" => u0(p[0], z, URoute::Auto),
            "U1" => u1(p[0], p[1], z, URoute::Auto),
            "U2" => u2(p[0], p[1], p[2], z, URoute::Auto),
            "K" => bessel(BesselKind::K, m(p[0]), z),
            "I" => bessel(BesselKind::I, m(p[0]), z),
            "J" => bessel(BesselKind::J, m(p[0]), z),
            "H1" => bessel(BesselKind::H1, m(p[0]), z),
            "H2" => bessel(BesselKind::H2, m(p[0]), z),
            other => panic!("unknown tag {other}"),
        }
        .unwrap_or_else(|e| panic!("{tag} {p:?} {z}: {e}"));
        let err = rel(got.value, want);
        // asymptotic routes are only as good as their optimal truncation
        let tol = if z.norm() >= 25.0 { (got.err_estimate / want.norm()).max(1e-12) * 2.0 } else { 1e-12 };
        assert!(err < tol, "{tag} {p:?} z={z}: got {}, want {want}, rel {err:e}", got.value);
        assert!((got.value - want).norm() <= 10.0 * got.err_estimate.max(1e-16 * want.norm()) || err < 1e-13,
            "{tag} {p:?} z={z}: error {:e} not covered by estimate {:e}", (got.value - want).norm(), got.err_estimate);
    }
}

#[test]
fn integral_references_match_logplusd() {
    use hyperd::oracle::{u0_reference, u1_reference, u2_reference};
    let zs = [C64::new(0.4, 0.3), C64::new(1.7, -0.9), C64::new(0.25, 0.0)];
    for m in 0..=4 {
        for &z in &zs {
            let a = u0(C64::new(m as f64, 0.0), z, URoute::LogPlusD).unwrap().value;
            let b = u0_reference(m, z).unwrap();
            assert!(rel(a, b) < 1e-12, "U0 m={m} z={z}: {a} vs {b}");
            let a = u1(C64::new(0.7, 0.0), C64::new(m as f64, 0.0), z, URoute::LogPlusD).unwrap().value;
            let b = u1_reference(C64::new(0.7, 0.0), C64::new(m as f64, 0.0), z).unwrap();
            assert!(rel(a, b) < 1e-12, "U1 m={m} z={z}: {a} vs {b}");
            let z2 = C64::new(-0.3, 0.4) * (z.norm() / 0.5).min(1.6);
            let a = u2(C64::new(m as f64, 0.0), C64::new(0.3, 0.0), C64::new(0.2, 0.0), z2, URoute::LogPlusD).unwrap().value;
            let b = u2_reference(C64::new(m as f64, 0.0), C64::new(0.3, 0.0), C64::new(0.2, 0.0), z2).unwrap();
            assert!(rel(a, b) < 1e-11, "U2 m={m} z={z2}: {a} vs {b}");
        }
    }
}
