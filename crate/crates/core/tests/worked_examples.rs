//! Hand-checkable values and small identities, one per documented behaviour.

use std::f64::consts::PI;

use hyperd::gammakit::{digamma, gamma, harmonic, pochhammer, recip_gamma};
use hyperd::hyperf::{degenerate_factor_f1, degenerate_factors_f2, f2_norm_i_jet};
use hyperd::oracle::{
    alpha_derivative, alpha_derivative_fd, inhom_residual, limit_alpha, log_solution_residual, ode_residual,
    u0_reference, u1_reference, LimitTarget,
};
use hyperd::relations::{apply_ladder, check_quadratic, check_relation, Point};
use hyperd::series::{log_negated, principal_log, principal_pow, sum_power_series};
use hyperd::{
    bessel, d_eval, d_expand, f2f0_asymptotic, f_norm, f_second, u0, u1, u2, BesselKind, DSpec, EquationParams, Jet,
    SeriesOpts, URoute, C64,
};

const EULER: f64 = 0.577_215_664_901_532_9;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn close(a: C64, b: C64, tol: f64) {
    assert!((a - b).norm() <= tol, "{a} vs {b}: {:e}", (a - b).norm());
}

#[test]
fn gamma_kit() {
    close(gamma(r(1.0)).unwrap(), r(1.0), 1e-15);
    close(gamma(r(5.0)).unwrap(), r(24.0), 1e-13);
    close(gamma(r(0.5)).unwrap(), r(PI.sqrt()), 1e-15);
    assert_eq!(recip_gamma(r(0.0)), r(0.0));
    assert_eq!(recip_gamma(r(-3.0)), r(0.0));
    let h = 1e-5;
    let d = (recip_gamma(r(-2.0 + h)) - recip_gamma(r(-2.0 - h))) / (2.0 * h);
    close(d, r(2.0), 1e-6);

    close(digamma(r(1.0)).unwrap(), r(-EULER), 1e-15);
    close(digamma(r(2.0)).unwrap(), r(1.0 - EULER), 1e-15);
    close(digamma(r(0.5)).unwrap(), r(-EULER - 2.0 * 2f64.ln()), 1e-15);

    close(harmonic(0, c(0.3, 0.2)).unwrap(), r(0.0), 0.0);
    close(harmonic(3, r(1.0)).unwrap(), r(11.0 / 6.0), 1e-15);
    let z = r(0.7);
    let lhs = harmonic(5, z).unwrap() - harmonic(2, z).unwrap() - harmonic(3, z + 2.0).unwrap();
    close(lhs, r(0.0), 1e-14);

    close(pochhammer(c(0.3, -1.0), 0).unwrap(), r(1.0), 0.0);
    close(pochhammer(r(3.0), -1).unwrap(), r(0.5), 1e-16);
    let lhs = pochhammer(r(0.3), 4).unwrap() - pochhammer(r(1.0 - 4.0 - 0.3), 4).unwrap();
    close(lhs, r(0.0), 1e-14);
}

#[test]
fn summation_and_branches() {
    let mut fact = 1.0;
    let e = sum_power_series(
        |n| {
            if n > 0 {
                fact *= n as f64;
            }
            r(1.0 / fact)
        },
        r(1.0),
        1e-14,
        10_000,
    )
    .unwrap();
    close(e.value, r(std::f64::consts::E), 1e-12);
    let zero = sum_power_series(|_| r(0.0), r(1.0), 1e-14, 10_000).unwrap();
    assert_eq!(zero.value, r(0.0));
    assert!(zero.terms_used <= 3 && zero.flags.is_empty());

    close(principal_log(r(1.0)).unwrap(), r(0.0), 0.0);
    close(principal_log(c(0.0, 1.0)).unwrap(), c(0.0, PI / 2.0), 1e-16);
    let i = c(0.0, 1.0);
    close(log_negated(i).unwrap() - principal_log(i).unwrap(), c(0.0, -PI), 1e-15);
    close(log_negated(r(-1.0)).unwrap(), r(0.0), 0.0);
    close(log_negated(r(-2.0)).unwrap(), r(2f64.ln()), 1e-16);

    close(principal_pow(r(1.0), c(0.3, 0.7)).unwrap(), r(1.0), 1e-16);
    let third = r(1.0 / 3.0);
    let lhs = principal_pow(-i, third).unwrap();
    let rhs = (c(0.0, -PI) * third).exp() * principal_pow(i, third).unwrap();
    close(lhs, rhs, 1e-15);
    for m in 1..=5 {
        assert_eq!(principal_pow(r(-2.0), r(-(m as f64))).unwrap(), r(-2.0).powi(-m));
    }
}

#[test]
fn normalized_functions() {
    let f0 = |a: f64, z: f64| f_norm(&EquationParams::f0(a), r(z)).unwrap().value;
    close(f0(0.0, 0.0), r(1.0), 0.0);
    close(f0(0.0, 1.0), r(2.279_585_302_3), 1e-9);
    let z = 0.3;
    close(f0(1.0, z), f0(-1.0, z) / z, 1e-12);
    let p = EquationParams::f0(0.0);
    assert_eq!(f_second(&p, r(0.8)).unwrap().value, f_norm(&p, r(0.8)).unwrap().value);

    let (theta, m, z) = (0.7, 2u32, r(0.4));
    let lhs = degenerate_factor_f1(r(theta), m) * f_norm(&EquationParams::f1(theta, m as f64), z).unwrap().value;
    let rhs = f_norm(&EquationParams::f1(theta, -(m as f64)), z).unwrap().value / z.powi(m as i32);
    close(lhs, rhs, 1e-12);

    let k = degenerate_factors_f2(1, r(0.3), r(0.2));
    for a in k {
        for b in k {
            close(a, b, 1e-12);
        }
    }

    let terminating = f2f0_asymptotic(r(0.0), r(0.7), r(-0.3), 50).unwrap();
    assert_eq!((terminating.value, terminating.err_estimate), (r(1.0), 0.0));
    close(f2f0_asymptotic(r(0.4), r(0.7), r(0.0), 50).unwrap().value, r(1.0), 0.0);
    // a = b = 1/2 at −1/z = −0.01: Tricomi U with θ = α = 0 at z = 100
    let s = f2f0_asymptotic(r(0.5), r(0.5), r(-0.01), 10_000).unwrap();
    let reference = u1_reference(r(0.0), r(0.0), r(100.0)).unwrap() * 10.0;
    // the integral reference is good to about 1e-14, far coarser than the truncation error here
    assert!((s.value - reference).norm() <= (2.0 * s.err_estimate).max(1e-13), "{} vs {reference}", s.value);

    let fi = |a: f64, b: f64, m: f64, z: f64| f2_norm_i_jet(r(a), r(b), r(m), r(z), &SeriesOpts::default()).unwrap().jet;
    close(fi(0.0, 0.0, 0.0, 0.0).value, r(PI), 1e-14);
    let fz = |mu: f64| f_norm(&EquationParams::f2(0.2, 0.3, mu), r(0.3)).unwrap().value;
    close(fz(0.4), fz(-0.4), 1e-14);
    let lhs = fi(0.2, 0.3, 0.4, 0.25).d1 - fi(1.2, 1.3, 0.4, 0.25).value * ((1.0 + 0.2 + 0.3 + 0.4) / 2.0);
    close(lhs, r(0.0), 1e-13);
}

#[test]
fn log_companions() {
    let e0 = d_expand(&DSpec::f0(0)).unwrap();
    assert!(e0.principal.is_empty());
    close(e0.tail_coeffs(1)[0], r(2.0 * EULER), 1e-15);
    close(d_expand(&DSpec::f0(1)).unwrap().principal[0], r(1.0), 0.0);
    close(d_eval(&DSpec::f0(0), r(0.0)).unwrap().value, r(2.0 * EULER), 1e-15);
    let z = r(0.3);
    close(d_eval(&DSpec::f0(-2), z).unwrap().value, d_eval(&DSpec::f0(2), z).unwrap().value * 0.09, 1e-14);

    for (spec, z, tol) in [
        (DSpec::f0(0), r(0.5), 1e-10),
        (DSpec::f0(2), c(1.0, 0.5), 1e-9),
        (DSpec::f1(0.4, 1), r(0.3), 1e-9),
        (DSpec::f1(1.0, 0), r(0.5), 1e-9),
        (DSpec::f2(1, 0.3, 0.2), r(0.25), 1e-9),
    ] {
        let rep = inhom_residual(&spec, z).unwrap();
        assert!(rep.residual <= tol, "{spec:?} at {z}: {:e}", rep.residual);
    }
    for (spec, z, tol) in [(DSpec::f0(0), r(1.0), 1e-9), (DSpec::f2(0, 0.3, 0.2), r(-0.25), 1e-8)] {
        let rep = log_solution_residual(&spec, z).unwrap();
        assert!(rep.residual <= tol, "{spec:?} at {z}: {:e}", rep.residual);
    }

    // U₁(0.5) = (log z 𝔽₁ + 𝔇₁)/√π against the Bessel-integral reference
    let z = r(0.5);
    let bracket = z.ln() * f_norm(&EquationParams::f0(1.0), z).unwrap().value + d_eval(&DSpec::f0(1), z).unwrap().value;
    close(bracket / PI.sqrt(), u0_reference(1, z).unwrap(), 1e-9);
}

#[test]
fn residual_oracle() {
    let p = EquationParams::f0(0.0);
    let j = hyperd::hyperf::f_norm_jet(&p, r(1.0), &SeriesOpts::default()).unwrap().jet;
    assert!(ode_residual(&p, j, r(1.0)).residual <= 1e-10);
    assert_eq!(ode_residual(&p, Jet::constant(r(1.0)), r(1.0)).residual, 1.0);

    close(alpha_derivative(r(0.0), r(0.0)).unwrap().value, r(EULER), 1e-15);
    // 𝔇_m = z^{−m}∂_α𝔽|_{−m} + ∂_α𝔽|_{m}, so the α-derivatives rebuild the log solution
    let (m, z) = (1.0, r(0.5));
    let rebuilt = z.ln() * f_norm(&EquationParams::f0(m), z).unwrap().value
        + alpha_derivative(r(-m), z).unwrap().value / z
        + alpha_derivative(r(m), z).unwrap().value;
    let direct = hyperd::log_solution(&DSpec::f0(1), z).unwrap().value;
    close(rebuilt, direct, 1e-8);

    let exact = alpha_derivative(r(0.7), r(1.3)).unwrap().value;
    let e1 = (alpha_derivative_fd(r(0.7), r(1.3), 1e-2).unwrap() - exact).norm();
    let e2 = (alpha_derivative_fd(r(0.7), r(1.3), 5e-3).unwrap() - exact).norm();
    assert!((3.5..4.5).contains(&(e1 / e2)), "ratio {}", e1 / e2);

    for (target, m, z, u, tol) in [
        (LimitTarget::F0, 0, r(0.5), u0(r(0.0), r(0.5), URoute::LogPlusD).unwrap().value, 1e-7),
        (LimitTarget::F0, 1, r(0.5), u0(r(1.0), r(0.5), URoute::LogPlusD).unwrap().value, 1e-7),
        (LimitTarget::F1 { theta: r(0.4) }, 0, r(0.7), u1(r(0.4), r(0.0), r(0.7), URoute::LogPlusD).unwrap().value, 1e-7),
        (LimitTarget::F1 { theta: r(0.4) }, 1, r(0.7), u1(r(0.4), r(1.0), r(0.7), URoute::LogPlusD).unwrap().value, 1e-6),
        (LimitTarget::F2 { beta: r(0.3), mu: r(0.2) }, 0, r(-0.4), u2(r(0.0), r(0.3), r(0.2), r(-0.4), URoute::LogPlusD).unwrap().value, 1e-6),
        (LimitTarget::F2 { beta: r(0.3), mu: r(0.2) }, 1, r(-0.4), u2(r(1.0), r(0.3), r(0.2), r(-0.4), URoute::LogPlusD).unwrap().value, 1e-6),
    ] {
        let lim = limit_alpha(m, target, z).unwrap().value;
        close(lim, u, tol);
    }
}

#[test]
fn infinity_normalized_functions() {
    let (a, z) = (r(0.3), r(2.0));
    close(u0(a, z, URoute::Auto).unwrap().value, principal_pow(z, -a).unwrap() * u0(-a, z, URoute::Auto).unwrap().value, 1e-10);
    let x = u0(r(0.0), r(25.0), URoute::LogPlusD).unwrap();
    let y = u0(r(0.0), r(25.0), URoute::Asymptotic2F0).unwrap();
    assert!((x.value - y.value).norm() <= 2.0 * (x.err_estimate + y.err_estimate), "{} vs {}", x.value, y.value);

    let (t, a, z) = (r(0.4), r(0.25), r(1.5));
    let lhs = u1(t, -a, z, URoute::Auto).unwrap().value;
    close(lhs, principal_pow(z, a).unwrap() * u1(t, a, z, URoute::Auto).unwrap().value, 1e-10);
    let x = u1(t, r(0.5), r(30.0), URoute::Connection).unwrap();
    let y = u1(t, r(0.5), r(30.0), URoute::Asymptotic2F0).unwrap();
    assert!((x.value - y.value).norm() <= x.err_estimate + y.err_estimate + 1e-12, "{} vs {}", x.value, y.value);

    // the four Kummer-table forms of 𝕌
    let (a, b, m, z) = (r(0.2), r(0.3), r(0.4), c(-0.3, 0.2));
    let u = |a: C64, b: C64| u2(a, b, m, z, URoute::Connection).unwrap().value;
    let mz = -z;
    let w = r(1.0) - z;
    let forms = [
        u(a, b),
        principal_pow(mz, -a).unwrap() * u(-a, b),
        principal_pow(w, -b).unwrap() * u(a, -b),
        principal_pow(mz, -a).unwrap() * principal_pow(w, -b).unwrap() * u(-a, -b),
    ];
    for f in forms {
        close(f, forms[0], 1e-9);
    }
    // 1 − z identity, upper half plane
    let z = c(0.3, 0.2);
    let lhs = u2(a, b, m, z, URoute::Connection).unwrap().value;
    let phase = (c(0.0, -PI / 2.0) * (-1.0 - a - b + m)).exp();
    close(lhs, phase * u2(b, a, m, r(1.0) - z, URoute::Connection).unwrap().value, 1e-9);
}

#[test]
fn bessel_wrappers() {
    close(bessel(BesselKind::I, 0, r(0.0)).unwrap().value, r(1.0), 0.0);
    let k0 = bessel(BesselKind::K, 0, r(1.0)).unwrap().value;
    close(k0, r(hyperd::oracle::k_quadrature(0, 1.0)), 1e-8);
    let z = c(2.0, 0.1);
    let h = bessel(BesselKind::H1, 1, z).unwrap().value + bessel(BesselKind::H2, 1, z).unwrap().value;
    close(h, bessel(BesselKind::J, 1, z).unwrap().value * 2.0, 1e-9);
}

#[test]
fn relation_examples() {
    let f0 = |m: f64, z: f64| Point::new(EquationParams::f0(m), r(z));
    let f2 = |a: f64, b: f64, m: f64, z: C64| Point::new(EquationParams::f2(a, b, m), z);
    assert!(check_relation("f0.contiguity", &f0(1.0, 0.4)).unwrap().residual <= 1e-10);
    assert!(check_relation("f0.recurD.raise", &f0(0.0, 0.5)).unwrap().residual <= 1e-10);
    assert!(check_relation("f2.kummer.pow", &f2(0.2, 0.3, 0.4, r(0.3))).unwrap().residual <= 1e-11);

    assert!(check_quadratic("q.double1", &f0(0.3, 0.2)).unwrap().residual <= 1e-11);
    assert!(check_quadratic("q.double5", &f0(1.0, 0.15)).unwrap().residual <= 1e-9);
    assert!(check_quadratic("q.sasa3", &f2(1.0, 0.3, 0.0, r(-0.2))).unwrap().residual <= 1e-8);

    let raised = apply_ladder("f0.recurF.raise", &f0(0.3, 0.7)).unwrap().value;
    close(raised, f_norm(&EquationParams::f0(1.3), r(0.7)).unwrap().value, 1e-10);
    let (t, a, z) = (0.4, 0.2, r(0.3));
    let pt = Point::new(EquationParams::f1(t, a), z);
    let shifted = f_norm(&EquationParams::f1(t + 2.0, a), z).unwrap().value;
    close(apply_ladder("f1.recurF.z-raise-theta2", &pt).unwrap().value, shifted, 1e-10);
    // the operator itself lands on ((1+α+θ)/2)𝔽_{θ+2,α}
    let c = check_relation("f1.recurF.z-raise-theta2", &pt).unwrap();
    close(c.lhs, shifted * ((1.0 + a + t) / 2.0), 1e-10);
}
