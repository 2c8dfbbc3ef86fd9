//! Quadratic transformations: doubling of ₀F₁ into ₁F₁ and of ₂F₁ into itself.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{annulus, c, dist_int, generic, opts, Body, Family, Point, RelationRecord};
use crate::error::Result;
use crate::gammakit::{factorial, gamma, recip_gamma};
use crate::hyperd::{d_eval_jet, DSpec};
use crate::hyperf::f_norm_jet;
use crate::hyperu::{u0, u1, u2, URoute};
use crate::params::{EquationKind, EquationParams};
use crate::series::{principal_log, principal_pow};
use crate::C64;

fn f(p: EquationParams, z: C64) -> Result<C64> {
    Ok(f_norm_jet(&p, z, &opts())?.value())
}

fn d(spec: DSpec, z: C64) -> Result<C64> {
    Ok(d_eval_jet(&spec, z, &opts())?.value())
}

fn double1(p: &Point) -> Result<(C64, C64)> {
    let (a, z) = (p.alpha(), p.z);
    let lhs = gamma(1.0 + a)? * f(EquationParams::f0(a), z * z)?;
    let rhs = (-2.0 * z).exp() * gamma(1.0 + 2.0 * a)? * f(EquationParams::f1(0.0, 2.0 * a), 4.0 * z)?;
    Ok((lhs, rhs))
}

fn double2(p: &Point) -> Result<(C64, C64)> {
    let (a, z) = (p.alpha(), p.z);
    let lhs = u0(a, z * z, URoute::Auto)?.value;
    let rhs = 2.0 * c(4.0).powc(a) * (-2.0 * z).exp() * u1(c(0.0), 2.0 * a, 4.0 * z, URoute::Auto)?.value;
    Ok((lhs, rhs))
}

fn double5(p: &Point) -> Result<(C64, C64)> {
    let (m, z) = (p.m(), p.z);
    let lhs = d(DSpec::f0(m), z * z)?;
    let pre = 2.0 * (-4f64).powi(m as i32) * std::f64::consts::PI.sqrt() * recip_gamma(c(0.5 - m as f64));
    let w = 4.0 * z;
    let inner = 4f64.ln() * f(EquationParams::f1(0.0, 2.0 * m as f64), w)? + d(DSpec::f1(0.0, 2 * m), w)?;
    Ok((lhs, pre * (-2.0 * z).exp() * inner))
}

fn sasa(p: &Point) -> Result<(C64, C64)> {
    let (a, b, z) = (p.alpha(), p.beta(), p.z);
    let lhs = gamma(1.0 + 2.0 * a)? * f(EquationParams::f2(2.0 * a, b, -b), z)?;
    let w = z * z / ((2.0 - z) * (2.0 - z));
    let pre = principal_pow(2.0 / (2.0 - z), 0.5 + a + b)? * gamma(1.0 + a)?;
    Ok((lhs, pre * f(EquationParams::f2(a, b, -0.5), w)?))
}

fn quarter_w(z: C64) -> C64 {
    z * z / (4.0 * (z - 1.0))
}

fn sasa2(p: &Point) -> Result<(C64, C64)> {
    let (a, b, z) = (p.alpha(), p.beta(), p.z);
    let lhs = gamma(1.0 + 2.0 * a)? * f(EquationParams::f2(2.0 * a, b, -b), z)?;
    let pre = principal_pow(1.0 - z, -0.25 - a / 2.0 - b / 2.0)? * gamma(1.0 + a)?;
    Ok((lhs, pre * f(EquationParams::f2(a, -0.5, -b), quarter_w(z))?))
}

fn sasa1(p: &Point) -> Result<(C64, C64)> {
    let (a, b, z) = (p.alpha(), p.beta(), p.z);
    let lhs = f(EquationParams::f2(b, b, 2.0 * a), z)?;
    Ok((lhs, f(EquationParams::f2(b, -0.5, a), 4.0 * z * (1.0 - z))?))
}

fn sasa5_w(z: C64) -> C64 {
    4.0 * z * (z - 1.0) / ((1.0 - 2.0 * z) * (1.0 - 2.0 * z))
}

fn sasa5(p: &Point) -> Result<(C64, C64)> {
    let (a, b, z) = (p.alpha(), p.beta(), p.z);
    let lhs = f(EquationParams::f2(b, b, 2.0 * a), z)?;
    let pre = principal_pow(1.0 - 2.0 * z, -0.5 - b - a)?;
    Ok((lhs, pre * f(EquationParams::f2(b, a, -0.5), sasa5_w(z))?))
}

fn uu0(p: &Point) -> Result<(C64, C64)> {
    let (a, b, z) = (p.alpha(), p.beta(), p.z);
    let lhs = u2(2.0 * a, b, -b, z, URoute::Auto)?.value;
    let pre = principal_pow(4.0 * (1.0 - z), -0.25 - a / 2.0 - b / 2.0)?;
    Ok((lhs, pre * u2(a, c(-0.5), -b, quarter_w(z), URoute::Auto)?.value))
}

fn sasa3(p: &Point) -> Result<(C64, C64)> {
    let (m, b, z) = (p.m(), p.beta(), p.z);
    let lhs = d(DSpec::f2(2 * m, b, -b), z)?;
    let w = quarter_w(z);
    let mu = m as u32;
    let pre = factorial(mu) / (2.0 * factorial(2 * mu)) * principal_pow(1.0 - z, -0.25 - m as f64 / 2.0 - b / 2.0)?;
    let inner = d(DSpec::f2(m, -0.5, -b), w)? - principal_log(4.0 * (1.0 - z))? * f(EquationParams::f2(m as f64, -0.5, -b), w)?;
    Ok((lhs, pre * inner))
}

fn f0_alpha(rng: &mut ChaCha8Rng) -> Point {
    Point::new(EquationParams::f0(rng.gen_range(-0.45..2.0)), annulus(rng, 0.0, 1.5))
}

fn f0_generic(rng: &mut ChaCha8Rng) -> Point {
    let z = C64::new(rng.gen_range(0.1..1.5), rng.gen_range(-1.0..1.0));
    Point::new(EquationParams::f0(generic(rng, -1.5, 1.5)), z)
}

fn f0_m(rng: &mut ChaCha8Rng) -> Point {
    Point::new(EquationParams::f0(rng.gen_range(0..=4) as f64), annulus(rng, 0.1, 1.2))
}

fn f2_ab(rng: &mut ChaCha8Rng) -> Point {
    let a = rng.gen_range(-0.45..1.5);
    let b = rng.gen_range(-1.0..1.0);
    Point::new(EquationParams::f2(a, b, 0.0), annulus(rng, 0.0, 0.6))
}

fn f2_ab_small(rng: &mut ChaCha8Rng) -> Point {
    let a = rng.gen_range(-1.0..1.0);
    let b = rng.gen_range(-1.5..1.5);
    Point::new(EquationParams::f2(a, b, 0.0), annulus(rng, 0.0, 0.18))
}

fn f2_generic(rng: &mut ChaCha8Rng) -> Point {
    let a = generic(rng, -1.5, 1.5);
    let b = rng.gen_range(-1.0..1.0);
    Point::new(EquationParams::f2(a, b, 0.0), annulus(rng, 0.05, 0.6))
}

fn f2_m(rng: &mut ChaCha8Rng) -> Point {
    let b = generic(rng, -1.5, 1.5);
    Point::new(EquationParams::f2(rng.gen_range(0..=3) as f64, b, 0.0), annulus(rng, 0.1, 0.6))
}

fn any(_: &Point) -> bool {
    true
}

fn doubled_generic(p: &Point) -> bool {
    dist_int(2.0 * p.alpha()) > 0.02 && p.z.re > 0.0
}

fn off_origin(p: &Point) -> bool {
    p.z.norm() > 0.05
}

fn sasa5_ok(p: &Point) -> bool {
    sasa5_w(p.z).norm() <= 0.9
}

fn uu0_ok(p: &Point) -> bool {
    dist_int(2.0 * p.alpha()) > 0.02 && p.z.re < 0.0
}

fn sasa3_ok(p: &Point) -> bool {
    dist_int(p.beta() + 0.5) > 0.05 && p.z.norm() > 0.05
}

pub(super) fn records() -> Vec<RelationRecord> {
    let rec = |id, kind, signature, anchor, f, applicable: fn(&Point) -> bool, sample: fn(&mut ChaCha8Rng) -> Point| RelationRecord {
        id,
        kind,
        family: Family::Quadratic,
        signature,
        anchor,
        constant: 1.0,
        body: Body::Sides(f),
        applicable,
        sample,
    };
    use EquationKind::{F0, F2};
    vec![
        rec("q.double1", F0, "z² ↔ 4z", "Γ(1+α)𝔽_α(z²) = e^{−2z}Γ(1+2α)𝔽_{0,2α}(4z)", double1, any, f0_alpha),
        rec("q.double2", F0, "z² ↔ 4z", "U_α(z²) = 2·4^α e^{−2z}U_{0,2α}(4z), Re z > 0", double2, doubled_generic, f0_generic),
        rec(
            "q.double5",
            F0,
            "z² ↔ 4z",
            "𝔇_m(z²) = 2(−4)^m√π e^{−2z}(log 4·𝔽_{0,2m} + 𝔇_{0,2m})(4z)/Γ(1/2−m)",
            double5,
            off_origin,
            f0_m,
        ),
        rec("q.sasa", F2, "z → z²/(2−z)²", "Γ(1+2α)𝔽_{2α,β,−β}(z) = (2/(2−z))^{1/2+α+β}Γ(1+α)𝔽_{α,β,−1/2}(z²/(2−z)²)", sasa, any, f2_ab),
        rec("q.sasa2", F2, "z → z²/(4(z−1))", "Γ(1+2α)𝔽_{2α,β,−β}(z) = (1−z)^{−1/4−α/2−β/2}Γ(1+α)𝔽_{α,−1/2,−β}(z²/(4(z−1)))", sasa2, any, f2_ab),
        rec("q.sasa1", F2, "z → 4z(1−z)", "𝔽_{β,β,2α}(z) = 𝔽_{β,−1/2,α}(4z(1−z))", sasa1, any, f2_ab_small),
        rec("q.sasa5", F2, "z → 4z(z−1)/(1−2z)²", "𝔽_{β,β,2α}(z) = (1−2z)^{−1/2−β−α}𝔽_{β,α,−1/2}(4z(z−1)/(1−2z)²)", sasa5, sasa5_ok, f2_ab),
        rec("q.uu0", F2, "z → z²/(4(z−1))", "𝕌_{2α,β,−β}(z) = (4(1−z))^{−1/4−α/2−β/2}𝕌_{α,−1/2,−β}(z²/(4(z−1))), Re z < 0", uu0, uu0_ok, f2_generic),
        rec(
            "q.sasa3",
            F2,
            "z → z²/(4(z−1))",
            "𝔇_{2m,β,−β}(z) = m!/(2(2m)!)(1−z)^{−1/4−m/2−β/2}(𝔇_{m,−1/2,−β} − log(4(1−z))𝔽_{m,−1/2,−β})(z²/(4(z−1)))",
            sasa3,
            sasa3_ok,
            f2_m,
        ),
    ]
}
