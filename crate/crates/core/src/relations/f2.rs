//! ₂F₁ ladders on 𝔽^I and 𝔇^I, contiguity relations of 𝔇^I, and Kummer-table identities.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{annulus, c, d_jet, dist_int, dspec, generic, opts, Body, Family, Ladder, Point, RelationRecord};
use crate::error::Result;
use crate::hyperd::d_eval_jet;
use crate::hyperf::f_norm_jet;
use crate::hyperu::{u2, URoute};
use crate::params::{EquationKind, EquationParams};
use crate::series::principal_pow;
use crate::C64;

fn big_a(p: &Point) -> C64 {
    (1.0 + p.alpha() + p.beta() + p.mu()) / 2.0
}

fn big_b(p: &Point) -> C64 {
    (1.0 + p.alpha() + p.beta() - p.mu()) / 2.0
}

/// (s₀ + α + s₁β + s₂μ)/2
fn half(p: &Point, s0: f64, s1: f64, s2: f64) -> C64 {
    (s0 + p.alpha() + s1 * p.beta() + s2 * p.mu()) / 2.0
}

fn generic_point(rng: &mut ChaCha8Rng) -> Point {
    let (a, b, m) = (generic(rng, -1.5, 1.5), generic(rng, -1.5, 1.5), generic(rng, -1.5, 1.5));
    Point::new(EquationParams::f2(a, b, m), annulus(rng, 0.0, 0.8))
}

fn integer_m(rng: &mut ChaCha8Rng) -> Point {
    let (b, m) = (generic(rng, -1.5, 1.5), generic(rng, -1.5, 1.5));
    Point::new(EquationParams::f2(rng.gen_range(0..=4) as f64, b, m), annulus(rng, 0.1, 0.8))
}

// β ± μ off the integers keeps the Γ normalization finite and the 𝔇 parameters nonsingular for every shift
fn f_ok(p: &Point) -> bool {
    dist_int(p.beta() - p.mu() + p.alpha()) > 0.01 && dist_int(p.alpha() - p.beta() + p.mu()) > 0.01
}

fn d_ok(p: &Point) -> bool {
    p.m() >= 0 && dist_int(p.beta() - p.mu()) > 0.01 && dist_int(p.beta() + p.mu()) > 0.01 && p.z.norm() > 0.05
}

fn d_ok_lowering(p: &Point) -> bool {
    d_ok(p) && p.m() >= 1
}

fn off_cut(p: &Point) -> bool {
    f_ok(p) && (p.z.re < 0.0 || p.z.im.abs() > 0.05)
}

struct Row {
    ids: (&'static str, &'static str),
    signature: &'static str,
    anchor: &'static str,
    ladder: Ladder,
    lowers_m: bool,
    d_inhom: fn(&Point) -> C64,
}

fn zz(p: &Point) -> C64 {
    p.z * (1.0 - p.z)
}

fn rows() -> Vec<Row> {
    let l = |p, q, coeff, shift| Ladder { p, q, coeff, shift, inhom: None };
    vec![
        Row {
            ids: ("f2.recurF.pp0", "f2.recurD.pp0"),
            signature: "(α, β, μ) → (α+1, β+1, μ)",
            anchor: "∂𝔽^I = A𝔽^I_{α+1,β+1,μ}",
            ladder: l(|_| c(1.0), |_| c(0.0), big_a, [1, 1, 0]),
            lowers_m: false,
            d_inhom: |p| -1.0 / p.z,
        },
        Row {
            ids: ("f2.recurF.mm0", "f2.recurD.mm0"),
            signature: "(α, β, μ) → (α−1, β−1, μ)",
            anchor: "(z(1−z)∂ + α(1−z) − βz)𝔽^I = ((−1+α+β−μ)/2)𝔽^I_{α−1,β−1,μ}",
            ladder: l(zz, |p| p.alpha() * (1.0 - p.z) - p.beta() * p.z, |p| half(p, -1.0, 1.0, -1.0), [-1, -1, 0]),
            lowers_m: true,
            d_inhom: |p| p.z - 1.0,
        },
        Row {
            ids: ("f2.recurF.pm0", "f2.recurD.pm0"),
            signature: "(α, β, μ) → (α+1, β−1, μ)",
            anchor: "((1−z)∂ − β)𝔽^I = ((1+α−β−μ)/2)𝔽^I_{α+1,β−1,μ}",
            ladder: l(|p| 1.0 - p.z, |p| -p.beta(), |p| half(p, 1.0, -1.0, -1.0), [1, -1, 0]),
            lowers_m: false,
            d_inhom: |p| (p.z - 1.0) / p.z,
        },
        Row {
            ids: ("f2.recurF.mp0", "f2.recurD.mp0"),
            signature: "(α, β, μ) → (α−1, β+1, μ)",
            anchor: "(z∂ + α)𝔽^I = ((−1+α−β+μ)/2)𝔽^I_{α−1,β+1,μ}",
            ladder: l(|p| p.z, |p| p.alpha(), |p| half(p, -1.0, -1.0, 1.0), [-1, 1, 0]),
            lowers_m: true,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f2.recurF.0pp", "f2.recurD.0pp"),
            signature: "(α, β, μ) → (α, β+1, μ+1)",
            anchor: "(z∂ + A)𝔽^I = A𝔽^I_{α,β+1,μ+1}",
            ladder: l(|p| p.z, big_a, big_a, [0, 1, 1]),
            lowers_m: false,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f2.recurF.0pm", "f2.recurD.0pm"),
            signature: "(α, β, μ) → (α, β+1, μ−1)",
            anchor: "(z∂ + B)𝔽^I = ((−1+α−β+μ)/2)𝔽^I_{α,β+1,μ−1}",
            ladder: l(|p| p.z, big_b, |p| half(p, -1.0, -1.0, 1.0), [0, 1, -1]),
            lowers_m: false,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f2.recurF.0mp", "f2.recurD.0mp"),
            signature: "(α, β, μ) → (α, β−1, μ+1)",
            anchor: "(z(1−z)∂ − β + A(1−z))𝔽^I = ((−1+α+β−μ)/2)𝔽^I_{α,β−1,μ+1}",
            ladder: l(zz, |p| -p.beta() + big_a(p) * (1.0 - p.z), |p| half(p, -1.0, 1.0, -1.0), [0, -1, 1]),
            lowers_m: false,
            d_inhom: |p| p.z - 1.0,
        },
        Row {
            ids: ("f2.recurF.0mm", "f2.recurD.0mm"),
            signature: "(α, β, μ) → (α, β−1, μ−1)",
            anchor: "(z(1−z)∂ − β + B(1−z))𝔽^I = ((1+α−β−μ)/2)𝔽^I_{α,β−1,μ−1}",
            ladder: l(zz, |p| -p.beta() + big_b(p) * (1.0 - p.z), |p| half(p, 1.0, -1.0, -1.0), [0, -1, -1]),
            lowers_m: false,
            d_inhom: |p| p.z - 1.0,
        },
        Row {
            ids: ("f2.recurF.p0p", "f2.recurD.p0p"),
            signature: "(α, β, μ) → (α+1, β, μ+1)",
            anchor: "((z−1)∂ + A)𝔽^I = A𝔽^I_{α+1,β,μ+1}",
            ladder: l(|p| p.z - 1.0, big_a, big_a, [1, 0, 1]),
            lowers_m: false,
            d_inhom: |p| (1.0 - p.z) / p.z,
        },
        Row {
            ids: ("f2.recurF.p0m", "f2.recurD.p0m"),
            signature: "(α, β, μ) → (α+1, β, μ−1)",
            anchor: "((z−1)∂ + B)𝔽^I = ((1+α−β−μ)/2)𝔽^I_{α+1,β,μ−1}",
            ladder: l(|p| p.z - 1.0, big_b, |p| half(p, 1.0, -1.0, -1.0), [1, 0, -1]),
            lowers_m: false,
            d_inhom: |p| (1.0 - p.z) / p.z,
        },
        Row {
            ids: ("f2.recurF.m0p", "f2.recurD.m0p"),
            signature: "(α, β, μ) → (α−1, β, μ+1)",
            anchor: "(z(1−z)∂ + α − Az)𝔽^I = ((−1+α+β−μ)/2)𝔽^I_{α−1,β,μ+1}",
            ladder: l(zz, |p| p.alpha() - big_a(p) * p.z, |p| half(p, -1.0, 1.0, -1.0), [-1, 0, 1]),
            lowers_m: true,
            d_inhom: |p| p.z - 1.0,
        },
        Row {
            ids: ("f2.recurF.m0m", "f2.recurD.m0m"),
            signature: "(α, β, μ) → (α−1, β, μ−1)",
            anchor: "(z(1−z)∂ + α − Bz)𝔽^I = ((−1+α−β+μ)/2)𝔽^I_{α−1,β,μ−1}",
            ladder: l(zz, |p| p.alpha() - big_b(p) * p.z, |p| half(p, -1.0, -1.0, 1.0), [-1, 0, -1]),
            lowers_m: true,
            d_inhom: |p| p.z - 1.0,
        },
    ]
}

/// 𝔇^I at shifted (m, β, μ).
fn di(p: &Point, dm: i64, db: f64, dmu: f64) -> Result<C64> {
    let params = EquationParams::f2((p.m() + dm) as f64, p.beta() + db, p.mu() + dmu);
    Ok(d_jet(&params, p.z)?.value)
}

fn mf(p: &Point) -> f64 {
    p.m() as f64
}

fn c1(p: &Point) -> Result<(C64, C64)> {
    let rhs = half(p, -1.0, -1.0, 1.0) * di(p, -1, 1.0, 0.0)? - big_a(p) * p.z * di(p, 1, 1.0, 0.0)?;
    Ok((mf(p) * di(p, 0, 0.0, 0.0)?, rhs))
}

fn c2(p: &Point) -> Result<(C64, C64)> {
    let rhs = half(p, -1.0, 1.0, -1.0) * di(p, -1, -1.0, 0.0)? - half(p, 1.0, -1.0, -1.0) * p.z * di(p, 1, -1.0, 0.0)?;
    Ok((mf(p) * (1.0 - p.z) * di(p, 0, 0.0, 0.0)?, rhs))
}

fn c3(p: &Point) -> Result<(C64, C64)> {
    let rhs = big_a(p) * di(p, 0, 1.0, 1.0)? - half(p, -1.0, -1.0, 1.0) * di(p, 0, 1.0, -1.0)?;
    Ok((p.mu() * di(p, 0, 0.0, 0.0)?, rhs))
}

fn c4(p: &Point) -> Result<(C64, C64)> {
    let rhs = half(p, -1.0, 1.0, -1.0) * di(p, 0, -1.0, 1.0)? - half(p, 1.0, -1.0, -1.0) * di(p, 0, -1.0, -1.0)?;
    Ok((p.mu() * (1.0 - p.z) * di(p, 0, 0.0, 0.0)?, rhs))
}

fn c5(p: &Point) -> Result<(C64, C64)> {
    let rhs = big_a(p) * di(p, 1, 0.0, 1.0)? - half(p, 1.0, -1.0, -1.0) * di(p, 1, 0.0, -1.0)?;
    Ok((p.mu() * di(p, 0, 0.0, 0.0)?, rhs))
}

fn c6(p: &Point) -> Result<(C64, C64)> {
    let rhs = half(p, -1.0, -1.0, 1.0) * di(p, -1, 0.0, -1.0)? - half(p, -1.0, 1.0, -1.0) * di(p, -1, 0.0, 1.0)?;
    Ok((p.mu() * p.z * di(p, 0, 0.0, 0.0)?, rhs))
}

fn negated_beta(p: &Point) -> EquationParams {
    EquationParams::f2(p.alpha(), -p.beta(), p.mu())
}

fn pow_factor(p: &Point) -> Result<C64> {
    principal_pow(1.0 - p.z, -p.beta())
}

fn kummer_f(p: &Point) -> Result<(C64, C64)> {
    let lhs = f_norm_jet(&p.params, p.z, &opts())?.value();
    let rhs = pow_factor(p)? * f_norm_jet(&negated_beta(p), p.z, &opts())?.value();
    Ok((lhs, rhs))
}

fn kummer_u(p: &Point) -> Result<(C64, C64)> {
    let lhs = u2(p.alpha(), p.beta(), p.mu(), p.z, URoute::Auto)?.value;
    let rhs = pow_factor(p)? * u2(p.alpha(), -p.beta(), p.mu(), p.z, URoute::Auto)?.value;
    Ok((lhs, rhs))
}

fn kummer_d(p: &Point) -> Result<(C64, C64)> {
    let lhs = d_eval_jet(&dspec(&p.params), p.z, &opts())?.value();
    let rhs = pow_factor(p)? * d_eval_jet(&dspec(&negated_beta(p)), p.z, &opts())?.value();
    Ok((lhs, rhs))
}

pub(super) fn records() -> Vec<RelationRecord> {
    let mut out = Vec::new();
    for row in rows() {
        out.push(RelationRecord {
            id: row.ids.0,
            kind: EquationKind::F2,
            family: Family::RecurrenceF,
            signature: row.signature,
            anchor: row.anchor,
            constant: 1.0,
            body: Body::Ladder(row.ladder),
            applicable: f_ok,
            sample: generic_point,
        });
        out.push(RelationRecord {
            id: row.ids.1,
            kind: EquationKind::F2,
            family: Family::RecurrenceD,
            signature: row.signature,
            anchor: row.anchor,
            constant: 1.0,
            body: Body::Ladder(Ladder { inhom: Some(row.d_inhom), ..row.ladder }),
            applicable: if row.lowers_m { d_ok_lowering } else { d_ok },
            sample: integer_m,
        });
    }
    let rec = |id, family, signature, anchor, f, applicable: fn(&Point) -> bool, sample: fn(&mut ChaCha8Rng) -> Point| RelationRecord {
        id,
        kind: EquationKind::F2,
        family,
        signature,
        anchor,
        constant: 1.0,
        body: Body::Sides(f),
        applicable,
        sample,
    };
    let cont = Family::Contiguity;
    out.extend([
        rec("f2.contiguity.1", cont, "m ± 1, β+1", "m𝔇^I = ((−1+m−β+μ)/2)𝔇^I_{m−1,β+1} − Az𝔇^I_{m+1,β+1}", c1, d_ok_lowering, integer_m),
        rec("f2.contiguity.2", cont, "m ± 1, β−1", "m(1−z)𝔇^I = ((−1+m+β−μ)/2)𝔇^I_{m−1,β−1} − ((1+m−β−μ)/2)z𝔇^I_{m+1,β−1}", c2, d_ok_lowering, integer_m),
        rec("f2.contiguity.3", cont, "β+1, μ ± 1", "μ𝔇^I = A𝔇^I_{β+1,μ+1} − ((−1+m−β+μ)/2)𝔇^I_{β+1,μ−1}", c3, d_ok, integer_m),
        rec("f2.contiguity.4", cont, "β−1, μ ± 1", "μ(1−z)𝔇^I = ((−1+m+β−μ)/2)𝔇^I_{β−1,μ+1} − ((1+m−β−μ)/2)𝔇^I_{β−1,μ−1}", c4, d_ok, integer_m),
        rec("f2.contiguity.5", cont, "m+1, μ ± 1", "μ𝔇^I = A𝔇^I_{m+1,μ+1} − ((1+m−β−μ)/2)𝔇^I_{m+1,μ−1}", c5, d_ok, integer_m),
        rec("f2.contiguity.6", cont, "m−1, μ ± 1", "μz𝔇^I = ((−1+m−β+μ)/2)𝔇^I_{m−1,μ−1} − ((−1+m+β−μ)/2)𝔇^I_{m−1,μ+1}", c6, d_ok_lowering, integer_m),
        rec("f2.kummer.pow", Family::Kummer, "β → −β", "𝔽_{α,β,μ} = (1−z)^{−β}𝔽_{α,−β,μ}", kummer_f, f_ok, generic_point),
        rec("f2.kummer.powU", Family::Kummer, "β → −β", "𝕌_{α,β,μ} = (1−z)^{−β}𝕌_{α,−β,μ}", kummer_u, off_cut, generic_point),
        rec("f2.kummer.powD", Family::Kummer, "β → −β", "𝔇_{m,β,μ} = (1−z)^{−β}𝔇_{m,−β,μ}", kummer_d, d_ok, integer_m),
    ]);
    out
}
