//! ₀F₁ ladders and the three-term contiguity of 𝔇.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{annulus, c, d_jet, generic, Body, Family, Ladder, Point, RelationRecord};
use crate::error::Result;
use crate::params::{EquationKind, EquationParams};
use crate::C64;

fn generic_alpha(rng: &mut ChaCha8Rng) -> Point {
    Point::new(EquationParams::f0(generic(rng, -2.5, 2.5)), annulus(rng, 0.0, 3.0))
}

fn integer_m(rng: &mut ChaCha8Rng) -> Point {
    Point::new(EquationParams::f0(rng.gen_range(-3..=4) as f64), annulus(rng, 0.1, 3.0))
}

fn any(_: &Point) -> bool {
    true
}

fn off_origin(p: &Point) -> bool {
    p.z.norm() > 0.05
}

fn contiguity(pt: &Point) -> Result<(C64, C64)> {
    let m = pt.m();
    let at = |k: i64| d_jet(&EquationParams::f0(k as f64), pt.z).map(|j| j.value);
    Ok((m as f64 * at(m)?, at(m - 1)? - pt.z * at(m + 1)?))
}

pub(super) fn records() -> Vec<RelationRecord> {
    let raise = Ladder { p: |_| c(1.0), q: |_| c(0.0), coeff: |_| c(1.0), shift: [1, 0, 0], inhom: None };
    let lower = Ladder { p: |p| p.z, q: |p| p.alpha(), coeff: |_| c(1.0), shift: [-1, 0, 0], inhom: None };
    let rec = |id, family, signature, anchor, body, applicable: fn(&Point) -> bool, sample: fn(&mut ChaCha8Rng) -> Point| {
        RelationRecord { id, kind: EquationKind::F0, family, signature, anchor, constant: 1.0, body, applicable, sample }
    };
    vec![
        rec("f0.recurF.raise", Family::RecurrenceF, "α → α+1", "∂𝔽_α = 𝔽_{α+1}", Body::Ladder(raise), any, generic_alpha),
        rec("f0.recurF.lower", Family::RecurrenceF, "α → α−1", "(z∂ + α)𝔽_α = 𝔽_{α−1}", Body::Ladder(lower), any, generic_alpha),
        rec(
            "f0.recurD.raise",
            Family::RecurrenceD,
            "m → m+1",
            "∂𝔇_m = 𝔇_{m+1} − 𝔽_m/z",
            Body::Ladder(Ladder { inhom: Some(|p| -1.0 / p.z), ..raise }),
            off_origin,
            integer_m,
        ),
        rec(
            "f0.recurD.lower",
            Family::RecurrenceD,
            "m → m−1",
            "(z∂ + m)𝔇_m = 𝔇_{m−1} − 𝔽_m",
            Body::Ladder(Ladder { inhom: Some(|_| c(-1.0)), ..lower }),
            off_origin,
            integer_m,
        ),
        rec(
            "f0.contiguity",
            Family::Contiguity,
            "m−1, m, m+1",
            "m𝔇_m = 𝔇_{m−1} − z𝔇_{m+1}",
            Body::Sides(contiguity),
            off_origin,
            integer_m,
        ),
    ]
}
