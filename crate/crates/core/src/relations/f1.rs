//! ₁F₁ ladders in (θ, α) and the contiguity relations of 𝔇.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{annulus, c, d_jet, dist_int, generic, Body, Family, Ladder, Point, RelationRecord};
use crate::error::Result;
use crate::params::{EquationKind, EquationParams};
use crate::C64;

fn big_a(p: &Point) -> C64 {
    (1.0 + p.alpha() + p.theta()) / 2.0
}

fn big_b(p: &Point) -> C64 {
    (1.0 + p.alpha() - p.theta()) / 2.0
}

fn generic_point(rng: &mut ChaCha8Rng) -> Point {
    let theta = generic(rng, -2.0, 2.0);
    let alpha = generic(rng, -2.0, 2.0);
    Point::new(EquationParams::f1(theta, alpha), annulus(rng, 0.0, 3.0))
}

fn integer_m(rng: &mut ChaCha8Rng) -> Point {
    let theta = generic(rng, -2.0, 2.0);
    Point::new(EquationParams::f1(theta, rng.gen_range(0..=4) as f64), annulus(rng, 0.1, 3.0))
}

fn any(_: &Point) -> bool {
    true
}

// θ off the integers keeps a = (1+m+θ)/2 away from the integers for every shift used here
fn d_ok(p: &Point) -> bool {
    p.m() >= 0 && dist_int(p.theta()) > 0.01 && p.z.norm() > 0.05
}

fn d_ok_lowering(p: &Point) -> bool {
    d_ok(p) && p.m() >= 1
}

fn d_at(p: &Point, dtheta: f64, dm: i64) -> Result<C64> {
    let params = EquationParams::f1(p.theta() + dtheta, (p.m() + dm) as f64);
    Ok(d_jet(&params, p.z)?.value)
}

fn m_raise(p: &Point) -> Result<(C64, C64)> {
    let rhs = big_a(p) * d_at(p, 1.0, 1)? + big_b(p) * d_at(p, -1.0, 1)?;
    Ok((d_at(p, 0.0, 0)?, rhs))
}

fn m_lower(p: &Point) -> Result<(C64, C64)> {
    Ok((p.z * d_at(p, 0.0, 0)?, d_at(p, 1.0, -1)? - d_at(p, -1.0, -1)?))
}

fn theta2(p: &Point) -> Result<(C64, C64)> {
    let rhs = big_a(p) * d_at(p, 2.0, 0)? - big_b(p) * d_at(p, -2.0, 0)?;
    Ok(((p.theta() + p.z) * d_at(p, 0.0, 0)?, rhs))
}

struct Row {
    ids: (&'static str, &'static str),
    signature: &'static str,
    anchor: &'static str,
    ladder: Ladder,
    lowers_m: bool,
    /// Printed inhomogeneous multiplier of the 𝔇 version.
    d_inhom: fn(&Point) -> C64,
}

fn rows() -> Vec<Row> {
    vec![
        Row {
            ids: ("f1.recurF.d-raise", "f1.recurD.d-raise"),
            signature: "(θ, α) → (θ+1, α+1)",
            anchor: "∂𝔽 = A𝔽_{θ+1,α+1}",
            ladder: Ladder { p: |_| c(1.0), q: |_| c(0.0), coeff: big_a, shift: [1, 1, 0], inhom: None },
            lowers_m: false,
            d_inhom: |p| -1.0 / p.z,
        },
        Row {
            ids: ("f1.recurF.dm1-raise", "f1.recurD.dm1-raise"),
            signature: "(θ, α) → (θ−1, α+1)",
            anchor: "(∂ − 1)𝔽 = ((−1−α+θ)/2)𝔽_{θ−1,α+1}",
            ladder: Ladder {
                p: |_| c(1.0),
                q: |_| c(-1.0),
                coeff: |p| (-1.0 - p.alpha() + p.theta()) / 2.0,
                shift: [-1, 1, 0],
                inhom: None,
            },
            lowers_m: false,
            d_inhom: |p| -1.0 / p.z,
        },
        Row {
            ids: ("f1.recurF.z-lower-thetam", "f1.recurD.z-lower-thetam"),
            signature: "(θ, α) → (θ−1, α−1)",
            anchor: "(z∂ + α − z)𝔽 = 𝔽_{θ−1,α−1}",
            ladder: Ladder { p: |p| p.z, q: |p| p.alpha() - p.z, coeff: |_| c(1.0), shift: [-1, -1, 0], inhom: None },
            lowers_m: true,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f1.recurF.z-lower-thetap", "f1.recurD.z-lower-thetap"),
            signature: "(θ, α) → (θ+1, α−1)",
            anchor: "(z∂ + α)𝔽 = 𝔽_{θ+1,α−1}",
            ladder: Ladder { p: |p| p.z, q: |p| p.alpha(), coeff: |_| c(1.0), shift: [1, -1, 0], inhom: None },
            lowers_m: true,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f1.recurF.z-raise-theta2", "f1.recurD.z-raise-theta2"),
            signature: "(θ, α) → (θ+2, α)",
            anchor: "(z∂ + A)𝔽 = A𝔽_{θ+2,α}",
            ladder: Ladder { p: |p| p.z, q: big_a, coeff: big_a, shift: [2, 0, 0], inhom: None },
            lowers_m: false,
            d_inhom: |_| c(-1.0),
        },
        Row {
            ids: ("f1.recurF.z-lower-theta2", "f1.recurD.z-lower-theta2"),
            signature: "(θ, α) → (θ−2, α)",
            anchor: "(z∂ + B − z)𝔽 = B𝔽_{θ−2,α}",
            ladder: Ladder { p: |p| p.z, q: |p| big_b(p) - p.z, coeff: big_b, shift: [-2, 0, 0], inhom: None },
            lowers_m: false,
            d_inhom: |_| c(-1.0),
        },
    ]
}

pub(super) fn records() -> Vec<RelationRecord> {
    let mut out = Vec::new();
    for row in rows() {
        out.push(RelationRecord {
            id: row.ids.0,
            kind: EquationKind::F1,
            family: Family::RecurrenceF,
            signature: row.signature,
            anchor: row.anchor,
            constant: 1.0,
            body: Body::Ladder(row.ladder),
            applicable: any,
            sample: generic_point,
        });
        out.push(RelationRecord {
            id: row.ids.1,
            kind: EquationKind::F1,
            family: Family::RecurrenceD,
            signature: row.signature,
            anchor: row.anchor,
            constant: 1.0,
            body: Body::Ladder(Ladder { inhom: Some(row.d_inhom), ..row.ladder }),
            applicable: if row.lowers_m { d_ok_lowering } else { d_ok },
            sample: integer_m,
        });
    }
    let contiguity = |id, signature, anchor, f, applicable| RelationRecord {
        id,
        kind: EquationKind::F1,
        family: Family::Contiguity,
        signature,
        anchor,
        constant: 1.0,
        body: Body::Sides(f),
        applicable,
        sample: integer_m,
    };
    out.push(contiguity("f1.contiguity.m-raise", "m → m+1, θ ± 1", "𝔇 = A𝔇_{θ+1,m+1} + B𝔇_{θ−1,m+1}", m_raise, d_ok));
    out.push(contiguity("f1.contiguity.m-lower", "m → m−1, θ ± 1", "z𝔇 = 𝔇_{θ+1,m−1} − 𝔇_{θ−1,m−1}", m_lower, d_ok_lowering));
    out.push(contiguity("f1.contiguity.theta2", "θ ± 2", "(θ+z)𝔇 = A𝔇_{θ+2} − B𝔇_{θ−2}", theta2, d_ok));
    out
}
