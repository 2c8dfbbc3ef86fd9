//! Browser bindings for the demo page. Each export has a plain-Rust twin so the
//! numerics can be tested natively.

use hyperd::oracle::{limit_alpha, LimitTarget};
use hyperd::relations::catalog;
use hyperd::verify::theorem_value;
use hyperd::{d_eval, f_norm, u0, u1, u2, DSpec, EquationKind, EquationParams, URoute, C64};
use wasm_bindgen::prelude::*;

fn kind(eq: &str) -> Result<EquationKind, String> {
    eq.parse()
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// One function of one equation at z. `alpha` is rounded to m for `D`.
pub fn value(eq: &str, func: &str, alpha: f64, theta: f64, beta: f64, mu: f64, z: C64) -> Result<C64, String> {
    let k = kind(eq)?;
    let m = alpha.round() as i64;
    let r = match (func, k) {
        ("F", EquationKind::F0) => f_norm(&EquationParams::f0(alpha), z),
        ("F", EquationKind::F1) => f_norm(&EquationParams::f1(theta, alpha), z),
        ("F", EquationKind::F2) => f_norm(&EquationParams::f2(alpha, beta, mu), z),
        ("D", EquationKind::F0) => d_eval(&DSpec::f0(m), z),
        ("D", EquationKind::F1) => d_eval(&DSpec::f1(theta, m), z),
        ("D", EquationKind::F2) => d_eval(&DSpec::f2(m, beta, mu), z),
        ("U", EquationKind::F0) => u0(real(alpha), z, URoute::Auto),
        ("U", EquationKind::F1) => u1(real(theta), real(alpha), z, URoute::Auto),
        ("U", EquationKind::F2) => u2(real(alpha), real(beta), real(mu), z, URoute::Auto),
        _ => return Err(format!("unknown function `{func}` (expected F, D or U)")),
    };
    r.map(|e| e.value).map_err(|e| e.to_string())
}

/// Samples along the segment from `from` to `to`, flattened as [re, im, |f|, ...].
/// Points where evaluation fails come back as NaN so the plot shows a gap.
pub fn curve_points(
    eq: &str,
    func: &str,
    params: [f64; 4],
    from: C64,
    to: C64,
    n: usize,
) -> Result<Vec<f64>, String> {
    kind(eq)?;
    let [alpha, theta, beta, mu] = params;
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let t = if n > 1 { i as f64 / (n - 1) as f64 } else { 0.0 };
        let z = from + (to - from) * t;
        match value(eq, func, alpha, theta, beta, mu, z) {
            Ok(v) => out.extend([v.re, v.im, v.norm()]),
            Err(e) if e.starts_with("unknown function") => return Err(e),
            Err(_) => out.extend([f64::NAN; 3]),
        }
    }
    Ok(out)
}

/// The degenerate-case formula next to the α → m limit of the generic one:
/// [formula re, im, limit re, im, relative gap].
pub fn theorem_gap_values(eq: &str, m: i64, theta: f64, beta: f64, mu: f64, z: C64) -> Result<Vec<f64>, String> {
    let target = match kind(eq)? {
        EquationKind::F0 => LimitTarget::F0,
        EquationKind::F1 => LimitTarget::F1 { theta: real(theta) },
        EquationKind::F2 => LimitTarget::F2 { beta: real(beta), mu: real(mu) },
    };
    let a = theorem_value(target, m, z).map_err(|e| e.to_string())?;
    let b = limit_alpha(m, target, z).map_err(|e| e.to_string())?.value;
    let gap = (a - b).norm() / a.norm().max(b.norm()).max(1.0);
    Ok(vec![a.re, a.im, b.re, b.im, gap])
}

/// Every catalog id with its equation and family, one "id kind family" line each.
pub fn relation_list() -> String {
    catalog()
        .records()
        .iter()
        .map(|r| format!("{} {} {}", r.id, r.kind, r.family.name()))
        .collect::<Vec<_>>()
        .join("\n")
}

/// The record's fixed grid, flattened as [z re, z im, scaled residual, ...].
pub fn relation_residuals(id: &str, n: usize) -> Result<Vec<f64>, String> {
    let rec = catalog().get(id).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(3 * n);
    for pt in rec.grid(n) {
        let s = rec.check(&pt).map(|c| c.scaled).unwrap_or(f64::INFINITY);
        out.extend([pt.z.re, pt.z.im, s]);
    }
    Ok(out)
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn curve(
    eq: &str,
    func: &str,
    alpha: f64,
    theta: f64,
    beta: f64,
    mu: f64,
    from_re: f64,
    from_im: f64,
    to_re: f64,
    to_im: f64,
    n: usize,
) -> Result<Vec<f64>, JsError> {
    curve_points(eq, func, [alpha, theta, beta, mu], C64::new(from_re, from_im), C64::new(to_re, to_im), n).map_err(js)
}

#[wasm_bindgen]
pub fn theorem_gap(eq: &str, m: i32, theta: f64, beta: f64, mu: f64, z_re: f64, z_im: f64) -> Result<Vec<f64>, JsError> {
    theorem_gap_values(eq, m as i64, theta, beta, mu, C64::new(z_re, z_im)).map_err(js)
}

#[wasm_bindgen]
pub fn relations() -> String {
    relation_list()
}

#[wasm_bindgen]
pub fn relation_grid(id: &str, n: usize) -> Result<Vec<f64>, JsError> {
    relation_residuals(id, n).map_err(js)
}
