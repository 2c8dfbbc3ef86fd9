//! Independent checks: differential-equation residuals, inhomogeneous
//! residuals for 𝔇, α → m limits of the connection formulas, ∂_α of 𝔽, and a
//! quadrature for K_m.

use crate::error::{HyperError, Result};
use crate::gammakit::recip_gamma_deriv;
use crate::hyperd::{d_eval_jet, log_solution_jet, DSpec};
use crate::hyperf::f_norm;
use crate::hyperu::{u0_connection_jet, u1_connection_jet, u2_connection_jet};
use crate::params::{EquationKind, EquationParams};
use crate::hyperf::f_norm_jet;
use crate::series::{sum_series, EvalResult, Flags, Jet, JetResult, SeriesOpts};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualMethod {
    SeriesDeriv,
    FiniteDiff,
    Richardson,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub residual: f64,
    /// Largest magnitude among the operator's individual terms, for relative comparisons.
    pub scale: f64,
    pub method: ResidualMethod,
    /// Finite-difference step, when one was used.
    pub step: Option<f64>,
}

impl ResidualReport {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale.max(1.0)
    }
}

/// Coefficients (p₂, p₁, p₀) of the operator p₂∂² + p₁∂ + p₀ at z.
pub fn operator_coeffs(p: &EquationParams, z: C64) -> (C64, C64, C64) {
    match *p {
        EquationParams::F0 { alpha } => (z, alpha + 1.0, C64::new(-1.0, 0.0)),
        EquationParams::F1 { theta, alpha } => (z, 1.0 + alpha - z, -(1.0 + theta + alpha) / 2.0),
        EquationParams::F2 { alpha, beta, mu } => (
            z * (1.0 - z),
            (1.0 + alpha) * (1.0 - z) - (1.0 + beta) * z,
            mu * mu / 4.0 - (alpha + beta + 1.0) * (alpha + beta + 1.0) / 4.0,
        ),
    }
}

fn apply(p: &EquationParams, jet: Jet, z: C64) -> (C64, f64) {
    let (p2, p1, p0) = operator_coeffs(p, z);
    let t = [p2 * jet.d2, p1 * jet.d1, p0 * jet.value];
    let scale = t.iter().map(|x| x.norm()).fold(0.0, f64::max);
    (t[0] + t[1] + t[2], scale)
}

/// Applies the equation's operator to a solution given with its series derivatives.
pub fn ode_residual(p: &EquationParams, jet: Jet, z: C64) -> ResidualReport {
    let (r, scale) = apply(p, jet, z);
    ResidualReport { residual: r.norm(), scale, method: ResidualMethod::SeriesDeriv, step: None }
}

/// Same, with derivatives from 5-point central differences at h = 1e−4·max(1, |z|).
pub fn ode_residual_fd<F>(p: &EquationParams, f: F, z: C64) -> Result<ResidualReport>
where
    F: Fn(C64) -> Result<C64>,
{
    let h = 1e-4 * z.norm().max(1.0);
    let v: Vec<C64> = [-2.0, -1.0, 0.0, 1.0, 2.0]
        .iter()
        .map(|k| f(z + k * h))
        .collect::<Result<_>>()?;
    let d1 = (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
    let d2 = (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
    let (r, scale) = apply(p, Jet::new(v[2], d1, d2), z);
    Ok(ResidualReport { residual: r.norm(), scale, method: ResidualMethod::FiniteDiff, step: Some(h) })
}

/// Residual of the inhomogeneous equation satisfied by 𝔇_m:
/// ₀F₁: 𝓕𝔇 = −(m/z)𝔽 − 2𝔽′; ₁F₁: 𝓕𝔇 = (1 − m/z)𝔽 − 2𝔽′; ₂F₁: 𝓕𝔇 = (1+m+β − m/z)𝔽 + 2(z−1)𝔽′.
pub fn inhom_residual(spec: &DSpec, z: C64) -> Result<ResidualReport> {
    let opts = SeriesOpts::default();
    let p = spec.params();
    let d = d_eval_jet(spec, z, &opts)?;
    let f = f_norm_jet(&p, z, &opts)?.jet;
    let m = spec.m as f64;
    let rhs = match spec.kind {
        EquationKind::F0 => -(m / z) * f.value - 2.0 * f.d1,
        EquationKind::F1 => (1.0 - m / z) * f.value - 2.0 * f.d1,
        EquationKind::F2 => (1.0 + m + spec.beta - m / z) * f.value + 2.0 * (z - 1.0) * f.d1,
    };
    let (lhs, scale) = apply(&p, d.jet, z);
    Ok(ResidualReport {
        residual: (lhs - rhs).norm(),
        scale: scale.max(rhs.norm()),
        method: ResidualMethod::SeriesDeriv,
        step: None,
    })
}

/// Residual of the homogeneous equation on log·𝔽 + 𝔇.
pub fn log_solution_residual(spec: &DSpec, z: C64) -> Result<ResidualReport> {
    let j = log_solution_jet(spec, z, &SeriesOpts::default())?;
    let p = spec.params();
    Ok(ode_residual(&p, j.jet, z))
}

/// Offsets of the Richardson ladder used by [`limit_alpha`].
pub const LIMIT_STEPS: [f64; 4] = [1e-2, 5e-3, 2.5e-3, 1.25e-3];

/// Which connection formula to take the limit of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitTarget {
    F0,
    F1 { theta: C64 },
    F2 { beta: C64, mu: C64 },
}

fn connection_value(target: LimitTarget, alpha: C64, z: C64) -> Result<C64> {
    let opts = SeriesOpts::default();
    let r = match target {
        LimitTarget::F0 => u0_connection_jet(alpha, z, &opts)?,
        LimitTarget::F1 { theta } => u1_connection_jet(theta, alpha, z, &opts)?,
        LimitTarget::F2 { beta, mu } => u2_connection_jet(alpha, beta, mu, z, &opts)?,
    };
    Ok(r.value())
}

/// U at integer α = m from the generic-α connection formula at α = m + h,
/// Richardson-extrapolated to h = 0 over [`LIMIT_STEPS`].
pub fn limit_alpha(target_m: i64, target: LimitTarget, z: C64) -> Result<EvalResult> {
    let n = LIMIT_STEPS.len();
    let mut t = vec![vec![C64::new(0.0, 0.0); n]; n];
    for (i, h) in LIMIT_STEPS.iter().enumerate() {
        t[i][0] = connection_value(target, C64::new(target_m as f64 + h, 0.0), z)?;
    }
    for j in 1..n {
        let f = (2f64).powi(j as i32) - 1.0;
        for i in j..n {
            t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / f;
        }
    }
    let increments: Vec<f64> = (1..n).map(|i| (t[i][i] - t[i - 1][i - 1]).norm()).collect();
    let value = t[n - 1][n - 1];
    // increments below this level are rounding noise, not truncation
    let floor = 1e-11 * value.norm().max(1.0);
    for w in increments.windows(2) {
        if w[1] > floor && w[1] > w[0] / 2.0 {
            return Err(HyperError::ExtrapolationUnstable { increments });
        }
    }
    let err = *increments.last().unwrap();
    Ok(EvalResult { value, err_estimate: err, terms_used: n, flags: Flags::empty() })
}

/// ∂_α𝔽_α(z) for the ₀F₁ function, summed term-wise as Σ (1/Γ)′(α+j+1) zʲ/j!.
fn alpha_derivative_series(alpha: C64, z: C64) -> Result<JetResult> {
    let mut fact = 1.0;
    let coeff = |j: usize| {
        if j > 0 {
            fact *= j as f64;
        }
        recip_gamma_deriv(alpha + j as f64 + 1.0) / fact
    };
    let opts = SeriesOpts::default().with_min_terms((2.0 * z.norm().sqrt() + alpha.norm() + 6.0) as usize);
    sum_series(coeff, 0, z, false, &opts)
}

/// ∂_α𝔽_α(z) of the ₀F₁ function, checked against a central difference in α (h = 1e−4).
pub fn alpha_derivative(alpha: C64, z: C64) -> Result<EvalResult> {
    let series = alpha_derivative_series(alpha, z)?;
    let h = 1e-4;
    let fp = f_norm(&EquationParams::F0 { alpha: alpha + h }, z)?.value;
    let fm = f_norm(&EquationParams::F0 { alpha: alpha - h }, z)?.value;
    let fd = (fp - fm) / (2.0 * h);
    if (series.value() - fd).norm() > 1e-6 * series.value().norm().max(1.0) {
        return Err(HyperError::RoutesDisagree { series: series.value(), fd });
    }
    Ok(series.to_eval())
}

/// Central difference of 𝔽_α in α with step h, exposed for convergence checks.
pub fn alpha_derivative_fd(alpha: C64, z: C64, h: f64) -> Result<C64> {
    let fp = f_norm(&EquationParams::F0 { alpha: alpha + h }, z)?.value;
    let fm = f_norm(&EquationParams::F0 { alpha: alpha - h }, z)?.value;
    Ok((fp - fm) / (2.0 * h))
}

/// ∫₀^∞ e^{−x cosh t} cosh(mt) dt = K_m(x) for real x > 0, by the trapezoid rule
/// (spectrally accurate for this integrand).
pub fn k_quadrature(m: i64, x: f64) -> f64 {
    k_quadrature_complex(m, C64::new(x, 0.0)).re
}

/// The same integral for complex x with Re x > 0.
pub fn k_quadrature_complex(m: i64, x: C64) -> C64 {
    let h: f64 = 0.02;
    let mf = m as f64;
    let mut sum = 0.5 * (-x).exp();
    let mut t: f64 = h;
    loop {
        let v = (-x * t.cosh()).exp() * (mf * t).cosh();
        sum += v;
        if v.norm() < 1e-20 * sum.norm() {
            break;
        }
        t += h;
    }
    sum * h
}

/// Γ(a)·U(a, b, z) = ∫₀^∞ e^{−zt} t^{a−1}(1+t)^{b−a−1} dt for Re a > 0, Re z > 0,
/// by the trapezoid rule after t = eˣ.
pub fn tricomi_integral(a: C64, b: C64, z: C64) -> Result<C64> {
    if a.re <= 0.0 || z.re <= 0.0 {
        return Err(HyperError::Domain(format!("integral needs Re a > 0 and Re z > 0 (a = {a}, z = {z})")));
    }
    let h = 0.01;
    let f = |x: f64| {
        let t = x.exp();
        (-z * t + a * x).exp() * C64::new(1.0 + t, 0.0).powc(b - a - 1.0)
    };
    // left tail decays like e^{a x}
    let x0 = -(40.0 / a.re).min(2000.0);
    let mut sum = C64::new(0.0, 0.0);
    let mut x = x0;
    loop {
        let v = f(x);
        sum += v;
        x += h;
        if x > 0.0 && v.norm() < 1e-20 * sum.norm() {
            break;
        }
    }
    Ok(sum * h)
}

/// U_m(z) = (2/√π) z^{−m/2} K_m(2√z) with K from quadrature; Re √z > 0.
pub fn u0_reference(m: i64, z: C64) -> Result<C64> {
    let sq = crate::series::principal_pow(z, C64::new(0.5, 0.0))?;
    let k = k_quadrature_complex(m, 2.0 * sq);
    Ok(2.0 / std::f64::consts::PI.sqrt() * crate::series::principal_pow(z, C64::new(-(m as f64) / 2.0, 0.0))? * k)
}

/// Tricomi's U_{θ,α}(z) from its Laplace-type integral.
pub fn u1_reference(theta: C64, alpha: C64, z: C64) -> Result<C64> {
    let a = (1.0 + alpha + theta) / 2.0;
    Ok(tricomi_integral(a, 1.0 + alpha, z)? * crate::gammakit::recip_gamma(a))
}

/// 𝕌_{α,β,μ}(z) obtained by integrating the differential equation along the ray from
/// 1.5·z/|z|, where the series in 1/z supplies the initial data, into z (RK4, fixed step).
pub fn u2_reference(alpha: C64, beta: C64, mu: C64, z: C64) -> Result<C64> {
    if z.norm() >= 1.5 || z.norm() == 0.0 {
        return Err(HyperError::Domain(format!("continuation runs inward from |z| = 1.5 (z = {z})")));
    }
    let start = z * (1.5 / z.norm());
    let init = crate::hyperu::u2_jet(alpha, beta, mu, start, crate::hyperu::URoute::InverseSeries, &SeriesOpts::default())?;
    let p = EquationParams::F2 { alpha, beta, mu };
    let rhs = |w: C64, y: [C64; 2]| {
        let (p2, p1, p0) = operator_coeffs(&p, w);
        [y[1], -(p1 * y[1] + p0 * y[0]) / p2]
    };
    let n = 8000;
    let h = (z - start) / n as f64;
    let mut y = [init.jet.value, init.jet.d1];
    let mut w = start;
    let add = |y: [C64; 2], k: [C64; 2], s: C64| [y[0] + s * k[0], y[1] + s * k[1]];
    for _ in 0..n {
        let k1 = rhs(w, y);
        let k2 = rhs(w + h / 2.0, add(y, k1, h / 2.0));
        let k3 = rhs(w + h / 2.0, add(y, k2, h / 2.0));
        let k4 = rhs(w + h, add(y, k3, h));
        y = [
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ];
        w += h;
    }
    Ok(y[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn constant_function_residual() {
        let r = ode_residual(&EquationParams::f0(0.0), Jet::constant(c(1.0)), c(1.0));
        assert_eq!(r.residual, 1.0);
    }

    #[test]
    fn quadrature_reference() {
        assert!((k_quadrature(0, 1.0) - 0.421_024_438_240_708_34).abs() < 1e-14);
        assert!((k_quadrature(1, 1.0) - 0.601_907_230_197_234_6).abs() < 1e-14);
    }

    #[test]
    fn alpha_derivative_at_origin() {
        let r = alpha_derivative(c(0.0), c(0.0)).unwrap();
        assert!((r.value - crate::gammakit::EULER_GAMMA).norm() < 1e-14);
    }
}
