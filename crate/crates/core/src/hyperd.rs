//! Logarithmic companions 𝔇 of the degenerate 𝔽 functions.
//!
//! For m ≥ 0, 𝔇 has a finite principal part Σ_{k=1}^{m} d₋ₖ z^{−k} and an
//! analytic tail Σ dₖ zᵏ whose coefficients carry digamma weights. The
//! constant of integration is fixed at C = 2γ − H_m. Negative m is defined by
//! 𝔇_{−m} = z^m 𝔇_m.

use crate::error::{HyperError, Result};
use crate::gammakit::{digamma, factorial, near_integer, pochhammer, EULER_GAMMA};
use crate::hyperf::{f_norm_jet, F2_RADIUS};
use crate::params::{EquationKind, EquationParams, DEGENERACY_TOL};
use crate::series::{sum_series, EvalResult, Jet, JetResult, SeriesOpts};
use crate::C64;

/// Which 𝔇 to build: equation, integer order m and the remaining parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DSpec {
    pub kind: EquationKind,
    pub m: i64,
    pub theta: C64,
    pub beta: C64,
    pub mu: C64,
}

impl DSpec {
    pub fn f0(m: i64) -> Self {
        DSpec { kind: EquationKind::F0, m, theta: C64::new(0.0, 0.0), beta: C64::new(0.0, 0.0), mu: C64::new(0.0, 0.0) }
    }

    pub fn f1(theta: impl Into<C64>, m: i64) -> Self {
        DSpec { theta: theta.into(), ..DSpec::f0(m) }.with_kind(EquationKind::F1)
    }

    pub fn f2(m: i64, beta: impl Into<C64>, mu: impl Into<C64>) -> Self {
        DSpec { beta: beta.into(), mu: mu.into(), ..DSpec::f0(m) }.with_kind(EquationKind::F2)
    }

    fn with_kind(mut self, kind: EquationKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = m;
        self
    }

    /// Parameters of the 𝔽 paired with this 𝔇 (α = m).
    pub fn params(&self) -> EquationParams {
        let alpha = C64::new(self.m as f64, 0.0);
        match self.kind {
            EquationKind::F0 => EquationParams::F0 { alpha },
            EquationKind::F1 => EquationParams::F1 { theta: self.theta, alpha },
            EquationKind::F2 => EquationParams::F2 { alpha, beta: self.beta, mu: self.mu },
        }
    }

    /// Classical a, b at order |m|.
    pub fn ab(&self) -> (Option<C64>, Option<C64>) {
        let cl = self.with_m(self.m.abs()).params().to_classical();
        (cl.a, cl.b)
    }

    /// Rejects parameters where the principal-part Pochhammers or the digamma weights hit a pole.
    pub fn validate(&self) -> Result<()> {
        let m = self.m.abs();
        let (a, b) = self.ab();
        if let Some(a) = a {
            if let Some(n) = near_integer(a, DEGENERACY_TOL) {
                if n <= m {
                    return Err(HyperError::ParameterSingular(format!(
                        "a = {a} is an integer <= m = {m}"
                    )));
                }
            }
        }
        if let Some(b) = b {
            if near_integer(b, DEGENERACY_TOL).is_some() {
                return Err(HyperError::ParameterSingular(format!("b = {b} is an integer")));
            }
        }
        Ok(())
    }
}

/// Finite principal part plus generator of the analytic tail.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentExpansion {
    pub spec: DSpec,
    /// d₋₁, …, d₋ₘ for m = |spec.m|.
    pub principal: Vec<C64>,
    /// The whole expansion is multiplied by z^shift (shift = −m for negative m, else 0).
    pub shift: u32,
}

impl LaurentExpansion {
    pub fn tail(&self) -> TailCoeffs {
        TailCoeffs::new(&self.spec)
    }

    /// The first `n` analytic-tail coefficients d₀, …, d_{n−1}.
    pub fn tail_coeffs(&self, n: usize) -> Vec<C64> {
        self.tail().take(n).collect()
    }
}

/// Iterator over the tail coefficients d₀, d₁, … at order |m|.
#[derive(Debug, Clone)]
pub struct TailCoeffs {
    kind: EquationKind,
    m: f64,
    a: C64,
    b: C64,
    k: usize,
    /// (a)ₖ(b)ₖ/((m+k)! k!) with absent factors omitted
    weight: C64,
    psi_k1: f64,
    psi_km1: f64,
    psi_ak: C64,
    psi_1bk: C64,
}

impl TailCoeffs {
    fn new(spec: &DSpec) -> Self {
        let m = spec.m.unsigned_abs();
        let (a, b) = spec.ab();
        let a = a.unwrap_or(C64::new(1.0, 0.0));
        let b = b.unwrap_or(C64::new(1.0, 0.0));
        let psi_m1 = -EULER_GAMMA + crate::gammakit::harmonic_number(m as u32);
        let psi_ak = if spec.kind != EquationKind::F0 { digamma(a).unwrap_or(C64::new(f64::NAN, 0.0)) } else { C64::new(0.0, 0.0) };
        let psi_1bk = if spec.kind == EquationKind::F2 { digamma(1.0 - b).unwrap_or(C64::new(f64::NAN, 0.0)) } else { C64::new(0.0, 0.0) };
        TailCoeffs {
            kind: spec.kind,
            m: m as f64,
            a,
            b,
            k: 0,
            weight: C64::new(1.0 / factorial(m as u32), 0.0),
            psi_k1: -EULER_GAMMA,
            psi_km1: psi_m1,
            psi_ak,
            psi_1bk,
        }
    }
}

impl Iterator for TailCoeffs {
    type Item = C64;

    fn next(&mut self) -> Option<C64> {
        let k = self.k as f64;
        if self.k > 0 {
            let j = k - 1.0;
            let mut r = C64::new(1.0 / (k * (self.m + k)), 0.0);
            match self.kind {
                EquationKind::F0 => {}
                EquationKind::F1 => r *= self.a + j,
                EquationKind::F2 => r *= (self.a + j) * (self.b + j),
            }
            self.weight *= r;
            self.psi_k1 += 1.0 / k;
            self.psi_km1 += 1.0 / (self.m + k);
            self.psi_ak += 1.0 / (self.a + j);
            self.psi_1bk -= 1.0 / (-self.b - j);
        }
        self.k += 1;
        let base = self.psi_k1 + self.psi_km1;
        let d = match self.kind {
            EquationKind::F0 => -self.weight * base,
            EquationKind::F1 => self.weight * (self.psi_ak - base),
            EquationKind::F2 => self.weight * (self.psi_ak + self.psi_1bk - base),
        };
        Some(d)
    }
}

/// Builds the Laurent expansion of 𝔇.
pub fn d_expand(spec: &DSpec) -> Result<LaurentExpansion> {
    spec.validate()?;
    let m = spec.m.unsigned_abs();
    let (a, b) = spec.ab();
    let mut principal = Vec::with_capacity(m as usize);
    for k in 1..=m {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let mut d = C64::new(sign * factorial(k as u32 - 1) / factorial((m - k) as u32), 0.0);
        if let Some(a) = a {
            d *= pochhammer(a, -(k as i64))?;
        }
        if let Some(b) = b {
            d *= pochhammer(b, -(k as i64))?;
        }
        principal.push(d);
    }
    let shift = if spec.m < 0 { m as u32 } else { 0 };
    Ok(LaurentExpansion { spec: *spec, principal, shift })
}

fn check_domain(spec: &DSpec, z: C64) -> Result<()> {
    if spec.kind == EquationKind::F2 && z.norm() > F2_RADIUS {
        return Err(HyperError::Domain(format!("|z| = {} exceeds {F2_RADIUS} for the 2F1 series", z.norm())));
    }
    if spec.m > 0 && z == C64::new(0.0, 0.0) {
        return Err(HyperError::PoleAtOrigin);
    }
    Ok(())
}

/// 𝔇 with first and second z-derivatives.
pub fn d_eval_jet(spec: &DSpec, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    check_domain(spec, z)?;
    let exp = d_expand(spec)?;
    let mut principal = Jet::ZERO;
    for (i, d) in exp.principal.iter().enumerate() {
        principal = principal + Jet::powi(z, -(i as i32 + 1)).scale(*d);
    }
    let mut tail = exp.tail();
    let min = (2.0 * z.norm().sqrt() + spec.m.abs() as f64 + 6.0) as usize;
    let min = match spec.kind {
        EquationKind::F0 => min,
        EquationKind::F1 => min + (2.0 * z.norm() + spec.theta.norm()) as usize,
        EquationKind::F2 => min + (spec.beta.norm() + spec.mu.norm()) as usize,
    };
    let opts = opts.with_min_terms(opts.min_terms.max(min));
    let sum = sum_series(|_| tail.next().unwrap(), 0, z, true, &opts)?;
    let mut res = sum.plus(principal);
    if exp.shift > 0 {
        res = res.times(Jet::powi(z, exp.shift as i32));
    }
    Ok(res)
}

/// 𝔇(z): exact principal part plus summed tail.
pub fn d_eval(spec: &DSpec, z: C64) -> Result<EvalResult> {
    d_eval_jet(spec, z, &SeriesOpts::default()).map(JetResult::to_eval)
}

/// The log term of the logarithmic solution: log z for ₀F₁/₁F₁ and log(−z) for ₂F₁.
pub fn log_jet(kind: EquationKind, z: C64) -> Result<Jet> {
    match kind {
        EquationKind::F2 => Jet::log_negated(z),
        _ => Jet::log(z),
    }
}

/// log·𝔽 + 𝔇 with derivatives. Negative m is z^{|m|} times the solution at |m|.
pub fn log_solution_jet(spec: &DSpec, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    if spec.m < 0 {
        let base = log_solution_jet(&spec.with_m(-spec.m), z, opts)?;
        return Ok(base.times(Jet::powi(z, (-spec.m) as i32)));
    }
    let l = log_jet(spec.kind, z)?;
    let f = f_norm_jet(&spec.params(), z, opts)?;
    let d = d_eval_jet(spec, z, opts)?;
    Ok(f.times(l) + d)
}

/// log z·𝔽 + 𝔇 (log(−z) for ₂F₁).
pub fn log_solution(spec: &DSpec, z: C64) -> Result<EvalResult> {
    log_solution_jet(spec, z, &SeriesOpts::default()).map(JetResult::to_eval)
}

/// Largest relative deviation of the first `count` tail coefficients from their three-term recursion.
///
/// Checked recursions (P = (a)ₖ(b)ₖ/(k!(m+k)!) with absent factors omitted):
/// * ₀F₁: d_{n+1} = (dₙ − (m+2n+2)/((m+n+1)!(n+1)!)) / ((n+1)(n+m+1))
/// * ₁F₁: d_{k+1} = ((a+k)dₖ + (a)ₖ((k+1)(m+k+1) − (a+k)(m+2k+2))/((m+k+1)!(k+1)!)) / ((k+1)(k+m+1))
/// * ₂F₁: d_{k+1} = ((a+k)(b+k)dₖ + P((1+β+m+2k) − (a+k)(b+k)(2k+m+2)/((m+k+1)(k+1)))) / ((k+1)(k+m+1))
pub fn tail_recursion_residual(spec: &DSpec, count: usize) -> Result<f64> {
    let exp = d_expand(spec)?;
    let d = exp.tail_coeffs(count + 1);
    let m = spec.m.unsigned_abs() as f64;
    let (a, b) = spec.ab();
    let mut worst = 0.0f64;
    let mut p = C64::new(1.0 / factorial(m as u32), 0.0);
    let mut poch_a = C64::new(1.0, 0.0);
    for k in 0..count {
        let kf = k as f64;
        let denom = (kf + 1.0) * (kf + m + 1.0);
        let fact_next = factorial((m + kf + 1.0) as u32) * factorial(k as u32 + 1);
        let rhs = match spec.kind {
            EquationKind::F0 => (d[k] - (m + 2.0 * kf + 2.0) / fact_next) / denom,
            EquationKind::F1 => {
                let a = a.unwrap();
                let inner = (kf + 1.0) * (m + kf + 1.0) - (a + kf) * (m + 2.0 * kf + 2.0);
                ((a + kf) * d[k] + poch_a * inner / fact_next) / denom
            }
            EquationKind::F2 => {
                let (a, b) = (a.unwrap(), b.unwrap());
                let ab = (a + kf) * (b + kf);
                let inner = (1.0 + spec.beta + m + 2.0 * kf) - ab * (2.0 * kf + m + 2.0) / ((m + kf + 1.0) * (kf + 1.0));
                (ab * d[k] + p * inner) / denom
            }
        };
        let scale = d[k + 1].norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
        worst = worst.max((d[k + 1] - rhs).norm() / scale);
        if let Some(a) = a {
            poch_a *= a + kf;
        }
        let mut r = C64::new(1.0 / ((kf + 1.0) * (m + kf + 1.0)), 0.0);
        if let Some(a) = a {
            r *= a + kf;
        }
        if let Some(b) = b {
            r *= b + kf;
        }
        p *= r;
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn f0_m0_constant_term() {
        let r = d_eval(&DSpec::f0(0), c(0.0)).unwrap();
        assert!((r.value - 2.0 * EULER_GAMMA).norm() < 1e-15);
        let e = d_expand(&DSpec::f0(0)).unwrap();
        assert!(e.principal.is_empty());
    }

    #[test]
    fn f0_m1_principal_part() {
        let e = d_expand(&DSpec::f0(1)).unwrap();
        assert_eq!(e.principal, vec![c(1.0)]);
        assert!(matches!(d_eval(&DSpec::f0(1), c(0.0)), Err(HyperError::PoleAtOrigin)));
    }

    #[test]
    fn negative_m_is_power_shift() {
        let z = c(0.3);
        let lhs = d_eval(&DSpec::f0(-2), z).unwrap().value;
        let rhs = 0.09 * d_eval(&DSpec::f0(2), z).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn singular_parameters_rejected() {
        // a = (1 + m + theta)/2 = 1 with m = 1
        assert!(matches!(d_expand(&DSpec::f1(0.0, 1)), Err(HyperError::ParameterSingular(_))));
        // b = (1 + m + beta + mu)/2 = 1
        assert!(matches!(d_expand(&DSpec::f2(0, 0.5, 0.5)), Err(HyperError::ParameterSingular(_))));
        // a = 1 with m = 0 is fine
        assert!(d_expand(&DSpec::f1(1.0, 0)).is_ok());
    }

    #[test]
    fn recursions_hold() {
        for spec in [DSpec::f0(0), DSpec::f0(3), DSpec::f1(0.4, 0), DSpec::f1(0.4, 3), DSpec::f2(0, 0.3, 0.2), DSpec::f2(3, 0.3, 0.2)] {
            let r = tail_recursion_residual(&spec, 30).unwrap();
            assert!(r < 1e-12, "{spec:?}: {r}");
        }
    }
}
