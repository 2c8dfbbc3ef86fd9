//! Power-series summation with truncation control, second-order jets and
//! principal-branch elementary functions.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use bitflags::bitflags;

use crate::error::{HyperError, Result};
use crate::C64;

pub const EPS: f64 = f64::EPSILON;

bitflags! {
    /// Diagnostics attached to an evaluation.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct Flags: u8 {
        const TRUNCATION_MAXED = 1;
        const NEAR_POLE = 1 << 1;
        const ON_BRANCH_CUT = 1 << 2;
        /// 2F0 evaluated outside the sector where it is asymptotic.
        const SECTOR_VIOLATION = 1 << 3;
    }
}

impl Flags {
    /// Flag names in a fixed order.
    pub fn names(self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.contains(Flags::TRUNCATION_MAXED) {
            out.push("TruncationMaxed");
        }
        if self.contains(Flags::NEAR_POLE) {
            out.push("NearPole");
        }
        if self.contains(Flags::ON_BRANCH_CUT) {
            out.push("OnBranchCut");
        }
        if self.contains(Flags::SECTOR_VIOLATION) {
            out.push("SectorViolation");
        }
        out
    }
}

/// A value together with its first two z-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: C64,
    pub d1: C64,
    pub d2: C64,
}

impl Jet {
    pub const ZERO: Jet = Jet::constant(C64::new(0.0, 0.0));

    pub const fn new(value: C64, d1: C64, d2: C64) -> Self {
        Jet { value, d1, d2 }
    }

    pub const fn constant(value: C64) -> Self {
        Jet { value, d1: C64::new(0.0, 0.0), d2: C64::new(0.0, 0.0) }
    }

    /// The identity map z ↦ z.
    pub fn var(z: C64) -> Self {
        Jet::new(z, C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Polynomial p(z) = c0 + c1 z + c2 z².
    pub fn quadratic(z: C64, c0: C64, c1: C64, c2: C64) -> Self {
        Jet::new(c0 + c1 * z + c2 * z * z, c1 + 2.0 * c2 * z, 2.0 * c2)
    }

    /// Principal log z.
    pub fn log(z: C64) -> Result<Self> {
        let l = principal_log(z)?;
        Ok(Jet::new(l, 1.0 / z, -1.0 / (z * z)))
    }

    /// log(−z) on ℂ∖[0,∞).
    pub fn log_negated(z: C64) -> Result<Self> {
        let l = log_negated(z)?;
        Ok(Jet::new(l, 1.0 / z, -1.0 / (z * z)))
    }

    /// Principal z^a.
    pub fn pow(z: C64, a: C64) -> Result<Self> {
        let p = principal_pow(z, a)?;
        Ok(Jet::new(p, a * p / z, a * (a - 1.0) * p / (z * z)))
    }

    /// (−z)^a on ℂ∖[0,∞).
    pub fn pow_negated(z: C64, a: C64) -> Result<Self> {
        let p = principal_pow(-z, a)?;
        Ok(Jet::new(p, -a * p / (-z), a * (a - 1.0) * p / (z * z)))
    }

    /// Integer power zⁿ, defined for every z ≠ 0.
    pub fn powi(z: C64, n: i32) -> Self {
        let p = z.powi(n);
        let n_f = n as f64;
        if !(0..2).contains(&n) {
            Jet::new(p, n_f * z.powi(n - 1), n_f * (n_f - 1.0) * z.powi(n - 2))
        } else if n == 1 {
            Jet::var(z)
        } else {
            Jet::constant(C64::new(1.0, 0.0))
        }
    }

    pub fn exp_of(inner: Jet) -> Self {
        let e = inner.value.exp();
        Jet::new(e, e * inner.d1, e * (inner.d2 + inner.d1 * inner.d1))
    }

    /// Chain rule: `self` holds f(w), f′(w), f″(w) and `inner` holds w(z) and its derivatives.
    pub fn compose(self, inner: Jet) -> Self {
        Jet::new(
            self.value,
            self.d1 * inner.d1,
            self.d2 * inner.d1 * inner.d1 + self.d1 * inner.d2,
        )
    }

    pub fn scale(self, c: C64) -> Self {
        Jet::new(self.value * c, self.d1 * c, self.d2 * c)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet::new(-self.value, -self.d1, -self.d2)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + 2.0 * self.d1 * o.d1 + self.value * o.d2,
        )
    }
}

impl Mul<C64> for Jet {
    type Output = Jet;
    fn mul(self, c: C64) -> Jet {
        self.scale(c)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, c: f64) -> Jet {
        self.scale(C64::new(c, 0.0))
    }
}

/// Value, absolute error estimate, work done and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: C64,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub flags: Flags,
}

impl EvalResult {
    pub fn exact(value: C64) -> Self {
        EvalResult { value, err_estimate: 0.0, terms_used: 1, flags: Flags::empty() }
    }
}

/// Like [`EvalResult`] but carrying first and second derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JetResult {
    pub jet: Jet,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub flags: Flags,
}

impl JetResult {
    pub fn exact(jet: Jet) -> Self {
        JetResult { jet, err_estimate: 0.0, terms_used: 1, flags: Flags::empty() }
    }

    pub fn value(&self) -> C64 {
        self.jet.value
    }

    pub fn to_eval(self) -> EvalResult {
        EvalResult {
            value: self.jet.value,
            err_estimate: self.err_estimate,
            terms_used: self.terms_used.max(1),
            flags: self.flags,
        }
    }

    /// Multiply by an exactly known factor.
    pub fn times(self, f: Jet) -> Self {
        JetResult { jet: self.jet * f, err_estimate: self.err_estimate * f.value.norm(), ..self }
    }

    pub fn scale(self, c: C64) -> Self {
        self.times(Jet::constant(c))
    }

    /// Add an exactly known term.
    pub fn plus(self, f: Jet) -> Self {
        let err = self.err_estimate + EPS * f.value.norm();
        JetResult { jet: self.jet + f, err_estimate: err, ..self }
    }
}

impl Add for JetResult {
    type Output = JetResult;
    fn add(self, o: JetResult) -> JetResult {
        let jet = self.jet + o.jet;
        let cancel = EPS * (self.jet.value.norm() + o.jet.value.norm());
        JetResult {
            jet,
            err_estimate: self.err_estimate + o.err_estimate + cancel,
            terms_used: self.terms_used + o.terms_used,
            flags: self.flags | o.flags,
        }
    }
}

impl Sub for JetResult {
    type Output = JetResult;
    fn sub(self, o: JetResult) -> JetResult {
        self + o.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for JetResult {
    type Output = JetResult;
    fn mul(self, o: JetResult) -> JetResult {
        let a = self.jet.value.norm();
        let b = o.jet.value.norm();
        JetResult {
            jet: self.jet * o.jet,
            err_estimate: a * o.err_estimate + b * self.err_estimate + self.err_estimate * o.err_estimate,
            terms_used: self.terms_used + o.terms_used,
            flags: self.flags | o.flags,
        }
    }
}

/// Truncation controls for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOpts {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Never stop before this many terms; protects series whose terms grow before decaying.
    pub min_terms: usize,
}

impl Default for SeriesOpts {
    fn default() -> Self {
        SeriesOpts { rel_tol: 1e-14, max_terms: default_max_terms(), min_terms: 0 }
    }
}

impl SeriesOpts {
    pub fn with_min_terms(mut self, n: usize) -> Self {
        self.min_terms = n;
        self
    }
}

/// Default term cap: 10 000, or `HYPERD_MAX_TERMS` when set.
pub fn default_max_terms() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HYPERD_MAX_TERMS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n: &usize| n >= 1)
            .unwrap_or(10_000)
    })
}

const SMALL_RUN: usize = 3;

/// Sums Σ_{n ≥ start} c_n zⁿ and, when `derivs` is set, the first two term-wise derivatives.
///
/// `coeff(n)` is called with n = start, start+1, … in order. The sum stops once
/// three consecutive terms are below `rel_tol` times the running sum (for every
/// requested order). The error estimate is the first omitted term, inflated by a
/// geometric tail factor, plus accumulated rounding.
pub fn sum_series<F>(mut coeff: F, start: usize, z: C64, derivs: bool, opts: &SeriesOpts) -> Result<JetResult>
where
    F: FnMut(usize) -> C64,
{
    if !(opts.rel_tol > 0.0) || opts.max_terms == 0 {
        return Err(HyperError::InvalidArgument("rel_tol must be > 0 and max_terms >= 1".into()));
    }
    let zero = C64::new(0.0, 0.0);
    let mut s = [zero; 3];
    let mut abs_sum = [0.0f64; 3];
    let orders = if derivs { 3 } else { 1 };

    // z^{n}, z^{n-1}, z^{n-2} for the current n
    let mut p0 = z.powu(start as u32);
    let mut p1 = if start >= 1 { z.powu(start as u32 - 1) } else { zero };
    let mut p2 = if start >= 2 { z.powu(start as u32 - 2) } else { zero };

    let mut run = 0usize;
    let mut last = [0.0f64; 3];
    let mut n = start;
    let mut used = 0usize;
    loop {
        let c = coeff(n);
        let nf = n as f64;
        let t = if c == zero {
            [zero; 3]
        } else {
            [c * p0, c * nf * p1, c * nf * (nf - 1.0) * p2]
        };
        for o in 0..orders {
            s[o] += t[o];
            abs_sum[o] += t[o].norm();
        }
        used += 1;

        let small = (0..orders).all(|o| t[o].norm() <= opts.rel_tol * s[o].norm());
        run = if small { run + 1 } else { 0 };
        for o in 0..orders {
            last[o] = t[o].norm();
        }

        p2 = p1;
        p1 = p0;
        p0 *= z;
        n += 1;

        if run >= SMALL_RUN && used >= opts.min_terms {
            break;
        }
        if used >= opts.max_terms {
            let err = (0..orders).map(|o| last[o]).fold(0.0, f64::max);
            let partial = EvalResult {
                value: s[0],
                err_estimate: err,
                terms_used: used,
                flags: Flags::TRUNCATION_MAXED,
            };
            return Err(HyperError::NoConvergence { partial: Box::new(partial) });
        }
    }

    // first omitted term
    let c = coeff(n);
    let nf = n as f64;
    let next = if c == zero {
        [0.0; 3]
    } else {
        [(c * p0).norm(), (c * nf * p1).norm(), (c * nf * (nf - 1.0) * p2).norm()]
    };
    let mut err = 0.0f64;
    for o in 0..orders {
        let ratio = if last[o] > 0.0 { next[o] / last[o] } else { 0.0 };
        let tail = if ratio < 0.99 { 1.0 / (1.0 - ratio) } else { 100.0 };
        let e = next[o] * tail + 2.0 * EPS * abs_sum[o];
        err = err.max(e);
    }
    let jet = if derivs { Jet::new(s[0], s[1], s[2]) } else { Jet::constant(s[0]) };
    Ok(JetResult { jet, err_estimate: err, terms_used: used, flags: Flags::empty() })
}

/// Value-only convenience wrapper over [`sum_series`].
pub fn sum_power_series<F>(coeff: F, z: C64, rel_tol: f64, max_terms: usize) -> Result<EvalResult>
where
    F: FnMut(usize) -> C64,
{
    let opts = SeriesOpts { rel_tol, max_terms, min_terms: 0 };
    sum_series(coeff, 0, z, false, &opts).map(JetResult::to_eval)
}

fn on_negative_cut(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

/// Principal log on ℂ∖(−∞,0].
pub fn principal_log(z: C64) -> Result<C64> {
    if on_negative_cut(z) {
        return Err(HyperError::BranchCut { z });
    }
    Ok(z.ln())
}

/// log(−z) on ℂ∖[0,∞): equals log z − iπ for Im z > 0 and log z + iπ for Im z < 0.
pub fn log_negated(z: C64) -> Result<C64> {
    if z.im == 0.0 && z.re >= 0.0 {
        return Err(HyperError::BranchCut { z });
    }
    Ok((-z).ln())
}

/// Principal z^a. Integer exponents are evaluated without a cut.
pub fn principal_pow(z: C64, a: C64) -> Result<C64> {
    if a.im == 0.0 && a.re == a.re.trunc() && a.re.abs() < 1e9 {
        if a.re == 0.0 {
            return Ok(C64::new(1.0, 0.0));
        }
        if z == C64::new(0.0, 0.0) {
            return if a.re > 0.0 {
                Ok(z)
            } else {
                Err(HyperError::Pole { at: z })
            };
        }
        return Ok(z.powi(a.re as i32));
    }
    if on_negative_cut(z) {
        return Err(HyperError::BranchCut { z });
    }
    Ok((a * z.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    #[test]
    fn exponential_series() {
        let mut fact = 1.0;
        let r = sum_power_series(
            |n| {
                if n > 0 {
                    fact *= n as f64;
                }
                C64::new(1.0 / fact, 0.0)
            },
            C64::new(1.0, 0.0),
            1e-14,
            10_000,
        )
        .unwrap();
        assert!((r.value.re - E).abs() < 1e-12);
        assert!(r.err_estimate < 1e-12);
        assert!(r.flags.is_empty());
    }

    #[test]
    fn zero_series() {
        let r = sum_power_series(|_| C64::new(0.0, 0.0), C64::new(0.7, 0.1), 1e-14, 100).unwrap();
        assert_eq!(r.value, C64::new(0.0, 0.0));
        assert!(r.terms_used <= 3);
        assert!(r.flags.is_empty());
    }

    #[test]
    fn divergent_series_reports_partial() {
        let err = sum_power_series(|_| C64::new(1.0, 0.0), C64::new(2.0, 0.0), 1e-14, 50).unwrap_err();
        match err {
            HyperError::NoConvergence { partial } => {
                assert!(partial.flags.contains(Flags::TRUNCATION_MAXED));
                assert_eq!(partial.terms_used, 50);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn derivative_terms() {
        // 1/(1-z) and its derivatives
        let z = C64::new(0.3, 0.2);
        let r = sum_series(|_| C64::new(1.0, 0.0), 0, z, true, &SeriesOpts::default()).unwrap();
        let w = 1.0 / (1.0 - z);
        assert!((r.jet.value - w).norm() < 1e-13);
        assert!((r.jet.d1 - w * w).norm() < 1e-13);
        assert!((r.jet.d2 - 2.0 * w * w * w).norm() < 1e-12);
    }

    #[test]
    fn logs_and_powers() {
        let i = C64::new(0.0, 1.0);
        assert_eq!(principal_log(C64::new(1.0, 0.0)).unwrap(), C64::new(0.0, 0.0));
        assert!((principal_log(i).unwrap() - i * PI / 2.0).norm() < 1e-15);
        assert!((log_negated(i).unwrap() - principal_log(i).unwrap() + i * PI).norm() < 1e-15);
        assert!((log_negated(-i).unwrap() - principal_log(-i).unwrap() - i * PI).norm() < 1e-15);
        assert!((log_negated(C64::new(-2.0, 0.0)).unwrap() - 2f64.ln()).norm() < 1e-15);
        assert!(principal_log(C64::new(-1.0, 0.0)).is_err());
        assert!(log_negated(C64::new(0.5, 0.0)).is_err());

        let a = C64::new(1.0 / 3.0, 0.0);
        let lhs = principal_pow(-i, a).unwrap();
        let rhs = (-i * PI * a).exp() * principal_pow(i, a).unwrap();
        assert!((lhs - rhs).norm() < 1e-15);
        assert_eq!(principal_pow(C64::new(-2.0, 0.0), C64::new(-3.0, 0.0)).unwrap(), C64::new(-0.125, 0.0));
        assert!(principal_pow(C64::new(-2.0, 0.0), a).is_err());
        assert_eq!(principal_pow(C64::new(1.0, 0.0), C64::new(0.3, 2.0)).unwrap(), C64::new(1.0, 0.0));
    }

    #[test]
    fn jet_product_rule() {
        let z = C64::new(0.4, -0.3);
        let f = Jet::var(z) * Jet::var(z) * Jet::var(z);
        assert!((f.d1 - 3.0 * z * z).norm() < 1e-15);
        assert!((f.d2 - 6.0 * z).norm() < 1e-15);
        let l = Jet::log(z).unwrap() * Jet::powi(z, 2);
        assert!((l.d2 - (2.0 * z.ln() + 3.0)).norm() < 1e-14);
    }
}
