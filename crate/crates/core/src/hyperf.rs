//! Normalized hypergeometric functions 𝔽 for the ₀F₁, ₁F₁ and ₂F₁ equations,
//! the power-behaved second solutions, and the divergent ₂F₀ series.

use crate::error::{HyperError, Result};
use crate::gammakit::{factorial, gamma_value, pochhammer, recip_gamma};
use crate::params::EquationParams;
use crate::series::{sum_series, EvalResult, Flags, Jet, JetResult, SeriesOpts};
use crate::C64;

/// Largest |z| at which the ₂F₁ series is summed directly.
pub const F2_RADIUS: f64 = 0.95;

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Heuristic lower bound on the number of terms before the series can be judged converged.
fn min_terms(p: &EquationParams, z: C64) -> usize {
    let cl = p.to_classical();
    let ab = cl.a.map_or(0.0, |a| a.norm()) + cl.b.map_or(0.0, |b| b.norm());
    let zn = z.norm();
    let growth = match p {
        EquationParams::F0 { .. } => 2.0 * zn.sqrt(),
        EquationParams::F1 { .. } => 2.0 * zn,
        EquationParams::F2 { .. } => 0.0,
    };
    (growth + ab + cl.c.norm() + 4.0).ceil() as usize
}

/// 𝔽 with first and second z-derivatives.
pub fn f_norm_jet(p: &EquationParams, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    let p = p.snapped();
    if let EquationParams::F2 { .. } = p {
        if z.norm() > F2_RADIUS {
            return Err(HyperError::Domain(format!("|z| = {} exceeds {F2_RADIUS} for the 2F1 series", z.norm())));
        }
    }
    let cl = p.to_classical();
    let a = cl.a;
    let b = cl.b;
    let c = cl.c;

    let (start, c0) = match p.degenerate_m() {
        Some(m) if m < 0 => {
            let n0 = (-m) as usize;
            let mut c0 = C64::new(1.0 / factorial(n0 as u32), 0.0);
            if let Some(a) = a {
                c0 *= pochhammer(a, n0 as i64)?;
            }
            if let Some(b) = b {
                c0 *= pochhammer(b, n0 as i64)?;
            }
            (n0, c0)
        }
        Some(m) => (0, C64::new(1.0 / factorial(m as u32), 0.0)),
        None => (0, recip_gamma(c)),
    };

    let mut cur = c0;
    let coeff = |n: usize| {
        if n > start {
            let k = (n - 1) as f64;
            let mut r = one() / ((k + 1.0) * (c + k));
            if let Some(a) = a {
                r *= a + k;
            }
            if let Some(b) = b {
                r *= b + k;
            }
            cur *= r;
        }
        cur
    };
    let opts = opts.with_min_terms(opts.min_terms.max(min_terms(&p, z)));
    sum_series(coeff, start, z, true, &opts)
}

/// 𝔽 for the given equation: Σ (a)ₙ(b)ₙ/(Γ(c+n) n!) zⁿ with the factors absent where the equation has none.
pub fn f_norm(p: &EquationParams, z: C64) -> Result<EvalResult> {
    f_norm_jet(p, z, &SeriesOpts::default()).map(JetResult::to_eval)
}

/// Second solution z^{−α}𝔽 with reflected parameters, with derivatives.
pub fn f_second_jet(p: &EquationParams, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    let p = p.snapped();
    let pw = Jet::pow(z, -p.alpha())?;
    Ok(f_norm_jet(&p.reflected(), z, opts)?.times(pw))
}

/// z^{−α}𝔽_{−α}, z^{−α}𝔽_{θ,−α} or z^{−α}𝔽_{−α,β,−μ}.
pub fn f_second(p: &EquationParams, z: C64) -> Result<EvalResult> {
    f_second_jet(p, z, &SeriesOpts::default()).map(JetResult::to_eval)
}

/// Γ((1+α+β−μ)/2)·Γ((1+α−β+μ)/2), the ₂F₁ prefactor of the symmetric normalization.
pub fn f2_i_prefactor(alpha: C64, beta: C64, mu: C64) -> Result<C64> {
    let g1 = gamma_value((1.0 + alpha + beta - mu) / 2.0);
    let g2 = gamma_value((1.0 + alpha - beta + mu) / 2.0);
    if g1.is_pole || g2.is_pole {
        return Err(HyperError::ParameterSingular(format!(
            "prefactor Gamma at a pole for alpha={alpha}, beta={beta}, mu={mu}"
        )));
    }
    Ok(g1.value * g2.value)
}

pub fn f2_norm_i_jet(alpha: C64, beta: C64, mu: C64, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    let pre = f2_i_prefactor(alpha, beta, mu)?;
    Ok(f_norm_jet(&EquationParams::F2 { alpha, beta, mu }, z, opts)?.scale(pre))
}

/// 𝔽^I_{α,β,μ}(z).
pub fn f2_norm_i(alpha: C64, beta: C64, mu: C64, z: C64) -> Result<EvalResult> {
    f2_norm_i_jet(alpha, beta, mu, z, &SeriesOpts::default()).map(JetResult::to_eval)
}

/// Σ (a)ₙ(b)ₙ zⁿ/n! summed up to (not including) its smallest term.
pub fn f2f0_asymptotic(a: C64, b: C64, z: C64, max_terms: usize) -> Result<EvalResult> {
    let mut flags = Flags::empty();
    if z.norm() > 0.0 && z.arg().abs() < std::f64::consts::FRAC_PI_2 {
        flags |= Flags::SECTOR_VIOLATION;
    }
    let mut sum = C64::new(0.0, 0.0);
    let mut term = one();
    let mut n = 0usize;
    loop {
        if term == C64::new(0.0, 0.0) {
            return Ok(EvalResult { value: sum, err_estimate: 0.0, terms_used: n.max(1), flags });
        }
        let k = n as f64;
        let next = term * (a + k) * (b + k) * z / (k + 1.0);
        if next.norm() >= term.norm() && next != C64::new(0.0, 0.0) {
            // `term` is the smallest one
            if n == 0 && z.norm() >= 1.0 {
                return Err(HyperError::DivergedImmediately);
            }
            if n == 0 {
                // keep the leading term; the error is of its size
                return Ok(EvalResult { value: term, err_estimate: term.norm(), terms_used: 1, flags });
            }
            return Ok(EvalResult { value: sum, err_estimate: term.norm(), terms_used: n, flags });
        }
        sum += term;
        n += 1;
        if term.norm() <= 1e-17 * sum.norm() {
            return Ok(EvalResult {
                value: sum,
                err_estimate: next.norm() + 2.0 * f64::EPSILON * sum.norm(),
                terms_used: n,
                flags,
            });
        }
        if n >= max_terms {
            let partial = EvalResult {
                value: sum,
                err_estimate: next.norm(),
                terms_used: n,
                flags: flags | Flags::TRUNCATION_MAXED,
            };
            return Err(HyperError::NoConvergence { partial: Box::new(partial) });
        }
        term = next;
    }
}

/// ((θ−m+1)/2)_m, the factor in z^{−m}𝔽_{θ,−m} = ((θ−m+1)/2)_m 𝔽_{θ,m}.
pub fn degenerate_factor_f1(theta: C64, m: u32) -> C64 {
    pochhammer((theta - m as f64 + 1.0) / 2.0, m as i64).expect("non-negative index")
}

/// The four equivalent coefficients k with z^{−m}𝔽_{−m,β,−μ} = k·𝔽_{m,β,μ}.
pub fn degenerate_factors_f2(m: u32, beta: C64, mu: C64) -> [C64; 4] {
    let mf = m as f64;
    let k = m as i64;
    let poch = |x: C64| pochhammer(x, k).expect("non-negative index");
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    [
        poch((1.0 - mf + beta - mu) / 2.0) * poch((1.0 - mf + beta + mu) / 2.0),
        poch((1.0 - mf - beta - mu) / 2.0) * poch((1.0 - mf - beta + mu) / 2.0),
        sign * poch((1.0 - mf + beta + mu) / 2.0) * poch((1.0 - mf - beta + mu) / 2.0),
        sign * poch((1.0 - mf + beta - mu) / 2.0) * poch((1.0 - mf - beta - mu) / 2.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn f0_values() {
        let r = f_norm(&EquationParams::f0(0.0), c(0.0)).unwrap();
        assert_eq!(r.value, c(1.0));
        let r = f_norm(&EquationParams::f0(0.0), c(1.0)).unwrap();
        assert!((r.value - 2.279_585_302_336_067_3).norm() < 1e-14);
    }

    #[test]
    fn negative_m_starts_late() {
        let z = c(0.3);
        let lhs = f_norm(&EquationParams::f0(-1.0), z).unwrap().value;
        let rhs = z * f_norm(&EquationParams::f0(1.0), z).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn f1_at_a_equal_c_is_exponential() {
        // a = c = 1 means theta = 1, alpha = 0
        let r = f_norm(&EquationParams::f1(1.0, 0.0), c(0.3)).unwrap();
        assert!((r.value - 0.3f64.exp()).norm() < 1e-15);
    }

    #[test]
    fn f2_domain() {
        let p = EquationParams::f2(0.2, 0.3, 0.4);
        assert!(matches!(f_norm(&p, c(0.96)), Err(HyperError::Domain(_))));
        assert!(f_norm(&p, c(0.95)).is_ok());
    }

    #[test]
    fn f2_i_at_origin() {
        let r = f2_norm_i(c(0.0), c(0.0), c(0.0), c(0.0)).unwrap();
        assert!((r.value - std::f64::consts::PI).norm() < 1e-14);
        assert!(f2_norm_i(c(-1.0), c(0.0), c(0.0), c(0.1)).is_err());
    }

    #[test]
    fn f2f0_terminating_and_trivial() {
        let r = f2f0_asymptotic(c(0.0), c(3.0), c(-0.2), 100).unwrap();
        assert_eq!(r.value, c(1.0));
        assert_eq!(r.err_estimate, 0.0);
        let r = f2f0_asymptotic(c(0.5), c(0.5), c(0.0), 100).unwrap();
        assert_eq!(r.value, c(1.0));
        assert!(matches!(f2f0_asymptotic(c(2.0), c(2.0), c(-3.0), 100), Err(HyperError::DivergedImmediately)));
    }

    #[test]
    fn second_solution_at_alpha_zero_is_f() {
        let p = EquationParams::f0(0.0);
        let z = C64::new(0.4, 0.2);
        assert_eq!(f_second(&p, z).unwrap().value, f_norm(&p, z).unwrap().value);
    }
}
