//! Solutions normalized at infinity and the Bessel family.
//!
//! Generic α goes through the connection formulas; integer α through
//! log·𝔽 + 𝔇 with the appropriate Gamma prefactor. Large |z| can use the
//! divergent ₂F₀ expansions, and 𝕌 also has a direct series in 1/z.

use std::f64::consts::PI;

use crate::error::{HyperError, Result};
use crate::gammakit::{gamma_value, near_integer, recip_gamma, sin_pi};
use crate::hyperd::{log_solution_jet, DSpec};
use crate::hyperf::{f2f0_asymptotic, f_norm_jet, F2_RADIUS};
use crate::params::{EquationParams, DEGENERACY_TOL};
use crate::series::{principal_pow, EvalResult, Jet, JetResult, SeriesOpts};
use crate::C64;

/// Minimum distance of α from the integers for the connection formulas.
pub const CONNECTION_GAP: f64 = 1e-6;

/// |z| beyond which the automatic route for U and Tricomi's function is the asymptotic series.
pub const ASYMPTOTIC_SWITCH: f64 = 40.0;

/// How to evaluate a solution normalized at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum URoute {
    /// Pick a route from α and |z|.
    Auto,
    /// Γ- and sin πα-weighted combination of the two power solutions.
    Connection,
    /// Integer α: Gamma prefactor times log·𝔽 + 𝔇.
    LogPlusD,
    /// Optimally truncated ₂F₀ expansion at infinity.
    Asymptotic2F0,
    /// ₂F₁ only: (1−z)^{−β}𝕌_{α,−β,μ}(z).
    KummerReflected,
    /// ₂F₁ only: the defining series in 1/z.
    InverseSeries,
}

impl URoute {
    pub fn name(self) -> &'static str {
        match self {
            URoute::Auto => "auto",
            URoute::Connection => "connection",
            URoute::LogPlusD => "logplusd",
            URoute::Asymptotic2F0 => "asymptotic",
            URoute::KummerReflected => "kummer",
            URoute::InverseSeries => "inverse",
        }
    }
}

impl std::str::FromStr for URoute {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "auto" => URoute::Auto,
            "connection" => URoute::Connection,
            "logplusd" | "log" => URoute::LogPlusD,
            "asymptotic" | "2f0" => URoute::Asymptotic2F0,
            "kummer" => URoute::KummerReflected,
            "inverse" => URoute::InverseSeries,
            _ => return Err(format!("unknown route `{s}`")),
        })
    }
}

fn integer_alpha(alpha: C64) -> Option<i64> {
    near_integer(alpha, DEGENERACY_TOL)
}

fn require_generic(alpha: C64) -> Result<()> {
    let n = alpha.re.round();
    if (alpha - C64::new(n, 0.0)).norm() <= CONNECTION_GAP {
        return Err(HyperError::RouteInapplicable(format!(
            "connection formula needs alpha at distance > {CONNECTION_GAP} from an integer, got {alpha}"
        )));
    }
    Ok(())
}

fn require_integer(alpha: C64) -> Result<i64> {
    integer_alpha(alpha).ok_or_else(|| HyperError::RouteInapplicable(format!("log-plus-D route needs integer alpha, got {alpha}")))
}

fn not_for(eq: &str, route: URoute) -> HyperError {
    HyperError::RouteInapplicable(format!("route {} is not available for {eq}", route.name()))
}

fn sign(m: i64) -> f64 {
    if m.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Connection-formula combination for ₀F₁ at generic α, valid even a short distance from an integer.
pub(crate) fn u0_connection_jet(alpha: C64, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    let f_plus = f_norm_jet(&EquationParams::F0 { alpha }, z, opts)?;
    let f_minus = f_norm_jet(&EquationParams::F0 { alpha: -alpha }, z, opts)?.times(Jet::pow(z, -alpha)?);
    Ok((f_minus - f_plus).scale(PI.sqrt() / sin_pi(alpha)))
}

/// U_α of the ₀F₁ equation, with derivatives where the route provides them.
pub fn u0_jet(alpha: C64, z: C64, route: URoute, opts: &SeriesOpts) -> Result<JetResult> {
    match route {
        URoute::Auto => {
            if z.norm() > ASYMPTOTIC_SWITCH {
                return u0_jet(alpha, z, URoute::Asymptotic2F0, opts);
            }
            let r = if integer_alpha(alpha).is_some() { URoute::LogPlusD } else { URoute::Connection };
            u0_jet(alpha, z, r, opts)
        }
        URoute::Connection => {
            require_generic(alpha)?;
            u0_connection_jet(alpha, z, opts)
        }
        URoute::LogPlusD => {
            let m = require_integer(alpha)?;
            let ls = log_solution_jet(&DSpec::f0(m), z, opts)?;
            Ok(ls.scale(C64::new(-sign(m) / PI.sqrt(), 0.0)))
        }
        URoute::Asymptotic2F0 => {
            let sq = principal_pow(z, C64::new(0.5, 0.0))?;
            let s = f2f0_asymptotic(alpha + 0.5, 0.5 - alpha, -0.25 / sq, opts.max_terms)?;
            let pre = (-2.0 * sq).exp() * principal_pow(z, -alpha / 2.0 - 0.25)?;
            Ok(value_only(s, pre))
        }
        URoute::KummerReflected | URoute::InverseSeries => Err(not_for("0F1", route)),
    }
}

fn value_only(s: EvalResult, pre: C64) -> JetResult {
    let nan = C64::new(f64::NAN, f64::NAN);
    JetResult {
        jet: Jet::new(s.value * pre, nan, nan),
        err_estimate: s.err_estimate * pre.norm(),
        terms_used: s.terms_used,
        flags: s.flags,
    }
}

/// U_α(z), the ₀F₁ solution decaying like e^{−2√z} at infinity.
pub fn u0(alpha: C64, z: C64, route: URoute) -> Result<EvalResult> {
    u0_jet(alpha, z, route, &SeriesOpts::default()).map(JetResult::to_eval)
}

pub(crate) fn u1_connection_jet(theta: C64, alpha: C64, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    let f_plus = f_norm_jet(&EquationParams::F1 { theta, alpha }, z, opts)?
        .scale(recip_gamma((1.0 + theta - alpha) / 2.0));
    let f_minus = f_norm_jet(&EquationParams::F1 { theta, alpha: -alpha }, z, opts)?
        .times(Jet::pow(z, -alpha)?)
        .scale(recip_gamma((1.0 + theta + alpha) / 2.0));
    Ok((f_minus - f_plus).scale(PI / sin_pi(alpha)))
}

/// Tricomi's function U_{θ,α}, with derivatives where the route provides them.
pub fn u1_jet(theta: C64, alpha: C64, z: C64, route: URoute, opts: &SeriesOpts) -> Result<JetResult> {
    match route {
        URoute::Auto => {
            if z.norm() > ASYMPTOTIC_SWITCH {
                return u1_jet(theta, alpha, z, URoute::Asymptotic2F0, opts);
            }
            let r = if integer_alpha(alpha).is_some() { URoute::LogPlusD } else { URoute::Connection };
            u1_jet(theta, alpha, z, r, opts)
        }
        URoute::Connection => {
            require_generic(alpha)?;
            u1_connection_jet(theta, alpha, z, opts)
        }
        URoute::LogPlusD => {
            let m = require_integer(alpha)?;
            if m < 0 {
                let base = u1_jet(theta, C64::new(-m as f64, 0.0), z, route, opts)?;
                return Ok(base.times(Jet::powi(z, (-m) as i32)));
            }
            let g = gamma_value((1.0 - m as f64 + theta) / 2.0);
            if g.is_pole {
                return Err(HyperError::ParameterSingular(format!(
                    "Gamma((1-m+theta)/2) has a pole at m={m}, theta={theta}"
                )));
            }
            let ls = log_solution_jet(&DSpec::f1(theta, m), z, opts)?;
            Ok(ls.scale(-sign(m) * g.recip))
        }
        URoute::Asymptotic2F0 => {
            let a = (1.0 + alpha + theta) / 2.0;
            let s = f2f0_asymptotic(a, a - alpha, -1.0 / z, opts.max_terms)?;
            let pre = principal_pow(z, -a)?;
            Ok(value_only(s, pre))
        }
        URoute::KummerReflected | URoute::InverseSeries => Err(not_for("1F1", route)),
    }
}

/// U_{θ,α}(z), Tricomi's function with a = (1+α+θ)/2, c = 1+α.
pub fn u1(theta: C64, alpha: C64, z: C64, route: URoute) -> Result<EvalResult> {
    u1_jet(theta, alpha, z, route, &SeriesOpts::default()).map(JetResult::to_eval)
}

fn require_f2_domain(z: C64) -> Result<()> {
    if z.norm() > F2_RADIUS {
        return Err(HyperError::Domain(format!("|z| = {} exceeds {F2_RADIUS}", z.norm())));
    }
    Ok(())
}

pub(crate) fn u2_connection_jet(alpha: C64, beta: C64, mu: C64, z: C64, opts: &SeriesOpts) -> Result<JetResult> {
    require_f2_domain(z)?;
    let f_plus = f_norm_jet(&EquationParams::F2 { alpha, beta, mu }, z, opts)?.scale(
        recip_gamma((1.0 - alpha - beta - mu) / 2.0) * recip_gamma((1.0 - alpha + beta - mu) / 2.0),
    );
    let f_minus = f_norm_jet(&EquationParams::F2 { alpha: -alpha, beta, mu: -mu }, z, opts)?
        .times(Jet::pow_negated(z, -alpha)?)
        .scale(recip_gamma((1.0 + alpha + beta - mu) / 2.0) * recip_gamma((1.0 + alpha - beta - mu) / 2.0));
    Ok((f_plus - f_minus).scale(-PI / sin_pi(alpha)))
}

/// 𝕌_{α,β,μ}, with derivatives.
pub fn u2_jet(alpha: C64, beta: C64, mu: C64, z: C64, route: URoute, opts: &SeriesOpts) -> Result<JetResult> {
    match route {
        URoute::Auto => {
            let r = if z.norm() <= F2_RADIUS {
                if integer_alpha(alpha).is_some() {
                    URoute::LogPlusD
                } else {
                    URoute::Connection
                }
            } else if 1.0 / z.norm() <= F2_RADIUS {
                URoute::InverseSeries
            } else {
                return Err(HyperError::Domain(format!(
                    "neither |z| nor |1/z| is within {F2_RADIUS} (z = {z})"
                )));
            };
            u2_jet(alpha, beta, mu, z, r, opts)
        }
        URoute::Connection => {
            require_generic(alpha)?;
            u2_connection_jet(alpha, beta, mu, z, opts)
        }
        URoute::LogPlusD => {
            let m = require_integer(alpha)?;
            if m < 0 {
                let base = u2_jet(C64::new(-m as f64, 0.0), beta, mu, z, route, opts)?;
                // (−z)ⁿ = (−1)ⁿ zⁿ
                return Ok(base.times(Jet::powi(z, (-m) as i32) * sign(m)));
            }
            let mf = m as f64;
            let g1 = gamma_value((1.0 - mf - beta - mu) / 2.0);
            let g2 = gamma_value((1.0 - mf + beta - mu) / 2.0);
            if g1.is_pole || g2.is_pole {
                return Err(HyperError::ParameterSingular(format!(
                    "theorem prefactor Gamma has a pole at m={m}, beta={beta}, mu={mu}"
                )));
            }
            let ls = log_solution_jet(&DSpec::f2(m, beta, mu), z, opts)?;
            Ok(ls.scale(-sign(m) * g1.recip * g2.recip))
        }
        URoute::InverseSeries => {
            let w = 1.0 / z;
            if w.norm() > F2_RADIUS {
                return Err(HyperError::Domain(format!("|1/z| = {} exceeds {F2_RADIUS}", w.norm())));
            }
            let inner = f_norm_jet(&EquationParams::F2 { alpha: -mu, beta, mu: -alpha }, w, opts)?;
            let w_jet = Jet::new(w, -w * w, 2.0 * w * w * w);
            let inner = JetResult { jet: inner.jet.compose(w_jet), ..inner };
            Ok(inner.times(Jet::pow_negated(z, (-1.0 - alpha - beta + mu) / 2.0)?))
        }
        URoute::KummerReflected => {
            let base = u2_jet(alpha, -beta, mu, z, URoute::Auto, opts)?;
            let w = 1.0 - z;
            let p = principal_pow(w, -beta)?;
            let pre = Jet::new(p, beta * p / w, beta * (beta + 1.0) * p / (w * w));
            Ok(base.times(pre))
        }
        URoute::Asymptotic2F0 => Err(not_for("2F1", route)),
    }
}

/// 𝕌_{α,β,μ}(z), the ₂F₁ solution behaving as (−z)^{(−1−α−β+μ)/2} at infinity.
pub fn u2(alpha: C64, beta: C64, mu: C64, z: C64, route: URoute) -> Result<EvalResult> {
    u2_jet(alpha, beta, mu, z, route, &SeriesOpts::default()).map(JetResult::to_eval)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BesselKind {
    I,
    J,
    K,
    H1,
    H2,
}

impl std::str::FromStr for BesselKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "I" => BesselKind::I,
            "J" => BesselKind::J,
            "K" => BesselKind::K,
            "H1" => BesselKind::H1,
            "H2" => BesselKind::H2,
            _ => return Err(format!("unknown Bessel kind `{s}`")),
        })
    }
}

/// Integer-order Bessel functions built from 𝔽_m and 𝔇_m at ±z²/4.
///
/// K and the Hankel functions use log(z²/4), so z must keep z²/4 off (−∞, 0].
pub fn bessel(kind: BesselKind, m: i64, z: C64) -> Result<EvalResult> {
    let opts = SeriesOpts::default();
    let w = z * z / 4.0;
    let half = Jet::powi(z / 2.0, m as i32).value;
    let p = EquationParams::F0 { alpha: C64::new(m as f64, 0.0) };
    let i = C64::new(0.0, 1.0);
    let res = match kind {
        BesselKind::I => f_norm_jet(&p, w, &opts)?.scale(half),
        BesselKind::J => f_norm_jet(&p, -w, &opts)?.scale(half),
        BesselKind::K => {
            let ls = log_solution_jet(&DSpec::f0(m), w, &opts)?;
            ls.scale(half * (-sign(m) / 2.0))
        }
        BesselKind::H1 | BesselKind::H2 => {
            let lw = crate::series::principal_log(w)?;
            let (shift, pre) = if kind == BesselKind::H1 { (-i * PI, i / PI) } else { (i * PI, -i / PI) };
            let spec = DSpec::f0(m);
            let f = f_norm_jet(&p, -w, &opts)?;
            let d = crate::hyperd::d_eval_jet(&spec, -w, &opts)?;
            (f.scale(lw + shift) + d).scale(pre * half)
        }
    };
    Ok(res.to_eval())
}
