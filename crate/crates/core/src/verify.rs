//! Verification suites. Each suite is a list of independent tasks; each task
//! yields one [`CheckRecord`] with the worst residual over its grid.
//!
//! Tasks are `Send + Sync` so callers can run them in parallel; results are
//! keyed so the output order never depends on scheduling.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{HyperError, Result};
use crate::gammakit::{factorial, gamma, pochhammer, recip_gamma};
use crate::hyperd::{d_eval_jet, d_expand, log_jet, log_solution_jet, tail_recursion_residual, DSpec};
use crate::hyperf::{degenerate_factor_f1, degenerate_factors_f2, f_norm_jet, f_second_jet};
use crate::hyperu::{bessel, u0_jet, u1_jet, u2_jet, BesselKind, URoute};
use crate::oracle::{
    inhom_residual, k_quadrature, k_quadrature_complex, limit_alpha, ode_residual, ode_residual_fd, u0_reference,
    u1_reference, u2_reference, LimitTarget,
};
use crate::params::{EquationKind, EquationParams};
use crate::relations::{sweep_record, Catalog, RelationRecord, GRID_POINTS, SWEEP_TOL};
use crate::series::{principal_pow, JetResult, SeriesOpts};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    All,
    Relations,
    Theorems,
    Equations,
    Bessel,
    Degenerate,
    Gamma,
    Coefficients,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Relations,
        Suite::Theorems,
        Suite::Equations,
        Suite::Bessel,
        Suite::Degenerate,
        Suite::Gamma,
        Suite::Coefficients,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Relations => "relations",
            Suite::Theorems => "theorems",
            Suite::Equations => "equations",
            Suite::Bessel => "bessel",
            Suite::Degenerate => "degenerate",
            Suite::Gamma => "gamma",
            Suite::Coefficients => "coefficients",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub key: String,
    pub suite: Suite,
    /// Worst scaled residual over the check's grid (∞ if evaluation failed).
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub points: usize,
    pub detail: String,
}

/// A deferred check.
pub struct Task {
    pub key: String,
    pub suite: Suite,
    tolerance: f64,
    run: Box<dyn Fn() -> Result<(f64, usize)> + Send + Sync>,
}

impl Task {
    fn new<F>(suite: Suite, key: impl Into<String>, tolerance: f64, run: F) -> Self
    where
        F: Fn() -> Result<(f64, usize)> + Send + Sync + 'static,
    {
        Task { key: key.into(), suite, tolerance, run: Box::new(run) }
    }

    /// Replaces the pass threshold.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn run(&self) -> CheckRecord {
        let (residual, points, detail) = match (self.run)() {
            Ok((r, n)) if r.is_nan() => (f64::INFINITY, n, "residual is NaN".to_string()),
            Ok((r, n)) => (r, n, String::new()),
            Err(e) => (f64::INFINITY, 0, format!("{}: {e}", e.kind())),
        };
        CheckRecord {
            key: self.key.clone(),
            suite: self.suite,
            residual,
            tolerance: self.tolerance,
            passed: residual <= self.tolerance,
            points,
            detail,
        }
    }
}

impl fmt::Debug for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Task").field("key", &self.key).field("suite", &self.suite).finish()
    }
}

/// Summary of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub checked: usize,
    pub max_residual: f64,
    pub failures: Vec<String>,
}

pub fn summarize(records: &[CheckRecord]) -> Summary {
    Summary {
        checked: records.len(),
        max_residual: records.iter().map(|r| r.residual).fold(0.0, f64::max),
        failures: records.iter().filter(|r| !r.passed).map(|r| r.key.clone()).collect(),
    }
}

/// All tasks of a suite; `All` concatenates every suite.
pub fn tasks(suite: Suite, catalog: &Catalog) -> Vec<Task> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| tasks(s, catalog)).collect(),
        Suite::Relations => catalog.records().iter().map(relation_task).collect(),
        Suite::Theorems => theorem_tasks(),
        Suite::Equations => equation_tasks(),
        Suite::Bessel => bessel_tasks(),
        Suite::Degenerate => degenerate_tasks(),
        Suite::Gamma => gamma_tasks(),
        Suite::Coefficients => coefficient_tasks(),
    }
}

/// Runs tasks sequentially, sorted by key.
pub fn run(suite: Suite, catalog: &Catalog) -> Vec<CheckRecord> {
    let mut out: Vec<_> = tasks(suite, catalog).iter().map(Task::run).collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

/// The sweep of one catalogued relation over its fixed grid.
pub fn relation_task(rec: &RelationRecord) -> Task {
    let rec = rec.clone();
    Task::new(Suite::Relations, format!("relation.{}", rec.id), SWEEP_TOL, move || {
        let r = sweep_record(&rec, GRID_POINTS);
        if let Some(e) = r.errors.first() {
            return Err(HyperError::Inapplicable(e.clone()));
        }
        if r.points < GRID_POINTS {
            return Err(HyperError::Inapplicable(format!("only {} applicable grid points", r.points)));
        }
        Ok((r.max_scaled, r.points))
    })
}

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// |a − b| / max(1, |b|)
fn scaled(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn worst<I, F>(points: I, mut f: F) -> Result<(f64, usize)>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<f64>,
{
    let mut w = 0.0f64;
    let mut n = 0;
    for p in points {
        let r = f(p)?;
        w = if r.is_nan() { f64::NAN } else { w.max(r) };
        n += 1;
    }
    Ok((w, n))
}

// ---- degenerate theorems -------------------------------------------------

/// Off-cut points for the theorems: Re z > 0 for ₀F₁/₁F₁ (cut (−∞, 0]),
/// away from [0, ∞) and inside the unit disk for ₂F₁.
pub fn theorem_points(kind: EquationKind) -> Vec<C64> {
    let (radii, args): (&[f64], &[f64]) = match kind {
        EquationKind::F2 => (&[0.2, 0.35, 0.5, 0.65, 0.8], &[2.0, -2.6]),
        _ => (&[0.25, 0.6, 1.1, 1.8, 2.7], &[-0.8, 0.5]),
    };
    radii.iter().flat_map(|&r| args.iter().map(move |&t| C64::from_polar(r, t))).collect()
}

pub const THETA_VALUES: [f64; 3] = [0.3, 0.7, 1.9];
pub const BETA_MU_VALUES: [(f64, f64); 2] = [(0.3, 0.2), (0.45, 0.1)];

/// Right side of the degenerate theorem as printed, assembled from 𝔽 and 𝔇.
pub fn theorem_value(target: LimitTarget, m: i64, z: C64) -> Result<C64> {
    let opts = SeriesOpts::default();
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    let (spec, pre) = match target {
        LimitTarget::F0 => (DSpec::f0(m), c(sign / PI.sqrt())),
        LimitTarget::F1 { theta } => (DSpec::f1(theta, m), sign * recip_gamma((1.0 - m as f64 + theta) / 2.0)),
        LimitTarget::F2 { beta, mu } => {
            let mf = m as f64;
            let g = recip_gamma((1.0 - mf - beta - mu) / 2.0) * recip_gamma((1.0 - mf + beta - mu) / 2.0);
            (DSpec::f2(m, beta, mu), sign * g)
        }
    };
    let f = f_norm_jet(&spec.params(), z, &opts)?.value();
    let d = d_eval_jet(&spec, z, &opts)?.value();
    Ok(pre * (log_jet(spec.kind, z)?.value * f + d))
}

fn route_value(target: LimitTarget, m: i64, z: C64) -> Result<C64> {
    let opts = SeriesOpts::default();
    let a = c(m as f64);
    let r = match target {
        LimitTarget::F0 => u0_jet(a, z, URoute::LogPlusD, &opts)?,
        LimitTarget::F1 { theta } => u1_jet(theta, a, z, URoute::LogPlusD, &opts)?,
        LimitTarget::F2 { beta, mu } => u2_jet(a, beta, mu, z, URoute::LogPlusD, &opts)?,
    };
    Ok(r.value())
}

/// U from a representation that shares no code with 𝔇: quadrature or ODE continuation.
fn reference_value(target: LimitTarget, m: i64, z: C64) -> Result<C64> {
    match target {
        LimitTarget::F0 => u0_reference(m, z),
        LimitTarget::F1 { theta } => u1_reference(theta, c(m as f64), z),
        LimitTarget::F2 { beta, mu } => u2_reference(c(m as f64), beta, mu, z),
    }
}

fn theorem_targets() -> Vec<(&'static str, String, LimitTarget, EquationKind)> {
    let mut v = vec![("log-U", String::new(), LimitTarget::F0, EquationKind::F0)];
    for th in THETA_VALUES {
        v.push(("tricomi", format!(".theta={th}"), LimitTarget::F1 { theta: c(th) }, EquationKind::F1));
    }
    for (b, mu) in BETA_MU_VALUES {
        v.push(("kummer-U", format!(".beta={b},mu={mu}"), LimitTarget::F2 { beta: c(b), mu: c(mu) }, EquationKind::F2));
    }
    v
}

fn theorem_tasks() -> Vec<Task> {
    let mut out = Vec::new();
    for (name, tag, target, kind) in theorem_targets() {
        for m in 0..=4 {
            let pts = theorem_points(kind);
            let pts2 = pts.clone();
            out.push(Task::new(Suite::Theorems, format!("theorem.{name}{tag}.m={m}"), 1e-9, move || {
                worst(pts.iter().copied(), |z| {
                    let t = theorem_value(target, m, z)?;
                    let route = route_value(target, m, z)?;
                    let reference = reference_value(target, m, z)?;
                    Ok(scaled(t, reference).max(scaled(t, route)))
                })
            }));
            out.push(Task::new(Suite::Theorems, format!("limit.{name}{tag}.m={m}"), 1e-6, move || {
                worst(pts2.iter().copied(), |z| {
                    let t = theorem_value(target, m, z)?;
                    Ok(scaled(limit_alpha(m, target, z)?.value, t))
                })
            }));
        }
    }
    out
}

// ---- defining equations --------------------------------------------------

fn grid_z(kind: EquationKind) -> Vec<C64> {
    match kind {
        EquationKind::F2 => vec![C64::new(0.3, 0.2), C64::new(-0.4, 0.3), C64::new(0.0, 0.6), C64::new(-0.7, -0.35), C64::new(0.5, -0.5)],
        _ => vec![c(0.3), C64::new(1.0, 0.5), C64::new(-2.0, 1.0), C64::new(0.0, 4.0), C64::new(6.0, -3.0)],
    }
}

fn grid_params(kind: EquationKind) -> Vec<EquationParams> {
    match kind {
        EquationKind::F0 => [-2.5, -1.0, 0.0, 0.3, 1.7, 3.0].iter().map(|&a| EquationParams::f0(a)).collect(),
        EquationKind::F1 => [(0.4, 0.2), (-1.3, 1.0), (0.7, -2.0), (2.1, -0.6), (0.5, 0.0)]
            .iter()
            .map(|&(t, a)| EquationParams::f1(t, a))
            .collect(),
        EquationKind::F2 => [(0.2, 0.3, 0.4), (1.0, 0.3, 0.2), (-0.6, 0.45, 0.1), (-2.0, 0.3, 0.6), (0.0, -0.35, 0.15)]
            .iter()
            .map(|&(a, b, m)| EquationParams::f2(a, b, m))
            .collect(),
    }
}

fn grid_specs(kind: EquationKind) -> Vec<DSpec> {
    match kind {
        EquationKind::F0 => (-2..=4).map(DSpec::f0).collect(),
        EquationKind::F1 => [0.4, -1.3, 1.9].iter().flat_map(|&t| (0..=3).map(move |m| DSpec::f1(t, m))).collect(),
        EquationKind::F2 => BETA_MU_VALUES
            .iter()
            .chain(&[(-0.35, 0.15)])
            .flat_map(|&(b, mu)| (0..=3).map(move |m| DSpec::f2(m, b, mu)))
            .collect(),
    }
}

/// Large-|z| points where the automatic U route switches to the asymptotic series.
fn far_z(kind: EquationKind) -> Vec<C64> {
    match kind {
        EquationKind::F2 => vec![C64::new(-2.0, 1.0), C64::new(1.5, 2.5)],
        _ => vec![c(45.0), C64::new(30.0, 35.0)],
    }
}

fn u_jet(p: &EquationParams, z: C64) -> Result<JetResult> {
    let opts = SeriesOpts::default();
    match *p {
        EquationParams::F0 { alpha } => u0_jet(alpha, z, URoute::Auto, &opts),
        EquationParams::F1 { theta, alpha } => u1_jet(theta, alpha, z, URoute::Auto, &opts),
        EquationParams::F2 { alpha, beta, mu } => u2_jet(alpha, beta, mu, z, URoute::Auto, &opts),
    }
}

fn u_residual(p: &EquationParams, z: C64) -> Result<f64> {
    let j = u_jet(p, z)?;
    if j.jet.d1.is_nan() {
        // asymptotic route carries no derivatives
        return Ok(ode_residual_fd(p, |w| u_jet(p, w).map(|r| r.value()), z)?.relative());
    }
    Ok(ode_residual(p, j.jet, z).relative())
}

fn equation_tasks() -> Vec<Task> {
    let mut out = Vec::new();
    for kind in [EquationKind::F0, EquationKind::F1, EquationKind::F2] {
        let k = kind.name();
        out.push(Task::new(Suite::Equations, format!("ode.{k}.F"), 1e-8, move || {
            let opts = SeriesOpts::default();
            worst(grid_params(kind).into_iter().flat_map(|p| grid_z(kind).into_iter().map(move |z| (p, z))), |(p, z)| {
                Ok(ode_residual(&p, f_norm_jet(&p, z, &opts)?.jet, z).relative())
            })
        }));
        out.push(Task::new(Suite::Equations, format!("ode.{k}.F2nd"), 1e-8, move || {
            let opts = SeriesOpts::default();
            worst(grid_params(kind).into_iter().flat_map(|p| grid_z(kind).into_iter().map(move |z| (p, z))), |(p, z)| {
                Ok(ode_residual(&p, f_second_jet(&p, z, &opts)?.jet, z).relative())
            })
        }));
        out.push(Task::new(Suite::Equations, format!("ode.{k}.logsol"), 1e-8, move || {
            let opts = SeriesOpts::default();
            worst(grid_specs(kind).into_iter().flat_map(|s| grid_z(kind).into_iter().map(move |z| (s, z))), |(s, z)| {
                Ok(ode_residual(&s.params(), log_solution_jet(&s, z, &opts)?.jet, z).relative())
            })
        }));
        out.push(Task::new(Suite::Equations, format!("ode.{k}.U"), 1e-8, move || {
            let mut ps = grid_params(kind);
            ps.extend(grid_specs(kind).iter().map(DSpec::params));
            let zs: Vec<C64> = grid_z(kind).into_iter().chain(far_z(kind)).collect();
            worst(ps.into_iter().flat_map(|p| zs.clone().into_iter().map(move |z| (p, z))), |(p, z)| u_residual(&p, z))
        }));
        out.push(Task::new(Suite::Equations, format!("inhom.{k}.D"), 1e-8, move || {
            worst(grid_specs(kind).into_iter().flat_map(|s| grid_z(kind).into_iter().map(move |z| (s, z))), |(s, z)| {
                Ok(inhom_residual(&s, z)?.relative())
            })
        }));
    }
    out
}

// ---- Bessel ----------------------------------------------------------------

fn bessel_grid() -> Vec<C64> {
    vec![c(0.5), C64::new(1.0, 0.5), C64::new(2.5, -1.0), C64::new(0.3, 2.0), c(4.0)]
}

/// Σ (±1)^k (z/2)^{2k+|m|}/(k!(k+|m|)!), with the sign convention of I (+) or J (−).
pub fn bessel_series(m: i64, z: C64, sign: f64) -> C64 {
    let n = m.unsigned_abs() as u32;
    let w = sign * z * z / 4.0;
    let mut term = (z / 2.0).powi(n as i32) / factorial(n);
    let mut sum = term;
    for k in 1..200u32 {
        term *= w / (k as f64 * (k + n) as f64);
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    // J_{−n} = (−1)ⁿJ_n; I_{−n} = I_n
    if m < 0 && sign < 0.0 && n % 2 == 1 {
        -sum
    } else {
        sum
    }
}

fn bessel_tasks() -> Vec<Task> {
    let mut out = Vec::new();
    for m in [0i64, 1] {
        out.push(Task::new(Suite::Bessel, format!("bessel.K{m}(1).quadrature"), 1e-8, move || {
            let k = bessel(BesselKind::K, m, c(1.0))?.value;
            Ok(((k - c(k_quadrature(m, 1.0))).norm() / k.norm(), 1))
        }));
    }
    out.push(Task::new(Suite::Bessel, "bessel.K.grid.quadrature", 1e-8, || {
        worst((0..=3).flat_map(|m| bessel_grid().into_iter().map(move |z| (m, z))), |(m, z)| {
            let k = bessel(BesselKind::K, m, z)?.value;
            Ok(scaled(k, k_quadrature_complex(m, z)))
        })
    }));
    for (kind, name, sign) in [(BesselKind::I, "I", 1.0), (BesselKind::J, "J", -1.0)] {
        out.push(Task::new(Suite::Bessel, format!("bessel.{name}.series"), 1e-12, move || {
            worst((-2..=4).flat_map(|m| bessel_grid().into_iter().map(move |z| (m, z))), |(m, z)| {
                Ok(scaled(bessel(kind, m, z)?.value, bessel_series(m, z, sign)))
            })
        }));
    }
    out.push(Task::new(Suite::Bessel, "bessel.hankel.sum", 1e-9, || {
        worst((0..=4).flat_map(|m| bessel_grid().into_iter().map(move |z| (m, z))), |(m, z)| {
            let h1 = bessel(BesselKind::H1, m, z)?.value;
            let h2 = bessel(BesselKind::H2, m, z)?.value;
            Ok(scaled(h1 + h2, 2.0 * bessel(BesselKind::J, m, z)?.value))
        })
    }));
    out.push(Task::new(Suite::Bessel, "bessel.K.route-agreement", 1e-9, || {
        // K_m(x) = (√π/2)(x/2)^m U_m(x²/4)
        worst((0..=3).flat_map(|m| bessel_grid().into_iter().map(move |z| (m, z))), |(m, z)| {
            let k = bessel(BesselKind::K, m, z)?.value;
            let u = u0_jet(c(m as f64), z * z / 4.0, URoute::LogPlusD, &SeriesOpts::default())?.value();
            Ok(scaled(k, PI.sqrt() / 2.0 * (z / 2.0).powi(m as i32) * u))
        })
    }));
    out
}

// ---- degenerate proportionality -----------------------------------------

fn degenerate_z() -> Vec<C64> {
    vec![c(0.3), C64::new(-0.4, 0.3), C64::new(0.0, 0.6), C64::new(0.5, -0.2)]
}

fn f_val(p: EquationParams, z: C64) -> Result<C64> {
    Ok(f_norm_jet(&p, z, &SeriesOpts::default())?.value())
}

fn degenerate_tasks() -> Vec<Task> {
    let mut out = Vec::new();
    out.push(Task::new(Suite::Degenerate, "degenerate.0f1", 1e-11, || {
        worst((1..=3).flat_map(|m| degenerate_z().into_iter().map(move |z| (m, z))), |(m, z)| {
            let mf = m as f64;
            Ok(scaled(f_val(EquationParams::f0(-mf), z)?, z.powi(m) * f_val(EquationParams::f0(mf), z)?))
        })
    }));
    out.push(Task::new(Suite::Degenerate, "degenerate.1f1", 1e-11, || {
        let pts = (1..=3u32).flat_map(|m| {
            [0.3, 1.9, -0.7].into_iter().flat_map(move |t| degenerate_z().into_iter().map(move |z| (m, t, z)))
        });
        worst(pts, |(m, t, z)| {
            let mf = m as f64;
            let lhs = z.powi(-(m as i32)) * f_val(EquationParams::f1(t, -mf), z)?;
            Ok(scaled(lhs, degenerate_factor_f1(c(t), m) * f_val(EquationParams::f1(t, mf), z)?))
        })
    }));
    for form in 0..4 {
        out.push(Task::new(Suite::Degenerate, format!("degenerate.2f1.form{}", form + 1), 1e-11, move || {
            let pts = (1..=3u32).flat_map(|m| {
                [(0.3, 0.2), (0.45, 0.1), (-0.6, 1.3)]
                    .into_iter()
                    .flat_map(move |bm| degenerate_z().into_iter().map(move |z| (m, bm, z)))
            });
            worst(pts, |(m, (b, mu), z)| {
                let mf = m as f64;
                let lhs = z.powi(-(m as i32)) * f_val(EquationParams::f2(-mf, b, -mu), z)?;
                let k = degenerate_factors_f2(m, c(b), c(mu))[form];
                Ok(scaled(lhs, k * f_val(EquationParams::f2(mf, b, mu), z)?))
            })
        }));
    }
    out.push(Task::new(Suite::Degenerate, "degenerate.2f1.gamma-form", 1e-11, || {
        let pts = (1..=3i64).flat_map(|m| {
            [(0.3, 0.2), (0.45, 0.1), (-0.6, 1.3)]
                .into_iter()
                .flat_map(move |bm| degenerate_z().into_iter().map(move |z| (m, bm, z)))
        });
        worst(pts, |(m, (b, mu), z)| {
            let mf = m as f64;
            let lhs = principal_pow(-z, c(-mf))?
                * f_val(EquationParams::f2(-mf, b, -mu), z)?
                * recip_gamma(c((1.0 + mf + b - mu) / 2.0))
                * recip_gamma(c((1.0 + mf - b - mu) / 2.0));
            let rhs = f_val(EquationParams::f2(mf, b, mu), z)?
                * recip_gamma(c((1.0 - mf - b - mu) / 2.0))
                * recip_gamma(c((1.0 - mf + b - mu) / 2.0));
            Ok(scaled(lhs, rhs))
        })
    }));
    out
}

// ---- Gamma identity ------------------------------------------------------

/// (−1)^m Γ(1+2m)/(√π Γ(1+m)) and 4^m/Γ(1/2−m).
pub fn gamma_identity_sides(m: u32) -> Result<(C64, C64)> {
    let mf = m as f64;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lhs = sign * gamma(c(1.0 + 2.0 * mf))? / (PI.sqrt() * gamma(c(1.0 + mf))?);
    let rhs = 4f64.powi(m as i32) * recip_gamma(c(0.5 - mf));
    Ok((lhs, rhs))
}

fn gamma_tasks() -> Vec<Task> {
    vec![Task::new(Suite::Gamma, "gamma.duplication-identity", 1e-12, || {
        worst(0..=10u32, |m| {
            let (l, r) = gamma_identity_sides(m)?;
            Ok((l - r).norm() / r.norm())
        })
    })]
}

// ---- Laurent coefficients -----------------------------------------------

fn coefficient_specs() -> Vec<DSpec> {
    let mut v: Vec<DSpec> = (0..=4).map(DSpec::f0).collect();
    for t in [0.4, 1.3, -0.7] {
        v.extend((0..=4).map(|m| DSpec::f1(t, m)));
    }
    for (b, mu) in BETA_MU_VALUES {
        v.extend((0..=4).map(|m| DSpec::f2(m, b, mu)));
    }
    v
}

/// Worst relative mismatch of d₋₍ₖ₊₁₎/d₋ₖ = −k(m−k)/((a−k−1)(b−k−1)), with absent a, b dropped.
pub fn principal_ratio_residual(spec: &DSpec) -> Result<f64> {
    let exp = d_expand(spec)?;
    let (a, b) = spec.ab();
    let m = spec.m.unsigned_abs() as f64;
    let mut w = 0.0f64;
    if let Some(&d1) = exp.principal.first() {
        // d₋₁ = (a)₋₁(b)₋₁/(m−1)!
        let mut want = c(1.0 / factorial(m as u32 - 1));
        if let Some(a) = a {
            want *= pochhammer(a, -1)?;
        }
        if let Some(b) = b {
            want *= pochhammer(b, -1)?;
        }
        w = w.max((d1 - want).norm() / want.norm());
    }
    for (k, pair) in exp.principal.windows(2).enumerate() {
        let kf = (k + 1) as f64;
        let mut r = c(-kf * (m - kf));
        if let Some(a) = a {
            r /= a - kf - 1.0;
        }
        if let Some(b) = b {
            r /= b - kf - 1.0;
        }
        let want = pair[0] * r;
        w = w.max((pair[1] - want).norm() / want.norm());
    }
    Ok(w)
}

fn coefficient_tasks() -> Vec<Task> {
    vec![
        Task::new(Suite::Coefficients, "coefficients.tail-recursion", 1e-12, || {
            worst(coefficient_specs(), |s| tail_recursion_residual(&s, 30))
        }),
        Task::new(Suite::Coefficients, "coefficients.principal-part", 1e-12, || {
            worst(coefficient_specs(), |s| principal_ratio_residual(&s))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn bessel_series_values() {
        assert!((bessel_series(0, c(1.0), 1.0).re - 1.266_065_877_752_008_4).abs() < 1e-15);
        assert!((bessel_series(1, c(1.0), -1.0).re - 0.440_050_585_744_933_5).abs() < 1e-15);
        assert!((bessel_series(-1, c(1.0), -1.0).re + 0.440_050_585_744_933_5).abs() < 1e-15);
    }

    #[test]
    fn failing_task_reports_infinity() {
        let t = Task::new(Suite::Gamma, "x", 1.0, || Err(HyperError::PoleAtOrigin));
        let r = t.run();
        assert!(!r.passed);
        assert!(r.residual.is_infinite());
        assert!(r.detail.starts_with("PoleError") || !r.detail.is_empty());
    }
}
