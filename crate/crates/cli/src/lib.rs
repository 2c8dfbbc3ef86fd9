//! Command-line front end: `eval`, `table`, `verify` and `catalog`.
//!
//! [`run`] does all the work and returns the text for both streams plus the
//! exit code, so the binary is a thin wrapper and tests can call it directly.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use hyperd::gammakit::near_integer;
use hyperd::hyperf::f2_i_prefactor;
use hyperd::params::{Classical, DEGENERACY_TOL};
use hyperd::relations::Catalog;
use hyperd::series::default_max_terms;
use hyperd::verify::{self, CheckRecord, Suite};
use hyperd::{
    bessel, d_eval, f2_norm_i, f2f0_asymptotic, f_norm, f_second, log_solution, u0, u1, u2, BesselKind, DSpec,
    EquationKind, EquationParams, EvalResult, FunctionId, HyperError, URoute, C64,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Perturbation applied by `--mutate`.
pub const MUTATION: f64 = 1.001;

#[derive(Parser, Debug)]
#[command(name = "hyperd", version, about = "Degenerate hypergeometric functions: evaluation and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one function at points or on a grid.
    Eval(EvalArgs),
    /// Evaluate several functions on a grid, one row per point.
    Table(TableArgs),
    /// Run verification suites or single relations.
    Verify(VerifyArgs),
    /// List the relation catalog.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Equation: 0f1, 1f1 or 2f1.
    #[arg(long = "eq")]
    pub eq: EquationKind,
    /// α (complex literal such as 0.5+0.25i).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "m")]
    pub alpha: Option<String>,
    /// Integer α.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Classical a (exclusive with the Lie parameters).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Evaluation point; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Vec<String>,
    /// Grid re0:re1:n,im0:im1:m (n × m points, real part varying slowest).
    #[arg(long = "z-grid")]
    pub z_grid: Option<String>,
    /// Route for U: auto, connection, logplusd, asymptotic, kummer, inverse.
    #[arg(long, default_value = "auto")]
    pub route: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// F, F2nd, D, logsol, U, 2F0, FI, DI, or bessel-{I,J,K,H1,H2} (0f1 only).
    #[arg(long = "func")]
    pub func: String,
    #[command(flatten)]
    pub p: ParamArgs,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Comma-separated function list.
    #[arg(long = "funcs", value_delimiter = ',')]
    pub funcs: Vec<String>,
    #[command(flatten)]
    pub p: ParamArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// all, relations, theorems, equations, bessel, degenerate, gamma, coefficients.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Check only these relation ids; repeatable.
    #[arg(long)]
    pub id: Vec<String>,
    /// Override every tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Perturb one relation's stored constant (tests that the sweep notices).
    #[arg(long, hide = true)]
    pub mutate: Vec<String>,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Text for stdout and stderr plus the exit code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses a complex literal: `1.5`, `-2i`, `0.5+0.25i`, `1e-3-4e-2i`, `i`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex number `{s}`");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|x| C64::new(x, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not an exponent sign or the leading sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(C64::new(re.parse::<f64>().map_err(|_| bad())?, im))
}

fn parse_range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || format!("invalid grid axis `{s}` (expected start:end:count)");
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].parse().map_err(|_| bad())?;
    let b: f64 = parts[1].parse().map_err(|_| bad())?;
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    Ok(match n {
        0 => return Err(bad()),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    })
}

/// Expands `re0:re1:n,im0:im1:m`; the imaginary axis defaults to 0:0:1.
pub fn parse_grid(s: &str) -> Result<Vec<C64>, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0:0:1"));
    let re = parse_range(re)?;
    let im = parse_range(im)?;
    Ok(re.iter().flat_map(|&x| im.iter().map(move |&y| C64::new(x, y))).collect())
}

fn opt_complex(s: &Option<String>) -> Result<Option<C64>, String> {
    s.as_deref().map(parse_complex).transpose()
}

impl ParamArgs {
    /// Lie parameters from either convention; mixing them is an error.
    pub fn params(&self) -> Result<EquationParams, String> {
        let classical = self.a.is_some() || self.b.is_some() || self.c.is_some();
        let lie = self.alpha.is_some() || self.m.is_some() || self.theta.is_some() || self.beta.is_some() || self.mu.is_some();
        if classical && lie {
            return Err("classical (a, b, c) and Lie (alpha/m, theta, beta, mu) parameters are mutually exclusive".into());
        }
        if classical {
            let c = opt_complex(&self.c)?.ok_or("classical parameters need --c")?;
            let a = opt_complex(&self.a)?;
            let b = opt_complex(&self.b)?;
            let want = match self.eq {
                EquationKind::F0 => a.is_none() && b.is_none(),
                EquationKind::F1 => a.is_some() && b.is_none(),
                EquationKind::F2 => a.is_some() && b.is_some(),
            };
            if !want {
                return Err(format!("{} takes classical parameters {}", self.eq, classical_names(self.eq)));
            }
            return EquationParams::from_classical(Classical { a, b, c });
        }
        let alpha = match (self.m, opt_complex(&self.alpha)?) {
            (Some(m), _) => C64::new(m as f64, 0.0),
            (None, Some(a)) => a,
            (None, None) => return Err("missing --alpha or --m".into()),
        };
        let need = |name: &str, v: &Option<String>| -> Result<C64, String> {
            opt_complex(v)?.ok_or_else(|| format!("{} needs --{name}", self.eq))
        };
        let forbid = |name: &str, v: &Option<String>| -> Result<(), String> {
            match v {
                Some(_) => Err(format!("{} does not take --{name}", self.eq)),
                None => Ok(()),
            }
        };
        Ok(match self.eq {
            EquationKind::F0 => {
                forbid("theta", &self.theta)?;
                forbid("beta", &self.beta)?;
                forbid("mu", &self.mu)?;
                EquationParams::F0 { alpha }
            }
            EquationKind::F1 => {
                forbid("beta", &self.beta)?;
                forbid("mu", &self.mu)?;
                EquationParams::F1 { theta: need("theta", &self.theta)?, alpha }
            }
            EquationKind::F2 => {
                forbid("theta", &self.theta)?;
                EquationParams::F2 { alpha, beta: need("beta", &self.beta)?, mu: need("mu", &self.mu)? }
            }
        })
    }

    pub fn points(&self) -> Result<Vec<C64>, String> {
        let mut pts: Vec<C64> = self.z.iter().map(|s| parse_complex(s)).collect::<Result<_, _>>()?;
        if let Some(g) = &self.z_grid {
            pts.extend(parse_grid(g)?);
        }
        if pts.is_empty() {
            return Err("no evaluation points (use --z or --z-grid)".into());
        }
        Ok(pts)
    }
}

fn classical_names(kind: EquationKind) -> &'static str {
    match kind {
        EquationKind::F0 => "c",
        EquationKind::F1 => "a, c",
        EquationKind::F2 => "a, b, c",
    }
}

/// What `--func` names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Function(FunctionId),
    Bessel(BesselKind),
}

impl std::str::FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.strip_prefix("bessel-") {
            Some(k) => k.parse().map(Target::Bessel),
            None => s.parse().map(Target::Function),
        }
    }
}

impl Target {
    pub fn name(self) -> String {
        match self {
            Target::Function(f) => f.name().to_string(),
            Target::Bessel(k) => format!("bessel-{k:?}"),
        }
    }
}

fn integer_alpha(p: &EquationParams) -> Result<i64, HyperError> {
    near_integer(p.alpha(), DEGENERACY_TOL)
        .ok_or_else(|| HyperError::InvalidArgument(format!("this function needs integer alpha, got {}", p.alpha())))
}

fn dspec(p: &EquationParams) -> Result<DSpec, HyperError> {
    let m = integer_alpha(p)?;
    Ok(match *p {
        EquationParams::F0 { .. } => DSpec::f0(m),
        EquationParams::F1 { theta, .. } => DSpec::f1(theta, m),
        EquationParams::F2 { beta, mu, .. } => DSpec::f2(m, beta, mu),
    })
}

/// Evaluates one target at one point.
pub fn evaluate(target: Target, p: &EquationParams, z: C64, route: URoute) -> Result<EvalResult, HyperError> {
    let f = match target {
        Target::Bessel(kind) => {
            if p.kind() != EquationKind::F0 {
                return Err(HyperError::InvalidArgument("Bessel functions belong to --eq 0f1".into()));
            }
            return bessel(kind, integer_alpha(p)?, z);
        }
        Target::Function(f) => f,
    };
    if !f.supports(p.kind()) {
        return Err(HyperError::InvalidArgument(format!("{} is not defined for {}", f.name(), p.kind())));
    }
    match f {
        FunctionId::FNorm => f_norm(p, z),
        FunctionId::SecondSolution => f_second(p, z),
        FunctionId::DLogCompanion => d_eval(&dspec(p)?, z),
        FunctionId::LogSolution => log_solution(&dspec(p)?, z),
        FunctionId::UInfinity => match *p {
            EquationParams::F0 { alpha } => u0(alpha, z, route),
            EquationParams::F1 { theta, alpha } => u1(theta, alpha, z, route),
            EquationParams::F2 { alpha, beta, mu } => u2(alpha, beta, mu, z, route),
        },
        FunctionId::F2F0Asymptotic => {
            // the ₂F₀ pair attached to each equation's expansion at infinity
            let (a, b) = match *p {
                EquationParams::F0 { alpha } => (0.5 + alpha, 0.5 - alpha),
                EquationParams::F1 { theta, alpha } => {
                    let a = (1.0 + alpha + theta) / 2.0;
                    (a, a - alpha)
                }
                EquationParams::F2 { .. } => {
                    let cl = p.to_classical();
                    (cl.a.unwrap_or_default(), cl.b.unwrap_or_default())
                }
            };
            f2f0_asymptotic(a, b, z, default_max_terms())
        }
        FunctionId::FINorm => match *p {
            EquationParams::F2 { alpha, beta, mu } => f2_norm_i(alpha, beta, mu, z),
            _ => unreachable!("checked by supports"),
        },
        FunctionId::DINorm => {
            let spec = dspec(p)?;
            let pre = f2_i_prefactor(p.alpha(), spec.beta, spec.mu)?;
            let r = d_eval(&spec, z)?;
            Ok(EvalResult { value: r.value * pre, err_estimate: r.err_estimate * pre.norm(), ..r })
        }
    }
}

/// A float serialized with 17 significant digits; non-finite values become null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Num {
    pub fn text(self) -> String {
        if !self.0.is_finite() {
            return "null".into();
        }
        let s = format!("{:.16e}", self.0);
        match s.split_once('e') {
            Some((mant, exp)) if !exp.starts_with('-') => format!("{mant}e+{exp}"),
            _ => s,
        }
    }

    fn csv(self) -> String {
        if self.0.is_finite() {
            self.text()
        } else {
            String::new()
        }
    }
}

impl Serialize for Num {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

#[derive(Serialize)]
struct ErrorRecord {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_re: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_im: Option<Num>,
}

fn error_line(kind: &'static str, message: String, z: Option<C64>) -> String {
    let rec = ErrorRecord { error: kind, message, z_re: z.map(|z| Num(z.re)), z_im: z.map(|z| Num(z.im)) };
    serde_json::to_string(&rec).expect("serializable") + "\n"
}

fn usage_error(message: String) -> Outcome {
    Outcome { stdout: String::new(), stderr: error_line("UsageError", message, None), code: EXIT_ERROR }
}

#[derive(Serialize)]
pub struct EvalRecord {
    pub z_re: Num,
    pub z_im: Num,
    pub value_re: Num,
    pub value_im: Num,
    pub err_estimate: Num,
    pub terms_used: usize,
    pub flags: Vec<&'static str>,
}

impl EvalRecord {
    fn new(z: C64, r: &EvalResult) -> Self {
        EvalRecord {
            z_re: Num(z.re),
            z_im: Num(z.im),
            value_re: Num(r.value.re),
            value_im: Num(r.value.im),
            err_estimate: Num(r.err_estimate),
            terms_used: r.terms_used,
            flags: r.flags.names(),
        }
    }
}

#[derive(Serialize)]
struct ParamEcho {
    lie: serde_json::Map<String, serde_json::Value>,
    classical: serde_json::Map<String, serde_json::Value>,
}

fn complex_json(z: C64) -> serde_json::Value {
    let raw = |x: f64| serde_json::from_str::<serde_json::Value>(&Num(x).text()).expect("number");
    serde_json::json!({ "re": raw(z.re), "im": raw(z.im) })
}

fn echo(p: &EquationParams) -> ParamEcho {
    let map = |fields: Vec<(&str, C64)>| fields.into_iter().map(|(k, v)| (k.to_string(), complex_json(v))).collect();
    ParamEcho { lie: map(p.lie_fields()), classical: map(p.classical_fields()) }
}

#[derive(Serialize)]
struct EvalDoc<'a> {
    command: &'static str,
    eq: &'static str,
    func: String,
    route: &'a str,
    params: ParamEcho,
    records: Vec<EvalRecord>,
}

fn param_csv_header(p: &EquationParams) -> String {
    p.lie_fields()
        .iter()
        .chain(p.classical_fields().iter())
        .map(|(k, _)| format!("{k}_re,{k}_im"))
        .collect::<Vec<_>>()
        .join(",")
}

fn param_csv_row(p: &EquationParams) -> String {
    p.lie_fields()
        .iter()
        .chain(p.classical_fields().iter())
        .map(|(_, v)| format!("{},{}", Num(v.re).csv(), Num(v.im).csv()))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_route(s: &str) -> Result<URoute, String> {
    s.parse()
}

fn cmd_eval(args: &EvalArgs) -> Outcome {
    let setup = || -> Result<_, String> {
        Ok((args.func.parse::<Target>()?, args.p.params()?, args.p.points()?, parse_route(&args.p.route)?))
    };
    let (target, params, points, route) = match setup() {
        Ok(x) => x,
        Err(e) => return usage_error(e),
    };
    let mut out = Outcome::default();
    let mut records = Vec::new();
    for z in points {
        match evaluate(target, &params, z, route) {
            Ok(r) => records.push(EvalRecord::new(z, &r)),
            Err(e) => {
                out.stderr += &error_line(e.kind(), e.to_string(), Some(z));
                out.code = EXIT_ERROR;
            }
        }
    }
    out.stdout = match args.p.format {
        Format::Json => {
            let doc = EvalDoc {
                command: "eval",
                eq: params.kind().name(),
                func: target.name(),
                route: route.name(),
                params: echo(&params),
                records,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut s = format!(
                "eq,func,{},z_re,z_im,value_re,value_im,err_estimate,terms_used,flags\n",
                param_csv_header(&params)
            );
            for r in &records {
                s += &format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    params.kind().name(),
                    target.name(),
                    param_csv_row(&params),
                    r.z_re.csv(),
                    r.z_im.csv(),
                    r.value_re.csv(),
                    r.value_im.csv(),
                    r.err_estimate.csv(),
                    r.terms_used,
                    r.flags.join("|")
                );
            }
            s
        }
    };
    out
}

fn cmd_table(args: &TableArgs) -> Outcome {
    let setup = || -> Result<_, String> {
        let targets: Vec<Target> = args.funcs.iter().map(|f| f.parse()).collect::<Result<_, _>>()?;
        if targets.is_empty() {
            return Err("--funcs is empty".into());
        }
        Ok((targets, args.p.params()?, args.p.points()?, parse_route(&args.p.route)?))
    };
    let (targets, params, points, route) = match setup() {
        Ok(x) => x,
        Err(e) => return usage_error(e),
    };
    let mut out = Outcome::default();
    let rows: Vec<(C64, Vec<Option<EvalResult>>)> = points
        .iter()
        .map(|&z| {
            let vals = targets
                .iter()
                .map(|&t| match evaluate(t, &params, z, route) {
                    Ok(r) => Some(r),
                    Err(e) => {
                        out.stderr += &error_line(e.kind(), format!("{}: {e}", t.name()), Some(z));
                        out.code = EXIT_ERROR;
                        None
                    }
                })
                .collect();
            (z, vals)
        })
        .collect();
    let names: Vec<String> = targets.iter().map(|t| t.name()).collect();
    out.stdout = match args.p.format {
        Format::Csv => {
            let mut s = String::from("z_re,z_im");
            for n in &names {
                s += &format!(",{n}_re,{n}_im,{n}_err");
            }
            s.push('\n');
            for (z, vals) in &rows {
                s += &format!("{},{}", Num(z.re).csv(), Num(z.im).csv());
                for v in vals {
                    let (re, im, err) = v.map_or((f64::NAN, f64::NAN, f64::NAN), |r| (r.value.re, r.value.im, r.err_estimate));
                    s += &format!(",{},{},{}", Num(re).csv(), Num(im).csv(), Num(err).csv());
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(z, vals)| {
                    let mut m = serde_json::Map::new();
                    m.insert("z".into(), complex_json(*z));
                    for (n, v) in names.iter().zip(vals) {
                        let cell = match v {
                            Some(r) => serde_json::json!({
                                "value": complex_json(r.value),
                                "err_estimate": serde_json::from_str::<serde_json::Value>(&Num(r.err_estimate).text()).expect("number"),
                            }),
                            None => serde_json::Value::Null,
                        };
                        m.insert(n.clone(), cell);
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            let doc = serde_json::json!({
                "command": "table",
                "eq": params.kind().name(),
                "funcs": names,
                "route": route.name(),
                "params": serde_json::to_value(echo(&params)).expect("serializable"),
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    out
}

#[derive(Serialize)]
struct CheckOut<'a> {
    key: &'a str,
    suite: &'static str,
    residual: Num,
    tolerance: Num,
    passed: bool,
    points: usize,
    detail: &'a str,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    command: &'static str,
    suite: &'a str,
    relations_checked: usize,
    max_residual: Num,
    failures: Vec<String>,
    records: Vec<CheckOut<'a>>,
}

/// Runs checks in parallel and returns them ordered by key.
pub fn run_checks(tasks: Vec<verify::Task>) -> Vec<CheckRecord> {
    let mut recs: Vec<CheckRecord> = tasks.par_iter().map(verify::Task::run).collect();
    recs.sort_by(|a, b| a.key.cmp(&b.key));
    recs
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let mut catalog = Catalog::standard();
    for id in &args.mutate {
        if let Err(e) = catalog.mutate(id, MUTATION) {
            return Outcome { stderr: error_line(e.kind(), e.to_string(), None), code: EXIT_ERROR, ..Default::default() };
        }
    }
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let mut tasks = if args.id.is_empty() {
        verify::tasks(suite, &catalog)
    } else {
        let mut v = Vec::new();
        for id in &args.id {
            match catalog.get(id) {
                Ok(rec) => v.push(verify::relation_task(rec)),
                Err(e) => {
                    return Outcome { stderr: error_line(e.kind(), e.to_string(), None), code: EXIT_ERROR, ..Default::default() }
                }
            }
        }
        v
    };
    if let Some(tol) = args.tol {
        tasks = tasks.into_iter().map(|t| t.with_tolerance(tol)).collect();
    }
    let recs = run_checks(tasks);
    let summary = verify::summarize(&recs);
    let code = if summary.failures.is_empty() { EXIT_OK } else { EXIT_FAILED };
    let label = if args.id.is_empty() { args.suite.clone() } else { "relations".into() };
    let stdout = match args.format {
        Format::Json => {
            let doc = VerifyDoc {
                command: "verify",
                suite: &label,
                relations_checked: summary.checked,
                max_residual: Num(summary.max_residual),
                failures: summary.failures.clone(),
                records: recs
                    .iter()
                    .map(|r| CheckOut {
                        key: &r.key,
                        suite: r.suite.name(),
                        residual: Num(r.residual),
                        tolerance: Num(r.tolerance),
                        passed: r.passed,
                        points: r.points,
                        detail: &r.detail,
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("key,suite,residual,tolerance,passed,points,detail\n");
            for r in &recs {
                s += &format!(
                    "{},{},{},{},{},{},\"{}\"\n",
                    r.key,
                    r.suite.name(),
                    Num(r.residual).csv(),
                    Num(r.tolerance).csv(),
                    r.passed,
                    r.points,
                    r.detail.replace('"', "\"\"")
                );
            }
            s
        }
    };
    Outcome { stdout, stderr: String::new(), code }
}

#[derive(Serialize)]
struct CatalogEntry {
    id: &'static str,
    kind: &'static str,
    family: &'static str,
    signature: &'static str,
    anchor: &'static str,
    ladder: bool,
}

fn cmd_catalog(args: &CatalogArgs) -> Outcome {
    let cat = Catalog::standard();
    let entries: Vec<CatalogEntry> = cat
        .records()
        .iter()
        .map(|r| CatalogEntry {
            id: r.id,
            kind: r.kind.name(),
            family: r.family.name(),
            signature: r.signature,
            anchor: r.anchor,
            ladder: r.is_ladder(),
        })
        .collect();
    let stdout = match args.format {
        Format::Json => serde_json::to_string_pretty(&entries).expect("serializable") + "\n",
        Format::Csv => {
            let mut s = String::from("id,kind,family,signature,anchor,ladder\n");
            for e in &entries {
                s += &format!("{},{},{},\"{}\",\"{}\",{}\n", e.id, e.kind, e.family, e.signature, e.anchor, e.ladder);
            }
            s
        }
    };
    Outcome { stdout, ..Default::default() }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return if e.use_stderr() {
                Outcome { stderr: text, code, ..Default::default() }
            } else {
                Outcome { stdout: text, code, ..Default::default() }
            };
        }
    };
    match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Catalog(a) => cmd_catalog(a),
    }
}
