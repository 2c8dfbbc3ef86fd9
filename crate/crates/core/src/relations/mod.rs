//! Executable catalog of identities: recurrences, contiguity relations,
//! Kummer-table identities and quadratic (doubling) relations.
//!
//! Every record evaluates both sides independently and reports the residual.
//! Ladder records (first-order differential operators p∂ + q mapping a
//! function to a parameter-shifted one) can also be run forwards as evaluators.
//! Derivatives always come from term-wise series differentiation.

mod f0;
mod f1;
mod f2;
mod quadratic;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HyperError, Result};
use crate::hyperd::{d_eval_jet, log_jet, DSpec};
use crate::hyperf::{f2_i_prefactor, f_norm_jet};
use crate::params::{EquationKind, EquationParams};
use crate::series::{EvalResult, Flags, Jet, SeriesOpts, EPS};
use crate::C64;

/// Number of grid points per record in the catalog sweep.
pub const GRID_POINTS: usize = 25;

/// Scaled-residual tolerance of the catalog sweep.
pub const SWEEP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    RecurrenceF,
    RecurrenceD,
    Contiguity,
    Kummer,
    Quadratic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::RecurrenceF => "RecurrenceF",
            Family::RecurrenceD => "RecurrenceD",
            Family::Contiguity => "Contiguity",
            Family::Kummer => "Kummer",
            Family::Quadratic => "Quadratic",
        }
    }
}

/// Parameters and argument at which a relation is checked. For 𝔇 relations α holds the integer m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub params: EquationParams,
    pub z: C64,
}

impl Point {
    pub fn new(params: EquationParams, z: impl Into<C64>) -> Self {
        Point { params, z: z.into() }
    }

    pub fn alpha(&self) -> C64 {
        self.params.alpha()
    }

    pub fn m(&self) -> i64 {
        self.alpha().re.round() as i64
    }

    pub fn theta(&self) -> C64 {
        match self.params {
            EquationParams::F1 { theta, .. } => theta,
            _ => C64::new(0.0, 0.0),
        }
    }

    pub fn beta(&self) -> C64 {
        match self.params {
            EquationParams::F2 { beta, .. } => beta,
            _ => C64::new(0.0, 0.0),
        }
    }

    pub fn mu(&self) -> C64 {
        match self.params {
            EquationParams::F2 { mu, .. } => mu,
            _ => C64::new(0.0, 0.0),
        }
    }
}

/// A first-order operator p(z)∂ + q(z) with p𝔽' + q𝔽 = coeff·𝔽(shifted).
///
/// For ₂F₁ the functions are taken in the 𝔽^I / 𝔇^I normalization.
#[derive(Clone, Copy)]
pub struct Ladder {
    pub p: fn(&Point) -> C64,
    pub q: fn(&Point) -> C64,
    pub coeff: fn(&Point) -> C64,
    /// Integer shifts of the Lie parameters in their natural order: (α), (θ, α), (α, β, μ).
    pub shift: [i32; 3],
    /// The 𝔇 version carries an extra inh(z)·𝔽 on the right, where inh = −p/z.
    pub inhom: Option<fn(&Point) -> C64>,
}

#[derive(Clone, Copy)]
pub enum Body {
    Ladder(Ladder),
    Sides(fn(&Point) -> Result<(C64, C64)>),
}

#[derive(Clone)]
pub struct RelationRecord {
    pub id: &'static str,
    pub kind: EquationKind,
    pub family: Family,
    /// Human-readable parameter shift or transformation.
    pub signature: &'static str,
    /// Where the identity lives in the theory, in words.
    pub anchor: &'static str,
    /// Multiplies the right-hand side; 1 for the true identity.
    pub constant: f64,
    pub body: Body,
    pub applicable: fn(&Point) -> bool,
    pub sample: fn(&mut ChaCha8Rng) -> Point,
}

impl std::fmt::Debug for RelationRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RelationRecord")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("family", &self.family)
            .field("constant", &self.constant)
            .finish()
    }
}

/// Both sides of an identity and their discrepancy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationCheck {
    pub lhs: C64,
    pub rhs: C64,
    /// |lhs − rhs|
    pub residual: f64,
    /// |lhs − rhs| / max(1, |lhs|, |rhs|)
    pub scaled: f64,
}

impl RelationCheck {
    fn new(lhs: C64, rhs: C64) -> Self {
        let residual = (lhs - rhs).norm();
        let scaled = residual / 1f64.max(lhs.norm()).max(rhs.norm());
        RelationCheck { lhs, rhs, residual, scaled }
    }
}

pub(crate) fn opts() -> SeriesOpts {
    SeriesOpts::default()
}

/// Shifts Lie parameters by integers.
pub fn shifted(p: &EquationParams, s: [i32; 3]) -> EquationParams {
    let d = |i: usize| s[i] as f64;
    match *p {
        EquationParams::F0 { alpha } => EquationParams::F0 { alpha: alpha + d(0) },
        EquationParams::F1 { theta, alpha } => EquationParams::F1 { theta: theta + d(0), alpha: alpha + d(1) },
        EquationParams::F2 { alpha, beta, mu } => EquationParams::F2 { alpha: alpha + d(0), beta: beta + d(1), mu: mu + d(2) },
    }
}

/// 𝔽 (𝔽^I for ₂F₁) with derivatives.
pub(crate) fn f_jet(p: &EquationParams, z: C64) -> Result<Jet> {
    let j = f_norm_jet(p, z, &opts())?.jet;
    match *p {
        EquationParams::F2 { alpha, beta, mu } => Ok(j.scale(f2_i_prefactor(alpha, beta, mu)?)),
        _ => Ok(j),
    }
}

pub(crate) fn dspec(p: &EquationParams) -> DSpec {
    let m = p.alpha().re.round() as i64;
    match *p {
        EquationParams::F0 { .. } => DSpec::f0(m),
        EquationParams::F1 { theta, .. } => DSpec::f1(theta, m),
        EquationParams::F2 { beta, mu, .. } => DSpec::f2(m, beta, mu),
    }
}

/// 𝔇 (𝔇^I for ₂F₁) with derivatives; α of `p` is the integer m.
pub(crate) fn d_jet(p: &EquationParams, z: C64) -> Result<Jet> {
    let j = d_eval_jet(&dspec(p), z, &opts())?.jet;
    match *p {
        EquationParams::F2 { alpha, beta, mu } => Ok(j.scale(f2_i_prefactor(alpha, beta, mu)?)),
        _ => Ok(j),
    }
}

/// log·𝔽 + 𝔇 in the same normalization as [`f_jet`] and [`d_jet`].
pub(crate) fn s_jet(p: &EquationParams, z: C64) -> Result<Jet> {
    let l = log_jet(p.kind(), z)?;
    Ok(l * f_jet(p, z)? + d_jet(p, z)?)
}

/// Distance from x to the nearest integer.
pub(crate) fn dist_int(x: C64) -> f64 {
    (x - C64::new(x.re.round(), 0.0)).norm()
}

pub(crate) fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Uniform point in the annulus r0 ≤ |z| ≤ r1.
pub(crate) fn annulus(rng: &mut ChaCha8Rng, r0: f64, r1: f64) -> C64 {
    let r = rng.gen_range(r0..r1);
    let t = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    C64::from_polar(r, t)
}

/// Real parameter at distance ≥ 0.05 from the integers.
pub(crate) fn generic(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    loop {
        let x: f64 = rng.gen_range(lo..hi);
        if (x - x.round()).abs() >= 0.05 {
            return x;
        }
    }
}

/// Ladder evaluation: (lhs, rhs) with rhs scaled later by the record constant.
fn ladder_sides(l: &Ladder, pt: &Point) -> Result<(C64, C64)> {
    let z = pt.z;
    let p = (l.p)(pt);
    let q = (l.q)(pt);
    let k = (l.coeff)(pt);
    let target = shifted(&pt.params, l.shift);
    match l.inhom {
        None => {
            let f = f_jet(&pt.params, z)?;
            Ok((p * f.d1 + q * f.value, k * f_jet(&target, z)?.value))
        }
        Some(inh) => {
            let d = d_jet(&pt.params, z)?;
            let f = f_jet(&pt.params, z)?;
            Ok((p * d.d1 + q * d.value, k * d_jet(&target, z)?.value + inh(pt) * f.value))
        }
    }
}

impl RelationRecord {
    pub fn is_ladder(&self) -> bool {
        matches!(self.body, Body::Ladder(_))
    }

    /// Evaluates both sides at `pt`; the right side is multiplied by the record constant.
    pub fn check(&self, pt: &Point) -> Result<RelationCheck> {
        if !(self.applicable)(pt) {
            return Err(HyperError::Inapplicable(format!("{} at {:?}", self.id, pt)));
        }
        self.check_unguarded(pt)
    }

    /// Like [`check`](Self::check) but ignores the applicability predicate.
    pub fn check_unguarded(&self, pt: &Point) -> Result<RelationCheck> {
        if pt.params.kind() != self.kind {
            return Err(HyperError::Inapplicable(format!("{} expects {} parameters", self.id, self.kind)));
        }
        let (lhs, rhs) = match &self.body {
            Body::Ladder(l) => ladder_sides(l, pt)?,
            Body::Sides(f) => f(pt)?,
        };
        Ok(RelationCheck::new(lhs, rhs * self.constant))
    }

    /// The shifted function obtained by running the ladder on the unshifted one,
    /// in the ladder's normalization (𝔽^I, 𝔇^I for ₂F₁).
    pub fn apply_ladder(&self, pt: &Point) -> Result<EvalResult> {
        let Body::Ladder(l) = &self.body else {
            return Err(HyperError::Inapplicable(format!("{} is not a ladder", self.id)));
        };
        if !(self.applicable)(pt) {
            return Err(HyperError::Inapplicable(format!("{} at {:?}", self.id, pt)));
        }
        let z = pt.z;
        let p = (l.p)(pt);
        let q = (l.q)(pt);
        let k = (l.coeff)(pt) * self.constant;
        let res = match l.inhom {
            None => f_norm_jet(&pt.params, z, &opts()).and_then(|r| {
                let f = f_jet(&pt.params, z)?;
                let scale = f.value.norm() / r.jet.value.norm().max(f64::MIN_POSITIVE);
                Ok(((p * f.d1 + q * f.value) / k, r.err_estimate * scale.max(1.0), r.terms_used))
            })?,
            Some(inh) => {
                let dr = d_eval_jet(&dspec(&pt.params), z, &opts())?;
                let d = d_jet(&pt.params, z)?;
                let f = f_jet(&pt.params, z)?;
                let scale = d.value.norm() / dr.jet.value.norm().max(f64::MIN_POSITIVE);
                ((p * d.d1 + q * d.value - inh(pt) * f.value) / k, dr.err_estimate * scale.max(1.0), dr.terms_used)
            }
        };
        let (value, err, terms) = res;
        let err = err * (p.norm() + q.norm()) / k.norm() + EPS * value.norm();
        Ok(EvalResult { value, err_estimate: err, terms_used: terms, flags: Flags::empty() })
    }

    /// Checks the 𝔽-ladder of this record on log·𝔽 + 𝔇, which must obey the same relation.
    pub fn check_log_companion(&self, pt: &Point) -> Result<RelationCheck> {
        let Body::Ladder(l) = &self.body else {
            return Err(HyperError::Inapplicable(format!("{} is not a ladder", self.id)));
        };
        let s = s_jet(&pt.params, pt.z)?;
        let target = shifted(&pt.params, l.shift);
        let lhs = (l.p)(pt) * s.d1 + (l.q)(pt) * s.value;
        let rhs = (l.coeff)(pt) * s_jet(&target, pt.z)?.value;
        Ok(RelationCheck::new(lhs, rhs))
    }

    /// The fixed pseudo-random grid of applicable points for this record.
    pub fn grid(&self, n: usize) -> Vec<Point> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed(self.id));
        let mut out = Vec::with_capacity(n);
        let mut draws = 0;
        while out.len() < n && draws < 100 * n {
            let pt = (self.sample)(&mut rng);
            draws += 1;
            if (self.applicable)(&pt) {
                out.push(pt);
            }
        }
        out
    }
}

/// FNV-1a of the record id, so each grid is fixed by its key alone.
fn seed(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// An ordered set of relation records.
#[derive(Debug, Clone)]
pub struct Catalog {
    records: Vec<RelationRecord>,
}

impl Catalog {
    /// Every identity, ordered by id.
    pub fn standard() -> Self {
        let mut records = Vec::new();
        records.extend(f0::records());
        records.extend(f1::records());
        records.extend(f2::records());
        records.extend(quadratic::records());
        records.sort_by(|a, b| a.id.cmp(b.id));
        Catalog { records }
    }

    pub fn records(&self) -> &[RelationRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&RelationRecord> {
        self.records
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| HyperError::UnknownRelation(id.to_string()))
    }

    /// Replaces the right-hand-side constant of one record; used to show that the sweep detects corruption.
    pub fn mutate(&mut self, id: &str, constant: f64) -> Result<()> {
        let rec = self
            .records
            .iter_mut()
            .find(|r| r.id == id)
            .ok_or_else(|| HyperError::UnknownRelation(id.to_string()))?;
        rec.constant = constant;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn standard() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::standard)
}

/// Residual of a catalogued identity at one point.
pub fn check_relation(id: &str, pt: &Point) -> Result<RelationCheck> {
    standard().get(id)?.check(pt)
}

/// Residual of a quadratic (doubling) identity at one point.
pub fn check_quadratic(id: &str, pt: &Point) -> Result<RelationCheck> {
    let rec = standard().get(id)?;
    if rec.family != Family::Quadratic {
        return Err(HyperError::Inapplicable(format!("{id} is not a quadratic relation")));
    }
    rec.check(pt)
}

/// Runs a ladder record as an evaluator of the shifted function.
pub fn apply_ladder(id: &str, pt: &Point) -> Result<EvalResult> {
    standard().get(id)?.apply_ladder(pt)
}

pub fn catalog() -> &'static Catalog {
    standard()
}

/// Worst scaled residual of a record over its grid, with the offending point.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub id: &'static str,
    pub points: usize,
    pub max_scaled: f64,
    pub worst: Option<Point>,
    pub errors: Vec<String>,
}

impl SweepResult {
    pub fn passed(&self, tol: f64) -> bool {
        self.errors.is_empty() && self.points > 0 && self.max_scaled <= tol
    }
}

/// Checks one record over its grid.
pub fn sweep_record(rec: &RelationRecord, n: usize) -> SweepResult {
    let mut res = SweepResult { id: rec.id, points: 0, max_scaled: 0.0, worst: None, errors: Vec::new() };
    for pt in rec.grid(n) {
        match rec.check(&pt) {
            Ok(ch) => {
                res.points += 1;
                if !(ch.scaled <= res.max_scaled) {
                    res.max_scaled = if ch.scaled.is_nan() { f64::INFINITY } else { ch.scaled };
                    res.worst = Some(pt);
                }
            }
            Err(e) => res.errors.push(format!("{pt:?}: {e}")),
        }
    }
    res
}
