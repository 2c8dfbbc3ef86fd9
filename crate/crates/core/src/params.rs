//! Equation parameters in Lie-algebraic form and their classical (a, b, c) counterparts.

use std::fmt;

use crate::gammakit::near_integer;
use crate::C64;

/// Distance to an integer below which α is treated as degenerate and snapped.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationKind {
    F0,
    F1,
    F2,
}

impl EquationKind {
    pub fn name(self) -> &'static str {
        match self {
            EquationKind::F0 => "0f1",
            EquationKind::F1 => "1f1",
            EquationKind::F2 => "2f1",
        }
    }
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for EquationKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "0f1" | "f0" => Ok(EquationKind::F0),
            "1f1" | "f1" => Ok(EquationKind::F1),
            "2f1" | "f2" => Ok(EquationKind::F2),
            _ => Err(format!("unknown equation `{s}` (expected 0f1, 1f1 or 2f1)")),
        }
    }
}

/// Classical hypergeometric parameters. `a` and `b` are absent where the equation has none.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classical {
    pub a: Option<C64>,
    pub b: Option<C64>,
    pub c: C64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EquationParams {
    F0 { alpha: C64 },
    F1 { theta: C64, alpha: C64 },
    F2 { alpha: C64, beta: C64, mu: C64 },
}

impl EquationParams {
    pub fn f0(alpha: impl Into<C64>) -> Self {
        EquationParams::F0 { alpha: alpha.into() }
    }

    pub fn f1(theta: impl Into<C64>, alpha: impl Into<C64>) -> Self {
        EquationParams::F1 { theta: theta.into(), alpha: alpha.into() }
    }

    pub fn f2(alpha: impl Into<C64>, beta: impl Into<C64>, mu: impl Into<C64>) -> Self {
        EquationParams::F2 { alpha: alpha.into(), beta: beta.into(), mu: mu.into() }
    }

    pub fn kind(&self) -> EquationKind {
        match self {
            EquationParams::F0 { .. } => EquationKind::F0,
            EquationParams::F1 { .. } => EquationKind::F1,
            EquationParams::F2 { .. } => EquationKind::F2,
        }
    }

    pub fn alpha(&self) -> C64 {
        match *self {
            EquationParams::F0 { alpha } | EquationParams::F1 { alpha, .. } | EquationParams::F2 { alpha, .. } => alpha,
        }
    }

    /// Same parameters with α replaced.
    pub fn with_alpha(&self, alpha: C64) -> Self {
        match *self {
            EquationParams::F0 { .. } => EquationParams::F0 { alpha },
            EquationParams::F1 { theta, .. } => EquationParams::F1 { theta, alpha },
            EquationParams::F2 { beta, mu, .. } => EquationParams::F2 { alpha, beta, mu },
        }
    }

    /// The parameters of the power-behaved second solution z^{−α}𝔽: α → −α, and μ → −μ for ₂F₁.
    pub fn reflected(&self) -> Self {
        match *self {
            EquationParams::F0 { alpha } => EquationParams::F0 { alpha: -alpha },
            EquationParams::F1 { theta, alpha } => EquationParams::F1 { theta, alpha: -alpha },
            EquationParams::F2 { alpha, beta, mu } => EquationParams::F2 { alpha: -alpha, beta, mu: -mu },
        }
    }

    pub fn to_classical(&self) -> Classical {
        match *self {
            EquationParams::F0 { alpha } => Classical { a: None, b: None, c: alpha + 1.0 },
            EquationParams::F1 { theta, alpha } => Classical {
                a: Some((1.0 + alpha + theta) / 2.0),
                b: None,
                c: alpha + 1.0,
            },
            EquationParams::F2 { alpha, beta, mu } => Classical {
                a: Some((1.0 + alpha + beta - mu) / 2.0),
                b: Some((1.0 + alpha + beta + mu) / 2.0),
                c: alpha + 1.0,
            },
        }
    }

    pub fn from_classical(cl: Classical) -> Result<Self, String> {
        let alpha = cl.c - 1.0;
        match (cl.a, cl.b) {
            (None, None) => Ok(EquationParams::F0 { alpha }),
            (Some(a), None) => Ok(EquationParams::F1 { theta: 2.0 * a - cl.c, alpha }),
            (Some(a), Some(b)) => Ok(EquationParams::F2 { alpha, beta: a + b - cl.c, mu: b - a }),
            (None, Some(_)) => Err("parameter b given without a".into()),
        }
    }

    /// The integer m when α is within [`DEGENERACY_TOL`] of it.
    pub fn degenerate_m(&self) -> Option<i64> {
        near_integer(self.alpha(), DEGENERACY_TOL)
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate_m().is_some()
    }

    /// Snaps a degenerate α onto its integer.
    pub fn snapped(&self) -> Self {
        match self.degenerate_m() {
            Some(m) => self.with_alpha(C64::new(m as f64, 0.0)),
            None => *self,
        }
    }

    /// Named Lie-algebraic parameters, in a fixed order.
    pub fn lie_fields(&self) -> Vec<(&'static str, C64)> {
        match *self {
            EquationParams::F0 { alpha } => vec![("alpha", alpha)],
            EquationParams::F1 { theta, alpha } => vec![("theta", theta), ("alpha", alpha)],
            EquationParams::F2 { alpha, beta, mu } => vec![("alpha", alpha), ("beta", beta), ("mu", mu)],
        }
    }

    /// Named classical parameters, in a fixed order.
    pub fn classical_fields(&self) -> Vec<(&'static str, C64)> {
        let cl = self.to_classical();
        let mut out = Vec::new();
        if let Some(a) = cl.a {
            out.push(("a", a));
        }
        if let Some(b) = cl.b {
            out.push(("b", b));
        }
        out.push(("c", cl.c));
        out
    }
}

/// Which function of an equation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    FNorm,
    SecondSolution,
    DLogCompanion,
    LogSolution,
    UInfinity,
    F2F0Asymptotic,
    FINorm,
    DINorm,
}

impl FunctionId {
    pub fn supports(self, kind: EquationKind) -> bool {
        match self {
            FunctionId::FINorm | FunctionId::DINorm => kind == EquationKind::F2,
            _ => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::FNorm => "F",
            FunctionId::SecondSolution => "F2nd",
            FunctionId::DLogCompanion => "D",
            FunctionId::LogSolution => "logsol",
            FunctionId::UInfinity => "U",
            FunctionId::F2F0Asymptotic => "2F0",
            FunctionId::FINorm => "FI",
            FunctionId::DINorm => "DI",
        }
    }
}

impl std::str::FromStr for FunctionId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "F" | "f" => FunctionId::FNorm,
            "F2nd" | "second" => FunctionId::SecondSolution,
            "D" | "d" => FunctionId::DLogCompanion,
            "logsol" | "log" => FunctionId::LogSolution,
            "U" | "u" => FunctionId::UInfinity,
            "2F0" | "2f0" => FunctionId::F2F0Asymptotic,
            "FI" => FunctionId::FINorm,
            "DI" => FunctionId::DINorm,
            _ => return Err(format!("unknown function `{s}`")),
        })
    }
}
