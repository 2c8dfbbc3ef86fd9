//! Gamma-function kit: Γ, 1/Γ, ψ, shifted harmonic numbers and Pochhammer
//! symbols of either sign, all on complex arguments.
//!
//! Poles are detected with a fixed absolute tolerance [`POLE_TOL`] around the
//! non-positive integers. Inside that band Γ and ψ report [`HyperError::Pole`]
//! while 1/Γ returns an exact zero.

use std::f64::consts::PI;

use crate::error::{HyperError, Result};
use crate::C64;

/// Absolute distance to a non-positive integer below which an argument is a pole.
pub const POLE_TOL: f64 = 1e-9;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

// B_{2k} / (2k) for the digamma asymptotic series.
const PSI_ASYMPTOTIC: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3_617.0 / 8_160.0,
];

const PSI_SWITCH: f64 = 10.0;

/// Γ evaluated together with its pole status.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaValue {
    /// Γ(z); infinite when `is_pole` is set.
    pub value: C64,
    /// 1/Γ(z); exactly zero when `is_pole` is set.
    pub recip: C64,
    pub is_pole: bool,
}

/// Returns `Some(-n)` when `z` is within [`POLE_TOL`] of the non-positive integer `-n`.
pub fn nonpositive_integer(z: C64) -> Option<i64> {
    if z.im.abs() > POLE_TOL || z.re > POLE_TOL {
        return None;
    }
    let n = z.re.round();
    if (z - C64::new(n, 0.0)).norm() <= POLE_TOL {
        Some(n as i64)
    } else {
        None
    }
}

/// Returns the integer nearest to `z` when `z` lies within `tol` of it.
pub fn near_integer(z: C64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if (z - C64::new(n, 0.0)).norm() <= tol {
        Some(n as i64)
    } else {
        None
    }
}

/// sin(πz) with the argument reduced to the nearest integer first, so zeros are exact.
pub fn sin_pi(z: C64) -> C64 {
    let n = z.re.round();
    let s = (C64::new(z.re - n, z.im) * PI).sin();
    if (n as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// π·cot(πz), reduced modulo 1 before evaluation.
fn pi_cot_pi(z: C64) -> C64 {
    let x = C64::new(z.re - z.re.round(), z.im) * PI;
    if x.im.abs() > 20.0 {
        // cot → ∓i; avoids overflow in cos/sin
        return C64::new(0.0, -PI * x.im.signum());
    }
    PI * x.cos() / x.sin()
}

fn lanczos(z: C64) -> C64 {
    // Γ(z) for Re z >= 1/2
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// Γ(z).
pub fn gamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(HyperError::Pole { at: z });
    }
    if z.re < 0.5 {
        Ok(PI / (sin_pi(z) * lanczos(1.0 - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// 1/Γ(z), an entire function: exactly zero at the poles of Γ.
pub fn recip_gamma(z: C64) -> C64 {
    if nonpositive_integer(z).is_some() {
        return C64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        sin_pi(z) * lanczos(1.0 - z) / PI
    } else {
        1.0 / lanczos(z)
    }
}

/// Γ with its reciprocal and pole flag.
pub fn gamma_value(z: C64) -> GammaValue {
    match gamma(z) {
        Ok(value) => GammaValue {
            value,
            recip: recip_gamma(z),
            is_pole: false,
        },
        Err(_) => GammaValue {
            value: C64::new(f64::INFINITY, 0.0),
            recip: C64::new(0.0, 0.0),
            is_pole: true,
        },
    }
}

/// ∂_z 1/Γ(z) = −ψ(z)/Γ(z); at z = −n this is (−1)ⁿ n!.
pub fn recip_gamma_deriv(z: C64) -> C64 {
    if let Some(n) = nonpositive_integer(z) {
        let n = (-n) as u32;
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        return C64::new(sign * factorial(n), 0.0);
    }
    // digamma cannot fail off the poles
    -digamma(z).expect("off-pole digamma") * recip_gamma(z)
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(HyperError::Pole { at: z });
    }
    if z.re < 0.0 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        return Ok(digamma_nonneg(1.0 - z) - pi_cot_pi(z));
    }
    Ok(digamma_nonneg(z))
}

fn digamma_nonneg(mut z: C64) -> C64 {
    let mut shift = C64::new(0.0, 0.0);
    while z.norm() < PSI_SWITCH {
        shift += 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut series = C64::new(0.0, 0.0);
    for c in PSI_ASYMPTOTIC {
        series += c * pow;
        pow *= inv2;
    }
    z.ln() - 0.5 / z - series - shift
}

/// Shifted harmonic number H_k(z) = Σ_{j<k} 1/(z + j).
pub fn harmonic(k: u32, z: C64) -> Result<C64> {
    let mut sum = C64::new(0.0, 0.0);
    for j in 0..k {
        let d = z + j as f64;
        if d.norm() <= POLE_TOL {
            return Err(HyperError::Pole { at: d });
        }
        sum += 1.0 / d;
    }
    Ok(sum)
}

/// Ordinary harmonic number H_k = H_k(1).
pub fn harmonic_number(k: u32) -> f64 {
    (1..=k).map(|j| 1.0 / j as f64).sum()
}

/// Pochhammer symbol (z)_k for any integer k.
///
/// For k ≥ 0 this is z(z+1)⋯(z+k−1); for k < 0 it is 1/((z+k)(z+k+1)⋯(z−1)).
pub fn pochhammer(z: C64, k: i64) -> Result<C64> {
    if k >= 0 {
        let mut p = C64::new(1.0, 0.0);
        for j in 0..k {
            p *= z + j as f64;
        }
        Ok(p)
    } else {
        let mut p = C64::new(1.0, 0.0);
        for j in k..0 {
            let d = z + j as f64;
            if d.norm() <= POLE_TOL {
                return Err(HyperError::Pole { at: d });
            }
            p *= d;
        }
        Ok(1.0 / p)
    }
}

/// n! as a float.
pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc * j as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn gamma_small_integers_and_half() {
        assert!(rel(gamma(c(1.0)).unwrap(), c(1.0)) < 1e-15);
        assert!(rel(gamma(c(5.0)).unwrap(), c(24.0)) < 1e-14);
        assert!(rel(gamma(c(0.5)).unwrap(), c(PI.sqrt())) < 1e-15);
    }

    #[test]
    fn gamma_poles_are_errors() {
        assert!(matches!(gamma(c(0.0)), Err(HyperError::Pole { .. })));
        assert!(matches!(gamma(c(-3.0 + 1e-10)), Err(HyperError::Pole { .. })));
        assert!(gamma(c(-3.0 + 1e-6)).is_ok());
        let g = gamma_value(c(-2.0));
        assert!(g.is_pole);
        assert_eq!(g.recip, c(0.0));
    }

    #[test]
    fn recip_gamma_zeros() {
        assert_eq!(recip_gamma(c(0.0)), c(0.0));
        assert_eq!(recip_gamma(c(-3.0)), c(0.0));
    }

    #[test]
    fn recip_gamma_derivative_at_minus_two() {
        let h = 1e-5;
        let fd = (recip_gamma(c(-2.0 + h)) - recip_gamma(c(-2.0 - h))) / (2.0 * h);
        assert!((fd - c(2.0)).norm() < 1e-6, "{fd}");
        assert_eq!(recip_gamma_deriv(c(-2.0)), c(2.0));
        assert_eq!(recip_gamma_deriv(c(-3.0)), c(-6.0));
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(c(1.0)).unwrap() + EULER_GAMMA).norm() < 1e-15);
        assert!((digamma(c(2.0)).unwrap() - (1.0 - EULER_GAMMA)).norm() < 1e-15);
        let half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(c(0.5)).unwrap() - half).norm() < 1e-14);
        assert!(digamma(c(-1.0)).is_err());
    }

    #[test]
    fn harmonic_basics() {
        assert_eq!(harmonic(0, C64::new(0.3, 2.0)).unwrap(), c(0.0));
        assert!((harmonic(3, c(1.0)).unwrap() - 11.0 / 6.0).norm() < 1e-15);
        let z = c(0.7);
        let lhs = harmonic(5, z).unwrap() - harmonic(2, z).unwrap() - harmonic(3, z + 2.0).unwrap();
        assert!(lhs.norm() < 1e-15);
        assert!(harmonic(3, c(-2.0)).is_err());
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(C64::new(0.4, -1.0), 0).unwrap(), c(1.0));
        assert!((pochhammer(c(3.0), -1).unwrap() - 0.5).norm() < 1e-16);
        let z = c(0.3);
        let k = 4;
        let lhs = pochhammer(z, k).unwrap();
        let rhs = pochhammer(1.0 - z - k as f64, k).unwrap();
        assert!((lhs - rhs).norm() < 1e-14 * lhs.norm(), "{lhs} {rhs}");
        assert!(pochhammer(c(2.0), -3).is_err());
        // (z)_k = 0 when a factor vanishes
        assert_eq!(pochhammer(c(-2.0), 4).unwrap(), c(0.0));
    }
}
