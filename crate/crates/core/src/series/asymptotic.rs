//! Growth constants of `s(n) ~ K c^n n^{-3/2}`.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::gf::{counts, p_closed_form};
use crate::error::{Error, Result};

/// A decimal fixed-point real `value / 10^digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedReal {
    value: BigInt,
    digits: u32,
}

const GUARD_DIGITS: u32 = 6;

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Rounds `v / 10^drop` to the nearest integer, ties away from zero.
fn round_div_pow10(v: &BigInt, drop: u32) -> BigInt {
    let d = pow10(drop);
    let half = &d / 2;
    if v.is_negative() {
        let magnitude: BigInt = (-v + half) / d;
        -magnitude
    } else {
        (v + half) / d
    }
}

impl FixedReal {
    pub fn new(value: BigInt, digits: u32) -> Self {
        Self { value, digits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn scaled_value(&self) -> &BigInt {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().expect("decimal rendering parses")
    }

    /// `1 / self` to the same number of digits.
    pub fn recip(&self) -> FixedReal {
        let d = self.digits;
        let num = pow10(2 * d + GUARD_DIGITS);
        FixedReal::new(round_div_pow10(&(num / &self.value), GUARD_DIGITS), d)
    }

    /// `|self - other|` in units of the last digit, after aligning precision.
    pub fn ulps_apart(&self, other: &FixedReal) -> BigInt {
        let d = self.digits.min(other.digits);
        let a = round_div_pow10(&self.value, self.digits - d);
        let b = round_div_pow10(&other.value, other.digits - d);
        (a - b).abs()
    }
}

impl fmt::Display for FixedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int, frac) = self.value.abs().div_rem(&pow10(self.digits));
        let sign = if self.value.sign() == Sign::Minus {
            "-"
        } else {
            ""
        };
        write!(
            f,
            "{sign}{int}.{frac:0>width$}",
            frac = frac.to_string(),
            width = self.digits as usize
        )
    }
}

/// `S^4 quartic(k / S)` with exact integers.
fn scaled_quartic(k: &BigInt, scale: &BigInt) -> BigInt {
    let s2 = scale * scale;
    let k2 = k * k;
    &s2 * &s2 - 6 * k * &s2 * scale + 7 * &k2 * &s2 - 2 * &k2 * k * scale + &k2 * &k2
}

/// Smallest positive root of `1 - 6x + 7x^2 - 2x^3 + x^4`, by exact bisection
/// on `[0, 1/2]`, correctly rounded to `digits` decimals.
pub fn quartic_smallest_root(digits: u32) -> Result<FixedReal> {
    if digits < 10 {
        return Err(Error::InvalidArgument(
            "precision must be at least 10 digits".into(),
        ));
    }
    let scale = pow10(digits + GUARD_DIGITS);
    let mut lo = BigInt::zero();
    let mut hi = &scale / 2;
    debug_assert!(scaled_quartic(&lo, &scale).is_positive());
    debug_assert!(scaled_quartic(&hi, &scale).is_negative());
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) / 2;
        if scaled_quartic(&mid, &scale).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(FixedReal::new(round_div_pow10(&lo, GUARD_DIGITS), digits))
}

/// `(1 - sqrt(8 sqrt(2) - 11)) / 2` evaluated with integer square roots.
pub fn quartic_root_closed_form(digits: u32) -> FixedReal {
    let scale = pow10(digits + GUARD_DIGITS);
    let sqrt2: BigInt = (BigInt::from(2) * &scale * &scale).sqrt();
    let inner: BigInt = 8 * sqrt2 - 11 * &scale;
    let root = (inner * &scale).sqrt();
    let x = (&scale - root) / 2;
    FixedReal::new(round_div_pow10(&x, GUARD_DIGITS), digits)
}

/// `|quartic(x)|` as a float.
pub fn quartic_residual(x: &FixedReal) -> f64 {
    let scale = pow10(x.digits);
    let v = scaled_quartic(&x.value, &scale).abs();
    let s4 = num_traits::pow(scale, 4);
    // ratio of two big integers, computed from their leading bits
    (ln_big(&v) - ln_big(&s4)).exp()
}

/// Natural log of a positive big integer.
pub fn ln_big(v: &BigInt) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 64 {
        return v.to_f64().expect("small integer").ln();
    }
    let shift = bits - 64;
    let top: BigInt = v >> shift;
    top.to_f64().expect("64-bit integer").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Result of [`estimate_k`].
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticEstimate {
    pub x0: f64,
    pub c: f64,
    #[serde(rename = "N")]
    pub n_used: usize,
    #[serde(rename = "K_estimate")]
    pub k_estimate: f64,
    pub beta: f64,
    /// `(n, s(n) x0^n n^{3/2})` at `N/2` and `N`.
    #[serde(skip)]
    pub raw: Vec<(usize, f64)>,
}

/// `s(n) x0^n n^{3/2}` for `n = 1..=s.len()-1`, from exact counts.
pub fn k_sequence(s: &[BigInt], x0: f64) -> Vec<f64> {
    let ln_x0 = x0.ln();
    s.iter()
        .enumerate()
        .map(|(n, v)| {
            if n == 0 || v.is_zero() {
                0.0
            } else {
                (ln_big(v) + n as f64 * ln_x0 + 1.5 * (n as f64).ln()).exp()
            }
        })
        .collect()
}

/// Estimates `K` from exact `s(n)` up to `n`, extrapolating the `O(1/n)`
/// error away with `2 K_{2m} - K_m`, `m = n/2`.
pub fn estimate_k(n: usize) -> Result<AsymptoticEstimate> {
    estimate_k_with_precision(n, 30)
}

/// [`estimate_k`] with the root computed to `digits` decimals.
pub fn estimate_k_with_precision(n: usize, digits: u32) -> Result<AsymptoticEstimate> {
    if n < 100 {
        return Err(Error::InvalidArgument(
            "estimate needs at least 100 terms".into(),
        ));
    }
    let root = quartic_smallest_root(digits)?;
    let x0 = root.to_f64();
    let c = root.recip().to_f64();
    let s = counts(&p_closed_form(n)?);
    let k = k_sequence(&s, x0);
    let m = n / 2;
    Ok(AsymptoticEstimate {
        x0,
        c,
        n_used: n,
        k_estimate: 2.0 * k[2 * m] - k[m],
        beta: 0.5,
        raw: vec![(m, k[m]), (2 * m, k[2 * m])],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_by_two_routes() {
        let a = quartic_smallest_root(40).unwrap();
        let b = quartic_root_closed_form(40);
        assert!(a.ulps_apart(&b) <= BigInt::from(1));
        assert!(a.to_string().starts_with("0.2199515671420"));
        assert!(quartic_residual(&a) < 1e-38);
        assert!(quartic_smallest_root(5).is_err());
    }

    #[test]
    fn growth_constant() {
        let x0 = quartic_smallest_root(20).unwrap();
        let c = x0.recip();
        assert!(c.to_string().starts_with("4.5464"));
        assert!((c.to_f64() * x0.to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fixed_real_rendering() {
        assert_eq!(FixedReal::new(BigInt::from(5), 3).to_string(), "0.005");
        assert_eq!(
            FixedReal::new(BigInt::from(-12345), 2).to_string(),
            "-123.45"
        );
    }

    #[test]
    fn ln_of_large_integers() {
        let v = num_traits::pow(BigInt::from(10), 300);
        assert!((ln_big(&v) - 300.0 * 10f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn small_n_rejected() {
        assert!(estimate_k(50).is_err());
    }
}
