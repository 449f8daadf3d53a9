//! Truncated formal power series over an exact field.

use num_rational::BigRational;

use super::field::Field;
use super::qrational::QRational;
use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

/// Series with rational coefficients.
pub type UniSeries = Series<BigRational>;
/// Series with coefficients rational functions of `q`.
pub type BiSeries = Series<QRational>;

impl<C: Field> Series<C> {
    /// Known through `x^order`; missing coefficients are zero.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].add_ref(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].sub_ref(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self { coeffs: out }
    }

    /// Drops the first `k` coefficients (which must be zero): divides by `x^k`.
    fn shift_down(&self, k: usize) -> Self {
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `self / den` for `den` with invertible constant term, by the recurrence
    /// `q_n = (a_n - sum_{i>=1} d_i q_{n-i}) / d_0` over nonzero `d_i`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let d0_inv = den.coeffs[0]
            .inv()
            .ok_or_else(|| Error::Series("division by a series with zero constant term".into()))?;
        let n = self.order().min(den.order());
        let support: Vec<usize> = (1..=n).filter(|&i| !den.coeffs[i].is_zero()).collect();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for &i in support.iter().take_while(|&&i| i <= k) {
                acc = acc.sub_ref(&den.coeffs[i].mul_ref(&out[k - i]));
            }
            out.push(acc.mul_ref(&d0_inv));
        }
        Ok(Self { coeffs: out })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// The square root with constant term 1, from `g^2 = f` solved for `g_n`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("sqrt needs constant term 1".into()));
        }
        let half = C::from_int(2).inv().expect("2 is invertible");
        let n = self.order();
        let mut g: Vec<C> = Vec::with_capacity(n + 1);
        g.push(C::one());
        for k in 1..=n {
            // sum_{0<i<k} g_i g_{k-i}, pairing i with k - i
            let mut cross = C::zero();
            for i in 1..k.div_ceil(2) {
                cross = cross.add_ref(&g[i].mul_ref(&g[k - i]));
            }
            cross = cross.add_ref(&cross);
            if k % 2 == 0 {
                cross = cross.add_ref(&g[k / 2].mul_ref(&g[k / 2]));
            }
            g.push(self.coeffs[k].sub_ref(&cross).mul_ref(&half));
        }
        Ok(Self { coeffs: g })
    }

    /// Exact quotient after cancelling the common power of `x`.
    ///
    /// Requires `valuation(den) <= valuation(num)`; the result is known
    /// through order `min(N_num, N_den) - valuation(den)`. A nonzero
    /// remainder is reported as an error.
    pub fn divide_at_valuation(num: &Self, den: &Self) -> Result<Self> {
        let v = den
            .valuation()
            .ok_or_else(|| Error::Series("division by a zero series".into()))?;
        if let Some(vn) = num.valuation() {
            if vn < v {
                return Err(Error::Series(format!(
                    "valuation mismatch: numerator {vn} < denominator {v}"
                )));
            }
        }
        let order = num.order().min(den.order());
        if order < v {
            return Err(Error::Series("nothing known after cancelling x^v".into()));
        }
        let a = num.truncate(order).shift_down(v);
        let d = den.truncate(order).shift_down(v);
        let quot = a.div(&d)?;
        if d.mul(&quot) != a {
            return Err(Error::Series("nonzero remainder in exact division".into()));
        }
        Ok(quot)
    }

    pub fn map<D, F: Fn(&C) -> D>(&self, f: F) -> Vec<D> {
        self.coeffs.iter().map(f).collect()
    }
}
