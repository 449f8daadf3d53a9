//! Polynomials in `q` over the rationals and the field of rational functions
//! they generate.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{is_nonneg_integer, Field};

/// Dense polynomial in `q`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_int(c)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    fn lead(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.lead().expect("nonzero divisor").recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::default(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Self::default(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Coefficients as integers when all are non-negative integers.
    pub fn to_counts(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| is_nonneg_integer(c).then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for QPoly {
    /// Ascending degree, every coefficient written: `0 + 1 q + 1 q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, " + {c} q")?,
                _ => write!(f, " + {c} q^{k}")?,
            }
        }
        Ok(())
    }
}

/// A reduced ratio of polynomials in `q` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Self { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::from_ints(&[1]),
        }
    }

    /// `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::monomial(1))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// The polynomial, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    /// `None` when `q` is a pole.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        (!d.is_zero()).then(|| self.num.eval(q) / d)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::from_ints(&[1]);
            return;
        }
        if self.den.is_constant() {
            let c = self.den.coeff(0).recip();
            self.num = self.num.scale(&c);
            self.den = QPoly::from_ints(&[1]);
            return;
        }
        if self.den.is_monomial() {
            let k = self
                .den
                .valuation()
                .expect("nonzero")
                .min(self.num.valuation().expect("nonzero"));
            let c = self.den.lead().expect("nonzero").recip();
            self.num = self.num.shift_down(k).scale(&c);
            self.den = self.den.shift_down(k).scale(&c);
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let c = self.den.lead().expect("nonzero").recip();
        self.num = self.num.scale(&c);
        self.den = self.den.scale(&c);
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        Self::from_poly(QPoly::default())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRational {
    fn one() -> Self {
        Self::from_poly(QPoly::from_ints(&[1]))
    }
}

impl Add for QRational {
    type Output = QRational;

    fn add(self, other: Self) -> Self {
        self.add_ref(&other)
    }
}

impl Mul for QRational {
    type Output = QRational;

    fn mul(self, other: Self) -> Self {
        self.mul_ref(&other)
    }
}

impl Field for QRational {
    fn from_int(n: i64) -> Self {
        Self::from_poly(QPoly::from_ints(&[n]))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn neg_ref(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn poly_division_and_gcd() {
        // (q+1)(q+2) / (q+1)
        let a = poly(&[2, 3, 1]);
        let (quo, rem) = a.div_rem(&poly(&[1, 1]));
        assert_eq!(quo, poly(&[2, 1]));
        assert!(rem.is_zero());
        let g = poly(&[2, 3, 1]).gcd(&poly(&[3, 4, 1]));
        assert_eq!(g, poly(&[1, 1]));
        assert_eq!(poly(&[1, 1]).gcd(&poly(&[2, 1])), poly(&[1]));
    }

    #[test]
    fn rational_functions_reduce() {
        let r = QRational::new(poly(&[2, 3, 1]), poly(&[2, 2]));
        assert_eq!(
            r.as_poly(),
            Some(&QPoly::new(vec![
                BigRational::from_int(1),
                BigRational::new(1.into(), 2.into()),
            ]))
        );
        let q = QRational::q();
        let inv_q = q.inv().unwrap();
        assert_eq!(q.mul_ref(&inv_q), QRational::one());
        // (1 + 1/q) * q / (q + 1) = 1
        let one_plus = QRational::one().add_ref(&inv_q);
        let back = one_plus
            .mul_ref(&q)
            .mul_ref(&QRational::from_poly(poly(&[1, 1])).inv().unwrap());
        assert_eq!(back, QRational::one());
        assert!(QRational::one().sub_ref(&QRational::one()).is_zero());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(poly(&[0, 1, 1]).to_string(), "0 + 1 q + 1 q^2");
        assert_eq!(QPoly::default().to_string(), "0");
        assert_eq!(poly(&[0, 3]).to_counts().unwrap(), vec![0.into(), 3.into()]);
        assert!(poly(&[0, -3]).to_counts().is_none());
    }

    #[test]
    fn evaluation() {
        let r = QRational::new(poly(&[0, 1]), poly(&[1, 1]));
        assert_eq!(
            r.eval(&BigRational::from_int(1)),
            Some(BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(r.eval(&BigRational::from_int(-1)), None);
    }
}
