//! Generating functions for 1-stack-sortable sock patterns under foot-sorting.
//!
//! `P(x) = sum s(n) x^n` and `P(x, q) = sum s(n, r) x^n q^r` are each
//! expanded two independent ways: from the algebraic closed form (series
//! square root, then exact division by the `x^2 - x` denominator) and by
//! solving the structural functional equation degree by degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{is_nonneg_integer, Field};
use super::power::{BiSeries, Series, UniSeries};
use super::qrational::{QPoly, QRational};
use crate::error::{Error, Result};

/// `1 - 6x + 7x^2 - 2x^3 + x^4`.
pub const QUARTIC: [i64; 5] = [1, -6, 7, -2, 1];

fn ensure_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "series order must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `((-1 + 3x - 3x^2) + sqrt(1 - 6x + 7x^2 - 2x^3 + x^4)) / (4(x^2 - x))`
/// through `x^n`.
pub fn p_closed_form(n: usize) -> Result<UniSeries> {
    ensure_order(n)?;
    // dividing by x costs one order
    let order = n + 1;
    let root = UniSeries::from_ints(&QUARTIC, order).sqrt()?;
    let num = UniSeries::from_ints(&[-1, 3, -3], order).add(&root);
    let den = UniSeries::from_ints(&[0, -4, 4], order);
    let p = UniSeries::divide_at_valuation(&num, &den)?;
    check_counts(&p)?;
    Ok(p)
}

/// Solves `P = B + outer * W / (1 - x)` with `W = A / (1 - A)` and
/// `A = weight * P * y`, one coefficient at a time. Coefficient `n` of the
/// right side reads only `P_0..P_{n-1}`, which needs `y_0 = 0`.
fn solve_fixed_point<C: Field>(
    base: &Series<C>,
    kernel: &Series<C>,
    weight: &C,
    outer: &C,
) -> Result<Series<C>> {
    if !kernel.coeff(0).is_zero() {
        return Err(Error::Series(
            "functional equation kernel has a constant term; coefficients would depend on themselves"
                .into(),
        ));
    }
    let order = base.order().min(kernel.order());
    let mut p: Vec<C> = Vec::with_capacity(order + 1);
    let mut a: Vec<C> = Vec::with_capacity(order + 1);
    let mut w: Vec<C> = Vec::with_capacity(order + 1);
    let mut w_prefix = C::zero();
    for n in 0..=order {
        let mut conv = C::zero();
        for (j, pj) in p.iter().enumerate() {
            let y = kernel.coeff(n - j);
            if !y.is_zero() {
                conv = conv.add_ref(&pj.mul_ref(y));
            }
        }
        a.push(weight.mul_ref(&conv));
        let mut wn = a[n].clone();
        for j in 1..n {
            if !a[j].is_zero() && !w[n - j].is_zero() {
                wn = wn.add_ref(&a[j].mul_ref(&w[n - j]));
            }
        }
        w_prefix = w_prefix.add_ref(&wn);
        w.push(wn);
        p.push(base.coeff(n).add_ref(&outer.mul_ref(&w_prefix)));
    }
    Ok(Series::new(p, order))
}

/// `P = x/(1-x) + (1/(2(1-x))) * (2P x/(1-x)) / (1 - 2P x/(1-x))`.
pub fn p_functional_eq(n: usize) -> Result<UniSeries> {
    ensure_order(n)?;
    let y = geometric_tail::<BigRational>(n, BigRational::one());
    let p = solve_fixed_point(
        &y,
        &y,
        &BigRational::from_int(2),
        &BigRational::new(1.into(), 2.into()),
    )?;
    check_counts(&p)?;
    Ok(p)
}

/// `c x / (1 - x)` through `x^n`.
fn geometric_tail<C: Field>(n: usize, c: C) -> Series<C> {
    let mut coeffs = vec![C::zero()];
    coeffs.extend(std::iter::repeat_n(c, n));
    Series::new(coeffs, n)
}

fn q_poly(c: &[i64]) -> QRational {
    QRational::from_poly(QPoly::from_ints(c))
}

/// Bivariate closed form through `x^n`:
/// `((-q + (q^2+2q)x - (q^2+2q)x^2) + q sqrt(D)) / (2(q+1)(x^2 - x))` with
/// `D = 1 - 2(q+2)x + (q^2+2q+4)x^2 - 2q^2 x^3 + q^2 x^4`.
pub fn pq_closed_form(n: usize) -> Result<BiSeries> {
    ensure_order(n)?;
    let order = n + 1;
    let radicand = BiSeries::new(
        vec![
            q_poly(&[1]),
            q_poly(&[-4, -2]),
            q_poly(&[4, 2, 1]),
            q_poly(&[0, 0, -2]),
            q_poly(&[0, 0, 1]),
        ],
        order,
    );
    let root = radicand.sqrt()?.scale(&QRational::q());
    let linear = BiSeries::new(
        vec![q_poly(&[0, -1]), q_poly(&[0, 2, 1]), q_poly(&[0, -2, -1])],
        order,
    );
    let num = linear.add(&root);
    let den = BiSeries::new(
        vec![QRational::zero(), q_poly(&[-2, -2]), q_poly(&[2, 2])],
        order,
    );
    let p = BiSeries::divide_at_valuation(&num, &den)?;
    check_bivariate_counts(&p)?;
    Ok(p)
}

/// `P = qx/(1-x) + (q/((1+1/q)(1-x))) * (P(1+1/q) y) / (1 - P(1+1/q) y)`,
/// `y = x/(1-x)`, solved in the field of rational functions of `q`.
pub fn pq_functional_eq(n: usize) -> Result<BiSeries> {
    ensure_order(n)?;
    let q = QRational::q();
    let inv_q = q.inv().expect("q is nonzero");
    let weight = QRational::one().add_ref(&inv_q);
    let outer = q.mul_ref(&weight.inv().expect("1 + 1/q is nonzero"));
    let base = geometric_tail(n, q);
    let kernel = geometric_tail(n, QRational::one());
    let p = solve_fixed_point(&base, &kernel, &weight, &outer)?;
    check_bivariate_counts(&p)?;
    Ok(p)
}

fn check_counts(p: &UniSeries) -> Result<()> {
    if !p.coeff(0).is_zero() {
        return Err(Error::Series("constant term of P must be 0".into()));
    }
    match p.coeffs().iter().position(|c| !is_nonneg_integer(c)) {
        Some(k) => Err(Error::Series(format!(
            "coefficient of x^{k} is {} (not a non-negative integer)",
            p.coeff(k)
        ))),
        None => Ok(()),
    }
}

fn check_bivariate_counts(p: &BiSeries) -> Result<()> {
    for (k, c) in p.coeffs().iter().enumerate() {
        let ok = c.as_poly().is_some_and(|poly| poly.to_counts().is_some());
        if !ok {
            return Err(Error::Series(format!(
                "coefficient of x^{k} is {c} (not a polynomial in q with non-negative integer coefficients)"
            )));
        }
    }
    if !p.coeff(0).is_zero() {
        return Err(Error::Series("constant term of P must be 0".into()));
    }
    Ok(())
}

/// Coefficients of a checked univariate counting series as integers.
pub fn counts(p: &UniSeries) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

/// `[x^n]` of a checked bivariate series as a list indexed by `r`.
pub fn refined_counts(p: &BiSeries, n: usize) -> Vec<BigInt> {
    p.coeff(n)
        .as_poly()
        .and_then(QPoly::to_counts)
        .expect("bivariate series was checked on construction")
}

/// Sets `q = 1`.
pub fn at_q_one(p: &BiSeries) -> UniSeries {
    let one = BigRational::one();
    Series::new(
        p.coeffs()
            .iter()
            .map(|c| c.eval(&one).unwrap_or_else(BigRational::zero))
            .collect(),
        p.order(),
    )
}
