//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of truncation order `N` stores exactly the coefficients
//! `c_0..=c_N`; nothing beyond `x^N` is known. Binary operations return the
//! smaller of the operand orders, and operations that lose precision (division
//! by a power of `x`, differentiation) lower the order accordingly, so every
//! emitted coefficient is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, int, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series with coefficients `coeffs` and truncation order `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always knows at least `c_0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series { coeffs }
    }

    /// Polynomial coefficients padded with zeros (or cut) to `order`.
    pub fn from_poly(coeffs: &[Rational], order: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, Rational::zero());
        Series { coeffs: c }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let c: Vec<Rational> = coeffs.iter().map(|&v| int(v)).collect();
        Self::from_poly(&c, order)
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `x`, truncated at `order`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^n`. Panics when `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    /// Drops coefficients above `order`; errors if `order` exceeds what is known.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order() {
            return Err(Error::InsufficientTruncation { needed: order, available: self.order() });
        }
        Ok(Series { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Truncates to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Series {
        let n = order.min(self.order());
        Series { coeffs: self.coeffs[..=n].to_vec() }
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn x_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the last nonzero coefficient within the truncation window.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    fn zip_with(&self, other: &Series, op: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        let n = self.order().min(other.order());
        let coeffs = self.coeffs[..=n].iter().zip(&other.coeffs[..=n]).map(|(a, b)| op(a, b)).collect();
        Series { coeffs }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn cauchy_mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = acc.cauchy_mul(self);
        }
        acc
    }

    /// Multiplication by `x`; the order grows by one since `x^{N+1}` is now known.
    pub fn mul_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Division by `x^v`, which requires the first `v` coefficients to vanish.
    pub fn div_x_pow(&self, v: usize) -> Result<Series> {
        if v > self.order() {
            return Err(Error::InsufficientTruncation { needed: v, available: self.order() });
        }
        if let Some(i) = self.coeffs[..v].iter().position(|c| !c.is_zero()) {
            return Err(Error::OrderMismatch { divisor: v, dividend: i });
        }
        Ok(Series { coeffs: self.coeffs[v..].to_vec() })
    }

    /// Multiplicative inverse; requires `a_0 != 0`.
    pub fn reciprocal(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm("reciprocal argument"));
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[m - k];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// `self / divisor`, cancelling the common power of `x` first.
    ///
    /// The result order is `min(N_self, N_divisor) - v` where `v` is the
    /// x-order of the divisor.
    pub fn divide(&self, divisor: &Series) -> Result<Series> {
        let v = divisor.x_order().ok_or(Error::ZeroDivisor)?;
        let num = self.div_x_pow(v)?;
        let den = divisor.div_x_pow(v)?;
        Ok(num.cauchy_mul(&den.reciprocal()?))
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    ///
    /// If `inner` has x-order `v`, coefficient `n` of the result only uses
    /// `self_j` for `j <= n / v`, so the result order is
    /// `min(N_inner, v (N_self + 1) - 1)`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerOrderZero);
        }
        let Some(v) = inner.x_order() else {
            return Ok(Series::constant(self.coeffs[0].clone(), inner.order()));
        };
        let n = inner.order().min(v * (self.order() + 1) - 1);
        let inner = inner.truncated(n);
        let top = self.order().min(n / v);
        let mut acc = Series::constant(self.coeffs[top].clone(), n);
        for j in (0..top).rev() {
            acc = acc.cauchy_mul(&inner);
            acc.coeffs[0] += &self.coeffs[j];
        }
        Ok(acc)
    }

    /// Compositional inverse `v` with `w(v(x)) = x = v(w(x))`.
    ///
    /// Solved coefficient by coefficient: the `x^n` coefficient of `w(v)` is
    /// `w_1 v_n` plus terms in `v_1..v_{n-1}` only.
    pub fn comp_inverse(&self) -> Result<Series> {
        let n = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        if n == 0 {
            return Err(Error::InsufficientTruncation { needed: 1, available: 0 });
        }
        let w1 = &self.coeffs[1];
        if w1.is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut v = Series::zero(n);
        v.coeffs[1] = w1.recip();
        for m in 2..=n {
            let partial = self.truncated(m).compose(&v.truncated(m))?;
            let c = partial.coeffs[m].clone();
            v.coeffs[m] = -(c / w1);
        }
        Ok(v)
    }

    /// Coefficient-wise product.
    pub fn hadamard(&self, other: &Series) -> Series {
        self.zip_with(other, |a, b| a * b)
    }

    /// `sum x^n / h_n`, the inverse for the Hadamard product.
    pub fn hadamard_reciprocal(&self) -> Result<Series> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if c.is_zero() { Err(Error::NotHadamardUnit { index: i }) } else { Ok(c.recip()) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Series { coeffs })
    }

    /// Formal derivative; order drops by one. A series of order 0 carries no
    /// information about its derivative.
    pub fn derivative(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 {
            return Err(Error::InsufficientTruncation { needed: 1, available: 0 });
        }
        let coeffs = (0..n).map(|k| &self.coeffs[k + 1] * int(k as i64 + 1)).collect();
        Ok(Series { coeffs })
    }

    /// Generators for the series used by the classical families.
    ///
    /// Supported: `one`, `geometric` (1/(1-x)), `exp`, `neglog1m` (-log(1-x)),
    /// `logratio` (log((1+x)/(1-x))), `inv_square` (1/(1-x)^2), `exp_neg_sq`
    /// (e^{-x^2}), `x_over_logratio` (x / log((1+x)/(1-x))) and `poly:<list>`.
    pub fn named(name: &str, order: usize) -> Result<Series> {
        let n = order;
        let coeffs: Vec<Rational> = match name {
            "one" => return Ok(Series::one(n)),
            "geometric" => vec![Rational::one(); n + 1],
            "exp" => (0..=n).map(|k| factorial(k).recip()).collect(),
            "neglog1m" => (0..=n).map(|k| if k == 0 { Rational::zero() } else { int(k as i64).recip() }).collect(),
            "logratio" => (0..=n)
                .map(|k| if k % 2 == 1 { int(2) / int(k as i64) } else { Rational::zero() })
                .collect(),
            "inv_square" => (0..=n).map(|k| int(k as i64 + 1)).collect(),
            "exp_neg_sq" => (0..=n)
                .map(|k| {
                    if k % 2 == 0 {
                        let m = k / 2;
                        let sign = if m % 2 == 0 { int(1) } else { int(-1) };
                        sign / factorial(m)
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
            "x_over_logratio" => {
                let l = Series::named("logratio", n + 1)?;
                return Series::x(n + 1).divide(&l);
            }
            _ => {
                if let Some(list) = name.strip_prefix("poly:") {
                    return Ok(Series::from_poly(&parse_list(list)?, n));
                }
                return Err(Error::UnknownName(name.to_string()));
            }
        };
        Ok(Series { coeffs })
    }

    /// Parses the series text format at truncation order `order`.
    ///
    /// A term is either a named token (see [`Series::named`]) or a literal
    /// comma-separated coefficient list such as `1/2,0,-1/2`, read as a
    /// polynomial. Terms joined by `*` are multiplied.
    pub fn parse(text: &str, order: usize) -> Result<Series> {
        let mut acc: Option<Series> = None;
        for factor in text.split('*') {
            let s = parse_factor(factor.trim(), order)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.cauchy_mul(&s),
            });
        }
        acc.ok_or_else(|| Error::Parse("empty series".into()))
    }

    /// Comma-separated coefficients `c_0,...,c_N`.
    pub fn to_text(&self) -> String {
        join(&self.coeffs)
    }

    /// Like [`Series::to_text`] but with trailing zeros dropped (at least `c_0` is kept).
    pub fn to_trimmed_text(&self) -> String {
        let end = self.degree().map_or(1, |d| d + 1);
        join(&self.coeffs[..end])
    }
}

fn join(c: &[Rational]) -> String {
    c.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_factor(token: &str, order: usize) -> Result<Series> {
    if token.is_empty() {
        return Err(Error::Parse("empty series term".into()));
    }
    let literal = token.chars().all(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+' | ',' | ' '));
    if literal {
        Ok(Series::from_poly(&parse_list(token)?, order))
    } else {
        Series::named(token, order)
    }
}

/// Comma-separated rationals.
pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={})", self.to_text(), self.order())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.cauchy_mul(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::testutil::{order_one, series_of, small_rational, unit_series};
    use proptest::prelude::*;

    fn s(c: &[i64], n: usize) -> Series {
        Series::from_ints(c, n)
    }

    fn q(c: &[(i64, i64)]) -> Series {
        Series::new(c.iter().map(|&(p, d)| ratio(p, d)).collect())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1, 1], 3) + &s(&[1, -1], 3), s(&[2], 3));
        let a = s(&[3, 0, 7, 1, 2, 9], 5);
        assert_eq!(&Series::zero(5) + &a, a);
        // truncation follows the smaller operand
        let sum = &s(&[1, 2, 3], 2) + &s(&[1, 1], 4);
        assert_eq!(sum, s(&[2, 3, 3], 2));
        assert_eq!(sum.order(), 2);
    }

    #[test]
    fn cauchy_mul_examples() {
        assert_eq!(s(&[1, -1], 3).cauchy_mul(&Series::named("geometric", 3).unwrap()), s(&[1], 3));
        assert_eq!(s(&[1, 1], 2).pow(2), s(&[1, 2, 1], 2));
        let sq = s(&[1, -2, 1], 4);
        assert_eq!(sq.cauchy_mul(&sq), s(&[1, -4, 6, -4, 1], 4));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, -1], 5).reciprocal().unwrap(), Series::named("geometric", 5).unwrap());
        assert_eq!(s(&[1], 3).reciprocal().unwrap(), s(&[1], 3));
        let pell_g = q(&[(1, 2), (0, 1), (-1, 2), (0, 1), (0, 1)]);
        assert_eq!(pell_g.reciprocal().unwrap(), s(&[2, 0, 2, 0, 2], 4));
        assert_eq!(s(&[0, 1], 3).reciprocal(), Err(Error::ZeroConstantTerm("reciprocal argument")));
    }

    #[test]
    fn divide_examples() {
        let r = s(&[0, 0, 1], 4).divide(&s(&[0, 1], 4)).unwrap();
        assert_eq!(r, s(&[0, 1], 3));
        // x / (2x + 2x^3/3 + 2x^5/5); hand division gives 1/2 - x^2/6 - 2x^4/45
        let den = q(&[(0, 1), (2, 1), (0, 1), (2, 3), (0, 1), (2, 5)]);
        let r = s(&[0, 1], 5).divide(&den).unwrap();
        assert_eq!(r, q(&[(1, 2), (0, 1), (-1, 6), (0, 1), (-2, 45)]));
        assert_eq!(s(&[1, 0, -1], 4).divide(&s(&[1, -1], 4)).unwrap(), s(&[1, 1], 4));
        assert_eq!(s(&[1, 1], 4).divide(&s(&[0, 1], 4)), Err(Error::OrderMismatch { divisor: 1, dividend: 0 }));
        assert_eq!(s(&[1], 4).divide(&Series::zero(4)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn compose_examples() {
        let geo = Series::named("geometric", 6).unwrap();
        let rate = s(&[0, 1], 6).divide(&s(&[1, -1], 6)).unwrap();
        // 1/(1 - x/(1-x)) = (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
        let r = geo.compose(&rate).unwrap();
        let expect = s(&[1, -1], 6).divide(&s(&[1, -2], 6)).unwrap();
        assert_eq!(r, expect);
        assert_eq!(r, s(&[1, 1, 2, 4, 8, 16, 32], 6));

        let a = s(&[3, -1, 4, 1, 5], 4);
        assert_eq!(a.compose(&Series::x(4)).unwrap(), a);
        let w = s(&[0, 2, 7, -1, 3], 4);
        assert_eq!(Series::x(4).compose(&w).unwrap(), w);
        assert_eq!(a.compose(&s(&[1, 1], 4)), Err(Error::InnerOrderZero));
    }

    #[test]
    fn compose_with_higher_order_inner_keeps_extra_precision() {
        // exp known to x^4 composed with -x^2 known to x^8 is exact up to x^8
        let e = Series::named("exp", 4).unwrap();
        let r = e.compose(&s(&[0, 0, -1], 8)).unwrap();
        assert_eq!(r.order(), 8);
        assert_eq!(r, Series::named("exp_neg_sq", 8).unwrap());
    }

    #[test]
    fn comp_inverse_examples() {
        assert_eq!(Series::x(5).comp_inverse().unwrap(), Series::x(5));
        let w = s(&[0, 1], 6).divide(&s(&[1, -1], 6)).unwrap().truncated(5);
        let expect = s(&[0, 1], 6).divide(&s(&[1, 1], 6)).unwrap().truncated(5);
        assert_eq!(w.comp_inverse().unwrap(), expect);
        assert_eq!(s(&[0, 2], 4).comp_inverse().unwrap(), q(&[(0, 1), (1, 2), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(s(&[1, 1], 3).comp_inverse(), Err(Error::NotInvertible));
        assert_eq!(s(&[0, 0, 1], 3).comp_inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn hadamard_examples() {
        let a = s(&[4, -2, 9, 1], 3);
        assert_eq!(a.hadamard(&Series::named("geometric", 3).unwrap()), a);
        let r = s(&[1, 2, 1], 2).hadamard(&Series::named("exp", 2).unwrap());
        assert_eq!(r, q(&[(1, 1), (2, 1), (1, 2)]));
        assert_eq!(a.hadamard(&Series::zero(3)), Series::zero(3));
    }

    #[test]
    fn hadamard_reciprocal_examples() {
        let g = Series::named("geometric", 4).unwrap();
        assert_eq!(g.hadamard_reciprocal().unwrap(), g);
        let e = Series::named("exp", 3).unwrap();
        assert_eq!(e.hadamard_reciprocal().unwrap(), s(&[1, 1, 2, 6], 3));
        assert_eq!(s(&[1, 1, 0, 1], 3).hadamard_reciprocal(), Err(Error::NotHadamardUnit { index: 2 }));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(s(&[1, 1, 1], 2).derivative().unwrap(), s(&[1, 2], 1));
        assert_eq!(s(&[7], 3).derivative().unwrap(), Series::zero(2));
        let l = Series::named("neglog1m", 3).unwrap();
        assert_eq!(l.derivative().unwrap(), Series::named("geometric", 2).unwrap());
        assert!(Series::one(0).derivative().is_err());
    }

    #[test]
    fn named_series_examples() {
        assert_eq!(Series::named("exp", 4).unwrap(), q(&[(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)]));
        let l = Series::named("logratio", 5).unwrap();
        assert_eq!(l, q(&[(0, 1), (2, 1), (0, 1), (2, 3), (0, 1), (2, 5)]));
        // exp(log((1+x)/(1-x))) = (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
        let back = Series::named("exp", 5).unwrap().compose(&l).unwrap();
        assert_eq!(back, s(&[1, 2, 2, 2, 2, 2], 5));
        assert_eq!(Series::named("poly:1,0,-1", 4).unwrap(), s(&[1, 0, -1], 4));
        assert_eq!(Series::named("sin", 3), Err(Error::UnknownName("sin".into())));
    }

    #[test]
    fn parse_text_format() {
        assert_eq!(Series::parse("1/2,0,-1/2", 3).unwrap(), q(&[(1, 2), (0, 1), (-1, 2), (0, 1)]));
        let h = Series::parse("1/2*exp_neg_sq", 4).unwrap();
        assert_eq!(h, q(&[(1, 2), (0, 1), (-1, 2), (0, 1), (1, 4)]));
        assert_eq!(Series::parse("geometric*1,-1", 3).unwrap(), s(&[1], 3));
        assert!(Series::parse("1,x", 3).is_err());
        assert_eq!(s(&[1, -1, 0, 0], 3).to_trimmed_text(), "1,-1");
        assert_eq!(Series::zero(2).to_trimmed_text(), "0");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ring_axioms((a, b, c) in (0usize..8).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn reciprocal_is_inverse(a in (0usize..=16).prop_flat_map(unit_series)) {
            let prod = a.cauchy_mul(&a.reciprocal().unwrap());
            prop_assert_eq!(prod, Series::one(a.order()));
        }

        #[test]
        fn compose_is_associative(a in series_of(6), w in order_one(6), v in order_one(6)) {
            let left = a.compose(&w).unwrap().compose(&v).unwrap();
            let right = a.compose(&w.compose(&v).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn comp_inverse_two_sided(w in (1usize..=8).prop_flat_map(order_one)) {
            let v = w.comp_inverse().unwrap();
            let id = Series::x(w.order());
            prop_assert_eq!(w.compose(&v).unwrap(), id.clone());
            prop_assert_eq!(v.compose(&w).unwrap(), id);
        }

        #[test]
        fn hadamard_laws(a in series_of(6), b in series_of(6), c in series_of(6)) {
            prop_assert_eq!(a.hadamard(&b), b.hadamard(&a));
            prop_assert_eq!(a.hadamard(&b).hadamard(&c), a.hadamard(&b.hadamard(&c)));
            prop_assert_eq!(a.hadamard(&Series::named("geometric", 6).unwrap()), a);
        }

        #[test]
        fn derivative_linear_and_leibniz(a in series_of(7), b in series_of(7), k in small_rational()) {
            let d = |s: &Series| s.derivative().unwrap();
            prop_assert_eq!(d(&(&a + &b.scale(&k))), &d(&a) + &d(&b).scale(&k));
            let lhs = d(&(&a * &b));
            let rhs = &(&d(&a) * &b.truncated(6)) + &(&a.truncated(6) * &d(&b));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
