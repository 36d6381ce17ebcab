//! Polynomial sequences of Riordan type.
//!
//! Row `n` of `T(f|g)` read as `p_n(x) = sum_j d_{n,j} x^j`. The rows obey
//!
//! ```text
//! p_n = ((x - g_1)/g_0) p_{n-1} - (g_2/g_0) p_{n-2} - ... - (g_n/g_0) p_0 + f_n/g_0
//! ```
//!
//! and conversely every sequence built this way is the row sequence of a
//! Riordan array.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binomial, int, pow, Rational};
use crate::riordan::RiordanSpec;
use crate::series::Series;
use crate::triangle::Triangle;

/// Coefficients in increasing powers, stored without trailing zeros so that
/// equality ignores them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

#[derive(Serialize)]
struct PolyJson {
    n: usize,
    coeffs: Vec<String>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients padded with zeros to exactly `len` entries. Panics if the
    /// polynomial does not fit.
    pub fn padded(&self, len: usize) -> Vec<Rational> {
        assert!(self.coeffs.len() <= len, "polynomial longer than {len}");
        let mut c = self.coeffs.clone();
        c.resize(len, Rational::zero());
        c
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Rational::zero());
        c.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: c }
    }

    pub fn evaluate(&self, x0: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        let mut c = vec![Rational::zero()];
        c.extend(self.coeffs.iter().enumerate().map(|(k, v)| v / int(k as i64 + 1)));
        Self::new(c)
    }

    /// `p(s x + t)`.
    pub fn substitute_affine(&self, s: &Rational, t: &Rational) -> Polynomial {
        let lin = Polynomial::new(vec![t.clone(), s.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Multiplies coefficient `k` by `w_k` (a Hadamard product with a series).
    pub fn weight_by(&self, w: &Series) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if d > w.order() {
                return Err(Error::InsufficientTruncation { needed: d, available: w.order() });
            }
        }
        Ok(Self::new(self.coeffs.iter().zip(w.coeffs()).map(|(a, b)| a * b).collect()))
    }

    /// Ascending powers in `var`, e.g. `1 + 3x^2 + x^4` or `1/2 - (2/3)t`.
    pub fn to_text_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{mono}"));
            } else {
                out.push_str(&format!("({mag}){mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_text_in("x")
    }

    /// `{"n": index, "coeffs": [...]}`.
    pub fn to_json(&self, n: usize) -> String {
        serde_json::to_string(&self.json_value(n)).expect("polynomial serializes")
    }

    fn json_value(&self, n: usize) -> PolyJson {
        let coeffs = if self.is_zero() { vec!["0".into()] } else { self.coeffs.iter().map(|c| c.to_string()).collect() };
        PolyJson { n, coeffs }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }
}

/// `p_0, ..., p_{R-1}`, optionally tagged with the array that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeq {
    polys: Vec<Polynomial>,
    spec: Option<RiordanSpec>,
}

impl PolySeq {
    pub fn new(polys: Vec<Polynomial>) -> Self {
        PolySeq { polys, spec: None }
    }

    pub fn with_spec(polys: Vec<Polynomial>, spec: Option<RiordanSpec>) -> Self {
        PolySeq { polys, spec }
    }

    pub fn from_triangle(t: &Triangle) -> Self {
        Self::new(t.rows().iter().map(|r| Polynomial::new(r.clone())).collect())
    }

    /// Coefficient matrix; fails if some `p_n` has degree above `n`.
    pub fn to_triangle(&self) -> Result<Triangle> {
        let mut rows = Vec::with_capacity(self.polys.len());
        for (n, p) in self.polys.iter().enumerate() {
            if p.coeffs().len() > n + 1 {
                return Err(Error::MalformedTriangle { row: n, len: p.coeffs().len(), expected: n + 1 });
            }
            rows.push(p.padded(n + 1));
        }
        Triangle::from_rows(rows)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }

    pub fn spec(&self) -> Option<&RiordanSpec> {
        self.spec.as_ref()
    }

    /// Evaluates every member at `x0`, giving the coefficients of a series.
    pub fn evaluate_all(&self, x0: &Rational) -> Vec<Rational> {
        self.polys.iter().map(|p| p.evaluate(x0)).collect()
    }

    /// One `n: polynomial` line per member.
    pub fn to_text_in(&self, var: &str) -> String {
        self.polys.iter().enumerate().map(|(n, p)| format!("{n}: {}\n", p.to_text_in(var))).collect()
    }

    pub fn to_text(&self) -> String {
        self.to_text_in("x")
    }

    /// `{"polys": [{"n": 0, "coeffs": [...]}, ...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            polys: Vec<PolyJson>,
        }
        let doc = Doc { polys: self.polys.iter().enumerate().map(|(n, p)| p.json_value(n)).collect() };
        serde_json::to_string(&doc).expect("sequence serializes")
    }

    /// Rows as CSV, `R` cells each.
    pub fn to_csv(&self) -> String {
        let width = self.polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(0).max(self.polys.len());
        self.polys
            .iter()
            .map(|p| {
                let mut cells: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                if cells.is_empty() {
                    cells.push("0".into());
                }
                cells.resize(width, String::new());
                cells.join(",") + "\n"
            })
            .collect()
    }
}

/// `p_0..p_{R-1}` read off the rows of `T(f|g)`.
pub fn sequence_from_spec(spec: &RiordanSpec, rows: usize) -> Result<PolySeq> {
    let t = spec.build_triangle(rows)?;
    Ok(PolySeq::with_spec(PolySeq::from_triangle(&t).polys, Some(spec.clone())))
}

/// `p_n` from `p_0..p_{n-1}` by the main recurrence. The sum over `g_i`
/// stops at the last nonzero coefficient of `g`, so a polynomial `g` of
/// degree `m` gives an `m`-term recurrence.
pub fn next_polynomial(prev: &[Polynomial], f: &Series, g: &Series) -> Result<Polynomial> {
    let n = prev.len();
    for s in [f, g] {
        if s.order() < n {
            return Err(Error::InsufficientTruncation { needed: n, available: s.order() });
        }
    }
    let window = g.truncated(n).degree().unwrap_or(0);
    next_polynomial_with_window(prev, f, g, window)
}

/// The main recurrence using only `g_1..g_window`. Agrees with
/// [`next_polynomial`] whenever `g_i = 0` for `window < i <= n`.
pub fn next_polynomial_with_window(
    prev: &[Polynomial],
    f: &Series,
    g: &Series,
    window: usize,
) -> Result<Polynomial> {
    let n = prev.len();
    let last = window.min(n);
    if f.order() < n {
        return Err(Error::InsufficientTruncation { needed: n, available: f.order() });
    }
    if g.order() < last {
        return Err(Error::InsufficientTruncation { needed: last, available: g.order() });
    }
    let g0 = g.coeff(0);
    if g0.is_zero() {
        return Err(Error::ZeroConstantTerm("g"));
    }
    let mut acc = Polynomial::constant(f.coeff(n).clone());
    if n > 0 {
        acc = &acc + &prev[n - 1].mul_x();
    }
    for i in 1..=last {
        let gi = g.coeff(i);
        if !gi.is_zero() {
            acc = &acc - &prev[n - i].scale(gi);
        }
    }
    Ok(acc.scale(&g0.recip()))
}

/// Iterates [`next_polynomial`] from the empty history.
pub fn recurrence_sequence(spec: &RiordanSpec, rows: usize) -> Result<PolySeq> {
    let mut polys = Vec::with_capacity(rows);
    for _ in 0..rows {
        let p = next_polynomial(&polys, spec.f(), spec.g())?;
        polys.push(p);
    }
    Ok(PolySeq::with_spec(polys, Some(spec.clone())))
}

/// `r_n(x) = sum_k p_{n,k} q_k(x)`; the coefficient matrix of the result is
/// the product of the two coefficient matrices.
pub fn umbral_compose(p: &PolySeq, q: &PolySeq) -> Result<PolySeq> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { left: p.len(), right: q.len() });
    }
    let mut out = Vec::with_capacity(p.len());
    for pn in p.polys() {
        let mut acc = Polynomial::zero();
        for (k, c) in pn.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let qk = q.polys.get(k).ok_or(Error::LengthMismatch { left: k + 1, right: q.len() })?;
            acc = &acc + &qk.scale(c);
        }
        out.push(acc);
    }
    let spec = match (p.spec(), q.spec()) {
        (Some(a), Some(b)) => Some(a.product(b)?),
        _ => None,
    };
    Ok(PolySeq::with_spec(out, spec))
}

/// Checks `sum_n p_n(t0) x^n = f / (g - t0 x)` through order `n`.
pub fn bivariate_gf_check(spec: &RiordanSpec, t0: &Rational, n: usize) -> Result<bool> {
    let seq = sequence_from_spec(spec, n + 1)?;
    let lhs = Series::new(seq.evaluate_all(t0));
    let spec = spec.truncated(n);
    let denom = spec.g() - &Series::from_poly(&[Rational::zero(), t0.clone()], n);
    let rhs = spec.f().divide(&denom)?;
    Ok(lhs == rhs)
}

/// Associated sequence of `T(gamma|alpha+beta x) T(f|g) T(c|a+bx)`:
///
/// ```text
/// q_n(x) = (gamma c/(alpha a)) sum_k C(n,k) (-beta/alpha)^{n-k} alpha^{-k} p_k((x-b)/a)
/// ```
pub fn affine_transform_seq(
    p: &PolySeq,
    gamma: &Rational,
    alpha: &Rational,
    beta: &Rational,
    c: &Rational,
    a: &Rational,
    b: &Rational,
) -> Result<PolySeq> {
    for (v, name) in [(gamma, "gamma"), (alpha, "alpha"), (c, "c"), (a, "a")] {
        if v.is_zero() {
            return Err(Error::ZeroParameter(name));
        }
    }
    let lead = gamma * c / (alpha * a);
    let ratio = -beta / alpha;
    let inv_alpha = alpha.recip();
    let s = a.recip();
    let t = -b / a;
    let inner: Vec<Polynomial> = p.polys().iter().map(|pk| pk.substitute_affine(&s, &t)).collect();
    let mut out = Vec::with_capacity(p.len());
    for n in 0..p.len() {
        let mut acc = Polynomial::zero();
        for (k, pk) in inner.iter().enumerate().take(n + 1) {
            let w = binomial(n, k) * pow(&ratio, n - k) * pow(&inv_alpha, k);
            if !w.is_zero() {
                acc = &acc + &pk.scale(&w);
            }
        }
        out.push(acc.scale(&lead));
    }
    let spec = match p.spec() {
        Some(sp) => {
            let order = sp.order();
            let left = RiordanSpec::new(
                Series::constant(gamma.clone(), order),
                Series::from_poly(&[alpha.clone(), beta.clone()], order),
            )?;
            let right =
                RiordanSpec::new(Series::constant(c.clone(), order), Series::from_poly(&[a.clone(), b.clone()], order))?;
            Some(left.product(sp)?.product(&right)?)
        }
        None => None,
    };
    Ok(PolySeq::with_spec(out, spec))
}

/// `q_n = h_0 p_n + h_1 p_{n-1} + ... + h_m p_{n-m}`: the rows of `T(h|1) T(f|g)`.
pub fn toeplitz_premultiply(h: &Polynomial, p: &PolySeq) -> Result<PolySeq> {
    let out = (0..p.len())
        .map(|n| {
            (0..=n).fold(Polynomial::zero(), |acc, i| {
                let hi = h.coeff(i);
                if hi.is_zero() {
                    acc
                } else {
                    &acc + &p.get(n - i).scale(&hi)
                }
            })
        })
        .collect();
    let spec = match p.spec() {
        Some(sp) => {
            let order = sp.order();
            let left = RiordanSpec::new(Series::from_poly(h.coeffs(), order), Series::one(order))?;
            Some(left.product(sp)?)
        }
        None => None,
    };
    Ok(PolySeq::with_spec(out, spec))
}

/// `x^0, x^1, ..., x^{R-1}`, the sequence of the identity array.
pub fn monomials(rows: usize) -> PolySeq {
    PolySeq::with_spec(
        (0..rows).map(|n| Polynomial::monomial(Rational::one(), n)).collect(),
        Some(RiordanSpec::identity(rows.saturating_sub(1))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::testutil::{proper_spec, small_rational, spec_strategy};
    use proptest::prelude::*;

    fn spec(f: &str, g: &str, n: usize) -> RiordanSpec {
        RiordanSpec::parse(f, g, n).unwrap()
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn polynomial_basics() {
        assert_eq!(Polynomial::new(vec![int(1), int(0), int(0)]), poly(&[1]));
        assert_eq!(poly(&[1, 0, 3, 0, 1]).to_text(), "1 + 3x^2 + x^4");
        let p = Polynomial::new(vec![ratio(1, 2), int(0), ratio(-2, 3), int(-1)]);
        assert_eq!(p.to_text_in("t"), "1/2 - (2/3)t^2 - t^3");
        assert_eq!(Polynomial::zero().to_text(), "0");
        assert_eq!(poly(&[1, 0, 3, 0, 1]).to_json(4), r#"{"n":4,"coeffs":["1","0","3","0","1"]}"#);
        assert_eq!(poly(&[1, 2, 1]).derivative(), poly(&[2, 2]));
        assert_eq!(poly(&[1, 2, 1]).antiderivative(), Polynomial::new(vec![int(0), int(1), int(1), ratio(1, 3)]));
        // (1 + x)^2 at x -> 2x - 1
        assert_eq!(poly(&[1, 2, 1]).substitute_affine(&int(2), &int(-1)), poly(&[0, 0, 4]));
    }

    #[test]
    fn evaluation() {
        let f4 = poly(&[1, 0, 3, 0, 1]);
        assert_eq!(f4.evaluate(&int(1)), int(5));
        assert_eq!(f4.evaluate(&int(0)), int(1));
        let fib = sequence_from_spec(&spec("1", "1,0,-1", 6), 7).unwrap();
        let pell = sequence_from_spec(&spec("1/2", "1/2,0,-1/2", 6), 7).unwrap();
        let x0 = ratio(3, 2);
        for n in 0..7 {
            assert_eq!(pell.get(n).evaluate(&x0), fib.get(n).evaluate(&(&x0 * int(2))));
        }
    }

    #[test]
    fn sequences_from_specs() {
        let fib = sequence_from_spec(&spec("1", "1,0,-1", 6), 7).unwrap();
        assert_eq!(fib.get(4), &poly(&[1, 0, 3, 0, 1]));
        let bou = sequence_from_spec(&spec("1,0,3", "1,0,1", 6), 7).unwrap();
        assert_eq!(bou.get(5), &poly(&[0, -3, 0, -1, 0, 1]));
        assert_eq!(sequence_from_spec(&RiordanSpec::identity(5), 6).unwrap(), monomials(6));
    }

    #[test]
    fn next_polynomial_examples() {
        let f = Series::one(6);
        let g = Series::parse("1,0,-1", 6).unwrap();
        let p2 = next_polynomial(&[poly(&[1]), poly(&[0, 1])], &f, &g).unwrap();
        assert_eq!(p2, poly(&[1, 0, 1]));

        let g = Series::parse("1,-2,1", 6).unwrap();
        let b2 = next_polynomial(&[poly(&[1]), poly(&[2, 1])], &f, &g).unwrap();
        assert_eq!(b2, poly(&[3, 4, 1]));

        let f = Series::parse("3,1", 4).unwrap();
        let g = Series::parse("2,5", 4).unwrap();
        assert_eq!(next_polynomial(&[], &f, &g).unwrap(), Polynomial::constant(ratio(3, 2)));
        let short = Series::one(1);
        assert!(next_polynomial(&[poly(&[1]), poly(&[0, 1])], &short, &short).is_err());
    }

    #[test]
    fn umbral_examples() {
        let big_b = sequence_from_spec(&spec("1", "1,-2,1", 7), 8).unwrap();
        let diff = sequence_from_spec(&spec("1,-1", "1", 7), 8).unwrap();
        let small_b = umbral_compose(&diff, &big_b).unwrap();
        assert_eq!(small_b, sequence_from_spec(&spec("1,-1", "1,-2,1", 7), 8).unwrap());
        for n in 1..8 {
            assert_eq!(small_b.get(n), &(big_b.get(n) - big_b.get(n - 1)));
        }
        let fib = sequence_from_spec(&spec("1", "1,0,-1", 7), 8).unwrap();
        assert_eq!(umbral_compose(&fib, &monomials(8)).unwrap().polys(), fib.polys());
        assert_eq!(umbral_compose(&monomials(8), &fib).unwrap().polys(), fib.polys());
        assert!(umbral_compose(&fib, &monomials(7)).is_err());
    }

    #[test]
    fn bivariate_examples() {
        let fib = spec("1", "1,0,-1", 12);
        assert!(bivariate_gf_check(&fib, &int(1), 12).unwrap());
        let values = sequence_from_spec(&fib, 7).unwrap().evaluate_all(&int(1));
        assert_eq!(values, [1, 1, 2, 3, 5, 8, 13].map(int).to_vec());
        let mv = spec("1", "1,-2,1", 12);
        assert!(bivariate_gf_check(&mv, &int(0), 12).unwrap());
        let col: Vec<Rational> = sequence_from_spec(&mv, 6).unwrap().evaluate_all(&int(0));
        assert_eq!(col, (1..=6).map(int).collect::<Vec<_>>());
        // a wrong closed form is rejected: F_n(1) against 1/(1 - x - 2x^2)
        let other = spec("1", "1,0,-2", 12);
        let lhs = Series::new(sequence_from_spec(&fib, 13).unwrap().evaluate_all(&int(1)));
        let rhs = other.f().divide(&(other.g() - &Series::x(12))).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn affine_examples() {
        let fib = sequence_from_spec(&spec("1", "1,0,-1", 6), 7).unwrap();
        let (one, zero, half) = (int(1), int(0), ratio(1, 2));
        let pell = affine_transform_seq(&fib, &half, &one, &zero, &one, &half, &zero).unwrap();
        let expect = sequence_from_spec(&spec("1/2", "1/2,0,-1/2", 6), 7).unwrap();
        assert_eq!(pell, expect);
        let same = affine_transform_seq(&fib, &one, &one, &zero, &one, &one, &zero).unwrap();
        assert_eq!(same.polys(), fib.polys());
        assert_eq!(
            affine_transform_seq(&fib, &one, &zero, &zero, &one, &one, &zero),
            Err(Error::ZeroParameter("alpha"))
        );
    }

    #[test]
    fn toeplitz_examples() {
        let big_b = sequence_from_spec(&spec("1", "1,-2,1", 7), 8).unwrap();
        let b = toeplitz_premultiply(&poly(&[1, -1]), &big_b).unwrap();
        assert_eq!(b, sequence_from_spec(&spec("1,-1", "1,-2,1", 7), 8).unwrap());
        assert_eq!(toeplitz_premultiply(&poly(&[1]), &big_b).unwrap(), big_b);

        let u = sequence_from_spec(&spec("1/2", "1/2,0,1/2", 6), 7).unwrap();
        let h = Polynomial::new(vec![ratio(1, 2), int(0), ratio(-1, 2)]);
        let tt = toeplitz_premultiply(&h, &u).unwrap();
        assert_eq!(tt, sequence_from_spec(&spec("1/4,0,-1/4", "1/2,0,1/2", 6), 7).unwrap());
        for n in 2..7 {
            assert_eq!(tt.get(n).scale(&int(2)), u.get(n) - u.get(n - 2));
        }
    }

    #[test]
    fn formats() {
        let s = sequence_from_spec(&spec("1", "1,0,-1", 2), 3).unwrap();
        assert_eq!(s.to_text(), "0: 1\n1: x\n2: 1 + x^2\n");
        assert_eq!(
            s.to_json(),
            r#"{"polys":[{"n":0,"coeffs":["1"]},{"n":1,"coeffs":["0","1"]},{"n":2,"coeffs":["1","0","1"]}]}"#
        );
        assert_eq!(s.to_csv(), "1,,\n0,1,\n1,0,1\n");
        assert_eq!(s.to_triangle().unwrap(), spec("1", "1,0,-1", 2).build_triangle(3).unwrap());
    }

    fn random_triangle(r: usize) -> impl Strategy<Value = Triangle> {
        proptest::collection::vec(small_rational(), r * (r + 1) / 2).prop_map(move |v| {
            let mut it = v.into_iter();
            Triangle::from_rows((0..r).map(|n| it.by_ref().take(n + 1).collect()).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn rows_equal_recurrence(s in spec_strategy(9)) {
            let rows = sequence_from_spec(&s, 10).unwrap();
            let rec = recurrence_sequence(&s, 10).unwrap();
            prop_assert_eq!(&rows, &rec);
            // and the row sequence determines the array again
            if s.is_proper() {
                let back = crate::riordan::recover_spec(&rows.to_triangle().unwrap()).unwrap();
                prop_assert_eq!(back.truncated(8), s.truncated(8));
            }
        }

        #[test]
        fn umbral_is_array_product(a in spec_strategy(7), b in spec_strategy(7)) {
            let p = sequence_from_spec(&a, 8).unwrap();
            let q = sequence_from_spec(&b, 8).unwrap();
            let r = umbral_compose(&p, &q).unwrap();
            prop_assert_eq!(r.to_triangle().unwrap(), a.product(&b).unwrap().build_triangle(8).unwrap());
        }

        #[test]
        fn umbral_matches_double_sum(p in random_triangle(5), q in random_triangle(5)) {
            let r = umbral_compose(&PolySeq::from_triangle(&p), &PolySeq::from_triangle(&q)).unwrap();
            for n in 0..5 {
                for j in 0..=n {
                    let mut acc = Rational::zero();
                    for k in j..=n {
                        acc += p.get(n, k) * q.get(k, j);
                    }
                    prop_assert_eq!(r.get(n).coeff(j), acc);
                }
            }
        }

        #[test]
        fn finite_window_agrees(
            f in crate::testutil::series_of(9),
            gpoly in proptest::collection::vec(small_rational(), 1..4),
        ) {
            let mut gc = gpoly;
            if gc[0].is_zero() {
                gc[0] = int(1);
            }
            let m = gc.len() - 1;
            let g = Series::from_poly(&gc, 9);
            let mut full = Vec::new();
            for n in 0..10 {
                let next = next_polynomial(&full, &f, &g).unwrap();
                let every_term = next_polynomial_with_window(&full, &f, &g, n).unwrap();
                prop_assert_eq!(&next, &every_term);
                if n >= m {
                    let short = next_polynomial_with_window(&full, &f, &g.truncated(m), m).unwrap();
                    prop_assert_eq!(&next, &short);
                }
                full.push(next);
            }
        }

        #[test]
        fn affine_is_triple_product(
            s in proper_spec(4),
            params in proptest::collection::vec(crate::testutil::nonzero_rational(), 4),
            beta in small_rational(),
            b in small_rational(),
        ) {
            let (gamma, alpha, c, a) = (&params[0], &params[1], &params[2], &params[3]);
            let p = sequence_from_spec(&s, 5).unwrap();
            let q = affine_transform_seq(&p, gamma, alpha, &beta, c, a, &b).unwrap();
            let left = RiordanSpec::new(Series::constant(gamma.clone(), 4), Series::from_poly(&[alpha.clone(), beta.clone()], 4)).unwrap();
            let right = RiordanSpec::new(Series::constant(c.clone(), 4), Series::from_poly(&[a.clone(), b.clone()], 4)).unwrap();
            let oracle = left.build_triangle(5).unwrap()
                .matmul(&s.build_triangle(5).unwrap()).unwrap()
                .matmul(&right.build_triangle(5).unwrap()).unwrap();
            prop_assert_eq!(q.to_triangle().unwrap(), oracle.clone());
            prop_assert_eq!(q.spec().unwrap().build_triangle(5).unwrap(), oracle);
        }
    }
}
