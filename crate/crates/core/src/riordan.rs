//! Riordan arrays `T(f|g)`: the array with first column `f/g` and rate `x/g`.
//!
//! Column `k` of `T(f|g)` has generating function `(f/g)(x/g)^k`, and the
//! array acts on a series `h` by `h -> (f/g) h(x/g)`. Entries are produced row
//! by row with the recurrence
//!
//! ```text
//! d_{n,j} = ( c_{n,j} - g_1 d_{n-1,j} - ... - g_n d_{0,j} ) / g_0
//! ```
//!
//! where `c_{n,0} = f_n` and `c_{n,j} = d_{n-1,j-1}` for `j >= 1`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::Series;
use crate::triangle::Triangle;

/// The pair `(f, g)` with `g_0 != 0`. The array is proper (a Riordan group
/// element) exactly when `f_0 != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiordanSpec {
    f: Series,
    g: Series,
    proper: bool,
}

impl RiordanSpec {
    pub fn new(f: Series, g: Series) -> Result<Self> {
        if g.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm("g"));
        }
        let proper = !f.coeff(0).is_zero();
        Ok(RiordanSpec { f, g, proper })
    }

    /// Both series parsed from the series text format at truncation `order`.
    pub fn parse(f: &str, g: &str, order: usize) -> Result<Self> {
        Self::new(Series::parse(f, order)?, Series::parse(g, order)?)
    }

    /// `T(1|1)`, the identity matrix.
    pub fn identity(order: usize) -> Self {
        Self::new(Series::one(order), Series::one(order)).expect("g_0 = 1")
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// The smaller of the two truncation orders.
    pub fn order(&self) -> usize {
        self.f.order().min(self.g.order())
    }

    pub fn truncated(&self, order: usize) -> RiordanSpec {
        RiordanSpec { f: self.f.truncated(order), g: self.g.truncated(order), proper: self.proper }
    }

    fn require_order(&self, needed: usize) -> Result<()> {
        if self.order() < needed {
            return Err(Error::InsufficientTruncation { needed, available: self.order() });
        }
        Ok(())
    }

    /// The rate `x/g`, known one order further than `g`.
    fn rate(&self) -> Result<Series> {
        Ok(self.g.reciprocal()?.mul_x())
    }

    /// The first `rows` rows of `T(f|g)`; needs `f` and `g` to order `rows - 1`.
    pub fn build_triangle(&self, rows: usize) -> Result<Triangle> {
        if rows == 0 {
            return Ok(Triangle::identity(0));
        }
        self.require_order(rows - 1)?;
        let g = self.g.coeffs();
        let g0 = &g[0];
        let mut d: Vec<Vec<Rational>> = Vec::with_capacity(rows);
        for n in 0..rows {
            let mut row = Vec::with_capacity(n + 1);
            for j in 0..=n {
                let mut acc = if j == 0 { self.f.coeff(n).clone() } else { d[n - 1][j - 1].clone() };
                // d_{n-k,j} vanishes once n - k < j
                for k in 1..=n - j {
                    if !g[k].is_zero() {
                        acc -= &g[k] * &d[n - k][j];
                    }
                }
                row.push(acc / g0);
            }
            d.push(row);
        }
        Triangle::from_rows(d)
    }

    /// Generating function `(f/g)(x/g)^k` of column `k`, to order `n`.
    pub fn column_gf(&self, k: usize, n: usize) -> Result<Series> {
        self.require_order(n)?;
        let spec = self.truncated(n);
        let first = spec.f.divide(&spec.g)?;
        let rate = spec.rate()?.truncated(n);
        Ok(first.cauchy_mul(&rate.pow(k)))
    }

    /// `T(f|g)(h) = (f/g) h(x/g)`.
    pub fn act(&self, h: &Series) -> Result<Series> {
        let first = self.f.divide(&self.g)?;
        let composed = h.compose(&self.rate()?)?;
        Ok(first.cauchy_mul(&composed))
    }

    /// Group product `T(f|g) T(l|m) = T(f l(x/g) | g m(x/g))`.
    pub fn product(&self, other: &RiordanSpec) -> Result<RiordanSpec> {
        let rate = self.rate()?;
        let f = self.f.cauchy_mul(&other.f.compose(&rate)?);
        let g = self.g.cauchy_mul(&other.g.compose(&rate)?);
        RiordanSpec::new(f, g)
    }

    /// Group inverse, computed by inverting the first `rows` rows exactly and
    /// reading `(f, g)` back with [`recover_spec`].
    pub fn inverse(&self, rows: usize) -> Result<RiordanSpec> {
        if !self.proper {
            return Err(Error::NotProper);
        }
        let t = self.build_triangle(rows)?;
        recover_spec(&t.inverse()?)
    }

    /// `T(f/g | g)`: the array with its first row and column deleted.
    pub fn shift_down(&self) -> Result<RiordanSpec> {
        RiordanSpec::new(self.f.divide(&self.g)?, self.g.clone())
    }

    /// `T(fg | g)`: the array with the column of `f` coefficients prepended
    /// (shifted up one place).
    pub fn shift_up(&self) -> Result<RiordanSpec> {
        RiordanSpec::new(self.f.cauchy_mul(&self.g), self.g.clone())
    }

    /// The `(d(x), h(x))` pair of the other common notation: `d = f/g`, `h = 1/g`.
    pub fn to_dh_notation(&self) -> Result<(Series, Series)> {
        Ok((self.f.divide(&self.g)?, self.g.reciprocal()?))
    }
}

/// Converts `(d(x), h(x))` notation: `(d, h) = T(d/h | 1/h)`.
pub fn from_dh_notation(d: &Series, h: &Series) -> Result<RiordanSpec> {
    if d.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm("d"));
    }
    if h.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm("h"));
    }
    RiordanSpec::new(d.divide(h)?, h.reciprocal()?)
}

/// Recovers `(f, g)` from the rows of a proper Riordan array.
///
/// `g_0 = d_{0,0}/d_{1,1}`; column 1 then determines `g_1, g_2, ...` one at a
/// time and column 0 determines `f`. A triangle with `R` rows fixes
/// `g_0..g_{R-2}` and `f_0..f_{R-2}` but only the combination
/// `f_{R-1} - g_{R-1} d_{0,0}`, so `g_{R-1}` is taken as zero. The result is
/// rebuilt and compared with the input; any difference is `NotRiordan`.
pub fn recover_spec(t: &Triangle) -> Result<RiordanSpec> {
    let r = t.row_count();
    if r < 2 {
        return Err(Error::InsufficientTruncation { needed: 1, available: r.saturating_sub(1) });
    }
    if let Some(i) = (0..r).find(|&i| t.row(i)[i].is_zero()) {
        return Err(Error::ZeroDiagonal { index: i });
    }
    let d = |n: usize, j: usize| t.get(n, j);
    let d11 = d(1, 1);
    let mut g = vec![Rational::zero(); r];
    g[0] = d(0, 0) / &d11;
    for m in 1..r - 1 {
        // d_{m+1,1} g_0 = d_{m,0} - sum_{k=1}^{m} g_k d_{m+1-k,1}
        let mut acc = d(m, 0) - &g[0] * d(m + 1, 1);
        for k in 1..m {
            acc -= &g[k] * d(m + 1 - k, 1);
        }
        g[m] = acc / &d11;
    }
    let f: Vec<Rational> = (0..r)
        .map(|n| (0..=n).fold(Rational::zero(), |acc, k| acc + &g[k] * d(n - k, 0)))
        .collect();
    let spec = RiordanSpec::new(Series::new(f), Series::new(g))?;
    let rebuilt = spec.build_triangle(r)?;
    if let Some((row, col)) = rebuilt.first_difference(t) {
        return Err(Error::NotRiordan { row, col });
    }
    Ok(spec)
}

/// The A-sequence of an array with denominator `g`: the series `A` with
/// `A(x/g) = 1/g`, i.e. `A = (1/g) o (x/g)^{<-1>}`. Exact to order `n <= N_g`.
pub fn a_sequence(g: &Series, n: usize) -> Result<Series> {
    if g.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm("g"));
    }
    if n > g.order() {
        return Err(Error::InsufficientTruncation { needed: n, available: g.order() });
    }
    let inv_g = g.reciprocal()?;
    let rate_inverse = inv_g.mul_x().comp_inverse()?;
    inv_g.compose(&rate_inverse)?.truncate(n)
}
