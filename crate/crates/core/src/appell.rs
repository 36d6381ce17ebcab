//! Generalized Appell sequences: Riordan-type rows weighted by a Hadamard unit.
//!
//! For `T(f|g)` with rows `p_n` and a weight `h` with every `h_n != 0`,
//! `s_n = p_n * h` (coefficient-wise), so that
//! `T(f|g) h(tx) = sum_n s_n(t) x^n`. The weighted rows satisfy
//!
//! ```text
//! s_n = (1/g_0)(x s_{n-1} * hhat) - (g_1/g_0) s_{n-1} - ... - (g_n/g_0) s_0 + h_0 f_n/g_0
//! ```
//!
//! with `hhat_k = h_k/h_{k-1}`. Sheffer sequences are the case `h = e^x`,
//! Brenke sequences the case `g = 1`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyseq::{PolySeq, Polynomial};
use crate::rational::{factorial, int, parse_rational, Rational};
use crate::riordan::{a_sequence, RiordanSpec};
use crate::series::Series;

/// A weight series `h`. Nonvanishing of the coefficients is checked only up
/// to the order an operation actually reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    h: Series,
}

impl Weight {
    pub fn new(h: Series) -> Self {
        Weight { h }
    }

    /// Tokens: `exp`, `geometric`, `inv_square`, `a_minus_log:<a>`
    /// (the series `a - log(1-x)`) and `custom:<coefficient list>`.
    pub fn parse(token: &str, order: usize) -> Result<Weight> {
        let token = token.trim();
        let h = if let Some(a) = token.strip_prefix("a_minus_log:") {
            let a = parse_rational(a)?;
            let mut c = Series::named("neglog1m", order)?.into_coeffs();
            c[0] = a;
            Series::new(c)
        } else if let Some(list) = token.strip_prefix("custom:") {
            Series::from_poly(&crate::series::parse_list(list)?, order)
        } else {
            match token {
                "exp" | "geometric" | "inv_square" => Series::named(token, order)?,
                _ => return Err(Error::UnknownName(token.to_string())),
            }
        };
        Ok(Weight { h })
    }

    pub fn exp(order: usize) -> Weight {
        Weight { h: Series::named("exp", order).expect("exp is a named series") }
    }

    pub fn geometric(order: usize) -> Weight {
        Weight { h: Series::named("geometric", order).expect("geometric is a named series") }
    }

    pub fn h(&self) -> &Series {
        &self.h
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// Fails unless `h_0..h_n` are all nonzero.
    pub fn check_unit(&self, n: usize) -> Result<()> {
        if n > self.h.order() {
            return Err(Error::InsufficientTruncation { needed: n, available: self.h.order() });
        }
        match (0..=n).find(|&k| self.h.coeff(k).is_zero()) {
            Some(index) => Err(Error::NotHadamardUnit { index }),
            None => Ok(()),
        }
    }

    /// `hhat = sum_{k>=1} (h_k/h_{k-1}) x^k` to order `n`.
    pub fn hhat(&self, n: usize) -> Result<Series> {
        self.check_unit(n.saturating_sub(1))?;
        if n > self.h.order() {
            return Err(Error::InsufficientTruncation { needed: n, available: self.h.order() });
        }
        let mut c = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            c[k] = self.h.coeff(k) / self.h.coeff(k - 1);
        }
        Ok(Series::new(c))
    }
}

/// `s_0..s_{R-1}` together with the array and weight that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellSeq {
    polys: Vec<Polynomial>,
    spec: RiordanSpec,
    weight: Weight,
}

impl AppellSeq {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn spec(&self) -> &RiordanSpec {
        &self.spec
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// The stored `s_n`, or `n! s_n` when `factorial` is set (the usual
    /// normalization of Hermite, Pidduck and Mittag-Leffler polynomials).
    pub fn to_polyseq(&self, factorial_rescale: bool) -> PolySeq {
        let polys = self
            .polys
            .iter()
            .enumerate()
            .map(|(n, p)| if factorial_rescale { p.scale(&factorial(n)) } else { p.clone() })
            .collect();
        PolySeq::new(polys)
    }

    /// Undoes the weighting: `s_n * h^{-1}` gives back the rows of the array.
    pub fn unweight(&self) -> Result<PolySeq> {
        let inv = self.weight.h.truncated(self.polys.len().saturating_sub(1)).hadamard_reciprocal()?;
        let polys = self.polys.iter().map(|p| p.weight_by(&inv)).collect::<Result<Vec<_>>>()?;
        Ok(PolySeq::with_spec(polys, Some(self.spec.clone())))
    }
}

/// `s_{n,k} = d_{n,k} h_k` for the first `rows` rows of `T(f|g)`.
pub fn weighted_sequence(spec: &RiordanSpec, w: &Weight, rows: usize) -> Result<AppellSeq> {
    if rows > 0 {
        w.check_unit(rows - 1)?;
    }
    let t = spec.build_triangle(rows)?;
    let polys = t
        .rows()
        .iter()
        .map(|r| Polynomial::new(r.iter().zip(w.h.coeffs()).map(|(d, h)| d * h).collect()))
        .collect();
    Ok(AppellSeq { polys, spec: spec.clone(), weight: w.clone() })
}

/// `s_n` from `s_0..s_{n-1}` by the weighted recurrence. In coefficients:
/// `s_{n,k} = -sum_i (g_i/g_0) s_{n-i,k} + (1/g_0)(h_k/h_{k-1}) s_{n-1,k-1}`
/// for `k >= 1`, and `s_{n,0} = -sum_i (g_i/g_0) s_{n-i,0} + h_0 f_n/g_0`.
pub fn appell_recurrence_step(prev: &[Polynomial], f: &Series, g: &Series, w: &Weight) -> Result<Polynomial> {
    let n = prev.len();
    for s in [f, g] {
        if s.order() < n {
            return Err(Error::InsufficientTruncation { needed: n, available: s.order() });
        }
    }
    w.check_unit(n)?;
    let g0 = g.coeff(0);
    if g0.is_zero() {
        return Err(Error::ZeroConstantTerm("g"));
    }
    let mut acc = Polynomial::constant(w.h.coeff(0) * f.coeff(n));
    if n > 0 {
        let hhat = w.hhat(n)?;
        acc = &acc + &prev[n - 1].mul_x().weight_by(&hhat)?;
    }
    for i in 1..=n {
        let gi = g.coeff(i);
        if !gi.is_zero() {
            acc = &acc - &prev[n - i].scale(gi);
        }
    }
    Ok(acc.scale(&g0.recip()))
}

/// Iterates [`appell_recurrence_step`] from the empty history.
pub fn appell_recurrence_sequence(spec: &RiordanSpec, w: &Weight, rows: usize) -> Result<AppellSeq> {
    let mut polys = Vec::with_capacity(rows);
    for _ in 0..rows {
        let s = appell_recurrence_step(&polys, spec.f(), spec.g(), w)?;
        polys.push(s);
    }
    Ok(AppellSeq { polys, spec: spec.clone(), weight: w.clone() })
}

/// Weight `e^x`: `S_n(x) = sum_k p_{n,k} x^k / k!`.
pub fn sheffer_sequence(spec: &RiordanSpec, rows: usize) -> Result<AppellSeq> {
    if !spec.is_proper() {
        return Err(Error::NotProper);
    }
    weighted_sequence(spec, &Weight::exp(rows.saturating_sub(1)), rows)
}

/// `T(f|1)` weighted by `w`. With `w = e^x` these are the classical Appell
/// polynomials of `f`.
pub fn brenke_sequence(f: &Series, w: &Weight, rows: usize) -> Result<AppellSeq> {
    let spec = RiordanSpec::new(f.clone(), Series::one(f.order()))?;
    if !spec.is_proper() {
        return Err(Error::NotProper);
    }
    weighted_sequence(&spec, w, rows)
}

/// The convolution family of `g`: `T(g|g)(e^{tx}) = e^{tx/g} = sum_n s_n(t) x^n`.
pub fn convolution_sequence(g: &Series, rows: usize) -> Result<AppellSeq> {
    let spec = RiordanSpec::new(g.clone(), g.clone())?;
    sheffer_sequence(&spec, rows)
}

/// `s_n(t + r) = sum_k s_{n-k}(t) s_k(r)` for every `n` in the sequence.
pub fn convolution_law_holds(s: &AppellSeq, t: &Rational, r: &Rational) -> bool {
    let tr = t + r;
    (0..s.len()).all(|n| {
        let rhs = (0..=n).fold(Rational::zero(), |acc, k| acc + s.get(n - k).evaluate(t) * s.get(k).evaluate(r));
        s.get(n).evaluate(&tr) == rhs
    })
}

/// `Q p = sum_{k>=1} c_k D^k p` for the delta operator `Q = c(D)`.
pub fn apply_delta_operator(c: &Series, p: &Polynomial) -> Result<Polynomial> {
    if !c.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let deg = match p.degree() {
        Some(d) => d,
        None => return Ok(Polynomial::zero()),
    };
    let mut acc = Polynomial::zero();
    let mut dk = p.clone();
    for k in 1..=deg {
        dk = dk.derivative();
        if k > c.order() {
            if !dk.is_zero() {
                return Err(Error::InsufficientTruncation { needed: deg, available: c.order() });
            }
            break;
        }
        let ck = c.coeff(k);
        if !ck.is_zero() {
            acc = &acc + &dk.scale(ck);
        }
    }
    Ok(acc)
}

/// Checks that `r_n = n! s_n` (from the convolution family of `g`) is the
/// basic sequence of `Q = (x/A)(D)`, with `A` the A-sequence of `T(g|g)`:
/// `r_0 = 1`, `r_n(0) = 0` for `n >= 1`, and `Q r_n = n r_{n-1}`.
pub fn basic_sequence_law_holds(g: &Series, rows: usize) -> Result<bool> {
    let n_max = rows.saturating_sub(1);
    let a = a_sequence(g, n_max)?;
    // x/A to order n_max
    let c = a.reciprocal()?.mul_x().truncated(n_max);
    let r = convolution_sequence(g, rows)?.to_polyseq(true);
    if rows > 0 && r.get(0) != &Polynomial::constant(Rational::one()) {
        return Ok(false);
    }
    for n in 1..rows {
        if !r.get(n).evaluate(&Rational::zero()).is_zero() {
            return Ok(false);
        }
        if apply_delta_operator(&c, r.get(n))? != r.get(n - 1).scale(&int(n as i64)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `p_{n-1}^{D(h)} = sum_{k=0}^{n} g_k D(p_{n-k}^h)` for `1 <= n < R`,
/// where `p^h` is the `h`-weighted row sequence and `D` the derivative.
pub fn derivative_identity_check(spec: &RiordanSpec, w: &Weight, rows: usize) -> Result<bool> {
    if rows < 2 {
        return Ok(true);
    }
    let s = weighted_sequence(spec, w, rows)?;
    let dh = Weight::new(w.h.truncated(rows - 1).derivative()?);
    dh.check_unit(rows - 2)?;
    let p = s.unweight()?;
    let g = spec.g();
    for n in 1..rows {
        let lhs = p.get(n - 1).weight_by(dh.h())?;
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| &acc + &s.get(n - k).derivative().scale(g.coeff(k)));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Composition of two sequences weighted by the same `h`:
/// `r_{n,j} = sum_k s_{n,k} t_{k,j} / h_k`.
pub fn weighted_umbral_compose(s: &AppellSeq, t: &AppellSeq) -> Result<Vec<Polynomial>> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    let h = s.weight.h();
    if let Some(n) = s.len().checked_sub(1) {
        s.weight.check_unit(n)?;
    }
    let out = s
        .polys
        .iter()
        .map(|sn| {
            sn.coeffs().iter().enumerate().fold(Polynomial::zero(), |acc, (k, c)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &t.get(k).scale(&(c / h.coeff(k)))
                }
            })
        })
        .collect();
    Ok(out)
}

/// Closed forms for two weights built from the geometric series:
///
/// * `inv_square`, weight `1/(1-x)^2`: `p_n -> (x p_n)'`;
/// * `a_minus_log:<a>`, weight `a - log(1-x)`:
///   `p_n -> a p_n(0) + integral_0^x (p_n(t) - p_n(0))/t dt`.
///
/// Both the Hadamard product and the closed form are computed; a
/// disagreement is reported as `CheckFailed`.
pub fn weighted_special_cases(p: &PolySeq, case: &str) -> Result<PolySeq> {
    let deg = p.polys().iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let (weight, closed): (Weight, Box<dyn Fn(&Polynomial) -> Polynomial>) = if case == "inv_square" {
        (Weight::parse("inv_square", deg)?, Box::new(|q: &Polynomial| q.mul_x().derivative()))
    } else if let Some(a) = case.strip_prefix("a_minus_log:") {
        let a = parse_rational(a)?;
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        let w = Weight::parse(case, deg)?;
        (
            w,
            Box::new(move |q: &Polynomial| {
                let q0 = q.coeff(0);
                let tail = Polynomial::new(q.coeffs().iter().skip(1).cloned().collect());
                &Polynomial::constant(&a * q0) + &tail.antiderivative()
            }),
        )
    } else {
        return Err(Error::UnknownCase(case.to_string()));
    };
    let mut out = Vec::with_capacity(p.len());
    for (n, q) in p.polys().iter().enumerate() {
        let by_weight = q.weight_by(weight.h())?;
        if by_weight != closed(q) {
            return Err(Error::CheckFailed(format!("{case} closed form differs at n = {n}")));
        }
        out.push(by_weight);
    }
    Ok(PolySeq::new(out))
}
