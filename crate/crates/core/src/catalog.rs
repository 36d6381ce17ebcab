//! Registry of classical families with their printed rows and polynomials.
//!
//! Fixtures live in `data/families.json`. Each spec series is a product of
//! series tokens, so `["1/2", "exp_neg_sq"]` means `e^{-x^2}/2`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::Deserialize;

use crate::appell::{
    appell_recurrence_sequence, derivative_identity_check, sheffer_sequence, weighted_sequence, Weight,
};
use crate::error::{Error, Result};
use crate::polyseq::{
    affine_transform_seq, bivariate_gf_check, sequence_from_spec, toeplitz_premultiply, PolySeq, Polynomial,
};
use crate::rational::{binomial, factorial, int, parse_rational, pow, ratio, Rational};
use crate::riordan::RiordanSpec;
use crate::series::Series;

const FIXTURES: &str = include_str!("../data/families.json");

#[derive(Deserialize)]
struct SpecJson {
    f: Vec<String>,
    g: Vec<String>,
}

#[derive(Deserialize)]
struct ClassicalJson {
    init: Vec<Vec<String>>,
    a: Vec<String>,
    c: String,
}

#[derive(Deserialize)]
struct GfJson {
    num: Vec<String>,
    den: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct Fixture {
    family: String,
    spec: SpecJson,
    weight: Option<String>,
    #[serde(default)]
    rows: Vec<Vec<String>>,
    #[serde(default)]
    polys: Vec<Vec<String>>,
    #[serde(default)]
    usual_polys: Vec<Vec<String>>,
    #[serde(default)]
    classical_polys: Vec<Vec<String>>,
    classical: Option<ClassicalJson>,
    gf: Option<GfJson>,
    verify_rows: Option<usize>,
    provenance: String,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(FIXTURES).expect("bundled family fixtures are valid JSON"))
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter().map(|r| r.iter().map(|v| parse_rational(v)).collect()).collect()
}

fn parse_polys(rows: &[Vec<String>]) -> Result<Vec<Polynomial>> {
    Ok(parse_rows(rows)?.into_iter().map(Polynomial::new).collect())
}

/// A three-term recurrence `p_n = a(x) p_{n-1} + c p_{n-2}` valid once the
/// initial polynomials run out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classical {
    pub init: Vec<Polynomial>,
    pub a: Polynomial,
    pub c: Rational,
}

impl Classical {
    pub fn generate(&self, count: usize) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = self.init.iter().take(count).cloned().collect();
        while out.len() < count {
            let n = out.len();
            let mut next = &self.a * &out[n - 1];
            if n >= 2 && !self.c.is_zero() {
                next = &next + &out[n - 2].scale(&self.c);
            }
            out.push(next);
        }
        out
    }
}

/// A printed closed form `num(x) / den(x, t)`, where `den` is a list of
/// polynomials in `t`, one per power of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub num: Vec<Rational>,
    pub den: Vec<Polynomial>,
}

impl ClosedForm {
    pub fn series(&self, t0: &Rational, order: usize) -> Result<Series> {
        let den: Vec<Rational> = self.den.iter().map(|p| p.evaluate(t0)).collect();
        Series::from_poly(&self.num, order).divide(&Series::from_poly(&den, order))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    pub name: String,
    pub spec: RiordanSpec,
    pub weight: Option<Weight>,
    pub golden_rows: Vec<Vec<Rational>>,
    pub golden_polys: Vec<Polynomial>,
    /// `n!` times the golden polynomials, where printed.
    pub usual_polys: Vec<Polynomial>,
    /// Printed polynomials of a closely related family (first-kind Chebyshev).
    pub classical_polys: Vec<Polynomial>,
    pub classical: Option<Classical>,
    pub gf: Option<ClosedForm>,
    /// Rows verified by default.
    pub verify_rows: usize,
    pub provenance: String,
}

impl FamilyEntry {
    /// Rows `p_0..p_{R-1}` of the underlying array.
    pub fn rows(&self, rows: usize) -> Result<PolySeq> {
        sequence_from_spec(&self.spec.truncated(rows.saturating_sub(1)), rows)
    }

    /// The family's polynomials: the rows, weighted when the family has a weight.
    pub fn polys(&self, rows: usize) -> Result<PolySeq> {
        match &self.weight {
            Some(w) => Ok(weighted_sequence(&self.spec, w, rows)?.to_polyseq(false)),
            None => self.rows(rows),
        }
    }
}

pub fn family_names() -> Vec<&'static str> {
    fixtures().iter().map(|f| f.family.as_str()).collect()
}

/// The named family with series truncated to order `R - 1` and golden data
/// cut to its first `R` members.
pub fn get_family(name: &str, rows: usize) -> Result<FamilyEntry> {
    let fx = fixtures().iter().find(|f| f.family == name).ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    load(fx, rows.max(1) - 1, Some(rows))
}

fn load(fx: &Fixture, order: usize, cut: Option<usize>) -> Result<FamilyEntry> {
    let f = Series::parse(&fx.spec.f.join("*"), order)?;
    let g = Series::parse(&fx.spec.g.join("*"), order)?;
    let weight = fx.weight.as_deref().map(|w| Weight::parse(w, order)).transpose()?;
    let take = |v: Vec<Polynomial>| match cut {
        Some(n) => v.into_iter().take(n).collect(),
        None => v,
    };
    let mut golden_rows = parse_rows(&fx.rows)?;
    if let Some(n) = cut {
        golden_rows.truncate(n);
    }
    let classical = match &fx.classical {
        Some(c) => Some(Classical { init: parse_polys(&c.init)?, a: Polynomial::new(parse_rows(std::slice::from_ref(&c.a))?.remove(0)), c: parse_rational(&c.c)? }),
        None => None,
    };
    let gf = match &fx.gf {
        Some(gf) => Some(ClosedForm {
            num: gf.num.iter().map(|v| parse_rational(v)).collect::<Result<_>>()?,
            den: parse_polys(&gf.den)?,
        }),
        None => None,
    };
    let longest = fx.rows.len().max(fx.polys.len()).max(fx.usual_polys.len());
    Ok(FamilyEntry {
        name: fx.family.clone(),
        spec: RiordanSpec::new(f, g)?,
        weight,
        golden_rows,
        golden_polys: take(parse_polys(&fx.polys)?),
        usual_polys: take(parse_polys(&fx.usual_polys)?),
        classical_polys: take(parse_polys(&fx.classical_polys)?),
        classical,
        gf,
        verify_rows: fx.verify_rows.unwrap_or(longest),
        provenance: fx.provenance.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// `row`, `poly` or `usual_poly`.
    pub what: &'static str,
    pub n: usize,
    pub k: usize,
    pub expected: Rational,
    pub actual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub family: String,
    pub rows: usize,
    /// Rows compared against printed data.
    pub printed_rows: usize,
    /// Rows past the printed ones, compared against the family's classical recurrence.
    pub recurrence_rows: usize,
    pub polys: usize,
    pub usual_polys: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "{}: ok ({} printed rows, {} recurrence rows, {} polynomials, {} rescaled polynomials)",
                self.family, self.printed_rows, self.recurrence_rows, self.polys, self.usual_polys
            ),
            Some(m) => write!(
                f,
                "{}: mismatch in {} at ({}, {}): expected {}, got {}",
                self.family, m.what, m.n, m.k, m.expected, m.actual
            ),
        }
    }
}

fn first_poly_mismatch(what: &'static str, expected: &[Polynomial], actual: &PolySeq) -> Option<Mismatch> {
    for (n, e) in expected.iter().enumerate() {
        let a = actual.get(n);
        let len = e.coeffs().len().max(a.coeffs().len());
        if let Some(k) = (0..len).find(|&k| e.coeff(k) != a.coeff(k)) {
            return Some(Mismatch { what, n, k, expected: e.coeff(k), actual: a.coeff(k) });
        }
    }
    None
}

/// Rebuilds the first `R` rows and polynomials and diffs them against the
/// golden data. Rows past the printed ones are checked against the classical
/// recurrence when the family has one.
pub fn verify_family(name: &str, rows: usize) -> Result<VerifyReport> {
    let fx = fixtures().iter().find(|f| f.family == name).ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    let entry = load(fx, rows.max(1) - 1, None)?;
    verify_entry(&entry, rows)
}

/// [`verify_family`] on an explicit entry.
pub fn verify_entry(entry: &FamilyEntry, rows: usize) -> Result<VerifyReport> {
    let spec = entry.spec.truncated(rows.max(1) - 1);
    let triangle = spec.build_triangle(rows)?;
    let printed = entry.golden_rows.len().min(rows);
    let mut expected: Vec<Vec<Rational>> = entry.golden_rows[..printed].to_vec();
    let mut recurrence_rows = 0;
    if let (Some(c), None) = (&entry.classical, &entry.weight) {
        for (n, p) in c.generate(rows).into_iter().enumerate().skip(printed) {
            if p.coeffs().len() > n + 1 {
                return Err(Error::MalformedTriangle { row: n, len: p.coeffs().len(), expected: n + 1 });
            }
            expected.push(p.padded(n + 1));
            recurrence_rows += 1;
        }
    }
    let mut report = VerifyReport {
        family: entry.name.clone(),
        rows,
        printed_rows: printed,
        recurrence_rows,
        polys: 0,
        usual_polys: 0,
        mismatch: None,
    };
    for (n, e) in expected.iter().enumerate() {
        if e.len() != n + 1 {
            return Err(Error::MalformedTriangle { row: n, len: e.len(), expected: n + 1 });
        }
        if let Some(k) = (0..=n).find(|&k| triangle.get(n, k) != e[k]) {
            report.mismatch = Some(Mismatch { what: "row", n, k, expected: e[k].clone(), actual: triangle.get(n, k) });
            return Ok(report);
        }
    }
    let entry = FamilyEntry { spec, ..entry.clone() };
    let polys = entry.polys(rows)?;
    let golden = &entry.golden_polys[..entry.golden_polys.len().min(rows)];
    report.polys = golden.len();
    if let Some(m) = first_poly_mismatch("poly", golden, &polys) {
        report.mismatch = Some(m);
        return Ok(report);
    }
    let usual = &entry.usual_polys[..entry.usual_polys.len().min(rows)];
    report.usual_polys = usual.len();
    let scaled = PolySeq::new(polys.polys().iter().enumerate().map(|(n, p)| p.scale(&factorial(n))).collect());
    report.mismatch = first_poly_mismatch("usual_poly", usual, &scaled);
    Ok(report)
}

/// Checks the array against the family's printed closed form at `t = t0`:
/// `sum_n p_n(t0) x^n` must equal both `f/(g - t0 x)` and the closed form.
pub fn gf_check(name: &str, t0: &Rational, order: usize) -> Result<bool> {
    let entry = get_family(name, order + 1)?;
    let closed = entry.gf.as_ref().ok_or_else(|| Error::UnknownFamily(format!("{name} has no closed form")))?;
    if !bivariate_gf_check(&entry.spec, t0, order)? {
        return Ok(false);
    }
    let values = Series::new(entry.rows(order + 1)?.evaluate_all(t0));
    Ok(values == closed.series(t0, order)?)
}

/// Families with a printed closed-form generating function.
pub fn gf_families() -> Vec<&'static str> {
    fixtures().iter().filter(|f| f.gf.is_some()).map(|f| f.family.as_str()).collect()
}

/// Classical first-kind Chebyshev polynomials: `T_0 = T~_0 + 1/2`, `T_n = T~_n`.
pub fn chebyshev_t(rows: usize) -> Result<PolySeq> {
    let tilde = get_family("chebyshev_t_tilde", rows)?.rows(rows)?;
    let polys = tilde
        .polys()
        .iter()
        .enumerate()
        .map(|(n, p)| if n == 0 { p + &Polynomial::constant(ratio(1, 2)) } else { p.clone() })
        .collect();
    Ok(PolySeq::new(polys))
}

pub const IDENTITIES: &[&str] = &[
    "pell_fibonacci",
    "morgan_voyce_difference",
    "morgan_voyce_shift",
    "chebyshev_first_second",
    "chebyshev_first_kind",
    "boubaker_chebyshev",
    "fermat_chebyshev",
    "pidduck_mittag_leffler",
    "laguerre_derivative",
    "laguerre_closed_form",
    "hermite_derivative",
    "hermite_parity",
    "hermite_closed_form",
    "sheffer_derivative",
    "appell_recurrence",
];

/// Runs a named identity. `Ok(None)` means it holds; `Ok(Some(detail))`
/// describes the first failure.
pub fn check_identity(name: &str) -> Result<Option<String>> {
    match name {
        "pell_fibonacci" => pell_fibonacci(),
        "morgan_voyce_difference" => morgan_voyce_difference(),
        "morgan_voyce_shift" => morgan_voyce_shift(),
        "chebyshev_first_second" => chebyshev_first_second(),
        "chebyshev_first_kind" => chebyshev_first_kind(),
        "boubaker_chebyshev" => boubaker_chebyshev(),
        "fermat_chebyshev" => fermat_chebyshev(),
        "pidduck_mittag_leffler" => pidduck_mittag_leffler(),
        "laguerre_derivative" => laguerre_derivative(),
        "laguerre_closed_form" => laguerre_closed_form(),
        "hermite_derivative" => hermite_derivative(),
        "hermite_parity" => hermite_parity(),
        "hermite_closed_form" => hermite_closed_form(),
        "sheffer_derivative" => sheffer_derivative(),
        "appell_recurrence" => appell_recurrence(),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn fail(msg: String) -> Result<Option<String>> {
    Ok(Some(msg))
}

fn rows_of(name: &str, rows: usize) -> Result<PolySeq> {
    get_family(name, rows)?.rows(rows)
}

fn polys_of(name: &str, rows: usize) -> Result<PolySeq> {
    get_family(name, rows)?.polys(rows)
}

/// `P_n(x) = F_n(2x)`, as `p_{n,k} = f_{n,k} 2^k`, at sample points, and as
/// the affine transform `T(1/2|1) T(1|1-x^2) T(1|1/2)`.
fn pell_fibonacci() -> Result<Option<String>> {
    let fib = rows_of("fibonacci", 7)?;
    let pell = rows_of("pell", 7)?;
    for n in 0..7 {
        for k in 0..=n {
            if pell.get(n).coeff(k) != fib.get(n).coeff(k) * pow(&int(2), k) {
                return fail(format!("coefficient ({n}, {k})"));
            }
        }
        for x0 in [ratio(3, 2), int(-1), ratio(1, 3)] {
            if pell.get(n).evaluate(&x0) != fib.get(n).evaluate(&(&x0 * int(2))) {
                return fail(format!("value at n = {n}, x = {x0}"));
            }
        }
    }
    let (one, zero, half) = (int(1), int(0), ratio(1, 2));
    let moved = affine_transform_seq(&fib, &half, &one, &zero, &one, &half, &zero)?;
    if moved.polys() != pell.polys() {
        return fail("affine transform of Fibonacci".into());
    }
    Ok(None)
}

fn morgan_voyce_difference() -> Result<Option<String>> {
    let big = rows_of("morgan_voyce_B", 8)?;
    let small = rows_of("morgan_voyce_b", 8)?;
    for n in 1..8 {
        if small.get(n) != &(big.get(n) - big.get(n - 1)) {
            return fail(format!("b_{n} != B_{n} - B_{}", n - 1));
        }
    }
    Ok(None)
}

fn morgan_voyce_shift() -> Result<Option<String>> {
    let big = rows_of("morgan_voyce_B", 8)?;
    let small = rows_of("morgan_voyce_b", 8)?;
    for n in 1..8 {
        if big.get(n - 1).mul_x() != small.get(n) - small.get(n - 1) {
            return fail(format!("x B_{} != b_{n} - b_{}", n - 1, n - 1));
        }
    }
    Ok(None)
}

/// `2 T~_n = U_n - U_{n-2}`, both directly and through `T(1/2 - x^2/2 | 1)`.
fn chebyshev_first_second() -> Result<Option<String>> {
    let u = rows_of("chebyshev_u", 7)?;
    let t = rows_of("chebyshev_t_tilde", 7)?;
    for n in 2..7 {
        if t.get(n).scale(&int(2)) != u.get(n) - u.get(n - 2) {
            return fail(format!("n = {n}"));
        }
    }
    let h = Polynomial::new(vec![ratio(1, 2), int(0), ratio(-1, 2)]);
    if toeplitz_premultiply(&h, &u)?.polys() != t.polys() {
        return fail("Toeplitz premultiplication".into());
    }
    Ok(None)
}

fn chebyshev_first_kind() -> Result<Option<String>> {
    let entry = get_family("chebyshev_t_tilde", 5)?;
    let t = chebyshev_t(entry.classical_polys.len())?;
    for (n, expected) in entry.classical_polys.iter().enumerate() {
        if t.get(n) != expected {
            return fail(format!("T_{n}"));
        }
    }
    Ok(None)
}

/// `B_n(x) = U_n(x/2) + 3 U_{n-2}(x/2)`.
fn boubaker_chebyshev() -> Result<Option<String>> {
    let u = rows_of("chebyshev_u", 7)?;
    let b = rows_of("boubaker", 7)?;
    let half = ratio(1, 2);
    let zero = Rational::zero();
    for n in 2..7 {
        let rhs = &u.get(n).substitute_affine(&half, &zero) + &u.get(n - 2).substitute_affine(&half, &zero).scale(&int(3));
        if b.get(n) != &rhs {
            return fail(format!("n = {n}"));
        }
    }
    Ok(None)
}

/// Fermat against second-kind Chebyshev with the square roots cancelled:
/// `fermat_{n,k} = u_{n,k} 2^{(n-k)/2} (3/2)^k` when `n - k` is even, and
/// both vanish when it is odd.
fn fermat_chebyshev() -> Result<Option<String>> {
    let u = rows_of("chebyshev_u", 7)?;
    let fe = rows_of("fermat", 7)?;
    for n in 0..7 {
        for k in 0..=n {
            let (a, b) = (fe.get(n).coeff(k), u.get(n).coeff(k));
            let ok = if (n - k) % 2 == 0 {
                a == b * pow(&int(2), (n - k) / 2) * pow(&ratio(3, 2), k)
            } else {
                a.is_zero() && b.is_zero()
            };
            if !ok {
                return fail(format!("coefficient ({n}, {k})"));
            }
        }
    }
    Ok(None)
}

/// `P_n = sum_{k<=n} M_k`, and in the usual normalization
/// `P~_n = sum_k C(n,k) (n-k)! M~_k`.
fn pidduck_mittag_leffler() -> Result<Option<String>> {
    let p = polys_of("pidduck", 5)?;
    let m = polys_of("mittag_leffler", 5)?;
    for n in 0..5 {
        let sum = (0..=n).fold(Polynomial::zero(), |acc, k| &acc + m.get(k));
        if p.get(n) != &sum {
            return fail(format!("n = {n}"));
        }
        let usual = (0..=n).fold(Polynomial::zero(), |acc, k| {
            &acc + &m.get(k).scale(&(factorial(k) * binomial(n, k) * factorial(n - k)))
        });
        if p.get(n).scale(&factorial(n)) != usual {
            return fail(format!("rescaled n = {n}"));
        }
    }
    Ok(None)
}

fn laguerre_derivative() -> Result<Option<String>> {
    let entry = get_family("laguerre", 7)?;
    let l = entry.polys(7)?;
    for n in 0..7 {
        let sum = (0..n).fold(Polynomial::zero(), |acc, k| &acc - l.get(k));
        if l.get(n).derivative() != sum {
            return fail(format!("n = {n}"));
        }
    }
    Ok(None)
}

/// `L_n = sum_k (-1)^k C(n,k) x^k / k!`.
fn laguerre_closed_form() -> Result<Option<String>> {
    let l = polys_of("laguerre", 9)?;
    for n in 0..9 {
        for k in 0..=n {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            if l.get(n).coeff(k) != sign * binomial(n, k) / factorial(k) {
                return fail(format!("coefficient ({n}, {k})"));
            }
        }
    }
    Ok(None)
}

fn hermite_derivative() -> Result<Option<String>> {
    let h = polys_of("hermite", 7)?;
    for n in 1..7 {
        if h.get(n).derivative() != h.get(n - 1).scale(&int(2)) {
            return fail(format!("n = {n}"));
        }
    }
    if !h.get(0).derivative().is_zero() {
        return fail("n = 0".into());
    }
    Ok(None)
}

/// `H_n(-x) = (-1)^n H_n(x)`: coefficients with `n - k` odd vanish.
fn hermite_parity() -> Result<Option<String>> {
    let h = polys_of("hermite", 9)?;
    let minus = int(-1);
    let zero = Rational::zero();
    for n in 0..9 {
        let reflected = h.get(n).substitute_affine(&minus, &zero);
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        if reflected != h.get(n).scale(&sign) {
            return fail(format!("n = {n}"));
        }
    }
    Ok(None)
}

fn hermite_closed_form() -> Result<Option<String>> {
    let h = polys_of("hermite", 8)?;
    for m in 0..=3usize {
        for (n, odd) in [(2 * m, 0usize), (2 * m + 1, 1)] {
            if n >= 8 {
                continue;
            }
            let mut c = vec![Rational::zero(); n + 1];
            for j in 0..=m {
                let sign = if (m - j) % 2 == 0 { int(1) } else { int(-1) };
                let e = 2 * j + odd;
                c[e] = sign * pow(&int(2), e) / (factorial(m - j) * factorial(e));
            }
            if h.get(n) != &Polynomial::new(c) {
                return fail(format!("n = {n}"));
            }
        }
    }
    Ok(None)
}

/// `S_{n-1} = sum_k g_k S'_{n-k}` for the Sheffer families, eight rows.
fn sheffer_derivative() -> Result<Option<String>> {
    for name in ["laguerre", "hermite", "mittag_leffler", "pidduck"] {
        let entry = get_family(name, 8)?;
        let w = entry.weight.clone().unwrap_or_else(|| Weight::exp(7));
        if !derivative_identity_check(&entry.spec, &w, 8)? {
            return fail(name.to_string());
        }
        let s = sheffer_sequence(&entry.spec, 8)?;
        let g = entry.spec.g();
        for n in 1..8 {
            let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| &acc + &s.get(n - k).derivative().scale(g.coeff(k)));
            if s.get(n - 1) != &rhs {
                return fail(format!("{name} at n = {n}"));
            }
        }
    }
    Ok(None)
}

/// Weighted rows equal the weighted recurrence for every family, ten rows.
/// Unweighted families use the geometric weight.
fn appell_recurrence() -> Result<Option<String>> {
    for name in family_names() {
        let entry = get_family(name, 10)?;
        let w = entry.weight.clone().unwrap_or_else(|| Weight::geometric(9));
        let direct = weighted_sequence(&entry.spec, &w, 10)?;
        let rec = appell_recurrence_sequence(&entry.spec, &w, 10)?;
        if direct.polys() != rec.polys() {
            return fail(name.to_string());
        }
    }
    Ok(None)
}
