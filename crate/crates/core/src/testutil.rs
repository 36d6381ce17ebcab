//! Proptest strategies shared by the unit tests.

use num_traits::Zero;
use proptest::prelude::*;

use crate::rational::{int, ratio, Rational};
use crate::riordan::RiordanSpec;
use crate::series::Series;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_map(|r| if r.is_zero() { int(1) } else { r })
}

pub fn series_of(order: usize) -> impl Strategy<Value = Series> {
    proptest::collection::vec(small_rational(), order + 1).prop_map(Series::new)
}

/// Series with a nonzero constant term.
pub fn unit_series(order: usize) -> impl Strategy<Value = Series> {
    series_of(order).prop_map(|s| {
        let mut c = s.into_coeffs();
        if c[0].is_zero() {
            c[0] = int(1);
        }
        Series::new(c)
    })
}

/// Series with `w_0 = 0` and `w_1 != 0`.
pub fn order_one(order: usize) -> impl Strategy<Value = Series> {
    series_of(order).prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = Rational::zero();
        if c[1].is_zero() {
            c[1] = int(-1);
        }
        Series::new(c)
    })
}

/// Every coefficient nonzero.
pub fn hadamard_unit(order: usize) -> impl Strategy<Value = Series> {
    proptest::collection::vec(nonzero_rational(), order + 1).prop_map(Series::new)
}

/// Any `T(f|g)`, proper or not.
pub fn spec_strategy(order: usize) -> impl Strategy<Value = RiordanSpec> {
    (series_of(order), unit_series(order)).prop_map(|(f, g)| RiordanSpec::new(f, g).unwrap())
}

pub fn proper_spec(order: usize) -> impl Strategy<Value = RiordanSpec> {
    (unit_series(order), unit_series(order)).prop_map(|(f, g)| RiordanSpec::new(f, g).unwrap())
}
