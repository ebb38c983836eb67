//! Thin helpers over [`BigRational`].
//!
//! Every sign decision in the crate goes through these values; `f64`
//! appears only in advisory numbers and cross-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `x` lies in ℤ + 1/2.
pub fn is_half_integer(x: &Rational) -> bool {
    is_integer(&(x - half()))
}

/// Floor as a machine integer. Panics only if the value does not fit in `i64`.
pub fn floor_i64(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().expect("floor fits in i64")
}

/// Reduce into `[0, modulus)` for a positive rational modulus.
pub fn rem_euclid(x: &Rational, modulus: &Rational) -> Rational {
    debug_assert!(modulus.is_positive());
    x - modulus * (x / modulus).floor()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Renders as `"a/b"`, or `"a"` for integers.
pub fn render(x: &Rational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"a/b"` or `"a"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// `(-1)^e` for any integer exponent.
pub fn parity_sign(e: i64) -> i8 {
    if e.is_even() {
        1
    } else {
        -1
    }
}
