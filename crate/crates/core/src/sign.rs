//! Exact signs and their tallies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, rat, rem_euclid, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Sign {
        match v.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Zero => 0,
            Sign::Minus => -1,
        }
    }

    /// Sign of a float, treating `|x| <= tol` as zero.
    pub fn of_f64(x: f64, tol: f64) -> Sign {
        if x > tol {
            Sign::Plus
        } else if x < -tol {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.as_i8() * rhs.as_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Sign::Plus => "+",
            Sign::Zero => "0",
            Sign::Minus => "-",
        })
    }
}

pub type SignVector = Vec<Sign>;

/// Tally of a finite sign sequence: `b_+`, `b_-`, `b_0` and `a = b_+ - b_-`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCounts {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
    pub a: i64,
}

impl SignCounts {
    pub fn len(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Equal `b_+`, `b_-` and `b_0`.
    pub fn same_counts(&self, other: &SignCounts) -> bool {
        self.plus == other.plus && self.minus == other.minus && self.zero == other.zero
    }

    pub fn add(&mut self, sign: Sign) {
        match sign {
            Sign::Plus => self.plus += 1,
            Sign::Minus => self.minus += 1,
            Sign::Zero => self.zero += 1,
        }
        self.a = self.plus as i64 - self.minus as i64;
    }

    pub fn scaled(&self, factor: usize) -> SignCounts {
        SignCounts {
            plus: self.plus * factor,
            minus: self.minus * factor,
            zero: self.zero * factor,
            a: self.a * factor as i64,
        }
    }
}

impl fmt::Display for SignCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{} -{} 0:{}", self.plus, self.minus, self.zero)
    }
}

/// Tallies a non-empty sign sequence.
pub fn count_signs(signs: &[Sign]) -> Result<SignCounts> {
    if signs.is_empty() {
        return Err(Error::InvalidInput(
            "cannot count an empty sign sequence".into(),
        ));
    }
    let mut counts = SignCounts::default();
    for &s in signs {
        counts.add(s);
    }
    Ok(counts)
}

/// Exact sign of `cos(πq)`.
///
/// With `t = q mod 2` in `[0, 2)`, the cosine vanishes at `t ∈ {1/2, 3/2}`,
/// is positive on `[0, 1/2) ∪ (3/2, 2)` and negative in between.
pub fn cos_sign(q: &Rational) -> Sign {
    let t = rem_euclid(q, &int(2));
    let lo = rat(1, 2);
    let hi = rat(3, 2);
    if t == lo || t == hi {
        Sign::Zero
    } else if t > lo && t < hi {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cos_sign_examples() {
        assert_eq!(cos_sign(&int(0)), Sign::Plus);
        assert_eq!(cos_sign(&rat(1, 2)), Sign::Zero);
        assert_eq!(cos_sign(&rat(9, 8)), Sign::Minus);
        assert_eq!(cos_sign(&rat(-1, 2)), Sign::Zero);
        assert_eq!(cos_sign(&rat(-3, 4)), Sign::Minus);
        assert_eq!(cos_sign(&rat(7, 4)), Sign::Plus);
    }

    #[test]
    fn count_examples() {
        let c = count_signs(&[Sign::Plus, Sign::Plus]).unwrap();
        assert_eq!((c.plus, c.minus, c.zero, c.a), (2, 0, 0, 2));
        let c = count_signs(&[Sign::Plus, Sign::Zero, Sign::Plus]).unwrap();
        assert_eq!((c.plus, c.minus, c.zero, c.a), (2, 0, 1, 2));
        assert!(count_signs(&[]).is_err());
    }

    proptest! {
        #[test]
        fn cos_sign_matches_float(n in -2000i64..2000, d in 1i64..97) {
            let q = rat(n, d);
            let c = (std::f64::consts::PI * n as f64 / d as f64).cos();
            if c.abs() > 1e-9 {
                prop_assert_eq!(cos_sign(&q), Sign::of_f64(c, 0.0));
            }
        }

        #[test]
        fn counts_are_consistent(v in proptest::collection::vec(-1i8..=1, 1..40)) {
            let signs: Vec<Sign> = v.iter().map(|&x| Sign::from_i8(x)).collect();
            let c = count_signs(&signs).unwrap();
            prop_assert_eq!(c.len(), signs.len());
            prop_assert_eq!(c.a, c.plus as i64 - c.minus as i64);
        }
    }
}
