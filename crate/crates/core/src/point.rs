//! Parameter points of the open simplex and the quantities `p`, `q`, `g`
//! evaluated at them.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, parity_sign, rat, render, to_f64, Rational};
use crate::sign::{cos_sign, count_signs, Sign, SignCounts, SignVector};

/// A point `λ' = (λ'_1, …, λ'_{N-1})` with every coordinate in `(0, 1)`
/// and coordinate sum strictly below 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    n: usize,
    coords: Vec<Rational>,
}

impl ParamPoint {
    /// Builds a point for `N = coords.len() + 1`.
    pub fn new(coords: Vec<Rational>) -> Result<ParamPoint> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint(
                "need N >= 2, i.e. at least one coordinate".into(),
            ));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        for (i, c) in coords.iter().enumerate() {
            if *c <= zero || *c >= one {
                return Err(Error::InvalidPoint(format!(
                    "coordinate {} = {} is not in (0, 1)",
                    i + 1,
                    render(c)
                )));
            }
        }
        let sum: Rational = coords.iter().sum();
        if sum >= one {
            return Err(Error::InvalidPoint(format!(
                "coordinate sum {} is not < 1",
                render(&sum)
            )));
        }
        Ok(ParamPoint {
            n: coords.len() + 1,
            coords,
        })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<ParamPoint> {
        ParamPoint::new(pairs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn render(&self) -> Vec<String> {
        self.coords.iter().map(render).collect()
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// `p_1 … p_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVector(pub Vec<Rational>);

/// `q_1 … q_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVector(pub Vec<Rational>);

impl PVector {
    /// `p_i` for a 1-based index.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }
}

impl QVector {
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn cos_signs(&self) -> SignVector {
        self.0.iter().map(cos_sign).collect()
    }
}

pub fn compute_p(point: &ParamPoint) -> PVector {
    let n = point.n;
    let weighted: Rational = point
        .coords
        .iter()
        .enumerate()
        .map(|(j, c)| c * int(j as i64 + 1))
        .sum();
    let mean = weighted / int(n as i64);
    // Suffix sums λ'_i + … + λ'_{N-1}; empty for i = N.
    let mut values = vec![Rational::zero(); n];
    let mut tail = Rational::zero();
    for i in (0..n).rev() {
        if i < n - 1 {
            tail += &point.coords[i];
        }
        values[i] = &tail - &mean;
    }
    PVector(values)
}

pub fn compute_q(point: &ParamPoint) -> QVector {
    let n = point.n as i64;
    let p = compute_p(point);
    QVector(
        p.0.iter()
            .enumerate()
            .map(|(idx, pi)| -(pi * int(n)) + rat(n + 1, 2) - int(idx as i64 + 1))
            .collect(),
    )
}

/// Exact signs of `g_1 … g_N` together with advisory float values.
#[derive(Clone, Debug, PartialEq)]
pub struct GValues {
    pub signs: SignVector,
    pub values: Vec<f64>,
}

/// Evaluates `g_i = (-1)^i ∏_r 2cos(π(p_r - i/N))` for every `i`.
pub fn g_values(point: &ParamPoint) -> GValues {
    g_values_from_p(&compute_p(point))
}

pub(crate) fn g_values_from_p(p: &PVector) -> GValues {
    let n = p.0.len() as i64;
    let mut signs = Vec::with_capacity(p.0.len());
    let mut values = Vec::with_capacity(p.0.len());
    for i in 1..=n {
        let shift = rat(i, n);
        let mut sign = Sign::from_i8(parity_sign(i));
        let mut value = parity_sign(i) as f64;
        for pr in &p.0 {
            let arg = pr - &shift;
            sign = sign * cos_sign(&arg);
            value *= 2.0 * (std::f64::consts::PI * to_f64(&arg)).cos();
        }
        signs.push(sign);
        values.push(value);
    }
    GValues { signs, values }
}

pub fn g_signs(point: &ParamPoint) -> SignVector {
    g_values(point).signs
}

/// Sign tallies of `Q_{λ'}` and `G_{λ'}` at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct Theorem1Check {
    pub q: QVector,
    pub q_signs: SignVector,
    pub g: GValues,
    pub q_counts: SignCounts,
    pub g_counts: SignCounts,
    pub pass: bool,
}

pub fn verify_theorem1_at(point: &ParamPoint) -> Theorem1Check {
    let q = compute_q(point);
    let q_signs = q.cos_signs();
    let g = g_values(point);
    let q_counts = count_signs(&q_signs).expect("N >= 2");
    let g_counts = count_signs(&g.signs).expect("N >= 2");
    let pass = q_counts.same_counts(&g_counts);
    Theorem1Check {
        q,
        q_signs,
        g,
        q_counts,
        g_counts,
        pass,
    }
}

/// True when `p` satisfies zero sum, strict decrease and the per-index bounds.
pub fn p_invariants_hold(p: &PVector) -> bool {
    let n = p.0.len() as i64;
    let sum: Rational = p.0.iter().sum();
    if !sum.is_zero() {
        return false;
    }
    if p.0.windows(2).any(|w| w[0] <= w[1]) {
        return false;
    }
    if (&p.0[0] - &p.0[p.0.len() - 1]).abs() >= Rational::one() {
        return false;
    }
    p.0.iter().enumerate().all(|(idx, pi)| {
        let i = idx as i64 + 1;
        *pi > rat(1 - i, n) && *pi < rat(n - i, n)
    })
}
