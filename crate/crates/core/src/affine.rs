//! Integrable weights of affine SL(N) at height `h = level + N`, the cyclic
//! automorphism `σ`, the N-ality grading and the bridge from weights to
//! parameter points.
//!
//! Labels are ρ-shifted: every Dynkin label is at least 1 and their sum is
//! at most `h - 1`. With this convention the N = 2 vertex set has `h - 1`
//! elements, matching the A_{h-1} diagram.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::{compute_q, g_values, ParamPoint};
use crate::rational::{int, rat, rem_euclid, render, to_f64, Rational};
use crate::sign::{cos_sign, Sign};

/// Tolerance on the imaginary part of the eigenvalue product.
pub const IMAG_TOL: f64 = 1e-9;

/// Tolerance for the float form of the `g^{(σ^j λ)} = g_j(λ')` identity.
/// Float eigenvalues at least this large must carry the exact sign.
pub const SIGN_TOL: f64 = 1e-6;

pub const BRIDGE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    n: usize,
    h: i64,
    labels: Vec<i64>,
}

impl Weight {
    pub fn new(n: usize, h: i64, labels: Vec<i64>) -> Result<Weight> {
        check_height(n, h)?;
        if labels.len() != n - 1 {
            return Err(Error::InvalidInput(format!(
                "SL({n}) weights have {} labels, got {}",
                n - 1,
                labels.len()
            )));
        }
        if labels.iter().any(|&l| l < 1) {
            return Err(Error::InvalidInput(format!(
                "labels must be >= 1: {labels:?}"
            )));
        }
        if labels.iter().sum::<i64>() >= h {
            return Err(Error::InvalidInput(format!(
                "label sum of {labels:?} must be < h = {h}"
            )));
        }
        Ok(Weight { n, h, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// The contragredient weight, labels reversed.
    pub fn conjugate(&self) -> Weight {
        let mut labels = self.labels.clone();
        labels.reverse();
        Weight {
            labels,
            ..self.clone()
        }
    }

    /// Validity check for a label vector at the same `(N, h)`.
    pub fn with_labels(&self, labels: Vec<i64>) -> Option<Weight> {
        Weight::new(self.n, self.h, labels).ok()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_height(n: usize, h: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("N must be >= 2, got {n}")));
    }
    if h <= n as i64 {
        return Err(Error::InvalidInput(format!(
            "need h > N, got h = {h}, N = {n}"
        )));
    }
    Ok(())
}

/// `C(n, k)` saturating at `usize::MAX`.
pub fn binomial(n: u64, k: u64) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Number of integrable weights, `C(h-1, N-1)`.
pub fn weight_count(n: usize, h: i64) -> usize {
    binomial((h - 1) as u64, (n - 1) as u64)
}

/// All integrable weights in lexicographic order.
pub fn enumerate_weights(n: usize, h: i64) -> Result<Vec<Weight>> {
    check_height(n, h)?;
    let mut out = Vec::with_capacity(weight_count(n, h));
    let mut labels = Vec::with_capacity(n - 1);
    fill(n - 1, h - 1, &mut labels, &mut |l| {
        out.push(Weight {
            n,
            h,
            labels: l.to_vec(),
        })
    });
    Ok(out)
}

fn fill(slots: usize, budget: i64, labels: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if slots == 0 {
        emit(labels);
        return;
    }
    // leave at least 1 for each remaining slot
    for v in 1..=budget - (slots as i64 - 1) {
        labels.push(v);
        fill(slots - 1, budget - v, labels, emit);
        labels.pop();
    }
}

/// `σ(λ) = (h - Σλ_j, λ_1, …, λ_{N-2})`.
pub fn sigma(w: &Weight) -> Weight {
    let mut labels = Vec::with_capacity(w.labels.len());
    labels.push(w.h - w.labels.iter().sum::<i64>());
    labels.extend_from_slice(&w.labels[..w.labels.len() - 1]);
    Weight {
        labels,
        ..w.clone()
    }
}

/// `σ^k(λ)` for any integer `k`, using `σ^N = id`.
pub fn sigma_pow(w: &Weight, k: i64) -> Weight {
    let steps = k.rem_euclid(w.n as i64);
    (0..steps).fold(w.clone(), |acc, _| sigma(&acc))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Weight,
    /// `σ^0(λ), σ^1(λ), …, σ^{d-1}(λ)`.
    pub members: Vec<Weight>,
    pub d: usize,
}

/// Partitions a weight list into σ-orbits, each represented by its
/// lexicographically least member. Orbits appear in order of representative.
pub fn orbits(weights: &[Weight]) -> Vec<Orbit> {
    let mut sorted: Vec<&Weight> = weights.iter().collect();
    sorted.sort();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for w in sorted {
        if seen.contains(w) {
            continue;
        }
        let mut members = vec![w.clone()];
        let mut next = sigma(w);
        while next != *w {
            members.push(next.clone());
            next = sigma(&next);
        }
        for m in &members {
            seen.insert(m.clone());
        }
        out.push(Orbit {
            representative: w.clone(),
            d: members.len(),
            members,
        });
    }
    out
}

/// N-ality `Σ j λ_j mod N`.
pub fn tau(w: &Weight) -> usize {
    let n = w.n as i64;
    w.labels
        .iter()
        .enumerate()
        .map(|(idx, l)| (idx as i64 + 1) * l)
        .sum::<i64>()
        .rem_euclid(n) as usize
}

/// The constant `c` with `τ(σ(λ)) ≡ τ(λ) + c (mod N)`; it equals `h mod N`.
pub fn tau_shift(n: usize, h: i64) -> usize {
    h.rem_euclid(n as i64) as usize
}

/// `(e_l, λ)` from `(e_l, Λ_i) = [l <= i] - i/N`.
pub fn scalar_e(w: &Weight, l: usize) -> Rational {
    let n = w.n as i64;
    w.labels
        .iter()
        .enumerate()
        .map(|(idx, &lam)| {
            let i = idx as i64 + 1;
            let delta = if (l as i64) <= i { 1 } else { 0 };
            (int(delta) - rat(i, n)) * int(lam)
        })
        .sum()
}

/// `λ' = λ / h`, always strictly inside the simplex.
pub fn to_param(w: &Weight) -> ParamPoint {
    ParamPoint::new(w.labels.iter().map(|&l| rat(l, w.h)).collect())
        .expect("integrable weights map into the open simplex")
}

/// `q^{(R)}_λ = (1/h) Σ_j j(λ_j - 1) + (N - h)(N - 1)/(2h)`.
pub fn q_r(w: &Weight) -> Rational {
    let n = w.n as i64;
    let h = w.h;
    let linear: i64 = w
        .labels
        .iter()
        .enumerate()
        .map(|(idx, l)| (idx as i64 + 1) * (l - 1))
        .sum();
    rat(linear, h) + rat((n - h) * (n - 1), 2 * h)
}

/// `ε_l(λ) = exp(-2πi (e_l, λ)/h)` for `l = 1…N`.
pub fn epsilons(w: &Weight) -> Vec<Complex<f64>> {
    (1..=w.n)
        .map(|l| {
            let phase = -2.0 * PI * to_f64(&scalar_e(w, l)) / w.h as f64;
            Complex::from_polar(1.0, phase)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenvalueData {
    #[serde(serialize_with = "ser_weight")]
    pub weight: Weight,
    #[serde(serialize_with = "ser_rational")]
    pub q_r: Rational,
    pub g_value: f64,
    pub g_imag: f64,
    /// Exact, from `g^{(λ)} = g_N(λ/h)`.
    pub g_sign: Sign,
}

pub(crate) fn ser_weight<S: serde::Serializer>(
    w: &Weight,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.labels.iter())
}

pub(crate) fn ser_rational<S: serde::Serializer>(
    x: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render(x))
}

/// Float value of `∏_l (1 + ε_l(λ))`.
pub fn eigenvalue_product(w: &Weight) -> Complex<f64> {
    epsilons(w)
        .into_iter()
        .fold(Complex::new(1.0, 0.0), |acc, e| {
            acc * (Complex::new(1.0, 0.0) + e)
        })
}

/// The intersection-form eigenvalue attached to a weight.
pub fn eigenvalue_g(w: &Weight) -> Result<EigenvalueData> {
    let value = eigenvalue_product(w);
    if value.im.abs() > IMAG_TOL {
        return Err(Error::Mismatch(format!(
            "eigenvalue product at {w} has imaginary part {:e}",
            value.im
        )));
    }
    // σ^N = id, so g^{(λ)} = g_N(λ').
    let g_sign = g_values(&to_param(w)).signs[w.n - 1];
    if Sign::of_f64(value.re, SIGN_TOL) != g_sign && value.re.abs() >= SIGN_TOL {
        return Err(Error::Mismatch(format!(
            "eigenvalue at {w} is {:e} but its exact sign is {g_sign}",
            value.re
        )));
    }
    Ok(EigenvalueData {
        weight: w.clone(),
        q_r: q_r(w),
        g_value: value.re,
        g_imag: value.im,
        g_sign,
    })
}

/// One `j` of the bridge between weights and parameter points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeRow {
    pub j: usize,
    #[serde(serialize_with = "ser_rational")]
    pub q_r_sigma_minus_j: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub q_j: Rational,
    pub q_mod2_equal: bool,
    pub q_exact_equal: bool,
    pub g_sigma_j: f64,
    pub g_j: f64,
    pub g_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeReport {
    #[serde(serialize_with = "ser_weight")]
    pub weight: Weight,
    pub rows: Vec<BridgeRow>,
    /// Every `q^{(R)}_{σ^{-j}λ} ≡ q_j(λ')` mod 2.
    pub q_mod2_holds: bool,
    /// Every `q^{(R)}_{σ^{-j}λ} = q_j(λ')` without reduction.
    pub q_exact_holds: bool,
    pub max_g_deviation: f64,
    pub g_holds: bool,
}

/// Checks `q^{(R)}_{σ^{-j}λ} = q_j(λ')` and `g^{(σ^j λ)} = g_j(λ')` for `j = 1…N`.
pub fn bridge_identities(w: &Weight) -> Result<BridgeReport> {
    let point = to_param(w);
    let q = compute_q(&point);
    let g = g_values(&point);
    let two = int(2);
    let mut rows = Vec::with_capacity(w.n);
    for j in 1..=w.n {
        let qr = q_r(&sigma_pow(w, -(j as i64)));
        let qj = q.get(j).clone();
        let q_mod2_equal = rem_euclid(&(&qr - &qj), &two).is_zero();
        let q_exact_equal = qr == qj;
        let g_sigma_j = eigenvalue_g(&sigma_pow(w, j as i64))?.g_value;
        let g_j = g.values[j - 1];
        rows.push(BridgeRow {
            j,
            q_r_sigma_minus_j: qr,
            q_j: qj,
            q_mod2_equal,
            q_exact_equal,
            g_sigma_j,
            g_j,
            g_deviation: (g_sigma_j - g_j).abs(),
        });
    }
    let max_g_deviation = rows.iter().map(|r| r.g_deviation).fold(0.0, f64::max);
    Ok(BridgeReport {
        weight: w.clone(),
        q_mod2_holds: rows.iter().all(|r| r.q_mod2_equal),
        q_exact_holds: rows.iter().all(|r| r.q_exact_equal),
        g_holds: max_g_deviation < BRIDGE_TOL,
        max_g_deviation,
        rows,
    })
}

/// Sign of `cos(π q^{(R)}_λ)`.
pub fn q_r_sign(w: &Weight) -> Sign {
    cos_sign(&q_r(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::compute_p;
    use crate::sign::count_signs;
    use proptest::prelude::*;

    fn wt(n: usize, h: i64, labels: &[i64]) -> Weight {
        Weight::new(n, h, labels.to_vec()).unwrap()
    }

    fn labels(ws: &[Weight]) -> Vec<Vec<i64>> {
        ws.iter().map(|w| w.labels().to_vec()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            labels(&enumerate_weights(2, 4).unwrap()),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            labels(&enumerate_weights(3, 4).unwrap()),
            vec![vec![1, 1], vec![1, 2], vec![2, 1]]
        );
        assert_eq!(enumerate_weights(3, 5).unwrap().len(), 6);
        assert!(enumerate_weights(3, 3).is_err());
        assert!(enumerate_weights(1, 5).is_err());
    }

    #[test]
    fn enumeration_matches_binomial() {
        for n in 2..=6 {
            for h in (n as i64 + 1)..=(n as i64 + 9) {
                let ws = enumerate_weights(n, h).unwrap();
                assert_eq!(ws.len(), weight_count(n, h));
                assert!(ws.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&wt(2, 4, &[1])), wt(2, 4, &[3]));
        assert_eq!(sigma(&wt(3, 4, &[1, 1])), wt(3, 4, &[2, 1]));
        assert_eq!(sigma(&wt(3, 4, &[2, 1])), wt(3, 4, &[1, 2]));
        assert_eq!(sigma(&wt(3, 4, &[1, 2])), wt(3, 4, &[1, 1]));
        assert_eq!(sigma(&wt(2, 4, &[2])), wt(2, 4, &[2]));
        assert_eq!(sigma_pow(&wt(3, 4, &[1, 1]), -1), wt(3, 4, &[1, 2]));
    }

    #[test]
    fn orbit_examples() {
        let o = orbits(&enumerate_weights(2, 4).unwrap());
        assert_eq!(o.len(), 2);
        assert_eq!(labels(&o[0].members), vec![vec![1], vec![3]]);
        assert_eq!(o[0].d, 2);
        assert_eq!(labels(&o[1].members), vec![vec![2]]);
        assert_eq!(o[1].d, 1);

        let o = orbits(&enumerate_weights(3, 4).unwrap());
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].d, 3);
    }

    #[test]
    fn orbits_partition_and_divide() {
        for n in 2..=6 {
            for h in (n as i64 + 1)..=(n as i64 + 7) {
                let ws = enumerate_weights(n, h).unwrap();
                let os = orbits(&ws);
                assert_eq!(os.iter().map(|o| o.d).sum::<usize>(), ws.len());
                for o in &os {
                    assert_eq!(n % o.d, 0);
                    assert_eq!(o.members.len(), o.d);
                    assert_eq!(sigma_pow(&o.representative, o.d as i64), o.representative);
                    assert!(o.members.iter().all(|m| *m >= o.representative));
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&wt(3, 4, &[1, 1])), 0);
        assert_eq!(tau(&wt(3, 4, &[2, 1])), 1);
        assert_eq!(tau(&wt(2, 4, &[1])), 1);
        assert_eq!(tau(&wt(2, 4, &[3])), 1);
    }

    #[test]
    fn tau_shift_is_h_mod_n() {
        for n in 2..=6 {
            for h in (n as i64 + 1)..=(n as i64 + 6) {
                for w in enumerate_weights(n, h).unwrap() {
                    assert_eq!(tau(&sigma(&w)), (tau(&w) + tau_shift(n, h)) % n);
                    assert_eq!((tau(&w) + tau(&w.conjugate())) % n, 0);
                }
            }
        }
    }

    #[test]
    fn to_param_examples() {
        assert_eq!(to_param(&wt(2, 4, &[2])).coords(), &[rat(1, 2)]);
        assert_eq!(
            to_param(&wt(3, 4, &[1, 1])).coords(),
            &[rat(1, 4), rat(1, 4)]
        );
    }

    #[test]
    fn scalar_product_of_e1_with_first_fundamental() {
        for n in 2..=6usize {
            let mut labels = vec![0; n - 1];
            labels[0] = 1;
            // Λ_1 itself is not integrable (labels must be >= 1), so evaluate the formula directly.
            let w = Weight { n, h: 100, labels };
            assert_eq!(scalar_e(&w, 1), int(1) - rat(1, n as i64));
        }
    }

    #[test]
    fn p_is_scaled_scalar_product() {
        for n in 2..=5 {
            for w in enumerate_weights(n, n as i64 + 5).unwrap() {
                let p = compute_p(&to_param(&w));
                for l in 1..=n {
                    assert_eq!(*p.get(l), scalar_e(&w, l) / int(w.h()));
                }
            }
        }
    }

    #[test]
    fn q_r_examples() {
        assert_eq!(q_r(&wt(2, 4, &[1])), rat(-1, 4));
        assert_eq!(q_r(&wt(2, 4, &[2])), int(0));
        assert_eq!(q_r(&wt(2, 4, &[3])), rat(1, 4));
    }

    #[test]
    fn eigenvalue_examples() {
        let e = eigenvalue_g(&wt(2, 4, &[2])).unwrap();
        assert!((e.g_value - 2.0).abs() < 1e-12);
        assert_eq!(e.g_sign, Sign::Plus);
        let e = eigenvalue_g(&wt(2, 4, &[1])).unwrap();
        assert!((e.g_value - (2.0 + 2f64.sqrt())).abs() < 1e-12);
        let e = eigenvalue_g(&wt(3, 4, &[1, 1])).unwrap();
        assert!(e.g_imag.abs() < 1e-9);
    }

    #[test]
    fn bridge_examples() {
        let b = bridge_identities(&wt(2, 4, &[2])).unwrap();
        assert!(b.g_holds && b.q_mod2_holds);
        for row in &b.rows {
            assert!((row.g_sigma_j - 2.0).abs() < 1e-12);
            assert!((row.g_j - 2.0).abs() < 1e-12);
        }
        let b = bridge_identities(&wt(2, 4, &[1])).unwrap();
        assert!(b.q_mod2_holds);
        // j = 1: σ^{-1}(1) = (3), q_R = 1/4 = q_1(1/4)
        assert_eq!(b.rows[0].q_r_sigma_minus_j, rat(1, 4));
        assert_eq!(b.rows[0].q_j, rat(1, 4));
    }

    #[test]
    fn orbit_multiset_of_eigenvalues() {
        for n in 2..=4 {
            for w in enumerate_weights(n, n as i64 + 4).unwrap() {
                let mut lhs: Vec<f64> = (1..=n as i64)
                    .map(|j| eigenvalue_g(&sigma_pow(&w, j)).unwrap().g_value)
                    .collect();
                let mut rhs = g_values(&to_param(&w)).values;
                lhs.sort_by(f64::total_cmp);
                rhs.sort_by(f64::total_cmp);
                for (a, b) in lhs.iter().zip(&rhs) {
                    assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn orbit_scaling_of_counts() {
        for n in 2..=6 {
            for h in (n as i64 + 1)..=(n as i64 + 5) {
                for o in orbits(&enumerate_weights(n, h).unwrap()) {
                    let point = to_param(&o.representative);
                    let full = count_signs(&g_values(&point).signs).unwrap();
                    let per: Vec<Sign> = o
                        .members
                        .iter()
                        .map(|m| eigenvalue_g(m).unwrap().g_sign)
                        .collect();
                    assert_eq!(full, count_signs(&per).unwrap().scaled(n / o.d));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn sigma_has_order_dividing_n(n in 2usize..7, extra in 1i64..10, seed in 0usize..1000) {
            let ws = enumerate_weights(n, n as i64 + extra).unwrap();
            let w = &ws[seed % ws.len()];
            prop_assert_eq!(&sigma_pow(w, n as i64), w);
            prop_assert!(Weight::new(n, w.h(), sigma(w).labels().to_vec()).is_ok());
        }

        #[test]
        fn eigenvalue_is_real_and_signed(n in 2usize..7, extra in 1i64..12, seed in 0usize..1000) {
            let ws = enumerate_weights(n, n as i64 + extra).unwrap();
            let e = eigenvalue_g(&ws[seed % ws.len()]).unwrap();
            prop_assert!(e.g_imag.abs() < IMAG_TOL);
            if e.g_value.abs() > 1e-9 {
                prop_assert_eq!(e.g_sign, Sign::of_f64(e.g_value, 0.0));
            }
        }
    }
}
