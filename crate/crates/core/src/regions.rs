//! Chamber decomposition of the simplex, the pairing between half-integer
//! `q_i` and vanishing `g_r`, and sign prediction from a chamber label.
//!
//! A chamber `D_γ` is the set of points with `β_i < N p_i < β_i + 1` for
//! every `i`, where `β_i = N/2 - i + γ_i`. Inside a chamber the signs of
//! both `cos(π q_i)` and `g_r` are constant and can be read off `γ` alone.
//! Half-integers are handled through the doubled integers `2β_i`, so all
//! comparisons here stay in `i64`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::point::{compute_p, compute_q, g_signs, ParamPoint};
use crate::rational::{
    floor_i64, int, is_half_integer, is_integer, parity_sign, rat, render, Rational,
};
use crate::sign::{Sign, SignVector};

/// Integer chamber label `γ_1 … γ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaVector {
    n: usize,
    gamma: Vec<i64>,
}

impl GammaVector {
    /// Validates that `β` is non-increasing and `β_1 - β_N <= N`.
    pub fn new(gamma: Vec<i64>) -> Result<GammaVector> {
        let n = gamma.len();
        if n < 2 {
            return Err(Error::InvalidInput(
                "chamber label needs N >= 2 entries".into(),
            ));
        }
        let g = GammaVector { n, gamma };
        let b = g.doubled_betas();
        if let Some(w) = b.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "beta increases between indices {} and {}",
                w + 1,
                w + 2
            )));
        }
        if b[0] - b[n - 1] > 2 * n as i64 {
            return Err(Error::InvalidInput("beta_1 - beta_N exceeds N".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    /// `β_i = N/2 - i + γ_i`, exact.
    pub fn betas(&self) -> Vec<Rational> {
        self.doubled_betas()
            .into_iter()
            .map(|b| rat(b, 2))
            .collect()
    }

    /// `2β_i = N - 2i + 2γ_i`.
    fn doubled_betas(&self) -> Vec<i64> {
        let n = self.n as i64;
        self.gamma
            .iter()
            .enumerate()
            .map(|(idx, g)| n - 2 * (idx as i64 + 1) + 2 * g)
            .collect()
    }

    /// Block ends `i_1 < … < i_t = N` of equal `β`.
    pub fn blocks(&self) -> BlockStructure {
        let b = self.doubled_betas();
        let mut boundaries: Vec<usize> = (1..self.n).filter(|&i| b[i - 1] != b[i]).collect();
        boundaries.push(self.n);
        BlockStructure { boundaries }
    }
}

/// Block ends `i_1 < i_2 < … < i_t = N`; `β` is constant on each block and
/// strictly decreasing from one block to the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub boundaries: Vec<usize>,
}

impl BlockStructure {
    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.is_empty()
    }

    /// `i_u` for a 1-based block index.
    pub fn end(&self, u: usize) -> usize {
        self.boundaries[u - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChamberClass {
    Interior(GammaVector),
    /// Indices `i` (1-based, ascending) with `q_i ∈ ℤ + 1/2`. Never empty.
    Boundary(Vec<usize>),
}

impl ChamberClass {
    pub fn is_interior(&self) -> bool {
        matches!(self, ChamberClass::Interior(_))
    }
}

/// Places a point in its open chamber, or reports the walls it sits on.
pub fn classify(point: &ParamPoint) -> ChamberClass {
    let n = point.n() as i64;
    let p = compute_p(point);
    let shifted: Vec<Rational> =
        p.0.iter()
            .enumerate()
            .map(|(idx, pi)| pi * int(n) + int(idx as i64 + 1) - rat(n, 2))
            .collect();
    let walls: Vec<usize> = shifted
        .iter()
        .enumerate()
        .filter(|(_, x)| is_integer(x))
        .map(|(idx, _)| idx + 1)
        .collect();
    if !walls.is_empty() {
        return ChamberClass::Boundary(walls);
    }
    let gamma = shifted.iter().map(floor_i64).collect();
    ChamberClass::Interior(GammaVector::new(gamma).expect("labels of valid points are well formed"))
}

/// The index `r` with `g_r = 0` paired with a half-integer `q_i = j + 1/2`.
///
/// `r` is the unique value in `1..=N` making `(r + j + i)/N` an integer.
pub fn lemma1_r(i: usize, q_i: &Rational, n: usize) -> Result<usize> {
    if n < 2 || i == 0 || i > n {
        return Err(Error::Precondition(format!(
            "index {i} out of range for N = {n}"
        )));
    }
    if !is_half_integer(q_i) {
        return Err(Error::Precondition(format!(
            "q_{i} = {} is not a half-integer",
            render(q_i)
        )));
    }
    let j = floor_i64(q_i);
    let (n, i) = (n as i64, i as i64);
    let s = i + j;
    // i - N/2 < i + j < i + N/2 - 1, doubled
    if 2 * s <= 2 * i - n || 2 * s >= 2 * i + n - 2 {
        return Err(Error::Precondition(format!(
            "q_{i} = {} is outside the range reachable in the simplex",
            render(q_i)
        )));
    }
    let r = if s < 0 {
        -s
    } else if s < n {
        n - s
    } else {
        2 * n - s
    };
    debug_assert!((r + s).is_multiple_of(&n));
    Ok(r as usize)
}

/// The index `i` whose half-integer `q_i` makes `g_r` vanish.
pub fn lemma1_inverse(r: usize, point: &ParamPoint) -> Result<usize> {
    let n = point.n();
    if r == 0 || r > n {
        return Err(Error::Precondition(format!(
            "index {r} out of range for N = {n}"
        )));
    }
    if g_signs(point)[r - 1] != Sign::Zero {
        return Err(Error::Precondition(format!("g_{r} is not zero at {point}")));
    }
    let q = compute_q(point);
    let candidates: Vec<usize> = (1..=n)
        .filter(|&i| {
            let x = (q.get(i) + int(i as i64) + int(r as i64) - rat(1, 2)) / int(n as i64);
            is_integer(&x)
        })
        .collect();
    match candidates.as_slice() {
        [i] => Ok(*i),
        _ => Err(Error::Mismatch(format!(
            "expected exactly one index pairing with g_{r}, found {candidates:?}"
        ))),
    }
}

/// Pairs `(i, r)` for every wall index `i` of a point.
pub fn boundary_pairs(point: &ParamPoint) -> Result<Vec<(usize, usize)>> {
    let q = compute_q(point);
    (1..=point.n())
        .filter(|&i| is_half_integer(q.get(i)))
        .map(|i| lemma1_r(i, q.get(i), point.n()).map(|r| (i, r)))
        .collect()
}

/// How the sign of `g_r` was obtained from a chamber label.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GPrediction {
    pub r: usize,
    /// Half-integer crossing index.
    pub k: i64,
    /// `f(r)`; equals the block count `t` when no crossing exists.
    pub block: usize,
    pub crossing: bool,
    pub sign: Sign,
}

/// Predicts the sign of every `g_r` inside `D_γ` from `γ` alone.
///
/// If some `k` has `β_N + 1 - r <= N(k + 1/2) <= β_1 - r`, the half-integer
/// `k + 1/2` separates two blocks `f(r)` and `f(r) + 1` and the sign is
/// `(-1)^{r + Nk - i_{f(r)}}`. Otherwise all factors share one window
/// `(k - 1/2, k + 1/2)` and the sign is `(-1)^{r + kN}`.
pub fn predict_g(gamma: &GammaVector) -> Result<Vec<GPrediction>> {
    let n = gamma.n as i64;
    let b = gamma.doubled_betas();
    let (b_first, b_last) = (b[0], b[b.len() - 1]);
    let blocks = gamma.blocks();
    let t = blocks.len();
    let mut out = Vec::with_capacity(gamma.n);
    for r in 1..=n {
        // doubled: B_N + 2 - 2r <= 2Nk + N <= B_1 - 2r
        let lo = b_last + 2 - 2 * r - n;
        let hi = b_first - 2 * r - n;
        let k = Integer::div_ceil(&lo, &(2 * n));
        let prediction = if 2 * n * k <= hi {
            let x = 2 * n * k + n;
            let f = (1..t)
                .find(|&u| {
                    let upper = b[blocks.end(u) - 1] - 2 * r;
                    let lower = b[blocks.end(u + 1) - 1] + 2 - 2 * r;
                    lower <= x && x <= upper
                })
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "no block brackets the crossing for r = {r}; empty chamber"
                    ))
                })?;
            let i_f = blocks.end(f) as i64;
            GPrediction {
                r: r as usize,
                k,
                block: f,
                crossing: true,
                sign: Sign::from_i8(parity_sign(r + n * k - i_f)),
            }
        } else {
            // k - 1/2 <= (β_N - r)/N and (β_1 + 1 - r)/N <= k + 1/2
            let k = Integer::div_floor(&(b_last - 2 * r + n), &(2 * n));
            if b_first + 2 - 2 * r > 2 * n * k + n {
                return Err(Error::InvalidInput(format!(
                    "chamber label admits neither sign branch for r = {r}; empty chamber"
                )));
            }
            GPrediction {
                r: r as usize,
                k,
                block: t,
                crossing: false,
                sign: Sign::from_i8(parity_sign(r + k * n)),
            }
        };
        out.push(prediction);
    }
    Ok(out)
}

pub fn predicted_g_signs(gamma: &GammaVector) -> Result<SignVector> {
    Ok(predict_g(gamma)?.into_iter().map(|p| p.sign).collect())
}

/// `cos(π q_i)` is positive for even `γ_i` and negative for odd.
pub fn predicted_q_signs(gamma: &GammaVector) -> SignVector {
    gamma
        .gamma
        .iter()
        .map(|&g| Sign::from_i8(parity_sign(g)))
        .collect()
}
