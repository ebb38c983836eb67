//! Seeded sampling of parameter points and the two verification campaigns.
//!
//! Every work item draws from its own ChaCha8 stream: the generator is
//! seeded with `seed_from_u64(seed)` and switched to stream
//! `(N << 32) | trial`. Results therefore do not depend on scheduling, and
//! parallel and sequential runs produce identical reports.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::weight_count;
use crate::config::CampaignConfig;
use crate::error::{Error, Result};
use crate::fusion::{verify_zuber, ZuberCase, VERTEX_CAP};
use crate::point::{compute_q, verify_theorem1_at, ParamPoint};
use crate::rational::{int, rat, render, to_f64, Rational};
use crate::regions::{
    classify, lemma1_inverse, lemma1_r, predicted_g_signs, predicted_q_signs, ChamberClass,
};
use crate::report::{Report, SCHEMA_VERSION};
use crate::sign::{Sign, SignCounts};

const SAMPLING_BUDGET: usize = 10_000;

/// Generator for one work item.
pub fn item_rng(seed: u64, n: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | trial as u64);
    rng
}

/// A lattice point `(c_1, …, c_{N-1}) / D` with positive parts summing below
/// `D`, for a denominator `D` drawn uniformly from `N..=bound`.
fn lattice_point(n: usize, bound: i64, rng: &mut impl Rng) -> Vec<Rational> {
    let den = rng.random_range(n as i64..=bound);
    // N-1 distinct cut points in 1..D-1 split D into N positive parts
    let mut cuts: Vec<i64> = sample(rng, (den - 1) as usize, n - 1)
        .into_iter()
        .map(|c| c as i64 + 1)
        .collect();
    cuts.sort_unstable();
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let x = rat(c - prev, den);
            prev = c;
            x
        })
        .collect()
}

fn check_bound(n: usize, bound: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("N must be >= 2, got {n}")));
    }
    if bound < 2 {
        return Err(Error::InvalidInput("denominator bound must be >= 2".into()));
    }
    if bound < n as i64 {
        // every coordinate is at least 1/bound, so the sum reaches 1
        return Err(Error::SamplingBudget(format!(
            "no point of D has coordinate denominators <= {bound} when N = {n}"
        )));
    }
    Ok(())
}

/// Draws a point strictly inside some chamber.
pub fn sample_interior(n: usize, denominator_bound: i64, rng: &mut impl Rng) -> Result<ParamPoint> {
    check_bound(n, denominator_bound)?;
    for _ in 0..SAMPLING_BUDGET {
        let point = ParamPoint::new(lattice_point(n, denominator_bound, rng))?;
        if classify(&point).is_interior() {
            return Ok(point);
        }
    }
    Err(Error::SamplingBudget(format!(
        "no interior point found for N = {n}, bound {denominator_bound}"
    )))
}

/// `(i, j)` pairs for which `q_i = j + 1/2` is attainable in the simplex.
pub fn admissible_pairs(n: usize) -> Vec<(usize, i64)> {
    let n_i = n as i64;
    (1..=n)
        .flat_map(|i| {
            // -N/2 < j < N/2 - 1
            (-n_i..n_i)
                .filter(move |&j| 2 * j > -n_i && 2 * j < n_i - 2)
                .map(move |j| (i, j))
        })
        .collect()
}

/// Draws a point with `q_i = j + 1/2` exactly.
///
/// Starts from a random lattice point and moves it along a segment toward
/// the simplex vertex where `q_i` is extreme, stopping on the wall. Every
/// attainable wall is hit on the first draw; the result's denominators may
/// exceed the lattice bound.
pub fn sample_boundary(
    n: usize,
    i: usize,
    j: i64,
    denominator_bound: i64,
    rng: &mut impl Rng,
) -> Result<ParamPoint> {
    check_bound(n, denominator_bound)?;
    if !admissible_pairs(n).contains(&(i, j)) {
        return Err(Error::Precondition(format!(
            "q_{i} = {j} + 1/2 is not attainable for N = {n}"
        )));
    }
    let n_i = n as i64;
    // q_i = (N+1)/2 - i - Σ_l c_l λ'_l with c_l = N - l for l >= i and -l below i
    let coeff = |l: usize| -> i64 {
        if l >= i {
            n_i - l as i64
        } else {
            -(l as i64)
        }
    };
    // the target lies strictly between min and max of {0} ∪ {c_l}, so pulling a random
    // interior point toward the extreme vertex on the far side hits it exactly
    let target = rat(n_i + 1, 2) - int(i as i64) - int(j) - rat(1, 2);
    let value = |coords: &[Rational]| -> Rational {
        coords
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(coeff(k + 1)))
            .sum()
    };
    let coords = lattice_point(n, denominator_bound, rng);
    let current = value(&coords);
    // vertex 0 is the origin (all weight on the slack coordinate)
    let (vertex, extreme) = if current < target {
        if i < n {
            (i, n_i - i as i64)
        } else {
            (0, 0)
        }
    } else if i > 1 {
        (i - 1, -(i as i64 - 1))
    } else {
        (0, 0)
    };
    let coords = if current == target {
        coords
    } else {
        let t = (&target - &current) / (int(extreme) - &current);
        let keep = int(1) - &t;
        let mut mixed: Vec<Rational> = coords.iter().map(|c| c * &keep).collect();
        if vertex > 0 {
            mixed[vertex - 1] += &t;
        }
        mixed
    };
    let point = ParamPoint::new(coords)?;
    debug_assert_eq!(*compute_q(&point).get(i), int(j) + rat(1, 2));
    Ok(point)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Interior,
    Boundary,
}

/// One sampled point of the Theorem 1 campaign.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Case {
    pub n: usize,
    pub trial: usize,
    pub kind: PointKind,
    pub point: Vec<String>,
    pub q: Vec<String>,
    pub q_signs: Vec<Sign>,
    pub g_signs: Vec<Sign>,
    pub q_counts: SignCounts,
    pub g_counts: SignCounts,
    /// Chamber label for interior points.
    pub gamma: Option<Vec<i64>>,
    /// Indices with half-integer `q_i` for boundary points.
    pub walls: Vec<usize>,
    /// `(i, r)` pairs of the half-integer/zero bijection.
    pub lemma1_pairs: Vec<(usize, usize)>,
    pub prediction_agrees: Option<bool>,
    pub warnings: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Runs every exact check at one point.
pub fn check_point(
    n: usize,
    trial: usize,
    kind: PointKind,
    point: &ParamPoint,
    tolerance: f64,
) -> Theorem1Case {
    let check = verify_theorem1_at(point);
    let mut failures = Vec::new();
    let mut warnings = Vec::new();
    if !check.pass {
        failures.push(format!(
            "Q counts {} != G counts {}",
            check.q_counts, check.g_counts
        ));
    }

    // float cross-checks flip the verdict only beyond the tolerance
    for (idx, (s, v)) in check.g.signs.iter().zip(&check.g.values).enumerate() {
        if v.abs() > tolerance && *s != Sign::of_f64(*v, 0.0) {
            failures.push(format!(
                "g_{} exact sign {s} but float value {v:e}",
                idx + 1
            ));
        } else if *s == Sign::Zero && v.abs() > 1e-12 {
            warnings.push(format!("g_{} is exactly zero, float value {v:e}", idx + 1));
        }
    }
    for (idx, (s, q)) in check.q_signs.iter().zip(&check.q.0).enumerate() {
        let c = (std::f64::consts::PI * to_f64(q)).cos();
        if c.abs() > tolerance && *s != Sign::of_f64(c, 0.0) {
            failures.push(format!(
                "cos(pi q_{}) exact sign {s} but float value {c:e}",
                idx + 1
            ));
        }
    }

    let mut gamma = None;
    let mut walls = Vec::new();
    let mut lemma1_pairs = Vec::new();
    let mut prediction_agrees = None;
    match classify(point) {
        ChamberClass::Interior(g) => {
            if kind == PointKind::Boundary {
                failures.push("boundary sample classified as interior".into());
            }
            let agrees = match predicted_g_signs(&g) {
                Ok(pg) => pg == check.g.signs && predicted_q_signs(&g) == check.q_signs,
                Err(e) => {
                    failures.push(format!("sign prediction failed: {e}"));
                    false
                }
            };
            if !agrees {
                failures.push("predicted chamber signs differ from direct signs".into());
            }
            prediction_agrees = Some(agrees);
            gamma = Some(g.gamma().to_vec());
        }
        ChamberClass::Boundary(w) => {
            if kind == PointKind::Interior {
                failures.push("interior sample classified as boundary".into());
            }
            if check.q_counts.zero == 0 || check.g_counts.zero == 0 {
                failures.push("boundary point without a zero on both sides".into());
            }
            for &i in &w {
                match lemma1_r(i, check.q.get(i), n) {
                    Ok(r) => {
                        if check.g.signs[r - 1] != Sign::Zero {
                            failures.push(format!("q_{i} half-integer but g_{r} nonzero"));
                        }
                        match lemma1_inverse(r, point) {
                            Ok(back) if back == i => lemma1_pairs.push((i, r)),
                            Ok(back) => failures.push(format!("pairing {i} -> {r} -> {back}")),
                            Err(e) => failures.push(format!("inverse pairing at r = {r}: {e}")),
                        }
                    }
                    Err(e) => failures.push(format!("pairing at i = {i}: {e}")),
                }
            }
            for r in (1..=n).filter(|&r| check.g.signs[r - 1] == Sign::Zero) {
                let round_trip =
                    lemma1_inverse(r, point).and_then(|i| lemma1_r(i, check.q.get(i), n));
                if !matches!(round_trip, Ok(back) if back == r) {
                    failures.push(format!("g_{r} = 0 does not pair back to itself"));
                }
            }
            walls = w;
        }
    }

    Theorem1Case {
        n,
        trial,
        kind,
        point: point.render(),
        q: check.q.0.iter().map(render).collect(),
        q_signs: check.q_signs,
        g_signs: check.g.signs,
        q_counts: check.q_counts,
        g_counts: check.g_counts,
        gamma,
        walls,
        lemma1_pairs,
        prediction_agrees,
        warnings,
        pass: failures.is_empty(),
        failures,
    }
}

fn is_boundary_trial(config: &CampaignConfig, rng: &mut impl Rng) -> bool {
    let numer = config.boundary_fraction.numer();
    let denom = config.boundary_fraction.denom();
    // exact Bernoulli draw with a rational probability
    let denom_u: u64 = denom.try_into().unwrap_or(u64::MAX);
    let numer_u: u64 = numer.try_into().unwrap_or(0);
    numer_u > 0 && rng.random_range(0..denom_u) < numer_u
}

fn run_theorem1_item(config: &CampaignConfig, n: usize, trial: usize) -> Result<Theorem1Case> {
    let mut rng = item_rng(config.seed, n, trial);
    let pairs = admissible_pairs(n);
    // N = 2 has no walls inside the simplex
    if is_boundary_trial(config, &mut rng) && !pairs.is_empty() {
        let (i, j) = pairs[trial % pairs.len()];
        let point = sample_boundary(n, i, j, config.denominator_bound, &mut rng)?;
        Ok(check_point(
            n,
            trial,
            PointKind::Boundary,
            &point,
            config.tolerance,
        ))
    } else {
        let point = sample_interior(n, config.denominator_bound, &mut rng)?;
        Ok(check_point(
            n,
            trial,
            PointKind::Interior,
            &point,
            config.tolerance,
        ))
    }
}

fn map_items<T, R>(parallel: bool, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R>
where
    T: Sync,
    R: Send,
{
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

/// Samples points for every `N` and checks Theorem 1 plus, on interior
/// points, the chamber sign prediction.
pub fn run_theorem1_campaign(config: &CampaignConfig) -> Result<Report> {
    config.validate()?;
    let started = Instant::now();
    let items: Vec<(usize, usize)> = config
        .n_values
        .iter()
        .flat_map(|&n| (0..config.trials).map(move |t| (n, t)))
        .collect();
    let cases = map_items(config.parallel, &items, |&(n, t)| {
        run_theorem1_item(config, n, t)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let failures = cases
        .iter()
        .flat_map(|c| {
            c.failures
                .iter()
                .map(move |f| format!("N={} trial={}: {f}", c.n, c.trial))
        })
        .collect();
    let mut report = Report::new("theorem1", config, failures);
    report.theorem1_cases = cases;
    report.finish(config.record_timing.then(|| started.elapsed()));
    Ok(report)
}

/// Runs the full fusion-graph verification for every `(N, level)`.
pub fn run_zuber_campaign(config: &CampaignConfig) -> Result<Report> {
    config.validate()?;
    if let Some(level) = config.level_range.iter().find(|&&l| l < 1) {
        return Err(Error::InvalidInput(format!(
            "levels must be >= 1, got {level}"
        )));
    }
    let items: Vec<(usize, i64)> = config
        .n_values
        .iter()
        .flat_map(|&n| config.level_range.iter().map(move |&l| (n, l + n as i64)))
        .collect();
    for &(n, h) in &items {
        let count = weight_count(n, h);
        if count > VERTEX_CAP {
            return Err(Error::VertexCap {
                count,
                cap: VERTEX_CAP,
            });
        }
    }
    let started = Instant::now();
    let results: Vec<(usize, i64, Result<ZuberCase>)> =
        map_items(config.parallel, &items, |&(n, h)| {
            (n, h, verify_zuber(n, h, config.tolerance))
        });
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for (n, h, result) in results {
        match result {
            Ok(case) => {
                failures.extend(case.failures.iter().map(|f| format!("N={n} h={h}: {f}")));
                cases.push(case);
            }
            Err(e @ (Error::Axiom(_) | Error::Mismatch(_) | Error::EigenSolver(_))) => {
                failures.push(format!("N={n} h={h}: {e}"));
            }
            Err(e) => return Err(e),
        }
    }
    let mut report = Report::new("zuber", config, failures);
    report.zuber_cases = cases;
    report.finish(config.record_timing.then(|| started.elapsed()));
    debug_assert_eq!(report.schema_version, SCHEMA_VERSION);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::DEFAULT_SEED;
    use crate::regions::ChamberClass;

    #[test]
    fn interior_sampler_is_deterministic() {
        let a = sample_interior(2, 8, &mut item_rng(DEFAULT_SEED, 2, 0)).unwrap();
        let b = sample_interior(2, 8, &mut item_rng(DEFAULT_SEED, 2, 0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn interior_sampler_stays_off_walls() {
        let mut rng = item_rng(7, 4, 0);
        for _ in 0..1000 {
            let p = sample_interior(4, 64, &mut rng).unwrap();
            assert!(classify(&p).is_interior());
        }
    }

    #[test]
    fn boundary_sampler_hits_requested_wall() {
        let mut rng = item_rng(11, 3, 0);
        let p = sample_boundary(3, 1, 0, 64, &mut rng).unwrap();
        let c = p.coords();
        assert_eq!(&c[0] * int(2) + &c[1], rat(1, 2));
        let p = sample_boundary(3, 2, 0, 64, &mut rng).unwrap();
        let c = p.coords();
        assert_eq!(&c[0] - &c[1], rat(1, 2));

        for n in 3..=6 {
            for (i, j) in admissible_pairs(n) {
                let p = sample_boundary(n, i, j, 64, &mut rng).unwrap();
                match classify(&p) {
                    ChamberClass::Boundary(walls) => assert!(walls.contains(&i)),
                    other => panic!("{other:?}"),
                }
            }
        }
    }

    #[test]
    fn admissible_pairs_small() {
        // N = 3: -3/2 < j < 1/2, so j ∈ {-1, 0}
        assert_eq!(
            admissible_pairs(3),
            vec![(1, -1), (1, 0), (2, -1), (2, 0), (3, -1), (3, 0)]
        );
        // N = 2: -1 < j < 0 has no solution
        assert!(admissible_pairs(2).is_empty());
        assert!(sample_boundary(3, 1, 1, 64, &mut item_rng(1, 3, 0)).is_err());
    }

    #[test]
    fn bound_below_n_is_exhausted() {
        assert!(matches!(
            sample_interior(8, 5, &mut item_rng(1, 8, 0)),
            Err(Error::SamplingBudget(_))
        ));
    }

    #[test]
    fn campaign_examples() {
        let config = CampaignConfig {
            n_values: vec![2],
            trials: 1,
            ..Default::default()
        };
        let r = run_theorem1_campaign(&config).unwrap();
        assert_eq!(r.theorem1_cases.len(), 1);
        assert!(r.pass);

        let config = CampaignConfig {
            n_values: vec![3],
            trials: 40,
            boundary_fraction: int(1),
            ..Default::default()
        };
        let r = run_theorem1_campaign(&config).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        for c in &r.theorem1_cases {
            assert_eq!(c.kind, PointKind::Boundary);
            assert!(c.q_counts.zero >= 1 && c.g_counts.zero >= 1);
        }

        let config = CampaignConfig {
            n_values: vec![],
            ..Default::default()
        };
        assert!(run_theorem1_campaign(&config).is_err());
    }

    #[test]
    fn zuber_campaign_rows() {
        let config = CampaignConfig {
            n_values: vec![2, 3],
            level_range: vec![1, 2],
            ..Default::default()
        };
        let r = run_zuber_campaign(&config).unwrap();
        assert_eq!(r.zuber_cases.len(), 4);
        assert!(r.pass);
        let config = CampaignConfig {
            n_values: vec![5],
            level_range: vec![60],
            ..Default::default()
        };
        assert!(matches!(
            run_zuber_campaign(&config),
            Err(Error::VertexCap { .. })
        ));
    }
}
