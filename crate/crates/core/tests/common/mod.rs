#![allow(dead_code)]

use std::path::PathBuf;

use greyrank::{Attribute, AttributeKind, DecisionProblem, GreyInterval, Matrix, MethodParams};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Random positive interval with `lo` in [0.5, 10) and width in [0, 3).
pub fn random_interval(rng: &mut ChaCha8Rng) -> GreyInterval {
    let lo = rng.gen_range(0.5..10.0);
    let width = rng.gen_range(0.0..3.0);
    GreyInterval::new(lo, lo + width).unwrap()
}

pub fn random_simplex(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..m).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.iter().map(|v| v / total).collect()
}

/// Random problem with mixed attribute kinds, 1..=3 experts and random preferences.
pub fn random_problem(rng: &mut ChaCha8Rng, n: usize, m: usize) -> DecisionProblem {
    let attributes = (0..m)
        .map(|j| {
            let kind = if rng.gen_bool(0.5) {
                AttributeKind::Effect
            } else {
                AttributeKind::Cost
            };
            Attribute::new(format!("G{}", j + 1), kind)
        })
        .collect();
    let matrix = Matrix::from_fn(n, m, |_, _| random_interval(rng));
    let experts = rng.gen_range(1..=3);
    let expert_weights = (0..experts).map(|_| random_simplex(rng, m)).collect();
    let preferences = (0..n)
        .map(|_| {
            let lo = rng.gen_range(0.0..0.8);
            GreyInterval::new(lo, lo + rng.gen_range(0.0..0.2)).unwrap()
        })
        .collect();
    DecisionProblem::new(
        (1..=n).map(|i| format!("A{i}")).collect(),
        attributes,
        matrix,
        expert_weights,
        Some(preferences),
        MethodParams::default(),
    )
    .unwrap()
}

/// Straightforward crisp pipeline: sum (or reciprocal-sum) normalization,
/// preference blend, weighting, Euclidean distances to the column-wise best
/// and worst values, closeness `D- / (D+ + D-)`.
pub fn crisp_topsis(raw: &[Vec<f64>], cost: &[bool], weights: &[f64], prefs: &[f64]) -> Vec<f64> {
    let n = raw.len();
    let m = raw[0].len();
    let mut y = vec![vec![0.0; m]; n];
    for j in 0..m {
        let transformed: Vec<f64> = raw
            .iter()
            .map(|row| if cost[j] { 1.0 / row[j] } else { row[j] })
            .collect();
        let total: f64 = transformed.iter().sum();
        for i in 0..n {
            let x = transformed[i] / total;
            y[i][j] = weights[j] * (0.5 * prefs[i] + 0.5 * x);
        }
    }
    let best: Vec<f64> = (0..m)
        .map(|j| y.iter().map(|r| r[j]).fold(f64::MIN, f64::max))
        .collect();
    let worst: Vec<f64> = (0..m)
        .map(|j| y.iter().map(|r| r[j]).fold(f64::MAX, f64::min))
        .collect();
    y.iter()
        .map(|row| {
            let dp: f64 = row.iter().zip(&best).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            let dm: f64 = row.iter().zip(&worst).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            dm / (dp + dm)
        })
        .collect()
}
