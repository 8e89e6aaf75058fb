//! Attribute weights.
//!
//! Subjective interval weights come from the min/max envelope of the experts'
//! weight vectors. Objective weights come from two crisp schemes on the
//! normalized matrix: a deviation-maximizing optimum and Shannon entropy
//! (applied to the lower- and upper-bound matrices separately). Their envelope
//! is the objective interval weight, and the final weight is the normalized
//! interval product of subjective and objective weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::GreyInterval;
use crate::matrix::Matrix;
use crate::model::{check_weight_vector, NormalizedMatrix};

/// Crisp non-negative weights, one per attribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Wraps weights that must be non-negative and sum to one.
    pub fn normalized(values: Vec<f64>) -> Result<Self> {
        check_weight_vector("weight vector", &values)?;
        Ok(WeightVector(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = f64;

    fn index(&self, j: usize) -> &f64 {
        &self.0[j]
    }
}

/// Interval weights, one per attribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalWeightVector(Vec<GreyInterval>);

impl IntervalWeightVector {
    pub fn new(values: Vec<GreyInterval>) -> Self {
        IntervalWeightVector(values)
    }

    pub fn values(&self) -> &[GreyInterval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for IntervalWeightVector {
    type Output = GreyInterval;

    fn index(&self, j: usize) -> &GreyInterval {
        &self.0[j]
    }
}

fn envelope(vectors: &[&[f64]]) -> Vec<GreyInterval> {
    let m = vectors[0].len();
    (0..m)
        .map(|j| {
            let (lo, hi) = vectors.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v[j]), hi.max(v[j]))
            });
            GreyInterval::from_ordered(lo, hi)
        })
        .collect()
}

/// Componentwise min/max envelope of the experts' weight vectors.
pub fn subjective_weights(expert_weights: &[Vec<f64>]) -> Result<IntervalWeightVector> {
    let first = expert_weights
        .first()
        .ok_or_else(|| Error::invalid("expert_weights", "at least one expert is required"))?;
    for (l, row) in expert_weights.iter().enumerate() {
        if row.len() != first.len() {
            return Err(Error::mismatch(format!("expert_weights[{l}]"), first.len(), row.len()));
        }
        check_weight_vector(&format!("expert_weights[{l}]"), row)?;
    }
    let rows: Vec<&[f64]> = expert_weights.iter().map(Vec::as_slice).collect();
    Ok(IntervalWeightVector(envelope(&rows)))
}

/// Random consistency indices for pairwise matrices of order 1..=15.
const RANDOM_INDEX: [f64; 15] = [
    0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49, 1.51, 1.48, 1.56, 1.57, 1.59,
];

const AHP_TOLERANCE: f64 = 1e-10;
const AHP_MAX_ITERATIONS: usize = 1000;

/// Principal eigenvector of a pairwise comparison matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AhpWeights {
    pub weights: WeightVector,
    pub lambda_max: f64,
    pub consistency_index: f64,
    pub consistency_ratio: f64,
    pub iterations: usize,
}

impl AhpWeights {
    /// Saaty's rule of thumb: a consistency ratio above 0.1 calls for revising the judgements.
    pub fn is_acceptable(&self) -> bool {
        self.consistency_ratio <= 0.1
    }
}

/// Derives weights from a positive reciprocal pairwise comparison matrix by power iteration.
pub fn ahp_eigenvector(pairwise: &Matrix<f64>) -> Result<AhpWeights> {
    let m = pairwise.rows();
    if m == 0 || pairwise.cols() != m {
        return Err(Error::mismatch("pairwise matrix columns", m, pairwise.cols()));
    }
    for i in 0..m {
        for j in 0..m {
            let p = pairwise[(i, j)];
            if !(p > 0.0) || !p.is_finite() {
                return Err(Error::invalid(
                    format!("pairwise[{i}][{j}]"),
                    format!("entries must be positive and finite, got {p}"),
                ));
            }
            if (p * pairwise[(j, i)] - 1.0).abs() > 1e-9 {
                return Err(Error::NotReciprocal { row: i, col: j });
            }
        }
    }

    let apply = |w: &[f64]| -> Vec<f64> {
        (0..m)
            .map(|i| pairwise.row(i).iter().zip(w).map(|(p, w)| p * w).sum())
            .collect()
    };

    let mut w = vec![1.0 / m as f64; m];
    let mut iterations = 0;
    loop {
        if iterations == AHP_MAX_ITERATIONS {
            return Err(Error::NoConvergence { iterations });
        }
        iterations += 1;
        let next = apply(&w);
        let total: f64 = next.iter().sum();
        let next: Vec<f64> = next.into_iter().map(|v| v / total).collect();
        let change = next.iter().zip(&w).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        w = next;
        if change < AHP_TOLERANCE {
            break;
        }
    }

    let pw = apply(&w);
    let lambda_max = pw.iter().zip(&w).map(|(a, b)| a / b).sum::<f64>() / m as f64;
    let (consistency_index, consistency_ratio) = if m <= 2 {
        (0.0, 0.0)
    } else {
        let ci = ((lambda_max - m as f64) / (m as f64 - 1.0)).max(0.0);
        let ri = RANDOM_INDEX.get(m - 1).copied().unwrap_or(RANDOM_INDEX[14]);
        (ci, ci / ri)
    };
    let result = AhpWeights {
        weights: WeightVector(w),
        lambda_max,
        consistency_index,
        consistency_ratio,
        iterations,
    };
    if !result.is_acceptable() {
        log::warn!(
            "pairwise matrix is inconsistent: CR = {:.4} > 0.1",
            result.consistency_ratio
        );
    }
    Ok(result)
}

/// Total pairwise distance `sum_i sum_k d(x_ij, x_kj)` of each column.
pub fn column_deviation_totals(x: &NormalizedMatrix) -> Vec<f64> {
    let x = x.matrix();
    (0..x.cols())
        .map(|j| {
            let column = x.column(j);
            column
                .iter()
                .map(|a| column.iter().map(|b| a.distance(b)).sum::<f64>())
                .sum()
        })
        .collect()
}

/// Value of the deviation objective `sum_j totals_j * beta_j`.
pub fn deviation_objective(totals: &[f64], beta: &[f64]) -> f64 {
    totals.iter().zip(beta).map(|(d, b)| d * b).sum()
}

fn require_two_plans(x: &NormalizedMatrix) -> Result<()> {
    if x.n_plans() < 2 {
        return Err(Error::invalid("plans", "objective weights need at least 2 plans"));
    }
    Ok(())
}

/// Maximizer of the deviation objective over non-negative unit-norm weights:
/// the column deviation totals scaled to unit Euclidean norm.
pub fn unit_norm_deviation_weights(x: &NormalizedMatrix) -> Result<Vec<f64>> {
    require_two_plans(x)?;
    let totals = column_deviation_totals(x);
    let norm = totals.iter().map(|d| d * d).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(Error::WeightsUndefined(
            "every attribute column is constant across plans".into(),
        ));
    }
    Ok(totals.iter().map(|d| d / norm).collect())
}

/// Deviation-maximizing weights normalized to sum to one.
pub fn objective_weights_opt(x: &NormalizedMatrix) -> Result<WeightVector> {
    require_two_plans(x)?;
    let totals = column_deviation_totals(x);
    let sum: f64 = totals.iter().sum();
    if !(sum > 0.0) {
        return Err(Error::WeightsUndefined(
            "every attribute column is constant across plans".into(),
        ));
    }
    Ok(WeightVector(totals.iter().map(|d| d / sum).collect()))
}

/// Normalized Shannon entropy `E_j` of each column of a non-negative matrix.
///
/// Values within 1e-12 of the bounds are snapped onto `[0, 1]`, so a uniform
/// column reports exactly 1.
pub fn column_entropies(bounds: &Matrix<f64>) -> Result<Vec<f64>> {
    let n = bounds.rows();
    if n < 2 {
        return Err(Error::invalid("plans", "entropy weights need at least 2 plans"));
    }
    if let Some(v) = bounds.iter().find(|v| !(**v >= 0.0)) {
        return Err(Error::invalid(
            "bound matrix",
            format!("entries must be non-negative, got {v}"),
        ));
    }
    let k = 1.0 / (n as f64).ln();
    (0..bounds.cols())
        .map(|j| {
            let sum: f64 = bounds.column_iter(j).sum();
            if !(sum > 0.0) {
                return Err(Error::ZeroColumnSum {
                    attribute: j.to_string(),
                });
            }
            let h: f64 = bounds
                .column_iter(j)
                .map(|v| v / sum)
                .filter(|&p| p > 0.0)
                .map(|p| -p * p.ln())
                .sum();
            let e = k * h;
            Ok(if e > 1.0 - 1e-12 {
                1.0
            } else if e < 1e-12 {
                0.0
            } else {
                e
            })
        })
        .collect()
}

/// Entropy weights `(1 - E_j) / sum_k (1 - E_k)` of a non-negative bound matrix.
pub fn entropy_weights(bounds: &Matrix<f64>) -> Result<WeightVector> {
    let entropies = column_entropies(bounds)?;
    weights_from_entropies(&entropies)
}

pub fn weights_from_entropies(entropies: &[f64]) -> Result<WeightVector> {
    let divergence: Vec<f64> = entropies.iter().map(|e| 1.0 - e).collect();
    let total: f64 = divergence.iter().sum();
    if !(total > 0.0) {
        return Err(Error::WeightsUndefined(
            "every attribute column is uniform (entropy 1)".into(),
        ));
    }
    Ok(WeightVector(divergence.iter().map(|d| d / total).collect()))
}

/// Componentwise envelope of the optimization and the two entropy weight vectors.
pub fn comprehensive_objective(
    beta_opt: &WeightVector,
    beta_lo: &WeightVector,
    beta_hi: &WeightVector,
) -> Result<IntervalWeightVector> {
    let m = beta_opt.len();
    for (name, v) in [("beta_ent_lo", beta_lo), ("beta_ent_hi", beta_hi)] {
        if v.len() != m {
            return Err(Error::mismatch(name, m, v.len()));
        }
    }
    Ok(IntervalWeightVector(envelope(&[
        beta_opt.values(),
        beta_lo.values(),
        beta_hi.values(),
    ])))
}

/// Final interval weights with the indices whose upper bound was clamped to 1.
pub fn final_weights_traced(
    alpha: &IntervalWeightVector,
    beta: &IntervalWeightVector,
) -> Result<(IntervalWeightVector, Vec<usize>)> {
    if alpha.len() != beta.len() {
        return Err(Error::mismatch("objective weights", alpha.len(), beta.len()));
    }
    let products = alpha
        .values()
        .iter()
        .zip(beta.values())
        .map(|(a, b)| a.mul(b))
        .collect::<Result<Vec<_>>>()?;
    let sum_lo: f64 = products.iter().map(GreyInterval::lo).sum();
    let sum_hi: f64 = products.iter().map(GreyInterval::hi).sum();
    if !(sum_lo > 0.0) {
        return Err(Error::DivisionUndefined);
    }
    let mut clamped = Vec::new();
    let values = products
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let hi = p.hi() / sum_lo;
            if hi > 1.0 {
                clamped.push(j);
            }
            GreyInterval::from_ordered(p.lo() / sum_hi, hi.min(1.0))
        })
        .collect();
    Ok((IntervalWeightVector(values), clamped))
}

/// Normalized interval product `alpha_j * beta_j / sum_k alpha_k * beta_k`.
///
/// The division uses outer bounds: lower over the sum of upper products, upper
/// over the sum of lower products, clamped at 1.
pub fn final_weights(alpha: &IntervalWeightVector, beta: &IntervalWeightVector) -> Result<IntervalWeightVector> {
    final_weights_traced(alpha, beta).map(|(w, _)| w)
}

/// Every intermediate weight vector of the weighting stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightSet {
    /// Subjective interval weights.
    pub alpha: IntervalWeightVector,
    pub beta_opt: WeightVector,
    pub entropy_lo: Vec<f64>,
    pub entropy_hi: Vec<f64>,
    pub beta_ent_lo: WeightVector,
    pub beta_ent_hi: WeightVector,
    /// Comprehensive objective interval weights.
    pub beta: IntervalWeightVector,
    /// Final interval weights.
    pub w: IntervalWeightVector,
    /// Attributes whose final upper weight was clamped to 1.
    pub clamped: Vec<usize>,
}

/// Runs the whole weighting stage on a normalized matrix.
pub fn compute_weights(
    expert_weights: &[Vec<f64>],
    x: &NormalizedMatrix,
    attribute_names: &[String],
) -> Result<WeightSet> {
    let name = |e: Error| match e {
        Error::ZeroColumnSum { attribute } => Error::ZeroColumnSum {
            attribute: attribute
                .parse::<usize>()
                .ok()
                .and_then(|j| attribute_names.get(j).cloned())
                .unwrap_or(attribute),
        },
        other => other,
    };
    let alpha = subjective_weights(expert_weights)?;
    if alpha.len() != x.n_attributes() {
        return Err(Error::mismatch("expert weight length", x.n_attributes(), alpha.len()));
    }
    let beta_opt = objective_weights_opt(x)?;
    let entropy_lo = column_entropies(&x.lower()).map_err(name)?;
    let entropy_hi = column_entropies(&x.upper()).map_err(name)?;
    let beta_ent_lo = weights_from_entropies(&entropy_lo)?;
    let beta_ent_hi = weights_from_entropies(&entropy_hi)?;
    let beta = comprehensive_objective(&beta_opt, &beta_ent_lo, &beta_ent_hi)?;
    let (w, clamped) = final_weights_traced(&alpha, &beta)?;
    Ok(WeightSet {
        alpha,
        beta_opt,
        entropy_lo,
        entropy_hi,
        beta_ent_lo,
        beta_ent_hi,
        beta,
        w,
        clamped,
    })
}
