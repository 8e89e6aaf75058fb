//! Plan evaluation: grey TOPSIS, grey incidence relative approach degree,
//! max-entropy comprehensive incidence degree, and weighted Borda fusion of
//! the resulting rank vectors.
//!
//! Every score vector is turned into ranks by [`scores_to_ranks`]: descending
//! score, ties broken by ascending plan index and reported, never hidden.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::GreyInterval;
use crate::matrix::Matrix;
use crate::model::NormalizedMatrix;
use crate::weighting::IntervalWeightVector;

/// Preference-blended normalized matrix `z`.
pub type BlendedMatrix = Matrix<GreyInterval>;

/// Comprehensive weighted matrix `y_ij = w_j * z_ij`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedMatrix {
    pub blended: Matrix<GreyInterval>,
    pub weighted: Matrix<GreyInterval>,
}

impl WeightedMatrix {
    pub fn n_plans(&self) -> usize {
        self.weighted.rows()
    }

    pub fn n_attributes(&self) -> usize {
        self.weighted.cols()
    }
}

/// Positive and negative ideal plan attribute vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealVectors {
    pub positive: Vec<GreyInterval>,
    pub negative: Vec<GreyInterval>,
}

/// Incidence coefficients against the positive and negative ideals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncidenceMatrices {
    pub r_plus: Matrix<f64>,
    pub r_minus: Matrix<f64>,
    /// Set when every distance to the respective ideal was zero and all
    /// coefficients were defined as 1.
    pub degenerate_plus: bool,
    pub degenerate_minus: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GreyTopsis,
    GreyIncidence,
    MaxEntropyIncidence,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::GreyTopsis, Method::GreyIncidence, Method::MaxEntropyIncidence];

    pub fn name(&self) -> &'static str {
        match self {
            Method::GreyTopsis => "grey_topsis",
            Method::GreyIncidence => "grey_incidence",
            Method::MaxEntropyIncidence => "max_entropy_incidence",
        }
    }

    /// Position of the method's weight in the Borda weight triple.
    pub fn index(&self) -> usize {
        match self {
            Method::GreyTopsis => 0,
            Method::GreyIncidence => 1,
            Method::MaxEntropyIncidence => 2,
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grey_topsis" | "topsis" => Ok(Method::GreyTopsis),
            "grey_incidence" | "incidence" => Ok(Method::GreyIncidence),
            "max_entropy_incidence" | "entropy" => Ok(Method::MaxEntropyIncidence),
            other => Err(Error::invalid("method", format!("unknown method {other:?}"))),
        }
    }
}

/// Ranks derived from a score vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranking {
    /// `ranks[i]` is the 1-based rank of plan `i` (1 = best).
    pub ranks: Vec<usize>,
    /// Plan indices from best to worst.
    pub order: Vec<usize>,
    /// Groups of plan indices with equal scores, each in ascending index order.
    pub ties: Vec<Vec<usize>>,
}

impl Ranking {
    pub fn has_ties(&self) -> bool {
        !self.ties.is_empty()
    }
}

/// Method-specific intermediates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Trace {
    Topsis {
        d_plus: Vec<f64>,
        d_minus: Vec<f64>,
        /// Plans with `D+ + D- = 0`, scored 0.5 by convention.
        degenerate: Vec<usize>,
    },
    Incidence {
        g_plus: Vec<f64>,
        g_minus: Vec<f64>,
        theta_plus: f64,
        theta_minus: f64,
    },
    MaxEntropy {
        g_plus: Vec<f64>,
        g_minus: Vec<f64>,
        s: f64,
        beta1: f64,
        beta2: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingResult {
    pub method: Method,
    pub scores: Vec<f64>,
    #[serde(flatten)]
    pub ranking: Ranking,
    pub trace: Trace,
}

impl RankingResult {
    pub fn ranks(&self) -> &[usize] {
        &self.ranking.ranks
    }
}

/// `z_ij = q_i / 2 + x_ij / 2`; with no preferences `z = X`.
pub fn blend_preference(x: &NormalizedMatrix, preferences: Option<&[GreyInterval]>) -> Result<BlendedMatrix> {
    let x = x.matrix();
    let Some(q) = preferences else {
        return Ok(x.clone());
    };
    if q.len() != x.rows() {
        return Err(Error::mismatch("preferences", x.rows(), q.len()));
    }
    if let Some((i, qi)) = q.iter().enumerate().find(|(_, qi)| !qi.within(0.0, 1.0)) {
        return Err(Error::invalid(
            format!("preferences[{i}]"),
            format!("interval {qi} must lie within [0, 1]"),
        ));
    }
    Matrix::try_from_fn(x.rows(), x.cols(), |i, j| {
        Ok(q[i].scale(0.5)?.add(&x[(i, j)].scale(0.5)?))
    })
}

/// `y_ij = w_j * z_ij`.
pub fn weighted_matrix(z: &BlendedMatrix, w: &IntervalWeightVector) -> Result<WeightedMatrix> {
    if w.len() != z.cols() {
        return Err(Error::mismatch("final weights", z.cols(), w.len()));
    }
    let weighted = Matrix::try_from_fn(z.rows(), z.cols(), |i, j| w[j].mul(&z[(i, j)]))?;
    Ok(WeightedMatrix {
        blended: z.clone(),
        weighted,
    })
}

/// Bound-wise column maxima (positive ideal) and minima (negative ideal).
pub fn ideal_vectors(y: &WeightedMatrix) -> IdealVectors {
    let y = &y.weighted;
    let fold = |j: usize, pick: fn(f64, f64) -> f64| {
        let mut cells = y.column_iter(j);
        let first = *cells.next().expect("matrix has at least one row");
        let (lo, hi) = cells.fold((first.lo(), first.hi()), |(lo, hi), c| {
            (pick(lo, c.lo()), pick(hi, c.hi()))
        });
        GreyInterval::from_ordered(lo, hi)
    };
    IdealVectors {
        positive: (0..y.cols()).map(|j| fold(j, f64::max)).collect(),
        negative: (0..y.cols()).map(|j| fold(j, f64::min)).collect(),
    }
}

fn check_ideals(y: &WeightedMatrix, ideals: &IdealVectors) -> Result<()> {
    let m = y.n_attributes();
    if ideals.positive.len() != m || ideals.negative.len() != m {
        return Err(Error::mismatch(
            "ideal vectors",
            m,
            ideals.positive.len().min(ideals.negative.len()),
        ));
    }
    Ok(())
}

fn ideal_distance(row: &[GreyInterval], ideal: &[GreyInterval]) -> f64 {
    row.iter()
        .zip(ideal)
        .map(|(a, b)| {
            let (dh, dl) = (a.hi() - b.hi(), a.lo() - b.lo());
            dh * dh + dl * dl
        })
        .sum::<f64>()
        .sqrt()
}

/// Relative approach degree `C_i = D_i- / (D_i+ + D_i-)`.
pub fn topsis_scores(y: &WeightedMatrix, ideals: &IdealVectors) -> Result<RankingResult> {
    check_ideals(y, ideals)?;
    let y = &y.weighted;
    let d_plus: Vec<f64> = y.iter_rows().map(|row| ideal_distance(row, &ideals.positive)).collect();
    let d_minus: Vec<f64> = y.iter_rows().map(|row| ideal_distance(row, &ideals.negative)).collect();
    let mut degenerate = Vec::new();
    let scores: Vec<f64> = d_plus
        .iter()
        .zip(&d_minus)
        .enumerate()
        .map(|(i, (&dp, &dm))| {
            let total = dp + dm;
            if total > 0.0 {
                dm / total
            } else {
                degenerate.push(i);
                0.5
            }
        })
        .collect();
    Ok(RankingResult {
        method: Method::GreyTopsis,
        ranking: scores_to_ranks(&scores),
        scores,
        trace: Trace::Topsis {
            d_plus,
            d_minus,
            degenerate,
        },
    })
}

fn coefficients(distances: &Matrix<f64>, rho: f64) -> (Matrix<f64>, bool) {
    let min = distances.iter().copied().fold(f64::INFINITY, f64::min);
    let max = distances.iter().copied().fold(0.0, f64::max);
    if !(max > 0.0) {
        return (distances.map(|_| 1.0), true);
    }
    let numerator = min + rho * max;
    (distances.map(|&d| numerator / (d + rho * max)), false)
}

/// Grey incidence coefficients of every cell against the ideals, with global
/// min/max distances taken per sign over all cells.
pub fn incidence_coefficients(y: &WeightedMatrix, ideals: &IdealVectors, rho: f64) -> Result<IncidenceMatrices> {
    check_ideals(y, ideals)?;
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::invalid("rho", format!("must lie in (0, 1), got {rho}")));
    }
    let y = &y.weighted;
    let d_plus = Matrix::from_fn(y.rows(), y.cols(), |i, j| y[(i, j)].distance(&ideals.positive[j]));
    let d_minus = Matrix::from_fn(y.rows(), y.cols(), |i, j| y[(i, j)].distance(&ideals.negative[j]));
    let (r_plus, degenerate_plus) = coefficients(&d_plus, rho);
    let (r_minus, degenerate_minus) = coefficients(&d_minus, rho);
    Ok(IncidenceMatrices {
        r_plus,
        r_minus,
        degenerate_plus,
        degenerate_minus,
    })
}

/// Row means of the coefficient matrices: `(G+, G-)`.
pub fn incidence_degrees(r: &IncidenceMatrices) -> (Vec<f64>, Vec<f64>) {
    let mean = |m: &Matrix<f64>| -> Vec<f64> {
        m.iter_rows()
            .map(|row| row.iter().sum::<f64>() / row.len() as f64)
            .collect()
    };
    (mean(&r.r_plus), mean(&r.r_minus))
}

/// `C'_i = G+ θ+ / (G+ θ+ + G- θ-)`, or `G+` when `θ+ = 1, θ- = 0`.
pub fn incidence_scores(g_plus: &[f64], g_minus: &[f64], theta_plus: f64, theta_minus: f64) -> Result<RankingResult> {
    if g_plus.len() != g_minus.len() {
        return Err(Error::mismatch(
            "negative incidence degrees",
            g_plus.len(),
            g_minus.len(),
        ));
    }
    if !(theta_plus > 0.0 && theta_plus <= 1.0 && (0.0..=1.0).contains(&theta_minus))
        || (theta_plus + theta_minus - 1.0).abs() > crate::model::SUM_TOLERANCE
    {
        return Err(Error::invalid(
            "theta",
            format!("need theta_plus in (0, 1], theta_minus in [0, 1], summing to 1; got {theta_plus}, {theta_minus}"),
        ));
    }
    let scores: Vec<f64> = if theta_minus == 0.0 {
        g_plus.to_vec()
    } else {
        g_plus
            .iter()
            .zip(g_minus)
            .map(|(gp, gm)| gp * theta_plus / (gp * theta_plus + gm * theta_minus))
            .collect()
    };
    Ok(RankingResult {
        method: Method::GreyIncidence,
        ranking: scores_to_ranks(&scores),
        scores,
        trace: Trace::Incidence {
            g_plus: g_plus.to_vec(),
            g_minus: g_minus.to_vec(),
            theta_plus,
            theta_minus,
        },
    })
}

/// Weights `(β1, β2)` maximizing the entropy-regularized comprehensive incidence:
/// `β1 = e^s / (1 + e^s)`, `β2 = 1 / (1 + e^s)` with `s = sum_i (G+_i + G-_i - 1)`.
///
/// The smaller weight is evaluated directly as a logistic of `-|s|` and the
/// larger as its complement, so `β1 + β2 = 1` and large `|s|` cannot overflow.
pub fn max_entropy_weights(g_plus: &[f64], g_minus: &[f64]) -> (f64, f64) {
    let s: f64 = g_plus.iter().zip(g_minus).map(|(p, m)| p + m - 1.0).sum();
    logistic_pair(s)
}

pub(crate) fn logistic_pair(s: f64) -> (f64, f64) {
    let t = (-s.abs()).exp();
    let small = t / (1.0 + t);
    let large = 1.0 - small;
    if s >= 0.0 {
        (large, small)
    } else {
        (small, large)
    }
}

/// `C''_i = β1 G+_i + β2 (1 - G-_i)`.
pub fn entropy_incidence_scores(g_plus: &[f64], g_minus: &[f64], beta1: f64, beta2: f64) -> Result<RankingResult> {
    if g_plus.len() != g_minus.len() {
        return Err(Error::mismatch(
            "negative incidence degrees",
            g_plus.len(),
            g_minus.len(),
        ));
    }
    if (beta1 + beta2 - 1.0).abs() > 1e-12 || beta1 < 0.0 || beta2 < 0.0 {
        return Err(Error::invalid(
            "beta",
            format!("need non-negative beta1 + beta2 = 1, got {beta1}, {beta2}"),
        ));
    }
    let s: f64 = g_plus.iter().zip(g_minus).map(|(p, m)| p + m - 1.0).sum();
    let scores: Vec<f64> = g_plus
        .iter()
        .zip(g_minus)
        .map(|(gp, gm)| beta1 * gp + beta2 * (1.0 - gm))
        .collect();
    Ok(RankingResult {
        method: Method::MaxEntropyIncidence,
        ranking: scores_to_ranks(&scores),
        scores,
        trace: Trace::MaxEntropy {
            g_plus: g_plus.to_vec(),
            g_minus: g_minus.to_vec(),
            s,
            beta1,
            beta2,
        },
    })
}

/// Ranks by descending score; equal scores keep ascending plan index and are
/// reported as a tie group.
pub fn scores_to_ranks(scores: &[f64]) -> Ranking {
    rank_with_tolerance(scores, 0.0)
}

fn rank_with_tolerance(scores: &[f64], tolerance: f64) -> Ranking {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && scores[order[end - 1]] - scores[order[end]] <= tolerance {
            end += 1;
        }
        if end - start > 1 {
            order[start..end].sort_unstable();
            ties.push(order[start..end].to_vec());
        }
        start = end;
    }

    let mut ranks = vec![0; scores.len()];
    for (position, &plan) in order.iter().enumerate() {
        ranks[plan] = position + 1;
    }
    Ranking { ranks, order, ties }
}

/// Weighted Borda fusion result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BordaResult {
    pub weights: Vec<f64>,
    pub scores: Vec<f64>,
    #[serde(flatten)]
    pub ranking: Ranking,
}

/// Score of plan `i` is `sum_k weights_k * (n - rank_k(i))`; the final rank
/// sorts those scores descending.
///
/// Scores within `1e-12 * n` of each other count as tied, which absorbs the
/// rounding of fractional method weights.
pub fn weighted_borda(rank_vectors: &[Vec<usize>], weights: &[f64]) -> Result<BordaResult> {
    let Some(first) = rank_vectors.first() else {
        return Err(Error::invalid("rank_vectors", "at least one rank vector is required"));
    };
    if weights.len() != rank_vectors.len() {
        return Err(Error::mismatch("borda weights", rank_vectors.len(), weights.len()));
    }
    crate::model::check_weight_vector("borda weights", weights)?;
    let n = first.len();
    for (k, ranks) in rank_vectors.iter().enumerate() {
        if ranks.len() != n {
            return Err(Error::mismatch(format!("rank vector {k}"), n, ranks.len()));
        }
        let mut seen = vec![false; n];
        for &r in ranks {
            if r == 0 || r > n || std::mem::replace(&mut seen[r - 1], true) {
                return Err(Error::invalid(
                    format!("rank vector {k}"),
                    format!("not a permutation of 1..={n}"),
                ));
            }
        }
    }
    let scores: Vec<f64> = (0..n)
        .map(|i| {
            rank_vectors
                .iter()
                .zip(weights)
                .map(|(ranks, w)| w * (n - ranks[i]) as f64)
                .sum()
        })
        .collect();
    Ok(BordaResult {
        weights: weights.to_vec(),
        ranking: rank_with_tolerance(&scores, 1e-12 * n as f64),
        scores,
    })
}

/// Everything the ranking stage produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingStage {
    pub blended: Matrix<GreyInterval>,
    pub weighted: Matrix<GreyInterval>,
    pub ideals: IdealVectors,
    pub incidence: IncidenceMatrices,
    pub methods: Vec<RankingResult>,
    pub borda: BordaResult,
}

/// Runs the selected methods on a normalized matrix and fuses their ranks.
///
/// `borda_weights` are indexed by [`Method::index`]; weights of unselected
/// methods are dropped and the rest renormalized.
pub fn rank_plans(
    x: &NormalizedMatrix,
    preferences: Option<&[GreyInterval]>,
    w: &IntervalWeightVector,
    params: &crate::model::MethodParams,
    methods: &[Method],
) -> Result<RankingStage> {
    if x.n_plans() < 2 {
        return Err(Error::invalid("plans", "ranking needs at least 2 plans"));
    }
    if methods.is_empty() {
        return Err(Error::invalid("methods", "at least one method must be selected"));
    }
    let z = blend_preference(x, preferences)?;
    let y = weighted_matrix(&z, w)?;
    let ideals = ideal_vectors(&y);
    let incidence = incidence_coefficients(&y, &ideals, params.rho)?;
    let (g_plus, g_minus) = incidence_degrees(&incidence);

    let mut results = Vec::with_capacity(methods.len());
    for method in Method::ALL.iter().filter(|m| methods.contains(m)) {
        let result = match method {
            Method::GreyTopsis => topsis_scores(&y, &ideals)?,
            Method::GreyIncidence => incidence_scores(&g_plus, &g_minus, params.theta_plus, params.theta_minus)?,
            Method::MaxEntropyIncidence => {
                let (b1, b2) = max_entropy_weights(&g_plus, &g_minus);
                entropy_incidence_scores(&g_plus, &g_minus, b1, b2)?
            }
        };
        results.push(result);
    }

    let raw: Vec<f64> = results.iter().map(|r| params.borda_weights[r.method.index()]).collect();
    let total: f64 = raw.iter().sum();
    if !(total > 0.0) {
        return Err(Error::invalid(
            "params.borda_weights",
            "selected methods all have zero Borda weight",
        ));
    }
    let weights: Vec<f64> = raw.iter().map(|v| v / total).collect();
    let rank_vectors: Vec<Vec<usize>> = results.iter().map(|r| r.ranking.ranks.clone()).collect();
    let borda = weighted_borda(&rank_vectors, &weights)?;

    Ok(RankingStage {
        blended: y.blended,
        weighted: y.weighted,
        ideals,
        incidence,
        methods: results,
        borda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(lo: f64, hi: f64) -> GreyInterval {
        GreyInterval::new(lo, hi).unwrap()
    }

    fn wm(rows: Vec<Vec<GreyInterval>>) -> WeightedMatrix {
        let m = Matrix::from_rows(rows).unwrap();
        WeightedMatrix {
            blended: m.clone(),
            weighted: m,
        }
    }

    fn nm(rows: Vec<Vec<GreyInterval>>) -> NormalizedMatrix {
        NormalizedMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn blend_examples() {
        let x = nm(vec![vec![gi(0.2, 0.4)], vec![gi(0.1, 0.3)]]);
        let z = blend_preference(&x, Some(&[gi(0.4, 0.6), gi(0.1, 0.3)])).unwrap();
        assert!((z[(0, 0)].lo() - 0.3).abs() < 1e-15 && (z[(0, 0)].hi() - 0.5).abs() < 1e-15);
        assert_eq!(z[(1, 0)], gi(0.1, 0.3));
        assert_eq!(&blend_preference(&x, None).unwrap(), x.matrix());
        assert!(blend_preference(&x, Some(&[gi(0.4, 0.6)])).is_err());
    }

    #[test]
    fn weighted_matrix_examples() {
        let z = Matrix::from_rows(vec![vec![gi(0.2, 0.3), gi(0.2, 0.3), gi(0.2, 0.3)]]).unwrap();
        let w = IntervalWeightVector::new(vec![GreyInterval::ONE, GreyInterval::ZERO, gi(0.5, 0.6)]);
        let y = weighted_matrix(&z, &w).unwrap().weighted;
        assert_eq!(y[(0, 0)], gi(0.2, 0.3));
        assert_eq!(y[(0, 1)], GreyInterval::ZERO);
        assert!((y[(0, 2)].lo() - 0.10).abs() < 1e-15 && (y[(0, 2)].hi() - 0.18).abs() < 1e-15);
        let short = IntervalWeightVector::new(vec![GreyInterval::ONE]);
        assert!(matches!(
            weighted_matrix(&z, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ideals_mix_rows() {
        let y = wm(vec![vec![gi(1., 2.)], vec![gi(0., 3.)]]);
        let ideals = ideal_vectors(&y);
        assert_eq!(ideals.positive, vec![gi(1., 3.)]);
        assert_eq!(ideals.negative, vec![gi(0., 2.)]);

        let single = wm(vec![vec![gi(1., 2.), gi(3., 4.)]]);
        let ideals = ideal_vectors(&single);
        assert_eq!(ideals.positive, single.weighted.row(0));
        assert_eq!(ideals.negative, single.weighted.row(0));
    }

    #[test]
    fn topsis_extremes() {
        let y = wm(vec![
            vec![gi(0.3, 0.4), gi(0.5, 0.6)],
            vec![gi(0.1, 0.2), gi(0.2, 0.3)],
            vec![gi(0.2, 0.3), gi(0.3, 0.5)],
        ]);
        let r = topsis_scores(&y, &ideal_vectors(&y)).unwrap();
        assert_eq!(r.scores[0], 1.0);
        assert_eq!(r.scores[1], 0.0);
        assert!(r.scores[2] > 0.0 && r.scores[2] < 1.0);
        assert_eq!(r.ranks(), &[1, 3, 2]);
    }

    #[test]
    fn topsis_identical_plans_score_half() {
        let y = wm(vec![vec![gi(0.3, 0.4)], vec![gi(0.3, 0.4)]]);
        let r = topsis_scores(&y, &ideal_vectors(&y)).unwrap();
        assert_eq!(r.scores, vec![0.5, 0.5]);
        assert!(matches!(&r.trace, Trace::Topsis { degenerate, .. } if degenerate == &vec![0, 1]));
        assert_eq!(r.ranking.ties, vec![vec![0, 1]]);
    }

    #[test]
    fn incidence_extremes() {
        // distances to the positive ideal in the single column: 0 and M
        let y = wm(vec![vec![gi(0.0, 0.0)], vec![gi(3.0, 4.0)]]);
        let ideals = ideal_vectors(&y);
        let r = incidence_coefficients(&y, &ideals, 0.5).unwrap();
        assert_eq!(r.r_plus[(1, 0)], 1.0);
        assert!((r.r_plus[(0, 0)] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.r_minus[(0, 0)], 1.0);
        assert!(!r.degenerate_plus);
    }

    #[test]
    fn incidence_constant_distance_field() {
        // each cell is at distance 1 from its column's positive ideal
        let y = wm(vec![vec![gi(0.0, 1.0), gi(2.0, 3.0)], vec![gi(1.0, 2.0), gi(1.0, 4.0)]]);
        let ideals = IdealVectors {
            positive: vec![gi(1.0, 1.0), gi(2.0, 4.0)],
            negative: vec![gi(0.0, 1.0), gi(1.0, 3.0)],
        };
        let r = incidence_coefficients(&y, &ideals, 0.5).unwrap();
        assert!(r.r_plus.iter().all(|&v| (v - 1.0).abs() < 1e-15), "{:?}", r.r_plus);
    }

    #[test]
    fn incidence_all_zero_distances() {
        let y = wm(vec![vec![gi(1.0, 1.0)], vec![gi(1.0, 1.0)]]);
        let r = incidence_coefficients(&y, &ideal_vectors(&y), 0.5).unwrap();
        assert!(r.degenerate_plus && r.degenerate_minus);
        assert!(r.r_plus.iter().all(|&v| v == 1.0));
    }

    #[test]
    fn incidence_degree_means() {
        let r = IncidenceMatrices {
            r_plus: Matrix::from_rows(vec![vec![1.0, 1.0], vec![1.0 / 3.0, 1.0]]).unwrap(),
            r_minus: Matrix::from_rows(vec![vec![0.5, 0.5], vec![1.0, 1.0]]).unwrap(),
            degenerate_plus: false,
            degenerate_minus: false,
        };
        let (gp, gm) = incidence_degrees(&r);
        assert_eq!(gp[0], 1.0);
        assert!((gp[1] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(gm, vec![0.5, 1.0]);
    }

    #[test]
    fn incidence_score_branches() {
        let r = incidence_scores(&[0.7, 0.4], &[0.7, 0.9], 0.5, 0.5).unwrap();
        assert_eq!(r.scores[0], 0.5);
        let r = incidence_scores(&[0.7, 0.4], &[0.3, 0.9], 1.0, 0.0).unwrap();
        assert_eq!(r.scores, vec![0.7, 0.4]);
        assert!(incidence_scores(&[0.7], &[0.3], 0.6, 0.6).is_err());
    }

    #[test]
    fn max_entropy_weight_examples() {
        assert_eq!(max_entropy_weights(&[0.5], &[0.5]), (0.5, 0.5));
        let (b1, b2) = max_entropy_weights(&[1.0], &[0.5]);
        assert!((b1 - 0.5f64.exp() / (1.0 + 0.5f64.exp())).abs() < 1e-15);
        assert!((b1 - 0.62246).abs() < 1e-5);
        assert!((b1 + b2 - 1.0).abs() < 1e-15);
        let (b1, b2) = logistic_pair(1e4);
        assert_eq!((b1, b2), (1.0, 0.0));
        let (b1, b2) = logistic_pair(-1e4);
        assert_eq!((b1, b2), (0.0, 1.0));
    }

    #[test]
    fn entropy_incidence_example() {
        let r = entropy_incidence_scores(&[1.0, 1.0], &[1.0 / 3.0, 0.5], 0.5, 0.5).unwrap();
        assert!((r.scores[0] - 5.0 / 6.0).abs() < 1e-15);
        assert!(r.scores[0] > r.scores[1]);
    }

    #[test]
    fn ranks_from_scores() {
        let r = scores_to_ranks(&[0.9938, 0.0461, 0.0298, 0.0273, 0.9663]);
        assert_eq!(r.ranks, vec![1, 3, 4, 5, 2]);
        assert_eq!(r.order, vec![0, 4, 1, 2, 3]);
        assert!(!r.has_ties());
        let r = scores_to_ranks(&[0.2; 4]);
        assert_eq!(r.ranks, vec![1, 2, 3, 4]);
        assert_eq!(r.ties, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn borda_examples() {
        let a = vec![1, 3, 4, 5, 2];
        let c = vec![1, 4, 3, 5, 2];
        let third = 1.0 / 3.0;
        let b = weighted_borda(&[a.clone(), a.clone(), c.clone()], &[third; 3]).unwrap();
        let expect = [4.0, 5.0 / 3.0, 4.0 / 3.0, 0.0, 3.0];
        for (s, e) in b.scores.iter().zip(expect) {
            assert!((s - e).abs() < 1e-12);
        }
        assert_eq!(b.ranking.ranks, a);

        let b = weighted_borda(&[c.clone(), c.clone()], &[0.5, 0.5]).unwrap();
        assert_eq!(b.ranking.ranks, c);
        let b = weighted_borda(&[a.clone(), c.clone(), c.clone()], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(b.ranking.ranks, a);
    }

    #[test]
    fn borda_rejects_bad_input() {
        assert!(weighted_borda(&[vec![1, 2], vec![1, 2, 3]], &[0.5, 0.5]).is_err());
        assert!(weighted_borda(&[vec![1, 1]], &[1.0]).is_err());
        assert!(weighted_borda(&[vec![1, 2]], &[0.5, 0.5]).is_err());
    }
}
