//! Decision problem representation and normalization of the raw interval
//! decision matrix.
//!
//! A problem arrives as a [`ProblemFile`] (the on-disk JSON shape) and is
//! validated into a [`DecisionProblem`]. Validation errors name the offending
//! field or cell, e.g. `matrix[A2][G3]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::GreyInterval;
use crate::matrix::Matrix;

/// Tolerance for "sums to one" checks on weight vectors.
pub const SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttributeKind {
    /// Smaller raw values are better.
    Cost,
    /// Larger raw values are better.
    Effect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Attribute {
    pub name: String,
    pub kind: AttributeKind,
}

impl Attribute {
    pub fn new(name: impl Into<String>, kind: AttributeKind) -> Self {
        Attribute {
            name: name.into(),
            kind,
        }
    }

    pub fn effect(name: impl Into<String>) -> Self {
        Self::new(name, AttributeKind::Effect)
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Self::new(name, AttributeKind::Cost)
    }
}

/// Tuning parameters of the ranking methods.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MethodParams {
    /// Resolution coefficient of the incidence coefficients, in `(0, 1)`.
    pub rho: f64,
    pub theta_plus: f64,
    pub theta_minus: f64,
    /// Borda weights for (TOPSIS, incidence, max-entropy incidence).
    pub borda_weights: [f64; 3],
}

impl Default for MethodParams {
    fn default() -> Self {
        MethodParams {
            rho: 0.5,
            theta_plus: 0.5,
            theta_minus: 0.5,
            borda_weights: [1.0 / 3.0; 3],
        }
    }
}

impl MethodParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(Error::invalid(
                "params.rho",
                format!("must lie in (0, 1), got {}", self.rho),
            ));
        }
        if !(self.theta_plus > 0.0 && self.theta_plus <= 1.0) {
            return Err(Error::invalid(
                "params.theta_plus",
                format!("must lie in (0, 1], got {}", self.theta_plus),
            ));
        }
        if !(self.theta_minus >= 0.0 && self.theta_minus <= 1.0) {
            return Err(Error::invalid(
                "params.theta_minus",
                format!("must lie in [0, 1], got {}", self.theta_minus),
            ));
        }
        if (self.theta_plus + self.theta_minus - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::invalid(
                "params.theta_plus",
                format!(
                    "theta_plus + theta_minus must equal 1, got {}",
                    self.theta_plus + self.theta_minus
                ),
            ));
        }
        check_weight_vector("params.borda_weights", &self.borda_weights)
    }
}

/// On-disk shape of a decision problem. Intervals are `[lo, hi]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub plans: Vec<String>,
    pub attributes: Vec<Attribute>,
    pub matrix: Vec<Vec<[f64; 2]>>,
    pub expert_weights: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preferences: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub params: MethodParams,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A validated plans x attributes interval decision problem.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    plans: Vec<String>,
    attributes: Vec<Attribute>,
    matrix: Matrix<GreyInterval>,
    expert_weights: Vec<Vec<f64>>,
    preferences: Option<Vec<GreyInterval>>,
    params: MethodParams,
}

impl DecisionProblem {
    pub fn new(
        plans: Vec<String>,
        attributes: Vec<Attribute>,
        matrix: Matrix<GreyInterval>,
        expert_weights: Vec<Vec<f64>>,
        preferences: Option<Vec<GreyInterval>>,
        params: MethodParams,
    ) -> Result<Self> {
        let problem = DecisionProblem {
            plans,
            attributes,
            matrix,
            expert_weights,
            preferences,
            params,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        ProblemFile::from_json(text)?.try_into()
    }

    fn validate(&self) -> Result<()> {
        let n = self.plans.len();
        let m = self.attributes.len();
        if n == 0 {
            return Err(Error::invalid("plans", "at least one plan is required"));
        }
        if m == 0 {
            return Err(Error::invalid("attributes", "at least one attribute is required"));
        }
        unique_names("plans", self.plans.iter())?;
        unique_names("attributes", self.attributes.iter().map(|a| &a.name))?;
        if self.matrix.rows() != n {
            return Err(Error::mismatch("matrix rows", n, self.matrix.rows()));
        }
        if self.matrix.cols() != m {
            return Err(Error::mismatch("matrix columns", m, self.matrix.cols()));
        }
        for i in 0..n {
            for j in 0..m {
                let cell = self.matrix[(i, j)];
                if !cell.is_non_negative() {
                    return Err(Error::invalid(
                        self.cell_name(i, j),
                        format!("interval {cell} has a negative lower bound"),
                    ));
                }
            }
        }
        if self.expert_weights.is_empty() {
            return Err(Error::invalid(
                "expert_weights",
                "at least one expert weight vector is required",
            ));
        }
        for (l, weights) in self.expert_weights.iter().enumerate() {
            let field = format!("expert_weights[{l}]");
            if weights.len() != m {
                return Err(Error::mismatch(field, m, weights.len()));
            }
            check_weight_vector(&field, weights)?;
        }
        if let Some(q) = &self.preferences {
            if q.len() != n {
                return Err(Error::mismatch("preferences", n, q.len()));
            }
            for (i, qi) in q.iter().enumerate() {
                if !qi.within(0.0, 1.0) {
                    return Err(Error::invalid(
                        format!("preferences[{}]", self.plans[i]),
                        format!("interval {qi} must lie within [0, 1]"),
                    ));
                }
            }
        }
        self.params.validate()
    }

    /// Ranking needs at least two plans; ideal vectors and deviations degenerate otherwise.
    pub fn ensure_rankable(&self) -> Result<()> {
        if self.plans.len() < 2 {
            return Err(Error::invalid(
                "plans",
                format!("ranking needs at least 2 plans, got {}", self.plans.len()),
            ));
        }
        Ok(())
    }

    pub fn cell_name(&self, i: usize, j: usize) -> String {
        format!("matrix[{}][{}]", self.plans[i], self.attributes[j].name)
    }

    pub fn plans(&self) -> &[String] {
        &self.plans
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn attribute_names(&self) -> Vec<String> {
        self.attributes.iter().map(|a| a.name.clone()).collect()
    }

    pub fn matrix(&self) -> &Matrix<GreyInterval> {
        &self.matrix
    }

    pub fn expert_weights(&self) -> &[Vec<f64>] {
        &self.expert_weights
    }

    pub fn preferences(&self) -> Option<&[GreyInterval]> {
        self.preferences.as_deref()
    }

    pub fn params(&self) -> &MethodParams {
        &self.params
    }

    pub fn n_plans(&self) -> usize {
        self.plans.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn plan_index(&self, name: &str) -> Option<usize> {
        self.plans.iter().position(|p| p == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a.name == name)
    }

    /// Replaces the method parameters, re-validating them.
    pub fn with_params(mut self, params: MethodParams) -> Result<Self> {
        params.validate()?;
        self.params = params;
        Ok(self)
    }

    pub fn to_file(&self) -> ProblemFile {
        ProblemFile {
            plans: self.plans.clone(),
            attributes: self.attributes.clone(),
            matrix: self
                .matrix
                .iter_rows()
                .map(|row| row.iter().map(|&c| c.into()).collect())
                .collect(),
            expert_weights: self.expert_weights.clone(),
            preferences: self.preferences.as_ref().map(|q| q.iter().map(|&c| c.into()).collect()),
            params: self.params,
        }
    }
}

impl TryFrom<ProblemFile> for DecisionProblem {
    type Error = Error;

    fn try_from(file: ProblemFile) -> Result<Self> {
        let n = file.plans.len();
        let m = file.attributes.len();
        if file.matrix.len() != n {
            return Err(Error::mismatch("matrix rows", n, file.matrix.len()));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in file.matrix.iter().enumerate() {
            if row.len() != m {
                return Err(Error::mismatch(format!("matrix[{}]", file.plans[i]), m, row.len()));
            }
            let cells = row
                .iter()
                .enumerate()
                .map(|(j, &[lo, hi])| {
                    GreyInterval::new(lo, hi).map_err(|e| {
                        Error::invalid(
                            format!("matrix[{}][{}]", file.plans[i], file.attributes[j].name),
                            e.to_string(),
                        )
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(cells);
        }
        let preferences = match file.preferences {
            None => None,
            Some(q) => Some(
                q.iter()
                    .enumerate()
                    .map(|(i, &[lo, hi])| {
                        GreyInterval::new(lo, hi).map_err(|e| {
                            let plan = file.plans.get(i).map_or_else(|| i.to_string(), Clone::clone);
                            Error::invalid(format!("preferences[{plan}]"), e.to_string())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let matrix = if rows.is_empty() {
            Matrix::from_fn(0, m, |_, _| GreyInterval::ZERO)
        } else {
            Matrix::from_rows(rows)?
        };
        DecisionProblem::new(
            file.plans,
            file.attributes,
            matrix,
            file.expert_weights,
            preferences,
            file.params,
        )
    }
}

fn unique_names<'a>(field: &str, names: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name) {
            return Err(Error::invalid(field, format!("duplicate name {name:?}")));
        }
    }
    Ok(())
}

pub(crate) fn check_weight_vector(field: &str, weights: &[f64]) -> Result<()> {
    if let Some(w) = weights.iter().find(|w| !(**w >= 0.0) || !w.is_finite()) {
        return Err(Error::invalid(
            field,
            format!("weights must be finite and non-negative, got {w}"),
        ));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::invalid(field, format!("weights must sum to 1, got {sum}")));
    }
    Ok(())
}

/// Normalized decision matrix; every entry is a non-negative interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalizedMatrix(Matrix<GreyInterval>);

impl NormalizedMatrix {
    pub fn new(matrix: Matrix<GreyInterval>) -> Result<Self> {
        if let Some(c) = matrix.iter().find(|c| !c.is_non_negative()) {
            return Err(Error::invalid("normalized matrix", format!("negative entry {c}")));
        }
        Ok(NormalizedMatrix(matrix))
    }

    pub fn matrix(&self) -> &Matrix<GreyInterval> {
        &self.0
    }

    pub fn n_plans(&self) -> usize {
        self.0.rows()
    }

    pub fn n_attributes(&self) -> usize {
        self.0.cols()
    }

    /// Matrix of lower bounds.
    pub fn lower(&self) -> Matrix<f64> {
        self.0.map(GreyInterval::lo)
    }

    /// Matrix of upper bounds.
    pub fn upper(&self) -> Matrix<f64> {
        self.0.map(GreyInterval::hi)
    }
}

impl std::ops::Index<(usize, usize)> for NormalizedMatrix {
    type Output = GreyInterval;

    fn index(&self, index: (usize, usize)) -> &GreyInterval {
        &self.0[index]
    }
}

/// Effect-type column: `lo / sum(hi)` and `hi / sum(lo)`.
pub fn normalize_effect_column(column: &[GreyInterval]) -> Result<Vec<GreyInterval>> {
    let sum_lo: f64 = column.iter().map(GreyInterval::lo).sum();
    let sum_hi: f64 = column.iter().map(GreyInterval::hi).sum();
    if !(sum_lo > 0.0) {
        return Err(Error::NormalizationUndefined {
            attribute: String::new(),
        });
    }
    Ok(column
        .iter()
        .map(|a| GreyInterval::from_ordered(a.lo() / sum_hi, a.hi() / sum_lo))
        .collect())
}

/// Cost-type column: `(1/hi) / sum(1/lo)` and `(1/lo) / sum(1/hi)`.
///
/// Every lower bound must be strictly positive.
pub fn normalize_cost_column(column: &[GreyInterval]) -> Result<Vec<GreyInterval>> {
    if let Some((i, a)) = column.iter().enumerate().find(|(_, a)| !(a.lo() > 0.0)) {
        return Err(Error::ReciprocalUndefined {
            plan: i.to_string(),
            attribute: String::new(),
            value: a.lo(),
        });
    }
    let sum_inv_lo: f64 = column.iter().map(|a| a.lo().recip()).sum();
    let sum_inv_hi: f64 = column.iter().map(|a| a.hi().recip()).sum();
    Ok(column
        .iter()
        .map(|a| GreyInterval::from_ordered(a.hi().recip() / sum_inv_lo, a.lo().recip() / sum_inv_hi))
        .collect())
}

/// Normalizes every column according to its attribute kind.
pub fn normalize(problem: &DecisionProblem) -> Result<NormalizedMatrix> {
    let raw = problem.matrix();
    let columns = problem
        .attributes()
        .iter()
        .enumerate()
        .map(|(j, attribute)| {
            let column = raw.column(j);
            let normalized = match attribute.kind {
                AttributeKind::Effect => normalize_effect_column(&column),
                AttributeKind::Cost => normalize_cost_column(&column),
            };
            normalized.map_err(|e| e.in_column(&attribute.name, problem.plans()))
        })
        .collect::<Result<Vec<_>>>()?;
    NormalizedMatrix::new(Matrix::from_columns(raw.rows(), columns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(lo: f64, hi: f64) -> GreyInterval {
        GreyInterval::new(lo, hi).unwrap()
    }

    fn close(a: GreyInterval, lo: f64, hi: f64, tol: f64) -> bool {
        (a.lo() - lo).abs() < tol && (a.hi() - hi).abs() < tol
    }

    fn table1_g1() -> Vec<GreyInterval> {
        vec![gi(6., 8.), gi(7., 9.), gi(5., 7.), gi(6., 7.), gi(7., 8.)]
    }

    #[test]
    fn effect_column_table1() {
        let x = normalize_effect_column(&table1_g1()).unwrap();
        // lows sum to 31, highs to 39
        assert!(close(x[0], 6.0 / 39.0, 8.0 / 31.0, 1e-12));
        assert!(close(x[0], 0.15385, 0.25806, 1e-5));
    }

    #[test]
    fn effect_column_degenerate_cases() {
        assert_eq!(normalize_effect_column(&[gi(3., 3.)]).unwrap(), vec![GreyInterval::ONE]);
        let x = normalize_effect_column(&[gi(2., 2.), gi(2., 2.)]).unwrap();
        assert_eq!(x, vec![GreyInterval::point(0.5); 2]);
    }

    #[test]
    fn effect_column_zero_sum() {
        let err = normalize_effect_column(&[gi(0., 1.), gi(0., 2.)]).unwrap_err();
        assert!(matches!(err, Error::NormalizationUndefined { .. }));
        assert!(!err.is_validation());
    }

    #[test]
    fn cost_column_examples() {
        assert_eq!(normalize_cost_column(&[gi(2., 4.)]).unwrap(), vec![gi(0.5, 2.0)]);
        let x = normalize_cost_column(&[gi(4., 4.), gi(4., 4.)]).unwrap();
        assert_eq!(x, vec![GreyInterval::point(0.5); 2]);
        assert_eq!(normalize_cost_column(&[gi(7., 7.)]).unwrap(), vec![GreyInterval::ONE]);
    }

    #[test]
    fn cost_column_rejects_zero_lower_bound() {
        let err = normalize_cost_column(&[gi(1., 2.), gi(0., 3.)]).unwrap_err();
        assert!(matches!(err, Error::ReciprocalUndefined { .. }));
    }

    fn problem(kinds: &[AttributeKind], rows: Vec<Vec<GreyInterval>>) -> DecisionProblem {
        let m = kinds.len();
        let n = rows.len();
        DecisionProblem::new(
            (1..=n).map(|i| format!("A{i}")).collect(),
            kinds
                .iter()
                .enumerate()
                .map(|(j, &k)| Attribute::new(format!("G{}", j + 1), k))
                .collect(),
            Matrix::from_rows(rows).unwrap(),
            vec![vec![1.0 / m as f64; m]],
            None,
            MethodParams::default(),
        )
        .unwrap()
    }

    #[test]
    fn normalize_single_cell() {
        let p = problem(&[AttributeKind::Effect], vec![vec![gi(4., 4.)]]);
        assert_eq!(normalize(&p).unwrap().matrix()[(0, 0)], GreyInterval::ONE);
    }

    #[test]
    fn normalize_names_the_failing_cell() {
        let p = problem(
            &[AttributeKind::Effect, AttributeKind::Cost],
            vec![vec![gi(1., 2.), gi(1., 2.)], vec![gi(1., 2.), gi(0., 2.)]],
        );
        match normalize(&p).unwrap_err() {
            Error::ReciprocalUndefined { plan, attribute, .. } => {
                assert_eq!((plan.as_str(), attribute.as_str()), ("A2", "G2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalize_columns_are_independent() {
        use AttributeKind::*;
        let a = vec![gi(1., 2.), gi(3., 5.), gi(2., 2.)];
        let b = vec![gi(4., 6.), gi(1., 1.), gi(2., 3.)];
        let rows = |c1: &[GreyInterval], c2: &[GreyInterval]| -> Vec<Vec<GreyInterval>> {
            (0..3).map(|i| vec![c1[i], c2[i]]).collect()
        };
        let x = normalize(&problem(&[Effect, Cost], rows(&a, &b))).unwrap();
        let y = normalize(&problem(&[Cost, Effect], rows(&b, &a))).unwrap();
        for i in 0..3 {
            assert_eq!(x[(i, 0)], y[(i, 1)]);
            assert_eq!(x[(i, 1)], y[(i, 0)]);
        }
    }

    #[test]
    fn validation_names_fields() {
        let text = r#"{"plans":["A1","A2"],"attributes":[{"name":"G1","kind":"effect"}],
            "matrix":[[[1,2]],[[3,2]]],"expert_weights":[[1.0]]}"#;
        let err = DecisionProblem::from_json(text).unwrap_err();
        assert!(err.to_string().contains("matrix[A2][G1]"), "{err}");
        assert!(err.is_validation());

        let text = r#"{"plans":["A1","A2"],"attributes":[{"name":"G1","kind":"effect"}],
            "matrix":[[[1,2]],[[2,3]]],"expert_weights":[[0.9]]}"#;
        let err = DecisionProblem::from_json(text).unwrap_err();
        assert!(err.to_string().contains("expert_weights[0]"), "{err}");

        let text = r#"{"plans":["A1","A2"],"attributes":[{"name":"G1","kind":"effect"}],
            "matrix":[[[1,2]],[[2,3]]],"expert_weights":[[1.0]],"preferences":[[0.2,0.4],[0.5,1.2]]}"#;
        let err = DecisionProblem::from_json(text).unwrap_err();
        assert!(err.to_string().contains("preferences[A2]"), "{err}");
    }

    #[test]
    fn params_validation() {
        let mut p = MethodParams::default();
        assert!(p.validate().is_ok());
        p.rho = 1.0;
        assert!(p.validate().is_err());
        let p = MethodParams {
            theta_plus: 0.7,
            theta_minus: 0.2,
            ..MethodParams::default()
        };
        assert!(p.validate().is_err());
        let p = MethodParams {
            theta_plus: 1.0,
            theta_minus: 0.0,
            ..MethodParams::default()
        };
        assert!(p.validate().is_ok());
    }

    #[test]
    fn file_round_trip() {
        let text = r#"{"plans":["A1","A2"],"attributes":[{"name":"G1","kind":"cost"}],
            "matrix":[[[1,2]],[[2,3]]],"expert_weights":[[1.0]],"params":{"rho":0.4}}"#;
        let p = DecisionProblem::from_json(text).unwrap();
        assert_eq!(p.params().rho, 0.4);
        assert_eq!(p.params().theta_plus, 0.5);
        let back = DecisionProblem::try_from(p.to_file()).unwrap();
        assert_eq!(back, p);
    }
}
