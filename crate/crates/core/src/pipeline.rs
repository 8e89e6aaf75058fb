//! End-to-end orchestration: load a problem (or an earlier stage's report),
//! apply overrides, run normalization, weighting and ranking in order, and
//! assemble a [`Report`].

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::GreyInterval;
use crate::model::{normalize, DecisionProblem, MethodParams, NormalizedMatrix, ProblemFile};
use crate::ranking::{rank_plans, Method};
use crate::report::{RankingReport, Report, Stage, TieFlag};
use crate::weighting::{compute_weights, WeightSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Text,
    #[default]
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::invalid(
                "format",
                format!("expected text or json, got {other:?}"),
            )),
        }
    }
}

/// Parameter overrides; unset fields keep the problem file's values.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamOverrides {
    pub rho: Option<f64>,
    /// Also sets `theta_minus = 1 - theta_plus`.
    pub theta_plus: Option<f64>,
    pub borda_weights: Option<[f64; 3]>,
}

impl ParamOverrides {
    pub fn apply(&self, mut params: MethodParams) -> MethodParams {
        if let Some(rho) = self.rho {
            params.rho = rho;
        }
        if let Some(t) = self.theta_plus {
            params.theta_plus = t;
            params.theta_minus = 1.0 - t;
        }
        if let Some(w) = self.borda_weights {
            params.borda_weights = w;
        }
        params
    }
}

/// A what-if replacement of one input value.
#[derive(Debug, Clone, PartialEq)]
pub enum Override {
    /// `PLAN.ATTR=[lo,hi]`
    Cell {
        plan: String,
        attribute: String,
        value: [f64; 2],
    },
    /// `q.PLAN=[lo,hi]`
    Preference { plan: String, value: [f64; 2] },
    /// `alpha.K=[w1,...,wm]`, 1-based expert index
    ExpertWeights { expert: usize, weights: Vec<f64> },
}

impl std::str::FromStr for Override {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::invalid(format!("override {s:?}"), reason.to_string());
        let (target, value) = s.split_once('=').ok_or_else(|| bad("expected TARGET=[...]"))?;
        let numbers: Vec<f64> =
            serde_json::from_str(value.trim()).map_err(|_| bad("value must be a JSON array of numbers"))?;
        let (head, tail) = target
            .trim()
            .split_once('.')
            .ok_or_else(|| bad("target must be PLAN.ATTR, q.PLAN or alpha.K"))?;
        let pair = || -> Result<[f64; 2]> {
            <[f64; 2]>::try_from(numbers.as_slice()).map_err(|_| bad("interval value must be [lo,hi]"))
        };
        match head {
            "q" => Ok(Override::Preference {
                plan: tail.to_string(),
                value: pair()?,
            }),
            "alpha" => {
                let expert: usize = tail
                    .parse()
                    .map_err(|_| bad("expert index must be a positive integer"))?;
                if expert == 0 {
                    return Err(bad("expert index is 1-based"));
                }
                Ok(Override::ExpertWeights {
                    expert,
                    weights: numbers,
                })
            }
            plan => Ok(Override::Cell {
                plan: plan.to_string(),
                attribute: tail.to_string(),
                value: pair()?,
            }),
        }
    }
}

impl Override {
    /// Applies the override to a raw problem file, naming missing targets.
    pub fn apply(&self, file: &mut ProblemFile) -> Result<()> {
        let plan_index = |file: &ProblemFile, plan: &str| {
            file.plans
                .iter()
                .position(|p| p == plan)
                .ok_or_else(|| Error::invalid("override", format!("unknown plan {plan:?}")))
        };
        match self {
            Override::Cell { plan, attribute, value } => {
                let i = plan_index(file, plan)?;
                let j = file
                    .attributes
                    .iter()
                    .position(|a| &a.name == attribute)
                    .ok_or_else(|| Error::invalid("override", format!("unknown attribute {attribute:?}")))?;
                file.matrix[i][j] = *value;
            }
            Override::Preference { plan, value } => {
                let i = plan_index(file, plan)?;
                let q = file
                    .preferences
                    .as_mut()
                    .ok_or_else(|| Error::invalid("override", "problem has no preferences to override"))?;
                q[i] = *value;
            }
            Override::ExpertWeights { expert, weights } => {
                let slot = file
                    .expert_weights
                    .get_mut(expert - 1)
                    .ok_or_else(|| Error::invalid("override", format!("unknown expert {expert}")))?;
                *slot = weights.clone();
            }
        }
        Ok(())
    }

    fn invalidates_normalized(&self) -> bool {
        matches!(self, Override::Cell { .. })
    }

    fn invalidates_weights(&self) -> bool {
        matches!(self, Override::Cell { .. } | Override::ExpertWeights { .. })
    }
}

/// A loaded input: a problem plus any intermediates carried over from an earlier stage's report.
#[derive(Debug, Clone, PartialEq)]
pub struct Input {
    pub problem: DecisionProblem,
    pub normalized: Option<NormalizedMatrix>,
    pub weights: Option<WeightSet>,
}

impl Input {
    pub fn from_problem(problem: DecisionProblem) -> Self {
        Input {
            problem,
            normalized: None,
            weights: None,
        }
    }

    /// Parses either a problem file or a report produced by an earlier stage.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let Some(object) = value.as_object() else {
            return Err(Error::invalid("input", "top level must be a JSON object"));
        };
        if !object.contains_key("problem") {
            return Ok(Input::from_problem(
                serde_json::from_value::<ProblemFile>(value)?.try_into()?,
            ));
        }
        let field = |name: &str| object.get(name).filter(|v| !v.is_null()).cloned();
        let problem: DecisionProblem = serde_json::from_value::<ProblemFile>(object["problem"].clone())?.try_into()?;
        let normalized: Option<NormalizedMatrix> = field("normalized").map(serde_json::from_value).transpose()?;
        let weights: Option<WeightSet> = field("weights").map(serde_json::from_value).transpose()?;
        if let Some(x) = &normalized {
            if x.n_plans() != problem.n_plans() || x.n_attributes() != problem.n_attributes() {
                return Err(Error::mismatch(
                    "normalized matrix rows",
                    problem.n_plans(),
                    x.n_plans(),
                ));
            }
        }
        if let Some(w) = &weights {
            if w.w.len() != problem.n_attributes() {
                return Err(Error::mismatch("weights", problem.n_attributes(), w.w.len()));
            }
        }
        Ok(Input {
            problem,
            normalized,
            weights,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Applies value overrides, dropping carried-over intermediates they make stale.
    pub fn with_overrides(self, overrides: &[Override]) -> Result<Self> {
        if overrides.is_empty() {
            return Ok(self);
        }
        let mut file = self.problem.to_file();
        for o in overrides {
            o.apply(&mut file)?;
        }
        Ok(Input {
            problem: file.try_into()?,
            normalized: self
                .normalized
                .filter(|_| !overrides.iter().any(Override::invalidates_normalized)),
            weights: self
                .weights
                .filter(|_| !overrides.iter().any(Override::invalidates_weights)),
        })
    }
}

/// Stage and method selection for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub stage: Stage,
    pub methods: Vec<Method>,
    pub params: ParamOverrides,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            stage: Stage::All,
            methods: Method::ALL.to_vec(),
            params: ParamOverrides::default(),
        }
    }
}

/// Everything a command-line invocation specifies.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: OutputFormat,
    pub options: RunOptions,
    pub overrides: Vec<Override>,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            format: OutputFormat::Json,
            options: RunOptions::default(),
            overrides: Vec::new(),
        }
    }
}

/// Loads the configured input, applies overrides and runs the selected stage.
pub fn run(config: &RunConfig) -> Result<Report> {
    let input = Input::load(&config.input)?.with_overrides(&config.overrides)?;
    execute(input, &config.options)
}

/// Runs the pipeline on an already-loaded input.
pub fn execute(input: Input, options: &RunOptions) -> Result<Report> {
    let Input {
        problem,
        normalized,
        weights,
    } = input;
    let params = options.params.apply(*problem.params());
    let problem = problem.with_params(params)?;
    let stage = options.stage;
    let mut warnings = Vec::new();

    let normalized = match normalized {
        Some(x) => x,
        None => normalize(&problem)?,
    };

    let weights = if stage.includes_weights() || stage.includes_ranking() {
        problem.ensure_rankable()?;
        let w = match weights {
            Some(w) => w,
            None => compute_weights(problem.expert_weights(), &normalized, &problem.attribute_names())?,
        };
        for &j in &w.clamped {
            warnings.push(format!(
                "final weight upper bound of {} clamped to 1",
                problem.attributes()[j].name
            ));
        }
        Some(w)
    } else {
        None
    };

    let ranking = match (&weights, stage.includes_ranking()) {
        (Some(w), true) => {
            let stage = rank_plans(
                &normalized,
                problem.preferences(),
                &w.w,
                problem.params(),
                &options.methods,
            )?;
            let report = RankingReport::from_stage(stage, problem.plans());
            collect_ranking_warnings(&report, problem.plans(), &mut warnings);
            Some(report)
        }
        _ => None,
    };

    Ok(Report {
        stage,
        problem: problem.to_file(),
        normalized: stage.includes_normalized().then_some(normalized),
        weights: weights.filter(|_| stage.includes_weights()),
        ranking,
        warnings,
    })
}

fn collect_ranking_warnings(report: &RankingReport, plans: &[String], warnings: &mut Vec<String>) {
    if report.incidence.degenerate_plus {
        warnings.push("all distances to the positive ideal are zero; incidence coefficients set to 1".into());
    }
    if report.incidence.degenerate_minus {
        warnings.push("all distances to the negative ideal are zero; incidence coefficients set to 1".into());
    }
    for result in &report.methods {
        if let crate::ranking::Trace::Topsis { degenerate, .. } = &result.trace {
            for &i in degenerate {
                warnings.push(format!("{}: D+ + D- = 0, score set to 0.5", plans[i]));
            }
        }
    }
    for tie in &report.tie_flags {
        warnings.push(format!("{}: tie between {}", tie.source, tie.plans.join(", ")));
    }
}

/// One plan whose fused rank moved under a perturbation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankChange {
    pub plan: String,
    pub before: usize,
    pub after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDiff {
    pub changed: Vec<RankChange>,
    pub ties_before: Vec<TieFlag>,
    pub ties_after: Vec<TieFlag>,
}

impl RankDiff {
    pub fn is_empty(&self) -> bool {
        self.changed.is_empty() && self.ties_before == self.ties_after
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhatIf {
    pub overrides: Vec<String>,
    pub baseline: Report,
    pub perturbed: Report,
    pub diff: RankDiff,
}

/// Runs the full pipeline on the input as loaded and again with the overrides applied.
pub fn whatif(input: Input, overrides: &[Override], options: &RunOptions) -> Result<WhatIf> {
    let options = RunOptions {
        stage: Stage::All,
        ..options.clone()
    };
    let perturbed_input = input.clone().with_overrides(overrides)?;
    let baseline = execute(input, &options)?;
    let perturbed = execute(perturbed_input, &options)?;

    let before = baseline.ranking.as_ref().expect("stage all ranks");
    let after = perturbed.ranking.as_ref().expect("stage all ranks");
    let changed = baseline
        .problem
        .plans
        .iter()
        .enumerate()
        .filter(|&(i, _)| before.final_rank[i] != after.final_rank[i])
        .map(|(i, plan)| RankChange {
            plan: plan.clone(),
            before: before.final_rank[i],
            after: after.final_rank[i],
        })
        .collect();
    let diff = RankDiff {
        changed,
        ties_before: before.tie_flags.clone(),
        ties_after: after.tie_flags.clone(),
    };
    Ok(WhatIf {
        overrides: overrides.iter().map(describe).collect(),
        baseline,
        perturbed,
        diff,
    })
}

/// Loads the configured input and runs [`whatif`] with the configured overrides.
pub fn run_whatif(config: &RunConfig) -> Result<WhatIf> {
    whatif(Input::load(&config.input)?, &config.overrides, &config.options)
}

fn describe(o: &Override) -> String {
    let pair = |v: &[f64; 2]| GreyInterval::new(v[0], v[1]).map_or_else(|_| format!("{v:?}"), |g| g.to_string());
    match o {
        Override::Cell { plan, attribute, value } => format!("{plan}.{attribute}={}", pair(value)),
        Override::Preference { plan, value } => format!("q.{plan}={}", pair(value)),
        Override::ExpertWeights { expert, weights } => format!("alpha.{expert}={weights:?}"),
    }
}
