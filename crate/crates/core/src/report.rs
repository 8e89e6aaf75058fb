//! Report types and their JSON / text renderings.
//!
//! JSON is the canonical output. Every float is written with 17 significant
//! digits so that golden files are exact and a report can be read back as
//! input without losing a bit.

use std::fmt::Write as _;
use std::io;

use serde::ser::Serialize;
use serde::{Deserialize, Serialize as SerializeDerive};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::interval::GreyInterval;
use crate::matrix::Matrix;
use crate::model::{NormalizedMatrix, ProblemFile};
use crate::ranking::{IdealVectors, IncidenceMatrices, Method, RankingResult, RankingStage};
use crate::weighting::WeightSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, SerializeDerive, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Normalize,
    Weights,
    Rank,
    #[default]
    All,
}

impl Stage {
    pub fn includes_normalized(self) -> bool {
        matches!(self, Stage::Normalize | Stage::Weights | Stage::All)
    }

    pub fn includes_weights(self) -> bool {
        matches!(self, Stage::Weights | Stage::All)
    }

    pub fn includes_ranking(self) -> bool {
        matches!(self, Stage::Rank | Stage::All)
    }
}

impl std::str::FromStr for Stage {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "normalize" => Ok(Stage::Normalize),
            "weights" => Ok(Stage::Weights),
            "rank" => Ok(Stage::Rank),
            "all" => Ok(Stage::All),
            other => Err(crate::Error::invalid("stage", format!("unknown stage {other:?}"))),
        }
    }
}

/// A group of plans with equal scores in one method (or in the Borda fusion).
#[derive(Debug, Clone, PartialEq, Eq, SerializeDerive, Deserialize)]
pub struct TieFlag {
    pub source: String,
    pub plans: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct RankingReport {
    pub blended: Matrix<GreyInterval>,
    pub weighted: Matrix<GreyInterval>,
    pub ideals: IdealVectors,
    pub incidence: IncidenceMatrices,
    pub methods: Vec<RankingResult>,
    pub borda_weights: Vec<f64>,
    pub borda_scores: Vec<f64>,
    /// `final_rank[i]` is the fused rank of plan `i`.
    pub final_rank: Vec<usize>,
    /// Plan names from best to worst.
    pub final_order: Vec<String>,
    pub tie_flags: Vec<TieFlag>,
}

impl RankingReport {
    pub fn from_stage(stage: RankingStage, plans: &[String]) -> Self {
        let names = |ids: &[usize]| ids.iter().map(|&i| plans[i].clone()).collect::<Vec<_>>();
        let mut tie_flags = Vec::new();
        for result in &stage.methods {
            for group in &result.ranking.ties {
                tie_flags.push(TieFlag {
                    source: result.method.name().to_string(),
                    plans: names(group),
                });
            }
        }
        for group in &stage.borda.ranking.ties {
            tie_flags.push(TieFlag {
                source: "borda".to_string(),
                plans: names(group),
            });
        }
        RankingReport {
            final_order: names(&stage.borda.ranking.order),
            final_rank: stage.borda.ranking.ranks,
            borda_scores: stage.borda.scores,
            borda_weights: stage.borda.weights,
            blended: stage.blended,
            weighted: stage.weighted,
            ideals: stage.ideals,
            incidence: stage.incidence,
            methods: stage.methods,
            tie_flags,
        }
    }

    pub fn method(&self, method: Method) -> Option<&RankingResult> {
        self.methods.iter().find(|r| r.method == method)
    }
}

/// Full trace of one pipeline run.
#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct Report {
    pub stage: Stage,
    pub problem: ProblemFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalized: Option<NormalizedMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranking: Option<RankingReport>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

/// Pretty JSON with every float written as `{:.16e}` (17 significant digits).
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17(PrettyFormatter::with_indent(b"  ")));
    value.serialize(&mut ser).expect("report types always serialize");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json emits utf-8")
}

struct Sig17<'a>(PrettyFormatter<'a>);

impl Formatter for Sig17<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

fn interval_table(out: &mut String, title: &str, rows: &[String], cols: &[String], m: &Matrix<GreyInterval>) {
    let _ = writeln!(out, "{title}");
    let _ = write!(out, "{:>8}", "");
    for c in cols {
        let _ = write!(out, " {c:>18}");
    }
    out.push('\n');
    for (i, name) in rows.iter().enumerate() {
        let _ = write!(out, "{name:>8}");
        for cell in m.row(i) {
            let _ = write!(out, " {:>18}", format!("{cell:.5}"));
        }
        out.push('\n');
    }
    out.push('\n');
}

fn render_text(report: &Report) -> String {
    let plans = &report.problem.plans;
    let attrs: Vec<String> = report.problem.attributes.iter().map(|a| a.name.clone()).collect();
    let mut out = String::new();

    if let Some(x) = &report.normalized {
        interval_table(&mut out, "Normalized decision matrix", plans, &attrs, x.matrix());
    }

    if let Some(w) = &report.weights {
        let _ = writeln!(out, "Attribute weights");
        let _ = writeln!(
            out,
            "{:>8} {:>18} {:>9} {:>9} {:>9} {:>18} {:>18}",
            "", "alpha", "beta_opt", "ent_lo", "ent_hi", "beta", "w"
        );
        for (j, name) in attrs.iter().enumerate() {
            let _ = writeln!(
                out,
                "{name:>8} {:>18} {:>9.5} {:>9.5} {:>9.5} {:>18} {:>18}",
                format!("{:.5}", w.alpha[j]),
                w.beta_opt[j],
                w.beta_ent_lo[j],
                w.beta_ent_hi[j],
                format!("{:.5}", w.beta[j]),
                format!("{:.5}", w.w[j]),
            );
        }
        out.push('\n');
    }

    if let Some(r) = &report.ranking {
        let _ = writeln!(out, "Scores (rank)");
        let _ = write!(out, "{:>8}", "");
        for m in &r.methods {
            let _ = write!(out, " {:>22}", m.method.name());
        }
        let _ = writeln!(out, " {:>14}", "borda");
        for (i, name) in plans.iter().enumerate() {
            let _ = write!(out, "{name:>8}");
            for m in &r.methods {
                let _ = write!(out, " {:>22}", format!("{:.4} ({})", m.scores[i], m.ranking.ranks[i]));
            }
            let _ = writeln!(
                out,
                " {:>14}",
                format!("{:.4} ({})", r.borda_scores[i], r.final_rank[i])
            );
        }
        out.push('\n');
        for m in &r.methods {
            let order: Vec<&str> = m.ranking.order.iter().map(|&i| plans[i].as_str()).collect();
            let _ = writeln!(out, "{:>22}: {}", m.method.name(), order.join(" > "));
        }
        let _ = writeln!(out, "{:>22}: {}", "final", r.final_order.join(" > "));
    }

    if !report.warnings.is_empty() {
        out.push_str("\nWarnings\n");
        for w in &report.warnings {
            let _ = writeln!(out, "  - {w}");
        }
    }
    out
}
