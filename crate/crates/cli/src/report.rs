//! The JSON report document. Every exact quantity is a "p/q" string.

use faircut::format::Frac;
use faircut::verify::{BoundCheck, Summary};
use faircut::CutDistribution;
use serde::{Deserialize, Serialize};

pub const TOOL: &str = "faircut";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceEcho>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objectives: Vec<ObjectiveRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run: Option<RunRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<ReproRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<SummaryRecord>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            seed,
            generated_unix: None,
            elapsed_ms: None,
            instance: None,
            objectives: Vec::new(),
            run: None,
            rows: Vec::new(),
            checks: Vec::new(),
            summary: None,
        }
    }

    pub fn set_checks(&mut self, checks: &[BoundCheck]) {
        self.checks = checks.iter().map(CheckRecord::from).collect();
        self.summary = Some(Summary::of(checks).into());
    }

    pub fn failed(&self) -> bool {
        self.summary.as_ref().is_some_and(|s| s.failed > 0)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub label: String,
    pub model: String,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub partition: String,
    pub groups: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<ExpectedRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRecord {
    pub objective: String,
    pub value: Frac,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl From<&faircut::families::NamedInstance> for InstanceEcho {
    fn from(inst: &faircut::families::NamedInstance) -> Self {
        InstanceEcho {
            label: inst.label.clone(),
            model: inst.model.name().into(),
            vertices: inst.graph.vertex_count(),
            edges: inst.graph.edges().to_vec(),
            partition: inst.partition.kind().name().into(),
            groups: inst.partition.groups().to_vec(),
            expected: inst
                .expected
                .iter()
                .map(|e| ExpectedRecord {
                    objective: e.objective.name().into(),
                    value: Frac(e.value.clone()),
                    note: e.note.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveRecord {
    pub name: String,
    pub value: Frac,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
    /// A single optimal cut (utilitarian and static objectives).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// An optimal lottery (dynamic objectives).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lottery: Vec<LotteryEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dual_weights: Vec<Frac>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LotteryEntry {
    pub cut: String,
    pub probability: Frac,
}

pub fn lottery(dist: &CutDistribution) -> Vec<LotteryEntry> {
    dist.entries().map(|(cut, p)| LotteryEntry { cut: cut.to_string(), probability: Frac(p.clone()) }).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "kebab-case")]
pub enum RunRecord {
    SeparateSolve {
        oracle_cuts: Vec<String>,
        alpha: Frac,
        groups: usize,
        guarantee: Frac,
        per_group: Vec<Frac>,
        minimum: Frac,
    },
    NaiveRandom {
        trials: u64,
        groups: Vec<NaiveGroupRecord>,
    },
    LocalSearch {
        cut: String,
        cut_value: usize,
        per_group: Vec<Frac>,
        minimum: Frac,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_floor: Option<Frac>,
    },
    Gw {
        source: String,
        samples: u64,
        sdp_objective: f64,
        edges: Vec<GwEdgeRecord>,
        expected_per_group: Vec<f64>,
        sampled_per_group: Vec<Frac>,
        sampled_minimum: Frac,
        best_sampled_cut: String,
        best_sampled_value: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaiveGroupRecord {
    pub size: usize,
    pub mean: Frac,
    pub variance: Frac,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_lower_bound: Option<Frac>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_upper_bound: Option<Frac>,
    pub sample_mean: f64,
    pub sample_variance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GwEdgeRecord {
    pub edge: (usize, usize),
    pub analytic_probability: f64,
    /// Present when the probability is exactly 0 or 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Frac>,
    pub sampled_frequency: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproRow {
    pub key: String,
    /// An exact fraction, or a decimal for Monte Carlo quantities.
    pub measured: String,
    pub relation: String,
    pub reference: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub claim: String,
    pub context: String,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Frac>,
    pub relation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Frac>,
    pub verdict: String,
}

impl From<&BoundCheck> for CheckRecord {
    fn from(c: &BoundCheck) -> Self {
        CheckRecord {
            claim: c.claim.clone(),
            context: c.context.clone(),
            statement: c.statement.clone(),
            lhs: c.lhs.as_ref().map(Frac::from),
            relation: c.relation.symbol().into(),
            rhs: c.rhs.as_ref().map(Frac::from),
            verdict: c.verdict.name().into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl From<Summary> for SummaryRecord {
    fn from(s: Summary) -> Self {
        SummaryRecord { passed: s.passed, failed: s.failed, skipped: s.skipped }
    }
}
