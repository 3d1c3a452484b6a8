use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebras::Family;
use crate::fock::FockState;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Mode {
    ExactMonomial,
    NumericAt(f64),
    SquaredExact,
    /// Two-point scaling of a truncated expansion in `tau`.
    Series,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::ExactMonomial => write!(f, "exact"),
            Mode::NumericAt(q) => write!(f, "numeric@{q}"),
            Mode::SquaredExact => write!(f, "squared"),
            Mode::Series => write!(f, "series"),
        }
    }
}

/// Matrix position of a failure: `<dst| X |src>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub src: FockState,
    pub dst: FockState,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.src, self.dst)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails { witness: Witness, residual: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub relation: String,
    pub family: Option<Family>,
    pub anchor: String,
    pub mode: Mode,
    pub cutoff: u32,
    pub safe_nu: i64,
    pub verdict: Verdict,
    pub wall_ms: f64,
}

/// Flat, key-sorted JSON form of a [`Report`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub anchor: String,
    pub cutoff: u32,
    pub family: Option<Family>,
    pub mode: String,
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
    pub safe_nu: i64,
    pub verdict: String,
    pub wall_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl Report {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn to_json(&self) -> ReportJson {
        let (verdict, witness, residual) = match &self.verdict {
            Verdict::Holds => ("Holds".to_string(), None, None),
            Verdict::Fails { witness, residual } => ("Fails".to_string(), Some(*witness), Some(residual.clone())),
        };
        ReportJson {
            anchor: self.anchor.clone(),
            cutoff: self.cutoff,
            family: self.family,
            mode: self.mode.to_string(),
            relation: self.relation.clone(),
            residual,
            safe_nu: self.safe_nu,
            verdict,
            wall_ms: self.wall_ms,
            witness,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        match &self.verdict {
            Verdict::Holds => write!(f, "HOLDS  {fam:<9} {:<11} nu<={:<3} {}", self.mode.to_string(), self.safe_nu, self.relation),
            Verdict::Fails { witness, residual } => write!(
                f,
                "FAILS  {fam:<9} {:<11} nu<={:<3} {}  at {witness}: residual {residual}",
                self.mode.to_string(),
                self.safe_nu,
                self.relation
            ),
        }
    }
}

/// Pass/fail tallies over a batch of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
}

pub fn summarize(reports: &[Report]) -> Summary {
    let holds = reports.iter().filter(|r| r.holds()).count();
    Summary { total: reports.len(), holds, fails: reports.len() - holds }
}

/// Process exit status for a batch: 0 if everything holds, 1 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::holds) {
        0
    } else {
        1
    }
}

/// Serializes reports as a JSON array with sorted keys, sorted by name.
pub fn reports_to_json(reports: &[Report]) -> String {
    let mut rows: Vec<ReportJson> = reports.iter().map(Report::to_json).collect();
    rows.sort_by(|a, b| (&a.relation, &a.mode).cmp(&(&b.relation, &b.mode)));
    let v = serde_json::to_value(&rows).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("reports serialize")
}
