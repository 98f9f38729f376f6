//! Executable proposition checks over a corpus of rings, assembled into a
//! deterministic ledger.

mod checks;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::construct::{build_with, BuildOptions, RingSpec};
use crate::deciders::{classify, ClassificationReport};
use crate::error::{Error, Result};
use crate::par;
use crate::ring::FiniteRing;

pub const DEFAULT_CORPUS: [&str; 17] = [
    "Z2",
    "Z3",
    "Z4",
    "Z6",
    "Z8",
    "Z12",
    "Z2xZ2",
    "Z2xZ4",
    "Triv(Z2)",
    "Z2[x]/(x^2)",
    "Z4[x]/(x^2)",
    "T2(Z2)",
    "T2(Z4)",
    "M2(Z2)",
    "M2(Z3)",
    "M2(Z4)",
    "Ideal(Z4,2)",
];

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub text: String,
    pub ring: std::result::Result<FiniteRing, Error>,
}

/// Rings are built once and shared by every check.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn from_specs<S: AsRef<str> + Sync>(specs: &[S], opts: &BuildOptions) -> Self {
        let entries = par::map_slice(specs, |s| {
            let text = s.as_ref().trim().to_string();
            let ring = text.parse::<RingSpec>().and_then(|spec| build_with(&spec, opts));
            let text = match &ring {
                Ok(r) => r.spec_string(),
                Err(_) => text,
            };
            CorpusEntry { text, ring }
        });
        Corpus { entries }
    }

    pub fn default_corpus(opts: &BuildOptions) -> Self {
        Self::from_specs(&DEFAULT_CORPUS, opts)
    }

    /// One spec per line; blank lines and `#` comments are ignored.
    pub fn parse_list(text: &str) -> Vec<String> {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect()
    }
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PropositionId {
    P_OSNOVE,
    P_PRVA,
    P_NILIDEAL,
    P_RADIKAL,
    L_MOCNA,
    P_PIREG,
    P_ABEL,
    P_BOUNDED,
    C_PI,
    P_KOTI,
    P_CENTER,
    P_UNQ1,
    P_UNQ2,
    Q_SYMMETRY,
    Q_CORNER,
    P_EXPIREG,
}

impl PropositionId {
    pub const ALL: [PropositionId; 16] = [
        PropositionId::P_OSNOVE,
        PropositionId::P_PRVA,
        PropositionId::P_NILIDEAL,
        PropositionId::P_RADIKAL,
        PropositionId::L_MOCNA,
        PropositionId::P_PIREG,
        PropositionId::P_ABEL,
        PropositionId::P_BOUNDED,
        PropositionId::C_PI,
        PropositionId::P_KOTI,
        PropositionId::P_CENTER,
        PropositionId::P_UNQ1,
        PropositionId::P_UNQ2,
        PropositionId::Q_SYMMETRY,
        PropositionId::Q_CORNER,
        PropositionId::P_EXPIREG,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropositionId::P_OSNOVE => "P_OSNOVE",
            PropositionId::P_PRVA => "P_PRVA",
            PropositionId::P_NILIDEAL => "P_NILIDEAL",
            PropositionId::P_RADIKAL => "P_RADIKAL",
            PropositionId::L_MOCNA => "L_MOCNA",
            PropositionId::P_PIREG => "P_PIREG",
            PropositionId::P_ABEL => "P_ABEL",
            PropositionId::P_BOUNDED => "P_BOUNDED",
            PropositionId::C_PI => "C_PI",
            PropositionId::P_KOTI => "P_KOTI",
            PropositionId::P_CENTER => "P_CENTER",
            PropositionId::P_UNQ1 => "P_UNQ1",
            PropositionId::P_UNQ2 => "P_UNQ2",
            PropositionId::Q_SYMMETRY => "Q_SYMMETRY",
            PropositionId::Q_CORNER => "Q_CORNER",
            PropositionId::P_EXPIREG => "P_EXPIREG",
        }
    }

    pub fn is_experiment(self) -> bool {
        matches!(self, PropositionId::Q_SYMMETRY | PropositionId::Q_CORNER)
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropositionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        PropositionId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::MalformedSpec(format!("unknown proposition id {s:?}")))
    }
}

/// A replayable failure: the ring spec and the offending element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub spec: String,
    pub elements: Vec<u32>,
    pub reason: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "spec={:?} elements=[{}] reason={}", self.spec, els.join(","), self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { counterexamples: Vec<Counterexample> },
    Experiment { observed: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionCheck {
    pub id: PropositionId,
    pub corpus: Vec<String>,
    pub verdict: Verdict,
    /// Per-ring observations in corpus order.
    pub details: Vec<String>,
}

impl PropositionCheck {
    pub fn passed(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail { .. })
    }
}

pub fn run_check(id: PropositionId, corpus: &Corpus) -> PropositionCheck {
    checks::run(id, corpus)
}

pub fn run_checks(ids: &[PropositionId], corpus: &Corpus) -> Vec<PropositionCheck> {
    ids.iter().map(|&id| run_check(id, corpus)).collect()
}

pub fn render_ledger(checks: &[PropositionCheck]) -> String {
    let mut out = String::new();
    for c in checks {
        let (tag, extra) = match &c.verdict {
            Verdict::Pass => ("PASS", String::new()),
            Verdict::Fail { counterexamples } => ("FAIL", format!(" counterexamples={}", counterexamples.len())),
            Verdict::Experiment { observed } => ("EXPERIMENT", format!(" {observed}")),
        };
        out.push_str(&format!("{:<11} {}{} rings={}\n", c.id.as_str(), tag, extra, c.corpus.len()));
        if let Verdict::Fail { counterexamples } = &c.verdict {
            for ce in counterexamples {
                out.push_str(&format!("    counterexample {ce}\n"));
            }
        }
        for d in &c.details {
            out.push_str(&format!("    {d}\n"));
        }
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let experiments = checks.iter().filter(|c| matches!(c.verdict, Verdict::Experiment { .. })).count();
    out.push_str(&format!("summary: {} checks, {} failed, {} experiments\n", checks.len(), failed, experiments));
    out
}

/// One classification per corpus entry, in corpus order; build failures
/// are kept in place.
pub fn census(corpus: &Corpus) -> Vec<std::result::Result<ClassificationReport, (String, Error)>> {
    corpus
        .entries
        .iter()
        .map(|e| match &e.ring {
            Ok(r) => Ok(classify(r)),
            Err(err) => Err((e.text.clone(), err.clone())),
        })
        .collect()
}
