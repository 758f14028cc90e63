//! Claim predicates, verdicts and the parallel corpus runner.

mod claims;
mod corpus;
mod sample;

pub use claims::{
    check_bt_degree_sum, check_chvatal_erdos, check_closure_equiv, check_corollary1, check_lemma1,
    check_lemma1_graph, check_lemma2, check_lemma4, check_lemma5_edge, check_ore, check_thm6, check_thm7,
    check_threshold_arithmetic, corollary1_threshold, evaluate, thm6_threshold, thm7_threshold, threshold_slack,
    CheckConfig,
};
pub use corpus::{parse_corpus_spec, run_corpus, run_corpus_with, CorpusRecord, CorpusSpec, Source, Summary};
pub use sample::{closed_dense_sample, perturbed_extremal};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::trees::{ExtremalCertificate, TreeWitness};

/// Claims checkable at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    L1,
    L2,
    L4,
    L5,
    C1,
}

impl ClaimId {
    pub const ALL: [ClaimId; 12] = [
        ClaimId::T1,
        ClaimId::T2,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::T5,
        ClaimId::T6,
        ClaimId::T7,
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L4,
        ClaimId::L5,
        ClaimId::C1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::T1 => "T1",
            ClaimId::T2 => "T2",
            ClaimId::T3 => "T3",
            ClaimId::T4 => "T4",
            ClaimId::T5 => "T5",
            ClaimId::T6 => "T6",
            ClaimId::T7 => "T7",
            ClaimId::L1 => "L1",
            ClaimId::L2 => "L2",
            ClaimId::L4 => "L4",
            ClaimId::L5 => "L5",
            ClaimId::C1 => "C1",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown claim `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Verified,
    Vacuous,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
    Unknown,
}

impl Verdict {
    /// `Vacuous` when the hypothesis fails, otherwise decided by the conclusion.
    pub fn decide(hypothesis_holds: bool, conclusion_holds: Option<bool>) -> Verdict {
        match (hypothesis_holds, conclusion_holds) {
            (false, _) => Verdict::Vacuous,
            (true, None) => Verdict::Unknown,
            (true, Some(true)) => Verdict::Verified,
            (true, Some(false)) => Verdict::Counterexample,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "Verified",
            Verdict::Vacuous => "Vacuous",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Tree(TreeWitness),
    Path(Vec<usize>),
    Extremal(ExtremalCertificate),
    /// The graph (or its closure) is the excluded extremal graph.
    EscapeClause,
    /// Signed numeric margin by which the conclusion holds.
    Slack(f64),
    Clique(Vec<usize>),
    Equivalence { graph: bool, closure: bool },
    Threshold { boundary: i64, slack_at_boundary: i64, slack_below: i64 },
}

impl Witness {
    pub fn summary(&self) -> String {
        match self {
            Witness::Tree(w) => format!("tree leaves={}", w.leaf_count),
            Witness::Path(p) => format!("path len={}", p.len()),
            Witness::Extremal(c) => format!("extremal attachment={:?}", c.attachment),
            Witness::EscapeClause => "escape clause".into(),
            Witness::Slack(s) => format!("slack={s:.3e}"),
            Witness::Clique(c) => format!("clique size={}", c.len()),
            Witness::Equivalence { graph, closure } => format!("graph={graph} closure={closure}"),
            Witness::Threshold { boundary, slack_at_boundary, slack_below } => {
                format!("boundary={boundary} slack={slack_at_boundary}/{slack_below}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub claim_id: ClaimId,
    pub graph_id: String,
    pub n: usize,
    pub e: usize,
    pub kappa: Option<usize>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: Option<bool>,
    pub witness: Option<Witness>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub replay: Option<String>,
}

impl TheoremReport {
    fn new(claim_id: ClaimId, hypothesis_holds: bool, conclusion_holds: Option<bool>) -> Self {
        TheoremReport {
            claim_id,
            graph_id: String::new(),
            n: 0,
            e: 0,
            kappa: None,
            hypothesis_holds,
            conclusion_holds,
            witness: None,
            verdict: Verdict::decide(hypothesis_holds, conclusion_holds),
            note: None,
            graph6: None,
            replay: None,
        }
    }

    pub fn witness_summary(&self) -> String {
        self.witness.as_ref().map(Witness::summary).unwrap_or_default()
    }

    pub fn is_counterexample(&self) -> bool {
        self.verdict == Verdict::Counterexample
    }
}
