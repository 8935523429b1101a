use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde_json::{json, Value};

use crate::coloring::ColoredComplete;
use crate::error::Error;
use crate::target::Embedding;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Verified,
    Refuted,
    ExhaustedBudget,
}

impl Verdict {
    /// CLI exit code: 0 verified, 1 refuted, 2 budget exhausted.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::ExhaustedBudget => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::ExhaustedBudget => "exhausted-budget",
        })
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "verified" => Ok(Verdict::Verified),
            "refuted" => Ok(Verdict::Refuted),
            "exhausted-budget" => Ok(Verdict::ExhaustedBudget),
            _ => Err(Error::Semantic(format!("unknown verdict {s:?}"))),
        }
    }
}

/// What backs a verdict: an offending triangle or embedding for a failed
/// check, or a complete coloring found by a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    RainbowTriangle(usize, usize, usize),
    Embedding(Embedding),
    Coloring(ColoredComplete),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::RainbowTriangle(a, b, c) => write!(f, "rainbow triangle ({a}, {b}, {c})"),
            Evidence::Embedding(e) => write!(f, "monochromatic {e}"),
            Evidence::Coloring(c) => write!(f, "coloring of K_{} with {} colors", c.n(), c.k()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// True when an enumeration ran to the end without hitting its budget.
    pub complete: bool,
    /// Cut branches re-examined after the search.
    pub spot_checks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub claim: String,
    pub verdict: Verdict,
    pub evidence: Option<Evidence>,
    pub stats: Stats,
    /// Sub-reports of a composite verdict.
    pub parts: Vec<VerdictReport>,
}

impl VerdictReport {
    pub fn new(claim: impl Into<String>, verdict: Verdict) -> Self {
        VerdictReport { claim: claim.into(), verdict, evidence: None, stats: Stats::default(), parts: Vec::new() }
    }

    pub fn with_evidence(mut self, evidence: Evidence) -> Self {
        self.evidence = Some(evidence);
        self
    }

    /// Machine-readable form. Wall time is left out so the output is stable.
    pub fn to_json(&self) -> Value {
        let evidence = match &self.evidence {
            None => Value::Null,
            Some(Evidence::RainbowTriangle(a, b, c)) => json!({"rainbow_triangle": [a, b, c]}),
            Some(Evidence::Embedding(e)) => json!({
                "embedding": {"target": e.target.to_string(), "color": e.color, "vertices": e.vertices}
            }),
            Some(Evidence::Coloring(c)) => json!({
                "coloring": {"n": c.n(), "k": c.k(), "edge_colors": c.edge_colors()}
            }),
        };
        json!({
            "claim": self.claim,
            "verdict": self.verdict.to_string(),
            "evidence": evidence,
            "nodes": self.stats.nodes,
            "complete": self.stats.complete,
            "spot_checks": self.stats.spot_checks,
            "parts": self.parts.iter().map(VerdictReport::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.verdict, self.claim)?;
        if let Some(e) = &self.evidence {
            write!(f, "\n  evidence: {e}")?;
        }
        write!(
            f,
            "\n  nodes: {}  time: {:.3}s{}",
            self.stats.nodes,
            self.stats.elapsed.as_secs_f64(),
            if self.stats.spot_checks > 0 { format!("  spot checks: {}", self.stats.spot_checks) } else { String::new() }
        )?;
        for part in &self.parts {
            let text = part.to_string().replace('\n', "\n  ");
            write!(f, "\n  {text}")?;
        }
        Ok(())
    }
}
