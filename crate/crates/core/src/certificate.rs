//! Plain-text certificates.
//!
//! ```text
//! gallai-certificate 1
//! vertices 13
//! colors 2
//! names 1=red 2=blue                  (optional)
//! instance n=5 i=4,4 top=cycle        (optional, with provenance)
//! provenance proven
//! targets C10 C10                     (optional)
//! edges
//! 0 1 1
//! ...
//! claims                              (optional, with verification)
//! gallai true
//! absent 1 C10
//! absent 2 C10
//! verification
//! verdict verified
//! tool gallai-core 0.1.0
//! nodes 42
//! end
//! ```
//!
//! Fields appear in exactly this order; edges are listed once per pair,
//! sorted lexicographically.

use std::fmt::Write as _;

use crate::coloring::{find_rainbow_triangle, Color, ColoredComplete};
use crate::error::{Error, Result};
use crate::formulas::{GrInstance, Provenance, TopKind};
use crate::search::{has_target_within, Budget};
use crate::target::TargetSpec;
use crate::verify::{check_bad_coloring_within, Evidence, Verdict, VerdictReport};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "gallai-certificate";

pub fn tool_id() -> String {
    format!("gallai-core {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claims {
    pub gallai: bool,
    /// Colors asserted free of a target.
    pub absent: Vec<(Color, TargetSpec)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub verdict: Verdict,
    pub tool: String,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub coloring: ColoredComplete,
    /// Optional display names, ascending by color.
    pub names: Vec<(Color, String)>,
    pub instance: Option<GrInstance>,
    pub provenance: Option<Provenance>,
    pub targets: Option<Vec<TargetSpec>>,
    pub claims: Option<Claims>,
    pub verification: Option<Verification>,
}

impl Certificate {
    /// Bare coloring, no claims.
    pub fn plain(coloring: ColoredComplete) -> Self {
        Certificate {
            coloring,
            names: Vec::new(),
            instance: None,
            provenance: None,
            targets: None,
            claims: None,
            verification: None,
        }
    }

    /// A bad coloring for `targets`, with claims backed by `report`.
    pub fn bad_coloring(coloring: ColoredComplete, targets: Vec<TargetSpec>, report: &VerdictReport) -> Self {
        let absent = targets.iter().enumerate().map(|(j, &t)| ((j + 1) as Color, t)).collect();
        Certificate {
            coloring,
            names: Vec::new(),
            instance: None,
            provenance: None,
            targets: Some(targets),
            claims: Some(Claims { gallai: true, absent }),
            verification: Some(Verification { verdict: report.verdict, tool: tool_id(), nodes: report.stats.nodes }),
        }
    }

    pub fn with_instance(mut self, inst: GrInstance) -> Self {
        self.provenance = Some(inst.provenance());
        self.instance = Some(inst);
        self
    }

    pub fn with_names(mut self, names: Vec<(Color, String)>) -> Self {
        self.names = names;
        self
    }

    pub fn serialize(&self) -> String {
        let c = &self.coloring;
        let mut out = String::new();
        let _ = writeln!(out, "{MAGIC} {FORMAT_VERSION}");
        let _ = writeln!(out, "vertices {}", c.n());
        let _ = writeln!(out, "colors {}", c.k());
        if !self.names.is_empty() {
            let list: Vec<String> = self.names.iter().map(|(col, name)| format!("{col}={name}")).collect();
            let _ = writeln!(out, "names {}", list.join(" "));
        }
        if let Some(inst) = &self.instance {
            let _ = writeln!(out, "instance {inst}");
        }
        if let Some(p) = self.provenance {
            let _ = writeln!(out, "provenance {p}");
        }
        if let Some(ts) = &self.targets {
            let list: Vec<String> = ts.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "targets {}", list.join(" "));
        }
        out.push_str("edges\n");
        for (u, v, col) in c.edges() {
            let _ = writeln!(out, "{u} {v} {col}");
        }
        if let Some(claims) = &self.claims {
            out.push_str("claims\n");
            let _ = writeln!(out, "gallai {}", claims.gallai);
            for (col, t) in &claims.absent {
                let _ = writeln!(out, "absent {col} {t}");
            }
        }
        if let Some(v) = &self.verification {
            out.push_str("verification\n");
            let _ = writeln!(out, "verdict {}", v.verdict);
            let _ = writeln!(out, "tool {}", v.tool);
            let _ = writeln!(out, "nodes {}", v.nodes);
        }
        out.push_str("end\n");
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).certificate()
    }

    /// Re-checks every claim against the coloring. Without claims, checks
    /// the listed targets (or, failing those, Gallai-ness alone).
    pub fn verify(&self, budget: u64) -> Result<VerdictReport> {
        let c = &self.coloring;
        let Some(claims) = &self.claims else {
            return match &self.targets {
                Some(ts) => check_bad_coloring_within(c, ts, budget),
                None => {
                    let claim = format!("coloring of K_{} is Gallai", c.n());
                    Ok(match find_rainbow_triangle(c) {
                        Some((a, b, d)) => VerdictReport::new(claim, Verdict::Refuted)
                            .with_evidence(Evidence::RainbowTriangle(a, b, d)),
                        None => {
                            let mut r = VerdictReport::new(claim, Verdict::Verified);
                            r.stats.complete = true;
                            r
                        }
                    })
                }
            };
        };
        let described: Vec<String> = claims.absent.iter().map(|(col, t)| format!("no {t} in color {col}")).collect();
        let claim = format!(
            "certificate claims on K_{}: {}{}",
            c.n(),
            if claims.gallai { "Gallai" } else { "no Gallai claim" },
            if described.is_empty() { String::new() } else { format!(", {}", described.join(", ")) }
        );
        let mut report = VerdictReport::new(claim, Verdict::Verified);
        let mut search_budget = Budget::new(budget);
        if claims.gallai {
            if let Some((a, b, d)) = find_rainbow_triangle(c) {
                report.verdict = Verdict::Refuted;
                return Ok(report.with_evidence(Evidence::RainbowTriangle(a, b, d)));
            }
        }
        for &(col, t) in &claims.absent {
            match has_target_within(c, col, t, &mut search_budget) {
                Ok(Some(e)) => {
                    report.verdict = Verdict::Refuted;
                    report.stats.nodes = search_budget.spent();
                    return Ok(report.with_evidence(Evidence::Embedding(e)));
                }
                Ok(None) => {}
                Err(Error::BudgetExceeded(_)) => {
                    report.verdict = Verdict::ExhaustedBudget;
                    report.stats.nodes = search_budget.spent();
                    return Ok(report);
                }
                Err(e) => return Err(e),
            }
        }
        if let Some(v) = &self.verification {
            if v.verdict != Verdict::Verified {
                report.verdict = v.verdict;
            }
        }
        report.stats.nodes = search_budget.spent();
        report.stats.complete = true;
        Ok(report)
    }
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn number<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("{what}: expected a number, got {s:?}")));
    }
    s.parse().map_err(|_| syntax(line, format!("{what}: number {s:?} out of range")))
}

fn semantic(e: Error) -> Error {
    match e {
        Error::Syntax { .. } | Error::Semantic(_) => e,
        other => Error::Semantic(other.to_string()),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { lines: text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect(), pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next_line(&mut self, expect: &str) -> Result<(usize, &'a str)> {
        let line = self.peek().ok_or_else(|| syntax(self.lines.len() + 1, format!("unexpected end, expected {expect}")))?;
        self.pos += 1;
        Ok(line)
    }

    /// Consumes `key value...` and returns the value part.
    fn field(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (no, line) = self.next_line(key)?;
        match line.strip_prefix(key) {
            Some(rest) if rest.starts_with(' ') => Ok((no, &rest[1..])),
            Some("") => Ok((no, "")),
            _ => Err(syntax(no, format!("expected {key:?}, got {line:?}"))),
        }
    }

    fn optional(&mut self, key: &str) -> Result<Option<(usize, &'a str)>> {
        match self.peek() {
            Some((_, line)) if line == key || line.starts_with(&format!("{key} ")) => self.field(key).map(Some),
            _ => Ok(None),
        }
    }

    fn certificate(mut self) -> Result<Certificate> {
        let (no, version) = self.field(MAGIC)?;
        if number::<u32>(no, version, "format version")? != FORMAT_VERSION {
            return Err(syntax(no, format!("unsupported format version {version}")));
        }
        let (no, n) = self.field("vertices")?;
        let n: usize = number(no, n, "vertices")?;
        let (no, k) = self.field("colors")?;
        let k: Color = number(no, k, "colors")?;

        let mut names = Vec::new();
        if let Some((no, rest)) = self.optional("names")? {
            for item in rest.split(' ') {
                let (col, name) = item.split_once('=').ok_or_else(|| syntax(no, format!("bad name {item:?}")))?;
                if name.is_empty() {
                    return Err(syntax(no, format!("empty name for color {col}")));
                }
                names.push((number::<Color>(no, col, "color")?, name.to_string()));
            }
            if names.windows(2).any(|w| w[0].0 >= w[1].0) || names.iter().any(|(c, _)| *c == 0 || *c > k) {
                return Err(Error::Semantic("names must list distinct palette colors in ascending order".into()));
            }
        }

        let instance = match self.optional("instance")? {
            Some((no, rest)) => Some(parse_instance(no, rest)?),
            None => None,
        };
        let provenance = match self.optional("provenance")? {
            Some((_, rest)) => Some(rest.parse::<Provenance>()?),
            None => None,
        };
        let targets = match self.optional("targets")? {
            Some((no, rest)) => Some(
                rest.split(' ')
                    .map(|t| t.parse::<TargetSpec>().map_err(|e| syntax(no, e.to_string())))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };

        let (no, line) = self.next_line("edges")?;
        if line != "edges" {
            return Err(syntax(no, format!("expected \"edges\", got {line:?}")));
        }
        let mut edges: Vec<(usize, usize, Color)> = Vec::new();
        while let Some((no, line)) = self.peek() {
            if !line.starts_with(|c: char| c.is_ascii_digit()) {
                break;
            }
            self.pos += 1;
            let fields: Vec<&str> = line.split(' ').collect();
            if fields.len() != 3 {
                return Err(syntax(no, format!("edge line needs three numbers, got {line:?}")));
            }
            let edge = (
                number::<usize>(no, fields[0], "vertex")?,
                number::<usize>(no, fields[1], "vertex")?,
                number::<Color>(no, fields[2], "color")?,
            );
            if edge.0 >= edge.1 {
                return Err(Error::Semantic(format!("line {no}: edge must be written with u < v")));
            }
            if let Some(prev) = edges.last() {
                if (edge.0, edge.1) <= (prev.0, prev.1) {
                    return Err(Error::Semantic(format!(
                        "line {no}: edges must be sorted without repeats, ({}, {}) follows ({}, {})",
                        edge.0, edge.1, prev.0, prev.1
                    )));
                }
            }
            edges.push(edge);
        }
        let coloring = ColoredComplete::new(n, k, edges).map_err(semantic)?;

        let claims = match self.optional("claims")? {
            Some((no, rest)) => {
                if !rest.is_empty() {
                    return Err(syntax(no, "\"claims\" takes no value"));
                }
                let (no, g) = self.field("gallai")?;
                let gallai = match g {
                    "true" => true,
                    "false" => false,
                    _ => return Err(syntax(no, format!("gallai must be true or false, got {g:?}"))),
                };
                let mut absent = Vec::new();
                while let Some((no, rest)) = self.optional("absent")? {
                    let (col, t) = rest.split_once(' ').ok_or_else(|| syntax(no, "absent needs a color and a target"))?;
                    let col: Color = number(no, col, "color")?;
                    if col == 0 || col > k {
                        return Err(Error::Semantic(format!("line {no}: color {col} outside 1..={k}")));
                    }
                    absent.push((col, t.parse::<TargetSpec>().map_err(|e| syntax(no, e.to_string()))?));
                }
                Some(Claims { gallai, absent })
            }
            None => None,
        };
        let verification = match self.optional("verification")? {
            Some((no, rest)) => {
                if !rest.is_empty() {
                    return Err(syntax(no, "\"verification\" takes no value"));
                }
                let (_, verdict) = self.field("verdict")?;
                let verdict = verdict.parse::<Verdict>()?;
                let (_, tool) = self.field("tool")?;
                let (no, nodes) = self.field("nodes")?;
                Some(Verification { verdict, tool: tool.to_string(), nodes: number(no, nodes, "nodes")? })
            }
            None => None,
        };
        let (no, line) = self.next_line("end")?;
        if line != "end" {
            return Err(syntax(no, format!("expected \"end\", got {line:?}")));
        }
        if let Some((no, _)) = self.peek() {
            return Err(syntax(no, "content after \"end\""));
        }

        if claims.is_some() != verification.is_some() {
            return Err(Error::Semantic("claims and verification blocks must appear together".into()));
        }
        if let Some(ts) = &targets {
            if ts.len() != k as usize {
                return Err(Error::Semantic(format!("{} targets for {k} colors", ts.len())));
            }
        }
        match (&instance, provenance) {
            (None, None) => {}
            (Some(inst), Some(p)) => {
                if inst.k() != k as usize {
                    return Err(Error::Semantic(format!("instance has {} colors, coloring {k}", inst.k())));
                }
                if p != inst.provenance() {
                    return Err(Error::Semantic(format!(
                        "provenance {p} does not match instance {inst} ({})",
                        inst.provenance()
                    )));
                }
                if targets.as_ref().is_some_and(|ts| *ts != inst.targets()) {
                    return Err(Error::Semantic(format!("targets do not match instance {inst}")));
                }
            }
            _ => return Err(Error::Semantic("instance and provenance must appear together".into())),
        }
        Ok(Certificate { coloring, names, instance, provenance, targets, claims, verification })
    }
}

fn parse_instance(no: usize, rest: &str) -> Result<GrInstance> {
    let fields: Vec<&str> = rest.split(' ').collect();
    let [n, i, top] = fields.as_slice() else {
        return Err(syntax(no, format!("instance needs n=, i= and top=, got {rest:?}")));
    };
    fn value<'s>(no: usize, field: &'s str, key: &str) -> Result<&'s str> {
        field.strip_prefix(key).ok_or_else(|| syntax(no, format!("expected {key}..., got {field:?}")))
    }
    let n: usize = number(no, value(no, n, "n=")?, "n")?;
    let iv = value(no, i, "i=")?
        .split(',')
        .map(|x| number::<usize>(no, x, "i-vector entry"))
        .collect::<Result<Vec<_>>>()?;
    let top: TopKind = value(no, top, "top=")?.parse().map_err(|e: Error| syntax(no, e.to_string()))?;
    GrInstance::new(n, iv, top).map_err(semantic)
}
