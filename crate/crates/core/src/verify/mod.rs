//! Exact verification: certified bad colorings, exhaustive two-color Ramsey
//! checks and the pruned search for bad Gallai colorings.

mod engine;
mod report;

use std::time::Instant;

pub use report::{Evidence, Stats, Verdict, VerdictReport};

use crate::coloring::{edge_at, edge_index, find_rainbow_triangle, Color, ColoredComplete, MAX_VERTICES};
use crate::constructions::lower_bound_witness;
use crate::error::{Error, Result};
use crate::formulas::{gr_value, GrInstance};
use crate::search::{has_target_within, Budget, DEFAULT_NODE_BUDGET};
use crate::target::TargetSpec;
use engine::{Outcome, PruneReason, PruneSample, Problem};

/// Largest `N` accepted by [`exhaustive_ramsey2`].
pub const RAMSEY_ENUMERATION_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_NODE_BUDGET, threads: 1 }
    }
}

fn describe(targets: &[TargetSpec]) -> String {
    let list: Vec<String> = targets.iter().enumerate().map(|(j, t)| format!("{t} in color {}", j + 1)).collect();
    list.join(", ")
}

fn check_targets(c: &ColoredComplete, targets: &[TargetSpec], gallai: bool, claim: String, budget: u64) -> VerdictReport {
    let start = Instant::now();
    let mut budget = Budget::new(budget);
    let mut report = VerdictReport::new(claim, Verdict::Verified);
    let finish = |mut r: VerdictReport, budget: &Budget| {
        r.stats.nodes = budget.spent();
        r.stats.elapsed = start.elapsed();
        r
    };
    if gallai {
        if let Some((a, b, d)) = find_rainbow_triangle(c) {
            report.verdict = Verdict::Refuted;
            return finish(report.with_evidence(Evidence::RainbowTriangle(a, b, d)), &budget);
        }
    }
    for (j, &t) in targets.iter().enumerate() {
        match has_target_within(c, (j + 1) as Color, t, &mut budget) {
            Ok(Some(e)) => {
                report.verdict = Verdict::Refuted;
                return finish(report.with_evidence(Evidence::Embedding(e)), &budget);
            }
            Ok(None) => {}
            Err(Error::BudgetExceeded(_)) => {
                report.verdict = Verdict::ExhaustedBudget;
                return finish(report, &budget);
            }
            Err(other) => unreachable!("target search on a validated coloring: {other}"),
        }
    }
    report.stats.complete = true;
    finish(report, &budget)
}

/// Verified iff `c` has no rainbow triangle and no color `j` contains
/// `targets[j - 1]`.
pub fn check_bad_coloring(c: &ColoredComplete, targets: &[TargetSpec]) -> Result<VerdictReport> {
    check_bad_coloring_within(c, targets, DEFAULT_NODE_BUDGET)
}

pub fn check_bad_coloring_within(c: &ColoredComplete, targets: &[TargetSpec], budget: u64) -> Result<VerdictReport> {
    if targets.len() != c.k() as usize {
        return Err(Error::Semantic(format!("{} targets for {} colors", targets.len(), c.k())));
    }
    let claim = format!("Gallai {}-coloring of K_{} avoids {}", c.k(), c.n(), describe(targets));
    Ok(check_targets(c, targets, true, claim, budget))
}

/// Re-derives the reason behind a cut branch from its prefix alone.
fn spot_check(problem: &Problem, sample: &PruneSample) -> bool {
    let prefix = &sample.prefix;
    let color_of = |u: usize, v: usize| prefix.get(edge_index(u, v)).copied().filter(|&c| c != 0);
    match &sample.reason {
        PruneReason::Rainbow(a, b, c) => match (color_of(*a, *b), color_of(*a, *c), color_of(*b, *c)) {
            (Some(x), Some(y), Some(z)) => x != y && y != z && x != z,
            _ => false,
        },
        PruneReason::Target(e) => {
            problem.targets[e.color as usize - 1] == Some(e.target) && e.verify_with(problem.n, color_of)
        }
        PruneReason::VertexOrder(a) => {
            let swap = |x: usize| match x {
                x if x == *a => a + 1,
                x if x == a + 1 => *a,
                x => x,
            };
            for (t, &mine) in prefix.iter().enumerate() {
                let (x, y) = edge_at(t);
                let Some(&theirs) = prefix.get(edge_index(swap(x), swap(y))) else {
                    return false;
                };
                if mine != theirs {
                    return mine > theirs;
                }
            }
            false
        }
        PruneReason::ColorOrder { earlier, later } => {
            let (last, before) = prefix.split_last().expect("nonempty prefix");
            last == later
                && earlier < later
                && !before.contains(earlier)
                && problem.targets[*earlier as usize - 1] == problem.targets[*later as usize - 1]
        }
    }
}

fn run_search(problem: &Problem, opts: SearchOptions, claim: String) -> Result<VerdictReport> {
    let start = Instant::now();
    let out = engine::find_leaf(problem, opts.budget, opts.threads);
    let mut report = VerdictReport::new(claim, Verdict::ExhaustedBudget);
    match out.outcome {
        Outcome::Found(colors) => {
            let witness = ColoredComplete::from_edge_order(problem.n, problem.k, colors)?;
            let targets: Vec<TargetSpec> = problem.targets.iter().flatten().copied().collect();
            if targets.len() == problem.targets.len() {
                let check = check_targets(&witness, &targets, problem.gallai, String::new(), DEFAULT_NODE_BUDGET);
                if check.verdict != Verdict::Verified {
                    return Err(Error::SpotCheckFailed(format!("search witness fails its own check: {:?}", check.evidence)));
                }
            }
            report.verdict = Verdict::Refuted;
            report.evidence = Some(Evidence::Coloring(witness));
        }
        Outcome::Exhausted => {
            for sample in &out.samples {
                if !spot_check(problem, sample) {
                    return Err(Error::SpotCheckFailed(format!("cut branch does not hold up: {:?}", sample.reason)));
                }
            }
            report.verdict = Verdict::Verified;
            report.stats.complete = true;
            report.stats.spot_checks = out.samples.len();
        }
        Outcome::OutOfBudget => {}
    }
    report.stats.nodes = out.nodes;
    report.stats.elapsed = start.elapsed();
    Ok(report)
}

/// Verified iff every 2-coloring of `K_n` has `t1` in color 1 or `t2` in
/// color 2; otherwise Refuted with a coloring avoiding both.
pub fn exhaustive_ramsey2(t1: TargetSpec, t2: TargetSpec, n: usize, opts: SearchOptions) -> Result<VerdictReport> {
    if n == 0 || n > RAMSEY_ENUMERATION_CAP {
        return Err(Error::RangeViolation(format!(
            "exhaustive two-color enumeration supports 1..={RAMSEY_ENUMERATION_CAP} vertices, got {n}"
        )));
    }
    let problem = Problem { n, k: 2, targets: vec![Some(t1), Some(t2)], gallai: false, symmetry: true };
    let claim = format!("every 2-coloring of K_{n} contains {t1} in color 1 or {t2} in color 2");
    let report = run_search(&problem, opts, claim)?;
    if report.verdict == Verdict::ExhaustedBudget {
        return Err(Error::BudgetExceeded(opts.budget));
    }
    Ok(report)
}

/// Searches for a Gallai `k`-coloring of `K_n` avoiding every target.
///
/// Refuted carries such a coloring; Verified means none exists.
pub fn search_bad_gallai(n: usize, targets: &[TargetSpec], opts: SearchOptions) -> Result<VerdictReport> {
    if targets.is_empty() || targets.len() > Color::MAX as usize {
        return Err(Error::RangeViolation(format!("{} targets, need 1..=255", targets.len())));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::RangeViolation(format!("{n} vertices, need 1..={MAX_VERTICES}")));
    }
    let k = targets.len();
    let problem = Problem {
        n,
        k: k as Color,
        targets: targets.iter().copied().map(Some).collect(),
        gallai: true,
        symmetry: true,
    };
    let claim = format!("every Gallai {k}-coloring of K_{n} contains {}", describe_any(targets));
    run_search(&problem, opts, claim)
}

fn describe_any(targets: &[TargetSpec]) -> String {
    let list: Vec<String> = targets.iter().enumerate().map(|(j, t)| format!("{t} in color {}", j + 1)).collect();
    match list.len() {
        1 => list[0].clone(),
        _ => format!("{} or {}", list[..list.len() - 1].join(", "), list[list.len() - 1]),
    }
}

/// Both sides of a Gallai-Ramsey value: a certified bad coloring one vertex
/// below, and an exhaustive search showing none exists at the value.
pub fn verify_gr_point(inst: &GrInstance, opts: SearchOptions) -> Result<VerdictReport> {
    let start = Instant::now();
    let value = gr_value(inst);
    let targets = inst.targets();

    let witness = lower_bound_witness(inst)?;
    let mut lower = check_bad_coloring(&witness, &targets)?;
    lower.claim = format!("GR > {}: bad Gallai {}-coloring of K_{}", value - 1, inst.k(), value - 1);
    lower.evidence = Some(Evidence::Coloring(witness));

    let mut upper = search_bad_gallai(value, &targets, opts)?;
    upper.claim = format!("GR <= {value}: {}", upper.claim);

    let verdict = match (lower.verdict, upper.verdict) {
        (Verdict::Verified, Verdict::Verified) => Verdict::Verified,
        (Verdict::Refuted, _) | (_, Verdict::Refuted) => Verdict::Refuted,
        _ => Verdict::ExhaustedBudget,
    };
    let mut report = VerdictReport::new(format!("GR({}) = {value} for {inst}", describe_list(&targets)), verdict);
    report.stats.nodes = lower.stats.nodes + upper.stats.nodes;
    report.stats.complete = lower.stats.complete && upper.stats.complete;
    report.stats.spot_checks = upper.stats.spot_checks;
    report.stats.elapsed = start.elapsed();
    report.parts = vec![lower, upper];
    Ok(report)
}

fn describe_list(targets: &[TargetSpec]) -> String {
    targets.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Number of complete colorings that survive every cut, for cross-checking
/// the symmetry reduction. `targets[j]` of `None` leaves color `j + 1` free.
pub fn count_surviving_colorings(
    n: usize,
    k: Color,
    targets: &[Option<TargetSpec>],
    gallai: bool,
    symmetry: bool,
) -> Result<u64> {
    if targets.len() != k as usize {
        return Err(Error::Semantic(format!("{} targets for {k} colors", targets.len())));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::RangeViolation(format!("{n} vertices, need 1..={MAX_VERTICES}")));
    }
    let problem = Problem { n, k, targets: targets.to_vec(), gallai, symmetry };
    let out = engine::count_leaves(&problem, u64::MAX);
    Ok(out.leaves)
}
