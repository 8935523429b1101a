//! Depth-first enumeration of edge colorings of `K_n`.
//!
//! Edges are assigned in edge order, so each new edge closes its triangles
//! with earlier vertices immediately. A branch is cut when it
//! - creates a rainbow triangle (Gallai mode),
//! - completes a forbidden monochromatic target in the color just used,
//! - is not the lex-least string under some adjacent vertex transposition, or
//! - uses a color before a lower color with the same target has appeared.
//!
//! The last two cuts keep the lex-least member of every orbit under vertex
//! relabelling and same-target color swaps; the two target and rainbow
//! predicates are invariant under those maps, so no bad coloring is lost.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{edge_at, edge_count, edge_index, Color};
use crate::search::{target_in, Budget};
use crate::target::{Embedding, TargetKind, TargetSpec};

const FLUSH_EVERY: u64 = 4096;
pub(crate) const SAMPLE_SIZE: usize = 10;

#[derive(Clone, Debug)]
pub(crate) struct Problem {
    pub n: usize,
    pub k: Color,
    /// Forbidden target per color (`targets[c - 1]`); `None` forbids nothing.
    pub targets: Vec<Option<TargetSpec>>,
    pub gallai: bool,
    pub symmetry: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum PruneReason {
    Rainbow(usize, usize, usize),
    Target(Embedding),
    /// Swapping vertices `a` and `a + 1` gives a smaller string.
    VertexOrder(usize),
    /// `later` used before `earlier`, both with the same target.
    ColorOrder { earlier: Color, later: Color },
}

/// A cut branch: the colors assigned so far (edge order) and why it was cut.
#[derive(Clone, Debug)]
pub(crate) struct PruneSample {
    pub prefix: Vec<Color>,
    pub reason: PruneReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// A complete coloring that survived every cut, in edge order.
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Debug)]
pub(crate) struct Output {
    pub outcome: Outcome,
    pub nodes: u64,
    pub leaves: u64,
    pub samples: Vec<PruneSample>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    FirstLeaf,
    CountLeaves,
    Prefixes(usize),
}

enum Flow {
    Continue,
    Stop,
}

struct Shared {
    nodes: AtomicU64,
    limit: u64,
    out_of_budget: AtomicBool,
    /// Lowest subtree index that found a leaf.
    best: AtomicUsize,
}

struct Engine<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    subtree: usize,
    mode: Mode,
    edges: Vec<(usize, usize)>,
    colors: Vec<Color>,
    classes: Vec<Vec<u64>>,
    used: Vec<u32>,
    /// Previous color with the same target, if any.
    group_prev: Vec<Option<Color>>,
    /// Edges incident to `a` or `a + 1`, in edge order.
    swap_edges: Vec<Vec<usize>>,
    /// Edge at which transposition `a` was decided in our favour.
    decided_at: Vec<usize>,
    local_nodes: u64,
    unflushed: u64,
    leaves: u64,
    found: Option<Vec<Color>>,
    prefixes: Vec<Vec<Color>>,
    samples: Vec<PruneSample>,
    prune_events: u64,
    rng: ChaCha8Rng,
    aborted: bool,
}

impl<'a> Engine<'a> {
    fn new(p: &'a Problem, shared: &'a Shared, subtree: usize, mode: Mode) -> Self {
        let n = p.n;
        let e = edge_count(n);
        let mut group_prev = vec![None; p.k as usize + 1];
        if p.symmetry {
            for c in 2..=p.k {
                group_prev[c as usize] =
                    (1..c).rev().find(|&d| p.targets[d as usize - 1] == p.targets[c as usize - 1]);
            }
        }
        let edges: Vec<_> = (0..e).map(edge_at).collect();
        let swap_edges = (0..n.saturating_sub(1))
            .map(|a| {
                (0..e)
                    .filter(|&t| {
                        let (x, y) = edges[t];
                        x == a || y == a || x == a + 1 || y == a + 1
                    })
                    .collect()
            })
            .collect();
        Engine {
            p,
            shared,
            subtree,
            mode,
            edges,
            colors: vec![0; e],
            classes: vec![vec![0; n]; p.k as usize + 1],
            used: vec![0; p.k as usize + 1],
            group_prev,
            swap_edges,
            decided_at: vec![usize::MAX; n.saturating_sub(1)],
            local_nodes: 0,
            unflushed: 0,
            leaves: 0,
            found: None,
            prefixes: Vec::new(),
            samples: Vec::new(),
            prune_events: 0,
            rng: ChaCha8Rng::seed_from_u64(0x6a11a1 ^ subtree as u64),
            aborted: false,
        }
    }

    fn assign(&mut self, e: usize, c: Color) {
        let (u, v) = self.edges[e];
        self.colors[e] = c;
        self.classes[c as usize][u] |= 1 << v;
        self.classes[c as usize][v] |= 1 << u;
        self.used[c as usize] += 1;
    }

    fn unassign(&mut self, e: usize) {
        let (u, v) = self.edges[e];
        let c = self.colors[e];
        self.colors[e] = 0;
        self.classes[c as usize][u] &= !(1 << v);
        self.classes[c as usize][v] &= !(1 << u);
        self.used[c as usize] -= 1;
    }

    fn record(&mut self, e: usize, reason: PruneReason) {
        self.prune_events += 1;
        let slot = if self.samples.len() < SAMPLE_SIZE {
            Some(self.samples.len())
        } else {
            let j = self.rng.gen_range(0..self.prune_events);
            (j < SAMPLE_SIZE as u64).then_some(j as usize)
        };
        if let Some(slot) = slot {
            let sample = PruneSample { prefix: self.colors[..=e].to_vec(), reason };
            if slot == self.samples.len() {
                self.samples.push(sample);
            } else {
                self.samples[slot] = sample;
            }
        }
    }

    /// Returns false once the shared budget is spent or a better subtree won.
    fn tick(&mut self, extra: u64) -> bool {
        self.local_nodes += extra;
        self.unflushed += extra;
        if self.unflushed >= FLUSH_EVERY {
            self.flush();
            if self.shared.out_of_budget.load(Ordering::Relaxed) {
                return false;
            }
            if self.shared.best.load(Ordering::Relaxed) < self.subtree {
                self.aborted = true;
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
        self.unflushed = 0;
        if total > self.shared.limit {
            self.shared.out_of_budget.store(true, Ordering::Relaxed);
        }
    }

    fn remaining_budget(&self) -> u64 {
        let seen = self.shared.nodes.load(Ordering::Relaxed) + self.unflushed;
        self.shared.limit.saturating_sub(seen)
    }

    fn rainbow_at(&self, e: usize, c: Color) -> Option<(usize, usize, usize)> {
        let (u, v) = self.edges[e];
        (0..u).find_map(|w| {
            let a = self.colors[edge_index(w, u)];
            let b = self.colors[edge_index(w, v)];
            (a != b && a != c && b != c).then_some((w, u, v))
        })
    }

    /// Lex-leader test for every transposition `(a, a+1)` with `a + 1 <= v`.
    fn vertex_order_violation(&mut self, e: usize) -> Option<usize> {
        let (_, v) = self.edges[e];
        for a in 0..v {
            if self.decided_at[a] < e {
                continue;
            }
            self.decided_at[a] = usize::MAX;
            let swap = |x: usize| {
                if x == a {
                    a + 1
                } else if x == a + 1 {
                    a
                } else {
                    x
                }
            };
            for &t in &self.swap_edges[a] {
                if t > e {
                    break;
                }
                let (x, y) = self.edges[t];
                let image = edge_index(swap(x), swap(y));
                if image > e {
                    break;
                }
                let (mine, theirs) = (self.colors[t], self.colors[image]);
                if mine < theirs {
                    self.decided_at[a] = e;
                    break;
                }
                if mine > theirs {
                    return Some(a);
                }
            }
        }
        None
    }

    fn target_hit(&mut self, e: usize, c: Color) -> Result<Option<Embedding>, ()> {
        let Some(target) = self.p.targets[c as usize - 1] else {
            return Ok(None);
        };
        let (u, _) = self.edges[e];
        let adj = &self.classes[c as usize];
        let allowed = match target.kind() {
            TargetKind::Matching => {
                let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
                if (edges as usize) < target.order() / 2 {
                    return Ok(None);
                }
                !0
            }
            _ => {
                let mut comp = 1u64 << u;
                let mut frontier = comp;
                while frontier != 0 {
                    let x = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    let fresh = adj[x] & !comp;
                    comp |= fresh;
                    frontier |= fresh;
                }
                if (comp.count_ones() as usize) < target.order() {
                    return Ok(None);
                }
                comp
            }
        };
        let mut budget = Budget::new(self.remaining_budget());
        let found = target_in(adj, allowed & crate::coloring::full_mask(self.p.n), target, c, &mut budget);
        let spent = budget.spent();
        if !self.tick(spent) {
            return Err(());
        }
        found.map_err(|_| {
            self.shared.out_of_budget.store(true, Ordering::Relaxed);
        })
    }

    fn dfs(&mut self, e: usize) -> Flow {
        let stop_edge = match self.mode {
            Mode::Prefixes(d) => d,
            _ => self.colors.len(),
        };
        if e == stop_edge {
            match self.mode {
                Mode::FirstLeaf => {
                    self.found = Some(self.colors.clone());
                    return Flow::Stop;
                }
                Mode::CountLeaves => {
                    self.leaves += 1;
                    return Flow::Continue;
                }
                Mode::Prefixes(_) => {
                    self.prefixes.push(self.colors[..e].to_vec());
                    return Flow::Continue;
                }
            }
        }
        for c in 1..=self.p.k {
            if !self.tick(1) {
                return Flow::Stop;
            }
            if let Some(prev) = self.group_prev[c as usize] {
                if self.used[prev as usize] == 0 {
                    // Later colors of the group are blocked as well.
                    self.colors[e] = c;
                    self.record(e, PruneReason::ColorOrder { earlier: prev, later: c });
                    self.colors[e] = 0;
                    continue;
                }
            }
            if self.p.gallai {
                if let Some((w, u, v)) = self.rainbow_at(e, c) {
                    self.colors[e] = c;
                    self.record(e, PruneReason::Rainbow(w, u, v));
                    self.colors[e] = 0;
                    continue;
                }
            }
            self.assign(e, c);
            if self.p.symmetry {
                if let Some(a) = self.vertex_order_violation(e) {
                    self.record(e, PruneReason::VertexOrder(a));
                    self.unassign(e);
                    continue;
                }
            }
            match self.target_hit(e, c) {
                Err(()) => {
                    self.unassign(e);
                    return Flow::Stop;
                }
                Ok(Some(embedding)) => {
                    self.record(e, PruneReason::Target(embedding));
                    self.unassign(e);
                    continue;
                }
                Ok(None) => {}
            }
            let flow = self.dfs(e + 1);
            self.unassign(e);
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn replay(&mut self, prefix: &[Color]) {
        for (e, &c) in prefix.iter().enumerate() {
            self.assign(e, c);
        }
    }
}

fn output_of(engine: &mut Engine, outcome: Outcome) -> Output {
    engine.flush();
    Output {
        outcome,
        nodes: engine.local_nodes,
        leaves: engine.leaves,
        samples: std::mem::take(&mut engine.samples),
    }
}

/// Searches for a complete coloring surviving every cut.
pub(crate) fn find_leaf(p: &Problem, budget: u64, threads: usize) -> Output {
    let shared = Shared {
        nodes: AtomicU64::new(0),
        limit: budget,
        out_of_budget: AtomicBool::new(false),
        best: AtomicUsize::new(usize::MAX),
    };
    let total_edges = edge_count(p.n);
    if threads <= 1 || total_edges < 8 {
        let mut engine = Engine::new(p, &shared, 0, Mode::FirstLeaf);
        engine.dfs(0);
        let outcome = match engine.found.take() {
            Some(colors) => Outcome::Found(colors),
            None if shared.out_of_budget.load(Ordering::Relaxed) => Outcome::OutOfBudget,
            None => Outcome::Exhausted,
        };
        let mut out = output_of(&mut engine, outcome);
        out.nodes = shared.nodes.load(Ordering::Relaxed);
        return out;
    }

    // Split the tree at a depth that gives every worker several subtrees.
    let mut depth = 1;
    let mut prefixes;
    let mut split_nodes = 0;
    let mut split_samples;
    loop {
        let mut splitter = Engine::new(p, &shared, 0, Mode::Prefixes(depth));
        splitter.dfs(0);
        let out = output_of(&mut splitter, Outcome::Exhausted);
        prefixes = splitter.prefixes;
        split_nodes += out.nodes;
        split_samples = out.samples;
        if prefixes.len() >= threads * 8 || depth + 4 >= total_edges || shared.out_of_budget.load(Ordering::Relaxed) {
            break;
        }
        depth += 1;
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let results: Vec<Output> = pool.install(|| {
        use rayon::prelude::*;
        prefixes
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                if shared.best.load(Ordering::Relaxed) < i || shared.out_of_budget.load(Ordering::Relaxed) {
                    return Output { outcome: Outcome::OutOfBudget, nodes: 0, leaves: 0, samples: Vec::new() };
                }
                let mut engine = Engine::new(p, &shared, i, Mode::FirstLeaf);
                engine.replay(prefix);
                // Transpositions must be rechecked against the full prefix.
                engine.decided_at.iter_mut().for_each(|d| *d = usize::MAX);
                engine.dfs(prefix.len());
                let outcome = match engine.found.take() {
                    Some(colors) => {
                        shared.best.fetch_min(i, Ordering::Relaxed);
                        Outcome::Found(colors)
                    }
                    None if engine.aborted => Outcome::Exhausted,
                    None if shared.out_of_budget.load(Ordering::Relaxed) => Outcome::OutOfBudget,
                    None => Outcome::Exhausted,
                };
                output_of(&mut engine, outcome)
            })
            .collect()
    });

    let mut samples = split_samples;
    for r in &results {
        samples.extend(r.samples.iter().cloned());
    }
    samples.truncate(SAMPLE_SIZE);
    let found = results.iter().enumerate().find_map(|(i, r)| match &r.outcome {
        Outcome::Found(colors) => Some((i, colors.clone())),
        _ => None,
    });
    // Subtrees before the first hit always run to the end, so this count
    // does not depend on scheduling.
    let (outcome, nodes) = match found {
        Some((i, colors)) => {
            (Outcome::Found(colors), split_nodes + results[..=i].iter().map(|r| r.nodes).sum::<u64>())
        }
        None if results.iter().any(|r| r.outcome == Outcome::OutOfBudget) => {
            (Outcome::OutOfBudget, shared.nodes.load(Ordering::Relaxed))
        }
        None => (Outcome::Exhausted, shared.nodes.load(Ordering::Relaxed)),
    };
    Output { outcome, nodes, leaves: 0, samples }
}

/// Counts surviving complete colorings (single-threaded).
pub(crate) fn count_leaves(p: &Problem, budget: u64) -> Output {
    let shared = Shared {
        nodes: AtomicU64::new(0),
        limit: budget,
        out_of_budget: AtomicBool::new(false),
        best: AtomicUsize::new(usize::MAX),
    };
    let mut engine = Engine::new(p, &shared, 0, Mode::CountLeaves);
    engine.dfs(0);
    let outcome = if shared.out_of_budget.load(Ordering::Relaxed) { Outcome::OutOfBudget } else { Outcome::Exhausted };
    output_of(&mut engine, outcome)
}
