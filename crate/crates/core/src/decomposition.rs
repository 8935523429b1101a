//! Gallai partitions and reduced colorings.
//!
//! A part of a Gallai partition is always a module (every outside vertex sees
//! it in one color). We build the strong-module tree of the coloring by
//! closure, then pick the partition with the most parts: the frontier of the
//! tree obtained by expanding every node whose quotient colors fit in a
//! two-color set `S`, maximized over the admissible choices of `S`.

use std::cmp::Reverse;
use std::fmt;

use crate::coloring::{find_rainbow_triangle, full_mask, Color, ColoredComplete};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiPartition {
    /// Parts ordered by decreasing size, ties by least vertex; vertices ascending.
    pub parts: Vec<Vec<usize>>,
    /// Coloring of the complete graph on the parts.
    pub reduced: ColoredComplete,
    /// Colors that occur between parts, ascending.
    pub inter_colors: Vec<Color>,
}

impl GallaiPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of the part containing each vertex.
    pub fn part_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v < n {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyPart(usize),
    VertexOutOfRange(usize),
    Overlap(usize),
    Uncovered(usize),
    TooFewParts(usize),
    MixedColors { parts: (usize, usize) },
    TooManyInterColors(Vec<Color>),
    ReducedShape { expected: usize, got: usize },
    ReducedMismatch { parts: (usize, usize) },
    InterColorsMismatch { declared: Vec<Color>, actual: Vec<Color> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPart(i) => write!(f, "part {i} is empty"),
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} does not exist"),
            Violation::Overlap(v) => write!(f, "vertex {v} lies in more than one part"),
            Violation::Uncovered(v) => write!(f, "vertex {v} lies in no part"),
            Violation::TooFewParts(p) => write!(f, "{p} parts, at least 2 required"),
            Violation::MixedColors { parts: (i, j) } => {
                write!(f, "edges between parts {i} and {j} use more than one color")
            }
            Violation::TooManyInterColors(cs) => write!(f, "{} colors between parts: {cs:?}", cs.len()),
            Violation::ReducedShape { expected, got } => {
                write!(f, "reduced coloring has {got} vertices, expected {expected}")
            }
            Violation::ReducedMismatch { parts: (i, j) } => {
                write!(f, "reduced edge ({i}, {j}) disagrees with the coloring")
            }
            Violation::InterColorsMismatch { declared, actual } => {
                write!(f, "declared inter-part colors {declared:?}, actual {actual:?}")
            }
        }
    }
}

#[inline]
fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

fn members(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Grows `seed` inside `within` until every vertex of `within` outside it
/// sees it in a single color.
fn closure(classes: &[Vec<u64>], within: u64, seed: u64) -> u64 {
    let mut module = seed;
    loop {
        let mut grew = false;
        let mut outside = within & !module;
        while outside != 0 {
            let w = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let uniform = classes.iter().skip(1).any(|class| class[w] & module == module);
            if !uniform {
                module |= 1 << w;
                grew = true;
            }
        }
        if !grew {
            return module;
        }
    }
}

/// The inclusion-minimal module containing `seed`, sorted ascending.
pub fn smallest_module(c: &ColoredComplete, seed: &[usize]) -> Vec<usize> {
    let seed = mask_of(seed) & full_mask(c.n());
    if seed == 0 {
        return Vec::new();
    }
    members(closure(&c.color_classes(), full_mask(c.n()), seed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Leaf,
    /// All edges between children share this color.
    Uniform(Color),
    Prime,
}

/// A node of the strong-module tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongModule {
    pub vertices: u64,
    pub kind: ModuleKind,
    pub children: Vec<StrongModule>,
    /// Colors between children, ascending.
    pub colors: Vec<Color>,
}

pub fn strong_module_tree(c: &ColoredComplete) -> StrongModule {
    build(c, &c.color_classes(), full_mask(c.n()))
}

fn build(c: &ColoredComplete, classes: &[Vec<u64>], x: u64) -> StrongModule {
    if x.count_ones() == 1 {
        return StrongModule { vertices: x, kind: ModuleKind::Leaf, children: Vec::new(), colors: Vec::new() };
    }
    let verts = members(x);
    for col in 1..classes.len() {
        let class = &classes[col];
        if verts.iter().all(|&v| class[v] & x == 0) {
            continue;
        }
        // Components of the graph of non-`col` edges inside x.
        let mut comps = Vec::new();
        let mut left = x;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = x & !class[v] & !(1 << v) & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            comps.push(comp);
        }
        if comps.len() >= 2 {
            let children = comps.into_iter().map(|m| build(c, classes, m)).collect();
            return StrongModule { vertices: x, kind: ModuleKind::Uniform(col as Color), children, colors: vec![col as Color] };
        }
    }
    // Prime: two vertices share a child iff their smallest module is proper.
    let mut child_of: Vec<usize> = (0..c.n()).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        let mut v = v;
        while p[v] != r {
            let next = p[v];
            p[v] = r;
            v = next;
        }
        r
    }
    for (i, &v) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            if find(&mut child_of, v) == find(&mut child_of, w) {
                continue;
            }
            let m = closure(classes, x, 1 << v | 1 << w);
            if m != x {
                let root = find(&mut child_of, v);
                for u in members(m) {
                    let r = find(&mut child_of, u);
                    child_of[r] = root;
                }
            }
        }
    }
    let mut groups: Vec<u64> = Vec::new();
    let mut root_slot = vec![usize::MAX; c.n()];
    for &v in &verts {
        let r = find(&mut child_of, v);
        if root_slot[r] == usize::MAX {
            root_slot[r] = groups.len();
            groups.push(0);
        }
        groups[root_slot[r]] |= 1 << v;
    }
    let reps: Vec<usize> = groups.iter().map(|g| g.trailing_zeros() as usize).collect();
    let mut colors: Vec<Color> = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        for &b in &reps[i + 1..] {
            colors.push(c.color(a, b));
        }
    }
    colors.sort_unstable();
    colors.dedup();
    let children = groups.into_iter().map(|m| build(c, classes, m)).collect();
    StrongModule { vertices: x, kind: ModuleKind::Prime, children, colors }
}

fn frontier(node: &StrongModule, allowed: &[Color], out: &mut Vec<u64>) {
    let expand = node.kind != ModuleKind::Leaf && node.colors.iter().all(|c| allowed.contains(c));
    if expand {
        for child in &node.children {
            frontier(child, allowed, out);
        }
    } else {
        out.push(node.vertices);
    }
}

fn sort_parts(parts: &mut [Vec<usize>]) {
    parts.sort_by_key(|p| (Reverse(p.len()), p.first().copied()));
}

/// Gallai partition with the largest possible number of parts.
pub fn gallai_partition(c: &ColoredComplete) -> Result<GallaiPartition> {
    if c.n() < 2 {
        return Err(Error::TooSmall);
    }
    if let Some((a, b, d)) = find_rainbow_triangle(c) {
        return Err(Error::NotGallai(a, b, d));
    }
    let tree = strong_module_tree(c);
    let candidates: Vec<Vec<Color>> = match tree.kind {
        ModuleKind::Uniform(a) => {
            let mut sets = vec![vec![a]];
            sets.extend((1..=c.k()).filter(|&b| b != a).map(|b| vec![a, b]));
            sets
        }
        ModuleKind::Prime => {
            // A prime quotient of a Gallai coloring uses exactly two colors.
            debug_assert!(tree.colors.len() <= 2);
            vec![tree.colors.clone()]
        }
        ModuleKind::Leaf => unreachable!("n >= 2"),
    };
    let mut best: Option<Vec<Vec<usize>>> = None;
    for allowed in candidates {
        let mut masks = Vec::new();
        frontier(&tree, &allowed, &mut masks);
        let mut parts: Vec<Vec<usize>> = masks.into_iter().map(members).collect();
        sort_parts(&mut parts);
        let better = match &best {
            None => true,
            Some(b) => {
                let key = |ps: &Vec<Vec<usize>>| ps.iter().map(|p| (Reverse(p.len()), p.clone())).collect::<Vec<_>>();
                parts.len() > b.len() || (parts.len() == b.len() && key(&parts) < key(b))
            }
        };
        if better {
            best = Some(parts);
        }
    }
    let parts = best.expect("at least one candidate color set");
    let reduced = reduced_coloring(c, &parts)?;
    let inter_colors = if reduced.n() >= 2 { reduced.used_colors() } else { Vec::new() };
    Ok(GallaiPartition { parts, reduced, inter_colors })
}

/// Complete coloring on the parts; edge `(i, j)` carries the unique color
/// between parts `i` and `j`.
pub fn reduced_coloring(c: &ColoredComplete, parts: &[Vec<usize>]) -> Result<ColoredComplete> {
    let p = parts.len();
    if p == 0 || parts.iter().any(Vec::is_empty) {
        return Err(Error::Semantic("reduced coloring needs nonempty parts".into()));
    }
    for part in parts {
        if let Some(&v) = part.iter().find(|&&v| v >= c.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: c.n() });
        }
    }
    let mut colors = Vec::with_capacity(p * (p - 1) / 2);
    for j in 1..p {
        for i in 0..j {
            colors.push(between(c, &parts[i], &parts[j]).ok_or(Error::NotMonochromaticBetween(i, j))?);
        }
    }
    ColoredComplete::from_edge_order(p, c.k(), colors)
}

/// The single color between two vertex sets, if there is exactly one.
fn between(c: &ColoredComplete, a: &[usize], b: &[usize]) -> Option<Color> {
    let first = c.color(a[0], b[0]);
    a.iter()
        .all(|&u| b.iter().all(|&v| u != v && c.color(u, v) == first))
        .then_some(first)
}

/// Lists every violated partition invariant; empty means valid.
#[allow(clippy::needless_range_loop)]
pub fn validate_partition(c: &ColoredComplete, g: &GallaiPartition) -> Vec<Violation> {
    let n = c.n();
    let mut out = Vec::new();
    let mut owner = vec![None; n];
    for (i, part) in g.parts.iter().enumerate() {
        if part.is_empty() {
            out.push(Violation::EmptyPart(i));
        }
        for &v in part {
            if v >= n {
                out.push(Violation::VertexOutOfRange(v));
            } else if owner[v].is_some() {
                out.push(Violation::Overlap(v));
            } else {
                owner[v] = Some(i);
            }
        }
    }
    out.extend((0..n).filter(|&v| owner[v].is_none()).map(Violation::Uncovered));
    if g.parts.len() < 2 {
        out.push(Violation::TooFewParts(g.parts.len()));
    }
    if !out.is_empty() {
        return out;
    }

    let p = g.parts.len();
    let mut actual = Vec::new();
    let mut pair_color = vec![vec![None; p]; p];
    for i in 0..p {
        for j in i + 1..p {
            let mut seen: Vec<Color> = g.parts[i]
                .iter()
                .flat_map(|&u| g.parts[j].iter().map(move |&v| c.color(u, v)))
                .collect();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() > 1 {
                out.push(Violation::MixedColors { parts: (i, j) });
            } else {
                pair_color[i][j] = Some(seen[0]);
            }
            actual.extend(seen);
        }
    }
    actual.sort_unstable();
    actual.dedup();
    if actual.len() > 2 {
        out.push(Violation::TooManyInterColors(actual.clone()));
    }
    if g.reduced.n() != p {
        out.push(Violation::ReducedShape { expected: p, got: g.reduced.n() });
    } else {
        for i in 0..p {
            for j in i + 1..p {
                if pair_color[i][j].is_some_and(|col| g.reduced.color(i, j) != col) {
                    out.push(Violation::ReducedMismatch { parts: (i, j) });
                }
            }
        }
    }
    if g.inter_colors != actual {
        out.push(Violation::InterColorsMismatch { declared: g.inter_colors.clone(), actual });
    }
    out
}
