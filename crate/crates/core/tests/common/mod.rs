//! Brute-force oracles. Each one is deliberately written without the
//! library's search code so the two can be compared.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{HashMap, HashSet};

use gallai_core::coloring::{Color, ColoredComplete};
use gallai_core::target::{TargetKind, TargetSpec};
use rand::Rng;

pub fn adjacency(c: &ColoredComplete, color: Color) -> Vec<u32> {
    assert!(c.n() <= 24, "oracles are for small graphs");
    (0..c.n())
        .map(|u| (0..c.n()).filter(|&v| v != u && c.color(u, v) == color).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// `paths[m]`: some path on exactly `m` vertices exists.
/// `cycles[l]`: some cycle of length `l` exists.
pub struct Walks {
    pub paths: Vec<bool>,
    pub cycles: Vec<bool>,
}

/// Subset dynamic programming over (vertex set, endpoint).
pub fn walks(adj: &[u32]) -> Walks {
    let n = adj.len();
    let mut paths = vec![false; n + 1];
    let mut cycles = vec![false; n + 1];
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] |= 1 << v;
    }
    for mask in 1..(1usize << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        paths[mask.count_ones() as usize] = true;
        for v in 0..n {
            if e >> v & 1 == 1 {
                let mut next = adj[v] & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    // Cycles through their least vertex `s`, other vertices above `s`.
    for s in 0..n {
        ends.iter_mut().for_each(|x| *x = 0);
        ends[1 << s] = 1 << s;
        for mask in (1usize << s)..(1usize << n) {
            let e = ends[mask];
            if e == 0 || mask & ((1 << s) - 1) != 0 || mask >> s & 1 == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            if len >= 3 && e & adj[s] != 0 {
                cycles[len] = true;
            }
            for v in 0..n {
                if e >> v & 1 == 1 {
                    let mut next = adj[v] & !(mask as u32) & !((1u32 << s) - 1);
                    while next != 0 {
                        let w = next.trailing_zeros() as usize;
                        next &= next - 1;
                        ends[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    Walks { paths, cycles }
}

/// Matching number by exhaustive recursion on the least unmatched vertex.
pub fn matching_number(adj: &[u32]) -> usize {
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&m) = memo.get(&mask) {
            return m;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(mask, best);
        best
    }
    let full = if adj.len() == 32 { u32::MAX } else { (1u32 << adj.len()) - 1 };
    go(full, adj, &mut HashMap::new())
}

pub fn contains(c: &ColoredComplete, color: Color, t: TargetSpec) -> bool {
    let adj = adjacency(c, color);
    if t.order() > c.n() {
        return false;
    }
    match t.kind() {
        TargetKind::Path => walks(&adj).paths[t.order()],
        TargetKind::EvenCycle => walks(&adj).cycles[t.order()],
        TargetKind::Matching => matching_number(&adj) >= t.order() / 2,
    }
}

/// First rainbow triangle `(a, b, c)` with `a < b < c`, in lex order.
pub fn rainbow(c: &ColoredComplete) -> Option<(usize, usize, usize)> {
    let n = c.n();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let (x, y, z) = (c.color(a, b), c.color(a, d), c.color(b, d));
                if x != y && x != z && y != z {
                    return Some((a, b, d));
                }
            }
        }
    }
    None
}

/// True iff the parts form a Gallai partition of `c`.
pub fn is_gallai_partition(c: &ColoredComplete, parts: &[Vec<usize>]) -> bool {
    if parts.len() < 2 || parts.iter().any(Vec::is_empty) {
        return false;
    }
    let mut seen = vec![false; c.n()];
    for &v in parts.iter().flatten() {
        if v >= c.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if seen.contains(&false) {
        return false;
    }
    let mut between = HashSet::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let colors: HashSet<Color> =
                parts[i].iter().flat_map(|&u| parts[j].iter().map(move |&v| c.color(u, v))).collect();
            if colors.len() != 1 {
                return false;
            }
            between.extend(colors);
        }
    }
    between.len() <= 2
}

/// Largest number of parts over all Gallai partitions (set-partition scan).
pub fn max_gallai_parts(c: &ColoredComplete) -> Option<usize> {
    let n = c.n();
    assert!(n <= 8);
    let mut labels = vec![0usize; n];
    let mut best = None;
    loop {
        let p = labels.iter().max().map_or(0, |m| m + 1);
        if p >= 2 && best.is_none_or(|b| p > b) {
            let mut parts = vec![Vec::new(); p];
            for (v, &l) in labels.iter().enumerate() {
                parts[l].push(v);
            }
            if is_gallai_partition(c, &parts) {
                best = Some(p);
            }
        }
        // Next restricted growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                return best;
            }
            i -= 1;
            let cap = labels[..i].iter().max().copied().unwrap_or(0) + 1;
            if labels[i] < cap {
                labels[i] += 1;
                labels[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

pub fn random_coloring(n: usize, k: Color, rng: &mut impl Rng) -> ColoredComplete {
    ColoredComplete::from_fn(n, k, |_, _| rng.gen_range(1..=k)).unwrap()
}

/// Every coloring of `K_n` with colors `1..=k`, in edge order.
pub fn all_colorings(n: usize, k: Color) -> impl Iterator<Item = ColoredComplete> {
    let e = n * n.saturating_sub(1) / 2;
    let total = (k as u64).pow(e as u32);
    (0..total).map(move |mut code| {
        let mut colors = vec![0; e];
        for slot in colors.iter_mut() {
            *slot = (code % k as u64) as Color + 1;
            code /= k as u64;
        }
        ColoredComplete::from_edge_order(n, k, colors).unwrap()
    })
}

pub fn is_bad(c: &ColoredComplete, targets: &[Option<TargetSpec>], gallai: bool) -> bool {
    if gallai && rainbow(c).is_some() {
        return false;
    }
    targets.iter().enumerate().all(|(j, t)| t.is_none_or(|t| !contains(c, (j + 1) as Color, t)))
}

fn permuted(c: &ColoredComplete, perm: &[usize], colors: &[Color]) -> Vec<Color> {
    let n = c.n();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            out.push(colors[c.color(perm[u], perm[v]) as usize]);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Color relabellings that only swap colors with equal targets
/// (`map[c]` is the new name of `c`; `map[0]` unused).
fn color_maps(targets: &[Option<TargetSpec>]) -> Vec<Vec<Color>> {
    let k = targets.len();
    permutations(k)
        .into_iter()
        .filter(|p| (0..k).all(|c| targets[c] == targets[p[c]]))
        .map(|p| std::iter::once(0).chain(p.iter().map(|&x| x as Color + 1)).collect())
        .collect()
}

/// Counts for the symmetry cross-check: bad colorings that satisfy the
/// lex-leader rules, and orbits of bad colorings.
pub struct SymmetryCounts {
    pub leaders: u64,
    pub orbits: u64,
    /// Every orbit contains at least one leader.
    pub every_orbit_led: bool,
}

pub fn symmetry_counts(n: usize, targets: &[Option<TargetSpec>], gallai: bool) -> SymmetryCounts {
    let k = targets.len() as Color;
    let perms = permutations(n);
    let maps = color_maps(targets);
    let identity: Vec<Color> = (0..=k).collect();
    let transpositions: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|a| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(a, a + 1);
            p
        })
        .collect();
    let mut leaders = 0;
    let mut orbits = HashSet::new();
    let mut led = HashSet::new();
    for c in all_colorings(n, k) {
        if !is_bad(&c, targets, gallai) {
            continue;
        }
        let canonical = perms
            .iter()
            .flat_map(|p| maps.iter().map(move |m| (p, m)))
            .map(|(p, m)| permuted(&c, p, m))
            .min()
            .unwrap_or_default();
        orbits.insert(canonical.clone());
        let word = c.edge_colors().to_vec();
        let vertex_ok = transpositions.iter().all(|t| word <= permuted(&c, t, &identity));
        let color_ok = (1..k as usize).all(|c2| {
            // A color may appear only after the previous color with the same target.
            let Some(prev) = (0..c2).rev().find(|&d| targets[d] == targets[c2]) else {
                return true;
            };
            let first = |col: usize| word.iter().position(|&x| x as usize == col + 1);
            match (first(prev), first(c2)) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a < b,
            }
        });
        if vertex_ok && color_ok {
            leaders += 1;
            led.insert(canonical);
        }
    }
    SymmetryCounts { leaders, orbits: orbits.len() as u64, every_orbit_led: led.len() == orbits.len() }
}

pub mod mutants;
