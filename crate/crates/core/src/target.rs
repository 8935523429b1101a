use std::fmt;
use std::str::FromStr;

use crate::coloring::{Color, ColoredComplete};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetKind {
    Path,
    EvenCycle,
    Matching,
}

/// A forbidden monochromatic subgraph, identified by kind and vertex count.
///
/// Matchings use `order = 2 * size`, so `M_5` has order 10.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TargetSpec {
    kind: TargetKind,
    order: usize,
}

impl TargetSpec {
    pub fn path(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidTarget(format!("path P{order} needs at least 2 vertices")));
        }
        Ok(TargetSpec { kind: TargetKind::Path, order })
    }

    pub fn even_cycle(order: usize) -> Result<Self> {
        if order < 4 || order % 2 == 1 {
            return Err(Error::InvalidTarget(format!("C{order} is not an even cycle of length >= 4")));
        }
        Ok(TargetSpec { kind: TargetKind::EvenCycle, order })
    }

    pub fn matching(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidTarget("matching M0 is empty".into()));
        }
        Ok(TargetSpec { kind: TargetKind::Matching, order: 2 * size })
    }

    pub fn new(kind: TargetKind, order: usize) -> Result<Self> {
        match kind {
            TargetKind::Path => Self::path(order),
            TargetKind::EvenCycle => Self::even_cycle(order),
            TargetKind::Matching if order.is_multiple_of(2) => Self::matching(order / 2),
            TargetKind::Matching => Err(Error::InvalidTarget(format!("matching of odd order {order}"))),
        }
    }

    pub fn kind(&self) -> TargetKind {
        self.kind
    }

    /// Number of vertices of the target graph.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        match self.kind {
            TargetKind::Path => self.order - 1,
            TargetKind::EvenCycle => self.order,
            TargetKind::Matching => self.order / 2,
        }
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TargetKind::Path => write!(f, "P{}", self.order),
            TargetKind::EvenCycle => write!(f, "C{}", self.order),
            TargetKind::Matching => write!(f, "M{}", self.order / 2),
        }
    }
}

impl FromStr for TargetSpec {
    type Err = Error;

    /// Parses `P5`, `C10` or `M5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTarget(format!("cannot parse target {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let value: usize = rest.parse().map_err(|_| bad())?;
        match head.to_ascii_uppercase() {
            'P' => Self::path(value),
            'C' => Self::even_cycle(value),
            'M' => Self::matching(value),
            _ => Err(bad()),
        }
    }
}

/// An explicit monochromatic copy of a target.
///
/// Paths list vertices in path order, cycles in cycle order (the last vertex
/// closes back to the first), matchings as consecutive pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub target: TargetSpec,
    pub color: Color,
    pub vertices: Vec<usize>,
}

impl Embedding {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let vs = &self.vertices;
        match self.target.kind() {
            TargetKind::Path => vs.windows(2).map(|w| (w[0], w[1])).collect(),
            TargetKind::EvenCycle => (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect(),
            TargetKind::Matching => vs.chunks(2).map(|p| (p[0], p[1])).collect(),
        }
    }

    /// Checks the embedding against a complete coloring.
    pub fn verify(&self, c: &ColoredComplete) -> bool {
        self.verify_with(c.n(), |u, v| Some(c.color(u, v)))
    }

    /// Checks the embedding against a possibly partial coloring; `color_of`
    /// returns `None` for uncolored edges.
    pub fn verify_with(&self, n: usize, color_of: impl Fn(usize, usize) -> Option<Color>) -> bool {
        let vs = &self.vertices;
        if vs.len() != self.target.order() || vs.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = 0u128;
        for &v in vs {
            if seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        self.edges().into_iter().all(|(u, v)| color_of(u, v) == Some(self.color))
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        write!(f, "{} in color {}: {}", self.target, self.color, list.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["P3", "P11", "C6", "C10", "M5", "P2", "C4"] {
            assert_eq!(s.parse::<TargetSpec>().unwrap().to_string(), s);
        }
        assert_eq!("M5".parse::<TargetSpec>().unwrap().order(), 10);
        for s in ["", "P", "C7", "C2", "M0", "P1", "X4", "P-3", "P+3"] {
            assert!(s.parse::<TargetSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn embedding_verification() {
        let c = ColoredComplete::from_fn(4, 2, |u, v| if u + 1 == v { 1 } else { 2 }).unwrap();
        let path = Embedding { target: TargetSpec::path(4).unwrap(), color: 1, vertices: vec![0, 1, 2, 3] };
        assert!(path.verify(&c));
        let cycle = Embedding { target: TargetSpec::even_cycle(4).unwrap(), color: 1, vertices: vec![0, 1, 2, 3] };
        assert!(!cycle.verify(&c));
        let repeated = Embedding { target: TargetSpec::path(3).unwrap(), color: 1, vertices: vec![0, 1, 0] };
        assert!(!repeated.verify(&c));
        let matching = Embedding { target: TargetSpec::matching(2).unwrap(), color: 2, vertices: vec![0, 2, 1, 3] };
        assert!(matching.verify(&c));
        assert_eq!(matching.edges(), vec![(0, 2), (1, 3)]);
    }
}
