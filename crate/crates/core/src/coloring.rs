//! Edge-colored complete graphs and the primitive Gallai predicates.
//!
//! Vertices are `0..n`, colors are `1..=k`. Colors live in a flat
//! triangular array in edge order `(0,1), (0,2), (1,2), (0,3), ...`, the same
//! order the exhaustive search assigns edges in.

use std::ops::Range;

use crate::error::{Error, Result};

pub type Color = u8;

/// Vertex sets are `u64` bitmasks throughout the crate.
pub const MAX_VERTICES: usize = 64;

/// Position of the unordered pair `{u, v}` in edge order.
#[inline]
pub fn edge_index(u: usize, v: usize) -> usize {
    debug_assert_ne!(u, v);
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`edge_index`], returning `(u, v)` with `u < v`.
pub fn edge_at(index: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    (index - v * (v - 1) / 2, v)
}

#[inline]
pub fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A complete graph on `n` vertices with every edge colored from `1..=k`.
///
/// `k` is the declared palette; the coloring may use fewer colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredComplete {
    n: usize,
    k: Color,
    colors: Vec<Color>,
}

impl ColoredComplete {
    /// Builds a coloring from an edge list covering every pair exactly once.
    pub fn new<I>(n: usize, k: Color, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        check_shape(n, k)?;
        let mut colors = vec![0; edge_count(n)];
        for (u, v, color) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Semantic(format!("self-loop at vertex {u}")));
            }
            if color == 0 || color > k {
                return Err(Error::ColorOutOfRange { color, k });
            }
            let slot = &mut colors[edge_index(u, v)];
            if *slot != 0 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            *slot = color;
        }
        if let Some(missing) = colors.iter().position(|&c| c == 0) {
            let (u, v) = edge_at(missing);
            return Err(Error::MissingEdge(u, v));
        }
        Ok(ColoredComplete { n, k, colors })
    }

    pub fn from_fn(n: usize, k: Color, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        check_shape(n, k)?;
        let colors = (0..edge_count(n))
            .map(|e| {
                let (u, v) = edge_at(e);
                f(u, v)
            })
            .collect();
        Self::from_edge_order(n, k, colors)
    }

    /// Builds from colors listed in edge order.
    pub fn from_edge_order(n: usize, k: Color, colors: Vec<Color>) -> Result<Self> {
        check_shape(n, k)?;
        if colors.len() != edge_count(n) {
            return Err(Error::Semantic(format!(
                "expected {} edge colors, got {}",
                edge_count(n),
                colors.len()
            )));
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color, k });
        }
        Ok(ColoredComplete { n, k, colors })
    }

    pub fn monochromatic(n: usize, k: Color, color: Color) -> Result<Self> {
        Self::from_fn(n, k, |_, _| color)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> Color {
        self.k
    }

    /// Color of the edge `{u, v}`. Panics if `u == v` or either is out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(u != v && u < self.n && v < self.n, "no edge ({u}, {v})");
        self.colors[edge_index(u, v)]
    }

    /// Colors in edge order.
    pub fn edge_colors(&self) -> &[Color] {
        &self.colors
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.color(u, v))))
    }

    /// Sorted list of colors that actually occur.
    pub fn used_colors(&self) -> Vec<Color> {
        let mut seen = vec![false; self.k as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.k).filter(|&c| seen[c as usize]).collect()
    }

    /// Adjacency bitmasks of the spanning subgraph formed by one color.
    pub fn color_class(&self, color: Color) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for (e, &c) in self.colors.iter().enumerate() {
            if c == color {
                let (u, v) = edge_at(e);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    /// Adjacency bitmasks for every color; index 0 is unused.
    pub fn color_classes(&self) -> Vec<Vec<u64>> {
        let mut classes = vec![vec![0u64; self.n]; self.k as usize + 1];
        for (e, &c) in self.colors.iter().enumerate() {
            let (u, v) = edge_at(e);
            classes[c as usize][u] |= 1 << v;
            classes[c as usize][v] |= 1 << u;
        }
        classes
    }

    /// Copy with one edge recolored.
    pub fn recolored(&self, u: usize, v: usize, color: Color) -> Result<Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if color == 0 || color > self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        let mut out = self.clone();
        out.colors[edge_index(u, v)] = color;
        Ok(out)
    }

    /// Same edges under a larger declared palette.
    pub fn with_palette(&self, k: Color) -> Result<Self> {
        Self::from_edge_order(self.n, k, self.colors.clone())
    }
}

fn check_shape(n: usize, k: Color) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::EmptyColoring);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

pub fn make_coloring(n: usize, k: Color, edges: &[(usize, usize, Color)]) -> Result<ColoredComplete> {
    ColoredComplete::new(n, k, edges.iter().copied())
}

/// Lexicographically least triangle `(a, b, c)`, `a < b < c`, whose three
/// edges carry three different colors.
pub fn find_rainbow_triangle(c: &ColoredComplete) -> Option<(usize, usize, usize)> {
    let n = c.n();
    let classes = c.color_classes();
    let colors = 1..=c.k() as usize;
    for a in 0..n {
        for b in a + 1..n {
            let x = c.color(a, b) as usize;
            let mut same = 0u64;
            for col in colors.clone() {
                same |= classes[col][a] & classes[col][b];
            }
            let above_b = if b + 1 >= 64 { 0 } else { !0u64 << (b + 1) };
            let candidates = !classes[x][a] & !classes[x][b] & !same & above_b & full_mask(n);
            if candidates != 0 {
                return Some((a, b, candidates.trailing_zeros() as usize));
            }
        }
    }
    None
}

pub fn is_gallai(c: &ColoredComplete) -> bool {
    find_rainbow_triangle(c).is_none()
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Output of [`substitute`]: the blown-up coloring and the vertex range
/// occupied by each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUp {
    pub coloring: ColoredComplete,
    pub blocks: Vec<Range<usize>>,
}

/// Replaces vertex `i` of `base` by `parts[i]`; edges between blocks `i` and
/// `j` take `base.color(i, j)`.
pub fn substitute(base: &ColoredComplete, parts: &[ColoredComplete]) -> Result<BlowUp> {
    if parts.is_empty() {
        return Err(Error::EmptyPartsList);
    }
    if parts.len() != base.n() {
        return Err(Error::PartsMismatch { expected: base.n(), got: parts.len() });
    }
    let k = parts.iter().map(ColoredComplete::k).fold(base.k(), Color::max);
    let mut blocks = Vec::with_capacity(parts.len());
    let mut owner = Vec::new();
    let mut start = 0;
    for (i, part) in parts.iter().enumerate() {
        blocks.push(start..start + part.n());
        owner.extend((0..part.n()).map(|local| (i, local)));
        start += part.n();
    }
    let coloring = ColoredComplete::from_fn(start, k, |u, v| {
        let (bu, lu) = owner[u];
        let (bv, lv) = owner[v];
        if bu == bv {
            parts[bu].color(lu, lv)
        } else {
            base.color(bu, bv)
        }
    })?;
    Ok(BlowUp { coloring, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_order_matches_spec_sequence() {
        let order: Vec<_> = (0..6).map(edge_at).collect();
        assert_eq!(order, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        for e in 0..500 {
            let (u, v) = edge_at(e);
            assert_eq!(edge_index(u, v), e);
            assert_eq!(edge_index(v, u), e);
        }
    }

    #[test]
    fn make_coloring_examples() {
        let rainbow = make_coloring(3, 3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap();
        assert_eq!(rainbow.color(2, 1), 3);
        assert!(make_coloring(2, 1, &[(0, 1, 1)]).is_ok());
        assert_eq!(
            make_coloring(3, 2, &[(0, 1, 1), (0, 2, 1)]),
            Err(Error::MissingEdge(1, 2))
        );
    }

    #[test]
    fn make_coloring_rejects_bad_edges() {
        assert_eq!(
            make_coloring(2, 1, &[(0, 1, 1), (1, 0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            make_coloring(2, 1, &[(0, 1, 2)]),
            Err(Error::ColorOutOfRange { color: 2, k: 1 })
        );
        assert_eq!(
            make_coloring(2, 1, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(make_coloring(0, 1, &[]), Err(Error::EmptyColoring));
        assert!(matches!(
            ColoredComplete::monochromatic(65, 1, 1),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn rainbow_triangle_examples() {
        let rainbow = make_coloring(3, 3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap();
        assert_eq!(find_rainbow_triangle(&rainbow), Some((0, 1, 2)));
        let two = ColoredComplete::from_fn(7, 2, |u, v| if (u + v) % 3 == 0 { 1 } else { 2 }).unwrap();
        assert_eq!(find_rainbow_triangle(&two), None);
    }

    #[test]
    fn substitute_identity_size() {
        let base = ColoredComplete::monochromatic(2, 1, 1).unwrap();
        let k1 = ColoredComplete::monochromatic(1, 1, 1).unwrap();
        let out = substitute(&base, &[k1.clone(), k1]).unwrap();
        assert_eq!(out.coloring, base);
        assert_eq!(out.blocks, vec![0..1, 1..2]);
    }

    #[test]
    fn substitute_into_two_colored_triangle() {
        let base = make_coloring(3, 2, &[(0, 1, 1), (0, 2, 2), (1, 2, 1)]).unwrap();
        let green = ColoredComplete::monochromatic(2, 3, 3).unwrap();
        let single = ColoredComplete::monochromatic(1, 1, 1).unwrap();
        let out = substitute(&base, &[green, single.clone(), single]).unwrap();
        let c = &out.coloring;
        assert_eq!((c.n(), c.k()), (4, 3));
        assert_eq!(c.used_colors(), vec![1, 2, 3]);
        assert_eq!(find_rainbow_triangle(c), None);
        assert_eq!(out.blocks, vec![0..2, 2..3, 3..4]);
    }

    #[test]
    fn substitute_errors() {
        let base = ColoredComplete::monochromatic(2, 1, 1).unwrap();
        assert_eq!(substitute(&base, &[]), Err(Error::EmptyPartsList));
        let k1 = ColoredComplete::monochromatic(1, 1, 1).unwrap();
        assert_eq!(
            substitute(&base, &[k1]),
            Err(Error::PartsMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn recolor_and_classes() {
        let c = ColoredComplete::monochromatic(4, 2, 1).unwrap();
        let d = c.recolored(3, 1, 2).unwrap();
        assert_eq!(d.color(1, 3), 2);
        let class2 = d.color_class(2);
        assert_eq!(class2, vec![0, 1 << 3, 0, 1 << 1]);
        assert_eq!(d.used_colors(), vec![1, 2]);
        assert_eq!(d.edges().count(), 6);
    }
}
