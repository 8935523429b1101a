//! Monochromatic target search: paths, even cycles and matchings in one
//! color class, each returning an explicit [`Embedding`].
//!
//! Searches are exact. A node budget bounds the path and cycle searches;
//! running out is reported as [`Error::BudgetExceeded`], never as "absent".

mod matching;
mod walk;

pub use matching::maximum_matching;
pub use walk::{cycle_in, path_in};

use crate::coloring::{full_mask, Color, ColoredComplete};
use crate::error::{Error, Result};
use crate::target::{Embedding, TargetKind, TargetSpec};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Counts expanded search states against a limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}

fn check_color(c: &ColoredComplete, color: Color) -> Result<()> {
    if color == 0 || color > c.k() {
        Err(Error::ColorOutOfRange { color, k: c.k() })
    } else {
        Ok(())
    }
}

pub fn find_mono_path(c: &ColoredComplete, color: Color, order: usize) -> Result<Option<Embedding>> {
    find_mono_path_within(c, color, order, &mut Budget::default())
}

pub fn find_mono_path_within(
    c: &ColoredComplete,
    color: Color,
    order: usize,
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    check_color(c, color)?;
    let target = TargetSpec::path(order)?;
    let adj = c.color_class(color);
    Ok(path_in(&adj, full_mask(c.n()), order, budget)?.map(|vertices| Embedding { target, color, vertices }))
}

pub fn find_mono_cycle(c: &ColoredComplete, color: Color, len: usize) -> Result<Option<Embedding>> {
    find_mono_cycle_within(c, color, len, &mut Budget::default())
}

pub fn find_mono_cycle_within(
    c: &ColoredComplete,
    color: Color,
    len: usize,
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    check_color(c, color)?;
    if len < 4 || len % 2 == 1 {
        return Err(Error::OddLength(len));
    }
    let target = TargetSpec::even_cycle(len)?;
    let adj = c.color_class(color);
    Ok(cycle_in(&adj, full_mask(c.n()), len, budget)?.map(|vertices| Embedding { target, color, vertices }))
}

/// `size` disjoint edges of one color, taken from a maximum matching of the
/// color class.
pub fn find_mono_matching(c: &ColoredComplete, color: Color, size: usize) -> Result<Option<Embedding>> {
    check_color(c, color)?;
    let target = TargetSpec::matching(size)?;
    let adj = c.color_class(color);
    Ok(matching_embedding(&adj, full_mask(c.n()), target, color))
}

pub(crate) fn matching_embedding(adj: &[u64], allowed: u64, target: TargetSpec, color: Color) -> Option<Embedding> {
    let size = target.order() / 2;
    let pairs = maximum_matching(adj, allowed);
    (pairs.len() >= size).then(|| Embedding {
        target,
        color,
        vertices: pairs.into_iter().take(size).flat_map(|(u, v)| [u, v]).collect(),
    })
}

pub fn has_target(c: &ColoredComplete, color: Color, target: TargetSpec) -> Result<Option<Embedding>> {
    has_target_within(c, color, target, &mut Budget::default())
}

pub fn has_target_within(
    c: &ColoredComplete,
    color: Color,
    target: TargetSpec,
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    match target.kind() {
        TargetKind::Path => find_mono_path_within(c, color, target.order(), budget),
        TargetKind::EvenCycle => find_mono_cycle_within(c, color, target.order(), budget),
        TargetKind::Matching => find_mono_matching(c, color, target.order() / 2),
    }
}

/// Target search on a raw adjacency structure restricted to `allowed`.
pub fn target_in(
    adj: &[u64],
    allowed: u64,
    target: TargetSpec,
    color: Color,
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    let found = match target.kind() {
        TargetKind::Path => path_in(adj, allowed, target.order(), budget)?,
        TargetKind::EvenCycle => cycle_in(adj, allowed, target.order(), budget)?,
        TargetKind::Matching => return Ok(matching_embedding(adj, allowed, target, color)),
    };
    Ok(found.map(|vertices| Embedding { target, color, vertices }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::make_coloring;

    #[test]
    fn path_examples() {
        let k5 = ColoredComplete::monochromatic(5, 2, 1).unwrap();
        let e = find_mono_path(&k5, 1, 5).unwrap().unwrap();
        assert_eq!(e.vertices, vec![0, 1, 2, 3, 4]);
        assert!(e.verify(&k5));
        assert_eq!(find_mono_path(&k5, 2, 2).unwrap(), None);
        assert_eq!(find_mono_path(&k5, 1, 6).unwrap(), None);
        assert_eq!(
            find_mono_path(&k5, 3, 2),
            Err(Error::ColorOutOfRange { color: 3, k: 2 })
        );
    }

    #[test]
    fn cycle_examples() {
        let k10 = ColoredComplete::monochromatic(10, 1, 1).unwrap();
        let e = find_mono_cycle(&k10, 1, 10).unwrap().unwrap();
        assert!(e.verify(&k10));
        let k9 = ColoredComplete::monochromatic(9, 1, 1).unwrap();
        assert_eq!(find_mono_cycle(&k9, 1, 10).unwrap(), None);
        assert_eq!(find_mono_cycle(&k9, 1, 7), Err(Error::OddLength(7)));
        assert_eq!(find_mono_cycle(&k9, 1, 2), Err(Error::OddLength(2)));
    }

    #[test]
    fn matching_examples() {
        let k4 = ColoredComplete::monochromatic(4, 1, 1).unwrap();
        let e = find_mono_matching(&k4, 1, 2).unwrap().unwrap();
        assert_eq!(e.vertices, vec![0, 1, 2, 3]);
        assert!(e.verify(&k4));
        let star = ColoredComplete::from_fn(5, 2, |u, _| if u == 0 { 1 } else { 2 }).unwrap();
        assert_eq!(find_mono_matching(&star, 1, 2).unwrap(), None);
        assert!(find_mono_matching(&star, 1, 1).unwrap().is_some());
    }

    #[test]
    fn dispatch() {
        let c = make_coloring(3, 2, &[(0, 1, 1), (0, 2, 1), (1, 2, 2)]).unwrap();
        let p3 = TargetSpec::path(3).unwrap();
        let e = has_target(&c, 1, p3).unwrap().unwrap();
        assert_eq!(e.vertices, vec![1, 0, 2]);
        assert_eq!(has_target(&c, 2, p3).unwrap(), None);
        assert!(has_target(&c, 2, TargetSpec::matching(1).unwrap()).unwrap().is_some());
    }
}
