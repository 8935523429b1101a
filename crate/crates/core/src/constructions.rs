//! Witness colorings: extremal lower-bound constructions and random Gallai
//! colorings built by substitution.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{substitute, Color, ColoredComplete, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::formulas::{gr_value, GrInstance};
use crate::verify::{check_bad_coloring, Verdict};

/// A Gallai `k`-coloring on `gr_value(inst) - 1` vertices with no color `j`
/// containing its target.
///
/// Color 1 is a clique on `2 + min(i_1, n* - 2) + i_1` vertices, too small
/// for its target. Each later color `j` adds `i_j` new vertices whose edges
/// (among themselves and to everything before) all get color `j`, so color
/// `j` spans a `K_{i_j}` joined to an independent set: its longest path has
/// `2 i_j + 1` vertices and its longest cycle `2 i_j`.
///
/// The result is checked before it is returned.
pub fn lower_bound_witness(inst: &GrInstance) -> Result<ColoredComplete> {
    let coloring = lower_bound_coloring(inst)?;
    let report = check_bad_coloring(&coloring, &inst.targets())?;
    match report.verdict {
        Verdict::Verified => Ok(coloring),
        _ => Err(Error::ConstructionInvalid(format!(
            "{inst}: {} ({})",
            report.verdict,
            report.evidence.map(|e| e.to_string()).unwrap_or_default()
        ))),
    }
}

/// The construction behind [`lower_bound_witness`], without the check.
pub fn lower_bound_coloring(inst: &GrInstance) -> Result<ColoredComplete> {
    let iv = inst.i_vector();
    let base = 2 + iv[0].min(inst.n_star() - 2) + iv[0];
    let mut block_color: Vec<Color> = vec![1; base];
    for (j, &i) in iv.iter().enumerate().skip(1) {
        block_color.extend(std::iter::repeat_n((j + 1) as Color, i));
    }
    let order = block_color.len();
    debug_assert_eq!(order, gr_value(inst) - 1);
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: order, max: MAX_VERTICES });
    }
    ColoredComplete::from_fn(order, inst.k() as Color, |u, v| block_color[u.max(v)])
}

/// Random Gallai coloring of `K_n` over `k` colors: a random two-colored base
/// with every vertex replaced by a recursively generated part, `depth`
/// levels deep. Deterministic in `seed`.
pub fn random_gallai(n: usize, k: Color, depth: usize, seed: u64) -> Result<ColoredComplete> {
    if n == 0 || k == 0 {
        return Err(Error::EmptyColoring);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate(n, k, depth, &mut rng)
}

fn two_colored(n: usize, k: Color, rng: &mut impl Rng) -> Result<ColoredComplete> {
    let a = rng.gen_range(1..=k);
    let b = if k == 1 {
        a
    } else {
        let other = rng.gen_range(1..k);
        if other >= a {
            other + 1
        } else {
            other
        }
    };
    ColoredComplete::from_fn(n, k, |_, _| if rng.gen_bool(0.5) { a } else { b })
}

fn generate(n: usize, k: Color, depth: usize, rng: &mut impl Rng) -> Result<ColoredComplete> {
    if n == 1 || depth == 0 {
        return two_colored(n, k, rng);
    }
    let p = rng.gen_range(2..=n);
    let mut cuts: Vec<usize> = sample(rng, n - 1, p - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut sizes = Vec::with_capacity(p);
    let mut prev = 0;
    for c in cuts {
        sizes.push(c - prev);
        prev = c;
    }
    let base = two_colored(p, k, rng)?;
    let parts = sizes
        .into_iter()
        .map(|s| generate(s, k, depth - 1, rng))
        .collect::<Result<Vec<_>>>()?;
    Ok(substitute(&base, &parts)?.coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::find_rainbow_triangle;
    use crate::formulas::TopKind;
    use crate::search::{find_mono_cycle, find_mono_matching};

    fn inst(n: usize, i: &[usize], top: TopKind) -> GrInstance {
        GrInstance::new(n, i.to_vec(), top).unwrap()
    }

    #[test]
    fn single_color_witness_is_a_clique() {
        let w = lower_bound_witness(&inst(5, &[4], TopKind::EvenCycle)).unwrap();
        assert_eq!(w, ColoredComplete::monochromatic(9, 1, 1).unwrap());
    }

    #[test]
    fn two_color_c10_witness() {
        let w = lower_bound_witness(&inst(5, &[4, 4], TopKind::EvenCycle)).unwrap();
        assert_eq!((w.n(), w.k()), (13, 2));
        assert_eq!(find_mono_cycle(&w, 1, 10).unwrap(), None);
        assert_eq!(find_mono_cycle(&w, 2, 10).unwrap(), None);
    }

    #[test]
    fn three_color_c12_witness() {
        let w = lower_bound_witness(&inst(6, &[5, 5, 5], TopKind::EvenCycle)).unwrap();
        assert_eq!(w.n(), 21);
        assert_eq!(find_rainbow_triangle(&w), None);
    }

    #[test]
    fn odd_path_top_uses_a_larger_base() {
        let w = lower_bound_witness(&inst(4, &[3, 1], TopKind::OddPath)).unwrap();
        assert_eq!(w.n(), 9);
        assert_eq!(w.color_class(1)[0].count_ones(), 7);
    }

    #[test]
    fn matchings_absent_from_c10_witness() {
        let w = lower_bound_witness(&inst(5, &[4, 4, 4], TopKind::EvenCycle)).unwrap();
        assert_eq!(w.n(), 17);
        for color in 1..=3 {
            assert_eq!(find_mono_matching(&w, color, 5).unwrap(), None);
        }
    }

    #[test]
    fn random_gallai_examples() {
        let flat = random_gallai(9, 4, 0, 3).unwrap();
        assert!(flat.used_colors().len() <= 2);
        assert_eq!(random_gallai(1, 3, 5, 0).unwrap().n(), 1);
        let deep = random_gallai(24, 4, 3, 7).unwrap();
        assert_eq!(deep.n(), 24);
        assert_eq!(find_rainbow_triangle(&deep), None);
        assert_eq!(deep, random_gallai(24, 4, 3, 7).unwrap());
    }
}
