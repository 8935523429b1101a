mod common;

use gallai_core::coloring::Color;
use gallai_core::constructions::random_gallai;
use gallai_core::decomposition::gallai_partition;
use gallai_core::formulas::{gr_value, r_path_cycle, GrInstance, TopKind};
use gallai_core::search::{find_mono_cycle, find_mono_matching, find_mono_path};
use gallai_core::target::TargetSpec;
use gallai_core::verify::{count_surviving_colorings, exhaustive_ramsey2, verify_gr_point, Evidence, SearchOptions, Verdict};
use gallai_core::find_rainbow_triangle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn t(s: &str) -> TargetSpec {
    s.parse().unwrap()
}

#[test]
fn rainbow_triangle_is_the_lex_least() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..3000 {
        let c = common::random_coloring(3 + i % 9, 2 + (i % 3) as Color, &mut rng);
        assert_eq!(find_rainbow_triangle(&c), common::rainbow(&c), "{:?}", c.edge_colors());
    }
}

#[test]
fn searches_match_subset_dp_on_random_k10() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..400 {
        let c = common::random_coloring(10, 2, &mut rng);
        for color in 1..=2 {
            let adj = common::adjacency(&c, color);
            let w = common::walks(&adj);
            let nu = common::matching_number(&adj);
            for m in 2..=10 {
                let found = find_mono_path(&c, color, m).unwrap();
                assert_eq!(found.is_some(), w.paths[m]);
                assert!(found.is_none_or(|e| e.verify(&c)));
            }
            for len in (4..=10).step_by(2) {
                let found = find_mono_cycle(&c, color, len).unwrap();
                assert_eq!(found.is_some(), w.cycles[len]);
                assert!(found.is_none_or(|e| e.verify(&c)));
            }
            for size in 1..=5 {
                let found = find_mono_matching(&c, color, size).unwrap();
                assert_eq!(found.is_some(), nu >= size);
                assert!(found.is_none_or(|e| e.verify(&c)));
            }
        }
    }
}

#[test]
fn partition_has_the_most_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for seed in 0..600u64 {
        let n = 2 + (seed % 6) as usize;
        let c = if seed % 2 == 0 {
            random_gallai(n, 2 + (seed % 3) as Color, 1 + (seed % 3) as usize, seed).unwrap()
        } else {
            let c = common::random_coloring(n, 3, &mut rng);
            if common::rainbow(&c).is_some() {
                continue;
            }
            c
        };
        let g = gallai_partition(&c).unwrap();
        assert!(common::is_gallai_partition(&c, &g.parts), "{:?}", g.parts);
        assert_eq!(Some(g.len()), common::max_gallai_parts(&c), "{:?}", c.edge_colors());
        checked += 1;
    }
    assert!(checked > 300);
}

#[test]
fn two_colorings_up_to_symmetry() {
    // Graphs on 4 and 5 vertices up to isomorphism and complement.
    for (n, orbits) in [(4, 6), (5, 18)] {
        let counts = common::symmetry_counts(n, &[None, None], false);
        assert_eq!(counts.orbits, orbits);
    }
}

#[test]
fn symmetry_pruned_counts_match_brute_force() {
    let cases: Vec<(usize, Vec<Option<TargetSpec>>, bool)> = vec![
        (3, vec![None, None], false),
        (4, vec![None, None], false),
        (5, vec![None, None], false),
        (5, vec![Some(t("P3")), Some(t("C4"))], false),
        (5, vec![Some(t("P4")), Some(t("P4"))], false),
        (5, vec![Some(t("M2")), None], false),
        (4, vec![None, None, None], true),
        (5, vec![None, None, None], true),
        (5, vec![Some(t("P3")), Some(t("P3")), Some(t("C4"))], true),
        (5, vec![Some(t("P5")), Some(t("P3")), None], true),
    ];
    for (n, targets, gallai) in cases {
        let brute = common::symmetry_counts(n, &targets, gallai);
        let pruned = count_surviving_colorings(n, targets.len() as Color, &targets, gallai, true).unwrap();
        let unpruned = count_surviving_colorings(n, targets.len() as Color, &targets, gallai, false).unwrap();
        let bad = common::all_colorings(n, targets.len() as Color)
            .filter(|c| common::is_bad(c, &targets, gallai))
            .count() as u64;
        assert_eq!(pruned, brute.leaders, "n={n} {targets:?}");
        assert_eq!(unpruned, bad, "n={n} {targets:?}");
        assert!(brute.every_orbit_led && pruned >= brute.orbits, "n={n} {targets:?}");
    }
}

#[test]
fn ramsey_witnesses_avoid_both_targets() {
    for (m, n) in [(3, 2), (4, 2), (3, 3), (4, 3), (5, 3)] {
        let value = r_path_cycle(m, n).unwrap();
        let (p, c) = (TargetSpec::path(m).unwrap(), TargetSpec::even_cycle(2 * n).unwrap());
        let below = exhaustive_ramsey2(p, c, value - 1, SearchOptions::default()).unwrap();
        let Some(Evidence::Coloring(w)) = &below.evidence else { panic!("no witness for R(P{m}, C{})", 2 * n) };
        assert!(!common::contains(w, 1, p) && !common::contains(w, 2, c));
        let at = exhaustive_ramsey2(p, c, value, SearchOptions::default()).unwrap();
        assert_eq!(at.verdict, Verdict::Verified);
        // No coloring of K_value avoids both, by brute force.
        if value <= 6 {
            assert!(common::all_colorings(value, 2).all(|k| common::contains(&k, 1, p) || common::contains(&k, 2, c)));
        }
    }
}

#[test]
fn small_gr_points_close_on_both_sides() {
    let mut points = 0;
    for n in 3..=8 {
        for k in 1..=3 {
            let mut iv = vec![0; k];
            loop {
                for top in [TopKind::EvenCycle, TopKind::OddPath] {
                    let inst = GrInstance::new(n, iv.clone(), top).unwrap();
                    if gr_value(&inst) <= 6 {
                        let r = verify_gr_point(&inst, SearchOptions::default()).unwrap();
                        assert_eq!(r.verdict, Verdict::Verified, "{inst}");
                        assert!(r.parts.iter().all(|p| p.stats.complete), "{inst}");
                        points += 1;
                    }
                }
                // Next non-increasing vector with entries below n.
                let Some(pos) = (0..k).rev().find(|&j| iv[j] + 1 < n && (j == 0 || iv[j] < iv[j - 1])) else {
                    break;
                };
                iv[pos] += 1;
                iv[pos + 1..].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    assert!(points >= 20, "{points}");
}

#[test]
fn gr_upper_side_agrees_with_brute_force() {
    // GR(P5, P3) = 5: brute force over Gallai 2-colorings of K_4 and K_5.
    let targets = [Some(t("P5")), Some(t("P3"))];
    assert!(common::all_colorings(4, 2).any(|c| common::is_bad(&c, &targets, true)));
    assert!(!common::all_colorings(5, 2).any(|c| common::is_bad(&c, &targets, true)));
}
