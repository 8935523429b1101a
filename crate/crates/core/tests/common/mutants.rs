//! Tampered certificates whose claims the oracles show to be false.

use gallai_core::certificate::Certificate;
use gallai_core::coloring::Color;
use gallai_core::target::{TargetKind, TargetSpec};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{contains, rainbow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    RainbowInjection,
    TargetClosing,
    ClaimTampering,
}

pub struct Mutant {
    pub kind: Kind,
    pub cert: Certificate,
}

/// True iff some claim of `cert` is false, by the oracles.
pub fn claims_false(cert: &Certificate) -> bool {
    let claims = cert.claims.as_ref().expect("mutants carry claims");
    (claims.gallai && rainbow(&cert.coloring).is_some())
        || claims.absent.iter().any(|&(c, t)| contains(&cert.coloring, c, t))
}

/// One mutant of `cert` of the given kind, or `None` if the attempt left
/// every claim true.
pub fn mutate(cert: &Certificate, kind: Kind, rng: &mut impl Rng) -> Option<Mutant> {
    let c = &cert.coloring;
    let (n, k) = (c.n(), c.k());
    let mut out = cert.clone();
    match kind {
        Kind::RainbowInjection => {
            let v = rng.gen_range(1..n);
            let u = rng.gen_range(0..v);
            let old = c.color(u, v);
            let choices: Vec<Color> = (1..=k).filter(|&x| x != old).collect();
            out.coloring = c.recolored(u, v, *choices.choose(rng)?).ok()?;
            rainbow(&out.coloring)?;
        }
        Kind::TargetClosing => {
            // Recolor the edges of a random copy of a claimed-absent target.
            let &(color, t) = cert.claims.as_ref()?.absent.choose(rng)?;
            if t.order() > n {
                return None;
            }
            let mut vertices: Vec<usize> = (0..n).collect();
            vertices.shuffle(rng);
            vertices.truncate(t.order());
            let edges: Vec<(usize, usize)> = match t.kind() {
                TargetKind::Path => vertices.windows(2).map(|w| (w[0], w[1])).collect(),
                TargetKind::EvenCycle => {
                    (0..t.order()).map(|i| (vertices[i], vertices[(i + 1) % t.order()])).collect()
                }
                TargetKind::Matching => vertices.chunks(2).map(|p| (p[0], p[1])).collect(),
            };
            for (u, v) in edges {
                out.coloring = out.coloring.recolored(u, v, color).ok()?;
            }
        }
        Kind::ClaimTampering => {
            // Claim a smaller target absent from a color that has one.
            let claims = out.claims.as_mut()?;
            let slot = rng.gen_range(0..claims.absent.len());
            let (color, _) = claims.absent[slot];
            let order = rng.gen_range(2..=4);
            let smaller = match rng.gen_range(0..3) {
                0 => TargetSpec::path(order).ok()?,
                1 => TargetSpec::even_cycle(4).ok()?,
                _ => TargetSpec::matching(order / 2).ok()?,
            };
            claims.absent[slot] = (color, smaller);
        }
    }
    claims_false(&out).then_some(Mutant { kind, cert: out })
}

/// `count` mutants cycling through the kinds the sources allow (a rainbow
/// needs three colors).
pub fn mutants(sources: &[Certificate], count: usize, rng: &mut impl Rng) -> Vec<Mutant> {
    let mut kinds = vec![Kind::TargetClosing, Kind::ClaimTampering];
    if sources.iter().any(|s| s.coloring.k() >= 3) {
        kinds.push(Kind::RainbowInjection);
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100_000, "mutation sources too weak");
        let kind = kinds[out.len() % kinds.len()];
        let source = sources.choose(rng).expect("sources");
        if kind == Kind::RainbowInjection && source.coloring.k() < 3 {
            continue;
        }
        if let Some(m) = mutate(source, kind, rng) {
            out.push(m);
        }
    }
    out
}
