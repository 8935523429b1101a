//! Closed-form Gallai-Ramsey and Ramsey values for even cycles and paths.
//!
//! Targets are indexed by `i` in `0..n`: index `i <= n - 2` is the path on
//! `2i + 3` vertices, index `n - 1` is the top target, either `C_{2n}` or
//! `P_{2n+1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::target::TargetSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TopKind {
    EvenCycle,
    OddPath,
}

impl fmt::Display for TopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopKind::EvenCycle => "cycle",
            TopKind::OddPath => "path",
        })
    }
}

impl FromStr for TopKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" | "even-cycle" | "C" => Ok(TopKind::EvenCycle),
            "path" | "odd-path" | "P" => Ok(TopKind::OddPath),
            _ => Err(Error::RangeViolation(format!("unknown top kind {s:?} (expected cycle or path)"))),
        }
    }
}

/// Whether a value is established or only predicted by the open conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Proven,
    Conjectural,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Proven => "proven",
            Provenance::Conjectural => "conjectural",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proven" => Ok(Provenance::Proven),
            "conjectural" => Ok(Provenance::Conjectural),
            _ => Err(Error::Semantic(format!("unknown provenance {s:?}"))),
        }
    }
}

/// One Gallai-Ramsey instance `GR(G_{i_1}, ..., G_{i_k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrInstance {
    n: usize,
    i_vector: Vec<usize>,
    top: TopKind,
}

impl GrInstance {
    /// `i_vector` must be non-increasing with entries in `0..n`; `n >= 3`.
    pub fn new(n: usize, i_vector: Vec<usize>, top: TopKind) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidIVector(format!("n = {n}, need n >= 3")));
        }
        if i_vector.is_empty() {
            return Err(Error::InvalidIVector("empty i-vector".into()));
        }
        if let Some(&bad) = i_vector.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidIVector(format!("entry {bad} outside 0..={}", n - 1)));
        }
        if i_vector.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIVector(format!("{i_vector:?} is not non-increasing")));
        }
        if i_vector.len() > u8::MAX as usize {
            return Err(Error::InvalidIVector("more than 255 colors".into()));
        }
        Ok(GrInstance { n, i_vector, top })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i_vector(&self) -> &[usize] {
        &self.i_vector
    }

    pub fn top(&self) -> TopKind {
        self.top
    }

    pub fn k(&self) -> usize {
        self.i_vector.len()
    }

    /// `n + 1` when the largest target is `P_{2n+1}`, otherwise `n`.
    pub fn n_star(&self) -> usize {
        if self.top == TopKind::OddPath && self.i_vector[0] == self.n - 1 {
            self.n + 1
        } else {
            self.n
        }
    }

    /// Target graph for index `i`.
    pub fn target_for(&self, i: usize) -> TargetSpec {
        target_for(self.n, i, self.top)
    }

    /// Targets per color, color 1 first.
    pub fn targets(&self) -> Vec<TargetSpec> {
        self.i_vector.iter().map(|&i| self.target_for(i)).collect()
    }

    /// Proven for `n <= 6`; for larger `n` only when every target is a path
    /// on at most 13 vertices.
    pub fn provenance(&self) -> Provenance {
        if self.n <= 6 || self.i_vector[0] <= 5 {
            Provenance::Proven
        } else {
            Provenance::Conjectural
        }
    }
}

impl fmt::Display for GrInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.i_vector.iter().map(usize::to_string).collect();
        write!(f, "n={} i={} top={}", self.n, list.join(","), self.top)
    }
}

pub fn target_for(n: usize, i: usize, top: TopKind) -> TargetSpec {
    debug_assert!(i < n);
    let built = if i + 1 < n {
        TargetSpec::path(2 * i + 3)
    } else {
        match top {
            TopKind::EvenCycle => TargetSpec::even_cycle(2 * n),
            TopKind::OddPath => TargetSpec::path(2 * n + 1),
        }
    };
    built.expect("orders from the target family are valid")
}

/// `3 + min(i_1, n* - 2) + sum(i_j)`.
pub fn gr_value(inst: &GrInstance) -> usize {
    let i1 = inst.i_vector[0];
    3 + i1.min(inst.n_star() - 2) + inst.i_vector.iter().sum::<usize>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    EvenCycle,
    EvenPath,
    Matching,
    OddPath,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" | "even-cycle" => Ok(Family::EvenCycle),
            "even-path" => Ok(Family::EvenPath),
            "matching" => Ok(Family::Matching),
            "path" | "odd-path" => Ok(Family::OddPath),
            _ => Err(Error::RangeViolation(format!(
                "unknown family {s:?} (expected cycle, even-path, matching or odd-path)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::EvenCycle => "cycle",
            Family::EvenPath => "even-path",
            Family::Matching => "matching",
            Family::OddPath => "odd-path",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyValue {
    pub value: usize,
    pub provenance: Provenance,
}

/// `GR_k` of `C_{2n}`, `P_{2n}`, `M_n` (`(n-1)k + n + 1`) or `P_{2n+1}`
/// (`(n-1)k + n + 2`).
pub fn gr_k_family(n: usize, k: usize, family: Family) -> Result<FamilyValue> {
    if k == 0 {
        return Err(Error::RangeViolation("k must be at least 1".into()));
    }
    let min_n = if family == Family::OddPath { 1 } else { 3 };
    if n < min_n {
        return Err(Error::RangeViolation(format!("{family} family needs n >= {min_n}, got {n}")));
    }
    let (value, proven) = match family {
        Family::OddPath => ((n - 1) * k + n + 2, n <= 6),
        _ => ((n - 1) * k + n + 1, n <= 6),
    };
    let provenance = if proven { Provenance::Proven } else { Provenance::Conjectural };
    Ok(FamilyValue { value, provenance })
}

/// `R_2(C_{2n}) = 3n - 1` for `n >= 3`.
pub fn r2_even_cycle(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::RangeViolation(format!("R_2(C_2n) formula needs n >= 3, got {n}")));
    }
    Ok(3 * n - 1)
}

/// `R(P_m, C_{2n}) = 2n + floor(m / 2) - 1` for `2n >= m >= 3`.
pub fn r_path_cycle(m: usize, n: usize) -> Result<usize> {
    if m < 3 || 2 * n < m {
        return Err(Error::RangeViolation(format!("R(P_m, C_2n) formula needs 2n >= m >= 3, got m={m}, n={n}")));
    }
    Ok(2 * n + m / 2 - 1)
}
