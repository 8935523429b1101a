//! Edge-colored complete graphs without rainbow triangles: checking,
//! decomposition, monochromatic subgraph search, closed-form Ramsey values,
//! extremal constructions, exhaustive verification and certificates.

pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod formulas;
pub mod search;
pub mod target;
pub mod verify;

pub use certificate::Certificate;
pub use coloring::{find_rainbow_triangle, is_gallai, make_coloring, substitute, BlowUp, Color, ColoredComplete};
pub use constructions::{lower_bound_witness, random_gallai};
pub use decomposition::{gallai_partition, reduced_coloring, validate_partition, GallaiPartition};
pub use error::{Error, Result};
pub use formulas::{gr_k_family, gr_value, r2_even_cycle, r_path_cycle, Family, GrInstance, Provenance, TopKind};
pub use search::{find_mono_cycle, find_mono_matching, find_mono_path, has_target};
pub use target::{Embedding, TargetKind, TargetSpec};
pub use verify::{
    check_bad_coloring, exhaustive_ramsey2, search_bad_gallai, verify_gr_point, SearchOptions, Verdict,
    VerdictReport,
};
