//! Matching numbers, half-integral fractional matchings and exhaustive checks of the
//! sharp bounds on `alpha_f - alpha` and `alpha_f / alpha` for small graphs.
//!
//! All fractional quantities are exact integers in half-units.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod fracmatch;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod verifier;

pub use error::{Error, Result};
pub use fracmatch::{
    alpha_f_halves, canonical_stats, canonicalize, canonicalize_traced, double_cover,
    extract_half_integral, fpm_partition, frac_deficiency_witness, CanonicalStats, FpmPartition,
    HalfIntegralMatching, Rewrite,
};
pub use graph::{components, ComponentProfile, Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use matching::{
    gallai_edmonds, matching_number, max_matching, tutte_berge_witness, DeficiencyWitness, Flavor,
    GallaiEdmonds, Matching,
};
pub use verifier::{
    case_certificate_gap, case_certificate_ratio, classify_extremal, evaluate, verify_corpus,
    CaseCertificate, CorpusMode, ExtremalClass, GapRatioRecord, VerificationReport,
};
