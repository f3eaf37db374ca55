//! Fundamental groups of real flag manifolds and the homotopy class of
//! root-subgroup orbits in them.
//!
//! Nodes are the 1-based labels of the Dynkin diagram throughout.

mod classify;
mod presentation;
mod snf;
mod verdict;

pub use classify::{
    chamber_roots, classify_all_roots, classify_generating, published_claim, ClassificationReport,
    OrbitReport, PaperAgreement, RootCheck,
};
pub use presentation::{
    epsilon, pi1_abelianized, pi1_minimal, pi1_presentation, FlagSpec, Pi1Minimal, Pi1Presentation,
    Relation,
};
pub use snf::{invariant_factors, smith_diagonal};
pub use verdict::{orbit_verdict, HomotopyVerdict, Parity, Verdict};
