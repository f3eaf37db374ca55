//! Concrete matrix certificates: the symplectic compression semigroup and
//! regular Cartan elements of the classical embeddings.

mod embedding;
mod expm;
mod symplectic;

pub use embedding::{embedding_regularity, ClassicalFamily, EmbeddingReport};
pub use expm::expm;
pub use symplectic::{
    block_residuals, compression_check, flow, q_form, q_monotonicity, short_root_block,
    symp_identities, symp_identities_for, CompressionReport, Counterexample, IdentityReport,
    MonotonicityReport, ShortRootReport, SympSetup, FD_REL_TOLERANCE, ISOMETRY_TOLERANCE,
};
