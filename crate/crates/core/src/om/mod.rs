//! Realizable oriented matroids: covectors from rational vectors and the
//! embedding of the covector poset into the sphere representation.

mod config;
mod covectors;
mod embedding;

pub use config::VectorConfig;
pub use covectors::{
    cocircuits_from_vectors, covector_poset, covector_span, underlying_matroid, zero_set,
    CovectorSet, MAX_COVECTORS,
};
pub use embedding::{
    default_pivots, deletion_fibers_check, pivots_check, verify_embedding, CoverRule,
    EmbeddingData, EmbeddingCovers,
};
