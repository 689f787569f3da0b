//! Change of flag and weak maps.

mod cross;
mod search;
mod weak;

pub use cross::{
    describe_cross_polytope, describe_selection, retraction_map, select_cross_coatoms,
    verify_retraction, CrossSelection, RetractDescriptor,
};
pub use search::{poset_map_search, Obstruction, SearchResult, DEFAULT_MAX_ASSIGNMENTS};
pub use weak::{
    is_weak_map_covectors, is_weak_map_matroid, reindex_lattice, RankWitness, WeakMapReport,
    MAX_WEAK_MAP_ELEMENTS,
};
