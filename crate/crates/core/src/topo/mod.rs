//! Simplicial complexes, posets and the homotopy certificates built on them.

mod carrier;
mod complex;
mod homology;
mod map;
mod nerve;
mod poset;
mod snf;

pub use carrier::{
    carrier_check, carrier_check_complexes, check_order_preserving, contractibility,
    index_subsets, order_homotopy_image, quillen_fibers_check, Contractibility, CoverFamily,
    HomotopyKind, OrderHomotopy, SubsetBound,
};
pub use complex::{SimplicialComplex, MAX_FACET_SIZE};
pub use homology::{is_homology_point, reduced_homology, DimHomology, HomologyProfile};
pub use map::{z2_free_check, SimplicialMap};
pub use nerve::{cross_polytope_nerve_iso, facet_nerve, nerve, NerveIso};
pub use poset::{face_poset, order_complex, Poset};
pub use snf::{dense_smith, integer_rank, smith_invariants};
