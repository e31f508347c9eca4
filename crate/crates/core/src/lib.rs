//! Finite regular covers of triangulated closed orientable 3-manifolds:
//! Cayley graphs and their Cheeger constants, cocycle certificates of
//! positive first Betti number, and the dual transversely oriented normal
//! surfaces with full Euler-characteristic accounting.

pub mod cayley;
pub mod census;
pub mod cocycle;
pub mod cover;
pub mod graph;
pub mod homology;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod skeleton;
pub mod snf;
pub mod splitting;
pub mod surface;
pub mod triangulation;
pub mod union_find;

pub use homology::{homology, HomologyProfile};
pub use skeleton::{build_skeleton, Skeleton};
pub use report::ValidationReport;
pub use triangulation::Triangulation;
