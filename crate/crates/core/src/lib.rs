//! Exact combinatorics for the enhanced cyclic nilpotent cone.
//!
//! The orbits of `GL(nδ)` on nilpotent representations of the framed cyclic
//! quiver with dimension vector `ε_∞ + nδ` are labelled by pairs `(λ; ν)` of a
//! partition and an `ℓ`-multipartition whose residues add up to `nδ`. This
//! crate enumerates those labels, recovers the dimension vectors of the
//! indecomposable summands, computes orbit fundamental groups as cokernels,
//! counts the orbits that carry a `(G, χ)`-monodromic local system, and decides
//! semi-simplicity of the category of admissible modules by three independent
//! criteria:
//!
//! * root avoidance: `χ·α ∉ Z` for every `α` in the finite root set `R_n`;
//! * the cyclotomic Hecke product (Ariki), evaluated exactly on `Q/Z`;
//! * counting: the number of simple objects equals the number of
//!   `ℓ`-multipartitions of `n`.
//!
//! All arithmetic is exact. Characters are rational; unit-circle parameters are
//! stored additively as elements of `Q/Z`.

pub mod abelian;
pub mod orbits;
pub mod params;
pub mod partitions;
pub mod report;
pub mod rootlattice;

mod error;

pub use abelian::{cokernel, smith_normal_form, FGAbelianGroup, IntMatrix, SmithForm};
pub use error::{Error, Result};
pub use orbits::{
    admits_monodromic_local_system, decompose, enumerate_orbits, enumerate_q_chi,
    fundamental_group, OrbitCatalog, OrbitLabel, StringSummand, SummandDecomposition,
};
pub use params::{
    ariki_product_nonzero, cherednik_semisimple, chi_to_kappa, hecke_params, kappa_to_chi,
    CircleElement, HeckeParams, KappaParams, RationalCharacter,
};
pub use partitions::{
    content, enumerate_multipartitions, enumerate_partitions, residue, shifted_residue, DiagramBox,
    MultiPartition, Partition,
};
pub use report::{
    hyperplane_listing, orbit_report, orbit_report_filtered, semisimplicity_report, HeckeSummary,
    Hyperplane, OrbitRecord, OrbitReport, OrbitTotals, SemisimplicityReport, ViolatedRoot,
};
pub use rootlattice::{delta, generate_rn, is_integral_pairing, pair, DimVector, RootSet};
