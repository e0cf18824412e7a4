//! Exact classification and counting of tight contact structures on the
//! bounded Seifert manifolds `M(D²; r₁, r₂)` with minimal convex boundary.
//!
//! Everything here is exact: slopes and Seifert invariants are reduced
//! big-integer fractions, counts are big integers.
//!
//! - [`numbers`]: fractions, slopes in `Q ∪ {∞}` and the floor decomposition.
//! - [`contfrac`]: the negative and positive continued-fraction conventions
//!   and the construction of `r₃` from a boundary slope.
//! - [`gluing`]: `SL(2, Z)` gluing matrices and their action on slopes.
//! - [`farey`]: Farey paths and the basic-slice/block combinatorics.
//! - [`census`]: case classification and counts.
//! - [`obstruction`]: bounded search for transverse-contact-structure data.
//! - [`cli`]: the command-line front end.

pub mod census;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod farey;
pub mod gluing;
pub mod numbers;
pub mod obstruction;

pub use census::{
    census, classify_case, count_tcs, half_half_labels, reduction_target, vertical_twisting_info,
    BoundedSeifert, CaseTag, CensusReport, ClosedSeifert, CountResult, HalfHalfClass,
    HalfHalfLabels, TorsionSign, TwistingInfo, Warning,
};
pub use contfrac::{
    eval_neg_cf, neg_cf, pos_cf_complement, r3_from_slope, slope_coefficients, NegCF, PosCF,
};
pub use error::{Error, Result};
pub use farey::{
    block_profile_case, farey_shortest_path, in_ccw_arc, is_farey_edge, outer_layer_count,
    shuffle_count, solid_torus_count, BlockCase, BlockProfile, FareyPath,
};
pub use gluing::{
    build_phi, build_phi_neg, phi_from_cf, reparam_slope, twist_slope_attach, twist_slope_neg,
    verify_boundary_image, BoundaryImageReport, GluingMatrix,
};
pub use numbers::{floor_decompose, FloorDecomposition, Fraction, Slope};
pub use obstruction::{
    case3_no_transverse, search_witness, witness_for_k, ObstructionQuery, ObstructionWitness,
    SearchOutcome,
};
