//! Exact computations with finite-dimensional basic algebras: quiver
//! presentations, modules given by action matrices, projective
//! resolutions, syzygies, Ext, periodicity, bimodules over the enveloping
//! algebra and a few orbit-geometric invariants.
//!
//! Modules are right modules and vectors are rows: `v · a = v X_a`.
//! Everything is exact, over `Q` or a prime field `F_p`.

pub mod algebra;
pub mod bimodule;
pub mod error;
pub mod fixtures;
pub mod homological;
pub mod io;
pub mod matrix;
pub mod module;
pub mod orbit;
pub mod quiver;
pub mod scalar;
pub mod search;

pub use algebra::{Algebra, RadicalData};
pub use bimodule::{
    bimodule_cosyzygy, bimodule_syzygy, is_inner, out_order, split_regular_summand, stable_morita_check,
    tensor_bimodules, tensor_over, twist_recognize, Automorphism, Bimodule, StableMoritaReport,
};
pub use error::{Error, Result};
pub use homological::{
    complexity_estimate, cosyzygy, detect_period, ext_dim, nth_cosyzygy, nth_syzygy, resolve, stable_hom_dim,
    syzygy, ComplexityEstimate, ComplexityVerdict, PeriodOutcome, PeriodReport, Resolution,
};
pub use matrix::{Matrix, Subspace};
pub use module::{hom_basis, hom_dim, is_isomorphic, is_isomorphic_seeded, strip_projectives, ModuleMap, ModuleRep};
pub use orbit::{degeneration_obstruction, orbit_stats, regular_degeneration_check, Certificate, OrbitStats};
pub use quiver::{Arrow, QuiverPresentation, RelationTerm};
pub use scalar::{Field, Scalar};
