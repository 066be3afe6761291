//! Exact signature computations for Lefschetz fibrations over the disk.
//!
//! Inputs are monodromy factorizations given homologically: an ordered list
//! of vanishing-cycle classes in a fixed symplectic basis `(a_1, b_1, ..., a_G, b_G)`.
//! Everything is computed over the rationals, so every reported signature is exact.
//!
//! - [`ratlinalg`]: exact dense linear algebra, solves, kernels, signatures of symmetric forms
//! - [`symplectic`]: the standard symplectic space, Dehn-twist transvections, Lagrangians
//! - [`maslov`]: Maslov triple index via Wall's form, fiber-sum defect, Meyer cocycle
//! - [`engine`]: the per-vanishing-cycle local signature algorithm
//! - [`cover`]: signatures of cyclic branched covers (monodromy `phi^n`)
//! - [`positive`]: fibrations with positive signature
//! - [`fixtures`]: the worked examples used throughout the tests

pub mod cover;
pub mod engine;
mod error;
pub mod fixtures;
pub mod maslov;
pub mod positive;
pub mod ratlinalg;
pub mod symplectic;

pub use cover::{correction_sigma, cover_breakdown, cover_signature, CorrectionTerm, CoverReport};
pub use engine::{
    homologically_trivial_split_check, local_sigma, local_sigma_via_maslov, shortcut_dual_preserved,
    signature, SignatureTrace, StepRecord,
};
pub use error::{Error, LagrangianDefect, Result};
pub use maslov::{fiber_sum_defect, maslov_index, meyer_cocycle, wall_space, WallSpace};
pub use positive::{generate, in_monoid_a, monoid_a_certificate, PositiveFamilySpec};
pub use ratlinalg::{
    inertia, signature_symmetric, solve_linear, Inertia, Rational, RationalMatrix, SolveResult,
    SolveStatus,
};
pub use symplectic::{
    effective_dimension, graph_lagrangians, is_symplectic, transvection, Chirality, Lagrangian,
    MonodromyWord, SurfaceSignature, SymplecticSpace, VanishingCycle,
};
