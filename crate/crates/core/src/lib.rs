//! Exact machinery for deciding which Yetter-Drinfeld pairs `(O, rho)` over a
//! symmetric group can possibly carry a finite-dimensional Nichols algebra.
//!
//! The crate enumerates every pair (conjugacy class of `S_m`, irreducible
//! representation of the centralizer), applies a fixed catalog of obstruction
//! rules, and checks the surviving pairs against the known survivor patterns.
//! Every obstruction that rests on an explicit construction (abelian subrack
//! families, transversal diagonalizations, octahedral and dihedral families)
//! is re-verified here by direct permutation and root-of-unity arithmetic
//! rather than trusted.
//!
//! No floating point is used anywhere: permutations are exact, scalars live
//! in cyclotomic fields with rational coefficients.

#![allow(clippy::needless_range_loop)] // index loops mirror the matrix algebra

pub mod braiding;
pub mod centralizer;
pub mod classifier;
pub mod cyclotomic;
pub mod perm;
pub mod selftest;
pub mod witnesses;

pub use braiding::{
    BraidingMatrix, CartanData, GDDiagram, MonomialAction, ProbeReport, SubrackFamily,
};
pub use centralizer::{CentralizerIrrep, CentralizerPresentation, IrrepFactor, WreathFactorization};
pub use classifier::{classify, explain, rule_catalog, Outcome, RuleId, Trace, Verdict};
pub use cyclotomic::{CycMatrix, Cyclotomic, RootOfUnity};
pub use perm::{CanonicalLayout, CycleType, Perm};
pub use witnesses::WitnessReport;
