//! Prolongations of finite quasigroups.
//!
//! A quasigroup of order `n` is given by its multiplication table, a
//! [`LatinSquare`] over the symbols `1..=n`. A prolongation adjoins one new
//! element `q = n + 1` and produces a Latin square of order `n + 1`. The
//! constructions in [`prolong`] need a complete or quasicomplete mapping,
//! found by the searches in [`mappings`]. [`isotopy`] decides isotopy of the
//! results exactly for small orders and [`harness`] scans all reduced squares
//! of order at most 6 for short maximum partial transversals.

pub mod error;
pub mod harness;
pub mod isotopy;
pub mod mappings;
pub mod perm;
pub mod prolong;
pub mod square;

/// Largest supported order; search bitmasks are 128 bits wide.
pub const MAX_ORDER: usize = 128;

pub use error::{Error, Result, Violation};
pub use harness::{brualdi_scan, enumerate_reduced_squares, prolong_any, ReducedSquares, ScanReport};
pub use isotopy::{are_isotopic, verify_witness, IsotopyWitness};
pub use mappings::{
    classify, conjugate, find_complete_mappings, find_quasicomplete_mappings, max_partial_transversal,
    transversal_to_mapping, ConjugateMap, MappingClassification, MappingKind, PartialTransversal, TransversalCell,
};
pub use perm::Permutation;
pub use prolong::{
    prolong_belyavskaya, prolong_classical, prolong_classical_idempotent, prolong_deriyenko_dudek, Method,
    Prolongation, ProlongationSpec,
};
pub use square::{parse_square, validate, Cell, GroupKind, LatinSquare};
