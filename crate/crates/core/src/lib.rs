//! Exact computations around twisted Hodge diamonds of smooth projective
//! hypersurfaces and the Hochschild cohomology they control, together with a
//! small exact engine for Hochschild complexes and A-infinity deformations of
//! finite linear categories.
//!
//! Every number is an arbitrary-precision integer or an exact field element.

pub mod ainfty;
pub mod combinatorics;
pub mod hochschild;
pub mod hodge;

pub use ainfty::{
    deform, verify_stasheff, AInfinityError, AInfinityStructure, CentralBimodule, Cochain,
    FiniteLinearCategory, Rational, StasheffReport, DEFAULT_BUDGET,
};
pub use combinatorics::{alt_binom_sum, binom, BinomTerm, Sign};
pub use hochschild::{
    candidate_search, guaranteed_kernel_check, hh_dim_on_x, hh_dim_on_x_closed_form,
    hh_dim_pushforward, kernel_dim, les_ledger, profile, pullback_cohomology_dim,
    pushforward_dim_via_hh_on_x, CandidateRow, CandidateStatus, ExactSequenceLedger,
    HochschildError, HochschildProfile, LedgerTerm, Target, TermLabel,
};
pub use hodge::{
    diamond, hodge_number, projective_space_hodge, structure_sheaf_h0, HodgeError, Hypersurface,
    TwistedHodgeDiamond,
};
pub use num_bigint::BigInt;
