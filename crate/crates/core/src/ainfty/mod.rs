//! Exact Hochschild complexes of finite linear categories and the A-infinity
//! categories obtained by deforming them along a Hochschild cocycle.
//!
//! Conventions used throughout:
//! * Paths compose left to right: `x_1` lives in `hom(X_0, X_1)` and the
//!   product `x y` means "first `x`, then `y`".
//! * Cohomological grading. `X` sits in degree 0; the coefficient bimodule `M`
//!   sits in degree 0 before the shift, so `M[n-2]` contributes degree `2-n`.
//! * The A-infinity identities use the sign `(-1)^(r+st)` together with the
//!   Koszul sign of moving `m_s` past the first `r` inputs.
//! * Cochains are normalized: they vanish on any tuple containing an identity.

use thiserror::Error;

pub mod bundled;
pub mod category;
pub mod cochain;
pub mod field;
pub mod linalg;
pub mod structure;
pub mod text;

pub use category::{CentralBimodule, FiniteAlgebra, FiniteLinearCategory, LinearFunctor, Obj};
pub use cochain::{
    cocycle_basis, cup_with_identity, hh_dimension, hh_dimensions, random_normalized_cochain,
    restrict_along_functor, Cochain, NormalizedBasis,
};
pub use field::{Field, Fp, Rational, F32003};
pub use linalg::Matrix;
pub use structure::{
    default_k_max, deform, deform_unchecked, verify_stasheff, AInfinityStructure, DeformedCategory,
    IdentityCheck, StasheffFailure, StasheffReport, StrictProjection, Unitality,
};

/// Default cap on basis-tuple evaluations and cochain-space sizes.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AInfinityError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the degree-{degree} cochain is not a Hochschild cocycle")]
    NotACocycle { degree: usize },
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("budget exceeded: {needed} evaluations needed but the limit is {limit}")]
    BudgetExceeded { needed: u128, limit: u64 },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// All chains `(X_0, ..., X_len)` whose consecutive hom spaces are nonempty under `width`.
pub(crate) fn composable_chains(
    num_objects: usize,
    len: usize,
    width: impl Fn(Obj, Obj) -> usize,
) -> Vec<Vec<Obj>> {
    let mut chains: Vec<Vec<Obj>> = (0..num_objects).map(|a| vec![a]).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for chain in &chains {
            let last = *chain.last().expect("chains are nonempty");
            for b in 0..num_objects {
                if width(last, b) > 0 {
                    let mut c = chain.clone();
                    c.push(b);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    chains
}

/// Lexicographic iterator over `choices[0] x choices[1] x ...`.
pub(crate) struct Tuples<'a> {
    choices: &'a [Vec<usize>],
    cursor: Vec<usize>,
    done: bool,
}

impl<'a> Tuples<'a> {
    pub(crate) fn new(choices: &'a [Vec<usize>]) -> Self {
        Self {
            choices,
            cursor: vec![0; choices.len()],
            done: choices.iter().any(Vec::is_empty),
        }
    }
}

impl Iterator for Tuples<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self
            .cursor
            .iter()
            .zip(self.choices)
            .map(|(&c, ch)| ch[c])
            .collect();
        let mut pos = self.cursor.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.cursor[pos] += 1;
            if self.cursor[pos] < self.choices[pos].len() {
                break;
            }
            self.cursor[pos] = 0;
        }
        Some(item)
    }
}
