//! Exact invariant-theory engine for the rank-2 simple Lie groups SU(3),
//! Sp(2) and G₂.
//!
//! For each group the engine models the graded-commutative algebra
//!
//! ```text
//! A(G, m)  =  R(W)  ⊗  Λ¹ ⊗ ⋯ ⊗ Λᵐ
//! ```
//!
//! where `R(W)` is the coinvariant algebra of the Weyl group `W` (polynomial
//! ring on degree-2 generators modulo the positive-degree invariants) and each
//! `Λʲ` is an exterior algebra on degree-1 generators carrying the same
//! `W`-representation as the degree-2 part. The Weyl group acts diagonally on
//! every tensor factor. All arithmetic is exact over the rationals.
//!
//! The main capabilities, one module each:
//!
//! - [`algebra`] — arithmetic in `A(G, m)` with built-in normal forms: the
//!   eliminated variables and the coinvariant relations are rewritten away so
//!   every element has a unique canonical expansion.
//! - [`weyl`] — the three Weyl groups as integer 2×2 matrix groups (orders 6,
//!   8 and 12) and their action on algebra elements.
//! - [`invariants`] — invariant subspaces degree by degree via Reynolds
//!   averaging and exact row reduction, and the resulting Poincaré series.
//! - [`presentation`] — the six-generator family of the invariant ring at
//!   m = 2, its quadratic relations, minimal generation, and the degreewise
//!   comparison against the abstractly presented algebra.
//! - [`cli`] — the `weylring` command line (`series`, `verify`,
//!   `invariants` subcommands) with text and JSON output.
//!
//! The crate's `examples/` directory has one runnable program per capability;
//! start with `cargo run --example series`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

pub mod algebra;
pub mod cli;
pub mod invariants;
pub mod presentation;
pub mod report;
pub mod sampling;
pub mod weyl;

pub use algebra::{
    rat, whole, AlgebraContext, AlgebraElement, Coeff, Degree, ExtWord, RawProduct, RewriteSystem,
    TensorMonomial, MAX_FACTORS,
};
pub use invariants::{
    coefficient_vector, element_from_vector, invariant_basis, poincare_series, reynolds,
    row_reduce, InvariantBasis, PoincareSeries, RowEchelon,
};
pub use presentation::{verify_theorem, verify_theorem_with, GeneratorSet, PresentedAlgebra};
pub use report::{CheckResult, InvariantReport, PresentationReport};
pub use weyl::{GroupElement, WeylGroup};

/// The three rank-2 simply connected simple Lie groups handled by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieGroup {
    Su3,
    Sp2,
    G2,
}

impl LieGroup {
    pub const ALL: [LieGroup; 3] = [LieGroup::Su3, LieGroup::Sp2, LieGroup::G2];

    /// Order of the Weyl group: 6, 8 or 12.
    pub fn weyl_order(self) -> usize {
        match self {
            LieGroup::Su3 => 6,
            LieGroup::Sp2 => 8,
            LieGroup::G2 => 12,
        }
    }

    /// Default top degree for series and reports, two past the last nonzero
    /// coefficient of the m = 2 invariant series so the vanishing is visible.
    pub fn default_max_degree(self) -> usize {
        match self {
            LieGroup::Su3 => 10,
            LieGroup::Sp2 => 12,
            LieGroup::G2 => 16,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LieGroup::Su3 => "su3",
            LieGroup::Sp2 => "sp2",
            LieGroup::G2 => "g2",
        }
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LieGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su3" => Ok(LieGroup::Su3),
            "sp2" => Ok(LieGroup::Sp2),
            "g2" => Ok(LieGroup::G2),
            _ => Err(Error::UnknownGroup(s.to_string())),
        }
    }
}

/// Errors reported by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown group `{0}` (expected su3, sp2 or g2)")]
    UnknownGroup(String),
    #[error("the number of exterior factors must be at least 1")]
    ZeroFactors,
    #[error("at most {MAX_FACTORS} exterior factors are supported (got {0})")]
    TooManyFactors(usize),
    #[error("operands live in different contexts: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("group element belongs to {0}, the algebra element to {1}")]
    GroupMismatch(LieGroup, LieGroup),
    #[error("generator `{0}` is not available in this context")]
    UnavailableGenerator(String),
    #[error("verification requires m=2 (got m={0})")]
    RequiresTwoFactors(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
