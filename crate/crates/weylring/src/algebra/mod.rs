//! Exact graded-commutative arithmetic in the tensor algebra
//! (coinvariant ring) ⊗ (exterior algebra)^⊗m.
//!
//! Elements are finite sums of [`TensorMonomial`]s with rational
//! coefficients, always kept in normal form: the eliminated third variables
//! are substituted away at construction time and the coinvariant relations
//! are applied to exhaustion, so equal ring elements have identical term
//! maps.

mod context;
mod element;
mod monomial;
mod rewrite;

pub use context::{AlgebraContext, MAX_FACTORS};
pub use element::{rat, whole, AlgebraElement, Coeff, RawProduct};
pub use monomial::{Degree, ExtWord, TensorMonomial};
pub use rewrite::{PowerRule, RewriteSystem};
