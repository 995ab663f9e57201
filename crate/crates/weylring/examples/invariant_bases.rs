//! Echelonized invariant bases, degree by degree.
//!
//! Prints the canonical basis of the invariant subspace of `A(G, 2)` in each
//! degree up to the group's default range, in the engine's deterministic
//! text rendering.
//!
//! ```bash
//! cargo run --example invariant_bases -- su3
//! ```

use weylring::{invariant_basis, AlgebraContext, LieGroup};

fn main() {
    let kind: LieGroup = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("expected su3, sp2 or g2"))
        .unwrap_or(LieGroup::Su3);
    let ctx = AlgebraContext::new(kind, 2).unwrap();
    println!("invariant bases for {kind} (m=2)\n");
    for degree in 0..=kind.default_max_degree() {
        let basis = invariant_basis(&ctx, degree);
        println!("degree {degree}: dimension {}", basis.dimension());
        for vector in &basis.vectors {
            println!("  {vector}");
        }
    }
}
