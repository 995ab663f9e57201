//! Poincaré series of the invariant rings.
//!
//! Computes, for every group and for one and two torus factors, the dimension
//! of the invariant subspace in each degree by brute-force Reynolds averaging
//! and exact row reduction.
//!
//! ```bash
//! cargo run --example series
//! ```

use weylring::{poincare_series, AlgebraContext, LieGroup};

fn main() {
    for kind in LieGroup::ALL {
        for m in [1usize, 2] {
            let ctx = AlgebraContext::new(kind, m).unwrap();
            let series = poincare_series(&ctx, kind.default_max_degree());
            println!("{kind} (m={m}): {series}");
            println!("  coefficients: {:?}", series.coefficients());
        }
        println!();
    }
}
