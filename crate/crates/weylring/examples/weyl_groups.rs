//! The three Weyl groups as integer matrix groups.
//!
//! Enumerates each group, prints its matrices (rows are the images of x1,
//! x2), and demonstrates the dihedral relations of the order-12 group.
//!
//! ```bash
//! cargo run --example weyl_groups
//! ```

use weylring::{LieGroup, WeylGroup};

fn main() {
    for kind in LieGroup::ALL {
        let group = WeylGroup::build(kind).unwrap();
        println!("{kind}: order {}", group.order());
        for g in group.elements() {
            let m = g.matrix();
            println!(
                "  [{:>2} {:>2}; {:>2} {:>2}]  det {:>2}",
                m[0][0],
                m[0][1],
                m[1][0],
                m[1][1],
                g.determinant()
            );
        }
        println!();
    }

    let gens = WeylGroup::generators(LieGroup::G2);
    let (a, b) = (gens[0], gens[1]);
    let mut a6 = a;
    for _ in 0..5 {
        a6 = a6.compose(&a);
    }
    let ab = a.compose(&b);
    println!("g2 generator relations:");
    println!("  a^6    = identity: {}", a6.is_identity());
    println!("  b^2    = identity: {}", b.compose(&b).is_identity());
    println!("  (ab)^2 = identity: {}", ab.compose(&ab).is_identity());
}
