//! Arithmetic in the tensor algebra: normal forms, eliminations and signs.
//!
//! Elements are written in the full alphabet (including the eliminated x3,
//! y3 where a preset has them) through the raw-product builder, and come out
//! in canonical normal form.
//!
//! ```bash
//! cargo run --example algebra_ops
//! ```

use weylring::{AlgebraContext, AlgebraElement, LieGroup};

fn main() {
    let g2 = AlgebraContext::new(LieGroup::G2, 2).unwrap();

    println!("eliminations and rewriting in the g2 preset:");
    let x3 = g2.raw().x(3, 1).build().unwrap();
    println!("  x3          = {x3}");
    println!("  x2^3        = {}", g2.raw().x(2, 3).build().unwrap());
    println!("  x1^6        = {}", g2.raw().x(1, 6).build().unwrap());
    println!("  y3^1        = {}", g2.raw().y(3, 1).build().unwrap());

    println!("\nodd generators anticommute and square to zero:");
    let y1 = AlgebraElement::var_y(&g2, 1, 1);
    let y2 = AlgebraElement::var_y(&g2, 2, 1);
    println!("  y1^1 * y1^1 = {}", &y1 * &y1);
    println!("  y1^1 * y2^1 = {}", &y1 * &y2);
    println!("  y2^1 * y1^1 = {}", &y2 * &y1);

    println!("\na full product with Koszul signs and poly reduction (sp2):");
    let sp2 = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
    let left =
        &sp2.raw().x(1, 1).y(1, 1).build().unwrap() + &sp2.raw().x(2, 1).y(2, 1).build().unwrap();
    let right = &sp2.raw().x(1, 2).y(1, 1).y(1, 2).build().unwrap()
        + &sp2.raw().x(2, 2).y(2, 1).y(2, 2).build().unwrap();
    println!("  ({left}) * ({right})");
    println!("  = {}", &left * &right);

    println!("\nthe rendering format: coefficient, poly part, exterior blocks:");
    let sample = sp2
        .raw()
        .coeff_rat(-1, 2)
        .x(1, 3)
        .x(2, 1)
        .y(1, 1)
        .y(2, 1)
        .y(2, 2)
        .build()
        .unwrap();
    println!("  {sample}");
}
