//! Classical and natural arithmetic side by side.
//!
//! `cargo run --example eval_expressions`

use natprod::natural::{nat_prod, nat_sum};
use natprod::parse::parse;

fn main() -> natprod::Result<()> {
    let a = parse("w^2 + w*3 + 1")?;
    let b = parse("w + 2")?;
    println!("a = {a}");
    println!("b = {b}");
    println!("a + b   = {}", a.ord_add(&b));
    println!("b + a   = {}", b.ord_add(&a));
    println!("a (+) b = {}", nat_sum(&a, &b));
    println!("a * b   = {}", a.ord_mul(&b));
    println!("b * a   = {}", b.ord_mul(&a));
    println!("a (x) b = {}", nat_prod(&a, &b));

    // The parser accepts the same operators, with `#` for the natural sum and
    // `@` for the natural product.
    for text in [
        "1 + w",
        "w # 1",
        "(w+1)*(w+1)",
        "(w+1)@(w+1)",
        "3^4",
        "w^(w+1)*2",
        "w^w^2",
    ] {
        println!("{text:>14} = {}", parse(text)?);
    }
    Ok(())
}
