//! Infinite natural products and sums of eventually periodic sequences.
//!
//! `cargo run --example infinite_product`

use natprod::infinite::{
    infinite_nat_prod, infinite_nat_sum, infinite_ord_prod, infinite_ord_sum, sup_oracle_check,
};
use natprod::parse::parse_sequence;

fn main() -> natprod::Result<()> {
    let inputs = [
        "[; 2]",
        "[; w]",
        "[w^w*2+1 ; 3]",
        "[3, 0 ; w]",
        "[w, w+1 ; 1]",
        "[; w, 1]",
    ];
    println!(
        "{:<16} {:<22} {:<10} {:<12} {:<12} (+)",
        "sequence", "class", "prod", "(x)", "sum"
    );
    for text in inputs {
        let s = parse_sequence(text)?;
        let v = infinite_nat_prod(&s);
        println!(
            "{:<16} {:<22} {:<10} {:<12} {:<12} {}",
            text,
            s.classify().to_string(),
            infinite_ord_prod(&s).to_string(),
            v.to_string(),
            infinite_ord_sum(&s).to_string(),
            infinite_nat_sum(&s),
        );
        if !s.has_zero() {
            // The closed form is the least upper bound of the partial products.
            assert!(sup_oracle_check(&s, &v, 20)?);
        }
    }

    let s = parse_sequence("[w+1 ; w*2, 3]")?;
    println!("\npartial natural products of {s}:");
    for n in 0..6 {
        println!("  P_{n} = {}", s.partial_nat_prod(n));
    }
    println!("  limit = {}", infinite_nat_prod(&s));
    Ok(())
}
