//! The cut after which the natural product splits into a classical one.
//!
//! `cargo run --example segue`

use natprod::infinite::{infinite_nat_prod, infinite_ord_prod, segue_check, segue_threshold};
use natprod::parse::parse_sequence;

fn main() -> natprod::Result<()> {
    for text in [
        "[w^(w^2), w^(w^3) ; w]",
        "[w+1, 2 ; w]",
        "[; w^w, w]",
        "[w, 5 ; 1]",
    ] {
        let s = parse_sequence(text)?;
        let m = segue_threshold(&s);
        let tail = s.tail_from(m);
        println!("{text}: threshold {m}");
        println!("  P_{m} = {}", s.partial_nat_prod(m));
        println!(
            "  tail (x) = {}, tail prod = {}",
            infinite_nat_prod(&tail),
            infinite_ord_prod(&tail)
        );
        println!("  total = {}", infinite_nat_prod(&s));
        if m > 0 {
            println!("  identities at {}: {:?}", m - 1, segue_check(&s, m - 1));
        }
    }
    Ok(())
}
