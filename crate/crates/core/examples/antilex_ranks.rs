//! Anti-lexicographic ranks of finitely supported vectors.
//!
//! `cargo run --example antilex_ranks`

use std::sync::Arc;

use natprod::carruth::{antilex_rank, antilex_unrank, FinSupportVector};
use natprod::infinite::infinite_ord_prod;
use natprod::parse::{parse, parse_sequence, parse_vector_entries};

fn main() -> natprod::Result<()> {
    let bounds = Arc::new(parse_sequence("[2, w+1 ; w^2, 3]")?);
    println!("bounds {bounds}, order type {}", infinite_ord_prod(&bounds));
    for text in [
        "{}",
        "{0:1}",
        "{1:w}",
        "{0:1, 1:w}",
        "{2:w*4+1}",
        "{5:2, 2:w}",
    ] {
        let v = FinSupportVector::new(bounds.clone(), parse_vector_entries(text)?)?;
        let r = antilex_rank(&v);
        let back = antilex_unrank(bounds.clone(), &r)?;
        assert_eq!(back, v);
        println!("{v:>16} -> {r}");
    }
    let r = parse("w^3*2 + w + 1")?;
    println!("unrank({r}) = {}", antilex_unrank(bounds, &r)?);
    Ok(())
}
