//! An ordering of finitely supported vectors whose type is the infinite natural product.
//!
//! `cargo run --example finitely_carruth`

use std::sync::Arc;

use natprod::carruth::{fc_cmp, fc_rank, FCDescriptor, FinSupportVector};
use natprod::infinite::infinite_nat_prod;
use natprod::parse::{parse_sequence, parse_vector_entries};

fn main() -> natprod::Result<()> {
    let bounds = Arc::new(parse_sequence("[w+1, w*2 ; 3]")?);
    let d = FCDescriptor::realizing(bounds.clone())?;
    println!("bounds {bounds}");
    println!(
        "cut {}, prefix type {}, order type {}",
        d.cut(),
        d.tau(),
        d.target()
    );
    println!("infinite natural product {}", infinite_nat_prod(&bounds));

    let vs = [
        "{}",
        "{0:w}",
        "{1:w+3}",
        "{0:1, 2:2}",
        "{4:1}",
        "{0:3, 1:w+1}",
    ]
    .iter()
    .map(|t| FinSupportVector::new(bounds.clone(), parse_vector_entries(t)?))
    .collect::<natprod::Result<Vec<_>>>()?;
    let mut sorted = vs.clone();
    sorted.sort_by(|a, b| fc_cmp(&d, a, b).expect("same bounds"));
    for v in sorted {
        println!("{v:>14} -> {}", fc_rank(&d, &v)?);
    }
    Ok(())
}
