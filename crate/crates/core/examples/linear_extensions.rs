//! Longest linear extension of a finite grid, and an infinite antichain.
//!
//! `cargo run --example linear_extensions`

use std::sync::Arc;

use natprod::carruth::{finite_extensions_max, product_leq, FinSupportVector};
use natprod::parse::parse_sequence;

fn main() -> natprod::Result<()> {
    for (m, n) in [(1, 4), (2, 2), (2, 3), (3, 3), (3, 4)] {
        let s = finite_extensions_max(m, n)?;
        println!(
            "{m} x {n}: maximal type {}, {} linear extensions",
            s.max_type, s.count
        );
    }

    // Unit vectors under constant bound 2 form an antichain in the product order.
    let bounds = Arc::new(parse_sequence("[; 2]")?);
    let units: Vec<_> = (0..6)
        .map(|j| FinSupportVector::unit(bounds.clone(), j))
        .collect::<natprod::Result<_>>()?;
    let comparable = units
        .iter()
        .enumerate()
        .flat_map(|(i, u)| {
            units
                .iter()
                .enumerate()
                .filter(move |(j, _)| *j != i)
                .map(move |(_, v)| (u, v))
        })
        .filter(|(u, v)| product_leq(u, v).unwrap_or(false))
        .count();
    println!(
        "comparable pairs among {} unit vectors: {comparable}",
        units.len()
    );
    Ok(())
}
