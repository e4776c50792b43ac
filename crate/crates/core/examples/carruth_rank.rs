//! A rank on finite products whose order type is the natural product.
//!
//! `cargo run --example carruth_rank`

use natprod::carruth::{nary_carruth_rank, natural_product_rank};
use natprod::natural::nat_prod;
use natprod::parse::parse;
use natprod::Ordinal;

fn main() -> natprod::Result<()> {
    let (a, b) = (parse("w+1")?, parse("w+1")?);
    let r = natural_product_rank(&a, &b)?;
    println!("{a} x {b}: target {}", nat_prod(&a, &b));
    let xs = ["0", "1", "5", "w"];
    print!("{:>6}", "");
    for y in xs {
        print!("{y:>16}");
    }
    println!();
    for x in xs {
        print!("{x:>6}");
        for y in xs {
            print!("{:>16}", r.rank(&[parse(x)?, parse(y)?])?.to_string());
        }
        println!();
    }

    let factors = [parse("w^2+1")?, parse("w*2")?, parse("3")?];
    let r = nary_carruth_rank(&factors)?;
    let point = [parse("w+4")?, parse("w+1")?, Ordinal::from(2)];
    let v = r.rank(&point)?;
    println!(
        "\nrank of ({}, {}, {}) in w^2+1 x w*2 x 3: {v}",
        point[0], point[1], point[2]
    );
    println!(
        "unrank gives back {:?}",
        r.unrank(&v)?
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("target {}", r.target());
    Ok(())
}
