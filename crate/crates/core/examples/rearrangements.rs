//! Every value a classical sum or product takes under reordering.
//!
//! `cargo run --example rearrangements`

use natprod::parse::{parse_list, parse_sequence};
use natprod::rearrange::{
    finite_prod_values, finite_sum_values, inf_prod_values, inf_sum_values,
    stable_arrangement_values, Caps,
};

fn show(label: &str, values: &natprod::rearrange::ValueSet) {
    let items: Vec<String> = values.iter().map(ToString::to_string).collect();
    println!("{label}: {{{}}}", items.join(", "));
}

fn main() -> natprod::Result<()> {
    let caps = Caps::default();
    let list = parse_list("[w, 1, w^2, 3]")?;
    show("finite sums", &finite_sum_values(&list, &caps)?);
    show("finite products", &finite_prod_values(&list, &caps)?);

    let s = parse_sequence("[w^2, w ; 1]")?;
    show("infinite sums of [w^2, w ; 1]", &inf_sum_values(&s, &caps)?);
    let brute = stable_arrangement_values(&s, &caps)?;
    show("  by permuting heads", &brute.values);
    println!(
        "  stable from head length {} (checked to {})",
        brute.stable_from, brute.examined_to
    );

    let s = parse_sequence("[w^w, w+1 ; 2]")?;
    show(
        "infinite products of [w^w, w+1 ; 2]",
        &inf_prod_values(&s, &caps)?,
    );
    Ok(())
}
