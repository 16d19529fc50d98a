//! Build semigroups from tables and from the factory, and inspect them.
//!
//! cargo run --example basics

use leftsimple::{factory, Semigroup};

fn main() -> leftsimple::Result<()> {
    // The two-element semilattice under min is associative but not left simple.
    let semilattice = Semigroup::new(vec![vec![0, 0], vec![0, 1]], Some(vec!["0".into(), "1".into()]))?;
    println!("min semilattice: left simple = {}", semilattice.is_left_simple());

    // Tables are validated up front.
    match Semigroup::new(vec![vec![1, 0], vec![0, 0]], None) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let s = factory::left_group(2, &factory::cyclic(3)?)?;
    println!("L2 x Z3: order {}, left simple = {}", s.order(), s.is_left_simple());
    println!("idempotents: {}", s.format_set(&s.idempotents()));

    let one = s.set(&[1]);
    println!("closure of {} = {}", s.format_set(&one), s.format_set(&s.closure(&one)?));
    let first_row = s.set(&[0, 1, 2]);
    let product = s.set_product(&first_row, &s.set(&[3]))?;
    println!("{} * {} = {}", s.format_set(&first_row), s.format_set(&s.set(&[3])), s.format_set(&product));
    Ok(())
}
