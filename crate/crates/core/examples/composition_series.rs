//! Composition series and the Jordan-Hölder check.
//!
//! cargo run --example composition_series [NAME]

use leftsimple::factory;
use leftsimple::series::{factors, jordan_holder_check};

fn main() -> leftsimple::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "L2xD4".into());
    let s = factory::by_name(&name)?;
    let r = jordan_holder_check(&s)?;
    println!("{name}: {} composition series of length {}", r.series.len(), r.length);
    for ns in &r.series {
        println!("  {:?}", factors(ns)?.names());
    }
    println!("factor multiset {:?}, {} pairs compared", r.factor_multiset, r.pairs_checked);
    Ok(())
}
