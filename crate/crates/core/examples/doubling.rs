//! Doubling a left simple semigroup.
//!
//! cargo run --example doubling

use leftsimple::congruence::{principal_congruence, quotient};
use leftsimple::factory;
use leftsimple::subset::is_ru_subsemigroup;

fn main() -> leftsimple::Result<()> {
    let d = factory::double(&factory::cyclic(2)?)?;
    let klein = factory::catalog_group("Klein").expect("catalog");
    let w = leftsimple::is_isomorphic(&d, &klein).expect("double(Z2) is the Klein group");
    println!("double(Z2) -> Klein: {:?}", w.mapping());

    let l2 = factory::left_zero(2)?;
    let d = factory::double(&l2)?;
    println!("double(L2) table:");
    for a in 0..d.order() {
        let row: Vec<String> = d.row(a).iter().map(|&b| d.label(b)).collect();
        println!("  {:<4} {}", d.label(a), row.join(" "));
    }
    let first = d.set(&[0, 1]);
    println!("left simple: {}, L2 reflexive unitary: {}", d.is_left_simple(), is_ru_subsemigroup(&d, &first));
    let q = quotient(&d, &principal_congruence(&d, &first)?.congruence)?;
    println!("double(L2)/P_L2 = {}", factory::describe(&q.quotient));
    Ok(())
}
