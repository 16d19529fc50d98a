//! The principal congruence of a subset and its quotient.
//!
//! cargo run --example principal_congruence

use leftsimple::congruence::{context, is_group_with_identity, principal_congruence, quotient};
use leftsimple::{factory, Semigroup};

fn main() -> leftsimple::Result<()> {
    let s = factory::by_name("L2xZ4")?;
    let h = s.set(&[0, 4]);
    let pc = principal_congruence(&s, &h)?;
    let q = quotient(&s, &pc.congruence)?;
    println!("S = L2 x Z4, H = {}", s.format_set(&h));
    for (i, class) in q.classes.iter().enumerate() {
        println!("  class {i}: {}", s.format_set(class));
    }
    let identity = pc.h_class.expect("H is one class");
    println!(
        "S/P_H = {} (group with identity H: {})",
        factory::describe(&q.quotient),
        is_group_with_identity(&q, identity)
    );

    // Outside left simple semigroups the context can be empty.
    let semilattice = Semigroup::new(vec![vec![0, 0], vec![0, 1]], None)?;
    let top = semilattice.set(&[1]);
    println!("semilattice, H = {{1}}: context of 0 has {} pairs", context(&semilattice, &top, 0)?.len());
    let pc = principal_congruence(&semilattice, &top)?;
    println!("W^H = {}", semilattice.format_set(&pc.w_set));
    Ok(())
}
