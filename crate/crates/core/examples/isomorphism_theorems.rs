//! The intersection isomorphism and the Zassenhaus isomorphism, each with a
//! verified witness.
//!
//! cargo run --example isomorphism_theorems

use leftsimple::correspondence::{intersection_iso, zassenhaus};
use leftsimple::factory;

fn main() -> leftsimple::Result<()> {
    let s = factory::by_name("L2xZ4")?;
    // H = L2 x {0,2}, N = {a1} x Z4 (a subsemigroup that is not unitary).
    let h = s.set(&[0, 2, 4, 6]);
    let n = s.set(&[0, 1, 2, 3]);
    let r = intersection_iso(&s, &h, &n)?;
    println!("<H,N> = {}, H∩N = {}", s.format_set(&r.join), s.format_set(&r.intersection));
    println!(
        "<H,N>/P_H = {}, N/P_(H∩N) = {}, witness {:?}",
        factory::describe(&r.join_quotient.quotient),
        factory::describe(&r.n_quotient.quotient),
        r.witness.mapping()
    );

    let z = factory::by_name("Z12")?;
    let multiples = |d: usize| z.set(&(0..12).filter(|x| x % d == 0).collect::<Vec<_>>());
    let r = zassenhaus(&z, &multiples(2), &multiples(3), &multiples(4), &multiples(6))?;
    println!(
        "Z12: N(A∩B) = {}, N(A∩M) = {}, M(A∩B) = {}, M(B∩N) = {}",
        z.format_set(&r.n_upper),
        z.format_set(&r.n_lower),
        z.format_set(&r.m_upper),
        z.format_set(&r.m_lower)
    );
    println!("quotient orders {} and {}", r.n_quotient.order(), r.m_quotient.order());
    Ok(())
}
