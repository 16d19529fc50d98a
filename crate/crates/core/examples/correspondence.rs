//! Unitary subsemigroups over H correspond to subgroups of S/P_H.
//!
//! cargo run --example correspondence

use leftsimple::correspondence::correspondence_check;
use leftsimple::factory;

fn main() -> leftsimple::Result<()> {
    let s = factory::by_name("S3")?;
    let h = s.set(&[0]);
    let r = correspondence_check(&s, &h)?;
    println!("S = S3, H = {{e}}: S/P_H = {}", factory::describe(&r.quotient.quotient));
    for e in &r.entries {
        let third = match &e.third_iso {
            Some(t) => format!("S/P_N = {}", factory::describe(&t.direct.quotient)),
            None => String::from("not normal"),
        };
        println!("  N = {:<24} reflexive {:<5}  {third}", s.format_set(&e.n), e.reflexive);
    }
    println!("{} unitary N, {} subgroups", r.entries.len(), r.subgroup_count);
    Ok(())
}
