//! Reflexive and unitary subsets, with the witnesses that refute them.
//!
//! cargo run --example subsets

use leftsimple::factory;
use leftsimple::subset::{enumerate_ru_subsemigroups, join_hn, subset_report};

fn main() -> leftsimple::Result<()> {
    let s = factory::by_name("L2xZ4")?;

    for (name, elems) in [("L2 x {0}", vec![0, 4]), ("{a1} x Z4", vec![0, 1, 2, 3])] {
        let h = s.set(&elems);
        let r = subset_report(&s, &h)?;
        println!("{name} = {}", s.format_set(&h));
        println!(
            "  reflexive {}  left unitary {}  right unitary {}",
            r.is_reflexive, r.is_left_unitary, r.is_right_unitary
        );
        if let Some((a, b)) = r.witnesses.left_unitary {
            println!("  left unitary fails at a={}, b={}", s.label(a), s.label(b));
        }
    }

    println!("reflexive unitary subsemigroups:");
    let ru = enumerate_ru_subsemigroups(&s)?;
    for h in &ru {
        println!("  {}", s.format_set(h));
    }

    let hn = join_hn(&s, &ru[0], &ru[1])?;
    println!("HN for H={}, N={}: {}", s.format_set(&ru[0]), s.format_set(&ru[1]), s.format_set(&hn));
    Ok(())
}
