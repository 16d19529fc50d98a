//! Two normal series and their isomorphic refinements.
//!
//! cargo run --example schreier

use leftsimple::factory;
use leftsimple::series::{factors, schreier_refine, validate_series};

fn main() -> leftsimple::Result<()> {
    let s = factory::by_name("L2xZ6")?;
    let both = |ks: &[usize]| s.set(&ks.iter().flat_map(|&k| [k, 6 + k]).collect::<Vec<_>>());
    let a = validate_series(&s, vec![s.full_set(), both(&[0, 2, 4]), both(&[0])])?;
    let b = validate_series(&s, vec![s.full_set(), both(&[0, 3]), both(&[0])])?;
    println!("a: {}  factors {:?}", a.describe(), factors(&a)?.names());
    println!("b: {}  factors {:?}", b.describe(), factors(&b)?.names());

    let r = schreier_refine(&a, &b)?;
    println!("refined a: factors {:?}", factors(&r.first)?.names());
    println!("refined b: factors {:?}", factors(&r.second)?.names());
    println!("pairing: {:?}", r.iso.permutation);
    Ok(())
}
