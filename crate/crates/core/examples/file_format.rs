//! Reading and writing the semigroup file format.
//!
//! cargo run --example file_format

use leftsimple::cli::{cmd_subset, SemigroupFile};

const KLEIN: &str = "\
# Klein four group
elements: e a b c
table:
  e a b c
  a e c b
  b c e a
  c b a e
subset H: e a
";

fn main() {
    let file = SemigroupFile::parse(KLEIN).expect("valid file");
    let report = cmd_subset(&file, "H").expect("subset report");
    print!("{}", report.render(true));
    print!("{}", file.to_json());

    match SemigroupFile::parse("elements: e a\ntable:\n  e a\n  a x\n") {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
}
