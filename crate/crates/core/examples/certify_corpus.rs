//! Runs every check over a corpus of left groups and doubles.
//!
//! cargo run --release --example certify_corpus [MAX_ORDER]

use leftsimple::certify::{certify, CertifyOptions, Status};
use leftsimple::factory::CorpusSpec;

fn main() -> leftsimple::Result<()> {
    let max_order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let opts = CertifyOptions { corpus: CorpusSpec::default().with_max_order(max_order), ..Default::default() };
    let report = certify(&opts)?;
    for m in &report.members {
        let cells: String = m
            .checks
            .iter()
            .map(|c| match c.status {
                Status::Pass => '+',
                Status::Fail => 'X',
                Status::Skipped => '.',
            })
            .collect();
        let cases: usize = m.checks.iter().map(|c| c.cases).sum();
        println!("{:<18} {:>2}  {cells}  {cases:>6} cases", m.name, m.order);
    }
    for (m, c) in report.failures() {
        println!("FAILED {} {}: {}", m.name, c.check, c.failure.as_deref().unwrap_or(""));
    }
    println!("{} members, all passed: {}", report.members.len(), report.all_passed());
    Ok(())
}
