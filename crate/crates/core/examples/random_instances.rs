//! Seeded random instances and where their verdicts come from.
//!
//! Usage: `random_instances [letters] [count]`

use std::collections::BTreeMap;
use std::time::Instant;

use xplanar::oracle::random_xgraph;
use xplanar::{decide, Outcome};

fn main() -> xplanar::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a number"));
    let letters = args.next().unwrap_or(40);
    let count = args.next().unwrap_or(200) as u64;
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let start = Instant::now();
    for seed in 0..count {
        for shuffle in [false, true] {
            let g = random_xgraph(letters, seed, shuffle)?;
            for c in decide(&g)?.components {
                let key = match c.outcome {
                    Outcome::Embedded { .. } => "embedded".to_string(),
                    Outcome::Certified(cert) => cert.provenance.to_string(),
                };
                *tally.entry(key).or_default() += 1;
            }
        }
    }
    println!("{} instances with {letters} vertices in {:?}", 2 * count, start.elapsed());
    for (k, v) in tally {
        println!("  {k:<22} {v}");
    }
    Ok(())
}
