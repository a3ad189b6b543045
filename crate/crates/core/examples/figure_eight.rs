//! The two X-graphs on one vertex with two loops.
//!
//! Pairing each loop with itself gives a graph that is planar but not
//! X-planar; pairing the darts of each pass gives a figure-eight curve.

use xplanar::{decide, format, verify_forbidden_pair, Outcome};

const LOOPS: &str = "xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.s 0.t | 1.s 1.t
";

const PASSES: &str = "xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.t 1.s | 0.s 1.t
";

fn main() -> xplanar::Result<()> {
    for (name, text) in [("loops paired", LOOPS), ("passes paired", PASSES)] {
        let g = format::parse_xgraph(text)?;
        let verdict = decide(&g)?;
        println!("{name}: X-planar = {}", verdict.planar());
        match &verdict.components[0].outcome {
            Outcome::Certified(c) => {
                let report = verify_forbidden_pair(&c.walk1, &c.walk2, &g);
                println!("  walks {} and {}, crossing at {:?}", c.walk1, c.walk2, report.crossing);
            }
            Outcome::Embedded { rotation, faces, .. } => {
                println!("  rotation at 0: {:?}", rotation.canonical_at(0).map(|d| d.to_string()));
                println!("  {} faces", faces.count());
            }
        }
    }
    Ok(())
}
