//! Every connected X-graph on at most three vertices, decided three ways.

use xplanar::decide;
use xplanar::oracle::{enumerate_small_xgraphs, oracle_forbidden_pairs, oracle_rotations};

fn main() -> xplanar::Result<()> {
    let graphs = enumerate_small_xgraphs(3)?;
    let (mut planar, mut disagreements) = (0, 0);
    for g in &graphs {
        let pipeline = decide(g)?.planar();
        let rotations = oracle_rotations(g)?.is_some();
        let no_pair = oracle_forbidden_pairs(g)?.is_none();
        if pipeline != rotations || rotations != no_pair {
            disagreements += 1;
            print!("disagreement:\n{}", xplanar::write_xgraph(g));
        }
        planar += usize::from(pipeline);
    }
    println!("{} instances, {planar} X-planar, {disagreements} disagreements", graphs.len());
    Ok(())
}
