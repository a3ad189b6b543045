//! Interlacement graphs and the odd-cycle certificate.
//!
//! The word `1 0 2 1 3 2 .. n-1 n-2 0 n-1` interlaces chord `i` with `i - 1`
//! and `i + 1` only, so its interlacement graph is the cycle `C_n`. Pairing
//! both arrivals at every crossing makes the curve's own traversal a
//! strongly turning tour.

use xplanar::gauss::{curve_walk, turning_instance};
use xplanar::interlace::{formula_segments, forbidden_pair_from_odd_cycle, occurrence_table};
use xplanar::{interlacement_graph, two_coloring, y_sequence, EulerTour, TwoColoring};

fn cycle_word(n: usize) -> Vec<usize> {
    let mut w = vec![1, 0];
    for i in 2..n {
        w.extend([i, i - 1]);
    }
    w.extend([0, n - 1]);
    w
}

fn main() -> xplanar::Result<()> {
    for k in 1..=4 {
        let n = 2 * k + 1;
        let g = turning_instance(&cycle_word(n))?;
        let tour = EulerTour::from_walk(curve_walk(2 * n)?, &g)?;
        let q = interlacement_graph(&tour);
        let TwoColoring::OddCycle(cycle) = two_coloring(&q) else {
            unreachable!("C_{n} is not bipartite")
        };
        let table = occurrence_table(&tour);
        let y = y_sequence(&tour, &cycle)?;
        let pair = forbidden_pair_from_odd_cycle(&tour, &y, &g)?;
        println!("k={k}: Q has {} edges, odd cycle {:?}", q.edge_count(), cycle.vertices);
        println!("  occurrences {:?}", (0..n).map(|v| table.positions(v)).collect::<Vec<_>>());
        println!("  Y vertices {:?}", y.vertices);
        println!("  segments {:?}", formula_segments(k));
        println!("  {} | {}  crossing {} ({:?})", pair.walk1, pair.walk2, pair.crossing, pair.source);
    }
    Ok(())
}
