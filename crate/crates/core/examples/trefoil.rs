//! Two crossing structures on the trefoil shadow.
//!
//! Read as a curve (each pass keeps its darts in one pair) the shadow is the
//! usual trefoil diagram and embeds. Pairing every departure with the other
//! pass's arrival gives an X-graph that is planar but not X-planar, and
//! whose forbidden cycle pairs all share more than one vertex.

use std::collections::BTreeSet;

use xplanar::oracle::{oracle_forbidden_pairs, oracle_rotations};
use xplanar::{decide, from_gauss_code, parse_word, Dart, XGraph};

fn swapped_pairing(curve: &XGraph) -> xplanar::Result<XGraph> {
    // a: positions 0, 3; b: 1, 4; c: 2, 5
    let pairing = vec![
        [[Dart::s(0), Dart::t(2)], [Dart::s(3), Dart::t(5)]],
        [[Dart::t(0), Dart::s(4)], [Dart::s(1), Dart::t(3)]],
        [[Dart::t(1), Dart::s(5)], [Dart::s(2), Dart::t(4)]],
    ];
    XGraph::new(3, curve.edges().to_vec(), pairing)
}

fn main() -> xplanar::Result<()> {
    let curve = from_gauss_code(&parse_word("a b c a b c"))?;
    let swapped = swapped_pairing(&curve)?;
    for (name, g) in [("curve pairing", &curve), ("swapped pairing", &swapped)] {
        let verdict = decide(g)?;
        let by_rotations = oracle_rotations(g)?.is_some();
        println!("{name}: decide {} / rotation search {}", verdict.planar(), by_rotations);
        if let Some((w1, w2)) = oracle_forbidden_pairs(g)? {
            let v1: BTreeSet<_> = w1.vertices(g).into_iter().collect();
            let v2: BTreeSet<_> = w2.vertices(g).into_iter().collect();
            println!("  simple cycles {w1} and {w2} share vertices {:?}", v1.intersection(&v2).collect::<Vec<_>>());
        }
    }
    Ok(())
}
