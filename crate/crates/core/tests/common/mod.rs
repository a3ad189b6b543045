#![allow(dead_code)]

use std::path::PathBuf;

use xplanar::{Dart, XGraph};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fig8_loop() -> XGraph {
    XGraph::from_edges(
        1,
        &[(0, 0), (0, 0)],
        vec![[[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]]],
    )
    .unwrap()
}

pub fn fig8_pass() -> XGraph {
    XGraph::from_edges(
        1,
        &[(0, 0), (0, 0)],
        vec![[[Dart::t(0), Dart::s(1)], [Dart::s(0), Dart::t(1)]]],
    )
    .unwrap()
}

/// Trefoil shadow with each departure paired to the other pass's arrival.
pub fn swapped_trefoil() -> XGraph {
    xplanar::format::parse_xgraph(&corpus("trefoil.xg")).unwrap()
}

/// A word whose curve traversal has interlacement graph `C_n`.
pub fn cycle_word(n: usize) -> Vec<usize> {
    let mut w = vec![1, 0];
    for i in 2..n {
        w.extend([i, i - 1]);
    }
    w.extend([0, n - 1]);
    w
}
