//! Gauss codes: double-occurrence words read off a closed curve's shadow.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, XGraph};
use crate::walk::{ClosedWalk, OrientedEdge};

/// Splits a whitespace-separated word into symbols.
pub fn parse_word(text: &str) -> Vec<&str> {
    text.split_whitespace().collect()
}

/// Vertex id of each position, numbering symbols by first occurrence.
fn positions_to_vertices<S: Eq + Hash>(word: &[S]) -> Result<(usize, Vec<usize>, Vec<[usize; 2]>)> {
    if word.is_empty() {
        return Err(Error::GaussCode("empty word".into()));
    }
    let mut ids: HashMap<&S, usize> = HashMap::new();
    let mut vertex_of = Vec::with_capacity(word.len());
    let mut occ: Vec<Vec<usize>> = Vec::new();
    for (i, s) in word.iter().enumerate() {
        let next = ids.len();
        let v = *ids.entry(s).or_insert(next);
        if v == occ.len() {
            occ.push(Vec::new());
        }
        occ[v].push(i);
        vertex_of.push(v);
    }
    let mut occurrences = Vec::with_capacity(occ.len());
    for (v, o) in occ.iter().enumerate() {
        if o.len() != 2 {
            return Err(Error::GaussCode(format!(
                "symbol #{v} (first at position {}) occurs {} times, expected 2",
                o[0],
                o.len()
            )));
        }
        occurrences.push([o[0], o[1]]);
    }
    Ok((occ.len(), vertex_of, occurrences))
}

fn curve_edges(vertex_of: &[usize]) -> Vec<Edge> {
    let n = vertex_of.len();
    (0..n)
        .map(|i| Edge {
            tail: vertex_of[i],
            head: vertex_of[(i + 1) % n],
        })
        .collect()
}

/// Arrival and departure darts at word position `i` of an `n`-letter curve.
fn darts_at_position(i: usize, n: usize) -> (Dart, Dart) {
    (Dart::t((i + n - 1) % n), Dart::s(i))
}

/// Builds the X-graph of a curve with the given Gauss code.
///
/// Edge `i` runs from position `i` to position `i + 1`. Each pass of the curve
/// keeps its arrival and departure darts in one pair, which is the crossing
/// structure of a transverse double point.
pub fn from_gauss_code<S: Eq + Hash>(word: &[S]) -> Result<XGraph> {
    let (count, vertex_of, occurrences) = positions_to_vertices(word)?;
    let n = word.len();
    let pairing = occurrences
        .iter()
        .map(|&[a, b]| {
            let (ai, ao) = darts_at_position(a, n);
            let (bi, bo) = darts_at_position(b, n);
            [[ai, ao], [bi, bo]]
        })
        .collect();
    XGraph::new(count, curve_edges(&vertex_of), pairing)
}

/// Same edges as [`from_gauss_code`], but each vertex pairs its two arrival
/// darts together and its two departure darts together. The curve's own
/// traversal ([`curve_walk`]) is then a strongly turning Eulerian tour whose
/// interlacement graph is the word's chord diagram.
pub fn turning_instance<S: Eq + Hash>(word: &[S]) -> Result<XGraph> {
    let (count, vertex_of, occurrences) = positions_to_vertices(word)?;
    let n = word.len();
    let pairing = occurrences
        .iter()
        .map(|&[a, b]| {
            let (ai, ao) = darts_at_position(a, n);
            let (bi, bo) = darts_at_position(b, n);
            [[ai, bi], [ao, bo]]
        })
        .collect();
    XGraph::new(count, curve_edges(&vertex_of), pairing)
}

/// The curve's traversal `+0 +1 ... +(len-1)`.
pub fn curve_walk(len: usize) -> Result<ClosedWalk> {
    ClosedWalk::new((0..len).map(OrientedEdge::forward).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::passes;

    #[test]
    fn single_letter_is_pass_paired_figure_eight() {
        let g = from_gauss_code(&parse_word("a a")).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        // arrival of e1 with departure of e0; arrival of e0 with departure of e1
        assert!(g.same_pair(Dart::t(1), Dart::s(0)));
        assert!(g.same_pair(Dart::t(0), Dart::s(1)));
        assert!(!g.same_pair(Dart::s(0), Dart::t(0)));
        let expected = XGraph::from_edges(
            1,
            &[(0, 0), (0, 0)],
            vec![[[Dart::t(0), Dart::s(1)], [Dart::s(0), Dart::t(1)]]],
        )
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn trefoil_word_shape() {
        let g = from_gauss_code(&parse_word("a b c a b c")).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 6));
        assert!(g.validate().is_empty());
        assert!(g.is_connected());
    }

    #[test]
    fn two_letter_word_passes_go_straight() {
        let g = from_gauss_code(&parse_word("a b a b")).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 4));
        let ps = passes(&curve_walk(4).unwrap(), &g).unwrap();
        assert!(ps.iter().all(|p| !p.turns(&g)));
    }

    #[test]
    fn turning_instance_traversal_turns() {
        let g = turning_instance(&parse_word("a b c a b c")).unwrap();
        let ps = passes(&curve_walk(6).unwrap(), &g).unwrap();
        assert!(ps.iter().all(|p| p.turns(&g)));
    }

    #[test]
    fn rejects_bad_words() {
        assert!(from_gauss_code::<&str>(&[]).is_err());
        assert!(from_gauss_code(&parse_word("a b a")).is_err());
        assert!(from_gauss_code(&parse_word("a a a a")).is_err());
    }
}
