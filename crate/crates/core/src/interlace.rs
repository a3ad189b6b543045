//! Chord diagram of a tour: interlacement, two-coloring, and the cycle pair
//! extracted from a shortest odd cycle.
//!
//! The tour is read as a circle carrying `2V` pass positions; each vertex is
//! a chord joining its two positions. Two vertices interlace when their
//! chords cross. A proper two-coloring of the interlacement graph places
//! chords inside and outside the circle; a shortest odd cycle instead
//! produces two edge-disjoint closed walks with one crossing vertex.
//!
//! Index conventions for the cycle pair: with an odd cycle of length
//! `2k + 1`, the `n = 4k + 2` chord endpoints are `Y_1..Y_n` (1-based,
//! cyclic), stored 0-based as `positions[j - 1]`. Segment `[j]` is the part
//! of the tour from `Y_j` to `Y_{j+1}`, i.e. `tour.segment(positions[j - 1],
//! positions[j % n])`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::euler::EulerTour;
use crate::graph::XGraph;
use crate::walk::{verify_forbidden_pair, ClosedWalk, OrientedEdge};

/// Each vertex's two pass positions plus the inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceTable {
    positions: Vec<[usize; 2]>,
    vertex_at: Vec<usize>,
}

impl OccurrenceTable {
    pub fn new(positions: Vec<[usize; 2]>) -> Result<Self> {
        let mut vertex_at = vec![usize::MAX; 2 * positions.len()];
        for (v, &[a, b]) in positions.iter().enumerate() {
            if a >= b || b >= vertex_at.len() {
                return Err(Error::Precondition(format!(
                    "vertex {v} has positions ({a}, {b})"
                )));
            }
            for p in [a, b] {
                if vertex_at[p] != usize::MAX {
                    return Err(Error::Precondition(format!("position {p} used twice")));
                }
                vertex_at[p] = v;
            }
        }
        Ok(OccurrenceTable {
            positions,
            vertex_at,
        })
    }

    pub fn positions(&self, v: usize) -> [usize; 2] {
        self.positions[v]
    }

    pub fn vertex_at(&self, position: usize) -> usize {
        self.vertex_at[position]
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    /// Whether the chords of `u` and `v` cross.
    pub fn interlaced(&self, u: usize, v: usize) -> bool {
        let [a, b] = self.positions[u];
        let inside = |p: usize| a < p && p < b;
        let [c, d] = self.positions[v];
        inside(c) != inside(d)
    }
}

pub fn occurrence_table(t: &EulerTour) -> OccurrenceTable {
    OccurrenceTable::new(t.all_occurrences().to_vec())
        .expect("an Eulerian tour visits every vertex at two distinct positions")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacementGraph {
    adjacency: Vec<Vec<usize>>,
}

impl InterlacementGraph {
    /// Builds a graph from an edge list (used for testing the coloring on
    /// arbitrary graphs).
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
            a.dedup();
        }
        InterlacementGraph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Interlacement graph of the tour's chord diagram.
pub fn interlacement_graph(t: &EulerTour) -> InterlacementGraph {
    interlacement_from_table(&occurrence_table(t))
}

pub fn interlacement_from_table(table: &OccurrenceTable) -> InterlacementGraph {
    let n = table.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    // Sweep positions; every chord still open when `u` closes and opened
    // after `u` crosses `u`.
    let mut open: Vec<usize> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for p in 0..2 * n {
        let u = table.vertex_at(p);
        if table.positions(u)[0] == p {
            slot[u] = open.len();
            open.push(u);
        } else {
            let from = slot[u];
            for &w in &open[from + 1..] {
                if w != usize::MAX {
                    adjacency[u].push(w);
                    adjacency[w].push(u);
                }
            }
            open[from] = usize::MAX;
        }
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    InterlacementGraph { adjacency }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    Outside,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Inside => Side::Outside,
            Side::Outside => Side::Inside,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub sides: Vec<Side>,
}

impl Coloring {
    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn is_proper(&self, q: &InterlacementGraph) -> bool {
        (0..q.vertex_count()).all(|u| q.neighbors(u).iter().all(|&w| self.sides[w] != self.sides[u]))
    }
}

/// A shortest odd cycle, as a vertex sequence of length `2k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
}

impl OddCycle {
    pub fn k(&self) -> usize {
        (self.vertices.len() - 1) / 2
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive members adjacent, all others not.
    pub fn is_induced_in(&self, adjacent: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                adjacent(self.vertices[i], self.vertices[j]) == consecutive
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Coloring),
    OddCycle(OddCycle),
}

/// Proper two-coloring (component roots inside), or a globally shortest odd
/// cycle when none exists.
pub fn two_coloring(q: &InterlacementGraph) -> TwoColoring {
    let n = q.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut bad_components = Vec::new();
    let mut component = vec![usize::MAX; n];
    let mut comp_id = 0;
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::Inside);
        component[s] = comp_id;
        let mut ok = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &w in q.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.other());
                        component[w] = comp_id;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => ok = false,
                    Some(_) => {}
                }
            }
        }
        if !ok {
            bad_components.push(comp_id);
        }
        comp_id += 1;
    }
    if bad_components.is_empty() {
        return TwoColoring::Bipartite(Coloring {
            sides: side.into_iter().map(|s| s.expect("all colored")).collect(),
        });
    }
    let starts = (0..n).filter(|v| bad_components.contains(&component[*v]));
    TwoColoring::OddCycle(shortest_odd_cycle(q, starts).expect("non-bipartite graph has an odd cycle"))
}

/// Breadth-first layering from each start in order; an edge inside a layer
/// at depth `d` closes an odd cycle of length `2d + 1`. The minimum over
/// starts, ties to the earliest start, is returned. A globally shortest odd
/// closed walk is a simple, induced cycle.
fn shortest_odd_cycle(q: &InterlacementGraph, starts: impl Iterator<Item = usize>) -> Option<OddCycle> {
    let n = q.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in starts {
        let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
        if limit == 1 {
            break;
        }
        for &v in &touched {
            dist[v] = usize::MAX;
        }
        touched.clear();
        dist[s] = 0;
        touched.push(s);
        let mut layer = vec![s];
        let mut depth = 0;
        let mut hit = None;
        'layers: while !layer.is_empty() && depth < limit {
            let mut next = Vec::new();
            for &u in &layer {
                for &w in q.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = depth + 1;
                        parent[w] = u;
                        touched.push(w);
                        next.push(w);
                    } else if dist[w] == depth {
                        hit = Some((u, w));
                        break 'layers;
                    }
                }
            }
            layer = next;
            depth += 1;
        }
        if let Some((u, w)) = hit {
            let climb = |mut v: usize| {
                let mut path = vec![v];
                while v != s {
                    v = parent[v];
                    path.push(v);
                }
                path
            };
            let mut cycle = climb(u);
            cycle.reverse();
            let back = climb(w);
            cycle.extend_from_slice(&back[..back.len() - 1]);
            best = Some((depth, cycle));
        }
    }
    best.map(|(_, vertices)| OddCycle { vertices })
}

/// The `4k + 2` chord endpoints of an odd cycle in circular order, aligned so
/// that `T(Y_{2i}) = T(Y_{2i+3})` for every `i` (1-based, cyclic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSequence {
    pub k: usize,
    /// `positions[j - 1]` is `Y_j`, a pass position along the tour.
    pub positions: Vec<usize>,
    /// `vertices[j - 1]` is `T(Y_j)`.
    pub vertices: Vec<usize>,
}

impl YSequence {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `T(Y_j)` for 1-based cyclic `j`.
    pub fn vertex(&self, j: usize) -> usize {
        self.vertices[(j + self.len() - 1) % self.len()]
    }

    /// `Y_j` for 1-based cyclic `j`.
    pub fn position(&self, j: usize) -> usize {
        self.positions[(j + self.len() - 1) % self.len()]
    }

    /// Checks `T(Y_{2i}) = T(Y_{2i+3})` for `i = 1..=2k+1`.
    pub fn invariant_holds(&self) -> bool {
        (1..=2 * self.k + 1).all(|i| self.vertex(2 * i) == self.vertex(2 * i + 3))
    }

    /// `T(Y_{2k})`, where the two formula cycles cross.
    pub fn crossing_vertex(&self) -> usize {
        self.vertex(2 * self.k)
    }
}

/// Numbers the endpoints of `c`'s chords along the tour and picks the
/// alignment (smallest first position) satisfying the Y-sequence invariant.
pub fn y_sequence(t: &EulerTour, c: &OddCycle) -> Result<YSequence> {
    let table = occurrence_table(t);
    y_sequence_from_table(&table, c)
}

pub fn y_sequence_from_table(table: &OccurrenceTable, c: &OddCycle) -> Result<YSequence> {
    if c.len() < 3 || c.len() % 2 == 0 {
        return Err(Error::Precondition(format!(
            "cycle length {} is not odd and at least 3",
            c.len()
        )));
    }
    if !c.is_induced_in(|u, v| table.interlaced(u, v)) {
        return Err(Error::Precondition(
            "cycle is not an induced cycle of the interlacement graph".into(),
        ));
    }
    let mut endpoints: Vec<usize> = c.vertices.iter().flat_map(|&v| table.positions(v)).collect();
    endpoints.sort_unstable();
    let n = endpoints.len();
    for offset in 0..n {
        let positions: Vec<usize> = (0..n).map(|j| endpoints[(offset + j) % n]).collect();
        let y = YSequence {
            k: c.k(),
            vertices: positions.iter().map(|&p| table.vertex_at(p)).collect(),
            positions,
        };
        if y.invariant_holds() {
            return Ok(y);
        }
    }
    Err(Error::Internal(
        "no alignment of the odd cycle's endpoints satisfies the Y-sequence invariant".into(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSource {
    Formula,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCyclePair {
    pub walk1: ClosedWalk,
    pub walk2: ClosedWalk,
    pub crossing: usize,
    pub source: PairSource,
}

/// Segment indices (1-based) and whether each is traversed backwards.
///
/// With `l = floor((k + 1) / 2)` the first cycle is
/// `[1], [5], .., [4l-3], rev[4l], [4l+3], .., [4k-1]` and the second is its
/// mirror image under `j -> 4k + 2 - j`:
/// `[3], [7], .., [4(k-l)-1], rev[4(k-l)+2], [4(k-l)+5], .., [4k+1]`.
pub fn formula_segments(k: usize) -> (Vec<(usize, bool)>, Vec<(usize, bool)>) {
    let l = (k + 1) / 2;
    let mut first: Vec<(usize, bool)> = (0..l).map(|m| (4 * m + 1, false)).collect();
    first.push((4 * l, true));
    first.extend((l..k).map(|m| (4 * m + 3, false)));
    let mut second: Vec<(usize, bool)> = (0..k - l).map(|m| (4 * m + 3, false)).collect();
    second.push((4 * (k - l) + 2, true));
    second.extend((k - l + 1..=k).map(|m| (4 * m + 1, false)));
    (first, second)
}

fn segment(t: &EulerTour, y: &YSequence, j: usize) -> Vec<OrientedEdge> {
    t.segment(y.position(j), y.position(j + 1))
}

fn assemble(t: &EulerTour, y: &YSequence, parts: &[(usize, bool)]) -> Result<ClosedWalk> {
    let mut steps = Vec::new();
    for &(j, rev) in parts {
        let seg = segment(t, y, j);
        if rev {
            steps.extend(seg.iter().rev().map(|s| s.reversed()));
        } else {
            steps.extend(seg);
        }
    }
    ClosedWalk::new(steps)
}

/// Two edge-disjoint closed walks, built from tour segments, meeting in the
/// single crossing vertex `T(Y_{2k})`.
///
/// Expects a turning, strongly turning tour. The result always passes the
/// checker; if the formula pair were ever rejected, a bounded search over
/// segment recombinations runs instead.
pub fn forbidden_pair_from_odd_cycle(t: &EulerTour, y: &YSequence, g: &XGraph) -> Result<OddCyclePair> {
    if !y.invariant_holds() || y.len() != 4 * y.k + 2 || y.k == 0 {
        return Err(Error::Precondition("Y-sequence invariant does not hold".into()));
    }
    let (first, second) = formula_segments(y.k);
    let walk1 = assemble(t, y, &first)?;
    let walk2 = assemble(t, y, &second)?;
    let report = verify_forbidden_pair(&walk1, &walk2, g);
    if report.valid && report.crossing_vertex() == Some(y.crossing_vertex()) {
        return Ok(OddCyclePair {
            walk1,
            walk2,
            crossing: y.crossing_vertex(),
            source: PairSource::Formula,
        });
    }
    segment_search(t, y, g).ok_or_else(|| {
        Error::Internal(format!(
            "odd-cycle pair rejected ({:?}) and no segment recombination validates",
            report.failure
        ))
    })
}

/// Largest segment count the exhaustive recombination search accepts.
pub const MAX_SEARCH_SEGMENTS: usize = 14;
const MAX_SEARCH_TRAILS: usize = 100_000;

/// Exhaustive search over closed trails made of whole segments for an
/// edge-disjoint pair that passes the checker. `None` when nothing validates
/// or the instance exceeds [`MAX_SEARCH_SEGMENTS`].
pub fn segment_search(t: &EulerTour, y: &YSequence, g: &XGraph) -> Option<OddCyclePair> {
    let n = y.len();
    if n > MAX_SEARCH_SEGMENTS {
        return None;
    }
    // Segment j (1-based) joins T(Y_j) to T(Y_{j+1}).
    let ends: Vec<(usize, usize)> = (1..=n).map(|j| (y.vertex(j), y.vertex(j + 1))).collect();
    let mut trails: Vec<(u32, Vec<(usize, bool)>)> = Vec::new();

    struct Search<'a> {
        ends: &'a [(usize, usize)],
        trails: &'a mut Vec<(u32, Vec<(usize, bool)>)>,
        origin: usize,
        first: usize,
    }
    impl Search<'_> {
        fn extend(&mut self, at: usize, used: u32, path: &mut Vec<(usize, bool)>) {
            if self.trails.len() >= MAX_SEARCH_TRAILS {
                return;
            }
            if at == self.origin && !path.is_empty() {
                self.trails.push((used, path.clone()));
            }
            for j in self.first + 1..self.ends.len() {
                if used & (1 << j) != 0 {
                    continue;
                }
                let (a, b) = self.ends[j];
                for (rev, from, to) in [(false, a, b), (true, b, a)] {
                    if from == at {
                        path.push((j + 1, rev));
                        self.extend(to, used | (1 << j), path);
                        path.pop();
                    }
                    if a == b {
                        break;
                    }
                }
            }
        }
    }
    for first in 0..n {
        let (a, b) = ends[first];
        let mut search = Search {
            ends: &ends,
            trails: &mut trails,
            origin: a,
            first,
        };
        let mut path = vec![(first + 1, false)];
        search.extend(b, 1 << first, &mut path);
    }
    for (i, (m1, p1)) in trails.iter().enumerate() {
        for (m2, p2) in &trails[i + 1..] {
            if m1 & m2 != 0 {
                continue;
            }
            let (Ok(w1), Ok(w2)) = (assemble(t, y, p1), assemble(t, y, p2)) else {
                continue;
            };
            let report = verify_forbidden_pair(&w1, &w2, g);
            if let Some(x) = report.crossing_vertex() {
                return Some(OddCyclePair {
                    walk1: w1,
                    walk2: w2,
                    crossing: x,
                    source: PairSource::Fallback,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::EulerTour;
    use crate::gauss::{curve_walk, parse_word, turning_instance};

    fn table_from_word(word: &str) -> OccurrenceTable {
        let symbols = parse_word(word);
        let mut firsts: Vec<&str> = Vec::new();
        for s in &symbols {
            if !firsts.contains(s) {
                firsts.push(s);
            }
        }
        let positions = firsts
            .iter()
            .map(|f| {
                let ps: Vec<usize> = symbols
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| *s == f)
                    .map(|(i, _)| i)
                    .collect();
                [ps[0], ps[1]]
            })
            .collect();
        OccurrenceTable::new(positions).unwrap()
    }

    #[test]
    fn occurrence_positions() {
        let t = table_from_word("u v u v");
        assert_eq!(t.positions(0), [0, 2]);
        assert_eq!(t.positions(1), [1, 3]);
    }

    #[test]
    fn skew_and_nested_chords() {
        let q = interlacement_from_table(&table_from_word("u v u v"));
        assert_eq!(q.neighbors(0), &[1]);
        let q = interlacement_from_table(&table_from_word("u u v v"));
        assert_eq!(q.edge_count(), 0);
        let q = interlacement_from_table(&table_from_word("u v v u"));
        assert_eq!(q.edge_count(), 0);
    }

    #[test]
    fn single_vertex_tour_has_no_interlacement() {
        let g = crate::gauss::from_gauss_code(&parse_word("a a")).unwrap();
        let tour = crate::euler::turning_euler_tour(&g).unwrap();
        assert_eq!(occurrence_table(&tour).positions(0), [0, 1]);
        assert_eq!(interlacement_graph(&tour).edge_count(), 0);
    }

    #[test]
    fn coloring_small_graphs() {
        let q = InterlacementGraph::from_edges(3, &[]);
        assert_eq!(
            two_coloring(&q),
            TwoColoring::Bipartite(Coloring {
                sides: vec![Side::Inside; 3]
            })
        );
        let q = InterlacementGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        match two_coloring(&q) {
            TwoColoring::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                assert_eq!(c.k(), 1);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let q = InterlacementGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match two_coloring(&q) {
            TwoColoring::Bipartite(c) => {
                assert!(c.is_proper(&q));
                assert_eq!(
                    c.sides,
                    vec![Side::Inside, Side::Outside, Side::Inside, Side::Outside]
                );
            }
            other => panic!("expected coloring, got {other:?}"),
        }
    }

    #[test]
    fn shortest_odd_cycle_prefers_triangle_over_pentagon() {
        // pentagon 0..4 plus a separate triangle 5,6,7
        let q = InterlacementGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)],
        );
        let TwoColoring::OddCycle(c) = two_coloring(&q) else {
            panic!("not bipartite")
        };
        assert_eq!(c.len(), 3);
        assert_eq!(c.vertices[0], 5);
    }

    #[test]
    fn y_sequence_triangle() {
        let table = table_from_word("u v w u v w");
        let c = OddCycle {
            vertices: vec![0, 1, 2],
        };
        let y = y_sequence_from_table(&table, &c).unwrap();
        assert_eq!(y.len(), 6);
        assert!(y.invariant_holds());
        for i in 1..=3 {
            assert_eq!(y.vertex(2 * i), y.vertex(2 * i + 3));
        }
    }

    #[test]
    fn y_sequence_rejects_even_cycle() {
        let table = table_from_word("a b a c b d c d");
        let c = OddCycle {
            vertices: vec![0, 1, 2, 3],
        };
        assert!(matches!(
            y_sequence_from_table(&table, &c),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn formula_segment_lists() {
        assert_eq!(formula_segments(1), (vec![(1, false), (4, true)], vec![(2, true), (5, false)]));
        // k = 2, l = 1
        assert_eq!(
            formula_segments(2),
            (
                vec![(1, false), (4, true), (7, false)],
                vec![(3, false), (6, true), (9, false)]
            )
        );
        // k = 3, l = 2
        assert_eq!(
            formula_segments(3),
            (
                vec![(1, false), (5, false), (8, true), (11, false)],
                vec![(3, false), (6, true), (9, false), (13, false)]
            )
        );
    }

    #[test]
    fn formula_lists_partition_disjointly() {
        for k in 1..40 {
            let (a, b) = formula_segments(k);
            assert_eq!(a.len(), k + 1);
            assert_eq!(b.len(), k + 1);
            let mut all: Vec<usize> = a.iter().chain(&b).map(|p| p.0).collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), 2 * k + 2);
            assert!(all.iter().all(|&j| (1..=4 * k + 2).contains(&j)));
        }
    }

    fn odd_cycle_case(word: &str) -> (XGraph, EulerTour, YSequence) {
        let symbols = parse_word(word);
        let g = turning_instance(&symbols).unwrap();
        let t = EulerTour::from_walk(curve_walk(symbols.len()).unwrap(), &g).unwrap();
        let TwoColoring::OddCycle(c) = two_coloring(&interlacement_graph(&t)) else {
            panic!("expected an odd cycle for {word}")
        };
        let y = y_sequence(&t, &c).unwrap();
        (g, t, y)
    }

    #[test]
    fn triangle_formula_and_search_agree_on_validity() {
        let (g, t, y) = odd_cycle_case("a b c a b c");
        assert_eq!(y.k, 1);
        let pair = forbidden_pair_from_odd_cycle(&t, &y, &g).unwrap();
        assert_eq!(pair.source, PairSource::Formula);
        assert_eq!(pair.crossing, y.crossing_vertex());
        let found = segment_search(&t, &y, &g).expect("search finds a pair for k = 1");
        assert!(verify_forbidden_pair(&found.walk1, &found.walk2, &g).valid);
    }

    #[test]
    fn pentagon_formula() {
        // five chords, each crossing only its two neighbours
        let (g, t, y) = odd_cycle_case("a e b a c b d c e d");
        assert_eq!(y.k, 2);
        let pair = forbidden_pair_from_odd_cycle(&t, &y, &g).unwrap();
        assert_eq!(pair.source, PairSource::Formula);
        let report = verify_forbidden_pair(&pair.walk1, &pair.walk2, &g);
        assert!(report.valid);
        assert_eq!(report.crossing_vertex(), Some(y.vertex(4)));
    }
}
