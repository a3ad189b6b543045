//! Turning Eulerian tours and the strong-turning split.
//!
//! A tour is *turning* when every pass switches pairs, and *strongly
//! turning* when, in addition, both arrivals at each vertex come in through
//! the same pair. A turning tour always exists on a connected X-graph; when
//! strong turning fails at a vertex, cutting the tour there yields a
//! forbidden pair.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Dart, XGraph};
use crate::walk::{passes_unchecked, verify_forbidden_pair, ClosedWalk, OrientedEdge, Pass};

/// A closed walk using every edge once, with each vertex's two pass
/// positions recorded in tour order. Pass `k` sits after step `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    walk: ClosedWalk,
    occurrences: Vec<[usize; 2]>,
}

impl EulerTour {
    /// Wraps a walk that must cover every edge of `g` exactly once.
    pub fn from_walk(walk: ClosedWalk, g: &XGraph) -> Result<EulerTour> {
        walk.check(g)?;
        if walk.len() != g.edge_count() {
            return Err(Error::Walk(format!(
                "walk has {} steps but the graph has {} edges",
                walk.len(),
                g.edge_count()
            )));
        }
        let mut occ = vec![Vec::with_capacity(2); g.vertex_count()];
        for (k, step) in walk.steps().iter().enumerate() {
            occ[step.head(g)].push(k);
        }
        let occurrences = occ
            .into_iter()
            .enumerate()
            .map(|(v, o)| match o[..] {
                [a, b] => Ok([a, b]),
                _ => Err(Error::Internal(format!(
                    "vertex {v} has {} passes in an Eulerian tour",
                    o.len()
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(EulerTour { walk, occurrences })
    }

    pub fn walk(&self) -> &ClosedWalk {
        &self.walk
    }

    pub fn steps(&self) -> &[OrientedEdge] {
        self.walk.steps()
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Pass positions of `v`, ascending.
    pub fn occurrences(&self, v: usize) -> [usize; 2] {
        self.occurrences[v]
    }

    pub fn all_occurrences(&self) -> &[[usize; 2]] {
        &self.occurrences
    }

    pub fn pass(&self, position: usize, g: &XGraph) -> Pass {
        let steps = self.steps();
        let arrive = steps[position];
        let leave = steps[(position + 1) % steps.len()];
        Pass {
            vertex: arrive.head(g),
            in_dart: arrive.arrival(),
            out_dart: leave.departure(),
        }
    }

    pub fn passes(&self, g: &XGraph) -> Vec<Pass> {
        passes_unchecked(self.steps(), g)
    }

    /// Steps strictly after pass `from` up to and including the arrival at
    /// pass `to`, wrapping around the tour.
    pub fn segment(&self, from: usize, to: usize) -> Vec<OrientedEdge> {
        let n = self.len();
        let count = (to + n - from) % n;
        let count = if count == 0 { n } else { count };
        (1..=count).map(|i| self.steps()[(from + i) % n]).collect()
    }

    /// `t <steps> # v:(in>out in>out) ...` diagnostic line.
    pub fn dump(&self, g: &XGraph) -> String {
        self.dump_relabeled(g, |v| v, |e| e)
    }

    /// [`EulerTour::dump`] with vertex and edge ids passed through maps, for
    /// tours of a component printed in the ids of the whole graph.
    pub fn dump_relabeled(
        &self,
        g: &XGraph,
        vertex: impl Fn(usize) -> usize,
        edge: impl Fn(usize) -> usize,
    ) -> String {
        let dart = |d: Dart| Dart::new(edge(d.edge), d.end);
        let mut line = String::from("t");
        for s in self.steps() {
            let _ = write!(line, " {}{}", if s.forward { '+' } else { '-' }, edge(s.edge));
        }
        line.push_str(" #");
        let mut order: Vec<usize> = (0..self.occurrences.len()).collect();
        order.sort_by_key(|&v| vertex(v));
        for v in order {
            let [a, b] = self.occurrences[v];
            let (pa, pb) = (self.pass(a, g), self.pass(b, g));
            let _ = write!(
                line,
                " {}:({}>{} {}>{})",
                vertex(v),
                dart(pa.in_dart),
                dart(pa.out_dart),
                dart(pb.in_dart),
                dart(pb.out_dart)
            );
        }
        line
    }
}

fn opposite_unused(g: &XGraph, used: &[bool], arrival: Dart) -> Option<Dart> {
    let v = g.dart_vertex(arrival);
    let label = g.pair_label(arrival);
    g.darts_at(v)
        .into_iter()
        .find(|&d| g.pair_label(d) != label && !used[d.index()])
}

/// Walks from the vertex of `start`, leaving through `start` and switching
/// pairs at every vertex, until no unused dart of the other pair remains.
fn turning_trail(g: &XGraph, used: &mut [bool], start: Dart) -> Vec<OrientedEdge> {
    let mut trail = Vec::new();
    let mut leave = start;
    loop {
        let step = OrientedEdge::leaving(leave);
        used[leave.index()] = true;
        used[leave.companion().index()] = true;
        trail.push(step);
        match opposite_unused(g, used, step.arrival()) {
            Some(d) => leave = d,
            None => return trail,
        }
    }
}

/// Builds a turning Eulerian tour of a connected X-graph.
///
/// Starts at vertex 0 through its smallest dart; always leaves through the
/// smaller unused dart of the other pair. The first vertex along the tour
/// that still has unused darts gets a new turning trail spliced in, which
/// re-pairs that vertex's passes and keeps every pass turning.
pub fn turning_euler_tour(g: &XGraph) -> Result<EulerTour> {
    if g.vertex_count() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let mut used = vec![false; 2 * g.edge_count()];
    let start = g.darts_at(0)[0];
    let mut tour = turning_trail(g, &mut used, start);
    let last = *tour.last().expect("trail has at least one step");
    if last.head(g) != 0 || g.same_pair(last.arrival(), start) {
        return Err(Error::Internal(
            "turning trail did not close with a turning pass".into(),
        ));
    }
    let mut i = 0;
    while i < tour.len() {
        let arrive = tour[i];
        if let Some(d) = opposite_unused(g, &used, arrive.arrival()) {
            let b = arrive.head(g);
            let sub = turning_trail(g, &mut used, d);
            let end = *sub.last().expect("trail has at least one step");
            let resume = tour[(i + 1) % tour.len()].departure();
            if end.head(g) != b || g.same_pair(end.arrival(), resume) {
                return Err(Error::Internal(format!(
                    "spliced trail at vertex {b} did not close with a turning pass"
                )));
            }
            tour.splice(i + 1..i + 1, sub);
        }
        i += 1;
    }
    if tour.len() != g.edge_count() {
        return Err(Error::Disconnected);
    }
    EulerTour::from_walk(ClosedWalk::new(tour)?, g)
}

pub fn is_turning(t: &EulerTour, g: &XGraph) -> bool {
    t.passes(g).iter().all(|p| p.turns(g))
}

/// Smallest vertex whose two arrivals use different pairs, if any.
pub fn strong_turning_violation(t: &EulerTour, g: &XGraph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| {
        let [a, b] = t.occurrences(v);
        !g.same_pair(t.steps()[a].arrival(), t.steps()[b].arrival())
    })
}

/// The two halves of a tour cut at a strong-turning violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub vertex: usize,
    pub walk1: ClosedWalk,
    pub walk2: ClosedWalk,
}

/// Cuts `t` at violation vertex `a`: the first walk runs from `a`'s first
/// departure to its second arrival, the second walk is the rest.
pub fn split_at_violation(t: &EulerTour, a: usize, g: &XGraph) -> Result<SplitCertificate> {
    if a >= g.vertex_count() {
        return Err(Error::Precondition(format!("vertex {a} does not exist")));
    }
    if !is_turning(t, g) {
        return Err(Error::Precondition("tour is not turning".into()));
    }
    let [p1, p2] = t.occurrences(a);
    let steps = t.steps();
    if g.same_pair(steps[p1].arrival(), steps[p2].arrival()) {
        return Err(Error::Precondition(format!(
            "vertex {a} is not a strong-turning violation"
        )));
    }
    let walk1 = ClosedWalk::new(steps[p1 + 1..=p2].to_vec())?;
    let walk2 = ClosedWalk::new(t.segment(p2, p1))?;
    let report = verify_forbidden_pair(&walk1, &walk2, g);
    if !report.valid || report.crossing_vertex() != Some(a) {
        return Err(Error::Internal(format!(
            "split at vertex {a} failed verification: {:?}",
            report.failure
        )));
    }
    Ok(SplitCertificate {
        vertex: a,
        walk1,
        walk2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{curve_walk, from_gauss_code, parse_word};

    fn fig8_loop() -> XGraph {
        XGraph::from_edges(
            1,
            &[(0, 0), (0, 0)],
            vec![[[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]]],
        )
        .unwrap()
    }

    fn fig8_pass() -> XGraph {
        from_gauss_code(&parse_word("a a")).unwrap()
    }

    #[test]
    fn fig8_loop_tour() {
        let g = fig8_loop();
        let t = turning_euler_tour(&g).unwrap();
        assert_eq!(
            t.steps(),
            &[OrientedEdge::forward(0), OrientedEdge::forward(1)]
        );
        assert!(is_turning(&t, &g));
        assert_eq!(strong_turning_violation(&t, &g), Some(0));
    }

    #[test]
    fn fig8_pass_tour() {
        let g = fig8_pass();
        let t = turning_euler_tour(&g).unwrap();
        assert_eq!(
            t.steps(),
            &[OrientedEdge::forward(0), OrientedEdge::backward(1)]
        );
        assert!(is_turning(&t, &g));
        assert_eq!(strong_turning_violation(&t, &g), None);
    }

    #[test]
    fn trefoil_tour_is_turning() {
        let g = from_gauss_code(&parse_word("a b c a b c")).unwrap();
        let t = turning_euler_tour(&g).unwrap();
        assert_eq!(t.len(), 6);
        assert!(is_turning(&t, &g));
    }

    #[test]
    fn straight_curve_tour_is_not_turning() {
        let g = from_gauss_code(&parse_word("a b a b")).unwrap();
        let t = EulerTour::from_walk(curve_walk(4).unwrap(), &g).unwrap();
        assert!(!is_turning(&t, &g));
    }

    #[test]
    fn split_fig8_loop() {
        let g = fig8_loop();
        let t = turning_euler_tour(&g).unwrap();
        let c = split_at_violation(&t, 0, &g).unwrap();
        assert_eq!(c.walk1.steps(), &[OrientedEdge::forward(1)]);
        assert_eq!(c.walk2.steps(), &[OrientedEdge::forward(0)]);
    }

    #[test]
    fn split_rejects_non_violation() {
        let g = fig8_pass();
        let t = turning_euler_tour(&g).unwrap();
        assert!(matches!(
            split_at_violation(&t, 0, &g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = XGraph::from_edges(
            2,
            &[(0, 0), (0, 0), (1, 1), (1, 1)],
            vec![
                [[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]],
                [[Dart::s(2), Dart::t(2)], [Dart::s(3), Dart::t(3)]],
            ],
        )
        .unwrap();
        assert_eq!(turning_euler_tour(&g), Err(Error::Disconnected));
    }

    #[test]
    fn segment_wraps() {
        let g = from_gauss_code(&parse_word("a b a b")).unwrap();
        let t = EulerTour::from_walk(curve_walk(4).unwrap(), &g).unwrap();
        assert_eq!(
            t.segment(2, 0),
            vec![OrientedEdge::forward(3), OrientedEdge::forward(0)]
        );
        assert_eq!(t.segment(0, 1), vec![OrientedEdge::forward(1)]);
    }
}
