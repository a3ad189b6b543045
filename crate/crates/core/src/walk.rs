//! Closed walks, passes through vertices, and the forbidden-pair checker.
//!
//! Every other module hands its certificates to [`verify_forbidden_pair`];
//! nothing downstream trusts a certificate that has not gone through it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Dart, XGraph};

/// An edge traversed in one direction. `forward` means tail to head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub edge: usize,
    pub forward: bool,
}

impl OrientedEdge {
    pub const fn forward(edge: usize) -> Self {
        OrientedEdge {
            edge,
            forward: true,
        }
    }

    pub const fn backward(edge: usize) -> Self {
        OrientedEdge {
            edge,
            forward: false,
        }
    }

    /// The step that leaves through dart `d`.
    pub fn leaving(d: Dart) -> Self {
        OrientedEdge {
            edge: d.edge,
            forward: d.end == crate::graph::End::S,
        }
    }

    pub fn reversed(self) -> Self {
        OrientedEdge {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    pub fn departure(self) -> Dart {
        if self.forward {
            Dart::s(self.edge)
        } else {
            Dart::t(self.edge)
        }
    }

    pub fn arrival(self) -> Dart {
        self.departure().companion()
    }

    pub fn tail(self, g: &XGraph) -> usize {
        g.dart_vertex(self.departure())
    }

    pub fn head(self, g: &XGraph) -> usize {
        g.dart_vertex(self.arrival())
    }
}

impl fmt::Display for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.forward { '+' } else { '-' };
        write!(f, "{sign}{}", self.edge)
    }
}

/// A cyclic sequence of oriented edges.
///
/// Construction only rejects the empty sequence; incidence and edge
/// repetition depend on the graph and are checked by [`ClosedWalk::check`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedWalk {
    steps: Vec<OrientedEdge>,
}

impl ClosedWalk {
    pub fn new(steps: Vec<OrientedEdge>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Walk("empty walk".into()));
        }
        Ok(ClosedWalk { steps })
    }

    pub fn steps(&self) -> &[OrientedEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn reversed(&self) -> ClosedWalk {
        ClosedWalk {
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.steps.iter().map(|s| s.edge).collect()
    }

    /// Checks the walk against `g`: edges exist, consecutive steps meet,
    /// and no edge repeats.
    pub fn check(&self, g: &XGraph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for s in &self.steps {
            if s.edge >= g.edge_count() {
                return Err(Error::Walk(format!("edge {} does not exist", s.edge)));
            }
            if !seen.insert(s.edge) {
                return Err(Error::Walk(format!("edge {} repeats", s.edge)));
            }
        }
        for (i, s) in self.steps.iter().enumerate() {
            let next = self.steps[(i + 1) % self.steps.len()];
            if s.head(g) != next.tail(g) {
                return Err(Error::Walk(format!(
                    "step {i} ends at vertex {} but step {} starts at vertex {}",
                    s.head(g),
                    (i + 1) % self.steps.len(),
                    next.tail(g)
                )));
            }
        }
        Ok(())
    }

    /// Vertices in visiting order (the tail of each step).
    pub fn vertices(&self, g: &XGraph) -> Vec<usize> {
        self.steps.iter().map(|s| s.tail(g)).collect()
    }

    /// True when no vertex is visited twice.
    pub fn is_vertex_simple(&self, g: &XGraph) -> bool {
        let mut seen = BTreeSet::new();
        self.vertices(g).into_iter().all(|v| seen.insert(v))
    }
}

impl fmt::Display for ClosedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A transit of a walk through a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub vertex: usize,
    pub in_dart: Dart,
    pub out_dart: Dart,
}

impl Pass {
    /// A pass turns when it switches between the two pairs.
    pub fn turns(&self, g: &XGraph) -> bool {
        !g.same_pair(self.in_dart, self.out_dart)
    }
}

/// Pass `k` joins the arrival of step `k` to the departure of step `k + 1`.
pub fn passes(w: &ClosedWalk, g: &XGraph) -> Result<Vec<Pass>> {
    w.check(g)?;
    Ok(passes_unchecked(w.steps(), g))
}

pub(crate) fn passes_unchecked(steps: &[OrientedEdge], g: &XGraph) -> Vec<Pass> {
    (0..steps.len())
        .map(|k| {
            let arrive = steps[k];
            let leave = steps[(k + 1) % steps.len()];
            Pass {
                vertex: arrive.head(g),
                in_dart: arrive.arrival(),
                out_dart: leave.departure(),
            }
        })
        .collect()
}

/// Common vertices of two edge-disjoint walks where the first walk's pass
/// stays inside one pair (and so the second walk's pass uses the other).
pub fn crossing_vertices(w1: &ClosedWalk, w2: &ClosedWalk, g: &XGraph) -> Result<BTreeSet<usize>> {
    let p1 = passes(w1, g)?;
    let p2 = passes(w2, g)?;
    if !w1.edge_set().is_disjoint(&w2.edge_set()) {
        return Err(Error::Walk("walks are not edge-disjoint".into()));
    }
    // Four darts per vertex: an edge-disjoint partner forces one pass each.
    let first: BTreeMap<usize, Pass> = p1.into_iter().map(|p| (p.vertex, p)).collect();
    Ok(p2
        .iter()
        .filter_map(|q| first.get(&q.vertex))
        .filter(|p| !p.turns(g))
        .map(|p| p.vertex)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub walk1: ClosedWalk,
    pub walk2: ClosedWalk,
    pub crossing: BTreeSet<usize>,
    pub valid: bool,
    pub failure: Option<String>,
}

impl CertificateReport {
    /// The unique crossing vertex of a valid certificate.
    pub fn crossing_vertex(&self) -> Option<usize> {
        if self.valid {
            self.crossing.iter().next().copied()
        } else {
            None
        }
    }
}

/// Total checker: valid iff both walks are well formed, edge-disjoint, and
/// meet in exactly one crossing vertex.
pub fn verify_forbidden_pair(w1: &ClosedWalk, w2: &ClosedWalk, g: &XGraph) -> CertificateReport {
    let mut report = CertificateReport {
        walk1: w1.clone(),
        walk2: w2.clone(),
        crossing: BTreeSet::new(),
        valid: false,
        failure: None,
    };
    for (name, w) in [("first", w1), ("second", w2)] {
        if let Err(e) = w.check(g) {
            report.failure = Some(format!("{name} walk malformed: {e}"));
            return report;
        }
    }
    if !w1.edge_set().is_disjoint(&w2.edge_set()) {
        report.failure = Some("not edge-disjoint".into());
        return report;
    }
    match crossing_vertices(w1, w2, g) {
        Ok(c) => report.crossing = c,
        Err(e) => {
            report.failure = Some(e.to_string());
            return report;
        }
    }
    if report.crossing.len() == 1 {
        report.valid = true;
    } else {
        report.failure = Some(format!(
            "expected exactly one crossing vertex, found {}",
            report.crossing.len()
        ));
    }
    report
}

/// Shortest path from `from` to `to` over `edges`, never stepping on `avoid`
/// except as the target.
fn shortest_path(
    edges: &[usize],
    from: usize,
    to: usize,
    avoid: usize,
    g: &XGraph,
) -> Option<Vec<OrientedEdge>> {
    let mut adj: BTreeMap<usize, Vec<OrientedEdge>> = BTreeMap::new();
    for &e in edges {
        for step in [OrientedEdge::forward(e), OrientedEdge::backward(e)] {
            adj.entry(step.tail(g)).or_default().push(step);
        }
    }
    let mut parent: BTreeMap<usize, OrientedEdge> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    'bfs: while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &step in adj.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
            let v = step.head(g);
            if seen.insert(v) {
                parent.insert(v, step);
                if v == to {
                    break 'bfs;
                }
                if v != avoid {
                    queue.push_back(v);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let step = *parent.get(&v)?;
        path.push(step);
        v = step.tail(g);
    }
    path.reverse();
    Some(path)
}

/// A vertex-simple cycle through `anchor` built from edges of `w`.
///
/// When `w` passes the anchor once, the result keeps that pass and closes it
/// with a shortest path through the remaining edges, so its darts at every
/// vertex are darts `w` already used there. Otherwise it prefers a loop at
/// the anchor, then the first step leaving the anchor plus a shortest path
/// back.
pub fn simplify_cycle(w: &ClosedWalk, anchor: usize, g: &XGraph) -> Result<ClosedWalk> {
    w.check(g)?;
    let visits: Vec<usize> = (0..w.len()).filter(|&k| w.steps[k].head(g) == anchor).collect();
    if visits.is_empty() {
        return Err(Error::Walk(format!("walk does not visit vertex {anchor}")));
    }
    if w.is_vertex_simple(g) {
        return Ok(w.clone());
    }
    let others = |skip: &[usize]| -> Vec<usize> {
        w.edge_set().into_iter().filter(|e| !skip.contains(e)).collect()
    };
    if let [k] = visits[..] {
        let arrive = w.steps[k];
        let leave = w.steps[(k + 1) % w.len()];
        let path = shortest_path(&others(&[arrive.edge, leave.edge]), leave.head(g), arrive.tail(g), anchor, g)
            .ok_or_else(|| Error::Internal(format!("no simple cycle keeps the pass at vertex {anchor}")))?;
        let mut steps = vec![leave];
        steps.extend(path);
        steps.push(arrive);
        let cycle = ClosedWalk::new(steps)?;
        debug_assert!(cycle.is_vertex_simple(g));
        return Ok(cycle);
    }
    if let Some(&lp) = w
        .steps
        .iter()
        .find(|s| s.tail(g) == anchor && g.edge(s.edge).is_loop())
    {
        return ClosedWalk::new(vec![lp]);
    }
    let first = *w
        .steps
        .iter()
        .find(|s| s.tail(g) == anchor)
        .expect("a closed walk visiting the anchor leaves it");
    let path = shortest_path(&others(&[first.edge]), first.head(g), anchor, anchor, g)
        .ok_or_else(|| Error::Internal(format!("no cycle through vertex {anchor} in the walk's edge set")))?;
    let mut steps = vec![first];
    steps.extend(path);
    let cycle = ClosedWalk::new(steps)?;
    debug_assert!(cycle.is_vertex_simple(g));
    Ok(cycle)
}
