//! Dart-level model of X-graphs.
//!
//! An X-graph is a 4-regular multigraph (loops and parallel edges allowed)
//! where the four darts at every vertex are split into two pairs. Every
//! algorithm in this crate only looks at the partition, never at which pair
//! carries which label.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Which end of an edge a dart sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    /// The tail end.
    S,
    /// The head end.
    T,
}

impl End {
    pub fn flip(self) -> End {
        match self {
            End::S => End::T,
            End::T => End::S,
        }
    }
}

/// A half-edge: an edge together with one of its two ends.
///
/// The two darts of a loop sit at the same vertex and are still distinct.
/// Darts order by `(edge, end)` with `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: usize,
    pub end: End,
}

impl Dart {
    pub const fn new(edge: usize, end: End) -> Self {
        Dart { edge, end }
    }

    pub const fn s(edge: usize) -> Self {
        Dart { edge, end: End::S }
    }

    pub const fn t(edge: usize) -> Self {
        Dart { edge, end: End::T }
    }

    /// The dart at the other end of the same edge.
    pub fn companion(self) -> Dart {
        Dart {
            edge: self.edge,
            end: self.end.flip(),
        }
    }

    /// Dense index `2 * edge + end`, used for flat lookup tables.
    pub fn index(self) -> usize {
        2 * self.edge + usize::from(self.end == End::T)
    }

    pub fn from_index(index: usize) -> Dart {
        Dart {
            edge: index / 2,
            end: if index % 2 == 0 { End::S } else { End::T },
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = match self.end {
            End::S => 's',
            End::T => 't',
        };
        write!(f, "{}.{}", self.edge, end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Unchecked X-graph data, as read from a file or assembled by hand.
///
/// Nothing here is guaranteed to be consistent; run [`validate`] or convert
/// with [`XGraph::try_from`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawXGraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    /// Per vertex, the two declared pairs (`None` when no pairing was given).
    pub pairing: Vec<Option<[Vec<Dart>; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EndpointOutOfRange { edge: usize },
    Degree { vertex: usize, degree: usize },
    MissingPairing { vertex: usize },
    PairSizes { vertex: usize },
    PairOverlap { vertex: usize },
    UnknownDart { vertex: usize, dart: Dart },
    ForeignDart { vertex: usize, dart: Dart },
    PairingCount { declared: usize, vertices: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EndpointOutOfRange { edge } => {
                write!(f, "edge {edge}: edge endpoint out of range")
            }
            Violation::Degree { vertex, degree } => {
                write!(f, "vertex {vertex}: vertex degree {degree} \u{2260} 4")
            }
            Violation::MissingPairing { vertex } => write!(f, "vertex {vertex}: missing pairing"),
            Violation::PairSizes { vertex } => {
                write!(f, "vertex {vertex}: pair sizes must be 2 and 2")
            }
            Violation::PairOverlap { vertex } => write!(f, "vertex {vertex}: pairs overlap"),
            Violation::UnknownDart { vertex, dart } => {
                write!(f, "vertex {vertex}: dart {dart} names an undeclared edge")
            }
            Violation::ForeignDart { vertex, dart } => {
                write!(f, "vertex {vertex}: dart {dart} is not incident to this vertex")
            }
            Violation::PairingCount { declared, vertices } => write!(
                f,
                "pairing declared for {declared} vertices but the graph has {vertices}"
            ),
        }
    }
}

/// Checks every X-graph invariant; an empty list means the data is valid.
pub fn validate(raw: &RawXGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = raw.vertex_count;
    let mut degree = vec![0usize; n];
    let mut endpoints_ok = true;
    for (e, edge) in raw.edges.iter().enumerate() {
        if edge.tail >= n || edge.head >= n {
            out.push(Violation::EndpointOutOfRange { edge: e });
            endpoints_ok = false;
            continue;
        }
        degree[edge.tail] += 1;
        degree[edge.head] += 1;
    }
    for (v, &d) in degree.iter().enumerate() {
        if d != 4 {
            out.push(Violation::Degree { vertex: v, degree: d });
        }
    }
    if raw.pairing.len() != n {
        out.push(Violation::PairingCount {
            declared: raw.pairing.len(),
            vertices: n,
        });
    }
    let dart_vertex = |d: Dart| -> Option<usize> {
        raw.edges.get(d.edge).map(|e| match d.end {
            End::S => e.tail,
            End::T => e.head,
        })
    };
    for (v, pairs) in raw.pairing.iter().enumerate().take(n) {
        let Some(pairs) = pairs else {
            out.push(Violation::MissingPairing { vertex: v });
            continue;
        };
        if pairs[0].len() != 2 || pairs[1].len() != 2 {
            out.push(Violation::PairSizes { vertex: v });
        }
        let mut all: Vec<Dart> = pairs.iter().flatten().copied().collect();
        for &d in &all {
            match dart_vertex(d) {
                None => out.push(Violation::UnknownDart { vertex: v, dart: d }),
                Some(w) if endpoints_ok && w != v => {
                    out.push(Violation::ForeignDart { vertex: v, dart: d })
                }
                _ => {}
            }
        }
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::PairOverlap { vertex: v });
        }
    }
    out
}

/// A validated X-graph.
///
/// Pairs are stored canonically: each pair sorted, and the pair holding the
/// smaller dart comes first (label 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    pairs: Vec<[[Dart; 2]; 2]>,
    label: Vec<u8>,
    darts_at: Vec<[Dart; 4]>,
}

impl XGraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        pairing: Vec<[[Dart; 2]; 2]>,
    ) -> Result<XGraph> {
        XGraph::try_from(RawXGraph {
            vertex_count,
            edges,
            pairing: pairing
                .into_iter()
                .map(|[a, b]| Some([a.to_vec(), b.to_vec()]))
                .collect(),
        })
    }

    /// Convenience constructor from `(tail, head)` tuples.
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
        pairing: Vec<[[Dart; 2]; 2]>,
    ) -> Result<XGraph> {
        let edges = edges
            .iter()
            .map(|&(tail, head)| Edge { tail, head })
            .collect();
        XGraph::new(vertex_count, edges, pairing)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    pub fn dart_vertex(&self, d: Dart) -> usize {
        let e = self.edges[d.edge];
        match d.end {
            End::S => e.tail,
            End::T => e.head,
        }
    }

    /// Pair label (0 or 1) of a dart at its vertex.
    pub fn pair_label(&self, d: Dart) -> u8 {
        self.label[d.index()]
    }

    pub fn same_pair(&self, a: Dart, b: Dart) -> bool {
        self.pair_label(a) == self.pair_label(b)
    }

    pub fn pairs(&self, v: usize) -> [[Dart; 2]; 2] {
        self.pairs[v]
    }

    /// The four darts at `v`, ascending.
    pub fn darts_at(&self, v: usize) -> [Dart; 4] {
        self.darts_at[v]
    }

    pub fn to_raw(&self) -> RawXGraph {
        RawXGraph {
            vertex_count: self.vertex_count,
            edges: self.edges.clone(),
            pairing: self
                .pairs
                .iter()
                .map(|[a, b]| Some([a.to_vec(), b.to_vec()]))
                .collect(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(&self.to_raw())
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || components_of(self).iter().all(|&c| c == 0)
    }
}

impl TryFrom<RawXGraph> for XGraph {
    type Error = Error;

    fn try_from(raw: RawXGraph) -> Result<XGraph> {
        let violations = validate(&raw);
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        let n = raw.vertex_count;
        let mut label = vec![0u8; 2 * raw.edges.len()];
        let mut pairs = Vec::with_capacity(n);
        let mut darts_at = Vec::with_capacity(n);
        for p in raw.pairing.into_iter().flatten() {
            let mut a = [p[0][0], p[0][1]];
            let mut b = [p[1][0], p[1][1]];
            a.sort();
            b.sort();
            if b[0] < a[0] {
                std::mem::swap(&mut a, &mut b);
            }
            for d in a {
                label[d.index()] = 0;
            }
            for d in b {
                label[d.index()] = 1;
            }
            let mut all = [a[0], a[1], b[0], b[1]];
            all.sort();
            pairs.push([a, b]);
            darts_at.push(all);
        }
        Ok(XGraph {
            vertex_count: n,
            edges: raw.edges,
            pairs,
            label,
            darts_at,
        })
    }
}

/// One connected component, relabeled densely, with maps back to the
/// original ids (`vertices[local] = global`, likewise for edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: XGraph,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Component {
    pub fn global_dart(&self, d: Dart) -> Dart {
        Dart::new(self.edges[d.edge], d.end)
    }
}

fn components_of(g: &XGraph) -> Vec<usize> {
    let n = g.vertex_count;
    let mut adj = vec![Vec::new(); n];
    for e in &g.edges {
        adj[e.tail].push(e.head);
        adj[e.head].push(e.tail);
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Splits `g` into connected components, ordered by their smallest vertex.
/// Ids inside a component keep the relative order of the original ids.
pub fn components(g: &XGraph) -> Vec<Component> {
    let comp = components_of(g);
    let count = comp.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut vertices = vec![Vec::new(); count];
    let mut local_v = vec![0usize; g.vertex_count];
    for (v, &c) in comp.iter().enumerate() {
        local_v[v] = vertices[c].len();
        vertices[c].push(v);
    }
    let mut edges = vec![Vec::new(); count];
    let mut local_e = vec![0usize; g.edges.len()];
    for (e, edge) in g.edges.iter().enumerate() {
        let c = comp[edge.tail];
        local_e[e] = edges[c].len();
        edges[c].push(e);
    }
    vertices
        .into_iter()
        .zip(edges)
        .map(|(vs, es)| {
            let local = |d: Dart| Dart::new(local_e[d.edge], d.end);
            let sub_edges = es
                .iter()
                .map(|&e| Edge {
                    tail: local_v[g.edges[e].tail],
                    head: local_v[g.edges[e].head],
                })
                .collect();
            let pairing = vs
                .iter()
                .map(|&v| {
                    let [a, b] = g.pairs[v];
                    [[local(a[0]), local(a[1])], [local(b[0]), local(b[1])]]
                })
                .collect();
            let graph = XGraph::new(vs.len(), sub_edges, pairing)
                .expect("a component of a valid X-graph is valid");
            Component {
                graph,
                vertices: vs,
                edges: es,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig8_loop() -> XGraph {
        XGraph::from_edges(
            1,
            &[(0, 0), (0, 0)],
            vec![[[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]]],
        )
        .unwrap()
    }

    #[test]
    fn fig8_loop_is_valid() {
        assert!(fig8_loop().validate().is_empty());
    }

    #[test]
    fn pair_sizes_violation() {
        let raw = RawXGraph {
            vertex_count: 1,
            edges: vec![Edge { tail: 0, head: 0 }, Edge { tail: 0, head: 0 }],
            pairing: vec![Some([
                vec![Dart::s(0)],
                vec![Dart::t(0), Dart::s(1), Dart::t(1)],
            ])],
        };
        assert_eq!(validate(&raw), vec![Violation::PairSizes { vertex: 0 }]);
        assert!(validate(&raw)[0]
            .to_string()
            .contains("pair sizes must be 2 and 2"));
    }

    #[test]
    fn endpoint_out_of_range() {
        let mut raw = fig8_loop().to_raw();
        raw.vertex_count = 3;
        raw.pairing.resize(3, None);
        raw.edges[1] = Edge { tail: 0, head: 7 };
        let v = validate(&raw);
        assert!(v.contains(&Violation::EndpointOutOfRange { edge: 1 }));
        assert!(v[0].to_string().contains("edge endpoint out of range"));
    }

    #[test]
    fn canonical_pair_order() {
        let g = XGraph::from_edges(
            1,
            &[(0, 0), (0, 0)],
            vec![[[Dart::t(0), Dart::s(1)], [Dart::t(1), Dart::s(0)]]],
        )
        .unwrap();
        assert_eq!(
            g.pairs(0),
            [[Dart::s(0), Dart::t(1)], [Dart::t(0), Dart::s(1)]]
        );
        assert!(g.same_pair(Dart::s(0), Dart::t(1)));
        assert!(!g.same_pair(Dart::s(0), Dart::t(0)));
    }

    #[test]
    fn components_of_disjoint_copies() {
        let d = |e, end| Dart::new(e, end);
        let g = XGraph::from_edges(
            2,
            &[(1, 1), (0, 0), (1, 1), (0, 0)],
            vec![
                [[d(1, End::S), d(1, End::T)], [d(3, End::S), d(3, End::T)]],
                [[d(0, End::S), d(0, End::T)], [d(2, End::S), d(2, End::T)]],
            ],
        )
        .unwrap();
        let cs = components(&g);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].vertices, vec![0]);
        assert_eq!(cs[0].edges, vec![1, 3]);
        assert_eq!(cs[1].edges, vec![0, 2]);
        for c in &cs {
            assert_eq!(c.graph, fig8_loop());
        }
        assert!(!g.is_connected());
    }

    #[test]
    fn empty_graph_has_no_components() {
        let g = XGraph::new(0, vec![], vec![]).unwrap();
        assert!(components(&g).is_empty());
        assert!(g.is_connected());
    }

    #[test]
    fn connected_graph_is_its_own_component() {
        let cs = components(&fig8_loop());
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].graph, fig8_loop());
    }
}
