//! Exponential ground-truth deciders and instance generators.
//!
//! The two deciders share no code with the main pipeline or with each other
//! beyond the graph model and the public checkers, so agreement between all
//! three is meaningful evidence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::{alternating_orders, count_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::gauss::from_gauss_code;
use crate::graph::{Dart, Edge, XGraph};
use crate::walk::{verify_forbidden_pair, ClosedWalk, OrientedEdge};

/// Hard vertex cap for [`oracle_rotations`].
pub const ROTATION_CAP: usize = 20;
/// Hard vertex cap for [`oracle_forbidden_pairs`].
pub const CYCLE_CAP: usize = 12;
/// Simple-cycle enumeration stops with an error beyond this many cycles.
pub const MAX_CYCLES: usize = 1_000_000;

/// Name of the generator behind [`random_xgraph`], for replay metadata.
pub const RNG_NAME: &str = "ChaCha8";

/// Searches all `2^V` alternating rotation systems for a planar one,
/// returning the first in mask order (bit `v` picks vertex `v`'s mirror).
pub fn oracle_rotations(g: &XGraph) -> Result<Option<RotationSystem>> {
    oracle_rotations_capped(g, ROTATION_CAP)
}

pub fn oracle_rotations_capped(g: &XGraph, cap: usize) -> Result<Option<RotationSystem>> {
    let n = g.vertex_count();
    if n > cap.min(ROTATION_CAP) {
        return Err(Error::CapExceeded {
            count: n,
            cap: cap.min(ROTATION_CAP),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let candidates: Vec<[[Dart; 4]; 2]> = (0..n).map(|v| alternating_orders(g, v)).collect();
    let darts = 2 * g.edge_count();
    let target = 2 + g.edge_count() - n;
    let mut next = vec![0usize; darts];
    let mut seen = vec![false; darts];
    let set = |next: &mut [usize], o: &[Dart; 4]| {
        for i in 0..4 {
            next[o[i].index()] = o[(i + 1) % 4].index();
        }
    };
    for c in &candidates {
        set(&mut next, &c[0]);
    }
    for mask in 0u64..(1u64 << n) {
        if mask > 0 {
            // Only vertices whose bit changed need rewriting.
            let changed = mask ^ (mask - 1);
            for (v, c) in candidates.iter().enumerate() {
                if changed >> v & 1 == 1 {
                    set(&mut next, &c[(mask >> v & 1) as usize]);
                }
            }
        }
        if count_faces(&next, &mut seen) == target {
            let order = (0..n)
                .map(|v| candidates[v][(mask >> v & 1) as usize])
                .collect();
            return RotationSystem::new(order, g).map(Some);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
struct SimpleCycle {
    steps: Vec<OrientedEdge>,
    edges: u64,
    vertices: u64,
    /// Vertices where this cycle's pass stays inside one pair.
    straight: u64,
}

/// Every vertex-simple cycle, found by dart-level depth-first search rooted
/// at the cycle's smallest vertex, deduplicated by edge set.
fn simple_cycles(g: &XGraph) -> Result<Vec<SimpleCycle>> {
    let n = g.vertex_count();
    let mut found: Vec<SimpleCycle> = Vec::new();
    let mut seen_sets = std::collections::HashSet::new();

    struct Dfs<'a> {
        g: &'a XGraph,
        root: usize,
        path: Vec<OrientedEdge>,
        visited: u64,
        used: u64,
    }

    fn go(
        s: &mut Dfs<'_>,
        at: usize,
        found: &mut Vec<SimpleCycle>,
        seen_sets: &mut std::collections::HashSet<u64>,
    ) -> Result<()> {
        for d in s.g.darts_at(at) {
            let step = OrientedEdge::leaving(d);
            if s.used >> step.edge & 1 == 1 {
                continue;
            }
            let w = step.head(s.g);
            if w == s.root {
                let edges = s.used | 1 << step.edge;
                if seen_sets.insert(edges) {
                    let mut steps = s.path.clone();
                    steps.push(step);
                    let mut straight = 0u64;
                    for k in 0..steps.len() {
                        let arrive = steps[k];
                        let leave = steps[(k + 1) % steps.len()];
                        if s.g.same_pair(arrive.arrival(), leave.departure()) {
                            straight |= 1 << arrive.head(s.g);
                        }
                    }
                    found.push(SimpleCycle {
                        steps,
                        edges,
                        vertices: s.visited,
                        straight,
                    });
                    if found.len() > MAX_CYCLES {
                        return Err(Error::CapExceeded {
                            count: found.len(),
                            cap: MAX_CYCLES,
                        });
                    }
                }
            } else if w > s.root && s.visited >> w & 1 == 0 {
                s.path.push(step);
                s.visited |= 1 << w;
                s.used |= 1 << step.edge;
                go(s, w, found, seen_sets)?;
                s.used &= !(1 << step.edge);
                s.visited &= !(1 << w);
                s.path.pop();
            }
        }
        Ok(())
    }

    for root in 0..n {
        let mut dfs = Dfs {
            g,
            root,
            path: Vec::new(),
            visited: 1 << root,
            used: 0,
        };
        go(&mut dfs, root, &mut found, &mut seen_sets)?;
    }
    Ok(found)
}

/// Finds two vertex-simple, edge-disjoint cycles with exactly one crossing
/// vertex, if any exist. The pair is re-verified by the public checker.
pub fn oracle_forbidden_pairs(g: &XGraph) -> Result<Option<(ClosedWalk, ClosedWalk)>> {
    oracle_forbidden_pairs_capped(g, CYCLE_CAP)
}

pub fn oracle_forbidden_pairs_capped(
    g: &XGraph,
    cap: usize,
) -> Result<Option<(ClosedWalk, ClosedWalk)>> {
    let cap = cap.min(CYCLE_CAP);
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            count: g.vertex_count(),
            cap,
        });
    }
    let cycles = simple_cycles(g)?;
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if a.edges & b.edges != 0 {
                continue;
            }
            let crossing = a.vertices & b.vertices & a.straight;
            if crossing.count_ones() == 1 {
                let w1 = ClosedWalk::new(a.steps.clone())?;
                let w2 = ClosedWalk::new(b.steps.clone())?;
                let report = verify_forbidden_pair(&w1, &w2, g);
                if !report.valid {
                    return Err(Error::Internal(format!(
                        "oracle pair rejected by checker: {:?}",
                        report.failure
                    )));
                }
                return Ok(Some((w1, w2)));
            }
        }
    }
    Ok(None)
}

/// Number of simple cycles (exposed for diagnostics).
pub fn simple_cycle_count(g: &XGraph) -> Result<usize> {
    if g.vertex_count() > CYCLE_CAP {
        return Err(Error::CapExceeded {
            count: g.vertex_count(),
            cap: CYCLE_CAP,
        });
    }
    Ok(simple_cycles(g)?.len())
}

/// The three ways to split four darts into two pairs.
pub fn partitions(darts: [Dart; 4]) -> [[[Dart; 2]; 2]; 3] {
    let [a, b, c, d] = darts;
    [[[a, b], [c, d]], [[a, c], [b, d]], [[a, d], [b, c]]]
}

/// Every connected 4-regular multigraph on `1..=max_vertices` vertices, with
/// every pairing choice at every vertex. Graphs are listed by loop counts and
/// edge multiplicities; edges run from the smaller to the larger endpoint in
/// lexicographic order.
pub fn enumerate_small_xgraphs(max_vertices: usize) -> Result<Vec<XGraph>> {
    if max_vertices > 4 {
        return Err(Error::CapExceeded {
            count: max_vertices,
            cap: 4,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        // slots: (u, v) with u <= v in lexicographic order
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut counts = vec![0usize; slots.len()];
        let mut degree = vec![0usize; n];
        multigraphs(&slots, 0, &mut counts, &mut degree, &mut |counts| {
            let edges: Vec<Edge> = slots
                .iter()
                .zip(counts)
                .flat_map(|(&(u, v), &c)| std::iter::repeat(Edge { tail: u, head: v }).take(c))
                .collect();
            if let Some(base) = connected_base(n, &edges) {
                let choices: Vec<[[[Dart; 2]; 2]; 3]> =
                    (0..n).map(|v| partitions(base.darts_at(v))).collect();
                let total = 3usize.pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let pairing = (0..n)
                        .map(|v| {
                            let p = choices[v][c % 3];
                            c /= 3;
                            p
                        })
                        .collect();
                    out.push(
                        XGraph::new(n, edges.clone(), pairing)
                            .expect("enumerated pairings are valid"),
                    );
                }
            }
        });
    }
    Ok(out)
}

fn multigraphs(
    slots: &[(usize, usize)],
    i: usize,
    counts: &mut Vec<usize>,
    degree: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if i == slots.len() {
        if degree.iter().all(|&d| d == 4) {
            emit(counts);
        }
        return;
    }
    let (u, v) = slots[i];
    let per_edge = if u == v { 2 } else { 1 };
    let mut c = 0;
    loop {
        let fits = if u == v {
            degree[u] + 2 * c <= 4
        } else {
            degree[u] + c <= 4 && degree[v] + c <= 4
        };
        if !fits {
            break;
        }
        counts[i] = c;
        if u == v {
            degree[u] += per_edge * c;
        } else {
            degree[u] += c;
            degree[v] += c;
        }
        multigraphs(slots, i + 1, counts, degree, emit);
        if u == v {
            degree[u] -= per_edge * c;
        } else {
            degree[u] -= c;
            degree[v] -= c;
        }
        c += 1;
    }
    counts[i] = 0;
}

/// The multigraph with an arbitrary pairing, if connected; used only to read
/// off dart sets.
fn connected_base(n: usize, edges: &[Edge]) -> Option<XGraph> {
    let mut at: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for (e, edge) in edges.iter().enumerate() {
        at[edge.tail].push(Dart::s(e));
        at[edge.head].push(Dart::t(e));
    }
    let pairing = at.iter().map(|d| [[d[0], d[1]], [d[2], d[3]]]).collect();
    let g = XGraph::new(n, edges.to_vec(), pairing).ok()?;
    g.is_connected().then_some(g)
}

/// Uniformly random double-occurrence word on `letters` symbols.
pub fn random_word(letters: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut word: Vec<usize> = (0..letters).flat_map(|s| [s, s]).collect();
    word.shuffle(rng);
    word
}

/// Deterministic random X-graph: a random curve's Gauss-code graph, with
/// each vertex's pairing optionally redrawn from its three partitions.
pub fn random_xgraph(letters: usize, seed: u64, shuffle_pairings: bool) -> Result<XGraph> {
    if letters == 0 {
        return Err(Error::Precondition("at least one letter is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = random_word(letters, &mut rng);
    let g = from_gauss_code(&word)?;
    if !shuffle_pairings {
        return Ok(g);
    }
    let pairing = (0..g.vertex_count())
        .map(|v| partitions(g.darts_at(v))[rng.gen_range(0..3)])
        .collect();
    XGraph::new(g.vertex_count(), g.edges().to_vec(), pairing)
}
