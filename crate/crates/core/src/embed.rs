//! Rotation systems, face tracing, and the chord-contraction embedding.

use crate::error::{Error, Result};
use crate::euler::{is_turning, strong_turning_violation, EulerTour};
use crate::graph::{Dart, XGraph};
use crate::interlace::{interlacement_graph, Coloring, Side};

/// Cyclic order of the four darts at every vertex (counter-clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<[Dart; 4]>,
}

impl RotationSystem {
    /// Checks that each vertex's order is a permutation of its darts.
    pub fn new(order: Vec<[Dart; 4]>, g: &XGraph) -> Result<Self> {
        if order.len() != g.vertex_count() {
            return Err(Error::Precondition(format!(
                "rotation covers {} vertices, graph has {}",
                order.len(),
                g.vertex_count()
            )));
        }
        for (v, o) in order.iter().enumerate() {
            let mut sorted = *o;
            sorted.sort();
            if sorted != g.darts_at(v) {
                return Err(Error::Precondition(format!(
                    "rotation at vertex {v} is not a permutation of its darts"
                )));
            }
        }
        Ok(RotationSystem { order })
    }

    pub fn at(&self, v: usize) -> [Dart; 4] {
        self.order[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    /// Order at `v` rotated to start from its smallest dart.
    pub fn canonical_at(&self, v: usize) -> [Dart; 4] {
        let o = self.order[v];
        let start = (0..4).min_by_key(|&i| o[i]).expect("four darts");
        std::array::from_fn(|i| o[(start + i) % 4])
    }

    /// Successor table indexed by [`Dart::index`].
    fn successor(&self, dart_count: usize) -> Vec<usize> {
        let mut next = vec![usize::MAX; dart_count];
        for o in &self.order {
            for i in 0..4 {
                next[o[i].index()] = o[(i + 1) % 4].index();
            }
        }
        next
    }
}

/// Whether pair labels read 1212 around every vertex.
pub fn is_alternating(g: &XGraph, r: &RotationSystem) -> bool {
    (0..g.vertex_count()).all(|v| {
        let o = r.at(v);
        (0..4).all(|i| !g.same_pair(o[i], o[(i + 1) % 4]))
    })
}

/// The two alternating cyclic orders at `v`, `(x1, y1, x2, y2)` and
/// `(x1, y2, x2, y1)`; they are mirror images of each other.
pub fn alternating_orders(g: &XGraph, v: usize) -> [[Dart; 4]; 2] {
    let [[x1, x2], [y1, y2]] = g.pairs(v);
    [[x1, y1, x2, y2], [x1, y2, x2, y1]]
}

/// Faces as cyclic dart sequences. Each dart lies on exactly one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
}

impl FaceSet {
    pub fn count(&self) -> usize {
        self.faces.len()
    }
}

/// Orbits of "cross the edge, then turn to the rotation successor",
/// starting each orbit at its smallest unvisited dart.
pub fn trace_faces(g: &XGraph, r: &RotationSystem) -> FaceSet {
    let darts = 2 * g.edge_count();
    let next = r.successor(darts);
    let mut seen = vec![false; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(Dart::from_index(d));
            d = next[d ^ 1];
        }
        faces.push(face);
    }
    FaceSet { faces }
}

/// Face count only; the hot path of the rotation oracle.
pub(crate) fn count_faces(next: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut count = 0;
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = next[d ^ 1];
        }
    }
    count
}

/// Euler characteristic `V - E + F` of the embedding (connected graphs).
pub fn euler_characteristic(g: &XGraph, faces: &FaceSet) -> i64 {
    g.vertex_count() as i64 - g.edge_count() as i64 + faces.count() as i64
}

/// `V - E + F = 2` on a connected graph.
pub fn is_planar_rotation(g: &XGraph, r: &RotationSystem) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(euler_characteristic(g, &trace_faces(g, r)) == 2)
}

/// Contracts each vertex's chord: with passes `a` then `b` in tour order,
/// inside vertices get `(a_in, a_out, b_in, b_out)` and outside vertices
/// `(a_in, b_out, b_in, a_out)`.
///
/// Requires a turning, strongly turning tour and a proper coloring of its
/// interlacement graph. The result is checked for alternation and by face
/// tracing; failure of either is an internal error.
pub fn rotation_from_tour(t: &EulerTour, col: &Coloring, g: &XGraph) -> Result<RotationSystem> {
    if !is_turning(t, g) {
        return Err(Error::Precondition("tour is not turning".into()));
    }
    if let Some(v) = strong_turning_violation(t, g) {
        return Err(Error::Precondition(format!(
            "tour is not strongly turning at vertex {v}"
        )));
    }
    if col.sides.len() != g.vertex_count() || !col.is_proper(&interlacement_graph(t)) {
        return Err(Error::Precondition(
            "coloring is not a proper two-coloring of the interlacement graph".into(),
        ));
    }
    let order = (0..g.vertex_count())
        .map(|v| {
            let [p, q] = t.occurrences(v);
            let (a, b) = (t.pass(p, g), t.pass(q, g));
            match col.side(v) {
                Side::Inside => [a.in_dart, a.out_dart, b.in_dart, b.out_dart],
                Side::Outside => [a.in_dart, b.out_dart, b.in_dart, a.out_dart],
            }
        })
        .collect();
    let r = RotationSystem::new(order, g)?;
    if !is_alternating(g, &r) {
        return Err(Error::Internal("contracted rotation does not alternate".into()));
    }
    let chi = euler_characteristic(g, &trace_faces(g, &r));
    if chi != 2 {
        return Err(Error::Internal(format!(
            "contracted rotation has Euler characteristic {chi}, expected 2"
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::turning_euler_tour;
    use crate::gauss::{from_gauss_code, parse_word};

    fn fig8_loop() -> XGraph {
        XGraph::from_edges(
            1,
            &[(0, 0), (0, 0)],
            vec![[[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]]],
        )
        .unwrap()
    }

    #[test]
    fn fig8_pass_contraction() {
        let g = from_gauss_code(&parse_word("a a")).unwrap();
        let t = turning_euler_tour(&g).unwrap();
        let col = Coloring {
            sides: vec![Side::Inside],
        };
        let r = rotation_from_tour(&t, &col, &g).unwrap();
        assert_eq!(r.at(0), [Dart::t(0), Dart::t(1), Dart::s(1), Dart::s(0)]);
        assert!(is_alternating(&g, &r));
        let faces = trace_faces(&g, &r);
        assert_eq!(faces.count(), 3);
        assert!(is_planar_rotation(&g, &r).unwrap());
    }

    #[test]
    fn fig8_loop_has_no_planar_alternating_rotation() {
        let g = fig8_loop();
        for order in alternating_orders(&g, 0) {
            let r = RotationSystem::new(vec![order], &g).unwrap();
            assert!(is_alternating(&g, &r));
            assert!(!is_planar_rotation(&g, &r).unwrap());
        }
        // the plain figure-eight drawing is planar but reads 1122
        let r = RotationSystem::new(vec![[Dart::s(0), Dart::t(0), Dart::s(1), Dart::t(1)]], &g).unwrap();
        assert!(is_planar_rotation(&g, &r).unwrap());
        assert!(!is_alternating(&g, &r));
    }

    #[test]
    fn two_letter_curve_has_no_planar_alternating_rotation() {
        let g = from_gauss_code(&parse_word("a b a b")).unwrap();
        for mask in 0..4usize {
            let order = (0..2).map(|v| alternating_orders(&g, v)[(mask >> v) & 1]).collect();
            let r = RotationSystem::new(order, &g).unwrap();
            assert!(!is_planar_rotation(&g, &r).unwrap());
        }
    }

    #[test]
    fn face_parity_matches_euler() {
        let g = from_gauss_code(&parse_word("a b c a b c")).unwrap();
        for mask in 0..8usize {
            let order = (0..3).map(|v| alternating_orders(&g, v)[(mask >> v) & 1]).collect();
            let r = RotationSystem::new(order, &g).unwrap();
            let f = trace_faces(&g, &r);
            assert_eq!(f.count() % 2, (g.edge_count() - g.vertex_count()) % 2);
            let total: usize = f.faces.iter().map(Vec::len).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn rejects_non_strongly_turning_tour() {
        let g = fig8_loop();
        let t = turning_euler_tour(&g).unwrap();
        let col = Coloring {
            sides: vec![Side::Inside],
        };
        assert!(matches!(
            rotation_from_tour(&t, &col, &g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn rejects_bad_permutation() {
        let g = fig8_loop();
        assert!(RotationSystem::new(vec![[Dart::s(0); 4]], &g).is_err());
    }
}
