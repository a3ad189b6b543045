//! The decision pipeline: one turning tour per component, then either a
//! certificate from its first defect or an embedding from its coloring.

use std::fmt;

use crate::embed::{rotation_from_tour, trace_faces, FaceSet, RotationSystem};
use crate::error::{Error, Result};
use crate::euler::{split_at_violation, strong_turning_violation, turning_euler_tour, EulerTour};
use crate::graph::{components, Component, XGraph};
use crate::interlace::{
    forbidden_pair_from_odd_cycle, interlacement_graph, two_coloring, y_sequence, Coloring,
    OddCycle, PairSource, TwoColoring, YSequence,
};
use crate::walk::{simplify_cycle, verify_forbidden_pair, ClosedWalk, OrientedEdge};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Replace certificate walks by vertex-simple cycles through the
    /// crossing vertex.
    pub simplify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    StrongTurningSplit,
    OddCycleFormula,
    OddCycleFallback,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::StrongTurningSplit => "strong-turning-split",
            Provenance::OddCycleFormula => "odd-cycle-formula",
            Provenance::OddCycleFallback => "odd-cycle-fallback",
        })
    }
}

/// The odd cycle and Y-sequence behind a certificate, in component-local ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleTrace {
    pub cycle: OddCycle,
    pub y: YSequence,
}

/// Two edge-disjoint closed walks with one crossing vertex, in the ids of
/// the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub walk1: ClosedWalk,
    pub walk2: ClosedWalk,
    pub crossing: usize,
    pub provenance: Provenance,
    pub odd_cycle: Option<OddCycleTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Component-local rotation, its faces, and the coloring it came from.
    Embedded {
        coloring: Coloring,
        rotation: RotationSystem,
        faces: FaceSet,
    },
    Certified(Certificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub component: Component,
    /// The component's turning tour, in local ids.
    pub tour: EulerTour,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub components: Vec<ComponentReport>,
}

impl Verdict {
    /// X-planar iff every component embeds.
    pub fn planar(&self) -> bool {
        self.components
            .iter()
            .all(|c| matches!(c.outcome, Outcome::Embedded { .. }))
    }

    /// The certificate of the first non-embeddable component.
    pub fn certificate(&self) -> Option<&Certificate> {
        self.components.iter().find_map(|c| match &c.outcome {
            Outcome::Certified(cert) => Some(cert),
            Outcome::Embedded { .. } => None,
        })
    }

    /// Whole-graph rotation system, when every component embeds.
    pub fn rotation(&self, g: &XGraph) -> Option<RotationSystem> {
        let mut order = vec![None; g.vertex_count()];
        for c in &self.components {
            let Outcome::Embedded { rotation, .. } = &c.outcome else {
                return None;
            };
            for (local, &global) in c.component.vertices.iter().enumerate() {
                order[global] = Some(rotation.at(local).map(|d| c.component.global_dart(d)));
            }
        }
        let order = order.into_iter().collect::<Option<Vec<_>>>()?;
        Some(RotationSystem::new(order, g).expect("component rotations cover the graph"))
    }

    /// Face sets per component, when every component embeds.
    pub fn face_sets(&self) -> Option<Vec<&FaceSet>> {
        self.components
            .iter()
            .map(|c| match &c.outcome {
                Outcome::Embedded { faces, .. } => Some(faces),
                Outcome::Certified(_) => None,
            })
            .collect()
    }
}

fn globalize(w: &ClosedWalk, c: &Component) -> ClosedWalk {
    let steps = w
        .steps()
        .iter()
        .map(|s| OrientedEdge {
            edge: c.edges[s.edge],
            forward: s.forward,
        })
        .collect();
    ClosedWalk::new(steps).expect("relabeling keeps the walk nonempty")
}

fn certify(
    g: &XGraph,
    walk1: ClosedWalk,
    walk2: ClosedWalk,
    crossing: usize,
    options: DecideOptions,
) -> Result<(ClosedWalk, ClosedWalk)> {
    if !options.simplify {
        return Ok((walk1, walk2));
    }
    let s1 = simplify_cycle(&walk1, crossing, g)?;
    let s2 = simplify_cycle(&walk2, crossing, g)?;
    let report = verify_forbidden_pair(&s1, &s2, g);
    if report.crossing_vertex() != Some(crossing) || !s1.is_vertex_simple(g) || !s2.is_vertex_simple(g) {
        return Err(Error::Internal(format!(
            "simplified certificate at vertex {crossing} failed verification: {:?}",
            report.failure
        )));
    }
    Ok((s1, s2))
}

/// Runs the pipeline on one connected X-graph.
fn decide_connected(c: Component, options: DecideOptions) -> Result<ComponentReport> {
    let g = &c.graph;
    let tour = turning_euler_tour(g)?;
    let outcome = if let Some(a) = strong_turning_violation(&tour, g) {
        let split = split_at_violation(&tour, a, g)?;
        let (w1, w2) = certify(g, split.walk1, split.walk2, a, options)?;
        Outcome::Certified(Certificate {
            walk1: w1,
            walk2: w2,
            crossing: a,
            provenance: Provenance::StrongTurningSplit,
            odd_cycle: None,
        })
    } else {
        match two_coloring(&interlacement_graph(&tour)) {
            TwoColoring::Bipartite(coloring) => {
                let rotation = rotation_from_tour(&tour, &coloring, g)?;
                let faces = trace_faces(g, &rotation);
                Outcome::Embedded {
                    coloring,
                    rotation,
                    faces,
                }
            }
            TwoColoring::OddCycle(cycle) => {
                let y = y_sequence(&tour, &cycle)?;
                let pair = forbidden_pair_from_odd_cycle(&tour, &y, g)?;
                let (w1, w2) = certify(g, pair.walk1, pair.walk2, pair.crossing, options)?;
                Outcome::Certified(Certificate {
                    walk1: w1,
                    walk2: w2,
                    crossing: pair.crossing,
                    provenance: match pair.source {
                        PairSource::Formula => Provenance::OddCycleFormula,
                        PairSource::Fallback => Provenance::OddCycleFallback,
                    },
                    odd_cycle: Some(OddCycleTrace { cycle, y }),
                })
            }
        }
    };
    let outcome = match outcome {
        Outcome::Certified(cert) => Outcome::Certified(Certificate {
            walk1: globalize(&cert.walk1, &c),
            walk2: globalize(&cert.walk2, &c),
            crossing: c.vertices[cert.crossing],
            ..cert
        }),
        embedded => embedded,
    };
    Ok(ComponentReport {
        component: c,
        tour,
        outcome,
    })
}

pub fn decide(g: &XGraph) -> Result<Verdict> {
    decide_with(g, DecideOptions::default())
}

/// Decides X-planarity component by component. Every certificate is
/// re-verified against `g` before it is returned.
pub fn decide_with(g: &XGraph, options: DecideOptions) -> Result<Verdict> {
    let violations = g.validate();
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let components = components(g)
        .into_iter()
        .map(|c| decide_connected(c, options))
        .collect::<Result<Vec<_>>>()?;
    for report in &components {
        if let Outcome::Certified(cert) = &report.outcome {
            let check = verify_forbidden_pair(&cert.walk1, &cert.walk2, g);
            if check.crossing_vertex() != Some(cert.crossing) {
                return Err(Error::Internal(format!(
                    "certificate failed verification on the input graph: {:?}",
                    check.failure
                )));
            }
        }
    }
    Ok(Verdict { components })
}
