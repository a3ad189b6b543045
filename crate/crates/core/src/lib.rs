//! X-planarity of 4-regular graphs with a crossing structure.
//!
//! An [`XGraph`] is a 4-regular multigraph whose four darts at each vertex
//! are split into two pairs. It is X-planar when it has a plane embedding in
//! which the pairs alternate around every vertex. [`decide`] returns either
//! such an embedding or two edge-disjoint closed walks meeting in exactly one
//! crossing vertex, which [`verify_forbidden_pair`] checks independently.
//!
//! ```
//! use xplanar::{decide, from_gauss_code, parse_word};
//!
//! let g = from_gauss_code(&parse_word("a b a b")).unwrap();
//! let verdict = decide(&g).unwrap();
//! assert!(!verdict.planar());
//! ```

pub mod cli;
pub mod decide;
pub mod embed;
pub mod error;
pub mod euler;
pub mod format;
pub mod gauss;
pub mod graph;
pub mod interlace;
pub mod oracle;
pub mod render;
pub mod walk;

pub use decide::{decide, decide_with, Certificate, DecideOptions, Outcome, Provenance, Verdict};
pub use embed::{is_planar_rotation, rotation_from_tour, trace_faces, FaceSet, RotationSystem};
pub use error::{Error, Result};
pub use euler::{is_turning, split_at_violation, strong_turning_violation, turning_euler_tour, EulerTour};
pub use format::{parse_xgraph, write_xgraph};
pub use gauss::{from_gauss_code, parse_word};
pub use graph::{components, Component, Dart, Edge, End, RawXGraph, Violation, XGraph};
pub use interlace::{interlacement_graph, two_coloring, y_sequence, Coloring, OddCycle, Side, TwoColoring, YSequence};
pub use oracle::{oracle_forbidden_pairs, oracle_rotations, random_xgraph};
pub use render::render_schematic;
pub use walk::{crossing_vertices, passes, simplify_cycle, verify_forbidden_pair, ClosedWalk, OrientedEdge, Pass};
