//! Stable cutsets in small graphs and the class of graphs glued together from
//! triangles and prisms.
//!
//! * [`graph`]: bitmask graphs on at most 64 vertices.
//! * [`graph6`]: the short graph6 encoding.
//! * [`cutset`]: stable, clique and P3 cutsets, matching cuts and related predicates.
//! * [`gsc`]: generating sequences, re-rooting, normalization, stable-set extension.
//! * [`recognize`]: membership with a certificate sequence.
//! * [`verify`]: corpus-scale checks over graph6 streams.
//! * [`dot`]: Graphviz output.

pub mod cutset;
pub mod dot;
pub mod graph;
pub mod graph6;
pub mod gsc;
pub mod recognize;
pub mod verify;

pub use cutset::{find_stable_cutset, find_stable_cutset_avoiding, Separation, StableCutsetCertificate};
pub use graph::{Graph, GraphError, VertexId, VertexSet};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use gsc::{GeneratingSequence, GscError, Piece};
pub use recognize::{recognize, RecognitionResult, Recognizer, Verdict};
