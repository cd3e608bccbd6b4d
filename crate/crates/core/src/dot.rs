//! Graphviz output with optional highlighting of a certificate.

use std::fmt::Write;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, Default)]
pub struct Highlight {
    /// Filled red, e.g. a stable cutset.
    pub vertices: VertexSet,
    /// Drawn bold red, e.g. a matching cut.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Highlight {
    pub fn vertices(vertices: VertexSet) -> Self {
        Highlight { vertices, edges: Vec::new() }
    }

    pub fn edges(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        Highlight { vertices: VertexSet::EMPTY, edges: edges.into_iter().collect() }
    }

    fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }
}

pub fn to_dot(g: &Graph) -> String {
    to_dot_highlighted(g, &Highlight::default())
}

pub fn to_dot_highlighted(g: &Graph, hl: &Highlight) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if hl.vertices.contains(v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=red];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if hl.has_edge(u, v) {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}
