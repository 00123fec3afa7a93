use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{AdeType, Divisor, ResolutionGraph};

/// JSON shape of a resolution graph; edges and triangles refer to divisor ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    #[serde(rename = "type")]
    pub ty: String,
    pub divisors: Vec<Divisor>,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub h11: u32,
}

impl From<&ResolutionGraph> for GraphExport {
    fn from(g: &ResolutionGraph) -> Self {
        GraphExport {
            ty: g.ty.to_string(),
            divisors: g.divisors.clone(),
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
            triangles: g.triangles.iter().map(|&(a, b, c)| [a, b, c]).collect(),
            h11: g.h11_link,
        }
    }
}

impl GraphExport {
    pub fn into_graph(self) -> crate::Result<ResolutionGraph> {
        let ty: AdeType = self.ty.parse()?;
        Ok(ResolutionGraph {
            ty,
            divisors: self.divisors,
            edges: self.edges.into_iter().map(|[a, b]| super::edge_key(a, b)).collect(),
            triangles: self
                .triangles
                .into_iter()
                .map(|[a, b, c]| super::triangle_key(a, b, c))
                .collect(),
            h11_link: self.h11,
        })
    }
}

/// Graphviz rendering; triangles are listed as a comment since DOT has no
/// notion of a 2-cell.
pub fn to_dot(g: &ResolutionGraph) -> String {
    let mut s = String::new();
    let name = g.ty.to_string().replace('_', "");
    let _ = writeln!(s, "graph {name} {{");
    let _ = writeln!(s, "  label=\"{} (b={}, t={}, h11={})\";", g.ty, g.edge_count(), g.triangle_count(), g.h11_link);
    for d in &g.divisors {
        let _ = writeln!(s, "  n{} [label=\"{} ({}, a={})\"];", d.id, d.label, d.kind, d.discrepancy);
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(s, "  n{a} -- n{b};");
    }
    for &(a, b, c) in &g.triangles {
        let _ = writeln!(s, "  // triangle {} {} {}", g.label(a), g.label(b), g.label(c));
    }
    s.push_str("}\n");
    s
}
