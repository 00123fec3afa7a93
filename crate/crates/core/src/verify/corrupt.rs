use std::fmt;
use std::str::FromStr;

use crate::catalog::{edge_key, triangle_key, AdeType, ResolutionGraph, SurfaceKind};
use crate::error::Error;

/// A single deliberate change to a catalog graph, used as a negative control.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corruption {
    pub ty: AdeType,
    pub change: Change,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Change {
    DropEdge(usize, usize),
    AddEdge(usize, usize),
    DropTriangle(usize, usize, usize),
    AddTriangle(usize, usize, usize),
    SetDiscrepancy(usize, u32),
    SetKind(usize, SurfaceKind),
}

impl Corruption {
    pub fn drop_edge(ty: AdeType, i: usize, j: usize) -> Self {
        Self { ty, change: Change::DropEdge(i, j) }
    }

    pub fn apply(&self, g: &mut ResolutionGraph) {
        match self.change {
            Change::DropEdge(i, j) => {
                g.edges.remove(&edge_key(i, j));
            }
            Change::AddEdge(i, j) => {
                g.edges.insert(edge_key(i, j));
            }
            Change::DropTriangle(i, j, k) => {
                g.triangles.remove(&triangle_key(i, j, k));
            }
            Change::AddTriangle(i, j, k) => {
                g.triangles.insert(triangle_key(i, j, k));
            }
            Change::SetDiscrepancy(i, a) => g.divisors[i].discrepancy = a,
            Change::SetKind(i, kind) => g.divisors[i].kind = kind,
        }
    }
}

/// Every single-item corruption of `g`: each edge or triangle removed, each
/// missing edge added, each triangle over an existing edge added, each
/// discrepancy moved by one, each surface kind replaced.
pub fn all_corruptions(g: &ResolutionGraph) -> Vec<Corruption> {
    let ty = g.ty;
    let n = g.divisors.len();
    let mut out = Vec::new();
    let mut push = |change| out.push(Corruption { ty, change });
    for i in 0..n {
        for j in i + 1..n {
            if g.edges.contains(&(i, j)) {
                push(Change::DropEdge(i, j));
                for k in j + 1..n {
                    if g.edges.contains(&(i, k)) && g.edges.contains(&(j, k)) && !g.triangles.contains(&(i, j, k)) {
                        push(Change::AddTriangle(i, j, k));
                    }
                }
            } else {
                push(Change::AddEdge(i, j));
            }
        }
    }
    for &(i, j, k) in &g.triangles {
        push(Change::DropTriangle(i, j, k));
    }
    for d in &g.divisors {
        push(Change::SetDiscrepancy(d.id, d.discrepancy + 1));
        push(Change::SetDiscrepancy(d.id, d.discrepancy - 1));
        for kind in SurfaceKind::ALL {
            if kind != d.kind {
                push(Change::SetKind(d.id, kind));
            }
        }
    }
    out
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.change {
            Change::DropEdge(i, j) => write!(f, "{}: drop edge {i}-{j}", self.ty),
            Change::AddEdge(i, j) => write!(f, "{}: add edge {i}-{j}", self.ty),
            Change::DropTriangle(i, j, k) => write!(f, "{}: drop triangle {i}-{j}-{k}", self.ty),
            Change::AddTriangle(i, j, k) => write!(f, "{}: add triangle {i}-{j}-{k}", self.ty),
            Change::SetDiscrepancy(i, a) => write!(f, "{}: discrepancy of {i} set to {a}", self.ty),
            Change::SetKind(i, k) => write!(f, "{}: kind of {i} set to {}", self.ty, k.short_name()),
        }
    }
}

/// `TYPE/edge/N` drops the N-th edge of the catalog graph, `TYPE/triangle/N`
/// the N-th triangle; `TYPE/discrepancy/N` raises the discrepancy of divisor
/// N by one and `TYPE/kind/N` swaps its surface kind for the next one.
impl FromStr for Corruption {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |reason: &str| Error::Parse {
            what: "corruption",
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split('/').collect();
        let [ty, what, idx] = parts[..] else {
            return Err(bad("expected TYPE/edge|triangle|discrepancy|kind/N"));
        };
        let ty: AdeType = ty.parse()?;
        let idx: usize = idx.parse().map_err(|_| bad("N is not an index"))?;
        let g = crate::catalog::build_graph(ty)?;
        let out_of_range = || bad("index out of range");
        let change = match what {
            "edge" => {
                let &(i, j) = g.edges.iter().nth(idx).ok_or_else(out_of_range)?;
                Change::DropEdge(i, j)
            }
            "triangle" => {
                let &(i, j, k) = g.triangles.iter().nth(idx).ok_or_else(out_of_range)?;
                Change::DropTriangle(i, j, k)
            }
            "discrepancy" => {
                let d = g.divisors.get(idx).ok_or_else(out_of_range)?;
                Change::SetDiscrepancy(idx, d.discrepancy + 1)
            }
            "kind" => {
                let d = g.divisors.get(idx).ok_or_else(out_of_range)?;
                let pos = SurfaceKind::ALL.iter().position(|&k| k == d.kind).unwrap_or_default();
                Change::SetKind(idx, SurfaceKind::ALL[(pos + 1) % SurfaceKind::ALL.len()])
            }
            _ => return Err(bad("expected edge, triangle, discrepancy or kind")),
        };
        Ok(Corruption { ty, change })
    }
}
