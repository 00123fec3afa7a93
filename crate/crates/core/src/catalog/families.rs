use std::collections::BTreeSet;

use super::{edge_key, link_h11, triangle_key, AdeType, Divisor, ResolutionGraph, SurfaceKind};
use crate::error::Result;

use SurfaceKind::{Hirzebruch2 as F2, P2Blown3 as B3, P2Blown3Bar as B3b, P2Blown3BarBar as B3bb, Proj2 as P2, Quadric as Q};

/// Incremental builder keyed by divisor label.
struct Builder {
    ty: AdeType,
    divisors: Vec<Divisor>,
    edges: BTreeSet<(usize, usize)>,
    triangles: BTreeSet<(usize, usize, usize)>,
}

impl Builder {
    fn new(ty: AdeType) -> Self {
        Self { ty, divisors: Vec::new(), edges: BTreeSet::new(), triangles: BTreeSet::new() }
    }

    fn divisor(&mut self, label: String, kind: SurfaceKind, a: u32) {
        let id = self.divisors.len();
        self.divisors.push(Divisor { id, label, kind, discrepancy: a });
    }

    fn id(&self, label: &str) -> usize {
        self.divisors
            .iter()
            .position(|d| d.label == label)
            .unwrap_or_else(|| panic!("no divisor {label} in {}", self.ty))
    }

    fn edge(&mut self, a: &str, b: &str) {
        let key = edge_key(self.id(a), self.id(b));
        let fresh = self.edges.insert(key);
        debug_assert!(fresh, "duplicate edge {a}-{b} in {}", self.ty);
    }

    fn triangle(&mut self, a: &str, b: &str, c: &str) {
        let key = triangle_key(self.id(a), self.id(b), self.id(c));
        let fresh = self.triangles.insert(key);
        debug_assert!(fresh, "duplicate triangle {a},{b},{c} in {}", self.ty);
    }

    fn finish(self) -> ResolutionGraph {
        ResolutionGraph {
            ty: self.ty,
            divisors: self.divisors,
            edges: self.edges,
            triangles: self.triangles,
            h11_link: link_h11(self.ty),
        }
    }
}

fn d(i: u32) -> String {
    format!("D_{i}")
}

fn d1(i: u32) -> String {
    format!("D'_{i}")
}

fn d2(i: u32) -> String {
    format!("D''_{i}")
}

/// Intersection graph of the canonical snc-resolution of `ty`.
pub fn build_graph(ty: AdeType) -> Result<ResolutionGraph> {
    ty.validate()?;
    Ok(match ty {
        AdeType::A(n) => a_chain(n),
        AdeType::D(n) if n % 2 == 0 => d_even(n),
        AdeType::D(n) => d_odd(n),
        AdeType::E6 => e6(),
        AdeType::E7 => e7(),
        AdeType::E8 => e8(),
    })
}

fn a_chain(n: u32) -> ResolutionGraph {
    let mut g = Builder::new(AdeType::A(n));
    let m = if n % 2 == 1 { n.div_ceil(2) } else { n / 2 + 1 };
    for i in 1..m {
        g.divisor(d(i), F2, i);
    }
    if n % 2 == 1 {
        g.divisor(d(m), Q, m);
    } else {
        g.divisor(d(m), P2, n + 2);
    }
    for i in 1..m {
        g.edge(&d(i), &d(i + 1));
    }
    g.finish()
}

// Divisors D_1..D_{k+1}, D'_j, D''_j (1 <= j <= k-1) and the incidences
// shared by both parities of D_n.
fn d_common(g: &mut Builder, k: u32) {
    for j in 3..=k {
        for (x, y) in [(d(j), d1(j - 1)), (d(j), d1(j - 2)), (d(j), d2(j - 1)), (d(j), d2(j - 2))] {
            g.edge(&x, &y);
        }
    }
    for j in 1..=k.saturating_sub(2) {
        g.edge(&d1(j), &d1(j + 1));
        g.edge(&d2(j), &d2(j + 1));
    }
    for j in 1..k {
        g.edge(&d1(j), &d2(j));
    }
    for x in [d(1), d(2)] {
        g.edge(&x, &d1(1));
        g.edge(&x, &d2(1));
    }
    g.edge(&d(k + 1), &d1(k - 1));
    g.edge(&d(k + 1), &d2(k - 1));

    for i in 1..k {
        g.triangle(&d1(i), &d2(i), &d(i + 2));
    }
    for i in 1..=k.saturating_sub(2) {
        g.triangle(&d1(i + 1), &d2(i + 1), &d(i + 2));
        g.triangle(&d1(i), &d1(i + 1), &d(i + 2));
        g.triangle(&d2(i), &d2(i + 1), &d(i + 2));
    }
    g.triangle(&d(2), &d1(1), &d2(1));
}

fn d_even(n: u32) -> ResolutionGraph {
    let k = n / 2;
    let mut g = Builder::new(AdeType::D(n));
    g.divisor(d(1), Q, n - 1);
    g.divisor(d(2), Q, n - 1);
    for i in 3..=k + 1 {
        g.divisor(d(i), Q, 2 * n + 7 - 4 * i);
    }
    for j in 1..k {
        let kind = if j == 1 { B3 } else { B3b };
        g.divisor(d1(j), kind, k - j);
        g.divisor(d2(j), kind, k - j);
    }
    d_common(&mut g, k);
    g.triangle(&d(1), &d1(1), &d2(1));
    g.finish()
}

fn d_odd(n: u32) -> ResolutionGraph {
    let k = (n - 1) / 2;
    let mut g = Builder::new(AdeType::D(n));
    g.divisor(d(1), F2, n - 2);
    g.divisor(d(2), Q, n - 1);
    for i in 3..=k + 1 {
        // 2(n - 2i - 1) + 7, written to stay in unsigned range
        g.divisor(d(i), Q, 2 * n + 5 - 4 * i);
    }
    for j in 1..k {
        g.divisor(d1(j), B3b, k - j);
        g.divisor(d2(j), B3b, k - j);
    }
    d_common(&mut g, k);
    g.edge(&d(1), &d(2));
    g.triangle(&d(1), &d(2), &d1(1));
    g.triangle(&d(1), &d(2), &d2(1));
    g.finish()
}

fn e6() -> ResolutionGraph {
    let mut g = Builder::new(AdeType::E6);
    g.divisor(d(1), F2, 3);
    g.divisor(d(2), F2, 6);
    g.divisor(d(3), Q, 9);
    g.divisor(d(4), B3bb, 1);
    g.divisor(d1(4), B3bb, 1);
    let edges = [
        ("D_1", "D_2"),
        ("D_1", "D_4"),
        ("D_1", "D'_4"),
        ("D_2", "D_3"),
        ("D_2", "D_4"),
        ("D_2", "D'_4"),
        ("D_3", "D_4"),
        ("D_3", "D'_4"),
        ("D_4", "D'_4"),
    ];
    for (a, b) in edges {
        g.edge(a, b);
    }
    let triangles = [
        ("D_3", "D_4", "D'_4"),
        ("D_2", "D_3", "D_4"),
        ("D_2", "D_3", "D'_4"),
        ("D_1", "D_2", "D_4"),
        ("D_1", "D_2", "D'_4"),
    ];
    for (a, b, c) in triangles {
        g.triangle(a, b, c);
    }
    g.finish()
}

const E7_EDGES: [(&str, &str); 21] = [
    ("D_1", "D'_1"),
    ("D_1", "D''_1"),
    ("D_1", "D'_3"),
    ("D_1", "D''_3"),
    ("D'_1", "D''_1"),
    ("D'_1", "D_2"),
    ("D'_1", "D'_2"),
    ("D'_1", "D_3"),
    ("D'_1", "D'_3"),
    ("D''_1", "D_2"),
    ("D''_1", "D''_2"),
    ("D''_1", "D_3"),
    ("D''_1", "D''_3"),
    ("D'_2", "D''_2"),
    ("D'_2", "D'_3"),
    ("D'_2", "D_3"),
    ("D''_2", "D''_3"),
    ("D''_2", "D_3"),
    ("D'_2", "D_4"),
    ("D''_2", "D_4"),
    ("D'_3", "D''_3"),
];

const E7_TRIANGLES: [(&str, &str, &str); 12] = [
    ("D'_3", "D''_3", "D_1"),
    ("D'_1", "D''_1", "D_2"),
    ("D'_1", "D''_1", "D_1"),
    ("D'_1", "D''_1", "D_3"),
    ("D'_2", "D''_2", "D_4"),
    ("D'_2", "D''_2", "D_3"),
    ("D'_1", "D'_2", "D_3"),
    ("D''_1", "D''_2", "D_3"),
    ("D'_1", "D'_2", "D'_3"),
    ("D''_1", "D''_2", "D''_3"),
    ("D'_1", "D'_3", "D_1"),
    ("D''_1", "D''_3", "D_1"),
];

const E8_EXTRA_EDGES: [(&str, &str); 7] = [
    ("D'_2", "D'_4"),
    ("D_4", "D''_4"),
    ("D''_2", "D''_4"),
    ("D_4", "D'_4"),
    ("D'_3", "D'_4"),
    ("D'_4", "D''_4"),
    ("D''_3", "D''_4"),
];

const E8_EXTRA_TRIANGLES: [(&str, &str, &str); 5] = [
    ("D'_4", "D''_4", "D_4"),
    ("D'_2", "D'_4", "D_4"),
    ("D''_2", "D''_4", "D_4"),
    ("D'_2", "D'_3", "D'_4"),
    ("D''_2", "D''_3", "D''_4"),
];

fn e7_like(ty: AdeType, main: [u32; 4], primed: [(SurfaceKind, u32); 3]) -> Builder {
    let mut g = Builder::new(ty);
    for (i, a) in (1..).zip(main) {
        g.divisor(d(i), Q, a);
    }
    for (j, (kind, a)) in (1..).zip(primed) {
        g.divisor(d1(j), kind, a);
        g.divisor(d2(j), kind, a);
    }
    for (a, b) in E7_EDGES {
        g.edge(a, b);
    }
    for (a, b, c) in E7_TRIANGLES {
        g.triangle(a, b, c);
    }
    g
}

fn e7() -> ResolutionGraph {
    e7_like(AdeType::E7, [11, 9, 13, 5], [(B3, 4), (B3b, 2), (B3bb, 1)]).finish()
}

fn e8() -> ResolutionGraph {
    let mut g = e7_like(AdeType::E8, [19, 15, 23, 11], [(B3, 7), (B3b, 4), (B3bb, 2)]);
    g.divisor(d1(4), B3bb, 1);
    g.divisor(d2(4), B3bb, 1);
    for (a, b) in E8_EXTRA_EDGES {
        g.edge(a, b);
    }
    for (a, b, c) in E8_EXTRA_TRIANGLES {
        g.triangle(a, b, c);
    }
    g.finish()
}
