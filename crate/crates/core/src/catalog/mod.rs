//! Resolution data for the three-dimensional A-D-E singularities.
//!
//! Each [`ResolutionGraph`] records the exceptional prime divisors of the
//! canonical snc-resolution (surface type and discrepancy), the pairs of
//! divisors meeting in a curve, the triples meeting in a point, and the
//! `h^{1,1}` of the link. Only this incidence data enters the formulas.

mod export;
mod families;
pub mod reference;
mod validate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use export::{to_dot, GraphExport};
pub use families::build_graph;
pub use validate::{validate_graph, Check, ValidationReport};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};

/// A-D-E family with its subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeType {
    /// Builds a type from a family letter (`A`, `D`, `E6`, `E`, ...) and an
    /// optional subscript, checking the admissible ranges.
    pub fn from_parts(family: &str, n: Option<u32>) -> Result<Self> {
        let fam = family.trim().to_ascii_uppercase();
        let fam = fam.replace('_', "");
        let ty = match (fam.as_str(), n) {
            ("A", Some(n)) => AdeType::A(n),
            ("D", Some(n)) => AdeType::D(n),
            ("E6", None) | ("E", Some(6)) | ("E6", Some(6)) => AdeType::E6,
            ("E7", None) | ("E", Some(7)) | ("E7", Some(7)) => AdeType::E7,
            ("E8", None) | ("E", Some(8)) | ("E8", Some(8)) => AdeType::E8,
            ("A" | "D", None) => {
                return Err(Error::InvalidType(format!(
                    "family {fam} needs a subscript (A: n >= 1, D: n >= 4)"
                )))
            }
            _ => {
                return Err(Error::InvalidType(format!(
                    "unknown type {family}{}; valid types are A_n (n >= 1), D_n (n >= 4), E6, E7, E8",
                    n.map(|n| format!(" with n = {n}")).unwrap_or_default()
                )))
            }
        };
        ty.validate()?;
        Ok(ty)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            AdeType::A(0) => Err(Error::InvalidType("A_n requires n >= 1".into())),
            AdeType::D(n) if n < 4 => Err(Error::InvalidType(format!(
                "D_n requires n >= 4, got n = {n}"
            ))),
            _ => Ok(()),
        }
    }

    /// The subscript, which is also the Milnor number.
    pub fn subscript(&self) -> u32 {
        match *self {
            AdeType::A(n) | AdeType::D(n) => n,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            AdeType::A(_) => "A",
            AdeType::D(_) => "D",
            AdeType::E6 => "E6",
            AdeType::E7 => "E7",
            AdeType::E8 => "E8",
        }
    }

    /// Every type with subscript at most `max_n`: `A_1..A_max`, `D_4..D_max`,
    /// and `E6`, `E7`, `E8` whenever `max_n` is at least 1.
    pub fn up_to(max_n: u32) -> Vec<AdeType> {
        let mut out: Vec<AdeType> = (1..=max_n).map(AdeType::A).collect();
        out.extend((4..=max_n).map(AdeType::D));
        if max_n >= 1 {
            out.extend([AdeType::E6, AdeType::E7, AdeType::E8]);
        }
        out
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A_{n}"),
            AdeType::D(n) => write!(f, "D_{n}"),
            AdeType::E6 => f.write_str("E_6"),
            AdeType::E7 => f.write_str("E_7"),
            AdeType::E8 => f.write_str("E_8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    /// Accepts `A:3`, `A_3`, `A3`, `D:6`, `E6`, `E_7`, `e8`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = |reason: &str| Error::Parse {
            what: "A-D-E type",
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let upper = t.to_ascii_uppercase();
        let (fam, rest) = upper.split_at(upper.chars().next().map_or(0, char::len_utf8));
        let rest = rest.trim_start_matches([':', '_']);
        let n = if rest.is_empty() {
            None
        } else {
            Some(rest.parse::<u32>().map_err(|_| bad("subscript is not a number"))?)
        };
        match fam {
            "A" | "D" | "E" => {}
            _ => return Err(bad("family must be A, D or E")),
        }
        let fam = if fam == "E" {
            match n {
                Some(6) => "E6",
                Some(7) => "E7",
                Some(8) => "E8",
                _ => return Err(bad("E-types are E6, E7, E8")),
            }
        } else {
            fam
        };
        let n = if fam.starts_with('E') { None } else { n };
        AdeType::from_parts(fam, n)
    }
}

/// Surface type of an exceptional prime divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// `P^2`.
    Proj2,
    /// `P^1 x P^1`.
    Quadric,
    /// The Hirzebruch surface `F_2`.
    Hirzebruch2,
    /// `P^2` blown up in three points, the three blow-up variants.
    P2Blown3,
    P2Blown3Bar,
    P2Blown3BarBar,
}

impl SurfaceKind {
    pub const ALL: [SurfaceKind; 6] = [
        SurfaceKind::Proj2,
        SurfaceKind::Quadric,
        SurfaceKind::Hirzebruch2,
        SurfaceKind::P2Blown3,
        SurfaceKind::P2Blown3Bar,
        SurfaceKind::P2Blown3BarBar,
    ];

    /// E-polynomial in `w = uv`.
    pub fn e_polynomial(&self) -> Polynomial {
        match self {
            SurfaceKind::Proj2 => Polynomial::from_ints(&[1, 1, 1]),
            SurfaceKind::Quadric | SurfaceKind::Hirzebruch2 => Polynomial::from_ints(&[1, 2, 1]),
            SurfaceKind::P2Blown3 | SurfaceKind::P2Blown3Bar | SurfaceKind::P2Blown3BarBar => {
                Polynomial::from_ints(&[1, 4, 1])
            }
        }
    }

    /// Topological Euler number, the E-polynomial at `w = 1`.
    pub fn euler_number(&self) -> i64 {
        let v = self.e_polynomial().eval(&crate::algebra::rat(1));
        i64::try_from(v.to_integer()).expect("small Euler number")
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            SurfaceKind::Proj2 => "P2",
            SurfaceKind::Quadric => "P1xP1",
            SurfaceKind::Hirzebruch2 => "F2",
            SurfaceKind::P2Blown3 => "P2[3]",
            SurfaceKind::P2Blown3Bar => "P2[3bar]",
            SurfaceKind::P2Blown3BarBar => "P2[3barbar]",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    pub id: usize,
    pub label: String,
    pub kind: SurfaceKind,
    pub discrepancy: u32,
}

/// Incidence data of one snc-resolution. Edges and triangles are stored as
/// sorted tuples of distinct divisor ids, one entry per intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionGraph {
    pub ty: AdeType,
    pub divisors: Vec<Divisor>,
    pub edges: BTreeSet<(usize, usize)>,
    pub triangles: BTreeSet<(usize, usize, usize)>,
    pub h11_link: u32,
}

impl ResolutionGraph {
    /// `b(X)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `t(X)`.
    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn discrepancy(&self, id: usize) -> u32 {
        self.divisors[id].discrepancy
    }

    /// Number of edges at divisor `id`.
    pub fn degree(&self, id: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == id || b == id).count()
    }

    /// Number of triangles having `id` as a vertex.
    pub fn triangles_at(&self, id: usize) -> usize {
        self.triangles
            .iter()
            .filter(|&&(a, b, c)| a == id || b == id || c == id)
            .count()
    }

    /// Number of triangles containing the edge `{i, j}`.
    pub fn triangles_on_edge(&self, i: usize, j: usize) -> usize {
        self.triangles
            .iter()
            .filter(|&&(a, b, c)| [a, b, c].contains(&i) && [a, b, c].contains(&j))
            .count()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.divisors[id].label
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.divisors.iter().position(|d| d.label == label)
    }
}

/// Sorted pair of distinct ids.
pub fn edge_key(i: usize, j: usize) -> (usize, usize) {
    assert_ne!(i, j, "an edge joins two distinct divisors");
    (i.min(j), i.max(j))
}

/// Sorted triple of distinct ids.
pub fn triangle_key(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let mut v = [i, j, k];
    v.sort_unstable();
    assert!(v[0] != v[1] && v[1] != v[2], "a triangle has three distinct vertices");
    (v[0], v[1], v[2])
}

/// Number of branches of the plane curve `g(x1, x2) = 0` at the origin.
pub fn branch_count(ty: AdeType) -> u32 {
    match ty {
        AdeType::A(n) => {
            if n % 2 == 1 {
                2
            } else {
                1
            }
        }
        AdeType::D(n) => {
            if n % 2 == 1 {
                2
            } else {
                3
            }
        }
        AdeType::E6 | AdeType::E8 => 1,
        AdeType::E7 => 2,
    }
}

/// `h^{1,1}` of the degree-two cohomology of the link.
pub fn link_h11(ty: AdeType) -> u32 {
    match ty {
        AdeType::A(n) => u32::from(n % 2 == 1),
        AdeType::D(n) => {
            if n % 2 == 1 {
                1
            } else {
                2
            }
        }
        AdeType::E6 | AdeType::E8 => 0,
        AdeType::E7 => 1,
    }
}

/// Milnor number, branch count, delta invariant and the Steenbrink
/// numbers `s_1`, `s_2` of the threefold singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorData {
    pub mu: u32,
    pub branches: u32,
    pub delta: u32,
    pub s1: u32,
    pub s2: u32,
}

/// Derives `δ = (μ + r - 1)/2`, `s_1 = δ - r + 1`, `s_2 = δ` from the Milnor
/// number and the branch count.
pub fn milnor_data(ty: AdeType) -> MilnorData {
    let mu = ty.subscript();
    let r = branch_count(ty);
    assert!((mu + r - 1) % 2 == 0, "Milnor's formula gives an integral delta");
    let delta = (mu + r - 1) / 2;
    MilnorData { mu, branches: r, delta, s1: delta + 1 - r, s2: delta }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_types() {
        assert_eq!("A:1".parse::<AdeType>().unwrap(), AdeType::A(1));
        assert_eq!("a_5".parse::<AdeType>().unwrap(), AdeType::A(5));
        assert_eq!("D6".parse::<AdeType>().unwrap(), AdeType::D(6));
        assert_eq!("E7".parse::<AdeType>().unwrap(), AdeType::E7);
        assert_eq!("E_8".parse::<AdeType>().unwrap(), AdeType::E8);
        assert!("D:3".parse::<AdeType>().is_err());
        assert!("A:0".parse::<AdeType>().is_err());
        assert!("E9".parse::<AdeType>().is_err());
        assert!("X3".parse::<AdeType>().is_err());
        assert_eq!(AdeType::from_parts("E6", None).unwrap(), AdeType::E6);
        assert!(AdeType::from_parts("D", None).is_err());
        assert!(AdeType::from_parts("D", Some(2)).is_err());
    }

    #[test]
    fn display_and_subscript() {
        assert_eq!(AdeType::D(6).to_string(), "D_6");
        assert_eq!(AdeType::E7.to_string(), "E_7");
        assert_eq!(AdeType::E8.subscript(), 8);
    }

    #[test]
    fn up_to_scope() {
        let ts = AdeType::up_to(4);
        assert_eq!(
            ts,
            vec![
                AdeType::A(1),
                AdeType::A(2),
                AdeType::A(3),
                AdeType::A(4),
                AdeType::D(4),
                AdeType::E6,
                AdeType::E7,
                AdeType::E8
            ]
        );
    }

    #[test]
    fn surface_euler_numbers() {
        let e: Vec<i64> = SurfaceKind::ALL.iter().map(SurfaceKind::euler_number).collect();
        assert_eq!(e, vec![3, 4, 4, 6, 6, 6]);
    }

    #[test]
    fn branches_and_link() {
        assert_eq!(branch_count(AdeType::D(8)), 3);
        assert_eq!(branch_count(AdeType::E7), 2);
        assert_eq!(branch_count(AdeType::A(5)), 2);
        assert_eq!(link_h11(AdeType::D(7)), 1);
        assert_eq!(link_h11(AdeType::E8), 0);
        assert_eq!(link_h11(AdeType::A(2)), 0);
        assert_eq!(link_h11(AdeType::A(2)), branch_count(AdeType::A(2)) - 1);
    }

    #[test]
    fn milnor_identities() {
        let d = milnor_data(AdeType::D(8));
        assert_eq!((d.mu, d.branches, d.s1, d.s2), (8, 3, 3, 5));
        for ty in AdeType::up_to(30) {
            let m = milnor_data(ty);
            assert_eq!(m.s2 - m.s1, link_h11(ty), "{ty}");
            assert_eq!(m.mu, 2 * m.delta + 1 - m.branches, "{ty}");
        }
    }
}
