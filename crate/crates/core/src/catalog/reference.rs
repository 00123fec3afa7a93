//! Reference tables the catalog is checked against: edge and triangle
//! counts, the discrepancy table, and how many divisors of each surface
//! type occur. These are written out independently of the graph builders.

use std::collections::BTreeMap;

use super::{AdeType, SurfaceKind};

/// `(b(X), t(X))`.
pub fn edge_triangle_counts(ty: AdeType) -> (usize, usize) {
    let (b, t) = match ty {
        AdeType::A(n) if n % 2 == 1 => ((n - 1) / 2, 0),
        AdeType::A(n) => (n / 2, 0),
        AdeType::D(n) if n % 2 == 0 => {
            let k = n / 2;
            (7 * (k - 1), 3 + 4 * (k - 2))
        }
        AdeType::D(n) => {
            let k = (n - 1) / 2;
            (7 * k - 6, 4 + 4 * (k - 2))
        }
        AdeType::E6 => (9, 5),
        AdeType::E7 => (21, 12),
        AdeType::E8 => (28, 17),
    };
    (b as usize, t as usize)
}

/// Discrepancy of each exceptional divisor, by label.
pub fn discrepancies(ty: AdeType) -> Vec<(String, u32)> {
    let mut out = Vec::new();
    let mut push = |label: String, a: u32| out.push((label, a));
    match ty {
        AdeType::A(n) if n % 2 == 0 => {
            for i in 1..=n / 2 {
                push(format!("D_{i}"), i);
            }
            push(format!("D_{}", n / 2 + 1), n + 2);
        }
        AdeType::A(n) => {
            for i in 1..=n.div_ceil(2) {
                push(format!("D_{i}"), i);
            }
        }
        AdeType::D(n) if n % 2 == 0 => {
            push("D_1".into(), n - 1);
            push("D_2".into(), n - 1);
            for i in 3..=n / 2 + 1 {
                push(format!("D_{i}"), (2 * (i64::from(n) - 2 * i64::from(i)) + 7) as u32);
            }
            for i in 1..n / 2 {
                push(format!("D'_{i}"), n / 2 - i);
                push(format!("D''_{i}"), n / 2 - i);
            }
        }
        AdeType::D(n) => {
            push("D_1".into(), n - 2);
            push("D_2".into(), n - 1);
            for i in 3..=n.div_ceil(2) {
                push(format!("D_{i}"), (2 * (i64::from(n) - 2 * i64::from(i) - 1) + 7) as u32);
            }
            for i in 1..=(n - 3) / 2 {
                push(format!("D'_{i}"), (n - 1) / 2 - i);
                push(format!("D''_{i}"), (n - 1) / 2 - i);
            }
        }
        AdeType::E6 => {
            for (l, a) in [("D_1", 3), ("D_2", 6), ("D_3", 9), ("D_4", 1), ("D'_4", 1)] {
                push(l.into(), a);
            }
        }
        AdeType::E7 => {
            for (l, a) in [
                ("D_1", 11),
                ("D_2", 9),
                ("D_3", 13),
                ("D_4", 5),
                ("D'_1", 4),
                ("D''_1", 4),
                ("D'_2", 2),
                ("D''_2", 2),
                ("D'_3", 1),
                ("D''_3", 1),
            ] {
                push(l.into(), a);
            }
        }
        AdeType::E8 => {
            for (l, a) in [
                ("D_1", 19),
                ("D_2", 15),
                ("D_3", 23),
                ("D_4", 11),
                ("D'_1", 7),
                ("D''_1", 7),
                ("D'_2", 4),
                ("D''_2", 4),
                ("D'_3", 2),
                ("D''_3", 2),
                ("D'_4", 1),
                ("D''_4", 1),
            ] {
                push(l.into(), a);
            }
        }
    }
    out
}

/// Number of exceptional divisors of each surface type.
pub fn surface_census(ty: AdeType) -> BTreeMap<SurfaceKind, usize> {
    use SurfaceKind::*;
    let counts: Vec<(SurfaceKind, u32)> = match ty {
        AdeType::A(n) if n % 2 == 1 => vec![(Hirzebruch2, (n - 1) / 2), (Quadric, 1)],
        AdeType::A(n) => vec![(Hirzebruch2, n / 2), (Proj2, 1)],
        AdeType::D(n) if n % 2 == 0 => {
            let k = n / 2;
            vec![(Quadric, k + 1), (P2Blown3, 2), (P2Blown3Bar, 2 * (k - 2))]
        }
        AdeType::D(n) => {
            let k = (n - 1) / 2;
            vec![(Hirzebruch2, 1), (Quadric, k), (P2Blown3Bar, 2 * (k - 1))]
        }
        AdeType::E6 => vec![(Hirzebruch2, 2), (Quadric, 1), (P2Blown3BarBar, 2)],
        AdeType::E7 => {
            vec![(Quadric, 4), (P2Blown3, 2), (P2Blown3Bar, 2), (P2Blown3BarBar, 2)]
        }
        AdeType::E8 => {
            vec![(Quadric, 4), (P2Blown3, 2), (P2Blown3Bar, 2), (P2Blown3BarBar, 4)]
        }
    };
    counts
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| (k, c as usize))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_at_small_cases() {
        assert_eq!(edge_triangle_counts(AdeType::D(4)), (7, 3));
        assert_eq!(edge_triangle_counts(AdeType::D(5)), (8, 4));
        assert_eq!(edge_triangle_counts(AdeType::D(10)), (28, 15));
        assert_eq!(edge_triangle_counts(AdeType::A(7)), (3, 0));
    }

    #[test]
    fn census_sizes_match_discrepancy_rows() {
        for ty in AdeType::up_to(25) {
            let n: usize = surface_census(ty).values().sum();
            assert_eq!(n, discrepancies(ty).len(), "{ty}");
        }
    }
}
