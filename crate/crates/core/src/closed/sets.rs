//! Discrepancy pairs and triples indexing the edge and triangle sums of the
//! closed formulas, as ordered tuples exactly as they are listed.

use crate::catalog::AdeType;

pub type Pair = (u32, u32);
pub type Triple = (u32, u32, u32);

pub(crate) fn d_even_pairs(n: u32) -> Vec<Pair> {
    let h = n / 2;
    let mut v = Vec::new();
    for i in 1..=h.saturating_sub(2) {
        v.push((h - i, h - (i + 1)));
    }
    for i in 1..h {
        v.push((h - i, 2 * (n - 2 * i) - 1));
    }
    for i in 1..=h.saturating_sub(2) {
        v.push((h - (i + 1), 2 * (n - 2 * i) - 1));
    }
    v
}

pub(crate) fn d_even_triples(n: u32) -> Vec<Triple> {
    let h = n / 2;
    let mut v = Vec::new();
    for i in 1..h {
        v.push((h - i, h - i, 2 * (n - 2 * i) - 1));
    }
    for i in 1..=h.saturating_sub(2) {
        v.push((h - (i + 1), h - (i + 1), 2 * (n - 2 * i) - 1));
    }
    v
}

pub(crate) fn d_even_triples_primed(n: u32) -> Vec<Triple> {
    let h = n / 2;
    let mut v = Vec::new();
    for i in 1..=h.saturating_sub(2) {
        v.push((h - i, h - (i + 1), 2 * (n - 2 * i) - 1));
    }
    v.push((n - 1, h - 1, h - 1));
    v
}

pub(crate) fn d_odd_pairs(n: u32) -> Vec<Pair> {
    let h = (n - 1) / 2;
    let mut v = Vec::new();
    for i in 1..=(n - 3) / 2 - 1 {
        v.push((h - i, h - (i + 1)));
    }
    for i in 1..=(n - 3) / 2 {
        v.push((h - i, 2 * (n - 2 * i) - 3));
    }
    for i in 1..=(n - 3) / 2 - 1 {
        v.push((h - (i + 1), 2 * (n - 2 * i) - 3));
    }
    v
}

pub(crate) fn d_odd_triples(n: u32) -> Vec<Triple> {
    let h = (n - 1) / 2;
    let mut v = vec![(n - 1, (n - 3) / 2, (n - 3) / 2)];
    for i in 1..=(n - 3) / 2 {
        v.push((h - i, h - i, 2 * (n - 2 * i) - 3));
    }
    for i in 1..=(n - 3) / 2 - 1 {
        v.push((h - (i + 1), h - (i + 1), 2 * (n - 2 * i) - 3));
    }
    v
}

pub(crate) fn d_odd_triples_primed(n: u32) -> Vec<Triple> {
    let h = (n - 1) / 2;
    let mut v = Vec::new();
    for i in 1..=(n - 3) / 2 - 1 {
        v.push((h - i, h - (i + 1), 2 * (n - 2 * i) - 3));
    }
    v.push((n - 1, n - 2, (n - 3) / 2));
    v
}

pub(crate) const E6_PAIRS: [Pair; 9] =
    [(1, 1), (1, 3), (3, 1), (1, 6), (6, 1), (1, 9), (9, 1), (3, 6), (6, 9)];

pub(crate) const E6_TRIPLES: [Triple; 5] = [(1, 1, 9), (1, 6, 9), (1, 9, 6), (1, 3, 6), (1, 6, 3)];

pub(crate) const E7_PAIRS: [Pair; 21] = [
    (4, 9),
    (9, 4),
    (4, 11),
    (11, 4),
    (1, 11),
    (11, 1),
    (4, 4),
    (1, 4),
    (4, 1),
    (4, 13),
    (13, 4),
    (2, 13),
    (13, 2),
    (2, 2),
    (2, 5),
    (5, 2),
    (1, 2),
    (2, 1),
    (4, 2),
    (2, 4),
    (1, 1),
];

pub(crate) const E7_TRIPLES: [Triple; 12] = [
    (1, 1, 11),
    (1, 2, 4),
    (1, 4, 2),
    (1, 4, 11),
    (1, 11, 4),
    (2, 2, 5),
    (2, 2, 13),
    (2, 4, 13),
    (2, 13, 4),
    (4, 4, 9),
    (4, 4, 11),
    (4, 4, 13),
];

pub(crate) const E8_PAIRS: [Pair; 28] = [
    (1, 1),
    (1, 2),
    (2, 1),
    (1, 4),
    (4, 1),
    (1, 11),
    (11, 1),
    (2, 2),
    (2, 4),
    (4, 2),
    (2, 7),
    (7, 2),
    (2, 19),
    (19, 2),
    (4, 4),
    (4, 7),
    (7, 4),
    (4, 11),
    (11, 4),
    (4, 23),
    (23, 4),
    (7, 7),
    (7, 15),
    (15, 7),
    (7, 19),
    (19, 7),
    (7, 23),
    (23, 7),
];

pub(crate) const E8_TRIPLES: [Triple; 17] = [
    (1, 1, 11),
    (1, 2, 4),
    (1, 4, 2),
    (1, 4, 11),
    (1, 11, 4),
    (2, 2, 19),
    (2, 4, 7),
    (2, 7, 4),
    (2, 7, 19),
    (2, 19, 7),
    (4, 4, 11),
    (4, 4, 23),
    (4, 7, 23),
    (4, 23, 7),
    (7, 7, 15),
    (7, 7, 19),
    (7, 7, 23),
];

/// Every discrepancy pair and triple the closed formula sums over, with
/// multiplicity, including the explicitly written products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSets {
    pub pairs: Vec<Pair>,
    pub triples: Vec<Triple>,
}

impl ExponentSets {
    /// Both lists with every tuple sorted, and the lists themselves sorted.
    pub fn sorted(&self) -> ExponentSets {
        let mut pairs: Vec<Pair> = self.pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let mut triples: Vec<Triple> = self
            .triples
            .iter()
            .map(|&(a, b, c)| {
                let mut t = [a, b, c];
                t.sort_unstable();
                (t[0], t[1], t[2])
            })
            .collect();
        triples.sort_unstable();
        ExponentSets { pairs, triples }
    }
}

fn twice<T: Copy>(v: &[T]) -> impl Iterator<Item = T> + '_ {
    v.iter().flat_map(|&x| [x, x])
}

/// `None` for the A-family, whose formulas are not written in this form.
pub fn theorem_exponents(ty: AdeType) -> Option<ExponentSets> {
    let (pairs, triples) = match ty {
        AdeType::A(_) => return None,
        AdeType::D(n) if n % 2 == 0 => {
            let h = n / 2;
            let mut pairs = vec![(n - 1, h - 1); 4];
            pairs.extend((1..h).map(|i| (h - i, h - i)));
            pairs.extend(twice(&d_even_pairs(n)));
            let mut triples = d_even_triples(n);
            triples.extend(twice(&d_even_triples_primed(n)));
            (pairs, triples)
        }
        AdeType::D(n) => {
            let h = (n - 1) / 2;
            let m = (n - 3) / 2;
            let mut pairs = vec![(m, n - 1), (m, n - 1), (m, n - 2), (m, n - 2), (n - 1, n - 2)];
            pairs.extend((1..=m).map(|i| (h - i, h - i)));
            pairs.extend(twice(&d_odd_pairs(n)));
            let mut triples = d_odd_triples(n);
            triples.extend(twice(&d_odd_triples_primed(n)));
            (pairs, triples)
        }
        AdeType::E6 => (E6_PAIRS.to_vec(), E6_TRIPLES.to_vec()),
        AdeType::E7 => (E7_PAIRS.to_vec(), E7_TRIPLES.to_vec()),
        AdeType::E8 => (E8_PAIRS.to_vec(), E8_TRIPLES.to_vec()),
    };
    Some(ExponentSets { pairs, triples })
}
