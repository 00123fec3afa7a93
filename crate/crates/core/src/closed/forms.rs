use crate::algebra::{rat, CyclotomicFraction as CF, CyclotomicProduct, Polynomial, RationalFunction};
use crate::catalog::AdeType;
use crate::error::Result;

use super::sets::{self, Pair, Triple};

fn poly(c: &[i64]) -> CF {
    CF::from_polynomial(&Polynomial::from_ints(c))
}

fn konst(c: i64) -> CF {
    CF::constant(rat(c))
}

/// `1 / (w^m - 1)`.
fn inv(m: u32) -> CF {
    CF::over_binomial(&Polynomial::one(), m)
}

/// `(w - w^m) / (w^m - 1)`.
fn ef(m: u32) -> CF {
    let num = &Polynomial::w() - &Polynomial::monomial(rat(1), m as usize);
    CF::over_binomial(&num, m)
}

/// `1 / ((w^p - 1)(w^q - 1))`.
fn inv2(p: u32, q: u32) -> CF {
    CF::new(&Polynomial::one(), &CyclotomicProduct::binomial(p) * &CyclotomicProduct::binomial(q))
}

fn sum(terms: impl IntoIterator<Item = CF>) -> CF {
    CF::sum(terms.into_iter().collect())
}

fn pair_sum(pairs: &[Pair]) -> CF {
    sum(pairs.iter().map(|&(k, l)| &ef(k + 1) * &ef(l + 1)))
}

fn triple_sum(triples: &[Triple]) -> CF {
    sum(triples.iter().map(|&(k, l, m)| &(&ef(k + 1) * &ef(l + 1)) * &ef(m + 1)))
}

fn w_minus_1() -> CF {
    poly(&[-1, 1])
}

fn w_plus_1() -> CF {
    poly(&[1, 1])
}

/// `(w - 1)(w + 1)^2`.
fn quadric_block() -> CF {
    poly(&[-1, -1, 1, 1])
}

/// `(w - 1)(1 + 4w + w^2)`.
fn blown_block() -> CF {
    poly(&[-1, -3, 3, 1])
}

/// The closed formula for `E_str`, assembled term by term as written.
pub fn closed_e_function(ty: AdeType) -> Result<RationalFunction> {
    ty.validate()?;
    let f = match ty {
        AdeType::A(n) if n % 2 == 0 => a_even(n),
        AdeType::A(n) => a_odd(n),
        AdeType::D(n) if n % 2 == 0 => d_even(n),
        AdeType::D(n) => d_odd(n),
        AdeType::E6 => e6(),
        AdeType::E7 => e7(),
        AdeType::E8 => e8(),
    };
    Ok(f.to_rational_function())
}

fn a_even(n: u32) -> CF {
    let h = n / 2;
    let wm1_w2m1 = poly(&[1, -1, -1, 1]);
    let head = poly(&[-1, 1, 0, 1]);
    let s1 = sum((2..=h).map(|i| &wm1_w2m1 * &inv(i + 1)));
    let top = &poly(&[0, 0, -1, 1]) * &inv(n + 3);
    let bracket = &sum((1..h).map(|i| inv2(i + 1, i + 2))) + &inv2(h + 1, n + 3);
    CF::sum(vec![head, s1, top, &wm1_w2m1 * &bracket])
}

fn a_odd(n: u32) -> CF {
    let floor_1_n = i64::from(n == 1);
    let ceil = i64::from(n > 1);
    let head = &(&quadric_block() + &poly(&[0, 1])) + &konst(floor_1_n);
    let m = (n - 1) / 2;
    let s1 = sum((2..=m).map(|i| &w_minus_1() * &inv(i + 1)));
    let mid = &poly(&[0, 1]) * &inv((n + 3) / 2);
    let s2 = sum((1..=m).map(|i| &w_minus_1() * &inv2(i + 1, i + 2)));
    let bracket = CF::sum(vec![s1, mid, s2]);
    let tail = &(&poly(&[-1, 0, 1]) * &bracket) * &konst(ceil);
    &head + &tail
}

fn d_even(n: u32) -> CF {
    let h = n / 2;
    let t1 = poly(&[-1, -2, 2, 1]);
    let b2 = &(&konst(2) * &inv(n)) + &sum((3..=h + 1).map(|i| inv(2 * (n + 4 - 2 * i))));
    let t2 = &quadric_block() * &b2;
    let b3 = sum((1..h).map(|i| inv(h - i + 1)));
    let t3 = &(&konst(2) * &blown_block()) * &b3;
    let b4 = &(&(&konst(4) * &ef(n)) * &ef(h)) + &sum((1..h).map(|i| {
        let e = ef(h - i + 1);
        &e * &e
    }));
    let t4 = &w_plus_1() * &b4;
    let b5 = &(&konst(2) * &pair_sum(&sets::d_even_pairs(n))) - &konst(7 * (i64::from(h) - 1));
    let t5 = &w_plus_1() * &b5;
    let t6 = triple_sum(&sets::d_even_triples(n));
    let t7 = &konst(2) * &triple_sum(&sets::d_even_triples_primed(n));
    let c = konst(2 * i64::from(n) - 5);
    CF::sum(vec![t1, t2, t3, t4, t5, t6, t7, c])
}

fn d_odd(n: u32) -> CF {
    let h = (n - 1) / 2;
    let m = (n - 3) / 2;
    let t1 = quadric_block();
    let b2 = CF::sum(vec![
        inv(n - 1),
        inv(n),
        sum((3..=n.div_ceil(2)).map(|i| inv(2 * (n + 3 - 2 * i)))),
    ]);
    let t2 = &quadric_block() * &b2;
    let b3 = sum((1..=m).map(|i| inv(h - i + 1)));
    let t3 = &(&konst(2) * &blown_block()) * &b3;
    let t4 = &(&(&konst(2) * &w_plus_1()) * &ef(h)) * &(&ef(n) + &ef(n - 1));
    let b5 = &(&ef(n) * &ef(n - 1)) + &sum((1..=m).map(|i| {
        let e = ef(h - i + 1);
        &e * &e
    }));
    let t5 = &w_plus_1() * &b5;
    // -(7/2)(n - 1) + 6 is an integer since n is odd
    let b6 = &(&konst(2) * &pair_sum(&sets::d_odd_pairs(n)))
        + &konst(-7 * (i64::from(n) - 1) / 2 + 6);
    let t6 = &w_plus_1() * &b6;
    let t7 = triple_sum(&sets::d_odd_triples(n));
    let t8 = &konst(2) * &triple_sum(&sets::d_odd_triples_primed(n));
    let c = konst(2 * (i64::from(n) - 1) - 4);
    CF::sum(vec![t1, t2, t3, t4, t5, t6, t7, t8, c])
}

fn e6() -> CF {
    let w1 = w_plus_1();
    let head = CF::sum(vec![
        poly(&[-1, 0, 0, 1]),
        CF::new(&Polynomial::from_ints(&[1, 1]), CyclotomicProduct::cyclotomic(4)),
        &quadric_block() * &inv(7),
        &quadric_block() * &inv(10),
        CF::new(&Polynomial::from_ints(&[2, 8, 2]), CyclotomicProduct::cyclotomic(2)),
    ]);
    let pairs = &w1 * &(&pair_sum(&sets::E6_PAIRS) - &konst(9));
    CF::sum(vec![head, pairs, triple_sum(&sets::E6_TRIPLES), konst(5)])
}

fn e7() -> CF {
    let b1 = sum([konst(1), inv(6), inv(10), inv(12), inv(14)]);
    let b2 = sum([inv(2), inv(3), inv(5)]);
    CF::sum(vec![
        &quadric_block() * &b1,
        &(&konst(2) * &blown_block()) * &b2,
        &w_plus_1() * &(&pair_sum(&sets::E7_PAIRS) - &konst(21)),
        triple_sum(&sets::E7_TRIPLES),
        konst(12),
    ])
}

fn e8() -> CF {
    let b1 = sum([inv(12), inv(16), inv(20), inv(24)]);
    let b2 = sum([inv(2), inv(3), inv(5), inv(8)]);
    CF::sum(vec![
        poly(&[-1, 0, 0, 1]),
        &quadric_block() * &b1,
        &(&konst(2) * &blown_block()) * &b2,
        &w_plus_1() * &(&pair_sum(&sets::E8_PAIRS) - &konst(28)),
        triple_sum(&sets::E8_TRIPLES),
        konst(17),
    ])
}
