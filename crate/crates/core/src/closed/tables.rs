use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{frac, rat, BigRational};
use crate::catalog::AdeType;
use crate::error::Result;

/// Closed value of `e_str`.
pub fn closed_e_number(ty: AdeType) -> Result<BigRational> {
    ty.validate()?;
    Ok(match ty {
        AdeType::A(n) if n % 2 == 1 => rat(2),
        AdeType::A(n) => rat(2) - frac(3, i64::from(n) + 3),
        AdeType::D(n) if n % 2 == 0 => d_even_number(i64::from(n)),
        AdeType::D(n) => d_odd_number(i64::from(n)),
        AdeType::E6 => frac(67, 40),
        AdeType::E7 => frac(609_851, 189_000),
        AdeType::E8 => frac(315_467, 230_400),
    })
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn q(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn d_even_number(n: i64) -> BigRational {
    let b = big(n);
    let head_num = big(80) * b.pow(4) - big(381) * b.pow(3) + big(96) * b.pow(2) - big(128);
    let mut v = -q(head_num, big(16) * b.pow(3));
    for i in 1..=n / 2 - 2 {
        let i = big(i);
        let num = big(372) - big(492) * b.pow(2) - big(32) * &i - big(184) * b.pow(3)
            + big(20) * b.pow(4)
            + big(688) * &i * &b
            - big(160) * &i * b.pow(3)
            + big(304) * &i * b.pow(2)
            + big(208) * &b
            + big(5) * b.pow(5)
            - big(50) * &i * b.pow(4);
        let base = &b - big(2) * &i;
        let den = base.pow(3) * (&base + big(2)).pow(2);
        v += q(big(2) * num, den);
    }
    v
}

fn d_odd_number(n: i64) -> BigRational {
    let b = big(n);
    let head_num = big(-96) * b.pow(3) + big(765) * b.pow(2) - big(1562) * &b + big(1085);
    let mut v = q(head_num, big(16) * (&b - big(1)).pow(2));
    for i in 1..=(n - 5) / 2 {
        let i = big(i);
        let num = big(585) * &b - big(129) + big(130) * b.pow(2) - big(306) * &i
            - big(214) * b.pow(3)
            - big(5) * b.pow(4)
            - big(200) * &i * &b
            + big(40) * &i * b.pow(3)
            + big(484) * &i * b.pow(2)
            + big(5) * b.pow(5)
            - big(50) * &i * b.pow(4);
        let den = (&b + big(1) - big(2) * &i).pow(2) * (&b - big(1) - big(2) * &i).pow(3);
        v += q(big(2) * num, den);
    }
    v
}

/// The stated index: an exact value, or the integer interval `(lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IndexCheck {
    Exact {
        #[serde(with = "crate::algebra::integer_string")]
        value: BigInt,
    },
    Interval {
        #[serde(with = "crate::algebra::integer_string")]
        lower: BigInt,
        #[serde(with = "crate::algebra::integer_string")]
        upper: BigInt,
    },
}

impl IndexCheck {
    pub fn contains(&self, x: &BigInt) -> bool {
        match self {
            IndexCheck::Exact { value } => x == value,
            IndexCheck::Interval { lower, upper } => lower < x && x <= upper,
        }
    }
}

impl std::fmt::Display for IndexCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndexCheck::Exact { value } => write!(f, "{value}"),
            IndexCheck::Interval { lower, upper } => write!(f, "({lower}, {upper}]"),
        }
    }
}

/// The stated stringy index.
pub fn closed_index(ty: AdeType) -> Result<IndexCheck> {
    ty.validate()?;
    let exact = |v: BigInt| IndexCheck::Exact { value: v };
    Ok(match ty {
        AdeType::A(n) if n % 2 == 1 => exact(BigInt::one()),
        AdeType::A(n) if n % 6 == 0 => exact(big(i64::from(n) / 3 + 1)),
        AdeType::A(n) => exact(big(i64::from(n) + 3)),
        AdeType::D(n) => {
            let n = i64::from(n);
            let upper = if n % 2 == 0 {
                (1..=n / 2 - 2).fold(big(n).pow(3), |acc, i| {
                    acc * big(n - 2 * i).pow(3) * big(n - 2 * i + 2).pow(2)
                })
            } else {
                (1..=(n - 5) / 2).fold(big(16) * big(n - 1).pow(2), |acc, i| {
                    acc * big(n + 1 - 2 * i).pow(2) * big(n - 1 - 2 * i).pow(3)
                })
            };
            IndexCheck::Interval { lower: big(n), upper }
        }
        AdeType::E6 => exact(big(40)),
        AdeType::E7 => exact(big(189_000)),
        AdeType::E8 => exact(big(230_400)),
    })
}

/// `(μ, r, s_1, s_2)` row of the Milnor-number table.
pub fn milnor_table(ty: AdeType) -> (u32, u32, u32, u32) {
    match ty {
        AdeType::A(n) if n % 2 == 1 => (n, 2, (n - 1) / 2, n.div_ceil(2)),
        AdeType::A(n) => (n, 1, n / 2, n / 2),
        AdeType::D(n) if n % 2 == 1 => (n, 2, (n - 1) / 2, n.div_ceil(2)),
        AdeType::D(n) => (n, 3, (n - 2) / 2, (n + 2) / 2),
        AdeType::E6 => (6, 1, 3, 3),
        AdeType::E7 => (7, 2, 3, 4),
        AdeType::E8 => (8, 1, 4, 4),
    }
}
