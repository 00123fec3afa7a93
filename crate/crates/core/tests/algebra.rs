use proptest::prelude::*;

use stringy_core::algebra::{frac, rat, CyclotomicFraction, Polynomial, RationalFunction};
use stringy_core::BigRational;

fn poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_degree + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RationalFunction::normalize(n, d).unwrap())
}

fn is_canonical(f: &RationalFunction) -> bool {
    f.den().is_monic() && f.num().gcd(f.den()).degree() == Some(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalized_forms_are_canonical(f in ratfunc()) {
        prop_assert!(is_canonical(&f));
    }

    #[test]
    fn common_factors_cancel(n in poly(3), d in nonzero_poly(3), h in nonzero_poly(2)) {
        let plain = RationalFunction::normalize(n.clone(), d.clone()).unwrap();
        let padded = RationalFunction::normalize(&n * &h, &d * &h).unwrap();
        prop_assert_eq!(plain, padded);
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        for r in [&a + &b, &a * &b, &a - &c] {
            prop_assert!(is_canonical(&r));
        }
        if !a.is_zero() {
            prop_assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc()) {
        let x = frac(3, 7);
        if let (Ok(va), Ok(vb)) = (a.eval_at(&x), b.eval_at(&x)) {
            prop_assert_eq!((&a + &b).eval_at(&x).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), va * vb);
        }
    }

    #[test]
    fn limit_cancels_vanishing_factors(g in nonzero_poly(3), h in nonzero_poly(3), k in 0u32..4) {
        let one = rat(1);
        prop_assume!(!g.eval(&one).eq(&rat(0)) && !h.eval(&one).eq(&rat(0)));
        let t = Polynomial::from_ints(&[-1, 1]).pow(k);
        let f = RationalFunction::normalize(&g * &t, &h * &t).unwrap();
        prop_assert_eq!(f.limit_at_one().unwrap(), g.eval(&one) / h.eval(&one));
    }

    #[test]
    fn series_of_product_is_convolution(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!a.den().coeff(0).eq(&rat(0)) && !b.den().coeff(0).eq(&rat(0)));
        let sa = a.series_prefix(8).unwrap();
        let sb = b.series_prefix(8).unwrap();
        let sab = (&a * &b).series_prefix(8).unwrap();
        for k in 0..=8 {
            let conv: BigRational = (0..=k).map(|j| &sa[j] * &sb[k - j]).sum();
            prop_assert_eq!(&sab[k], &conv);
        }
    }

    #[test]
    fn json_roundtrip(f in ratfunc()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: RationalFunction = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn cyclotomic_sums_match_generic_sums(terms in prop::collection::vec((poly(4), 1u32..9), 1..6)) {
        let fast = CyclotomicFraction::sum(
            terms.iter().map(|(n, m)| CyclotomicFraction::over_binomial(n, *m)).collect(),
        )
        .to_rational_function();
        let slow = terms.iter().fold(RationalFunction::zero(), |acc, (n, m)| {
            &acc + &RationalFunction::normalize(n.clone(), Polynomial::binomial(*m as usize)).unwrap()
        });
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4)) {
        let g = a.gcd(&b);
        prop_assert!(a.exact_div(&g).unwrap().is_some());
        prop_assert!(b.exact_div(&g).unwrap().is_some());
    }
}

#[test]
fn cross_multiplication_example() {
    // (w - w^4)/(w^4 - 1) = -w(w^2 + w + 1)/((w + 1)(w^2 + 1))
    let f = RationalFunction::normalize(Polynomial::from_ints(&[0, 1, 0, 0, -1]), Polynomial::binomial(4)).unwrap();
    assert_eq!(f.num() * &Polynomial::binomial(4), f.den() * &Polynomial::from_ints(&[0, 1, 0, 0, -1]));
    assert_eq!(f.den().degree(), Some(3));
}
