use modeq21::qseries::{euler_f_minus, theta_f_plus};
use modeq21::{Exponent, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A series on the lattice `step` (in 1/24 ticks) with a nonzero lead.
fn series_on(step: i64) -> impl Strategy<Value = QSeries> {
    (
        -3i64..4,
        prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        prop::collection::vec(-4i64..5, 0..10),
        4i64..14,
    )
        .prop_map(move |(lead, c0, rest, len)| {
            let len = len.max(rest.len() as i64 + 1);
            let terms = std::iter::once((lead, c0))
                .chain(rest.into_iter().enumerate().map(|(i, c)| (lead + 1 + i as i64, c)))
                .map(|(i, c)| (Exponent::from_ticks(i * step), rat(c)));
            QSeries::from_terms(terms, Exponent::from_ticks((lead + len) * step))
        })
}

fn any_series() -> impl Strategy<Value = QSeries> {
    prop::sample::select(vec![24i64, 12, 8, 6]).prop_flat_map(series_on)
}

fn integer_series() -> impl Strategy<Value = QSeries> {
    series_on(24)
}

/// `a` and `b` agree wherever both are known.
fn agree(a: &QSeries, b: &QSeries) -> bool {
    let v = a.valid_to().min(b.valid_to());
    a.truncate(v) == b.truncate(v)
}

fn lead(a: &QSeries) -> Exponent {
    a.lead().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn invert_mul_round_trip(a in any_series()) {
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv);
        let expected = a.valid_to().saturating_sub(lead(&a));
        prop_assert_eq!(prod.valid_to(), expected);
        prop_assert_eq!(prod, QSeries::one().truncate(expected));
        prop_assert_eq!(inv.valid_to(), a.valid_to().saturating_sub(lead(&a)).saturating_sub(lead(&a)));
    }

    #[test]
    fn double_inverse(a in any_series()) {
        let back = a.invert().unwrap().invert().unwrap();
        prop_assert!(agree(&back, &a));
        prop_assert_eq!(back.valid_to(), a.valid_to());
    }

    #[test]
    fn sqrt_square_round_trip(b in any_series()) {
        let b = if b.lead_term().unwrap().1 < &Rational::zero() { b.negate() } else { b };
        let a = b.mul(&b);
        let root = a.sqrt().unwrap();
        prop_assert_eq!(root.valid_to(), b.valid_to());
        prop_assert!(agree(&root, &b));
        let sq = root.mul(&root);
        prop_assert!(agree(&sq, &a));
    }

    #[test]
    fn neg_q_is_an_involution(a in integer_series()) {
        let once = a.substitute_neg_q().unwrap();
        prop_assert_eq!(once.substitute_neg_q().unwrap(), a.clone());
        // it is a ring map
        let b = a.add(&QSeries::monomial(Exponent::from_int(1), rat(1), Exponent::EXACT));
        prop_assert_eq!(
            a.mul(&b).substitute_neg_q().unwrap(),
            once.mul(&b.substitute_neg_q().unwrap())
        );
    }

    #[test]
    fn rescale_is_multiplicative(a in any_series(), b in any_series(), k in 1u32..5) {
        prop_assert_eq!(a.mul(&b).rescale(k), a.rescale(k).mul(&b.rescale(k)));
        prop_assert_eq!(a.add(&b).rescale(k), a.rescale(k).add(&b.rescale(k)));
        prop_assert_eq!(a.invert().unwrap().rescale(k), a.rescale(k).invert().unwrap());
    }

    #[test]
    fn ring_laws(a in any_series(), b in any_series(), c in any_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.sub(&a).is_empty());
    }

    #[test]
    fn pow_int_matches_repeated_products(a in any_series(), n in 0i64..5) {
        let mut acc = QSeries::one();
        for _ in 0..n {
            acc = acc.mul(&a);
        }
        prop_assert_eq!(a.pow_int(n).unwrap(), acc.clone());
        if n > 0 {
            prop_assert!(agree(&a.pow_int(-n).unwrap(), &acc.invert().unwrap()));
        }
    }

    #[test]
    fn shift_and_scale(a in any_series(), t in -48i64..48, c in 1i64..6) {
        let e = Exponent::from_ticks(t);
        let m = QSeries::monomial(e, rat(c), Exponent::EXACT);
        prop_assert_eq!(a.shift(e).scale(&rat(c)), a.mul(&m));
    }

    #[test]
    fn generators(k in 1u32..8, order in 1i64..80) {
        let order = Exponent::from_int(order);
        let f = euler_f_minus(k, order);
        prop_assert_eq!(f.valid_to(), order);
        for (e, c) in f.terms() {
            prop_assert!(c == &rat(1) || c == &rat(-1));
            prop_assert!(e.is_integer());
        }
        // f(q^k) is f(−q^k) under q → −q when k is odd
        if k % 2 == 1 {
            prop_assert_eq!(theta_f_plus(k, order), f.substitute_neg_q().unwrap());
        }
        prop_assert_eq!(f.rescale(2), euler_f_minus(2 * k, order.saturating_add(order)));
        prop_assert!(f.mul(&f.invert().unwrap()).truncate(order) == QSeries::one().truncate(order));
    }
}
