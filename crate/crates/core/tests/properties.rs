use proptest::prelude::*;

use qeuler_core::qring::qcomb::q_binom_by_division;
use qeuler_core::qring::{binomial, poch_t, q_binom, subst_q_recip};
use qeuler_core::{BiPoly, Int, QLaurent, QPoly, Sign, TQPoly};

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-1000i64..1000, 0..=31).prop_map(|c| QPoly::from_ints(&c))
}

fn qlaurent() -> impl Strategy<Value = QLaurent> {
    (qpoly(), -15i64..15).prop_map(|(p, off)| QLaurent::new(p, off))
}

fn tqpoly() -> impl Strategy<Value = TQPoly> {
    prop::collection::vec(
        (prop::collection::vec(-50i64..50, 0..=8), -4i64..4)
            .prop_map(|(c, off)| QLaurent::new(QPoly::from_ints(&c), off)),
        0..=5,
    )
    .prop_map(BiPoly::new)
}

fn nonzero<T: Strategy>(s: T) -> impl Strategy<Value = T::Value>
where
    T::Value: PartialEq + Default + std::fmt::Debug,
{
    s.prop_filter("nonzero divisor", |x| *x != Default::default())
}

macro_rules! ring_axioms {
    ($name:ident, $strat:expr, $ty:ty) => {
        mod $name {
            use super::*;

            proptest! {
                #![proptest_config(ProptestConfig::with_cases(200))]

                #[test]
                fn associativity(a in $strat, b in $strat, c in $strat) {
                    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                }

                #[test]
                fn commutativity(a in $strat, b in $strat) {
                    prop_assert_eq!(&a + &b, &b + &a);
                    prop_assert_eq!(&a * &b, &b * &a);
                }

                #[test]
                fn distributivity(a in $strat, b in $strat, c in $strat) {
                    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                }

                #[test]
                fn additive_inverse(a in $strat, b in $strat) {
                    prop_assert_eq!(&a + &(-&a), <$ty>::default());
                    prop_assert_eq!(&(&a - &b) + &b, a);
                }

                #[test]
                fn division_undoes_multiplication(a in $strat, d in nonzero($strat)) {
                    prop_assert_eq!((&a * &d).exact_div(&d).unwrap(), Some(a));
                }
            }
        }
    };
}

ring_axioms!(poly_ring, qpoly(), QPoly);
ring_axioms!(laurent_ring, qlaurent(), QLaurent);
ring_axioms!(bivariate_ring, tqpoly(), TQPoly);

proptest! {
    #[test]
    fn reciprocal_is_an_involution(p in qpoly()) {
        let twice = subst_q_recip(&p).recip();
        prop_assert_eq!(twice.to_poly(), Some(p));
    }

    #[test]
    fn laurent_poly_round_trip(p in qpoly(), k in 0i64..10) {
        let l = QLaurent::from(p.clone()).shift(k);
        prop_assert_eq!(l.to_poly(), Some(p.shift(k as usize)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in qpoly(), b in qpoly(), x in -5i64..5, y in 1i64..5) {
        let x = qeuler_core::Rat::new(Int::from(x), Int::from(y));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }
}

/// `(z; q)_N = sum_j [N, j]_q (-z)^j q^{j(j-1)/2}` with `z = t`.
#[test]
fn q_binomial_theorem() {
    for big_n in 0..=12usize {
        let product = poch_t::<Int>(0, big_n, Sign::Plus, 1);
        let sum = BiPoly::from_polys((0..=big_n).map(|j| {
            let term = q_binom::<Int>(big_n, j as i64).shift(j * j.saturating_sub(1) / 2);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        }));
        assert_eq!(product, sum, "N = {big_n}");
    }
}

#[test]
fn q_binomial_symmetry_and_specialization() {
    for n in 0..=20usize {
        for k in 0..=n {
            let b = q_binom::<Int>(n, k as i64);
            assert_eq!(b, q_binom::<Int>(n, (n - k) as i64));
            assert_eq!(b.at_one(), binomial::<Int>(n, k));
        }
    }
    for n in 0..=12usize {
        for k in 0..=n as i64 {
            assert_eq!(q_binom::<Int>(n, k), q_binom_by_division::<Int>(n, k));
        }
    }
}
