use coverdeg::poly::{factorial, series_h_extract};
use coverdeg::IntPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-50i64..50, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonzero_at_minus1(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_deg).prop_filter("q(-1) != 0", |q| !q.eval_i64(-1).is_zero_big())
}

trait IsZero {
    fn is_zero_big(&self) -> bool;
}

impl IsZero for BigInt {
    fn is_zero_big(&self) -> bool {
        *self == BigInt::from(0)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn planted_root_multiplicity(q in nonzero_at_minus1(8), k in 0usize..10) {
        let p = &IntPoly::one_plus_x_pow(k) * &q;
        let (m, c) = p.ord_at_minus1().unwrap();
        prop_assert_eq!(m, k);
        // P(u − 1) = u^k q(u − 1), so the lead is q(−1)
        prop_assert_eq!(c, q.eval_i64(-1));
    }

    #[test]
    fn shift_is_a_ring_homomorphism(p in poly(8), q in poly(8)) {
        prop_assert_eq!((&p * &q).shift_sub(), &p.shift_sub() * &q.shift_sub());
        prop_assert_eq!((&p + &q).shift_sub(), &p.shift_sub() + &q.shift_sub());
    }

    #[test]
    fn derivatives_are_taylor_coefficients(p in poly(10)) {
        let s = p.shift_sub();
        for k in 0..=p.degree().unwrap_or(0) {
            let d = p.derivative_at(k, &BigInt::from(-1)) / factorial(k as u64);
            prop_assert_eq!(d, s.coeff(k));
        }
    }

    #[test]
    fn series_extraction_inverts_expansion(h in poly(6), dim in 0usize..6) {
        // coefficients of h(t) / (1 − t)^dim up to a safe length
        let top = h.degree().unwrap_or(0) + 2 * dim + 3;
        let inv: Vec<BigInt> = (0..top)
            .map(|d| coverdeg::poly::binom(d as i64 + dim as i64 - 1, dim as i64 - 1))
            .collect();
        let inv = if dim == 0 {
            let mut v = vec![BigInt::from(0); top];
            v[0] = BigInt::from(1);
            v
        } else {
            inv
        };
        let hf: Vec<BigInt> = (0..top)
            .map(|d| (0..=d).map(|i| h.coeff(i) * &inv[d - i]).sum())
            .collect();
        prop_assert_eq!(series_h_extract(&hf, dim).unwrap(), h);
    }
}
