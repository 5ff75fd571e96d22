//! Independence polynomial and the invariants read off it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{binom, factorial, IntPoly};

/// `P_G(x) = Σ g_i x^i`, `g_i` the number of independent `i`-sets.
pub fn independence_polynomial(g: &Graph) -> IntPoly {
    let mut memo = HashMap::new();
    ip_rec(g, g.vertices(), &mut memo)
}

fn ip_rec(g: &Graph, s: VertexSet, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if s.is_empty() {
        return IntPoly::one();
    }
    if let Some(p) = memo.get(&s.0) {
        return p.clone();
    }
    let comps = g.components_within(s);
    let p = if comps.len() > 1 {
        comps
            .into_iter()
            .fold(IntPoly::one(), |acc, c| &acc * &ip_rec(g, c, memo))
    } else {
        let v = s
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & s).len(), std::cmp::Reverse(v)))
            .expect("nonempty");
        if (g.neighbors(v) & s).is_empty() {
            IntPoly::one_plus_x_pow(s.len())
        } else {
            let a = ip_rec(g, s.without(v), memo);
            let b = ip_rec(g, s - g.closed_neighborhood(v), memo);
            &a + &b.shift_up(1)
        }
    };
    memo.insert(s.0, p.clone());
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub n: usize,
    pub poly: IntPoly,
    pub gvec: Vec<BigInt>,
    pub alpha: usize,
    /// Multiplicity of `−1` as a root of `P_G`.
    pub m: usize,
    /// Coefficient of `u^M` in `P_G(u − 1)`.
    pub c: BigInt,
    /// `Σ_{i≥1} (−1)^{i−1} g_i`.
    pub g_g: BigInt,
    pub euler: BigInt,
}

impl InvariantBundle {
    pub fn from_poly(n: usize, poly: IntPoly) -> Self {
        let alpha = poly.degree().expect("independence polynomials have g_0 = 1");
        let (m, c) = poly.ord_at_minus1().expect("nonzero");
        let g_g = BigInt::one() - poly.eval_i64(-1);
        InvariantBundle {
            n,
            gvec: poly.coeffs().to_vec(),
            alpha,
            m,
            c,
            euler: g_g.clone(),
            g_g,
            poly,
        }
    }

    pub fn g(&self, j: usize) -> BigInt {
        self.gvec.get(j).cloned().unwrap_or_default()
    }

    pub fn has_edge(&self) -> bool {
        self.alpha < self.n
    }
}

pub fn bundle(g: &Graph) -> InvariantBundle {
    InvariantBundle::from_poly(g.n(), independence_polynomial(g))
}

/// `D_s = Σ_{j=s+1}^{α} (−1)^{j−1−s} C(j, s+1) g_j`, for `0 ≤ s ≤ α−1`.
pub fn d_coeff(b: &InvariantBundle, s: usize) -> Result<BigInt> {
    if b.alpha == 0 || s > b.alpha - 1 {
        return Err(Error::IndexOutOfRange {
            index: s as i64,
            lo: 0,
            hi: b.alpha as i64 - 1,
        });
    }
    let mut acc = BigInt::zero();
    for j in s + 1..=b.alpha {
        let t = binom(j as i64, s as i64 + 1) * b.g(j);
        if (j - 1 - s).is_multiple_of(2) {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

/// Same value through the derivative, `P^{(s+1)}(−1) / (s+1)!`.
pub fn d_coeff_derivative(b: &InvariantBundle, s: usize) -> BigInt {
    b.poly.derivative_at(s + 1, &BigInt::from(-1)) / factorial(s as u64 + 1)
}

/// `E_{s+3} = (n−s−2) − Σ_{j=s+3}^{α} C(j−2, s+1) (−1)^{j−s−1} g_j`,
/// for `−1 ≤ s ≤ α−3`.
pub fn e_coeff(b: &InvariantBundle, s: i64) -> Result<BigInt> {
    let hi = b.alpha as i64 - 3;
    if s < -1 || s > hi {
        return Err(Error::IndexOutOfRange { index: s, lo: -1, hi });
    }
    let mut acc = BigInt::from(b.n as i64 - s - 2);
    for j in (s + 3)..=(b.alpha as i64) {
        let t = binom(j - 2, s + 1) * b.g(j as usize);
        if (j - s - 1) % 2 == 0 {
            acc -= t;
        } else {
            acc += t;
        }
    }
    Ok(acc)
}

/// `M` recovered from the `D_s`: zero if `P(−1) ≠ 0`, otherwise one more
/// than the first index with `D_s ≠ 0`.
pub fn m_via_ds(b: &InvariantBundle) -> usize {
    if !b.poly.eval_i64(-1).is_zero() {
        return 0;
    }
    (0..b.alpha)
        .find(|&s| !d_coeff(b, s).expect("in range").is_zero())
        .map(|s| s + 1)
        .expect("P_G is nonzero, so some D_s is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(independence_polynomial(&Graph::path(4)), p(&[1, 4, 3]));
        assert_eq!(independence_polynomial(&Graph::star(3)), p(&[1, 4, 3, 1]));
        assert_eq!(independence_polynomial(&Graph::cycle(4)), p(&[1, 4, 2]));
        assert_eq!(independence_polynomial(&Graph::empty(4)), IntPoly::one_plus_x_pow(4));
        assert_eq!(independence_polynomial(&Graph::empty(0)), IntPoly::one());
        assert_eq!(independence_polynomial(&Graph::cycle(5)), p(&[1, 5, 5]));
    }

    #[test]
    fn bundles() {
        let b = bundle(&Graph::path(4));
        assert_eq!((b.alpha, b.m, b.g_g.clone()), (2, 1, BigInt::from(1)));
        assert_eq!(b.c, BigInt::from(-2));
        let b = bundle(&Graph::complete(3));
        assert_eq!((b.alpha, b.m), (1, 0));
        assert_eq!((b.c.clone(), b.g_g.clone()), (BigInt::from(-2), BigInt::from(3)));
        let b = bundle(&Graph::path(5));
        assert_eq!((b.alpha, b.m, b.g_g.clone()), (3, 0, BigInt::from(0)));
    }

    #[test]
    fn d_and_e_coefficients() {
        let p4 = bundle(&Graph::path(4));
        assert_eq!(d_coeff(&p4, 0).unwrap(), BigInt::from(-2));
        assert_eq!(d_coeff(&p4, 1).unwrap(), BigInt::from(3));
        assert!(d_coeff(&p4, 2).is_err());
        let c3 = bundle(&Graph::complete(3));
        assert_eq!(d_coeff(&c3, 0).unwrap(), BigInt::from(3));
        assert_eq!(e_coeff(&p4, -1).unwrap(), BigInt::from(0));
        assert!(e_coeff(&p4, 0).is_err());
        let c5 = bundle(&Graph::cycle(5));
        assert_eq!(e_coeff(&c5, -1).unwrap(), BigInt::from(-1));
        for s in 0..p4.alpha {
            assert_eq!(d_coeff(&p4, s).unwrap(), d_coeff_derivative(&p4, s));
        }
    }

    #[test]
    fn m_from_ds() {
        assert_eq!(m_via_ds(&bundle(&Graph::path(4))), 1);
        assert_eq!(m_via_ds(&bundle(&Graph::path(5))), 0);
        assert_eq!(m_via_ds(&bundle(&Graph::empty(3))), 3);
    }
}
