//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// `C(a, b)`, zero whenever `a < b` or `b < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    r
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// `(1 + x)^k`.
    pub fn one_plus_x_pow(k: usize) -> Self {
        Self::new((0..=k as i64).map(|i| binom(k as i64, i)).collect())
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        Self::new(
            (0..=k as i64)
                .map(|i| {
                    let b = binom(k as i64, i);
                    if i % 2 == 1 {
                        -b
                    } else {
                        b
                    }
                })
                .collect(),
        )
    }

    /// `c · x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `p(u − 1)` expressed in `u`: the Taylor coefficients of `p` at `−1`.
    pub fn shift_sub(&self) -> Self {
        let mut c = self.coeffs.clone();
        let d = c.len();
        for i in 0..d.saturating_sub(1) {
            for j in (i..d - 1).rev() {
                let t = c[j + 1].clone();
                c[j] -= t;
            }
        }
        Self::new(c)
    }

    /// Largest `k` with `(x + 1)^k | p`, and the first nonzero Taylor
    /// coefficient of `p` at `−1`.
    pub fn ord_at_minus1(&self) -> Result<(usize, BigInt)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut q = self.coeffs.clone();
        let mut k = 0;
        loop {
            // synthetic division by (x + 1)
            let d = q.len() - 1;
            let mut b = vec![BigInt::zero(); d];
            let mut carry = BigInt::zero();
            for i in (0..=d).rev() {
                let v = &q[i] - &carry;
                if i == 0 {
                    if !v.is_zero() {
                        return Ok((k, IntPoly::new(q).eval_i64(-1)));
                    }
                } else {
                    b[i - 1] = v.clone();
                }
                carry = v;
            }
            q = b;
            k += 1;
        }
    }

    /// `p^{(k)}(x0)`.
    pub fn derivative_at(&self, k: usize, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, a) in self.coeffs.iter().enumerate().skip(k).rev() {
            let falling: BigInt = ((i - k + 1)..=i).fold(BigInt::one(), |f, m| f * m);
            acc = acc * x0 + a * falling;
        }
        // The loop above is Horner in x0 over i - k, highest first.
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let term = match i {
                0 => mag.to_string(),
                _ => {
                    let pow = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if mag.is_one() {
                        pow
                    } else {
                        format!("{mag}*{pow}")
                    }
                }
            };
            s.push_str(&term);
        }
        s
    }
}

/// Recovers the numerator `h` of `Σ hf[d] t^d = h(t) / (1 − t)^dim` from a
/// truncated Hilbert function. The last `dim + 1` coefficients of the
/// truncated product must vanish; that is the rationality check.
pub fn series_h_extract(hf: &[BigInt], dim: usize) -> Result<IntPoly> {
    let top = hf.len();
    if top < dim + 2 {
        return Err(Error::Precondition(format!(
            "need at least {} Hilbert function values for dim {dim}",
            dim + 2
        )));
    }
    let f = IntPoly::one_minus_t_pow(dim);
    let mut prod = vec![BigInt::zero(); top];
    for (i, a) in hf.iter().enumerate() {
        for (j, b) in f.coeffs().iter().enumerate() {
            if i + j < top {
                prod[i + j] += a * b;
            }
        }
    }
    if let Some(k) = (top - dim - 1..top).find(|&k| !prod[k].is_zero()) {
        return Err(Error::SeriesNotRational(k));
    }
    Ok(IntPoly::new(prod))
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.display_in("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (i, b) in short.coeffs.iter().enumerate() {
            c[i] += b;
        }
        IntPoly::new(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}

owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
