//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![BigInt::from(c)])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - λ`.
    pub fn one_minus_lambda() -> Self {
        IntPolynomial::from_i64(&[1, -1])
    }

    /// `1 + λ`.
    pub fn one_plus_lambda() -> Self {
        IntPolynomial::from_i64(&[1, 1])
    }

    /// `(1 - λ)^k`, expanded by the binomial theorem.
    pub fn one_minus_lambda_pow(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for i in 0..=k {
            coeffs.push(if i % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
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

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Divides by `1 - λ`, returning quotient and remainder (a constant).
    pub fn div_rem_one_minus_lambda(&self) -> (IntPolynomial, BigInt) {
        // p(λ) = (1-λ) q(λ) + r. Writing q = Σ q_i λ^i gives
        // q_{d-1} = -p_d and q_{i-1} = q_i - p_i, with r = p_0 - q_0.
        let Some(d) = self.degree() else {
            return (IntPolynomial::zero(), BigInt::zero());
        };
        if d == 0 {
            return (IntPolynomial::zero(), self.coeffs[0].clone());
        }
        let mut q = vec![BigInt::zero(); d];
        q[d - 1] = -self.coeffs[d].clone();
        for i in (1..d).rev() {
            q[i - 1] = &q[i] - &self.coeffs[i];
        }
        let r = &self.coeffs[0] - &q[0];
        (IntPolynomial::new(q), r)
    }

    /// Divides by `(1 - λ)^k` exactly, or returns `None` if a remainder appears.
    pub fn exact_div_one_minus_lambda_pow(&self, k: usize) -> Option<IntPolynomial> {
        let mut cur = self.clone();
        for _ in 0..k {
            let (q, r) = cur.div_rem_one_minus_lambda();
            if !r.is_zero() {
                return None;
            }
            cur = q;
        }
        Some(cur)
    }

    /// Multiplicity of `λ = 1` as a root; `None` for the zero polynomial.
    pub fn multiplicity_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = cur.div_rem_one_minus_lambda();
            if !r.is_zero() {
                return Some(k);
            }
            cur = q;
            k += 1;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<serde_json::Number> =
            self.coeffs.iter().map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal")).collect();
        nums.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let nums = Vec::<serde_json::Number>::deserialize(d)?;
        let coeffs =
            nums.iter().map(|n| BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom)).collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
