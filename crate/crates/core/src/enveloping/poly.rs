//! Univariate rational polynomials: interpolation and rational roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Newton interpolation through the given points; abscissae must be distinct.
    pub fn interpolate(points: &[(Q, Q)]) -> Self {
        let k = points.len();
        let mut dd: Vec<Q> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..k {
            for i in (level..k).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
            }
        }
        // Horner on the Newton form.
        let mut acc = vec![Q::zero()];
        for i in (0..k).rev() {
            let mut next = vec![Q::zero(); acc.len() + 1];
            for (j, c) in acc.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * &points[i].0;
            }
            next[0] += &dd[i];
            acc = next;
        }
        UniPoly::new(acc)
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Result<Vec<Q>> {
        if self.is_zero() {
            return Err(Error::InvalidParams("the zero polynomial has every root".into()));
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let mut roots = Vec::new();
        let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            roots.push(Q::zero());
            ints.drain(..lead_zeros);
        }
        let trimmed = UniPoly::new(ints.iter().map(|c| Q::from_integer(c.clone())).collect());
        if trimmed.degree().unwrap_or(0) > 0 {
            let ps = divisors(&ints[0])?;
            let qs = divisors(ints.last().unwrap())?;
            for p in &ps {
                for qd in &qs {
                    for s in [1i64, -1] {
                        let x = Q::new(p * s, qd.clone());
                        if !roots.contains(&x) && trimmed.eval(&x).is_zero() {
                            roots.push(x);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Is `self` a nonzero constant multiple of `other`?
    pub fn is_proportional_to(&self, other: &UniPoly) -> bool {
        if self.is_zero() || other.is_zero() || self.degree() != other.degree() {
            return false;
        }
        let r = self.coeffs.last().unwrap() / other.coeffs.last().unwrap();
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == &(b * &r))
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let body = match (k, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => var.to_string(),
                (1, false) => format!("{a}*{var}"),
                (_, true) => format!("{var}^{k}"),
                (_, false) => format!("{a}*{var}^{k}"),
            };
            parts.push((sign, body));
        }
        let mut s = String::new();
        for (i, (sign, body)) in parts.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => s.push('-'),
                (0, _) => {}
                (_, sg) => s.push_str(&format!(" {sg} ")),
            }
            s.push_str(body);
        }
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("d"))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// Positive divisors by trial division; refuses numbers beyond 2^64.
fn divisors(x: &BigInt) -> Result<Vec<BigInt>> {
    let x = x.abs().to_u64().ok_or_else(|| Error::InvalidParams("coefficient too large for root search".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= x {
        if x % d == 0 {
            out.push(BigInt::from(d));
            if d * d != x {
                out.push(BigInt::from(x / d));
            }
        }
        d += 1;
    }
    Ok(out)
}
