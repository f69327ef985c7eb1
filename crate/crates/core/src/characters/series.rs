//! Sparse multivariate series in t_j = e(α_j), truncated by total degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Q};

/// An exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn checked_sub(&self, o: &[u32]) -> Option<Exponent> {
        self.0.iter().zip(o).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Exponent)
    }

    fn add(&self, o: &[u32]) -> Exponent {
        Exponent(self.0.iter().zip(o).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSeries {
    pub n: usize,
    pub coeffs: BTreeMap<Exponent, Q>,
    pub maxdeg: u32,
}

impl CharacterSeries {
    pub fn zero(n: usize, maxdeg: u32) -> Self {
        CharacterSeries { n, coeffs: BTreeMap::new(), maxdeg }
    }

    pub fn one(n: usize, maxdeg: u32) -> Self {
        Self::monomial(n, maxdeg, &vec![0; n], Q::one())
    }

    pub fn monomial(n: usize, maxdeg: u32, exp: &[u32], c: Q) -> Self {
        let mut s = Self::zero(n, maxdeg);
        s.add_term(Exponent(exp.to_vec()), c);
        s
    }

    /// Builds a series from (exponent, coefficient) pairs.
    pub fn from_terms(n: usize, maxdeg: u32, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut s = Self::zero(n, maxdeg);
        for (e, c) in terms {
            s.add_term(Exponent(e), c);
        }
        s
    }

    pub fn add_term(&mut self, e: Exponent, c: Q) {
        assert_eq!(e.0.len(), self.n, "exponent length");
        if e.degree() > self.maxdeg || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coefficient(&self, exp: &[u32]) -> Q {
        self.coeffs.get(&Exponent(exp.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest total degree present (0 for the zero series).
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Exponent::degree).max().unwrap_or(0)
    }

    pub fn truncate(&self, maxdeg: u32) -> Self {
        let coeffs = self.coeffs.iter().filter(|(e, _)| e.degree() <= maxdeg).map(|(e, c)| (e.clone(), c.clone())).collect();
        CharacterSeries { n: self.n, coeffs, maxdeg }
    }

    pub fn with_maxdeg(&self, maxdeg: u32) -> Self {
        let mut s = self.truncate(maxdeg);
        s.maxdeg = maxdeg;
        s
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut s = Self::zero(self.n, self.maxdeg);
        for (e, x) in &self.coeffs {
            s.add_term(e.clone(), x * c);
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.with_maxdeg(self.maxdeg.min(o.maxdeg));
        for (e, x) in &o.coeffs {
            s.add_term(e.clone(), x.clone());
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    /// Multiplication by t^shift, keeping this bound.
    pub fn shift(&self, shift: &[u32]) -> Self {
        let mut s = Self::zero(self.n, self.maxdeg);
        for (e, x) in &self.coeffs {
            s.add_term(e.add(shift), x.clone());
        }
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut s = Self::zero(self.n, self.maxdeg.min(o.maxdeg));
        for (e1, x1) in &self.coeffs {
            for (e2, x2) in &o.coeffs {
                if e1.degree() + e2.degree() <= s.maxdeg {
                    s.add_term(e1.add(&e2.0), x1 * x2);
                }
            }
        }
        s
    }

    /// self / (1 − t^v) by the recurrence R_e = P_e + R_{e−v}.
    pub fn div_one_minus(&self, v: &[u32]) -> Self {
        assert!(v.iter().any(|&x| x > 0), "constant factor");
        let mut out = Self::zero(self.n, self.maxdeg);
        let mut keys: Vec<Exponent> = Vec::new();
        // Support of the result: every e = p + k v within the bound.
        for e in self.coeffs.keys() {
            let mut cur = e.clone();
            while cur.degree() <= self.maxdeg {
                keys.push(cur.clone());
                cur = cur.add(v);
            }
        }
        keys.sort();
        keys.dedup();
        for e in keys {
            let mut c = self.coeffs.get(&e).cloned().unwrap_or_else(Q::zero);
            if let Some(prev) = e.checked_sub(v) {
                if let Some(r) = out.coeffs.get(&prev) {
                    c += r;
                }
            }
            out.add_term(e, c);
        }
        out
    }

    /// Exact polynomial quotient by (1 − t^v); an error when a remainder is left.
    pub fn div_exact_one_minus(&self, v: &[u32]) -> Result<Self> {
        let deg = self.degree();
        let quotient = self.with_maxdeg(deg).div_one_minus(v);
        let step: u32 = v.iter().sum();
        let big = deg + step;
        let back = quotient.with_maxdeg(big).sub(&quotient.with_maxdeg(big).shift(v));
        if back != self.with_maxdeg(big) {
            return Err(Error::Anomaly(format!("division by 1 - t^{v:?} leaves a remainder")));
        }
        Ok(quotient.with_maxdeg(self.maxdeg))
    }

    /// Sum of all coefficients (evaluation at t = 1).
    pub fn eval_at_one(&self) -> Q {
        self.coeffs.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Pads exponents with zeros up to rank `n`.
    pub fn embed(&self, n: usize) -> Self {
        let mut s = Self::zero(n, self.maxdeg);
        for (e, c) in &self.coeffs {
            let mut v = e.0.clone();
            v.resize(n, 0);
            s.add_term(Exponent(v), c.clone());
        }
        s
    }

    /// One line per term, graded-lex order: `c` or `c * t1^a t2 t3^c`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.coeffs {
            let factors: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| if x == 1 { format!("t{}", j + 1) } else { format!("t{}^{x}", j + 1) })
                .collect();
            if factors.is_empty() {
                let _ = writeln!(out, "{c}");
            } else {
                let _ = writeln!(out, "{c} * {}", factors.join(" "));
            }
        }
        out
    }

    pub fn from_text(n: usize, maxdeg: u32, text: &str) -> Result<Self> {
        let mut s = Self::zero(n, maxdeg);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: `{line}`", lineno + 1));
            let (coeff, rest) = match line.split_once('*') {
                Some((c, r)) => (c.trim(), Some(r.trim())),
                None => (line, None),
            };
            let c = parse_rational(coeff).map_err(|_| bad("bad coefficient"))?;
            let mut exp = vec![0u32; n];
            if let Some(rest) = rest {
                if rest.is_empty() {
                    return Err(bad("missing factors"));
                }
                for f in rest.split_whitespace() {
                    let f = f.strip_prefix('t').ok_or_else(|| bad("factor must start with t"))?;
                    let (j, p) = match f.split_once('^') {
                        Some((j, p)) => (j, p.parse::<u32>().map_err(|_| bad("bad power"))?),
                        None => (f, 1),
                    };
                    let j: usize = j.parse().map_err(|_| bad("bad variable index"))?;
                    if j == 0 || j > n {
                        return Err(bad("variable index out of range"));
                    }
                    exp[j - 1] = exp[j - 1].checked_add(p).ok_or_else(|| bad("power overflow"))?;
                }
            }
            if exp.iter().map(|&x| x as u64).sum::<u64>() > maxdeg as u64 {
                return Err(bad("term exceeds the truncation degree"));
            }
            s.add_term(Exponent(exp), c);
        }
        Ok(s)
    }
}

impl Serialize for CharacterSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [u32],
            coeff: String,
        }
        let terms: Vec<Term> = self.coeffs.iter().map(|(e, c)| Term { exp: &e.0, coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("CharacterSeries", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("maxdeg", &self.maxdeg)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
