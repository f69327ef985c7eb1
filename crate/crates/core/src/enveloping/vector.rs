//! Vectors of a Verma module in the PBW basis, with a canonical text form.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Q};

/// Nondecreasing PBW ranks of raising generators; the leftmost factor acts last.
pub type Monomial = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    /// δ-coordinates of the weight relative to Λ.
    pub offset: Vec<i32>,
    pub terms: BTreeMap<Monomial, Q>,
}

fn text_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl ModuleVector {
    pub fn zero(offset: Vec<i32>) -> Self {
        ModuleVector { offset, terms: BTreeMap::new() }
    }

    pub fn vacuum(n: usize) -> Self {
        let mut v = Self::zero(vec![0; n]);
        v.terms.insert(Vec::new(), Q::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u8]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.offset.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.offset != other.offset {
            return Err(Error::DimensionMismatch { expected: self.offset.len(), got: other.offset.len() });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Coordinates against a weight-space basis.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Q> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn from_coordinates(offset: Vec<i32>, basis: &[Monomial], xs: &[Q]) -> Self {
        let mut v = Self::zero(offset);
        for (m, c) in basis.iter().zip(xs) {
            v.add_term(m.clone(), c.clone());
        }
        v
    }

    /// Is `self` a nonzero multiple of `other`?
    pub fn is_proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, c0) = self.terms.iter().next().unwrap();
        let Some(d0) = other.terms.get(m0) else { return false };
        let ratio = c0 / d0;
        self.terms.iter().all(|(m, c)| other.terms.get(m).is_some_and(|d| &(d * &ratio) == c))
    }

    /// One line per term, `coeff * gen gen ...`, shortest words first; `0` for the zero vector.
    pub fn to_text(&self, alg: &Algebra) -> String {
        if self.is_zero() {
            return "0\n".into();
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| text_order(a, b));
        let mut s = String::new();
        for m in keys {
            let c = &self.terms[m];
            let _ = write!(s, "{c}");
            if !m.is_empty() {
                s.push_str(" *");
                for &r in m {
                    let _ = write!(s, " {}", alg.basis[alg.raising[r as usize]]);
                }
            }
            s.push('\n');
        }
        s
    }

    /// Inverse of [`ModuleVector::to_text`]; words must already be in PBW order.
    pub fn parse(alg: &Algebra, text: &str) -> Result<Self> {
        let mut out: Option<ModuleVector> = None;
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines == ["0"] {
            return Ok(Self::zero(vec![0; alg.n]));
        }
        for line in lines {
            let (coef, word) = match line.split_once('*') {
                Some((c, w)) => (c.trim(), w.trim()),
                None => (line, ""),
            };
            let c = parse_rational(coef)?;
            let mut m = Monomial::new();
            let mut offset = vec![0i32; alg.n];
            for tok in word.split_whitespace() {
                let k = alg.parse_generator(tok)?;
                let r = alg.rank[k].ok_or_else(|| Error::Parse(format!("`{tok}` is not a raising generator")))?;
                if let Some(&last) = m.last() {
                    let odd_repeat = last as usize == r && alg.is_odd(k);
                    if (last as usize) > r || odd_repeat {
                        return Err(Error::Parse(format!("word `{word}` is not in PBW order")));
                    }
                }
                m.push(r as u8);
                for (o, w) in offset.iter_mut().zip(&alg.weights[k]) {
                    *o += w;
                }
            }
            if line.contains('*') && m.is_empty() {
                return Err(Error::Parse(format!("empty word in `{line}`")));
            }
            let v = out.get_or_insert_with(|| Self::zero(offset.clone()));
            if v.offset != offset {
                return Err(Error::Parse(format!("term `{line}` has a different weight")));
            }
            if v.terms.contains_key(&m) {
                return Err(Error::Parse(format!("repeated word in `{line}`")));
            }
            v.add_term(m, c);
        }
        out.ok_or_else(|| Error::Parse("empty vector text".into()))
    }
}
