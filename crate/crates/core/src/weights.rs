//! Signatures, lowest weights, Dynkin labels, reducibility conditions and reduction points.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{is_positive_integer, q, qr, serialize_q, Q};
use crate::root_system::{check_rank, coroot, inner, rho, RootVector, Weight};

/// The label [d; a_1, …, a_{n−1}].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub n: usize,
    #[serde(serialize_with = "serialize_q")]
    pub d: Q,
    pub a: Vec<u32>,
}

impl Signature {
    pub fn new(n: usize, d: Q, a: Vec<u32>) -> Result<Self> {
        check_rank(n)?;
        if a.len() != n - 1 {
            return Err(Error::DimensionMismatch { expected: n - 1, got: a.len() });
        }
        Ok(Signature { n, d, a })
    }

    pub fn with_d(&self, d: Q) -> Signature {
        Signature { d, ..self.clone() }
    }

    /// a_k for 1 ≤ k ≤ n−1, zero beyond.
    pub fn a_at(&self, k: usize) -> i64 {
        if k >= 1 && k < self.n { self.a[k - 1] as i64 } else { 0 }
    }

    /// Σ a_k over lo ≤ k ≤ hi (clipped to 1..n−1).
    fn a_sum(&self, lo: usize, hi: usize) -> i64 {
        (lo.max(1)..=hi.min(self.n - 1)).map(|k| self.a_at(k)).sum()
    }

    fn below(&self, i: usize) -> i64 {
        self.a_sum(1, i.saturating_sub(1))
    }

    fn from(&self, j: usize) -> i64 {
        self.a_sum(j, self.n - 1)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}; {}]", self.d, a.join(","))
    }
}

/// λ_i = d + ½(a_1+⋯+a_{i−1} − a_i − ⋯ − a_{n−1}).
pub fn lowest_weight(sig: &Signature) -> Weight {
    let coords = (1..=sig.n).map(|i| &sig.d + qr(sig.below(i) - sig.from(i), 2)).collect();
    Weight::new(coords)
}

/// Labels (ρ − λ, α_k∨) of an arbitrary weight.
pub fn labels_of_weight(lambda: &Weight) -> Vec<Q> {
    let n = lambda.rank();
    let nu = &rho(n) - lambda;
    let mut out: Vec<Q> = (0..n - 1).map(|k| &nu.coords[k] - &nu.coords[k + 1]).collect();
    out.push(&nu.coords[n - 1] * q(2));
    out
}

/// Inverse of [`labels_of_weight`].
pub fn weight_from_labels(labels: &[Q]) -> Weight {
    let n = labels.len();
    let mut nu = vec![q(0); n];
    nu[n - 1] = &labels[n - 1] / q(2);
    for k in (0..n - 1).rev() {
        nu[k] = &nu[k + 1] + &labels[k];
    }
    &rho(n) - &Weight::new(nu)
}

/// m_k = 1 + a_k (k < n), m_n = 1 − 2d − Σa.
pub fn dynkin_labels(sig: &Signature) -> Vec<Q> {
    let mut m: Vec<Q> = sig.a.iter().map(|&x| q(1 + x as i64)).collect();
    m.push(q(1 - sig.from(1)) - &sig.d * q(2));
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    MinusIj,
    PlusIj,
    DeltaI,
    TwoDeltaI,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilityEntry {
    pub root: RootVector,
    pub family: Family,
    #[serde(serialize_with = "serialize_q")]
    pub m_value: Q,
    pub satisfied: bool,
    /// Implied by the δ_i entry with the same index.
    pub redundant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub entries: Vec<ReducibilityEntry>,
}

impl ReducibilityReport {
    pub fn find(&self, family: Family, root: &RootVector) -> Option<&ReducibilityEntry> {
        self.entries.iter().find(|e| e.family == family && e.root.coords == root.coords)
    }

    pub fn is_reducible(&self) -> bool {
        self.entries.iter().any(|e| e.satisfied && e.family != Family::MinusIj)
    }
}

pub fn m_minus(sig: &Signature, i: usize, j: usize) -> Q {
    q((j - i) as i64 + sig.a_sum(i, j - 1))
}

pub fn m_plus(sig: &Signature, i: usize, j: usize) -> Q {
    q((2 * sig.n + 1) as i64 - (i + j) as i64 + sig.from(j) - sig.below(i)) - &sig.d * q(2)
}

pub fn m_delta(sig: &Signature, i: usize) -> Q {
    q((2 * sig.n + 1) as i64 - 2 * i as i64 + sig.from(i) - sig.below(i)) - &sig.d * q(2)
}

pub fn m_two_delta(sig: &Signature, i: usize) -> Q {
    m_delta(sig, i) / q(2)
}

pub fn reducibility_report(sig: &Signature) -> ReducibilityReport {
    let n = sig.n;
    let mut entries = Vec::new();
    let mut push = |root, family, m_value: Q| {
        let satisfied = is_positive_integer(&m_value);
        let redundant = family == Family::TwoDeltaI;
        entries.push(ReducibilityEntry { root, family, m_value, satisfied, redundant });
    };
    for i in 1..=n {
        for j in i + 1..=n {
            push(RootVector::minus(n, i, j), Family::MinusIj, m_minus(sig, i, j));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            push(RootVector::plus(n, i, j), Family::PlusIj, m_plus(sig, i, j));
        }
    }
    for i in 1..=n {
        push(RootVector::delta(n, i), Family::DeltaI, m_delta(sig, i));
    }
    for i in 1..=n {
        push(RootVector::two_delta(n, i), Family::TwoDeltaI, m_two_delta(sig, i));
    }
    ReducibilityReport { entries }
}

/// (ρ − Λ, β∨) through the generic pairing, used to cross-check the closed forms.
pub fn pairing_m_value(sig: &Signature, beta: &RootVector) -> Q {
    let nu = &rho(sig.n) - &lowest_weight(sig);
    inner(&nu, &coroot(beta).expect("root")).expect("rank")
}

/// Identifies one reduction point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointId {
    /// d_ij with i < j.
    Pair(usize, usize),
    /// d_i.
    Single(usize),
    /// d_ii.
    Double(usize),
}

impl PointId {
    pub fn label(&self) -> String {
        let join = |i: usize, j: usize| {
            if i < 10 && j < 10 { format!("d{i}{j}") } else { format!("d{i},{j}") }
        };
        match *self {
            PointId::Pair(i, j) => join(i, j),
            PointId::Single(i) => format!("d{i}"),
            PointId::Double(i) => join(i, i),
        }
    }

    fn check(self, n: usize) -> Result<Self> {
        let ok = match self {
            PointId::Pair(i, j) => 1 <= i && i < j && j <= n,
            PointId::Single(i) | PointId::Double(i) => 1 <= i && i <= n,
        };
        if ok { Ok(self) } else { Err(Error::UnknownPoint(self.label())) }
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for PointId {
    type Err = Error;

    /// Accepts `d2`, `d13`, `d1,3`, `d_1_3`; `d22` denotes d_ii.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownPoint(s.to_string());
        let body = s.trim().strip_prefix('d').ok_or_else(bad)?;
        let body = body.strip_prefix('_').unwrap_or(body);
        let parts: Vec<&str> = body.split([',', '_']).collect();
        let idx = |x: &str| x.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(bad);
        let (i, j) = match parts.as_slice() {
            [one] if one.len() == 1 => return Ok(PointId::Single(idx(one)?)),
            [two] if two.len() == 2 => (idx(&two[..1])?, idx(&two[1..])?),
            [a, b] => (idx(a)?, idx(b)?),
            _ => return Err(bad()),
        };
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(PointId::Pair(i, j)),
            std::cmp::Ordering::Equal => Ok(PointId::Double(i)),
            std::cmp::Ordering::Greater => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPoints {
    pub n: usize,
    /// Entries (i, j, d_ij), i < j, in lexicographic order.
    pub d_ij: Vec<(usize, usize, Q)>,
    /// d_i, index i−1.
    pub d_i: Vec<Q>,
    /// d_ii, index i−1.
    pub d_ii: Vec<Q>,
}

impl ReductionPoints {
    pub fn pair(&self, i: usize, j: usize) -> &Q {
        let n = self.n;
        // Lexicographic index of (i, j) among pairs i < j.
        let idx = (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
        &self.d_ij[idx].2
    }

    pub fn single(&self, i: usize) -> &Q {
        &self.d_i[i - 1]
    }

    pub fn get(&self, id: PointId) -> Result<Q> {
        Ok(match id.check(self.n)? {
            PointId::Pair(i, j) => self.pair(i, j).clone(),
            PointId::Single(i) => self.d_i[i - 1].clone(),
            PointId::Double(i) => self.d_ii[i - 1].clone(),
        })
    }

    pub fn first_reduction_point(&self) -> &Q {
        &self.d_i[0]
    }

    /// All d_i and d_ij equal to `value`, d_i first.
    pub fn names_at(&self, value: &Q) -> Vec<PointId> {
        let singles = (1..=self.n).filter(|&i| self.single(i) == value).map(PointId::Single);
        let pairs = self.d_ij.iter().filter(|e| &e.2 == value).map(|e| PointId::Pair(e.0, e.1));
        singles.chain(pairs).collect()
    }

    /// Violations of the ordering chains; empty when all hold.
    pub fn ordering_violations(&self) -> Vec<String> {
        let n = self.n;
        let mut bad = Vec::new();
        let mut expect_gt = |x: &Q, y: &Q, what: String| {
            if x <= y {
                bad.push(what);
            }
        };
        for i in 1..n {
            expect_gt(self.single(i), self.single(i + 1), format!("d{i} > d{}", i + 1));
        }
        for i in 1..=n {
            for j in i + 1..n {
                expect_gt(self.pair(i, j), self.pair(i, j + 1), format!("d({i},{j}) > d({i},{})", j + 1));
                expect_gt(self.pair(i, j + 1), self.pair(i + 1, j + 1), format!("d({i},{}) > d({},{})", j + 1, i + 1, j + 1));
            }
        }
        for i in 1..=n {
            for j in i..=n {
                for k in j + 1..=n {
                    for l in k..=n {
                        expect_gt(self.single(i), self.pair(j, k), format!("d{i} > d({j},{k})"));
                        expect_gt(self.pair(j, k), self.single(l), format!("d({j},{k}) > d{l}"));
                    }
                }
            }
        }
        bad
    }
}

impl Serialize for ReductionPoints {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Labeled<'a>(Vec<(String, &'a Q)>);
        impl Serialize for Labeled<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().map(|(k, v)| (k, v.to_string())))
            }
        }
        let pairs = Labeled(self.d_ij.iter().map(|(i, j, v)| (PointId::Pair(*i, *j).label(), v)).collect());
        let singles = Labeled(self.d_i.iter().enumerate().map(|(i, v)| (PointId::Single(i + 1).label(), v)).collect());
        let doubles = Labeled(self.d_ii.iter().enumerate().map(|(i, v)| (PointId::Double(i + 1).label(), v)).collect());
        let mut st = s.serialize_struct("ReductionPoints", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d_ij", &pairs)?;
        st.serialize_field("d_i", &singles)?;
        st.serialize_field("d_ii", &doubles)?;
        st.serialize_field("first_reduction_point", &self.first_reduction_point().to_string())?;
        st.end()
    }
}

/// d_ij = n + ½(Σ_{k≥j} a_k − Σ_{k<i} a_k − i − j); d_i = n − i + ½(Σ_{k≥i} a_k − Σ_{k<i} a_k); d_ii = d_i − ½.
pub fn reduction_points(sig: &Signature) -> ReductionPoints {
    let n = sig.n;
    let mut d_ij = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let v = q(n as i64) + qr(sig.from(j) - sig.below(i) - (i + j) as i64, 2);
            d_ij.push((i, j, v));
        }
    }
    let d_i: Vec<Q> = (1..=n).map(|i| q((n - i) as i64) + qr(sig.from(i) - sig.below(i), 2)).collect();
    let d_ii = d_i.iter().map(|x| x - qr(1, 2)).collect();
    ReductionPoints { n, d_ij, d_i, d_ii }
}

/// m_n at a reduction point in terms of m_1..m_{n−1}.
pub fn mn_at_reduction(m: &[i64], point: PointId) -> Result<i64> {
    let n = m.len() + 1;
    let label = |k: usize| m[k - 1];
    match point.check(n)? {
        PointId::Pair(i, j) => {
            let long: i64 = (j..n).map(label).sum();
            let short: i64 = (i..j).map(label).sum();
            Ok(1 - 2 * long - short)
        }
        PointId::Single(i) => Ok(1 - 2 * (i..n).map(label).sum::<i64>()),
        PointId::Double(_) => Err(Error::UnknownPoint(point.label())),
    }
}
