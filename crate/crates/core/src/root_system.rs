//! Root data of osp(1|2n) and B_n in the orthonormal δ-basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{q, qr, serialize_q_vec, Q};

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 16;

pub fn check_rank(n: usize) -> Result<()> {
    if (MIN_RANK..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank { n, min: MIN_RANK, max: MAX_RANK })
    }
}

/// A vector of exact δ-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    #[serde(serialize_with = "serialize_q_vec")]
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Q::zero(); n] }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight { coords: xs.iter().map(|&x| q(x)).collect() }
    }

    /// The unit vector δ_i (1-based).
    pub fn delta(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.coords[i - 1] = q(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A root in integer δ-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootVector {
    pub coords: Vec<i32>,
    pub parity: Parity,
}

impl RootVector {
    fn with(n: usize, entries: &[(usize, i32)], parity: Parity) -> Self {
        let mut coords = vec![0; n];
        for &(i, c) in entries {
            coords[i - 1] += c;
        }
        RootVector { coords, parity }
    }

    /// δ_i − δ_j.
    pub fn minus(n: usize, i: usize, j: usize) -> Self {
        Self::with(n, &[(i, 1), (j, -1)], Parity::Even)
    }

    /// δ_i + δ_j, i ≠ j.
    pub fn plus(n: usize, i: usize, j: usize) -> Self {
        Self::with(n, &[(i, 1), (j, 1)], Parity::Even)
    }

    /// 2δ_i.
    pub fn two_delta(n: usize, i: usize) -> Self {
        Self::with(n, &[(i, 2)], Parity::Even)
    }

    /// δ_i, odd.
    pub fn delta(n: usize, i: usize) -> Self {
        Self::with(n, &[(i, 1)], Parity::Odd)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn to_weight(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|&c| q(c as i64)).collect() }
    }

    /// Height in the simple-root basis.
    pub fn height(&self) -> i64 {
        delta_to_simple_int(&self.coords).iter().sum()
    }

    /// Positive iff the first nonzero δ-coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            out.push_str(&format!("{sign}{mag}d{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystemData {
    pub n: usize,
    pub positive_even: Vec<RootVector>,
    pub positive_odd: Vec<RootVector>,
    pub restricted_positive: Vec<RootVector>,
    pub simple: Vec<RootVector>,
    pub rho: Weight,
}

pub fn build_root_system(n: usize) -> Result<RootSystemData> {
    check_rank(n)?;
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            minus.push(RootVector::minus(n, i, j));
            plus.push(RootVector::plus(n, i, j));
        }
    }
    let long: Vec<_> = (1..=n).map(|i| RootVector::two_delta(n, i)).collect();
    let odd: Vec<_> = (1..=n).map(|i| RootVector::delta(n, i)).collect();

    let positive_even = [minus.clone(), plus.clone(), long].concat();
    // B_n roots: the short roots δ_i are recorded as even roots of B_n.
    let short = (1..=n).map(|i| RootVector { parity: Parity::Even, ..RootVector::delta(n, i) });
    let restricted_positive = [minus, plus, short.collect()].concat();

    let mut simple: Vec<_> = (1..n).map(|j| RootVector::minus(n, j, j + 1)).collect();
    simple.push(RootVector::delta(n, n));

    Ok(RootSystemData { n, positive_even, positive_odd: odd, restricted_positive, simple, rho: rho(n) })
}

/// ρ = (n−½, …, ½).
pub fn rho(n: usize) -> Weight {
    Weight { coords: (0..n).map(|i| qr(2 * (n - i) as i64 - 1, 2)).collect() }
}

pub fn inner(u: &Weight, v: &Weight) -> Result<Q> {
    if u.rank() != v.rank() {
        return Err(Error::DimensionMismatch { expected: u.rank(), got: v.rank() });
    }
    Ok(u.coords.iter().zip(&v.coords).map(|(a, b)| a * b).sum())
}

/// 2β/(β,β).
pub fn coroot(beta: &RootVector) -> Result<Weight> {
    let norm: i64 = beta.coords.iter().map(|&c| (c as i64) * (c as i64)).sum();
    if norm == 0 {
        return Err(Error::InvalidRoot(beta.to_string()));
    }
    Ok(beta.to_weight().scale(&qr(2, norm)))
}

/// Coordinates in the simple-root basis: c_k = v_1 + … + v_k.
pub fn delta_to_simple(v: &Weight) -> Vec<Q> {
    let mut acc = Q::zero();
    v.coords
        .iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

pub fn simple_to_delta(c: &[Q]) -> Weight {
    let coords = (0..c.len())
        .map(|k| if k == 0 { c[0].clone() } else { &c[k] - &c[k - 1] })
        .collect();
    Weight { coords }
}

pub fn delta_to_simple_int(v: &[i32]) -> Vec<i64> {
    let mut acc = 0i64;
    v.iter()
        .map(|&x| {
            acc += x as i64;
            acc
        })
        .collect()
}

pub fn simple_to_delta_int(c: &[i64]) -> Vec<i32> {
    (0..c.len()).map(|k| (if k == 0 { c[0] } else { c[k] - c[k - 1] }) as i32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts_for_small_ranks() {
        let r3 = build_root_system(3).unwrap();
        assert_eq!(
            (r3.positive_even.len(), r3.positive_odd.len(), r3.restricted_positive.len()),
            (9, 3, 9)
        );
        let r2 = build_root_system(2).unwrap();
        assert_eq!(
            (r2.positive_even.len(), r2.positive_odd.len(), r2.restricted_positive.len()),
            (4, 2, 4)
        );
        assert!(build_root_system(1).is_err());
        assert!(build_root_system(MAX_RANK + 1).is_err());
    }

    #[test]
    fn rho_rank_three() {
        assert_eq!(build_root_system(3).unwrap().rho, Weight::new(vec![qr(5, 2), qr(3, 2), qr(1, 2)]));
    }

    #[test]
    fn rho_pairs_to_one_on_simple_coroots() {
        for n in 2..=8 {
            let r = build_root_system(n).unwrap();
            for s in &r.simple {
                assert_eq!(inner(&r.rho, &coroot(s).unwrap()).unwrap(), q(1));
            }
        }
    }

    #[test]
    fn pairing_and_coroots() {
        let d1 = Weight::delta(3, 1);
        assert_eq!(inner(&d1, &d1).unwrap(), q(1));
        assert_eq!(inner(&d1, &Weight::delta(3, 2)).unwrap(), q(0));
        assert!(inner(&d1, &Weight::delta(2, 1)).is_err());
        assert_eq!(coroot(&RootVector::minus(3, 1, 2)).unwrap(), Weight::from_ints(&[1, -1, 0]));
        assert_eq!(coroot(&RootVector::delta(3, 3)).unwrap(), Weight::from_ints(&[0, 0, 2]));
        assert_eq!(coroot(&RootVector::two_delta(3, 1)).unwrap(), Weight::from_ints(&[1, 0, 0]));
        let zero = RootVector { coords: vec![0, 0, 0], parity: Parity::Even };
        assert!(coroot(&zero).is_err());
    }

    #[test]
    fn simple_coordinates() {
        assert_eq!(delta_to_simple(&Weight::delta(3, 3)), vec![q(0), q(0), q(1)]);
        assert_eq!(delta_to_simple(&Weight::from_ints(&[1, 1, 0])), vec![q(1), q(2), q(2)]);
        assert_eq!(delta_to_simple(&Weight::zero(3)), vec![q(0); 3]);
    }

    #[test]
    fn structural_invariants() {
        for n in 2..=6 {
            let r = build_root_system(n).unwrap();
            let all: Vec<_> = r.positive_even.iter().chain(&r.positive_odd).collect();
            for (i, a) in all.iter().enumerate() {
                assert!(a.is_positive());
                let neg: Vec<i32> = a.coords.iter().map(|c| -c).collect();
                assert!(all.iter().all(|b| b.coords != neg));
                assert!(all[i + 1..].iter().all(|b| b.coords != a.coords || b.parity != a.parity));
                assert!(a.coords.iter().filter(|&&c| c != 0).count() <= 2);
                assert!(a.coords.iter().all(|c| (-2..=2).contains(c)));
            }
            for o in &r.positive_odd {
                assert_eq!(o.coords.iter().map(|c| c.abs()).sum::<i32>(), 1);
            }
            for (j, s) in r.simple.iter().enumerate() {
                let expect = if j + 1 < n { RootVector::minus(n, j + 1, j + 2) } else { RootVector::delta(n, n) };
                assert_eq!(s, &expect);
            }
            let half_sum = r
                .restricted_positive
                .iter()
                .fold(Weight::zero(n), |acc, b| &acc + &b.to_weight())
                .scale(&qr(1, 2));
            assert_eq!(half_sum, r.rho);
            for b in r.restricted_positive.iter().map(RootVector::to_weight).chain([r.rho.clone()]) {
                assert_eq!(simple_to_delta(&delta_to_simple(&b)), b);
            }
        }
    }

    proptest! {
        #[test]
        fn simple_basis_round_trip(xs in proptest::collection::vec((-50i64..50, 1i64..6), 2..10)) {
            let w = Weight::new(xs.iter().map(|&(a, b)| qr(a, b)).collect());
            prop_assert_eq!(simple_to_delta(&delta_to_simple(&w)), w);
        }
    }
}
