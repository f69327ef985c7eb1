//! The unitarity classification of positive-energy lowest-weight representations.

use std::ops::RangeInclusive;

use num_traits::Zero;
use serde::Serialize;

use crate::rational::{q, qr, serialize_q, serialize_q_opt, Q};
use crate::weights::{reduction_points, PointId, ReductionPoints, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Continuous,
    Boundary,
    Isolated,
    Trivial,
    Nonunitary,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Continuous => "continuous",
            Branch::Boundary => "boundary",
            Branch::Isolated => "isolated",
            Branch::Trivial => "trivial",
            Branch::Nonunitary => "nonunitary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoverningPoint {
    /// Every reduction point with this value, joined by `=`, e.g. `d2=d13`.
    pub label: String,
    #[serde(serialize_with = "serialize_q")]
    pub value: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitarityVerdict {
    pub unitary: bool,
    pub branch: Branch,
    pub governing_point: Option<GoverningPoint>,
    pub first_nonzero_label: Option<usize>,
    #[serde(serialize_with = "serialize_q_opt")]
    pub kappa: Option<Q>,
    pub threshold: GoverningPoint,
    pub isolated_points: Vec<GoverningPoint>,
    /// The theorem row that decided the verdict.
    pub row: String,
    /// True when the row lies in the range the theorem elides with dots.
    pub interpolated: bool,
}

fn point_label(points: &ReductionPoints, value: &Q) -> String {
    let names = points.names_at(value);
    if names.is_empty() {
        format!("d={value}")
    } else {
        names.iter().map(PointId::label).collect::<Vec<_>>().join("=")
    }
}

fn governing(points: &ReductionPoints, value: Q) -> GoverningPoint {
    GoverningPoint { label: point_label(points, &value), value }
}

/// (number of leading zero labels, ½ Σ of the remaining labels).
fn zero_pattern(sig: &Signature) -> (usize, Q) {
    let z = sig.a.iter().take_while(|&&x| x == 0).count();
    let rest: i64 = sig.a[z..].iter().map(|&x| x as i64).sum();
    (z, qr(rest, 2))
}

/// Threshold n−1−κ+S and the isolated points n−3/2−κ+S, …, n−1−2κ+S for 2κ leading zeros.
pub fn threshold_and_isolated(sig: &Signature) -> (Q, Vec<Q>) {
    let (z, s) = zero_pattern(sig);
    let n = q(sig.n as i64);
    let kappa = qr(z as i64, 2);
    let threshold = &n - q(1) - &kappa + &s;
    let isolated = (1..=z).map(|k| &threshold - qr(k as i64, 2)).collect();
    (threshold, isolated)
}

pub fn classify(sig: &Signature) -> UnitarityVerdict {
    let points = reduction_points(sig);
    let (z, _) = zero_pattern(sig);
    let all_zero = z == sig.n - 1;
    let (threshold, isolated) = threshold_and_isolated(sig);
    let threshold = governing(&points, threshold);
    let isolated_points: Vec<GoverningPoint> = isolated.into_iter().map(|v| governing(&points, v)).collect();

    let (branch, gov) = if sig.d > threshold.value {
        (Branch::Continuous, Some(threshold.clone()))
    } else if sig.d == threshold.value {
        (Branch::Boundary, Some(threshold.clone()))
    } else if let Some(p) = isolated_points.iter().find(|p| p.value == sig.d) {
        let branch = if all_zero && sig.d.is_zero() { Branch::Trivial } else { Branch::Isolated };
        (branch, Some(p.clone()))
    } else {
        (Branch::Nonunitary, Some(threshold.clone()))
    };

    let row = if all_zero {
        match branch {
            Branch::Continuous | Branch::Boundary => "all a=0: d >= (n-1)/2".to_string(),
            Branch::Isolated => "all a=0: d in {(n-2)/2, ..., 1/2}".to_string(),
            Branch::Trivial => "all a=0: d = 0".to_string(),
            Branch::Nonunitary => "all a=0: below (n-1)/2 and off the isolated points".to_string(),
        }
    } else {
        let lead = if z == 0 { "a1!=0".to_string() } else { format!("a1=...=a{z}=0, a{}!=0", z + 1) };
        let what = match branch {
            Branch::Continuous | Branch::Boundary => "d >= n-1-kappa+S",
            Branch::Isolated => "d in {n-3/2-kappa+S, ..., n-1-2kappa+S}",
            _ => "below n-1-kappa+S and off the isolated points",
        };
        format!("{lead}: {what}")
    };

    UnitarityVerdict {
        unitary: branch != Branch::Nonunitary,
        branch,
        governing_point: gov,
        first_nonzero_label: (!all_zero).then_some(z + 1),
        kappa: (!all_zero).then(|| qr(z as i64, 2)),
        threshold,
        isolated_points,
        row,
        interpolated: !all_zero && z >= 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsingularPoint {
    #[serde(serialize_with = "serialize_q")]
    pub d: Q,
    pub description: String,
    #[serde(skip)]
    pub members: Vec<PointId>,
}

/// Coincident reduction points carrying subsingular vectors, for the zero pattern of `sig`.
pub fn subsingular_points(sig: &Signature) -> Vec<SubsingularPoint> {
    let n = sig.n;
    let zero_upto = |m: usize| (1..=m).all(|k| sig.a_at(k) == 0);
    let tail = |from: usize| qr((from..n).map(|k| sig.a_at(k)).sum::<i64>(), 2);
    let mut out = Vec::new();
    let mut emit = |members: Vec<PointId>, d: Q| {
        if members.len() >= 2 {
            let description = members.iter().map(PointId::label).collect::<Vec<_>>().join("=");
            out.push(SubsingularPoint { d, description, members });
        }
    };
    for j in 2..n {
        if zero_upto(2 * j - 2) {
            let mut m = vec![PointId::Single(j)];
            m.extend((1..j).filter(|&i| 2 * j - i <= n).map(|i| PointId::Pair(i, 2 * j - i)));
            emit(m, q((n - j) as i64) + tail(2 * j - 1));
        }
        if j + 1 < n && zero_upto(2 * j - 1) {
            let mut m = vec![PointId::Pair(j, j + 1)];
            m.extend((1..j).filter(|&i| 2 * j + 1 - i <= n).map(|i| PointId::Pair(i, 2 * j + 1 - i)));
            emit(m, q((n - j) as i64) - qr(1, 2) + tail(2 * j));
        }
    }
    out.sort_by(|a, b| b.d.cmp(&a.d).then_with(|| a.description.cmp(&b.description)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub n: usize,
    pub a: Vec<u32>,
    #[serde(serialize_with = "serialize_q")]
    pub d: Q,
    pub unitary: bool,
    pub branch: Branch,
    pub governing_point: Option<GoverningPoint>,
}

/// Verdicts over the product of label ranges (a_1 outermost) and the d grid.
pub fn unitarity_grid(n: usize, a_ranges: &[RangeInclusive<u32>], d_grid: &[Q]) -> crate::Result<Vec<GridRow>> {
    let mut combos: Vec<Vec<u32>> = vec![Vec::new()];
    for r in a_ranges {
        combos = combos
            .into_iter()
            .flat_map(|c| r.clone().map(move |x| [c.clone(), vec![x]].concat()))
            .collect();
    }
    let mut rows = Vec::new();
    for a in combos {
        for d in d_grid {
            let sig = Signature::new(n, d.clone(), a.clone())?;
            let v = classify(&sig);
            rows.push(GridRow { n, a: a.clone(), d: d.clone(), unitary: v.unitary, branch: v.branch, governing_point: v.governing_point });
        }
    }
    Ok(rows)
}

pub fn grid_to_csv(rows: &[GridRow]) -> String {
    let width = rows.first().map_or(0, |r| r.a.len());
    let mut out = String::from("n,");
    for k in 1..=width {
        out.push_str(&format!("a{k},"));
    }
    out.push_str("d,unitary,branch,governing_point,governing_value\n");
    for r in rows {
        let a: Vec<String> = r.a.iter().map(|x| x.to_string()).collect();
        let (label, value) = match &r.governing_point {
            Some(g) => (g.label.clone(), g.value.to_string()),
            None => (String::new(), String::new()),
        };
        let sep = if a.is_empty() { "" } else { "," };
        out.push_str(&format!("{},{}{sep}{},{},{},{label},{value}\n", r.n, a.join(","), r.d, r.unitary, r.branch.as_str()));
    }
    out
}

/// The grid d = k/den for k = 0..=kmax.
pub fn d_grid(kmax: i64, den: i64) -> Vec<Q> {
    (0..=kmax).map(|k| qr(k, den)).collect()
}
