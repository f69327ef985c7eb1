//! The printed rank-3 vectors, checked against the engine.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::poly::UniPoly;
use super::singular::{singular_space, subsingular_check};
use super::linalg::in_span;
use super::vector::ModuleVector;
use super::verma::{Operator, VermaModule};
use crate::error::{Error, Result};
use crate::rational::{half, q, qr, Q};
use crate::weights::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrintedId {
    SvD1,
    SvD12,
    SvD2,
    SvD13,
    SubsingD13,
    SvD23,
    /// (X⁺_i)^{1+a_i} v₀ for a compact simple root.
    Compact(usize),
}

impl PrintedId {
    /// The six printed vectors, compact ones aside.
    pub const PRINTED: [PrintedId; 6] =
        [PrintedId::SvD1, PrintedId::SvD12, PrintedId::SvD2, PrintedId::SvD13, PrintedId::SubsingD13, PrintedId::SvD23];

    pub fn name(&self) -> String {
        match self {
            PrintedId::SvD1 => "sv_d1".into(),
            PrintedId::SvD12 => "sv_d12".into(),
            PrintedId::SvD2 => "sv_d2".into(),
            PrintedId::SvD13 => "sv_d13".into(),
            PrintedId::SubsingD13 => "subsing_d13".into(),
            PrintedId::SvD23 => "sv_d23".into(),
            PrintedId::Compact(i) => format!("compact_{i}"),
        }
    }

    pub fn normalization(&self) -> Normalization {
        match self {
            PrintedId::SvD1 => Normalization::Halved,
            _ => Normalization::Anticommutator,
        }
    }

    /// Parameter regime in which the paper states the vector.
    pub fn regime(&self) -> &'static str {
        match self {
            PrintedId::SvD1 => "a1 != 0, d = d1 = 2 + (a1+a2)/2",
            PrintedId::SvD12 => "a1 = 0, a2 != 0, d = d12 = 3/2 + a2/2",
            PrintedId::SvD2 => "a1 = 0, d = d2 = 1 + a2/2",
            PrintedId::SvD13 => "a1 = 0, d = d13 = 1",
            PrintedId::SubsingD13 => "a1 = a2 = 0, d = 1",
            PrintedId::SvD23 => "a1 = a2 = 0, d = d23 = 1/2",
            PrintedId::Compact(_) => "any d, any a",
        }
    }

    /// Sample signatures inside the printed regime.
    pub fn regime_samples(&self) -> Vec<Signature> {
        let s = |d: Q, a: [u32; 2]| Signature::new(3, d, a.to_vec()).unwrap();
        match self {
            PrintedId::SvD1 => [[1, 0], [1, 1], [2, 0], [1, 2]]
                .into_iter()
                .map(|a| s(q(2) + qr((a[0] + a[1]) as i64, 2), a))
                .collect(),
            PrintedId::SvD12 => (1..=3).map(|a2| s(qr(3 + a2 as i64, 2), [0, a2])).collect(),
            PrintedId::SvD2 => (1..=3).map(|a2| s(q(1) + qr(a2 as i64, 2), [0, a2])).collect(),
            PrintedId::SvD13 => (0..=2).map(|a2| s(q(1), [0, a2])).collect(),
            PrintedId::SubsingD13 => vec![s(q(1), [0, 0])],
            PrintedId::SvD23 => vec![s(half(), [0, 0])],
            PrintedId::Compact(_) => vec![s(qr(7, 3), [0, 0]), s(q(3), [2, 1])],
        }
    }
}

impl fmt::Display for PrintedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for PrintedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "sv_d1" => PrintedId::SvD1,
            "sv_d12" => PrintedId::SvD12,
            "sv_d2" => PrintedId::SvD2,
            "sv_d13" => PrintedId::SvD13,
            "subsing_d13" => PrintedId::SubsingD13,
            "sv_d23" => PrintedId::SvD23,
            _ => match s.strip_prefix("compact_").and_then(|i| i.parse().ok()) {
                Some(i @ 1..=2) => PrintedId::Compact(i),
                _ => return Err(Error::UnknownVector(s.to_string())),
            },
        };
        Ok(id)
    }
}

/// How the printed root vectors are scaled against the anticommutator basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Every even root vector is a plain anticommutator.
    Anticommutator,
    /// X⁺_k, X₁₃ and X_{2δ_i} carry a factor ½.
    Halved,
}

/// Printed root vectors of the positive part (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Root {
    /// X_{δ_i}.
    D(usize),
    /// X_{δ_i+δ_j}.
    DD(usize, usize),
    /// X_{2δ_i}.
    TD(usize),
    /// X⁺_k; X⁺_n is X_{δ_n}.
    S(usize),
    X13,
}

fn operator(verma: &VermaModule, r: Root, norm: Normalization) -> Operator {
    let alg = &verma.alg;
    let n = verma.n();
    let scale = match norm {
        Normalization::Anticommutator => q(1),
        Normalization::Halved => half(),
    };
    match r {
        Root::D(i) => vec![(alg.osc(i - 1, 1), q(1))],
        Root::DD(i, j) => vec![(alg.anti(i - 1, 1, j - 1, 1), q(1))],
        Root::TD(i) => vec![(alg.anti(i - 1, 1, i - 1, 1), scale)],
        Root::S(k) if k == n => vec![(alg.osc(n - 1, 1), q(1))],
        Root::S(k) => vec![(alg.anti(k - 1, 1, k, -1), scale)],
        Root::X13 => vec![(alg.anti(0, 1, 2, -1), scale)],
    }
}

type Printed = Vec<(Q, Vec<Root>)>;

fn printed_terms(id: PrintedId, a1: &Q, a2: &Q) -> Printed {
    use Root::*;
    let one = q(1);
    let s12 = a1 + a2 + &one;
    match id {
        PrintedId::SvD1 => vec![
            (a1 * &s12, vec![D(1)]),
            (-a1.clone(), vec![D(3), X13]),
            (-s12.clone(), vec![D(2), S(1)]),
            (one, vec![D(3), S(2), S(1)]),
        ],
        PrintedId::SvD12 => vec![
            (q(1), vec![D(3), D(2), S(2), S(1)]),
            (half(), vec![D(3), D(3), S(2), S(2), S(1)]),
            (-a1.clone(), vec![D(3), D(3), S(2), X13]),
            (q(2) * (a2 + &one), vec![D(3), D(2), X13]),
            (q(-2) * &s12, vec![D(3), D(1), S(2)]),
            ((a1 + &one) * &s12, vec![DD(1, 3), S(2)]),
            (q(4) * a2 * &s12, vec![D(2), D(1)]),
            (q(2) * a2 * &s12, vec![D(2), D(2), S(1)]),
            (-half() * (a1 + q(2) * a2 + &one), vec![DD(2, 3), S(2), S(1)]),
            (-(-(a1 * a2) + a1 + a2 + &one), vec![DD(2, 3), X13]),
            (q(-2) * (a1 + &one) * a2 * &s12, vec![DD(1, 2)]),
        ],
        PrintedId::SvD2 => vec![(a2.clone(), vec![S(2), S(3)]), (-(a2 + &one), vec![S(3), S(2)])],
        PrintedId::SvD13 => {
            let h = &one + half() * (a1 + a2);
            let b = a1 + &one;
            vec![
                (&h * a1, vec![S(1), S(3), S(3), S(2)]),
                (a1.clone(), vec![S(1), S(3), S(2), S(3)]),
                (-(&h * &b), vec![S(3), S(3), S(2), S(1)]),
                (-(&h * a1), vec![S(1), S(2), S(3), S(3)]),
                (-b.clone(), vec![S(3), S(2), S(3), S(1)]),
                (&h * &b, vec![S(2), S(3), S(3), S(1)]),
            ]
        }
        PrintedId::SubsingD13 => vec![(q(1), vec![D(1), D(2), D(3)]), (q(-1), vec![D(3), D(2), D(1)])],
        PrintedId::SvD23 => vec![(q(2), vec![DD(2, 3)]), (q(-4), vec![D(2), D(3)]), (q(1), vec![TD(3), S(2)])],
        PrintedId::Compact(i) => unreachable!("compact_{i} is built directly"),
    }
}

fn check_id(id: PrintedId, sig: &Signature) -> Result<()> {
    if sig.n != 3 {
        return Err(Error::InvalidParams(format!("{id} is printed for n = 3 only")));
    }
    Ok(())
}

/// The printed combination, normal ordered in the engine's PBW basis.
pub fn printed_vector_in(verma: &VermaModule, id: PrintedId) -> Result<ModuleVector> {
    check_id(id, &verma.sig)?;
    let sig = &verma.sig;
    let norm = id.normalization();
    if let PrintedId::Compact(i) = id {
        let op = operator(verma, Root::S(i), norm);
        let word = vec![op; 1 + sig.a_at(i) as usize];
        return Ok(verma.apply_word(&word, &verma.vacuum()));
    }
    let (a1, a2) = (q(sig.a_at(1)), q(sig.a_at(2)));
    let mut out: Option<ModuleVector> = None;
    for (c, word) in printed_terms(id, &a1, &a2) {
        let ops: Vec<Operator> = word.iter().map(|&r| operator(verma, r, norm)).collect();
        let v = verma.apply_word(&ops, &verma.vacuum()).scale(&c);
        out = Some(match out {
            None => v,
            Some(o) => o.add(&v)?,
        });
    }
    Ok(out.expect("printed vectors are nonempty"))
}

pub fn printed_vector(id: PrintedId, sig: &Signature) -> Result<ModuleVector> {
    check_id(id, sig)?;
    printed_vector_in(&VermaModule::new(sig)?, id)
}

/// Membership of the printed vector in the computed singular space (subsingularity for `subsing_d13`).
pub fn verify_singular(id: PrintedId, sig: &Signature) -> Result<bool> {
    if id == PrintedId::SubsingD13 {
        return verify_subsingular(id, sig);
    }
    let verma = VermaModule::new(sig)?;
    let v = printed_vector_in(&verma, id)?;
    if v.is_zero() {
        return Ok(false);
    }
    let space = singular_space(&verma, &v.offset);
    let basis = verma.weight_space(&v.offset);
    let span: Vec<Vec<Q>> = space.iter().map(|s| s.coordinates(&basis)).collect();
    Ok(!span.is_empty() && in_span(&span, &v.coordinates(&basis)))
}

pub fn verify_subsingular(id: PrintedId, sig: &Signature) -> Result<bool> {
    if id != PrintedId::SubsingD13 {
        return Err(Error::InvalidParams(format!("{id} is not a subsingular vector")));
    }
    let verma = VermaModule::new(sig)?;
    let v = printed_vector_in(&verma, id)?;
    Ok(subsingular_check(&verma, &v)?.holds())
}

/// Number of extra samples used to confirm an interpolated polynomial.
pub const CHECK_SAMPLES: usize = 2;

/// ⟨v, v⟩ as a polynomial in d, by interpolation at d = 0, 1, 2, ….
pub fn norm_polynomial_in_d(id: PrintedId, a: &[u32], degree_bound: usize) -> Result<UniPoly> {
    if !matches!(id, PrintedId::SvD12 | PrintedId::SubsingD13) {
        return Err(Error::InvalidParams(format!("no printed norm for {id}")));
    }
    let mut points = Vec::new();
    for k in 0..=degree_bound + CHECK_SAMPLES {
        let d = q(k as i64);
        let sig = Signature::new(3, d.clone(), a.to_vec())?;
        let verma = VermaModule::new(&sig)?;
        let v = printed_vector_in(&verma, id)?;
        points.push((d, verma.norm(&v)));
    }
    let poly = UniPoly::interpolate(&points[..=degree_bound]);
    if points[degree_bound + 1..].iter().any(|(x, y)| &poly.eval(x) != y) {
        return Err(Error::Interpolation(degree_bound));
    }
    Ok(poly)
}
