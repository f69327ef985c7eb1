//! Exact positive-semidefiniteness of Gram matrices, weight space by weight space.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::linalg::bilinear;
use super::vector::ModuleVector;
use super::verma::VermaModule;
use crate::error::{Error, Result};
use crate::rational::{serialize_q, Q};
use crate::weights::Signature;

pub const DEFAULT_MAX_LEVEL: usize = 4;
/// Deepest level accepted by [`gram_psd_check`].
pub const MAX_LEVEL: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Definiteness {
    Psd,
    /// wᵀ G w = norm < 0.
    Indefinite { witness: Vec<Q>, norm: Q },
}

/// Symmetric elimination with diagonal pivots; tracks the basis change so a negative direction
/// can be read off and rechecked against `g` itself.
pub fn definiteness(g: &[Vec<Q>]) -> Definiteness {
    let dim = g.len();
    let mut a: Vec<Vec<Q>> = g.to_vec();
    let mut t: Vec<Vec<Q>> = (0..dim).map(|i| (0..dim).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect()).collect();
    let mut active: Vec<usize> = (0..dim).collect();
    let found = |w: Vec<Q>| {
        let norm = bilinear(g, &w, &w);
        assert!(norm.is_negative(), "witness must have negative norm");
        Definiteness::Indefinite { witness: w, norm }
    };
    while !active.is_empty() {
        if let Some(&k) = active.iter().find(|&&k| a[k][k].is_negative()) {
            return found(t[k].clone());
        }
        let Some(pos) = active.iter().position(|&k| a[k][k].is_positive()) else {
            // Zero diagonal: any nonzero off-diagonal entry gives e_i ∓ e_j.
            for (x, &i) in active.iter().enumerate() {
                for &j in &active[x + 1..] {
                    if !a[i][j].is_zero() {
                        let s = if a[i][j].is_positive() { -1 } else { 1 };
                        let w: Vec<Q> = t[i].iter().zip(&t[j]).map(|(u, v)| u + v * Q::from_integer(s.into())).collect();
                        return found(w);
                    }
                }
            }
            return Definiteness::Psd;
        };
        let k = active.remove(pos);
        let pivot = a[k][k].clone();
        for &j in &active {
            if a[j][k].is_zero() {
                continue;
            }
            let f = &a[j][k] / &pivot;
            for &l in &active {
                let d = &f * &a[k][l];
                a[j][l] -= d;
            }
            let tk = t[k].clone();
            for (x, y) in t[j].iter_mut().zip(&tk) {
                *x -= &f * y;
            }
            a[j][k] = Q::zero();
        }
        for &j in &active {
            a[k][j] = Q::zero();
        }
    }
    Definiteness::Psd
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub level: usize,
    /// δ-offsets examined at this level.
    pub offsets: Vec<Vec<i32>>,
    pub max_dim: usize,
    pub psd: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub level: usize,
    pub offset: Vec<i32>,
    #[serde(skip)]
    pub vector: ModuleVector,
    /// Canonical text of the vector.
    pub text: String,
    #[serde(serialize_with = "serialize_q")]
    pub norm: Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsdReport {
    pub psd: bool,
    pub max_level: usize,
    pub levels: Vec<LevelReport>,
    pub witness: Option<Witness>,
}

/// δ-offsets μ with |μ| = level, μ_i ≥ 0 and μ_k − μ_{k+1} ≤ a_k, so that Λ+μ is
/// antidominant for the compact roots.
pub fn level_offsets(sig: &Signature, level: usize) -> Vec<Vec<i32>> {
    fn rec(sig: &Signature, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        let n = sig.n;
        if cur.len() == n - 1 {
            cur.push(left);
            let k = n - 2;
            if cur[k] - cur[k + 1] <= sig.a_at(k + 1) as i32 {
                out.push(cur.clone());
            }
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            if let Some(&prev) = cur.last() {
                if prev - x > sig.a_at(cur.len()) as i32 {
                    continue;
                }
            }
            cur.push(x);
            rec(sig, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sig, level as i32, &mut Vec::new(), &mut out);
    out
}

/// Is the contravariant form positive semidefinite on every checked weight space up to `max_level`?
/// Stops at the first negative direction.
pub fn gram_psd_check(sig: &Signature, max_level: usize) -> Result<PsdReport> {
    if max_level > MAX_LEVEL {
        return Err(Error::InvalidParams(format!("max level {max_level} exceeds {MAX_LEVEL}")));
    }
    let verma = VermaModule::new(sig)?;
    let mut levels = Vec::new();
    for level in 1..=max_level {
        let offsets = level_offsets(sig, level);
        let mut max_dim = 0;
        for off in &offsets {
            let g = verma.gram(off);
            max_dim = max_dim.max(g.dim());
            if let Definiteness::Indefinite { witness, norm } = definiteness(&g.entries) {
                let vector = ModuleVector::from_coordinates(off.clone(), &g.basis, &witness);
                let text = vector.to_text(&verma.alg);
                levels.push(LevelReport { level, offsets: offsets.clone(), max_dim, psd: false });
                let witness = Witness { level, offset: off.clone(), vector, text, norm };
                return Ok(PsdReport { psd: false, max_level, levels, witness: Some(witness) });
            }
        }
        levels.push(LevelReport { level, offsets, max_dim, psd: true });
    }
    Ok(PsdReport { psd: true, max_level, levels, witness: None })
}
