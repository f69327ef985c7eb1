//! Singular vectors by linear algebra, and the subsingular test against the submodule they generate.

use std::collections::HashMap;

use serde::Serialize;

use super::linalg::{in_span, nullspace};
use super::vector::{ModuleVector, Monomial};
use super::verma::VermaModule;
use crate::error::{Error, Result};
use crate::rational::{is_positive_integer, to_i64, Q};
use crate::root_system::{build_root_system, delta_to_simple_int, RootVector};
use crate::weights::{pairing_m_value, Signature};

/// Basis of the vectors at `offset` killed by every simple lowering generator.
pub fn singular_space(verma: &VermaModule, offset: &[i32]) -> Vec<ModuleVector> {
    let basis = verma.weight_space(offset);
    if basis.is_empty() {
        return Vec::new();
    }
    let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut matrix: Vec<Vec<Q>> = Vec::new();
    for (col, m) in basis.iter().enumerate() {
        let v = ModuleVector::from_coordinates(offset.to_vec(), std::slice::from_ref(m), &[Q::from_integer(1.into())]);
        for (j, &low) in verma.simple_lowering().iter().enumerate() {
            for (target, c) in verma.act(low, &v).terms {
                let next = rows.len();
                let r = *rows.entry((j, target)).or_insert(next);
                if r == matrix.len() {
                    matrix.push(vec![Q::from_integer(0.into()); basis.len()]);
                }
                matrix[r][col] = c;
            }
        }
    }
    nullspace(&matrix, basis.len())
        .into_iter()
        .map(|x| ModuleVector::from_coordinates(offset.to_vec(), &basis, &x))
        .collect()
}

/// Does the vector vanish under every simple lowering generator?
pub fn is_singular(verma: &VermaModule, v: &ModuleVector) -> bool {
    !v.is_zero() && verma.simple_lowering().iter().all(|&low| verma.act(low, v).is_zero())
}

fn scaled_offset(beta: &RootVector, m: u32) -> Vec<i32> {
    beta.coords.iter().map(|&c| c * m as i32).collect()
}

/// Singular vectors of weight Λ + mβ. An empty answer where the reducibility condition holds is an anomaly.
pub fn find_singular(sig: &Signature, beta: &RootVector, m: u32) -> Result<Vec<ModuleVector>> {
    if beta.rank() != sig.n || !beta.is_positive() || m == 0 {
        return Err(Error::InvalidRoot(format!("{beta} with multiplicity {m}")));
    }
    let verma = VermaModule::new(sig)?;
    let space = singular_space(&verma, &scaled_offset(beta, m));
    let predicted = pairing_m_value(sig, beta);
    if space.is_empty() && is_positive_integer(&predicted) && to_i64(&predicted) == Some(m as i64) {
        return Err(Error::Anomaly(format!("no singular vector at {beta} with m = {m} although the reducibility condition holds")));
    }
    Ok(space)
}

/// Spanning set, as coordinates over `weight_space(offset)`, of the part at `offset` of the
/// submodule generated by all singular vectors Λ + m_β β, compact ones included.
pub fn ideal_span(verma: &VermaModule, offset: &[i32]) -> Result<Vec<Vec<Q>>> {
    let rs = build_root_system(verma.n())?;
    let basis = verma.weight_space(offset);
    let mut span = Vec::new();
    for beta in rs.positive_even.iter().chain(&rs.positive_odd) {
        let mb = pairing_m_value(&verma.sig, beta);
        if !is_positive_integer(&mb) {
            continue;
        }
        let m = to_i64(&mb).unwrap() as u32;
        let base = scaled_offset(beta, m);
        let rest: Vec<i32> = offset.iter().zip(&base).map(|(a, b)| a - b).collect();
        if delta_to_simple_int(&rest).iter().any(|&c| c < 0) {
            continue;
        }
        let singular = singular_space(verma, &base);
        for u in verma.weight_space(&rest) {
            for s in &singular {
                let w = verma.apply_monomial(&u, s);
                if !w.is_zero() {
                    span.push(w.coordinates(&basis));
                }
            }
        }
    }
    Ok(span)
}

#[derive(Debug, Clone, Serialize)]
pub struct SubsingularCheck {
    /// v is not in the submodule generated by singular vectors.
    pub outside_ideal: bool,
    /// X⁻_j v lies in that submodule, per simple j.
    pub lowering_in_ideal: Vec<bool>,
}

impl SubsingularCheck {
    pub fn holds(&self) -> bool {
        self.outside_ideal && self.lowering_in_ideal.iter().all(|&b| b)
    }
}

pub fn subsingular_check(verma: &VermaModule, v: &ModuleVector) -> Result<SubsingularCheck> {
    let basis = verma.weight_space(&v.offset);
    let outside_ideal = !v.is_zero() && !in_span(&ideal_span(verma, &v.offset)?, &v.coordinates(&basis));
    let mut lowering_in_ideal = Vec::new();
    for &low in &verma.simple_lowering() {
        let w = verma.act(low, v);
        let ok = w.is_zero() || {
            let b = verma.weight_space(&w.offset);
            in_span(&ideal_span(verma, &w.offset)?, &w.coordinates(&b))
        };
        lowering_in_ideal.push(ok);
    }
    Ok(SubsingularCheck { outside_ideal, lowering_in_ideal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    fn sig(d: Q, a: &[u32]) -> Signature {
        Signature::new(a.len() + 1, d, a.to_vec()).unwrap()
    }

    #[test]
    fn singular_dimensions_at_reduction_points() {
        let cases = [
            (sig(q(3), &[1, 1]), RootVector::delta(3, 1), 4),
            (sig(qr(5, 2), &[0, 2]), RootVector::plus(3, 1, 2), 11),
            (sig(q(2), &[0, 2]), RootVector::delta(3, 2), 2),
            (sig(q(1), &[0, 0]), RootVector::plus(3, 1, 3), 6),
            (sig(qr(1, 2), &[0, 0]), RootVector::plus(3, 2, 3), 3),
        ];
        for (s, beta, dim) in cases {
            let verma = VermaModule::new(&s).unwrap();
            assert_eq!(verma.weight_space(&beta.coords).len(), dim);
            let space = find_singular(&s, &beta, 1).unwrap();
            assert_eq!(space.len(), 1, "{s} {beta}");
            assert!(is_singular(&verma, &space[0]));
        }
    }

    #[test]
    fn generic_point_has_none() {
        let s = sig(qr(7, 3), &[1, 2]);
        for beta in build_root_system(3).unwrap().positive_odd {
            assert!(find_singular(&s, &beta, 1).unwrap().is_empty());
        }
        assert!(find_singular(&s, &RootVector::delta(3, 1), 0).is_err());
    }

    #[test]
    fn compact_vector_lies_in_ideal() {
        let s = sig(q(1), &[0, 0]);
        let verma = VermaModule::new(&s).unwrap();
        let x1 = verma.alg.anti(0, 1, 1, -1);
        let v = verma.act(x1, &verma.vacuum());
        assert!(is_singular(&verma, &v));
        assert!(!subsingular_check(&verma, &v).unwrap().outside_ideal);
    }
}
