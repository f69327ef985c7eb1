//! Dense exact linear algebra over Q.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(&mut rows.to_vec(), ncols).len()
}

/// Basis of {x : A x = 0}, each normalized so its first nonzero entry is 1.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Q::zero(); ncols];
        x[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -m[r][free].clone();
        }
        normalize(&mut x);
        out.push(x);
    }
    out
}

pub fn normalize(x: &mut [Q]) {
    if let Some(lead) = x.iter().find(|c| !c.is_zero()).cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Is v a linear combination of the given vectors?
pub fn in_span(span: &[Vec<Q>], v: &[Q]) -> bool {
    let ncols = v.len();
    let base = rank(span, ncols);
    let mut ext = span.to_vec();
    ext.push(v.to_vec());
    rank(&ext, ncols) == base
}

pub fn dot(u: &[Q], v: &[Q]) -> Q {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// uᵀ G v.
pub fn bilinear(g: &[Vec<Q>], u: &[Q], v: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        s += ui * dot(&g[i], v);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in &a {
                assert!(dot(row, x).is_zero());
            }
        }
        assert_eq!(rank(&a, 3), 1);
    }

    #[test]
    fn span_membership() {
        let s = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(in_span(&s, &[q(2), q(3), q(5)]));
        assert!(!in_span(&s, &[q(0), q(0), q(1)]));
        assert!(in_span(&[], &[q(0), q(0)]));
    }

    #[test]
    fn empty_system_is_free() {
        assert_eq!(nullspace(&[], 2).len(), 2);
    }
}
