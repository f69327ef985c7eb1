//! Verma module V^Λ: normal-ordered action, weight spaces and the Shapovalov form.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::algebra::{Algebra, Generator, Kind};
use super::vector::{ModuleVector, Monomial};
use crate::error::Result;
use crate::rational::{half, Q};
use crate::root_system::delta_to_simple_int;
use crate::weights::{lowest_weight, Signature};

/// A linear combination of basis elements of the algebra.
pub type Operator = Vec<(usize, Q)>;

type Terms = Vec<(Monomial, Q)>;

/// One algebra per rank, built (and Jacobi-checked) once per process.
pub fn shared_algebra(n: usize) -> Result<Arc<Algebra>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Algebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(&n) {
        return Ok(a.clone());
    }
    let alg = Arc::new(Algebra::new(n)?);
    cache.lock().unwrap().insert(n, alg.clone());
    Ok(alg)
}

#[derive(Debug, Clone)]
pub struct GramMatrix {
    /// δ-coordinates of the weight offset.
    pub offset: Vec<i32>,
    pub basis: Vec<Monomial>,
    pub entries: Vec<Vec<Q>>,
    index: HashMap<Monomial, usize>,
}

impl GramMatrix {
    fn new(offset: Vec<i32>, basis: Vec<Monomial>, entries: Vec<Vec<Q>>) -> Self {
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GramMatrix { offset, basis, entries, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Offset as coefficients of the simple roots.
    pub fn weight_offset(&self) -> Vec<i64> {
        delta_to_simple_int(&self.offset)
    }

    pub fn position(&self, m: &[u8]) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_csv(&self, alg: &Algebra) -> String {
        let quote = |s: String| format!("\"{}\"", s.replace('"', "\"\""));
        let label = |m: &Monomial| {
            if m.is_empty() {
                "1".to_string()
            } else {
                m.iter().map(|&r| alg.basis[alg.raising[r as usize]].to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        let mut out = String::from("basis");
        for m in &self.basis {
            out.push(',');
            out.push_str(&quote(label(m)));
        }
        out.push('\n');
        for (m, row) in self.basis.iter().zip(&self.entries) {
            out.push_str(&quote(label(m)));
            for x in row {
                out.push(',');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

pub struct VermaModule {
    pub alg: Arc<Algebra>,
    pub sig: Signature,
    /// (Λ, δ_i).
    pub lambda: Vec<Q>,
    memo: RefCell<HashMap<(usize, Monomial), Rc<Terms>>>,
    grams: RefCell<HashMap<Vec<i32>, Rc<GramMatrix>>>,
}

fn accumulate(acc: &mut HashMap<Monomial, Q>, m: &Monomial, c: Q) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(m) {
        Some(x) => *x += c,
        None => {
            acc.insert(m.clone(), c);
        }
    }
}

impl VermaModule {
    pub fn new(sig: &Signature) -> Result<Self> {
        let alg = shared_algebra(sig.n)?;
        let lambda = lowest_weight(sig).coords;
        Ok(VermaModule {
            alg,
            sig: sig.clone(),
            lambda,
            memo: RefCell::new(HashMap::new()),
            grams: RefCell::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.sig.n
    }

    fn monomial_weight(&self, m: &[u8]) -> Vec<i32> {
        let mut w = vec![0; self.n()];
        for &r in m {
            for (x, y) in w.iter_mut().zip(&self.alg.weights[self.alg.raising[r as usize]]) {
                *x += y;
            }
        }
        w
    }

    /// x · (m v₀), normal ordered.
    pub fn act_basis(&self, x: usize, m: &[u8]) -> Rc<Terms> {
        let alg = self.alg.clone();
        if alg.kind(x) == Kind::Raising {
            let r = alg.rank[x].unwrap();
            let prepend = match m.first() {
                None => true,
                Some(&f) => r < f as usize || (r == f as usize && !alg.is_odd(x)),
            };
            if prepend {
                let mut out = Vec::with_capacity(m.len() + 1);
                out.push(r as u8);
                out.extend_from_slice(m);
                return Rc::new(vec![(out, Q::one())]);
            }
        }
        let key = (x, m.to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        match alg.kind(x) {
            Kind::Cartan => {
                let Generator::Even(a, _) = alg.basis[x] else { unreachable!() };
                let i = a.i;
                let mu = self.monomial_weight(m);
                let c = Q::from_integer(2.into()) * (&self.lambda[i] + Q::from_integer(mu[i].into()));
                accumulate(&mut acc, &m.to_vec(), c);
            }
            Kind::Lowering => {
                if !m.is_empty() {
                    self.commute(x, m, &mut acc);
                }
            }
            Kind::Raising => {
                let f = m[0] as usize;
                if alg.rank[x] == Some(f) {
                    // a·a = ½{a, a} for an odd generator.
                    let Generator::Odd(o) = alg.basis[x] else { unreachable!() };
                    let sq = alg.anti(o.i, o.sign, o.i, o.sign);
                    for (m2, c2) in self.act_basis(sq, &m[1..]).iter() {
                        accumulate(&mut acc, m2, c2 * half());
                    }
                } else {
                    self.commute(x, m, &mut acc);
                }
            }
        }
        let terms: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let rc = Rc::new(terms);
        self.memo.borrow_mut().insert(key, rc.clone());
        rc
    }

    /// x y rest = ±y (x rest) + [x, y} rest.
    fn commute(&self, x: usize, m: &[u8], acc: &mut HashMap<Monomial, Q>) {
        let alg = &self.alg;
        let y = alg.raising[m[0] as usize];
        let rest = &m[1..];
        let sign = if alg.is_odd(x) && alg.is_odd(y) { -Q::one() } else { Q::one() };
        for (mm, c) in self.act_basis(x, rest).iter() {
            let c = c * &sign;
            for (m2, c2) in self.act_basis(y, mm).iter() {
                accumulate(acc, m2, &c * c2);
            }
        }
        for &(z, c) in alg.bracket(x, y) {
            let c = Q::from_integer(c.into());
            for (m2, c2) in self.act_basis(z, rest).iter() {
                accumulate(acc, m2, &c * c2);
            }
        }
    }

    pub fn act(&self, x: usize, v: &ModuleVector) -> ModuleVector {
        let offset: Vec<i32> = v.offset.iter().zip(&self.alg.weights[x]).map(|(a, b)| a + b).collect();
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (m, c) in &v.terms {
            for (m2, c2) in self.act_basis(x, m).iter() {
                accumulate(&mut acc, m2, c * c2);
            }
        }
        let mut out = ModuleVector::zero(offset);
        for (m, c) in acc {
            out.add_term(m, c);
        }
        out
    }

    pub fn apply(&self, op: &Operator, v: &ModuleVector) -> ModuleVector {
        let mut out: Option<ModuleVector> = None;
        for (x, c) in op {
            let w = self.act(*x, v).scale(c);
            out = Some(match out {
                None => w,
                Some(o) => o.add(&w).expect("operator components share a weight"),
            });
        }
        out.unwrap_or_else(|| ModuleVector::zero(v.offset.clone()))
    }

    /// ops[0] ops[1] ⋯ v, rightmost first.
    pub fn apply_word(&self, ops: &[Operator], v: &ModuleVector) -> ModuleVector {
        ops.iter().rev().fold(v.clone(), |acc, op| self.apply(op, &acc))
    }

    pub fn apply_monomial(&self, m: &[u8], v: &ModuleVector) -> ModuleVector {
        m.iter().rev().fold(v.clone(), |acc, &r| self.act(self.alg.raising[r as usize], &acc))
    }

    pub fn vacuum(&self) -> ModuleVector {
        ModuleVector::vacuum(self.n())
    }

    /// PBW monomials of the given δ-offset, in depth-first rank order.
    pub fn weight_space(&self, offset: &[i32]) -> Vec<Monomial> {
        let mut out = Vec::new();
        if delta_to_simple_int(offset).iter().any(|&c| c < 0) {
            return out;
        }
        let mut word = Vec::new();
        self.enumerate(offset.to_vec(), 0, &mut word, &mut out);
        out
    }

    fn enumerate(&self, rem: Vec<i32>, start: usize, word: &mut Monomial, out: &mut Vec<Monomial>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(word.clone());
            return;
        }
        for r in start..self.alg.raising.len() {
            let k = self.alg.raising[r];
            let next: Vec<i32> = rem.iter().zip(&self.alg.weights[k]).map(|(a, b)| a - b).collect();
            if delta_to_simple_int(&next).iter().any(|&c| c < 0) {
                continue;
            }
            word.push(r as u8);
            let s = if self.alg.is_odd(k) { r + 1 } else { r };
            self.enumerate(next, s, word, out);
            word.pop();
        }
    }

    /// Gram matrix ⟨u v₀, w v₀⟩ of the Shapovalov form on one weight space.
    pub fn gram(&self, offset: &[i32]) -> Rc<GramMatrix> {
        if let Some(g) = self.grams.borrow().get(offset) {
            return g.clone();
        }
        let basis = self.weight_space(offset);
        let dim = basis.len();
        let mut entries = vec![vec![Q::zero(); dim]; dim];
        if offset.iter().all(|&x| x == 0) {
            entries = vec![vec![Q::one()]];
        } else {
            for (i, u) in basis.iter().enumerate() {
                let y = self.alg.raising[u[0] as usize];
                let sub_offset: Vec<i32> = offset.iter().zip(&self.alg.weights[y]).map(|(a, b)| a - b).collect();
                let sub = self.gram(&sub_offset);
                let row = sub.position(&u[1..]).expect("tail of a PBW word is a PBW word");
                let low = self.alg.omega(y);
                for (j, w) in basis.iter().enumerate() {
                    let mut s = Q::zero();
                    for (m, c) in self.act_basis(low, w).iter() {
                        let col = sub.position(m).expect("image lies in the lower weight space");
                        s += c * &sub.entries[row][col];
                    }
                    entries[i][j] = s;
                }
            }
        }
        let g = Rc::new(GramMatrix::new(offset.to_vec(), basis, entries));
        self.grams.borrow_mut().insert(offset.to_vec(), g.clone());
        g
    }

    pub fn inner(&self, u: &ModuleVector, v: &ModuleVector) -> Q {
        if u.is_zero() || v.is_zero() || u.offset != v.offset {
            return Q::zero();
        }
        let g = self.gram(&u.offset);
        let cu = u.coordinates(&g.basis);
        let cv = v.coordinates(&g.basis);
        super::linalg::bilinear(&g.entries, &cu, &cv)
    }

    pub fn norm(&self, v: &ModuleVector) -> Q {
        self.inner(v, v)
    }

    /// Simple lowering generators: {a_k⁻, a_{k+1}⁺} for k < n, then a_n⁻.
    pub fn simple_lowering(&self) -> Vec<usize> {
        let n = self.n();
        let mut out: Vec<usize> = (0..n - 1).map(|k| self.alg.anti(k, -1, k + 1, 1)).collect();
        out.push(self.alg.osc(n - 1, -1));
        out
    }
}
