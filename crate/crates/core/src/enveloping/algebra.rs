//! osp(1|2n) realized by para-Bose operators a_i^±: odd basis a_i^ξ, even basis {a_i^ξ, a_j^η}.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{check_rank, delta_to_simple_int};

/// Largest rank for which the super-Jacobi identity is checked exhaustively at construction.
pub const JACOBI_CHECK_RANK: usize = 6;

/// ξ = +1 raises, ξ = −1 lowers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Osc {
    pub i: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Odd(Osc),
    /// {x, y} with x ≤ y.
    Even(Osc, Osc),
}

impl Generator {
    pub fn even(x: Osc, y: Osc) -> Self {
        if x <= y { Generator::Even(x, y) } else { Generator::Even(y, x) }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Generator::Odd(_))
    }

    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut w = vec![0; n];
        match *self {
            Generator::Odd(x) => w[x.i] += x.sign as i32,
            Generator::Even(x, y) => {
                w[x.i] += x.sign as i32;
                w[y.i] += y.sign as i32;
            }
        }
        w
    }

    /// The anti-involution a^± ↦ a^∓.
    pub fn omega(&self) -> Self {
        let f = |x: Osc| Osc { i: x.i, sign: -x.sign };
        match *self {
            Generator::Odd(x) => Generator::Odd(f(x)),
            Generator::Even(x, y) => Generator::even(f(x), f(y)),
        }
    }
}

impl fmt::Display for Osc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.i + 1, if self.sign > 0 { '+' } else { '-' })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Odd(x) => write!(f, "{x}"),
            Generator::Even(x, y) => write!(f, "{{{x},{y}}}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Raising,
    Cartan,
    Lowering,
}

/// Sparse integer combination of basis indices.
pub type Combo = Vec<(usize, i64)>;

#[derive(Debug, Clone)]
pub struct Algebra {
    pub n: usize,
    pub basis: Vec<Generator>,
    index: HashMap<Generator, usize>,
    /// bracket[x][y] = [x, y} as a combination of basis elements.
    bracket: Vec<Vec<Combo>>,
    /// Raising basis indices in PBW order.
    pub raising: Vec<usize>,
    /// PBW rank of each basis element, if raising.
    pub rank: Vec<Option<usize>>,
    pub weights: Vec<Vec<i32>>,
}

fn add_to(acc: &mut Combo, k: usize, c: i64) {
    if c == 0 {
        return;
    }
    if let Some(p) = acc.iter().position(|e| e.0 == k) {
        acc[p].1 += c;
        if acc[p].1 == 0 {
            acc.remove(p);
        }
    } else {
        acc.push((k, c));
    }
}

impl Algebra {
    pub fn new(n: usize) -> Result<Self> {
        check_rank(n)?;
        let mut basis = Vec::new();
        let signs = [1i8, -1];
        for i in 0..n {
            for &s in &signs {
                basis.push(Generator::Odd(Osc { i, sign: s }));
            }
        }
        let oscs: Vec<Osc> = (0..n).flat_map(|i| signs.iter().map(move |&sign| Osc { i, sign })).collect();
        let mut evens: Vec<Generator> = Vec::new();
        for &x in &oscs {
            for &y in &oscs {
                let g = Generator::even(x, y);
                if !evens.contains(&g) {
                    evens.push(g);
                }
            }
        }
        evens.sort();
        basis.extend(evens);
        debug_assert_eq!(basis.len(), 2 * n + n * (2 * n + 1));
        let index: HashMap<Generator, usize> = basis.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let weights: Vec<Vec<i32>> = basis.iter().map(|g| g.weight(n)).collect();

        let mut alg = Algebra { n, basis, index, bracket: Vec::new(), raising: Vec::new(), rank: Vec::new(), weights };
        let size = alg.basis.len();
        let mut table = vec![vec![Combo::new(); size]; size];
        for x in 0..size {
            for y in 0..size {
                table[x][y] = alg.raw_bracket(alg.basis[x], alg.basis[y]);
            }
        }
        alg.bracket = table;

        let mut raising: Vec<usize> = (0..size).filter(|&k| alg.kind(k) == Kind::Raising).collect();
        raising.sort_by_key(|&k| alg.pbw_key(k));
        let mut rank = vec![None; size];
        for (r, &k) in raising.iter().enumerate() {
            rank[k] = Some(r);
        }
        alg.raising = raising;
        alg.rank = rank;

        if n <= JACOBI_CHECK_RANK {
            if let Some(bad) = alg.jacobi_failure() {
                return Err(Error::Anomaly(format!("super-Jacobi identity fails on {bad}")));
            }
        }
        Ok(alg)
    }

    /// Even generators first, then by height, then by descending δ-coordinates.
    fn pbw_key(&self, k: usize) -> (bool, i64, Vec<i32>) {
        let w = &self.weights[k];
        let height = delta_to_simple_int(w).iter().sum();
        (self.basis[k].is_odd(), height, w.iter().map(|x| -x).collect())
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, g: Generator) -> usize {
        self.index[&g]
    }

    pub fn osc(&self, i: usize, sign: i8) -> usize {
        self.index_of(Generator::Odd(Osc { i, sign }))
    }

    pub fn anti(&self, i: usize, s: i8, j: usize, t: i8) -> usize {
        self.index_of(Generator::even(Osc { i, sign: s }, Osc { i: j, sign: t }))
    }

    pub fn is_odd(&self, k: usize) -> bool {
        self.basis[k].is_odd()
    }

    pub fn kind(&self, k: usize) -> Kind {
        match self.weights[k].iter().find(|&&c| c != 0) {
            None => Kind::Cartan,
            Some(&c) if c > 0 => Kind::Raising,
            Some(_) => Kind::Lowering,
        }
    }

    pub fn omega(&self, k: usize) -> usize {
        self.index_of(self.basis[k].omega())
    }

    pub fn bracket(&self, x: usize, y: usize) -> &Combo {
        &self.bracket[x][y]
    }

    fn raw_bracket(&self, x: Generator, y: Generator) -> Combo {
        let mut r = Combo::new();
        match (x, y) {
            (Generator::Odd(a), Generator::Odd(b)) => add_to(&mut r, self.index_of(Generator::even(a, b)), 1),
            (Generator::Odd(_), Generator::Even(..)) => {
                for (k, c) in self.raw_bracket(y, x) {
                    add_to(&mut r, k, -c);
                }
            }
            (Generator::Even(a, b), Generator::Odd(e)) => {
                // [{a_i^ξ, a_j^η}, a_k^ε] = (ε−ξ)δ_ik a_j^η + (ε−η)δ_jk a_i^ξ
                if a.i == e.i {
                    add_to(&mut r, self.index_of(Generator::Odd(b)), (e.sign - a.sign) as i64);
                }
                if b.i == e.i {
                    add_to(&mut r, self.index_of(Generator::Odd(a)), (e.sign - b.sign) as i64);
                }
            }
            (Generator::Even(..), Generator::Even(c, d)) => {
                // [E, {c, d}] = {[E, c], d} + {c, [E, d]}
                let (gc, gd) = (Generator::Odd(c), Generator::Odd(d));
                for (k, v) in self.raw_bracket(x, gc) {
                    for (k2, v2) in self.raw_bracket(self.basis[k], gd) {
                        add_to(&mut r, k2, v * v2);
                    }
                }
                for (k, v) in self.raw_bracket(x, gd) {
                    for (k2, v2) in self.raw_bracket(gc, self.basis[k]) {
                        add_to(&mut r, k2, v * v2);
                    }
                }
            }
        }
        r
    }

    fn bracket_combo(&self, x: &Combo, y: &Combo) -> Combo {
        let mut r = Combo::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for &(k, c) in self.bracket(a, b) {
                    add_to(&mut r, k, ca * cb * c);
                }
            }
        }
        r.sort();
        r
    }

    /// First basis triple violating [x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]].
    pub fn jacobi_failure(&self) -> Option<String> {
        let size = self.size();
        for x in 0..size {
            for y in 0..size {
                let xy = self.bracket(x, y).clone();
                let sign = if self.is_odd(x) && self.is_odd(y) { -1 } else { 1 };
                for z in 0..size {
                    let lhs = self.bracket_combo(&vec![(x, 1)], self.bracket(y, z));
                    let mut rhs = self.bracket_combo(&xy, &vec![(z, 1)]);
                    for (k, c) in self.bracket_combo(&vec![(y, 1)], self.bracket(x, z)) {
                        add_to(&mut rhs, k, sign * c);
                    }
                    rhs.sort();
                    if lhs != rhs {
                        return Some(format!("({}, {}, {})", self.basis[x], self.basis[y], self.basis[z]));
                    }
                }
            }
        }
        None
    }

    /// Parses `a2+` or `{a1+,a3-}`.
    pub fn parse_generator(&self, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("unknown generator `{s}`"));
        let osc = |t: &str| -> Result<Osc> {
            let t = t.trim().strip_prefix('a').ok_or_else(bad)?;
            let (num, sign) = match t.as_bytes().last() {
                Some(b'+') => (&t[..t.len() - 1], 1),
                Some(b'-') => (&t[..t.len() - 1], -1),
                _ => return Err(bad()),
            };
            let i: usize = num.parse().map_err(|_| bad())?;
            if i == 0 || i > self.n {
                return Err(bad());
            }
            Ok(Osc { i: i - 1, sign })
        };
        let g = match s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            Some(inner) => {
                let (a, b) = inner.split_once(',').ok_or_else(bad)?;
                Generator::even(osc(a)?, osc(b)?)
            }
            None => Generator::Odd(osc(s)?),
        };
        Ok(self.index_of(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_kinds() {
        for n in 2..=4 {
            let a = Algebra::new(n).unwrap();
            assert_eq!(a.size(), 2 * n + n * (2 * n + 1));
            assert_eq!(a.raising.len(), n * n + n);
            assert_eq!((0..a.size()).filter(|&k| a.kind(k) == Kind::Cartan).count(), n);
        }
    }

    #[test]
    fn trilinear_example() {
        let a = Algebra::new(3).unwrap();
        let h = a.anti(0, 1, 0, -1);
        let p = a.osc(0, 1);
        assert_eq!(a.bracket(h, p), &vec![(p, 2)]);
        assert_eq!(a.weights[a.anti(0, 1, 1, 1)], vec![1, 1, 0]);
    }

    #[test]
    fn jacobi_holds() {
        for n in 2..=4 {
            assert!(Algebra::new(n).unwrap().jacobi_failure().is_none());
        }
    }

    #[test]
    fn omega_swaps_weights() {
        let a = Algebra::new(3).unwrap();
        for k in 0..a.size() {
            let w: Vec<i32> = a.weights[k].iter().map(|x| -x).collect();
            assert_eq!(a.weights[a.omega(k)], w);
            assert_eq!(a.omega(a.omega(k)), k);
        }
    }

    #[test]
    fn pbw_order_puts_odd_last() {
        let a = Algebra::new(3).unwrap();
        let odd: Vec<bool> = a.raising.iter().map(|&k| a.is_odd(k)).collect();
        assert!(odd.windows(2).all(|w| !w[0] || w[1]));
        assert_eq!(odd.iter().filter(|&&o| o).count(), 3);
    }

    #[test]
    fn generator_names() {
        let a = Algebra::new(3).unwrap();
        for k in 0..a.size() {
            assert_eq!(a.parse_generator(&a.basis[k].to_string()).unwrap(), k);
        }
        assert_eq!(a.parse_generator("{a3-,a1+}").unwrap(), a.anti(0, 1, 2, -1));
        for s in ["a4+", "a1", "b1+", "{a1+}", "{a1+,a2}", "a0-"] {
            assert!(a.parse_generator(s).is_err(), "{s}");
        }
    }
}
