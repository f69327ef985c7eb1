//! The Weyl group W(B_n) as signed permutations, with ordinary and dot actions and multiplet orbits.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{is_integer, Q};
use crate::root_system::{check_rank, coroot, inner, rho, RootVector, Weight};
use crate::weights::labels_of_weight;

pub const MAX_GENERATE_RANK: usize = 8;

/// w(δ_i) = signs[i] · δ_{perm[i]} (0-based indices).
#[derive(Debug, Clone, Serialize)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    pub length: usize,
    /// Lexicographically least reduced word; [k1, …, kr] means s_k1 ⋯ s_kr.
    pub reduced_word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.perm == o.perm && self.signs == o.signs
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.perm.hash(h);
        self.signs.hash(h);
    }
}

type Key = Vec<i8>;

fn key(perm: &[usize], signs: &[i8]) -> Key {
    perm.iter().zip(signs).map(|(&p, &s)| s * (p as i8 + 1)).collect()
}

fn raw_simple(n: usize, k: usize) -> (Vec<usize>, Vec<i8>) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut signs = vec![1i8; n];
    if k < n {
        perm.swap(k - 1, k);
    } else {
        signs[n - 1] = -1;
    }
    (perm, signs)
}

/// (s_k ∘ w) on raw data.
fn raw_left_mul(k: usize, perm: &[usize], signs: &[i8]) -> (Vec<usize>, Vec<i8>) {
    let n = perm.len();
    let mut p = perm.to_vec();
    let mut s = signs.to_vec();
    for i in 0..n {
        if k < n {
            if p[i] == k - 1 {
                p[i] = k;
            } else if p[i] == k {
                p[i] = k - 1;
            }
        } else if p[i] == n - 1 {
            s[i] = -s[i];
        }
    }
    (p, s)
}

/// Whether ℓ(s_k w) < ℓ(w), via the sign of w⁻¹(α_k).
fn is_left_descent(k: usize, perm: &[usize], signs: &[i8]) -> bool {
    let n = perm.len();
    let pre = |j: usize| perm.iter().position(|&p| p == j).expect("permutation");
    if k == n {
        return signs[pre(n - 1)] < 0;
    }
    let (a, b) = (pre(k - 1), pre(k));
    if a < b { signs[a] < 0 } else { signs[b] > 0 }
}

fn raw_length(perm: &[usize], signs: &[i8]) -> usize {
    let n = perm.len();
    // w(δ_i) as a signed coordinate: positive means +δ_{perm[i]}.
    let neg = |coef: [(usize, i8); 2]| {
        // Sum of entries; the root is negative iff its first nonzero coordinate is negative.
        let mut v = vec![0i8; n];
        for (idx, c) in coef {
            v[idx] += c;
        }
        v.into_iter().find(|&c| c != 0).is_some_and(|c| c < 0)
    };
    let mut len = 0;
    for i in 0..n {
        if signs[i] < 0 {
            len += 1;
        }
        for j in i + 1..n {
            let (pi, pj) = (perm[i], perm[j]);
            if neg([(pi, signs[i]), (pj, -signs[j])]) {
                len += 1;
            }
            if neg([(pi, signs[i]), (pj, signs[j])]) {
                len += 1;
            }
        }
    }
    len
}

fn greedy_word(perm: &[usize], signs: &[i8]) -> Vec<usize> {
    let n = perm.len();
    let (mut p, mut s) = (perm.to_vec(), signs.to_vec());
    let mut word = Vec::new();
    loop {
        match (1..=n).find(|&k| is_left_descent(k, &p, &s)) {
            Some(k) => {
                word.push(k);
                (p, s) = raw_left_mul(k, &p, &s);
            }
            None => return word,
        }
    }
}

impl WeylElement {
    pub fn from_parts(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParams(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParams(format!("bad signs: {signs:?}")));
        }
        let length = raw_length(&perm, &signs);
        let reduced_word = greedy_word(&perm, &signs);
        debug_assert_eq!(length, reduced_word.len());
        Ok(WeylElement { perm, signs, length, reduced_word })
    }

    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), signs: vec![1; n], length: 0, reduced_word: Vec::new() }
    }

    pub fn simple(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParams(format!("simple reflection s{k} out of range for n={n}")));
        }
        let (perm, signs) = raw_simple(n, k);
        Ok(WeylElement { perm, signs, length: 1, reduced_word: vec![k] })
    }

    /// The product s_k1 ⋯ s_kr.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter().rev().try_fold(Self::identity(n), |acc, &k| Ok(Self::simple(n, k)?.compose(&acc)))
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm: Vec<usize> = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs: Vec<i8> = other.perm.iter().zip(&other.signs).map(|(&p, &s)| s * self.signs[p]).collect();
        WeylElement::from_parts(perm, signs).expect("composition of signed permutations")
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement::from_parts(perm, signs).expect("inverse")
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        let mut out = Weight::zero(self.rank());
        for i in 0..self.rank() {
            let c = &lambda.coords[i];
            out.coords[self.perm[i]] = if self.signs[i] > 0 { c.clone() } else { -c };
        }
        out
    }

    pub fn word_string(&self) -> String {
        if self.reduced_word.is_empty() {
            return "e".to_string();
        }
        self.reduced_word.iter().map(|k| format!("s{k}")).collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

/// Parses `e`, `s1s2s3` or `1,2,3` into a list of simple indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let bad = || Error::Parse(format!("expected a word like s1s2s3, got `{s}`"));
    if t == "e" || t.is_empty() {
        return Ok(Vec::new());
    }
    if t.contains(',') {
        return t
            .split(',')
            .map(|x| x.trim().parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(bad))
            .collect();
    }
    t.strip_prefix('s')
        .ok_or_else(bad)?
        .split('s')
        .map(|x| x.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(bad))
        .collect()
}

/// All 2ⁿn! elements sorted by (length, reduced word).
pub fn generate(n: usize) -> Result<Vec<WeylElement>> {
    check_rank(n)?;
    if n > MAX_GENERATE_RANK {
        return Err(Error::InvalidRank { n, min: 2, max: MAX_GENERATE_RANK });
    }
    let e = WeylElement::identity(n);
    let mut index: HashMap<Key, usize> = HashMap::from([(key(&e.perm, &e.signs), 0)]);
    let mut all = vec![e];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &w in &frontier {
            for k in 1..=n {
                let (perm, signs) = (&all[w].perm, &all[w].signs);
                if is_left_descent(k, perm, signs) {
                    continue;
                }
                let (p, s) = raw_left_mul(k, perm, signs);
                let kk = key(&p, &s);
                if index.contains_key(&kk) {
                    continue;
                }
                let first = (1..=n).find(|&j| is_left_descent(j, &p, &s)).expect("nonidentity");
                let (pp, ss) = raw_left_mul(first, &p, &s);
                let tail = &all[index[&key(&pp, &ss)]].reduced_word;
                let mut word = Vec::with_capacity(tail.len() + 1);
                word.push(first);
                word.extend_from_slice(tail);
                let length = all[w].length + 1;
                index.insert(kk, all.len());
                next.push(all.len());
                all.push(WeylElement { perm: p, signs: s, length, reduced_word: word });
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| (a.length, &a.reduced_word).cmp(&(b.length, &b.reduced_word)));
    Ok(all)
}

/// The closure of a set of generators under composition.
pub fn subgroup_generated(gens: &[WeylElement]) -> Vec<WeylElement> {
    let n = gens.first().map_or(2, WeylElement::rank);
    let e = WeylElement::identity(n);
    let mut seen: HashMap<Key, WeylElement> = HashMap::from([(key(&e.perm, &e.signs), e.clone())]);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let u = g.compose(&w);
            let k = key(&u.perm, &u.signs);
            if !seen.contains_key(&k) {
                seen.insert(k, u.clone());
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<_> = seen.into_values().collect();
    out.sort_by(|a, b| (a.length, &a.reduced_word).cmp(&(b.length, &b.reduced_word)));
    out
}

/// λ − (λ, β∨) β.
pub fn reflect(beta: &RootVector, lambda: &Weight) -> Result<Weight> {
    let c = inner(lambda, &coroot(beta)?)?;
    Ok(lambda - &beta.to_weight().scale(&c))
}

/// w·λ = w(λ − ρ) + ρ.
pub fn dot_act(w: &WeylElement, lambda: &Weight) -> Weight {
    let r = rho(lambda.rank());
    &w.act(&(lambda - &r)) + &r
}

fn simple_pairing(nu: &Weight, k: usize) -> Q {
    let n = nu.rank();
    if k < n { &nu.coords[k - 1] - &nu.coords[k] } else { &nu.coords[n - 1] * Q::from_integer(2.into()) }
}

fn check_integral(lambda: &Weight) -> Result<()> {
    if labels_of_weight(lambda).iter().all(is_integer) {
        Ok(())
    } else {
        Err(Error::NonIntegral(lambda.to_string()))
    }
}

/// Minimal w with Λ = w·Λ₀, Λ₀ having all labels ≥ 0.
pub fn find_w_lambda(lambda: &Weight) -> Result<(WeylElement, Weight)> {
    check_integral(lambda)?;
    let n = lambda.rank();
    let r = rho(n);
    let mut nu = &r - lambda;
    let mut word = Vec::new();
    while let Some(k) = (1..=n).find(|&k| simple_pairing(&nu, k).is_negative()) {
        nu = WeylElement::simple(n, k)?.act(&nu);
        word.push(k);
    }
    let w = WeylElement::from_word(n, &word)?;
    debug_assert_eq!(w.length, word.len());
    Ok((w, &r - &nu))
}

#[derive(Debug, Clone, Serialize)]
pub struct MultipletNode {
    pub element: WeylElement,
    pub weight: Weight,
    #[serde(serialize_with = "crate::rational::serialize_q_vec")]
    pub labels: Vec<Q>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultipletGraph {
    pub nodes: Vec<MultipletNode>,
    /// (from, to, k): node `to` is s_k applied to node `from`, one step longer.
    pub edges: Vec<(usize, usize, usize)>,
}

fn orbit_length(nu: &Weight) -> usize {
    let n = nu.rank();
    let mut len = 0;
    for i in 0..n {
        if nu.coords[i].is_negative() {
            len += 1;
        }
        for j in i + 1..n {
            if (&nu.coords[i] - &nu.coords[j]).is_negative() {
                len += 1;
            }
            if (&nu.coords[i] + &nu.coords[j]).is_negative() {
                len += 1;
            }
        }
    }
    len
}

/// The dot orbit of Λ₀ (taken to its dominant representative) with embedding edges.
pub fn multiplet_orbit(lambda0: &Weight) -> Result<MultipletGraph> {
    let (_, start) = find_w_lambda(lambda0)?;
    let n = start.rank();
    let r = rho(n);
    let nu0 = &r - &start;
    let mut found: HashMap<Weight, usize> = HashMap::from([(nu0.clone(), 0)]);
    let mut raw: Vec<(Weight, WeylElement)> = vec![(nu0, WeylElement::identity(n))];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for k in 1..=n {
            let s = WeylElement::simple(n, k)?;
            let nu = s.act(&raw[i].0);
            if !found.contains_key(&nu) {
                found.insert(nu.clone(), raw.len());
                queue.push_back(raw.len());
                let w = s.compose(&raw[i].1);
                raw.push((nu, w));
            }
        }
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| {
        let (wa, wb) = (&raw[a].1, &raw[b].1);
        (wa.length, &wa.reduced_word).cmp(&(wb.length, &wb.reduced_word))
    });
    let mut pos = vec![0; raw.len()];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    let nodes: Vec<MultipletNode> = order
        .iter()
        .map(|&i| {
            let weight = &r - &raw[i].0;
            let labels = labels_of_weight(&weight);
            MultipletNode { element: raw[i].1.clone(), weight, labels }
        })
        .collect();
    let mut edges = Vec::new();
    for (p, &i) in order.iter().enumerate() {
        let len = orbit_length(&raw[i].0);
        for k in 1..=n {
            let nu = WeylElement::simple(n, k)?.act(&raw[i].0);
            if orbit_length(&nu) == len + 1 {
                edges.push((p, pos[found[&nu]], k));
            }
        }
    }
    edges.sort();
    Ok(MultipletGraph { nodes, edges })
}

const EDGE_STYLES: [(&str, &str); 6] = [
    ("red", "solid"),
    ("blue", "dashed"),
    ("green", "dotted"),
    ("orange", "bold"),
    ("purple", "dashed"),
    ("brown", "dotted"),
];

impl MultipletGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph multiplet {\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let labels: Vec<String> = node.labels.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("  n{i} [label=\"({})\\n{}\"];\n", labels.join(","), node.element));
        }
        for &(a, b, k) in &self.edges {
            let (color, style) = EDGE_STYLES[(k - 1) % EDGE_STYLES.len()];
            out.push_str(&format!("  n{a} -> n{b} [color={color}, style={style}, label=\"s{k}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.nodes.first().is_some_and(|n0| n0.labels.iter().any(Zero::is_zero))
    }
}
