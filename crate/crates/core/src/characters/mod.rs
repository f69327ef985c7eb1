//! Formal characters: Verma modules, finite-dimensional B_n and sl(3) modules, and the
//! five boundary/isolated unitary cases of osp(1|6).

pub mod series;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{is_positive_integer, q, to_i64, Q};
use crate::root_system::{build_root_system, check_rank, delta_to_simple_int, rho, Weight};
use crate::weights::{labels_of_weight, weight_from_labels};
use crate::weyl::{generate, WeylElement};

pub use series::{CharacterSeries, Exponent};

pub const DEFAULT_MAXDEG: u32 = 10;

/// The character e(Λ)·series; `prefix` is None when Λ is left generic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedCharacter {
    pub prefix: Option<Weight>,
    pub series: CharacterSeries,
}

/// Restricted positive roots in simple coordinates.
pub fn restricted_roots_simple(n: usize) -> Vec<Vec<u32>> {
    build_root_system(n)
        .expect("rank")
        .restricted_positive
        .iter()
        .map(|b| delta_to_simple_int(&b.coords).into_iter().map(|x| x as u32).collect())
        .collect()
}

/// Number of multisets of restricted positive roots summing to μ, by direct enumeration.
pub fn partition_count(mu: &[u32], n: usize) -> u64 {
    fn go(roots: &[Vec<u32>], rem: &mut Vec<u32>) -> u64 {
        if rem.iter().all(|&x| x == 0) {
            return 1;
        }
        let Some((first, rest)) = roots.split_first() else { return 0 };
        let mut total = go(rest, rem);
        let mut taken = 0;
        while first.iter().zip(rem.iter()).all(|(r, m)| r <= m) {
            for (m, r) in rem.iter_mut().zip(first) {
                *m -= r;
            }
            taken += 1;
            total += go(rest, rem);
        }
        for (m, r) in rem.iter_mut().zip(first) {
            *m += r * taken;
        }
        total
    }
    assert_eq!(mu.len(), n, "exponent length");
    go(&restricted_roots_simple(n), &mut mu.to_vec())
}

/// ∏ over restricted positive roots of 1/(1 − t^β).
pub fn verma_character(n: usize, maxdeg: u32) -> Result<NormalizedCharacter> {
    check_rank(n)?;
    let series = restricted_roots_simple(n)
        .iter()
        .fold(CharacterSeries::one(n, maxdeg), |acc, v| acc.div_one_minus(v));
    Ok(NormalizedCharacter { prefix: None, series })
}

/// The normalized character of the sl(3) irrep with Dynkin labels (m₁, m₂), as a polynomial in t₁, t₂.
pub fn sl3_character(m1: u32, m2: u32) -> Result<CharacterSeries> {
    let m12 = m1 + m2;
    let deg = 2 * m12;
    let numerator = CharacterSeries::from_terms(
        2,
        deg,
        [
            (vec![0, 0], q(1)),
            (vec![m1, 0], q(-1)),
            (vec![0, m2], q(-1)),
            (vec![m1, m12], q(1)),
            (vec![m12, m2], q(1)),
            (vec![m12, m12], q(-1)),
        ],
    );
    numerator.div_exact_one_minus(&[1, 0])?.div_exact_one_minus(&[0, 1])?.div_exact_one_minus(&[1, 1])
}

fn dominant_nu(lambda0: &Weight) -> Result<Vec<i64>> {
    let labels = labels_of_weight(lambda0);
    if !labels.iter().all(is_positive_integer) {
        return Err(Error::NonDominant(format!("labels {}", Weight::new(labels))));
    }
    Ok(crate::root_system::delta_to_simple(&(&rho(lambda0.rank()) - lambda0))
        .iter()
        .map(|x| to_i64(&(x * q(2))).expect("integral"))
        .collect())
}

/// Σ_w (−1)^ℓ(w) t^{ν₀ − wν₀} · ch V, for Λ₀ with positive integer labels (ν₀ = ρ − Λ₀).
pub fn weyl_character(lambda0: &Weight, maxdeg: u32) -> Result<NormalizedCharacter> {
    let n = lambda0.rank();
    dominant_nu(lambda0)?;
    let nu0 = &rho(n) - lambda0;
    let mut numerator = CharacterSeries::zero(n, maxdeg);
    for w in generate(n)? {
        let shift = crate::root_system::delta_to_simple(&(&nu0 - &w.act(&nu0)));
        let exp: Vec<u32> = shift.iter().map(|x| to_i64(x).expect("integral shift") as u32).collect();
        let sign = if w.length % 2 == 0 { Q::one() } else { -Q::one() };
        numerator.add_term(Exponent(exp), sign);
    }
    // Multiplying by the Verma product one geometric factor at a time.
    let series = restricted_roots_simple(n).iter().fold(numerator, |acc, v| acc.div_one_minus(v));
    Ok(NormalizedCharacter { prefix: Some(lambda0.clone()), series })
}

/// Total degree of the top weight 2ν₀ of the finite-dimensional module.
pub fn weyl_top_degree(lambda0: &Weight) -> Result<u32> {
    Ok(dominant_nu(lambda0)?.iter().sum::<i64>() as u32)
}

/// The B_n Weyl dimension ∏ (ν₀, β∨)/(ρ, β∨) over positive roots.
pub fn weyl_dimension(lambda0: &Weight) -> Result<Q> {
    let n = lambda0.rank();
    dominant_nu(lambda0)?;
    let nu0 = &rho(n) - lambda0;
    let r = rho(n);
    let mut prod = Q::one();
    for b in build_root_system(n)?.restricted_positive {
        let cr = crate::root_system::coroot(&b)?;
        prod *= crate::root_system::inner(&nu0, &cr)? / crate::root_system::inner(&r, &cr)?;
    }
    Ok(prod)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitaryCase {
    D1,
    D12,
    D2EqD13,
    D2,
    D23,
}

impl UnitaryCase {
    pub const ALL: [UnitaryCase; 5] =
        [UnitaryCase::D1, UnitaryCase::D12, UnitaryCase::D2EqD13, UnitaryCase::D2, UnitaryCase::D23];

    pub fn name(&self) -> &'static str {
        match self {
            UnitaryCase::D1 => "d1",
            UnitaryCase::D12 => "d12",
            UnitaryCase::D2EqD13 => "d2eq13",
            UnitaryCase::D2 => "d2",
            UnitaryCase::D23 => "d23",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "d1" => Ok(UnitaryCase::D1),
            "d12" => Ok(UnitaryCase::D12),
            "d2eq13" | "d2_eq_d13" | "d2=d13" => Ok(UnitaryCase::D2EqD13),
            "d2" => Ok(UnitaryCase::D2),
            "d23" => Ok(UnitaryCase::D23),
            _ => Err(Error::InvalidParams(format!("unknown character case `{s}`"))),
        }
    }

    /// The paper's formula is stated as a conjecture for this case.
    pub fn is_conjectural(&self) -> bool {
        matches!(self, UnitaryCase::D2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitaryParams {
    pub m1: u32,
    pub m2: u32,
}

/// One sl(3) sextet: sign · t^shift · ch Λ_{m1,m2}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SextetTerm {
    pub sign: i8,
    pub shift: [u32; 3],
    pub m1: u32,
    pub m2: u32,
}

fn term(sign: i8, shift: [u32; 3], m1: u32, m2: u32) -> SextetTerm {
    SextetTerm { sign, shift, m1, m2 }
}

fn check_params(case: UnitaryCase, p: UnitaryParams) -> Result<()> {
    let ok = match case {
        UnitaryCase::D1 => p.m1 >= 1 && p.m2 >= 1,
        UnitaryCase::D12 | UnitaryCase::D2 => p.m2 >= 2,
        UnitaryCase::D2EqD13 | UnitaryCase::D23 => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("case {} does not accept m1={}, m2={}", case.name(), p.m1, p.m2)))
    }
}

/// The bracketed combination of sl(3) characters for each case.
pub fn sextet_terms(case: UnitaryCase, p: UnitaryParams) -> Result<Vec<SextetTerm>> {
    check_params(case, p)?;
    let (m1, m2) = (p.m1, p.m2);
    Ok(match case {
        UnitaryCase::D1 => vec![term(1, [0, 0, 0], m1, m2), term(-1, [1, 1, 1], m1 - 1, m2)],
        UnitaryCase::D12 => vec![term(1, [0, 0, 0], 1, m2), term(-1, [m2, 2 * m2, 2 * m2], 1, m2 - 1)],
        UnitaryCase::D2EqD13 => vec![term(1, [0, 0, 0], 1, 1), term(-1, [1, 2, 3], 1, 1)],
        UnitaryCase::D2 => vec![
            term(1, [0, 0, 0], 1, m2),
            term(-1, [0, 1, 1], 2, m2 - 1),
            term(1, [1, 3, 3], 2, m2 - 2),
            term(-1, [2, 4, 4], 1, m2 - 2),
        ],
        UnitaryCase::D23 => vec![
            term(1, [0, 0, 0], 1, 1),
            term(-1, [0, 1, 2], 2, 1),
            term(1, [1, 2, 4], 1, 2),
            term(-1, [2, 4, 6], 1, 1),
        ],
    })
}

/// Dynkin labels of the lowest weight Λ₀ of each case.
pub fn case_labels(case: UnitaryCase, p: UnitaryParams) -> Vec<i64> {
    let (m1, m2) = (p.m1 as i64, p.m2 as i64);
    match case {
        UnitaryCase::D1 => vec![m1, m2, 1 - 2 * (m1 + m2)],
        UnitaryCase::D12 => vec![1, m2, -2 * m2],
        UnitaryCase::D2EqD13 => vec![1, 1, -1],
        UnitaryCase::D2 => vec![1, m2, 1 - 2 * m2],
        UnitaryCase::D23 => vec![1, 1, 0],
    }
}

/// The bracket as a polynomial in t₁, t₂, t₃.
pub fn unitary_bracket(case: UnitaryCase, p: UnitaryParams) -> Result<CharacterSeries> {
    let terms = sextet_terms(case, p)?;
    let deg = terms.iter().map(|t| t.shift.iter().sum::<u32>() + 2 * (t.m1 + t.m2)).max().unwrap_or(0);
    let mut out = CharacterSeries::zero(3, deg);
    for t in terms {
        let piece = sl3_character(t.m1, t.m2)?.embed(3).with_maxdeg(deg).shift(&t.shift);
        out = out.add(&piece.scale(&q(t.sign as i64)));
    }
    Ok(out)
}

/// Exponents of the six noncompact factors 1 − t^β of the unitary-case denominators.
pub fn noncompact_roots() -> Vec<Vec<u32>> {
    restricted_roots_simple(3).into_iter().filter(|v| v[2] > 0).collect()
}

pub fn unitary_character(case: UnitaryCase, p: UnitaryParams, maxdeg: u32) -> Result<NormalizedCharacter> {
    let bracket = unitary_bracket(case, p)?.truncate(maxdeg);
    let series = noncompact_roots().iter().fold(bracket, |acc, v| acc.div_one_minus(v));
    let labels: Vec<Q> = case_labels(case, p).into_iter().map(q).collect();
    Ok(NormalizedCharacter { prefix: Some(weight_from_labels(&labels)), series })
}

/// The Weyl group element w_Λ for each case, as found in the dominant chamber.
pub fn case_w_lambda(case: UnitaryCase, p: UnitaryParams) -> Result<(WeylElement, Weight)> {
    let labels: Vec<Q> = case_labels(case, p).into_iter().map(q).collect();
    crate::weyl::find_w_lambda(&weight_from_labels(&labels))
}

/// The series 1/∏(1 − t^v) truncated at `maxdeg`.
pub fn product_inverse(n: usize, factors: &[Vec<u32>], maxdeg: u32) -> CharacterSeries {
    factors.iter().fold(CharacterSeries::one(n, maxdeg), |acc, v| acc.div_one_minus(v))
}

pub fn is_zero_series(s: &CharacterSeries) -> bool {
    s.coeffs.values().all(Zero::is_zero)
}
