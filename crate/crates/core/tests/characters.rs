use osp_core::characters::*;
use osp_core::rational::q;
use osp_core::weights::weight_from_labels;

fn p(m1: u32, m2: u32) -> UnitaryParams {
    UnitaryParams { m1, m2 }
}

#[test]
fn unitary_cases_are_nonnegative_to_degree_ten() {
    let mut cases = vec![(UnitaryCase::D2EqD13, p(1, 1)), (UnitaryCase::D23, p(1, 1))];
    for m1 in 1..=3 {
        for m2 in 1..=3 {
            cases.push((UnitaryCase::D1, p(m1, m2)));
        }
    }
    for m2 in 2..=5 {
        cases.push((UnitaryCase::D12, p(1, m2)));
        cases.push((UnitaryCase::D2, p(1, m2)));
    }
    for (case, params) in cases {
        let ch = unitary_character(case, params, 10).unwrap();
        let negative: Vec<_> = ch.series.coeffs.iter().filter(|(_, c)| **c < q(0)).take(3).collect();
        assert!(negative.is_empty(), "{} {:?}: {:?}", case.name(), params, negative);
        assert_eq!(ch.series.coefficient(&[0, 0, 0]), q(1));
    }
}

#[test]
fn weyl_characters_match_dimension_formula() {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let l = weight_from_labels(&[q(a), q(b), q(c)]);
                let top = weyl_top_degree(&l).unwrap();
                let ch = weyl_character(&l, top + 3).unwrap();
                assert!(ch.series.coeffs.keys().all(|e| e.degree() <= top));
                assert!(ch.series.is_nonnegative());
                assert!(ch.series.coeffs.values().all(|c| c.is_integer()));
                assert_eq!(ch.series.eval_at_one(), weyl_dimension(&l).unwrap(), "{a}{b}{c}");
            }
        }
    }
}
