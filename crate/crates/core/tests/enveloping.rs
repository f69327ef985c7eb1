use osp_core::characters::partition_count;
use osp_core::enveloping::{gram_psd_check, printed_vector, ModuleVector, PrintedId, VermaModule};
use osp_core::rational::{q, qr};
use osp_core::root_system::simple_to_delta_int;
use osp_core::weights::Signature;

fn sig(d: osp_core::Q, a: &[u32]) -> Signature {
    Signature::new(a.len() + 1, d, a.to_vec()).unwrap()
}

#[test]
fn pbw_dimensions_match_partitions_to_degree_six() {
    let v = VermaModule::new(&sig(q(1), &[0, 0])).unwrap();
    for c1 in 0..=6u32 {
        for c2 in 0..=6 - c1 {
            for c3 in 0..=6 - c1 - c2 {
                let off = simple_to_delta_int(&[c1 as i64, c2 as i64, c3 as i64]);
                assert_eq!(v.weight_space(&off).len() as u64, partition_count(&[c1, c2, c3], 3), "{c1} {c2} {c3}");
            }
        }
    }
}

#[test]
fn rank_two_and_four_dimensions() {
    let v = VermaModule::new(&sig(q(2), &[1])).unwrap();
    for c in [[1u32, 2], [2, 3], [0, 4]] {
        let off = simple_to_delta_int(&[c[0] as i64, c[1] as i64]);
        assert_eq!(v.weight_space(&off).len() as u64, partition_count(&c, 2));
    }
    let v = VermaModule::new(&sig(q(3), &[0, 1, 0])).unwrap();
    let c = [1u32, 1, 2, 2];
    let off = simple_to_delta_int(&c.map(|x| x as i64));
    assert_eq!(v.weight_space(&off).len() as u64, partition_count(&c, 4));
}

#[test]
fn printed_vectors_are_null_at_their_points() {
    for id in PrintedId::PRINTED {
        for s in id.regime_samples() {
            let verma = VermaModule::new(&s).unwrap();
            let v = printed_vector(id, &s).unwrap();
            assert_eq!(verma.norm(&v), q(0), "{id} at {s}");
        }
    }
}

#[test]
fn gram_matrices_are_symmetric() {
    let verma = VermaModule::new(&sig(qr(7, 4), &[1, 2])).unwrap();
    for level in 1..=3 {
        for c1 in 0..=level {
            for c2 in c1..=2 * level {
                let off = simple_to_delta_int(&[c1 as i64, c2 as i64, 2 * level as i64 - c1 as i64 - c2 as i64]);
                if off.iter().any(|&x| x < 0) {
                    continue;
                }
                assert!(verma.gram(&off).is_symmetric(), "{off:?}");
            }
        }
    }
}

#[test]
fn witness_text_parses_back() {
    let s = sig(qr(3, 4), &[0, 0]);
    let report = gram_psd_check(&s, 3).unwrap();
    let w = report.witness.unwrap();
    let verma = VermaModule::new(&s).unwrap();
    let parsed = ModuleVector::parse(&verma.alg, &w.text).unwrap();
    assert_eq!(parsed, w.vector);
    assert_eq!(verma.norm(&parsed), w.norm);
}

#[test]
fn rank_two_unitarity_by_gram() {
    // osp(1|4): threshold d ≥ 1 + a/2 for a ≠ 0; d ≥ 1/2 or d = 0 for a = 0.
    for (d, a, unitary) in [(q(2), 1, true), (qr(3, 2), 1, true), (q(1), 1, false), (qr(1, 2), 0, true), (qr(1, 4), 0, false), (q(0), 0, true)] {
        let s = sig(d, &[a]);
        assert_eq!(gram_psd_check(&s, 4).unwrap().psd, osp_core::unitarity::classify(&s).unitary, "{s}");
        assert_eq!(osp_core::unitarity::classify(&s).unitary, unitary, "{s}");
    }
}
