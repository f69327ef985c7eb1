//! Acceptance criteria 1–9. Each prints one PASS/FAIL line with its measured time and pinned limit.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{rngs::StdRng, Rng, SeedableRng};

use osp_core::characters::{
    partition_count, product_inverse, sl3_character, unitary_bracket, unitary_character, verma_character, CharacterSeries,
    UnitaryCase, UnitaryParams,
};
use osp_core::enveloping::{
    find_singular, gram_psd_check, norm_polynomial_in_d, verify_singular, PrintedId, UniPoly, VermaModule,
};
use osp_core::rational::{half, q, qr};
use osp_core::root_system::RootVector;
use osp_core::unitarity::{classify, Branch};
use osp_core::weights::{
    dynkin_labels, labels_of_weight, m_delta, m_two_delta, mn_at_reduction, reduction_points, weight_from_labels, PointId,
    Signature,
};
use osp_core::weyl::{dot_act, generate, multiplet_orbit, parse_word, WeylElement};
use osp_core::Q;

/// Wall-clock limits per criterion.
const LIMITS: [Duration; 9] = [
    Duration::from_secs(1),
    Duration::from_secs(300),
    Duration::from_secs(1),
    Duration::from_secs(10),
    Duration::from_secs(30),
    Duration::from_secs(120),
    Duration::from_secs(60),
    Duration::from_secs(5),
    Duration::from_secs(1),
];

/// Deepest Gram level needed to witness every nonunitary cell of the cross-validation grid.
const GRAM_LEVEL: usize = 4;

/// Total degree to which the d23 character is compared with its closed form.
const D23_DEGREE: u32 = 12;

const VERMA_DEGREE: u32 = 8;

/// Random signatures drawn for the identity suite.
const IDENTITY_SAMPLES: usize = 100;

/// The printed list of the 48 elements of W(B₃).
const PRINTED_WORDS: [&str; 48] = [
    "e", "s1", "s2", "s3",
    "s1s2", "s1s3", "s2s1", "s2s3", "s3s2",
    "s1s2s1", "s1s2s3", "s1s3s2", "s2s1s3", "s2s3s2", "s3s2s1", "s3s2s3",
    "s1s2s1s3", "s1s2s3s2", "s1s3s2s1", "s1s3s2s3",
    "s2s3s2s1", "s2s1s3s2", "s3s2s3s1", "s3s2s3s2",
    "s1s2s3s2s1", "s1s3s2s1s3", "s1s2s1s3s2", "s1s3s2s3s2",
    "s2s1s3s2s1", "s2s1s3s2s3", "s3s2s3s1s2", "s3s2s3s2s1",
    "s1s3s2s3s2s1", "s1s3s2s1s3s2", "s1s2s1s3s2s1", "s2s1s3s2s1s3",
    "s2s1s3s2s3s2", "s3s2s3s1s2s1", "s3s2s3s1s2s3",
    "s2s1s3s2s3s2s1", "s2s1s3s2s3s1s2", "s3s2s1s2s3s2s1",
    "s3s2s3s1s2s1s3", "s3s2s3s1s2s3s2",
    "s2s3s2s1s2s3s2s1", "s3s2s1s3s2s3s2s1", "s3s2s1s3s2s3s1s2",
    "s2s3s2s1s3s2s3s2s1",
];

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn sig3(d: Q, a1: u32, a2: u32) -> Signature {
    Signature::new(3, d, vec![a1, a2]).unwrap()
}

/// The rank-3 theorem written out directly: (unitary, branch, governing value).
fn theorem_n3(d: &Q, a1: u32, a2: u32) -> (bool, Branch, Option<Q>) {
    let cont = |t: Q| {
        if *d > t {
            (true, Branch::Continuous, Some(t))
        } else if *d == t {
            (true, Branch::Boundary, Some(t))
        } else {
            (false, Branch::Nonunitary, None)
        }
    };
    if a1 != 0 {
        return cont(q(2) + qr((a1 + a2) as i64, 2));
    }
    if a2 != 0 {
        let d2 = q(1) + qr(a2 as i64, 2);
        if *d == d2 {
            return (true, Branch::Isolated, Some(d2));
        }
        return cont(qr(3, 2) + qr(a2 as i64, 2));
    }
    if *d == half() {
        return (true, Branch::Isolated, Some(half()));
    }
    if d.is_zero() {
        return (true, Branch::Trivial, Some(q(0)));
    }
    cont(q(1))
}

fn criterion_1() -> Check {
    let mut cells = 0;
    for a1 in 0..=3 {
        for a2 in 0..=3 {
            for k in 0..=20 {
                let d = qr(k, 4);
                let v = classify(&sig3(d.clone(), a1, a2));
                let (unitary, branch, point) = theorem_n3(&d, a1, a2);
                // Nonunitary verdicts name the violated threshold; only unitary rows pin a point.
                let got_point = v.governing_point.as_ref().map(|g| g.value.clone()).filter(|_| v.unitary);
                ensure(v.unitary == unitary && v.branch == branch && got_point == point, || {
                    format!("a=({a1},{a2}) d={d}: got {:?} {:?}, theorem {:?} {:?}", v.branch, got_point, branch, point)
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells"))
}

fn criterion_2() -> Check {
    let cells: Vec<(u32, u32, i64)> =
        (0..=2).flat_map(|a1| (0..=2).flat_map(move |a2| (0..=16).map(move |k| (a1, a2, k)))).collect();
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(cells.len());
    let results: Vec<std::result::Result<bool, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let mine: Vec<_> = cells.iter().skip(t).step_by(threads).cloned().collect();
                scope.spawn(move || {
                    mine.into_iter()
                        .map(|(a1, a2, k)| {
                            let s = sig3(qr(k, 4), a1, a2);
                            let verdict = classify(&s);
                            let report = gram_psd_check(&s, GRAM_LEVEL).map_err(|e| e.to_string())?;
                            if report.psd != verdict.unitary {
                                return Err(format!("a=({a1},{a2}) d={}: gram psd={} classify={}", s.d, report.psd, verdict.unitary));
                            }
                            if let Some(w) = report.witness {
                                let norm = VermaModule::new(&s).unwrap().norm(&w.vector);
                                if !norm.is_negative() || norm != w.norm {
                                    return Err(format!("a=({a1},{a2}) d={}: witness norm {norm}", s.d));
                                }
                                return Ok(true);
                            }
                            Ok(false)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    let mut witnessed = 0;
    for r in results {
        witnessed += r? as usize;
    }
    Ok(format!("{} cells, {witnessed} nonunitary cells witnessed at level <= {GRAM_LEVEL}", cells.len()))
}

fn criterion_3() -> Check {
    let w = generate(3).map_err(|e| e.to_string())?;
    ensure(w.len() == 48, || format!("|W| = {}", w.len()))?;
    let mut seen = HashSet::new();
    for word in PRINTED_WORDS {
        let ks = parse_word(word).map_err(|e| e.to_string())?;
        let el = WeylElement::from_word(3, &ks).map_err(|e| e.to_string())?;
        ensure(el.length == ks.len(), || format!("{word} is not reduced"))?;
        ensure(seen.insert(el), || format!("{word} repeats an element"))?;
    }
    ensure(seen.len() == 48, || "printed list does not cover W".into())?;
    let e = |word: &[usize]| WeylElement::from_word(3, word).unwrap().is_identity();
    ensure(e(&[1, 2, 1, 2, 1, 2]) && e(&[2, 3, 2, 3, 2, 3, 2, 3]) && e(&[1, 1]) && e(&[2, 2]) && e(&[3, 3]), || "relations".into())?;
    ensure(WeylElement::from_word(3, &[1, 3]).unwrap() == WeylElement::from_word(3, &[3, 1]).unwrap(), || "s1s3 != s3s1".into())?;
    let max = w.iter().map(|x| x.length).max().unwrap();
    let longest = w.iter().filter(|x| x.length == max).count();
    ensure(max == 9 && longest == 1, || format!("longest length {max}, {longest} elements"))?;
    Ok("48 distinct reduced words, relations hold, longest length 9".into())
}

fn criterion_4() -> Check {
    let p = |m1, m2| UnitaryParams { m1, m2 };
    let lhs = unitary_character(UnitaryCase::D23, p(1, 1), D23_DEGREE).map_err(|e| e.to_string())?.series;
    let rhs = product_inverse(3, &[vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]], D23_DEGREE);
    ensure(lhs == rhs, || "d23 character differs from 1/((1-t3)(1-t2t3)(1-t1t2t3))".into())?;
    let num = unitary_bracket(UnitaryCase::D2EqD13, p(1, 1)).map_err(|e| e.to_string())?;
    let want = CharacterSeries::from_terms(3, num.maxdeg, [(vec![0, 0, 0], q(1)), (vec![1, 2, 3], q(-1))]);
    ensure(num == want, || format!("d2=d13 numerator {}", num.to_text()))?;
    let poly = |terms: &[[u32; 2]]| terms.iter().map(|e| (e.to_vec(), q(1))).collect::<Vec<_>>();
    for (m, terms) in [((2, 1), poly(&[[0, 0], [1, 0], [1, 1]])), ((1, 2), poly(&[[0, 0], [0, 1], [1, 1]]))] {
        let got = sl3_character(m.0, m.1).map_err(|e| e.to_string())?;
        let want = CharacterSeries::from_terms(2, got.maxdeg, terms);
        ensure(got == want, || format!("sl3 {m:?}: {}", got.to_text()))?;
    }
    for m1 in 1..=6u32 {
        for m2 in 1..=6u32 {
            let dim = sl3_character(m1, m2).map_err(|e| e.to_string())?.eval_at_one();
            let want = qr((m1 * m2 * (m1 + m2)) as i64, 2);
            ensure(dim == want, || format!("dim sl3({m1},{m2}) = {dim}"))?;
        }
    }
    Ok(format!("d23 closed form to degree {D23_DEGREE}, d2=d13 numerator, sl3 examples and dimensions"))
}

fn criterion_5() -> Check {
    let ch = verma_character(3, VERMA_DEGREE).map_err(|e| e.to_string())?.series;
    let mut checked = 0;
    for c1 in 0..=VERMA_DEGREE {
        for c2 in 0..=VERMA_DEGREE - c1 {
            for c3 in 0..=VERMA_DEGREE - c1 - c2 {
                let e = [c1, c2, c3];
                let want = q(partition_count(&e, 3) as i64);
                ensure(ch.coefficient(&e) == want, || format!("t^{e:?}: {} vs {want}", ch.coefficient(&e)))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} exponents up to degree {VERMA_DEGREE}"))
}

fn criterion_6() -> Check {
    let mut rows = 0;
    for id in PrintedId::PRINTED {
        for s in id.regime_samples() {
            ensure(verify_singular(id, &s).map_err(|e| e.to_string())?, || format!("{id} fails at {s}"))?;
            rows += 1;
        }
    }
    let points = [
        (sig3(q(3), 1, 1), RootVector::delta(3, 1)),
        (sig3(qr(5, 2), 0, 2), RootVector::plus(3, 1, 2)),
        (sig3(q(2), 0, 2), RootVector::delta(3, 2)),
        (sig3(q(1), 0, 0), RootVector::plus(3, 1, 3)),
        (sig3(half(), 0, 0), RootVector::plus(3, 2, 3)),
    ];
    for (s, beta) in &points {
        let space = find_singular(s, beta, 1).map_err(|e| e.to_string())?;
        ensure(space.len() == 1, || format!("{beta} at {s}: dimension {}", space.len()))?;
    }
    Ok(format!("{rows} regime samples verified, {} one-dimensional singular spaces", points.len()))
}

/// Roots of the printed norm 16(2d−a₂−3)(a₁²+2a₁+2d−a₂−2)a₂(a₂+1)(a₁+a₂+1)(a₁+a₂+2), read off its linear factors.
fn printed_norm_roots(a1: i64, a2: i64) -> Vec<Q> {
    let mut r = vec![qr(a2 + 3, 2), qr(a2 + 2 - a1 * a1 - 2 * a1, 2)];
    r.sort();
    r.dedup();
    r
}

fn printed_norm(a1: i64, a2: i64) -> UniPoly {
    let pre = q(16 * a2 * (a2 + 1) * (a1 + a2 + 1) * (a1 + a2 + 2));
    let (u0, v0) = (q(-a2 - 3), q(a1 * a1 + 2 * a1 - a2 - 2));
    // pre (2d + u0)(2d + v0)
    UniPoly::new(vec![&pre * &u0 * &v0, &pre * q(2) * (&u0 + &v0), &pre * q(4)])
}

fn criterion_7() -> Check {
    let ss = norm_polynomial_in_d(PrintedId::SubsingD13, &[0, 0], 4).map_err(|e| e.to_string())?;
    let cubic = UniPoly::new(vec![q(0), q(1), q(-3), q(2)]);
    ensure(ss.is_proportional_to(&cubic), || format!("subsingular norm {ss}"))?;
    let roots = ss.rational_roots().map_err(|e| e.to_string())?;
    ensure(roots == vec![q(0), half(), q(1)], || format!("subsingular zero set {roots:?}"))?;
    let mut summary = vec!["subsingular {0,1/2,1}".to_string()];
    for (a1, a2) in [(0i64, 2i64), (1, 1)] {
        let p = norm_polynomial_in_d(PrintedId::SvD12, &[a1 as u32, a2 as u32], 4).map_err(|e| e.to_string())?;
        let roots = p.rational_roots().map_err(|e| e.to_string())?;
        let want = printed_norm_roots(a1, a2);
        ensure(roots == want, || format!("a=({a1},{a2}): zero set {roots:?}, printed {want:?}"))?;
        ensure(p.is_proportional_to(&printed_norm(a1, a2)), || format!("a=({a1},{a2}): {p} vs printed"))?;
        summary.push(format!("a=({a1},{a2}) {{{}}}", roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")));
    }
    Ok(summary.join("; "))
}

fn random_sig(rng: &mut StdRng, n: usize) -> Signature {
    let d = qr(rng.gen_range(-40..=80), rng.gen_range(1..=12));
    Signature::new(n, d, (0..n - 1).map(|_| rng.gen_range(0..=5)).collect()).unwrap()
}

fn criterion_8() -> Check {
    let mut rng = StdRng::seed_from_u64(0x05b1);
    for _ in 0..IDENTITY_SAMPLES {
        let n = rng.gen_range(2..=6);
        let s = random_sig(&mut rng, n);
        for i in 1..=n {
            ensure(m_delta(&s, i) == q(2) * m_two_delta(&s, i), || format!("m_{i} != 2 m_{i}{i} at {s}"))?;
        }
    }
    for _ in 0..IDENTITY_SAMPLES {
        let n = rng.gen_range(2..=6);
        let s = random_sig(&mut rng, n);
        let bad = reduction_points(&s).ordering_violations();
        ensure(bad.is_empty(), || format!("orderings fail at {s}: {bad:?}"))?;
    }
    let mut identities = 0;
    for n in 2..=5usize {
        let points: Vec<PointId> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| PointId::Pair(i, j)))
            .chain((1..=n).map(PointId::Single))
            .collect();
        for point in points {
            for _ in 0..5 {
                let a: Vec<u32> = (0..n - 1).map(|_| rng.gen_range(0..=5)).collect();
                let base = Signature::new(n, q(0), a.clone()).unwrap();
                let d = reduction_points(&base).get(point).map_err(|e| e.to_string())?;
                let labels = dynkin_labels(&base.with_d(d));
                let m: Vec<i64> = a.iter().map(|&x| 1 + x as i64).collect();
                let want = mn_at_reduction(&m, point).map_err(|e| e.to_string())?;
                ensure(labels[n - 1] == q(want), || format!("{} at a={a:?}: m_n = {}, identity {want}", point.label(), labels[n - 1]))?;
                identities += 1;
            }
        }
    }
    let lam = weight_from_labels(&[q(1), q(0), q(1)]);
    let image = labels_of_weight(&dot_act(&WeylElement::simple(3, 3).unwrap(), &lam));
    ensure(image == vec![q(1), q(1), q(-1)], || format!("s3.(1,0,1) = {image:?}"))?;
    Ok(format!("{IDENTITY_SAMPLES}+{IDENTITY_SAMPLES} random signatures, {identities} m_n identities, dot example"))
}

fn criterion_9() -> Check {
    let orbit = |xs: [i64; 3]| multiplet_orbit(&weight_from_labels(&xs.map(q))).map_err(|e| e.to_string());
    let sizes: Vec<usize> = [[1, 1, 1], [1, 0, 1], [1, 1, 0]].into_iter().map(|l| orbit(l).map(|g| g.nodes.len())).collect::<Result<_, _>>()?;
    ensure(sizes == vec![48, 24, 24], || format!("orbit sizes {sizes:?}"))?;
    let a = orbit([1, 1, 1])?.to_dot();
    let b = orbit([1, 1, 1])?.to_dot();
    ensure(a == b, || "DOT output differs between runs".into())?;
    Ok("48/24/24 nodes, deterministic DOT".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("unitarity table n=3", criterion_1),
        ("gram cross-validation", criterion_2),
        ("weyl group B3", criterion_3),
        ("character identities", criterion_4),
        ("verma character oracle", criterion_5),
        ("printed-vector verification", criterion_6),
        ("norm polynomials", criterion_7),
        ("identity suite", criterion_8),
        ("multiplet graphs", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let limit = LIMITS[k];
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        println!(
            "criterion {}: {} {name} ({:.2}s, limit {}s): {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
