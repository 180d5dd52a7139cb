mod common;

use std::collections::BTreeMap;

use hopfquiver::{build_quiver, enumerate_types, transversal_iso, Error, HopfBimodule, Rsr, VerifyMode};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::{ctx, ram, rsr, small_ramifications};

#[test]
fn quiver_counts() {
    let c = ctx("S3");
    let q = build_quiver(&rsr(&c, "e:2", &[("e", vec![2])]));
    assert_eq!(q.arrow_count(), 12);
    assert!((0..q.arrow_count()).all(|a| q.source(a) == q.target(a)));
    let q = build_quiver(&rsr(&c, "(0 1):1", &[("(0 1)", vec![1])]));
    assert_eq!(q.arrow_count(), 18);
    let q = build_quiver(&rsr(&c, "", &[]));
    assert_eq!(q.arrow_count(), 0);
}

#[test]
fn quiver_arrows_between_vertices() {
    let c = ctx("S4");
    let g = c.group().clone();
    let x = rsr(&c, "(0 1):2,(0 1 2):1", &[("(0 1)", vec![0, 1]), ("(0 1 2)", vec![0])]);
    let q = build_quiver(&x);
    assert_eq!(q.out_degree(), 2 * 6 + 8);
    for s in 0..g.order() {
        for t in 0..g.order() {
            let want = x.ramification().get(g.class_of(g.mul(g.inv(s), t))) as usize;
            let between = q.arrows_between(s, t);
            assert_eq!(between.len(), want);
            for a in between {
                let id = q.arrow(a);
                assert_eq!((id.x, id.y), (s, t));
                assert_eq!(q.index_of(&id), Some(a));
            }
        }
    }
    assert_eq!(q.path_count(3), BigUint::from(24u64 * 20 * 20 * 20));
}

#[test]
fn left_action_shifts_vertices() {
    let c = ctx("S3");
    let m = HopfBimodule::build(&rsr(&c, "(0 1):1,e:2", &[("(0 1)", vec![1]), ("e", vec![0, 1])]), 0).unwrap();
    let q = m.quiver();
    let g = q.group();
    for h in 0..g.order() {
        for a in 0..m.arrow_count() {
            let (ia, ib) = (q.arrow(a), q.arrow(m.left(h, a)));
            assert_eq!((ib.x, ib.y), (g.mul(h, ia.x), g.mul(h, ia.y)));
            assert_eq!((ib.class_index, ib.i, ib.j), (ia.class_index, ia.i, ia.j));
        }
    }
}

#[test]
fn right_action_on_arrows_from_one_to_u() {
    let c = ctx("S3");
    let x = rsr(&c, "e:2", &[("e", vec![2])]);
    let m = HopfBimodule::build(&x, 4).unwrap();
    let q = m.quiver();
    let rho = &m.irreps()[0][0];
    for h in 0..6 {
        for j in 0..2 {
            let a = q.index_of(&hopfquiver::ArrowId { x: 0, y: 0, class_index: 0, i: 0, j }).unwrap();
            let mut want: Vec<(usize, u64)> = (0..2)
                .filter(|&s| rho.matrix(h)[(j, s)] != 0)
                .map(|s| {
                    (
                        q.index_of(&hopfquiver::ArrowId { x: h, y: h, class_index: 0, i: 0, j: s }).unwrap(),
                        rho.matrix(h)[(j, s)],
                    )
                })
                .collect();
            want.sort();
            assert_eq!(m.right(a, h), &want);
        }
    }
}

#[test]
fn sign_example_on_transpositions() {
    let c = ctx("S3");
    let g = c.group().clone();
    let p = c.prime().p;
    let m = HopfBimodule::build(&rsr(&c, "(0 1):1", &[("(0 1)", vec![1])]), 0).unwrap();
    let t = g.parse_element("(0 1)").unwrap();
    let a = m.quiver().arrows_between(0, t)[0];
    let b = m.quiver().arrows_between(t, 0)[0];
    assert_eq!(m.right(a, t), &vec![(b, p - 1)]);
}

#[test]
fn every_s3_representative_passes_exhaustively() {
    let c = ctx("S3");
    for r in small_ramifications(&c, 2, 2) {
        for t in enumerate_types(&c, &r) {
            let m = HopfBimodule::build(&Rsr::from_type(c.clone(), &t).unwrap(), 0).unwrap();
            let rep = m.verify(VerifyMode::Exhaustive);
            assert!(rep.passed(), "{}: {:?}", r.to_spec(c.group()), rep.first_failure());
            assert!(rep.exhaustive);
        }
    }
}

#[test]
fn zero_ramification_is_vacuous() {
    let c = ctx("S4");
    let m = HopfBimodule::build(&rsr(&c, "", &[]), 0).unwrap();
    assert_eq!(m.arrow_count(), 0);
    assert!(m.verify(VerifyMode::Exhaustive).passed());
}

#[test]
fn s4_sampled_pass() {
    let c = ctx("S4");
    let x = rsr(&c, "(0 1):2,(0 1 2 3):1", &[("(0 1)", vec![3, 1]), ("(0 1 2 3)", vec![2])]);
    let m = HopfBimodule::build(&x, 9).unwrap();
    let rep = m.verify(VerifyMode::Sampled { samples: 20_000, seed: 3 });
    assert!(rep.passed(), "{:?}", rep.first_failure());
    assert!(!rep.exhaustive);
}

#[test]
fn left_mutation_is_caught() {
    let c = ctx("S3");
    let mut m = HopfBimodule::build(&rsr(&c, "(0 1):1", &[("(0 1)", vec![0])]), 0).unwrap();
    let img = m.left(1, 0);
    m.perturb_left(1, 0, (img + 1) % m.arrow_count());
    assert!(!m.verify(VerifyMode::Exhaustive).passed());
}

fn s3_transposition_transversals() -> (Rsr, Vec<usize>, Vec<usize>) {
    let c = ctx("S3");
    let g = c.group().clone();
    let x = rsr(&c, "(0 1):2", &[("(0 1)", vec![0, 1])]);
    let t1 = c.class_ctx(1).transversal().to_vec();
    let z = g.parse_element("(0 1)").unwrap();
    let mut t2 = t1.clone();
    t2[1] = g.mul(z, t2[1]);
    (x, t1, t2)
}

#[test]
fn transversal_change_is_diagonal_and_verified() {
    let (x, t1, t2) = s3_transposition_transversals();
    let p = x.prime().p;
    let iso = transversal_iso(&x, &BTreeMap::from([(1, t1.clone())]), &BTreeMap::from([(1, t2)]), 0).unwrap();
    let rep = iso.verify();
    assert!(rep.passed(), "{:?}", rep.first_failure());
    assert!(!iso.map.is_identity());
    for (a, row) in iso.map.rows.iter().enumerate() {
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].0, a);
        assert!(row[0].1 == 1 || row[0].1 == p - 1);
    }
    let same = transversal_iso(&x, &BTreeMap::from([(1, t1.clone())]), &BTreeMap::from([(1, t1)]), 0).unwrap();
    assert!(same.map.is_identity());
}

#[test]
fn transversal_mismatch_rejected() {
    let (x, t1, _) = s3_transposition_transversals();
    let mut swapped = t1.clone();
    swapped.swap(1, 2);
    let r = transversal_iso(&x, &BTreeMap::from([(1, t1)]), &BTreeMap::from([(1, swapped)]), 0);
    assert!(matches!(r, Err(Error::CosetMismatch(_))));
}

#[test]
fn trivial_class_iso_is_identity() {
    let c = ctx("S3");
    let x = rsr(&c, "e:2", &[("e", vec![2])]);
    let iso = transversal_iso(&x, &BTreeMap::new(), &BTreeMap::new(), 0).unwrap();
    assert!(iso.map.is_identity());
    assert!(iso.verify().passed());
}

#[test]
fn iso_against_other_transversals_on_s4() {
    let c = ctx("S4");
    let g = c.group().clone();
    let x = rsr(&c, "(0 1 2):1", &[("(0 1 2)", vec![1])]);
    let ctx3 = c.class_ctx(g.class_of(g.parse_element("(0 1 2)").unwrap()));
    let t1 = ctx3.transversal().to_vec();
    let z = ctx3.centralizer().parent_indices();
    let t2: Vec<usize> = t1.iter().enumerate().map(|(k, &t)| g.mul(z[k % z.len()], t)).collect();
    let cls = ctx3.class_index();
    let iso = transversal_iso(&x, &BTreeMap::from([(cls, t1)]), &BTreeMap::from([(cls, t2)]), 0).unwrap();
    let rep = iso.verify();
    assert!(rep.passed(), "{:?}", rep.first_failure());
}

fn setups() -> impl Strategy<Value = (&'static str, &'static str)> {
    prop::sample::select(vec![
        ("S3", "(0 1):2"),
        ("S3", "e:2,(0 1 2):1"),
        ("Q8", "(0 1 3 6)(2 5 7 4):1"),
        ("D4", "e:2"),
    ])
}

fn some_rsr(spec: &str, r: &str, pick: usize) -> Rsr {
    let c = ctx(spec);
    let types = enumerate_types(&c, &ram(&c, r));
    Rsr::from_type(c.clone(), &types[pick % types.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn right_action_is_invertible_and_blockwise((spec, r) in setups(), pick in any::<usize>(), a in any::<usize>(), h in any::<usize>()) {
        let m = HopfBimodule::build(&some_rsr(spec, r, pick), 1).unwrap();
        let g = m.quiver().group().clone();
        let (a, h) = (a % m.arrow_count(), h % g.order());
        let back = m.right_vec(m.right(a, h), g.inv(h));
        prop_assert_eq!(back, vec![(a, 1)]);
        let ida = m.quiver().arrow(a);
        for &(b, _) in m.right(a, h) {
            let idb = m.quiver().arrow(b);
            prop_assert_eq!((idb.class_index, idb.i), (ida.class_index, ida.i));
            prop_assert_eq!((idb.x, idb.y), (g.mul(ida.x, h), g.mul(ida.y, h)));
        }
    }

    #[test]
    fn right_mutation_breaks_commutation((spec, r) in setups(), pick in any::<usize>(), a in any::<usize>(),
                                         h in any::<usize>(), t in any::<usize>(), delta in 1u64..5) {
        let mut m = HopfBimodule::build(&some_rsr(spec, r, pick), 1).unwrap();
        let n = m.quiver().group().order();
        let (a, h, t) = (a % m.arrow_count(), h % n, t % m.arrow_count());
        m.perturb_right(a, h, t, delta);
        let rep = m.verify(VerifyMode::Exhaustive);
        prop_assert!(!rep.get("bimodule-commutation").unwrap().passed());
    }
}
