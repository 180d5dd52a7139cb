mod common;

use std::collections::BTreeMap;

use hopfquiver::rsr::isomorphic_with;
use hopfquiver::{
    automorphisms, count_classes, enumerate_types, isomorphic, Error, IsoMode, IsoSearch, Ramification, Rsr, RsrType,
};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::{ctx, ram, rotate_slots, rsr, small_ramifications};

/// Multisets of characters with total degree `r`, listed one by one.
fn brute_multisets(degrees: &[u32], r: u32) -> usize {
    fn rec(degrees: &[u32], start: usize, left: u32) -> usize {
        if left == 0 {
            return 1;
        }
        (start..degrees.len()).filter(|&i| degrees[i] <= left).map(|i| rec(degrees, i, left - degrees[i])).sum()
    }
    rec(degrees, 0, r)
}

fn brute_count(c: &hopfquiver::GroupContext, ram: &Ramification) -> usize {
    ram.support().map(|(cl, r)| brute_multisets(&c.table(cl).degrees, r)).product()
}

#[test]
fn example_rsrs_validate() {
    let c = ctx("S3");
    let r = ram(&c, "e:2");
    let mk = |v: Vec<usize>| Rsr::new(c.clone(), r.clone(), &BTreeMap::new(), &BTreeMap::from([(0, v)]));
    assert!(mk(vec![2]).is_ok());
    assert!(mk(vec![0, 1]).is_ok());
    assert!(matches!(mk(vec![0]), Err(Error::DegreeSum { expected: 2, found: 1, .. })));
    let t = c.group().parse_element("(0 1)").unwrap();
    assert!(Rsr::new(c.clone(), r.clone(), &BTreeMap::from([(0, t)]), &BTreeMap::from([(0, vec![2])])).is_err());
}

#[test]
fn types_of_two_loops() {
    let c = ctx("S3");
    let t = |v: Vec<usize>| rsr(&c, "e:2", &[("e", v)]).rsr_type().unwrap().classes[0].1.clone();
    assert_eq!(t(vec![2]), [0, 0, 1]);
    assert_eq!(t(vec![0, 1]), t(vec![1, 0]));
    assert_eq!(t(vec![0, 1]), [1, 1, 0]);
    let zero = Rsr::new(c.clone(), Ramification::zero(), &BTreeMap::new(), &BTreeMap::new()).unwrap();
    assert_eq!(zero.rsr_type().unwrap(), RsrType::default());
}

#[test]
fn normalize_moves_u_and_translates_characters() {
    let c = ctx("S3");
    let g = c.group().clone();
    let u02 = g.parse_element("(0 2)").unwrap();
    let r =
        Rsr::new(c.clone(), ram(&c, "(0 1):1"), &BTreeMap::from([(1, u02)]), &BTreeMap::from([(1, vec![1])])).unwrap();
    let n = r.normalize_u().unwrap();
    assert_eq!(g.element_name(n.u()[&1]), "(0 1)");
    assert_eq!(n.irreps()[&1], [1]);
    assert_eq!(n.normalize_u().unwrap().rsr_type().unwrap(), n.rsr_type().unwrap());
    let on_u0 = rsr(&c, "e:2", &[("e", vec![2])]);
    assert_eq!(on_u0.normalize_u().unwrap().u(), on_u0.u());
}

#[test]
fn census_examples() {
    let c = ctx("S3");
    assert_eq!(count_classes(&c, &ram(&c, "e:2")), BigUint::from(4u32));
    assert_eq!(count_classes(&c, &ram(&c, "")), BigUint::from(1u32));
    assert_eq!(count_classes(&c, &ram(&c, "e:2,(0 1):1")), BigUint::from(8u32));
    assert_eq!(enumerate_types(&c, &ram(&c, "(0 1 2):1")).len(), 3);
    let m: Vec<Vec<u32>> = enumerate_types(&c, &ram(&c, "e:2")).into_iter().map(|t| t.classes[0].1.clone()).collect();
    assert_eq!(m, [vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]);
}

#[test]
fn dp_count_matches_brute_force_and_enumeration() {
    for spec in ["S3", "S4", "D4", "Q8"] {
        let c = ctx(spec);
        for r in small_ramifications(&c, 4, 1).into_iter().chain(small_ramifications(&c, 3, 2)) {
            let dp = count_classes(&c, &r);
            let types = enumerate_types(&c, &r);
            assert_eq!(dp, BigUint::from(brute_count(&c, &r)), "{spec} {}", r.to_spec(c.group()));
            assert_eq!(dp, BigUint::from(types.len()));
            let mut sorted = types.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), types.len());
        }
    }
}

#[test]
fn enumerated_types_are_realized() {
    for spec in ["S3", "D4"] {
        let c = ctx(spec);
        for r in small_ramifications(&c, 2, 2) {
            for t in enumerate_types(&c, &r) {
                let x = Rsr::from_type(c.clone(), &t).unwrap();
                assert_eq!(x.ramification(), &r);
                assert_eq!(x.rsr_type().unwrap(), t);
            }
        }
    }
}

#[test]
fn two_loop_isomorphisms() {
    let c = ctx("S3");
    let mk = |v: Vec<usize>| rsr(&c, "e:2", &[("e", v)]);
    for mode in [IsoMode::AssumeInner, IsoMode::SearchAut] {
        assert!(isomorphic(&mk(vec![0, 1]), &mk(vec![1, 0]), mode).unwrap());
        assert!(!isomorphic(&mk(vec![0, 0]), &mk(vec![1, 1]), mode).unwrap());
        assert!(isomorphic(&mk(vec![2]), &mk(vec![2]), mode).unwrap());
    }
}

#[test]
fn assume_inner_refused_with_outer_automorphisms() {
    let c = ctx("D4");
    let a = rsr(&c, "e:1", &[("e", vec![0])]);
    assert!(matches!(isomorphic(&a, &a, IsoMode::AssumeInner), Err(Error::ModeInapplicable(_))));
    assert!(isomorphic(&a, &a, IsoMode::SearchAut).unwrap());
}

#[test]
fn outer_automorphism_merges_types_on_d4() {
    // D4 has an outer automorphism swapping the two classes of reflections,
    // so RSRs on those classes with matching data are isomorphic but of different type.
    let c = ctx("D4");
    let g = c.group().clone();
    let refl: Vec<usize> =
        (0..g.classes().len()).filter(|&k| g.classes()[k].size() == 2 && g.classes()[k].element_order == 2).collect();
    assert_eq!(refl.len(), 2);
    let a = Rsr::from_type(c.clone(), &RsrType { classes: vec![(refl[0], vec![1, 0, 0, 0])] }).unwrap();
    let b = Rsr::from_type(c.clone(), &RsrType { classes: vec![(refl[1], vec![1, 0, 0, 0])] }).unwrap();
    assert_ne!(a.rsr_type().unwrap(), b.rsr_type().unwrap());
    assert!(isomorphic(&a, &b, IsoMode::SearchAut).unwrap());
}

#[test]
fn modes_agree_on_symmetric_groups() {
    for spec in ["S3", "S4"] {
        let c = ctx(spec);
        let search = IsoSearch::new(&c, &automorphisms(c.group(), 48).unwrap()).unwrap();
        for r in small_ramifications(&c, 2, 1) {
            let all: Vec<Rsr> = enumerate_types(&c, &r).iter().map(|t| Rsr::from_type(c.clone(), t).unwrap()).collect();
            for a in &all {
                for b in &all {
                    let x = isomorphic_with(a, b, IsoMode::AssumeInner, None).unwrap();
                    let y = isomorphic_with(a, b, IsoMode::SearchAut, Some(&search)).unwrap();
                    assert_eq!(x, y, "{spec} {}", r.to_spec(c.group()));
                }
            }
        }
    }
}

/// A random RSR: an enumerated type, twisted by random conjugators and with
/// its slots rotated.
fn random_rsr(spec: &str, ram_spec: &str, pick: usize, conj: &[usize], rot: usize) -> Rsr {
    let c = ctx(spec);
    let types = enumerate_types(&c, &ram(&c, ram_spec));
    let base = Rsr::from_type(c.clone(), &types[pick % types.len()]).unwrap();
    let n = c.group().order();
    let h: BTreeMap<usize, usize> =
        base.classes().iter().zip(conj.iter().cycle()).map(|(rc, &x)| (rc.class_index, x % n)).collect();
    rotate_slots(&base.twist(&h).unwrap(), rot)
}

fn setups() -> impl Strategy<Value = (&'static str, &'static str)> {
    prop::sample::select(vec![
        ("S3", "e:2"),
        ("S3", "(0 1):2"),
        ("S3", "(0 1 2):2,(0 1):1"),
        ("S4", "(0 1):2"),
        ("S4", "(0 1)(2 3):1,(0 1 2 3):1"),
        ("S4", "(0 1 2):2"),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn type_invariant_under_twist((spec, r) in setups(), pick in any::<usize>(),
                                  conj in prop::collection::vec(any::<usize>(), 2), h in any::<usize>(), rot in 0usize..3) {
        let x = random_rsr(spec, r, pick, &conj, rot);
        let n = x.group().order();
        let hmap: BTreeMap<usize, usize> = x.classes().iter().map(|rc| (rc.class_index, h % n)).collect();
        let y = x.twist(&hmap).unwrap();
        prop_assert_eq!(x.rsr_type().unwrap(), y.rsr_type().unwrap());
        prop_assert_eq!(x.normalize_u().unwrap().rsr_type().unwrap(), x.rsr_type().unwrap());
        prop_assert!(isomorphic(&x, &y, IsoMode::SearchAut).unwrap());
    }

    #[test]
    fn isomorphism_is_an_equivalence((spec, r) in setups(), picks in prop::collection::vec(any::<usize>(), 3),
                                     conj in prop::collection::vec(any::<usize>(), 3)) {
        let xs: Vec<Rsr> = (0..3).map(|i| random_rsr(spec, r, picks[i] % 3, &conj[i..], i)).collect();
        let search = IsoSearch::new(xs[0].context(), &automorphisms(xs[0].group(), 48).unwrap()).unwrap();
        let iso = |a: &Rsr, b: &Rsr| isomorphic_with(a, b, IsoMode::SearchAut, Some(&search)).unwrap();
        for a in &xs {
            prop_assert!(iso(a, a));
            for b in &xs {
                prop_assert_eq!(iso(a, b), iso(b, a));
                prop_assert_eq!(iso(a, b), a.rsr_type().unwrap() == b.rsr_type().unwrap());
                for c in &xs {
                    if iso(a, b) && iso(b, c) {
                        prop_assert!(iso(a, c));
                    }
                }
            }
        }
    }
}
