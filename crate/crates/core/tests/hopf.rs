mod common;

use hopfquiver::{
    build_quiver, enumerate_types, rsr_nichols_dims, type_one_dims, HopfBimodule, NicholsLimits, Rsr, TruncatedHopf,
};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::{ctx, ram, rsr};

#[test]
fn s3_loops_pass_exhaustively_to_degree_three() {
    let c = ctx("S3");
    for v in [vec![2], vec![0, 1]] {
        let h = TruncatedHopf::from_rsr(&rsr(&c, "e:2", &[("e", v.clone())]), 3, 0).unwrap();
        let rep = h.verify(0, None);
        assert!(rep.passed(), "{v:?}: {:?}", rep.first_failure());
        assert!(rep.exhaustive);
        assert!(h.verify_skew_primitive().passed());
    }
}

#[test]
fn zero_ramification_is_the_group_algebra() {
    let c = ctx("S4");
    let h = TruncatedHopf::from_rsr(&rsr(&c, "", &[]), 3, 0).unwrap();
    assert_eq!(h.basis_len(), 24);
    assert_eq!((1..=3).map(|d| h.degree_dim(d)).sum::<usize>(), 0);
    let g = h.group().clone();
    for x in 0..24 {
        assert_eq!(h.antipode(h.encode(x, &[])), &vec![(h.encode(g.inv(x), &[]), 1)]);
    }
    assert!(h.verify(0, None).passed());
}

#[test]
fn degree_dims_count_paths() {
    let c = ctx("S3");
    let x = rsr(&c, "(0 1):1,e:1", &[("(0 1)", vec![1]), ("e", vec![0])]);
    let q = build_quiver(&x);
    let h = TruncatedHopf::from_rsr(&x, 4, 0).unwrap();
    for d in 0..=4 {
        assert_eq!(h.degree_dim(d), 6 * 4usize.pow(d as u32));
        assert_eq!(BigUint::from(h.degree_dim(d)), q.path_count(d as u32));
    }
    for idx in 0..h.basis_len() {
        let (x, labels) = h.decode(idx);
        assert_eq!(h.encode(x, &labels), idx);
        assert_eq!(h.degree_of(idx), labels.len());
    }
}

#[test]
fn low_degree_products_match_the_bimodule() {
    let c = ctx("S3");
    let x = rsr(&c, "(0 1):1,(0 1 2):1", &[("(0 1)", vec![1]), ("(0 1 2)", vec![2])]);
    let m = HopfBimodule::build(&x, 0).unwrap();
    let h = TruncatedHopf::new(m.clone(), 2).unwrap();
    let g = h.group().clone();
    let k = m.quiver().out_degree();
    let as_element = |b: usize| h.encode(b / k, &[b % k]);
    for a in 0..g.order() {
        for b in 0..g.order() {
            assert_eq!(h.product(h.encode(a, &[]), h.encode(b, &[])).unwrap(), vec![(h.encode(g.mul(a, b), &[]), 1)]);
        }
    }
    for l in 0..k {
        for y in 0..g.order() {
            let mut want: Vec<(usize, u64)> = m.right(l, y).iter().map(|&(b, c)| (as_element(b), c)).collect();
            want.sort();
            assert_eq!(h.product(h.encode(0, &[l]), h.encode(y, &[])).unwrap(), want);
            assert_eq!(h.product(h.encode(y, &[]), h.encode(0, &[l])).unwrap(), vec![(as_element(m.left(y, l)), 1)]);
        }
    }
}

#[test]
fn arrows_are_skew_primitive_everywhere() {
    let c = ctx("S3");
    let x = rsr(&c, "(0 1):1", &[("(0 1)", vec![1])]);
    let m = HopfBimodule::build(&x, 0).unwrap();
    let h = TruncatedHopf::new(m.clone(), 3).unwrap();
    let g = h.group().clone();
    let p = h.field().p();
    assert!(h.verify_skew_primitive().passed());
    for l in 0..m.quiver().out_degree() {
        let t = m.quiver().target(l);
        for x in 0..g.order() {
            // Delta(x a) = (x (x) x)(t(a) (x) a + a (x) 1)
            let xa = h.encode(x, &[l]);
            let want = hopfquiver::tensor_hopf::Tensor2::from([
                ((h.encode(g.mul(x, t), &[]), xa), 1),
                ((xa, h.encode(x, &[])), 1),
            ]);
            assert_eq!(h.coproduct(xa), &want);
        }
        // S(a) = -t(a)^-1 a
        assert_eq!(h.antipode(h.encode(0, &[l])), &vec![(h.encode(g.inv(t), &[l]), p - 1)]);
    }
}

#[test]
fn product_mutation_breaks_multiplicativity() {
    let c = ctx("S3");
    let mut h = TruncatedHopf::from_rsr(&rsr(&c, "(0 1):1", &[("(0 1)", vec![1])]), 2, 0).unwrap();
    let a = h.encode(0, &[0]);
    let b = h.encode(1, &[]);
    let target = h.encode(2, &[1]);
    h.perturb_product(a, b, target, 1).unwrap();
    let rep = h.verify(0, None);
    assert!(!rep.passed());
    assert!(!rep.get("coproduct-multiplicative").unwrap().passed());
}

#[test]
fn type_one_examples() {
    let lim = NicholsLimits::default();
    let c2 = ctx("C2");
    let sgn = rsr(&c2, "(0 1):1", &[("(0 1)", vec![1])]);
    assert_eq!(type_one_dims(&sgn, 2, 3, &lim, 0).unwrap().dims, [2, 2, 0]);
    let zero = rsr(&c2, "", &[]);
    assert_eq!(type_one_dims(&zero, 2, 3, &lim, 0).unwrap().dims, [2, 0, 0]);
    let c = ctx("S3");
    let x = rsr(&c, "(0 1):1", &[("(0 1)", vec![1])]);
    let d = type_one_dims(&x, 5, 3, &lim, 0).unwrap();
    assert_eq!(d.dims, [6, 18, 24, 18, 6, 0]);
    assert!(d.agreed);
}

fn setups() -> impl Strategy<Value = (&'static str, &'static str)> {
    prop::sample::select(vec![("S3", "e:1"), ("S3", "(0 1):1"), ("S3", "(0 1 2):1"), ("C2", "(0 1):2"), ("Q8", "e:1")])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn sampled_axioms_and_type_one((spec, r) in setups(), pick in any::<usize>(), seed in any::<u64>()) {
        let c = ctx(spec);
        let types = enumerate_types(&c, &ram(&c, r));
        let x = Rsr::from_type(c.clone(), &types[pick % types.len()]).unwrap();
        let h = TruncatedHopf::from_rsr(&x, 2, seed).unwrap();
        let rep = h.verify(seed, Some(500));
        prop_assert!(rep.passed(), "{:?}", rep.first_failure());
        prop_assert!(h.verify_skew_primitive().passed());
        let lim = NicholsLimits::default();
        let t = type_one_dims(&x, 3, 1, &lim, seed).unwrap();
        let n = rsr_nichols_dims(&x, 3, 1, &lim, seed).unwrap();
        let order = c.group().order() as u64;
        prop_assert_eq!(t.dims, n.dims.iter().map(|d| d * order).collect::<Vec<_>>());
    }
}
