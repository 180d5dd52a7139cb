use std::collections::BTreeSet;

use hopfquiver::{automorphisms, conjugacy_classes, parse_group, Group, Permutation, DEFAULT_ORDER_CAP};
use proptest::prelude::*;

fn group(spec: &str) -> Group {
    parse_group(spec, DEFAULT_ORDER_CAP).unwrap()
}

/// Classes found by conjugating with raw permutations, never the table.
fn brute_classes(g: &Group) -> BTreeSet<BTreeSet<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = BTreeSet::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let px = g.element(x);
        let mut class = BTreeSet::new();
        for h in g.elements() {
            let c = h.inverse().compose(px).compose(h);
            let i = g.index_of(&c).unwrap();
            seen[i] = true;
            class.insert(i);
        }
        out.insert(class);
    }
    out
}

#[test]
fn named_groups_have_expected_orders() {
    for (spec, order, classes) in [
        ("C1", 1, 1),
        ("C2", 2, 2),
        ("S3", 6, 3),
        ("S4", 24, 5),
        ("D4", 8, 5),
        ("Q8", 8, 5),
        ("A4", 12, 4),
        ("C6", 6, 6),
        ("S3xC2", 12, 6),
        ("S5", 120, 7),
    ] {
        let g = group(spec);
        assert_eq!(g.order(), order, "{spec}");
        assert_eq!(g.classes().len(), classes, "{spec}");
    }
}

#[test]
fn classes_match_brute_force() {
    for spec in ["S3", "S4", "D4", "Q8", "A4", "S3xC2", "perm:(0 1 2 3 4);(0 1)"] {
        let g = group(spec);
        let found: BTreeSet<BTreeSet<usize>> =
            g.classes().iter().map(|c| c.members.iter().copied().collect()).collect();
        assert_eq!(found, brute_classes(&g), "{spec}");
    }
}

#[test]
fn s4_class_sizes_and_s3_reps() {
    let s4 = group("S4");
    let sizes: Vec<usize> = s4.classes().iter().map(|c| c.size()).collect();
    assert_eq!(sizes, [1, 6, 3, 8, 6]);
    let s3 = group("S3");
    let reps: Vec<String> = s3.classes().iter().map(|c| s3.element_name(c.rep)).collect();
    assert_eq!(reps, ["e", "(0 1)", "(0 1 2)"]);
}

#[test]
fn elements_sorted_and_identity_first() {
    let g = group("S4");
    assert!(g.element(0).is_identity());
    assert!(g.elements().windows(2).all(|w| w[0].images() < w[1].images()));
}

#[test]
fn order_cap_enforced() {
    assert!(parse_group("S8", DEFAULT_ORDER_CAP).is_err());
    assert!(parse_group("S4", 10).is_err());
    assert!(parse_group("perm:(0 1", DEFAULT_ORDER_CAP).is_err());
}

#[test]
fn multiplication_table_is_associative() {
    for spec in ["S4", "D4", "Q8", "A4"] {
        let g = group(spec);
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn class_contexts_satisfy_coset_invariants() {
    for spec in ["S3", "S4", "D4", "Q8", "A4"] {
        let g = group(spec);
        let ctxs = conjugacy_classes(&g);
        assert_eq!(ctxs.iter().map(|c| c.size()).sum::<usize>(), g.order());
        for ctx in &ctxs {
            let z = ctx.centralizer();
            assert_eq!(z.order() * ctx.size(), g.order());
            assert_eq!(ctx.transversal()[0], g.identity());
            // right cosets Z g_theta partition G
            let mut hit = vec![0; g.order()];
            for &t in ctx.transversal() {
                for &zz in z.parent_indices() {
                    hit[g.mul(zz, t)] += 1;
                }
            }
            assert!(hit.iter().all(|&k| k == 1));
            for &c in ctx.members() {
                let theta = ctx.theta_of(c).unwrap();
                let t = ctx.transversal()[theta];
                assert_eq!(g.mul(g.mul(g.inv(t), ctx.rep()), t), c);
            }
        }
    }
}

#[test]
fn zeta_examples() {
    let g = group("S3");
    let ctx = &conjugacy_classes(&g)[1];
    assert_eq!(g.element_name(ctx.rep()), "(0 1)");
    for theta in 0..3 {
        assert_eq!(ctx.zeta_factor(&g, theta, 0).unwrap(), (0, theta));
    }
    for &h in ctx.centralizer().parent_indices() {
        assert_eq!(ctx.zeta_factor(&g, 0, h).unwrap(), (h, 0));
    }
    assert!(ctx.zeta_factor(&g, 0, 99).is_err());
}

#[test]
fn automorphism_counts() {
    let s3 = automorphisms(&group("S3"), 48).unwrap();
    assert_eq!(s3.elements.len(), 6);
    assert!(s3.inner_only);
    let v4 = automorphisms(&group("C2xC2"), 48).unwrap();
    assert_eq!(v4.elements.len(), 6);
    assert!(!v4.inner_only);
    let c1 = automorphisms(&group("C1"), 48).unwrap();
    assert_eq!(c1.elements.len(), 1);
    let d4 = automorphisms(&group("D4"), 48).unwrap();
    assert_eq!(d4.elements.len(), 8);
    assert!(!d4.inner_only);
    for a in &d4.elements {
        assert!(a.is_multiplicative(&group("D4")));
    }
    assert!(automorphisms(&group("S5"), 48).is_err());
}

#[test]
fn cycle_notation_round_trips() {
    let p = Permutation::parse_cycles("(0 2 1)(3 4)", 5).unwrap();
    assert_eq!(p.to_string(), "(0 2 1)(3 4)");
    assert_eq!(p.order(), 6);
    assert!(Permutation::parse_cycles("(0 0)", 3).is_err());
}

fn groups() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["S3", "S4", "D4", "Q8", "A4", "S3xC2"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeta_factors_and_composes(spec in groups(), class_seed in any::<usize>(), theta_seed in any::<usize>(),
                                 h1 in any::<usize>(), h2 in any::<usize>()) {
        let g = group(spec);
        let ctxs = conjugacy_classes(&g);
        let ctx = &ctxs[class_seed % ctxs.len()];
        let theta = theta_seed % ctx.transversal().len();
        let (h1, h2) = (h1 % g.order(), h2 % g.order());
        let t = ctx.transversal();
        let (z1, th1) = ctx.zeta_factor(&g, theta, h1).unwrap();
        prop_assert_eq!(g.mul(t[theta], h1), g.mul(z1, t[th1]));
        prop_assert!(ctx.centralizer().from_parent(z1).is_some());
        // cocycle: zeta_theta(h1 h2) = zeta_theta(h1) zeta_theta'(h2)
        let (z2, th2) = ctx.zeta_factor(&g, th1, h2).unwrap();
        let (z12, th12) = ctx.zeta_factor(&g, theta, g.mul(h1, h2)).unwrap();
        prop_assert_eq!(th12, th2);
        prop_assert_eq!(z12, g.mul(z1, z2));
    }

    #[test]
    fn inverses_and_orders(spec in groups(), x in any::<usize>()) {
        let g = group(spec);
        let x = x % g.order();
        prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        prop_assert_eq!(g.pow(x, g.element_order(x) as u64), 0);
        prop_assert_eq!(g.exponent() % g.element_order(x) as u64, 0);
    }
}
