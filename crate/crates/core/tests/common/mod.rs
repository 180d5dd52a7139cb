#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfquiver::{parse_group, parse_ramification, GroupContext, Ramification, Rsr, DEFAULT_ORDER_CAP};

pub fn ctx(spec: &str) -> Arc<GroupContext> {
    let g = Arc::new(parse_group(spec, DEFAULT_ORDER_CAP).unwrap());
    Arc::new(GroupContext::with_default_prime(g).unwrap())
}

pub fn ram(ctx: &GroupContext, spec: &str) -> Ramification {
    parse_ramification(ctx.group(), spec).unwrap()
}

/// RSR from explicit per-class character lists, keyed by a class member.
pub fn rsr(ctx: &Arc<GroupContext>, ram_spec: &str, irreps: &[(&str, Vec<usize>)]) -> Rsr {
    let g = ctx.group();
    let map: BTreeMap<usize, Vec<usize>> =
        irreps.iter().map(|(c, v)| (g.class_of(g.parse_element(c).unwrap()), v.clone())).collect();
    Rsr::new(ctx.clone(), ram(ctx, ram_spec), &BTreeMap::new(), &map).unwrap()
}

/// Reorders the representations of every class by rotating the list `k` times.
pub fn rotate_slots(r: &Rsr, k: usize) -> Rsr {
    let irreps: BTreeMap<usize, Vec<usize>> = r
        .irreps()
        .into_iter()
        .map(|(c, mut v)| {
            let n = v.len();
            if n > 0 {
                v.rotate_left(k % n);
            }
            (c, v)
        })
        .collect();
    Rsr::new(r.context().clone(), r.ramification().clone(), &r.u(), &irreps).unwrap()
}

/// Ramifications with `r_C <= max_r` on at most `max_classes` classes.
pub fn small_ramifications(ctx: &GroupContext, max_r: u32, max_classes: usize) -> Vec<Ramification> {
    let k = ctx.group().classes().len();
    let mut out = vec![Ramification::zero()];
    for a in 0..k {
        for ra in 1..=max_r {
            out.push(Ramification::from_pairs([(a, ra)]));
            if max_classes >= 2 {
                for b in a + 1..k {
                    for rb in 1..=max_r {
                        out.push(Ramification::from_pairs([(a, ra), (b, rb)]));
                    }
                }
            }
        }
    }
    out
}
