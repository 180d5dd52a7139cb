//! Automorphism groups by generator-image backtracking.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;

/// Default cap on `|G|` for the automorphism search.
pub const DEFAULT_AUT_CAP: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism {
    /// Images of `Group::generators()`, in order.
    pub generator_images: Vec<usize>,
    /// Full element map.
    pub map: Vec<usize>,
}

impl Automorphism {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }

    pub fn is_multiplicative(&self, g: &Group) -> bool {
        let n = g.order();
        (0..n).all(|a| (0..n).all(|b| self.map[g.mul(a, b)] == g.mul(self.map[a], self.map[b])))
    }
}

#[derive(Clone, Debug)]
pub struct AutGroup {
    pub elements: Vec<Automorphism>,
    /// `|Aut G| = |G / Z(G)|`.
    pub inner_only: bool,
}

/// Extends generator images to a full map, or `None` if the images do not
/// define a bijective homomorphism.
fn extend(g: &Group, images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let gens = g.generators();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let fy = g.mul(map[x], images[k]);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    (distinct.len() == n).then_some(map)
}

/// Conjugation automorphisms `x -> h^-1 x h`, deduplicated.
pub fn inner_automorphisms(g: &Group) -> Vec<Automorphism> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in 0..g.order() {
        let map: Vec<usize> = (0..g.order()).map(|x| g.conj(h, x)).collect();
        if seen.insert(map.clone()) {
            let generator_images = g.generators().iter().map(|&s| map[s]).collect();
            out.push(Automorphism { generator_images, map });
        }
    }
    out.sort();
    out
}

/// Full automorphism group for `|G| <= cap`. For a group requested as `Sn`
/// with `n != 6` the inner automorphisms are returned and the flag is set
/// without searching.
pub fn automorphisms(g: &Group, cap: usize) -> Result<AutGroup> {
    if g.order() > cap {
        return Err(Error::AutomorphismCap { order: g.order(), cap });
    }
    if matches!(g.symmetric_degree(), Some(n) if n != 6) {
        return Ok(AutGroup { elements: inner_automorphisms(g), inner_only: true });
    }
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let order = g.element_order(s);
            let size = g.classes()[g.class_of(s)].size();
            (0..g.order())
                .filter(|&t| g.element_order(t) == order && g.classes()[g.class_of(t)].size() == size)
                .collect()
        })
        .collect();
    let mut elements = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut images = vec![0usize; gens.len()];
    'outer: loop {
        for k in 0..gens.len() {
            images[k] = candidates[k][choice[k]];
        }
        if let Some(map) = extend(g, &images) {
            elements.push(Automorphism { generator_images: images.clone(), map });
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == gens.len() {
                break 'outer;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
    elements.sort();
    let inner_only = elements.len() == g.order() / g.center_order();
    Ok(AutGroup { elements, inner_only })
}

/// Whether `Aut G = Inn G` is known without search (named `Sn`, `n != 6`).
pub fn known_inner_only(g: &Group) -> bool {
    matches!(g.symmetric_degree(), Some(n) if n != 6)
}
