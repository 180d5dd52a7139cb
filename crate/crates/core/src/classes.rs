//! Class contexts: a chosen class representative `u(C)`, its centralizer,
//! a right transversal `G = U Z g_theta`, and the factor map
//! `g_theta h = zeta_theta(h) g_theta'`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;

/// A subgroup carried as a standalone [`Group`] plus the embedding into its parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Arc<Group>,
    parent: Vec<usize>,
}

impl Subgroup {
    /// `members` must be sorted parent indices forming a subgroup.
    pub fn new(parent: &Group, members: Vec<usize>) -> Self {
        let elements = members.iter().map(|&i| parent.element(i).clone()).collect();
        let group = Group::from_sorted_elements(parent.degree(), elements);
        Subgroup { group: Arc::new(group), parent: members }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn to_parent(&self, i: usize) -> usize {
        self.parent[i]
    }

    /// Sub-index of a parent element, if it lies in the subgroup. Both
    /// orderings agree, so this is a binary search.
    #[inline]
    pub fn from_parent(&self, j: usize) -> Option<usize> {
        self.parent.binary_search(&j).ok()
    }

    pub fn parent_indices(&self) -> &[usize] {
        &self.parent
    }
}

/// Everything needed about one conjugacy class `C` with a fixed `u(C)`.
#[derive(Clone, Debug)]
pub struct ClassCtx {
    class_index: usize,
    rep: usize,
    members: Vec<usize>,
    centralizer: Arc<Subgroup>,
    transversal: Vec<usize>,
    coset_of: Vec<u32>,
    /// `theta -> g_theta^-1 u g_theta`.
    conj_of_theta: Vec<usize>,
    theta_of: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl ClassCtx {
    /// Default context: `u(C)` is the minimal class member and the transversal
    /// is built by scanning elements in canonical order, so `g_0 = 1`.
    pub fn new(g: &Group, class_index: usize) -> Self {
        let rep = g.classes()[class_index].rep;
        Self::with_rep(g, class_index, rep).expect("minimal member lies in its class")
    }

    /// Context for an arbitrary representative `u(C) = rep`.
    pub fn with_rep(g: &Group, class_index: usize, rep: usize) -> Result<Self> {
        let centralizer = Arc::new(Subgroup::new(g, g.centralizer(rep)));
        Self::with_rep_and_centralizer(g, class_index, rep, centralizer)
    }

    pub(crate) fn with_rep_and_centralizer(
        g: &Group,
        class_index: usize,
        rep: usize,
        centralizer: Arc<Subgroup>,
    ) -> Result<Self> {
        if g.class_of(rep) != class_index {
            return Err(Error::InvalidRsr(format!("u(C) = {} is not in class {class_index}", g.element_name(rep))));
        }
        let n = g.order();
        let mut covered = vec![false; n];
        let mut transversal = Vec::new();
        for x in 0..n {
            if covered[x] {
                continue;
            }
            for &z in centralizer.parent_indices() {
                covered[g.mul(z, x)] = true;
            }
            transversal.push(x);
        }
        Self::from_parts(g, class_index, rep, centralizer, transversal)
    }

    /// Context with an explicit transversal (any right coset representatives,
    /// one per coset, in any order). `g_0 = 1` is not required here.
    pub fn with_transversal(g: &Group, class_index: usize, rep: usize, transversal: Vec<usize>) -> Result<Self> {
        let centralizer = Arc::new(Subgroup::new(g, g.centralizer(rep)));
        if g.class_of(rep) != class_index {
            return Err(Error::InvalidRsr(format!("u(C) = {} is not in class {class_index}", g.element_name(rep))));
        }
        Self::from_parts(g, class_index, rep, centralizer, transversal)
    }

    fn from_parts(
        g: &Group,
        class_index: usize,
        rep: usize,
        centralizer: Arc<Subgroup>,
        transversal: Vec<usize>,
    ) -> Result<Self> {
        let n = g.order();
        let members = g.classes()[class_index].members.clone();
        if transversal.len() * centralizer.order() != n {
            return Err(Error::CosetMismatch(format!(
                "{} representatives for {} cosets",
                transversal.len(),
                n / centralizer.order()
            )));
        }
        let mut coset_of = vec![NONE; n];
        for (theta, &t) in transversal.iter().enumerate() {
            if t >= n {
                return Err(Error::NotInGroup(format!("index {t}")));
            }
            for &z in centralizer.parent_indices() {
                let x = g.mul(z, t);
                if coset_of[x] != NONE {
                    return Err(Error::CosetMismatch(format!(
                        "{} and another representative share a coset",
                        g.element_name(t)
                    )));
                }
                coset_of[x] = theta as u32;
            }
        }
        let conj_of_theta: Vec<usize> = transversal.iter().map(|&t| g.conj(t, rep)).collect();
        let mut theta_of = vec![NONE; n];
        for (theta, &c) in conj_of_theta.iter().enumerate() {
            theta_of[c] = theta as u32;
        }
        Ok(ClassCtx { class_index, rep, members, centralizer, transversal, coset_of, conj_of_theta, theta_of })
    }

    pub fn class_index(&self) -> usize {
        self.class_index
    }

    /// `u(C)`.
    pub fn rep(&self) -> usize {
        self.rep
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn centralizer(&self) -> &Arc<Subgroup> {
        &self.centralizer
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// Index of the right coset `Z g_theta` containing `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    /// `g_theta^-1 u(C) g_theta`.
    pub fn member_of_theta(&self, theta: usize) -> usize {
        self.conj_of_theta[theta]
    }

    /// The `theta` with `g_theta^-1 u(C) g_theta = c`, if `c` is in the class.
    pub fn theta_of(&self, c: usize) -> Option<usize> {
        match self.theta_of.get(c) {
            Some(&t) if t != NONE => Some(t as usize),
            _ => None,
        }
    }

    /// Factor map: returns `(zeta, theta')` with `g_theta h = zeta g_theta'`
    /// and `zeta` in the centralizer (as a parent element index).
    pub fn zeta(&self, g: &Group, theta: usize, h: usize) -> (usize, usize) {
        let q = g.mul(self.transversal[theta], h);
        let theta2 = self.coset_of(q);
        let zeta = g.mul(q, g.inv(self.transversal[theta2]));
        (zeta, theta2)
    }

    /// Checked version of [`ClassCtx::zeta`].
    pub fn zeta_factor(&self, g: &Group, theta: usize, h: usize) -> Result<(usize, usize)> {
        if h >= g.order() {
            return Err(Error::NotInGroup(format!("element index {h}")));
        }
        if theta >= self.transversal.len() {
            return Err(Error::InvalidRsr(format!("theta {theta} out of range")));
        }
        Ok(self.zeta(g, theta, h))
    }
}

/// Class contexts for every conjugacy class with the default representatives.
pub fn conjugacy_classes(g: &Group) -> Vec<ClassCtx> {
    (0..g.classes().len()).map(|c| ClassCtx::new(g, c)).collect()
}
