//! The kG-Hopf bimodule spanned by the arrows of a Hopf quiver.
//!
//! The left action moves arrows rigidly, `g . a_{y,x} = a_{gy,gx}`. The right
//! action mixes the basis vectors of one slot through the factor map:
//! `a^{(i,j)}_{y,x} . h = sum_s rho_i(zeta_theta(h))_{j,s} a^{(i,s)}_{yh,xh}`
//! where `theta` indexes `x^-1 y`. Both actions are stored as explicit tables
//! so that the verifier checks exactly what downstream code uses.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::classes::ClassCtx;
use crate::error::{Error, Result};
use crate::field::{sparse_axpy, Fp, Matrix, SparseVec};
use crate::irrep::{irrep_from_table, Irrep};
use crate::quiver::{build_quiver, HopfQuiver};
use crate::report::Report;
use crate::rsr::Rsr;

/// Triples `(g, a, h)` up to which verification is exhaustive.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
/// Sampled triples when above the limit.
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled {
        samples: u64,
        seed: u64,
    },
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`] triples, else [`DEFAULT_SAMPLES`] seeded samples.
    Auto {
        seed: u64,
    },
}

#[derive(Clone, Debug)]
pub struct HopfBimodule {
    quiver: HopfQuiver,
    p: u64,
    contexts: Vec<ClassCtx>,
    irreps: Vec<Vec<Irrep>>,
    /// `left[g * arrows + a] = g . a`.
    left: Vec<u32>,
    /// `right[a * |G| + h] = a . h`.
    right: Vec<SparseVec>,
}

impl HopfBimodule {
    /// Bimodule of an RSR with its default transversals; `seed` fixes the
    /// irreducible matrix representations.
    pub fn build(rsr: &Rsr, seed: u64) -> Result<Self> {
        Self::build_with_transversals(rsr, &BTreeMap::new(), seed)
    }

    /// As [`HopfBimodule::build`], with explicit transversals for some classes.
    pub fn build_with_transversals(rsr: &Rsr, transversals: &BTreeMap<usize, Vec<usize>>, seed: u64) -> Result<Self> {
        let g = rsr.group().clone();
        for &c in transversals.keys() {
            if rsr.class(c).is_none() {
                return Err(Error::InvalidRsr(format!("transversal given for unramified class {c}")));
            }
        }
        let quiver = build_quiver(rsr);
        let mut contexts = Vec::new();
        let mut irreps = Vec::new();
        for rc in rsr.classes() {
            let ctx = match transversals.get(&rc.class_index) {
                Some(t) => ClassCtx::with_transversal(&g, rc.class_index, rc.ctx.rep(), t.clone())?,
                None => rc.ctx.clone(),
            };
            let z = ctx.centralizer().group().clone();
            let reps =
                rc.irreps.iter().map(|&chi| irrep_from_table(&z, &rc.table, chi, seed)).collect::<Result<Vec<_>>>()?;
            contexts.push(ctx);
            irreps.push(reps);
        }
        let mut m = HopfBimodule { quiver, p: rsr.prime().p, contexts, irreps, left: Vec::new(), right: Vec::new() };
        m.fill_tables();
        Ok(m)
    }

    fn fill_tables(&mut self) {
        let g = self.quiver.group().clone();
        let n = g.order();
        let arrows = self.quiver.arrow_count();
        let out = self.quiver.out_degree();
        let mut left = vec![0u32; n * arrows];
        for gi in 0..n {
            for a in 0..arrows {
                let x = a / out;
                left[gi * arrows + a] = (g.mul(gi, x) * out + a % out) as u32;
            }
        }
        let mut right = Vec::with_capacity(arrows * n);
        for a in 0..arrows {
            for h in 0..n {
                right.push(self.compute_right(a, h));
            }
        }
        self.left = left;
        self.right = right;
    }

    fn compute_right(&self, a: usize, h: usize) -> SparseVec {
        let g = self.quiver.group();
        let out = self.quiver.out_degree();
        let x = a / out;
        let l = *self.quiver.local(a % out);
        let qc = &self.quiver.classes()[l.slot_class];
        let ctx = &self.contexts[l.slot_class];
        let c = qc.members[l.position];
        let theta = ctx.theta_of(c).expect("arrow label lies in its class");
        let (zeta, theta2) = ctx.zeta(g, theta, h);
        let c2 = ctx.member_of_theta(theta2);
        let (_, q2) = self.quiver.position_of(c2).expect("conjugate stays in the class");
        let rho = &self.irreps[l.slot_class][l.i];
        let zi = ctx.centralizer().from_parent(zeta).expect("zeta lies in the centralizer");
        let mat = rho.matrix(zi);
        let base = l.k - l.j;
        let x2 = g.mul(x, h);
        (0..rho.degree)
            .filter(|&s| mat[(l.j, s)] != 0)
            .map(|s| (x2 * out + self.quiver.local_index(l.slot_class, q2, base + s), mat[(l.j, s)]))
            .collect()
    }

    pub fn quiver(&self) -> &HopfQuiver {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    /// Class contexts (choice of `u(C)` and transversal), one per ramified class.
    pub fn contexts(&self) -> &[ClassCtx] {
        &self.contexts
    }

    /// Representation matrices per ramified class and slot.
    pub fn irreps(&self) -> &[Vec<Irrep>] {
        &self.irreps
    }

    #[inline]
    pub fn left(&self, g: usize, a: usize) -> usize {
        self.left[g * self.arrow_count() + a] as usize
    }

    #[inline]
    pub fn right(&self, a: usize, h: usize) -> &SparseVec {
        &self.right[a * self.quiver.group().order() + h]
    }

    /// `delta^-(a)`: the target vertex.
    pub fn coact_left(&self, a: usize) -> usize {
        self.quiver.target(a)
    }

    /// `delta^+(a)`: the source vertex.
    pub fn coact_right(&self, a: usize) -> usize {
        self.quiver.source(a)
    }

    pub fn left_vec(&self, g: usize, v: &[(usize, u64)]) -> SparseVec {
        let mut out: SparseVec = v.iter().map(|&(a, c)| (self.left(g, a), c)).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    pub fn right_vec(&self, v: &[(usize, u64)], h: usize) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for &(a, c) in v {
            sparse_axpy(f, &mut out, c, self.right(a, h));
        }
        out
    }

    /// The block `rho_i(zeta_theta(h))` with the new coset index, for a
    /// ramified class slot.
    pub fn zeta_block(&self, slot_class: usize, i: usize, theta: usize, h: usize) -> (Matrix, usize) {
        let g = self.quiver.group();
        let ctx = &self.contexts[slot_class];
        let (zeta, theta2) = ctx.zeta(g, theta, h);
        let zi = ctx.centralizer().from_parent(zeta).expect("zeta lies in the centralizer");
        (self.irreps[slot_class][i].matrix(zi).clone(), theta2)
    }

    /// Adds `delta` to the coefficient of `target` in `a . h`.
    pub fn perturb_right(&mut self, a: usize, h: usize, target: usize, delta: u64) {
        let f = self.field();
        let idx = a * self.quiver.group().order() + h;
        sparse_axpy(f, &mut self.right[idx], delta, &[(target, 1)]);
    }

    /// Overwrites `g . a`.
    pub fn perturb_left(&mut self, g: usize, a: usize, image: usize) {
        let n = self.arrow_count();
        self.left[g * n + a] = image as u32;
    }

    pub fn verify(&self, mode: VerifyMode) -> Report {
        let g = self.quiver.group().clone();
        let n = g.order();
        let arrows = self.arrow_count();
        let triples = (n as u64) * (n as u64) * arrows as u64;
        let (exhaustive, samples, seed) = match mode {
            VerifyMode::Exhaustive => (true, 0, None),
            VerifyMode::Sampled { samples, seed } => (false, samples, Some(seed)),
            VerifyMode::Auto { seed } if triples <= EXHAUSTIVE_LIMIT => {
                let _ = seed;
                (true, 0, None)
            }
            VerifyMode::Auto { seed } => (false, DEFAULT_SAMPLES, Some(seed)),
        };
        let mut report = Report::new(exhaustive, seed);
        let name = |a: usize| self.describe(a);
        let e = |a: usize| -> SparseVec { vec![(a, 1)] };

        let unit = report.check("unit");
        for a in 0..arrows {
            unit.record(self.left(0, a) == a, || format!("1 . {} != itself", name(a)));
            unit.record(*self.right(a, 0) == e(a), || format!("{} . 1 != itself", name(a)));
        }

        let perm = report.check("left-action-permutation");
        for gi in 0..n {
            let mut seen = vec![false; arrows];
            for a in 0..arrows {
                let b = self.left(gi, a);
                let ok = b < arrows
                    && !seen[b]
                    && self.quiver.source(b) == g.mul(gi, self.quiver.source(a))
                    && self.quiver.target(b) == g.mul(gi, self.quiver.target(a))
                    && b % self.quiver.out_degree() == a % self.quiver.out_degree();
                if b < arrows {
                    seen[b] = true;
                }
                perm.record(ok, || format!("{} . {} is not a relabeled arrow", g.element_name(gi), name(a)));
            }
        }

        let block = report.check("right-block-structure");
        let out = self.quiver.out_degree();
        for a in 0..arrows {
            let la = *self.quiver.local(a % out);
            for h in 0..n {
                let ok = self.right(a, h).iter().all(|&(b, _)| {
                    let lb = self.quiver.local(b % out);
                    b < arrows
                        && lb.slot_class == la.slot_class
                        && lb.i == la.i
                        && self.quiver.source(b) == g.mul(self.quiver.source(a), h)
                        && self.quiver.target(b) == g.mul(self.quiver.target(a), h)
                }) && !self.right(a, h).is_empty();
                block.record(ok, || format!("{} . {} leaves its block", name(a), g.element_name(h)));
            }
        }

        let inv = report.check("right-invertibility");
        for a in 0..arrows {
            for h in 0..n {
                let back = self.right_vec(self.right(a, h), g.inv(h));
                inv.record(back == e(a), || {
                    format!("({} . {}) . {}^-1 != {}", name(a), g.element_name(h), g.element_name(h), name(a))
                });
            }
        }

        let mut triple_list: Vec<(usize, usize, usize)> = Vec::new();
        if arrows > 0 {
            if exhaustive {
                for gi in 0..n {
                    for a in 0..arrows {
                        for h in 0..n {
                            triple_list.push((gi, a, h));
                        }
                    }
                }
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
                for _ in 0..samples {
                    let gi = (rng.next_u64() % n as u64) as usize;
                    let a = (rng.next_u64() % arrows as u64) as usize;
                    let h = (rng.next_u64() % n as u64) as usize;
                    triple_list.push((gi, a, h));
                }
            }
        }
        let triple_name = |gi: usize, a: usize, h: usize| {
            format!("g = {}, a = {}, h = {}", g.element_name(gi), name(a), g.element_name(h))
        };

        let la = report.check("left-associativity");
        for &(gi, a, h) in &triple_list {
            let ok = self.left(g.mul(gi, h), a) == self.left(gi, self.left(h, a));
            la.record(ok, || triple_name(gi, a, h));
        }
        let ra = report.check("right-associativity");
        for &(gi, a, h) in &triple_list {
            let lhs = self.right(a, g.mul(gi, h)).clone();
            let rhs = self.right_vec(self.right(a, gi), h);
            ra.record(lhs == rhs, || triple_name(gi, a, h));
        }
        let com = report.check("bimodule-commutation");
        for &(gi, a, h) in &triple_list {
            let lhs = self.right(self.left(gi, a), h).clone();
            let rhs = self.left_vec(gi, self.right(a, h));
            com.record(lhs == rhs, || triple_name(gi, a, h));
        }
        let co = report.check("coaction-compatibility");
        for &(gi, a, h) in &triple_list {
            let x = g.mul(g.mul(gi, self.coact_right(a)), h);
            let y = g.mul(g.mul(gi, self.coact_left(a)), h);
            let v = self.right(self.left(gi, a), h);
            let ok = v.iter().all(|&(b, _)| self.coact_right(b) == x && self.coact_left(b) == y);
            co.record(ok, || triple_name(gi, a, h));
        }
        report
    }

    pub fn describe(&self, a: usize) -> String {
        if a >= self.arrow_count() {
            return format!("arrow #{a}");
        }
        let id = self.quiver.arrow(a);
        let g = self.quiver.group();
        format!("a^({},{})_[{},{}] in class {}", id.i, id.j, g.element_name(id.y), g.element_name(id.x), id.class_index)
    }
}

/// Bimodule of an RSR with default transversals.
pub fn build_bimodule(rsr: &Rsr, seed: u64) -> Result<HopfBimodule> {
    HopfBimodule::build(rsr, seed)
}

/// A linear map between arrow spans: `rows[a]` is the image of arrow `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap {
    pub p: u64,
    pub rows: Vec<SparseVec>,
}

impl BimoduleMap {
    pub fn apply(&self, v: &[(usize, u64)]) -> SparseVec {
        let f = Fp::new(self.p);
        let mut out = SparseVec::new();
        for &(a, c) in v {
            sparse_axpy(f, &mut out, c, &self.rows[a]);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(a, r)| r.as_slice() == [(a, 1)])
    }

    /// Checks that the map intertwines both actions and both coactions and is
    /// invertible on every block of parallel arrows.
    pub fn verify(&self, source: &HopfBimodule, target: &HopfBimodule) -> Report {
        let mut report = Report::new(true, None);
        let g = source.quiver().group().clone();
        let n = g.order();
        let arrows = source.arrow_count();
        let shape = report.check("shape");
        shape.record(
            self.rows.len() == arrows && target.arrow_count() == arrows && **target.quiver().group() == *g,
            || String::from("source and target have different arrow sets"),
        );
        if !report.passed() {
            return report;
        }
        let li = report.check("left-intertwining");
        for gi in 0..n {
            for a in 0..arrows {
                let lhs = self.rows[source.left(gi, a)].clone();
                let rhs = target.left_vec(gi, &self.rows[a]);
                li.record(lhs == rhs, || format!("g = {}, {}", g.element_name(gi), source.describe(a)));
            }
        }
        let ri = report.check("right-intertwining");
        for a in 0..arrows {
            for h in 0..n {
                let lhs = self.apply(source.right(a, h));
                let rhs = target.right_vec(&self.rows[a], h);
                ri.record(lhs == rhs, || format!("{}, h = {}", source.describe(a), g.element_name(h)));
            }
        }
        let co = report.check("coaction-preservation");
        for a in 0..arrows {
            let ok = self.rows[a].iter().all(|&(b, _)| {
                target.coact_left(b) == source.coact_left(a) && target.coact_right(b) == source.coact_right(a)
            });
            co.record(ok, || source.describe(a));
        }
        let bij = report.check("bijectivity");
        let f = Fp::new(self.p);
        let mut done = vec![false; arrows];
        for a in 0..arrows {
            if done[a] {
                continue;
            }
            let block = source.quiver().arrows_between(source.coact_right(a), source.coact_left(a));
            let mut m = Matrix::zeros(block.len(), block.len());
            let mut closed = true;
            for (r, &b) in block.iter().enumerate() {
                done[b] = true;
                for &(t, c) in &self.rows[b] {
                    match block.iter().position(|&x| x == t) {
                        Some(col) => m[(r, col)] = c,
                        None => closed = false,
                    }
                }
            }
            bij.record(closed && m.rank(f) == block.len(), || format!("block of {} is singular", source.describe(a)));
        }
        report
    }
}

/// The two bimodules built from different transversals and the isomorphism
/// between them.
#[derive(Clone, Debug)]
pub struct TransversalIso {
    pub source: HopfBimodule,
    pub target: HopfBimodule,
    pub map: BimoduleMap,
}

impl TransversalIso {
    pub fn verify(&self) -> Report {
        self.map.verify(&self.source, &self.target)
    }
}

/// Isomorphism `a^{(i,j)} -> sum_s rho_i(g_theta h_theta^-1)_{j,s} a^{(i,s)}`
/// from the bimodule built on transversals `t1` to the one on `t2`. Both must
/// list the cosets in the same order; unlisted classes use the default.
pub fn transversal_iso(
    rsr: &Rsr,
    t1: &BTreeMap<usize, Vec<usize>>,
    t2: &BTreeMap<usize, Vec<usize>>,
    seed: u64,
) -> Result<TransversalIso> {
    let source = HopfBimodule::build_with_transversals(rsr, t1, seed)?;
    let target = HopfBimodule::build_with_transversals(rsr, t2, seed)?;
    let g = rsr.group().clone();
    for (c1, c2) in source.contexts.iter().zip(&target.contexts) {
        let z = c1.centralizer();
        for (theta, (&a, &b)) in c1.transversal().iter().zip(c2.transversal()).enumerate() {
            if z.from_parent(g.mul(a, g.inv(b))).is_none() {
                return Err(Error::CosetMismatch(format!(
                    "class {}: representatives {} and {} at position {theta} lie in different cosets",
                    c1.class_index(),
                    g.element_name(a),
                    g.element_name(b)
                )));
            }
        }
    }
    let q = source.quiver();
    let out = q.out_degree();
    let rows = (0..source.arrow_count())
        .map(|a| {
            let x = a / out;
            let l = *q.local(a % out);
            let ctx1 = &source.contexts[l.slot_class];
            let ctx2 = &target.contexts[l.slot_class];
            let c = q.classes()[l.slot_class].members[l.position];
            let theta = ctx1.theta_of(c).expect("label in class");
            let w = g.mul(ctx1.transversal()[theta], g.inv(ctx2.transversal()[theta]));
            let wi = ctx1.centralizer().from_parent(w).expect("same coset");
            let mat = source.irreps[l.slot_class][l.i].matrix(wi);
            let base = l.k - l.j;
            (0..mat.cols())
                .filter(|&s| mat[(l.j, s)] != 0)
                .map(|s| (x * out + q.local_index(l.slot_class, l.position, base + s), mat[(l.j, s)]))
                .collect()
        })
        .collect();
    Ok(TransversalIso { map: BimoduleMap { p: source.p, rows }, source, target })
}
