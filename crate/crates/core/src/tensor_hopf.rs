//! The tensor Hopf algebra `T_{kG}(M)` of a Hopf bimodule, truncated at a
//! degree `N`.
//!
//! `M` is free as a left `kG`-module on the arrows leaving the identity vertex,
//! so `M^{(x)n}` has basis `E(x; l_1..l_n) = (x . e_{l_1}) (x) e_{l_2} (x) ... (x) e_{l_n}`
//! with `x` in `G` and each `e_l` an arrow with source `1`. In this basis the
//! product is `E(x; l) * E(y; m) = (E(x; l) . y) (x) e_{m_1} (x) ...`, and the
//! right action of `y` acts on every label separately.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bimodule::HopfBimodule;
use crate::error::{Error, Result};
use crate::field::{sparse_axpy, Fp, SparseVec};
use crate::group::Group;
use crate::nichols::{rsr_nichols_dims, GradedDims, NicholsLimits};
use crate::report::Report;
use crate::rsr::Rsr;

/// Element of `T (x) T`, keyed by pairs of basis indices.
pub type Tensor2 = BTreeMap<(usize, usize), u64>;

/// Exhaustive verification up to this many cases per check.
const EXHAUSTIVE_CASES: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct TruncatedHopf {
    bimodule: HopfBimodule,
    group: Arc<Group>,
    max_degree: usize,
    /// Arrows per vertex.
    m: usize,
    /// First global index of each degree; `offsets[N + 1]` is the total.
    offsets: Vec<usize>,
    coproduct: Vec<Tensor2>,
    antipode: Vec<SparseVec>,
    overrides: BTreeMap<(usize, usize), SparseVec>,
}

impl TruncatedHopf {
    pub fn new(bimodule: HopfBimodule, max_degree: usize) -> Result<Self> {
        let group = bimodule.quiver().group().clone();
        let m = bimodule.quiver().out_degree();
        let n = group.order();
        let mut offsets = vec![0usize];
        for d in 0..=max_degree {
            let size = m
                .checked_pow(d as u32)
                .and_then(|p| p.checked_mul(n))
                .ok_or_else(|| Error::Budget(format!("degree {d} basis overflows")))?;
            offsets.push(offsets[d] + size);
        }
        let mut h = TruncatedHopf {
            bimodule,
            group,
            max_degree,
            m,
            offsets,
            coproduct: Vec::new(),
            antipode: Vec::new(),
            overrides: BTreeMap::new(),
        };
        h.coproduct = h.build_coproduct()?;
        h.antipode = h.build_antipode()?;
        Ok(h)
    }

    /// Builds from an RSR with default transversals.
    pub fn from_rsr(rsr: &Rsr, max_degree: usize, seed: u64) -> Result<Self> {
        Self::new(HopfBimodule::build(rsr, seed)?, max_degree)
    }

    pub fn field(&self) -> Fp {
        self.bimodule.field()
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis_len(&self) -> usize {
        self.offsets[self.max_degree + 1]
    }

    pub fn degree_dim(&self, d: usize) -> usize {
        self.offsets[d + 1] - self.offsets[d]
    }

    /// Global index of `E(x; labels)`.
    pub fn encode(&self, x: usize, labels: &[usize]) -> usize {
        let d = labels.len();
        let mut idx = x;
        for &l in labels {
            idx = idx * self.m + l;
        }
        self.offsets[d] + idx
    }

    /// `(x, labels)` of a basis index.
    pub fn decode(&self, idx: usize) -> (usize, Vec<usize>) {
        let d = self.degree_of(idx);
        let mut rest = idx - self.offsets[d];
        let mut labels = vec![0; d];
        for l in labels.iter_mut().rev() {
            *l = rest % self.m;
            rest /= self.m;
        }
        (rest, labels)
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        (0..=self.max_degree).find(|&d| idx < self.offsets[d + 1]).expect("index in range")
    }

    pub fn describe(&self, idx: usize) -> String {
        let (x, labels) = self.decode(idx);
        let mut s = self.group.element_name(x);
        for l in labels {
            s.push_str(&format!(" e{l}"));
        }
        s
    }

    /// `E(x; l) . y` as a list of `(labels, coefficient)`; the vertex becomes `xy`.
    fn right_labels(&self, labels: &[usize], y: usize) -> Vec<(Vec<usize>, u64)> {
        let f = self.field();
        let mut acc: Vec<(Vec<usize>, u64)> = vec![(Vec::with_capacity(labels.len()), 1)];
        for &l in labels {
            let row = self.bimodule.right(l, y);
            let mut next = Vec::with_capacity(acc.len() * row.len());
            for (prefix, c) in &acc {
                for &(b, w) in row {
                    let mut p = prefix.clone();
                    p.push(b % self.m);
                    next.push((p, f.mul(*c, w)));
                }
            }
            acc = next;
        }
        acc
    }

    /// Product of two basis elements.
    pub fn product(&self, a: usize, b: usize) -> Result<SparseVec> {
        if let Some(v) = self.overrides.get(&(a, b)) {
            return Ok(v.clone());
        }
        self.rule_product(a, b)
    }

    fn rule_product(&self, a: usize, b: usize) -> Result<SparseVec> {
        let (x, la) = self.decode(a);
        let (y, lb) = self.decode(b);
        let d = la.len() + lb.len();
        if d > self.max_degree {
            return Err(Error::Truncated { degree: d, max: self.max_degree });
        }
        let xy = self.group.mul(x, y);
        let entries = self
            .right_labels(&la, y)
            .into_iter()
            .map(|(mut labels, c)| {
                labels.extend_from_slice(&lb);
                (self.encode(xy, &labels), c)
            })
            .collect();
        Ok(crate::field::sparse_from_entries(self.field(), entries))
    }

    pub fn mul(&self, u: &[(usize, u64)], v: &[(usize, u64)]) -> Result<SparseVec> {
        let f = self.field();
        let mut out = SparseVec::new();
        for &(a, ca) in u {
            for &(b, cb) in v {
                sparse_axpy(f, &mut out, f.mul(ca, cb), &self.product(a, b)?);
            }
        }
        Ok(out)
    }

    fn mul2(&self, u: &Tensor2, v: &Tensor2) -> Result<Tensor2> {
        let f = self.field();
        let mut out = Tensor2::new();
        for (&(a1, a2), &ca) in u {
            for (&(b1, b2), &cb) in v {
                let c = f.mul(ca, cb);
                let left = self.product(a1, b1)?;
                let right = self.product(a2, b2)?;
                for &(l, cl) in &left {
                    for &(r, cr) in &right {
                        let e = out.entry((l, r)).or_insert(0);
                        *e = f.add(*e, f.mul(c, f.mul(cl, cr)));
                    }
                }
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    fn build_coproduct(&self) -> Result<Vec<Tensor2>> {
        let mut out: Vec<Tensor2> = Vec::with_capacity(self.basis_len());
        for idx in 0..self.basis_len() {
            let (x, labels) = self.decode(idx);
            let t = match labels.split_last() {
                None => Tensor2::from([((idx, idx), 1)]),
                Some((&last, prefix)) => {
                    let head = &out[self.encode(x, prefix)];
                    let y = self.bimodule.quiver().target(last);
                    let e = self.encode(0, &[last]);
                    let arrow = Tensor2::from([((self.encode(y, &[]), e), 1), ((e, self.encode(0, &[])), 1)]);
                    self.mul2(head, &arrow)?
                }
            };
            out.push(t);
        }
        Ok(out)
    }

    fn build_antipode(&self) -> Result<Vec<SparseVec>> {
        let f = self.field();
        let mut out: Vec<SparseVec> = Vec::with_capacity(self.basis_len());
        for idx in 0..self.basis_len() {
            let (x, labels) = self.decode(idx);
            if labels.is_empty() {
                out.push(vec![(self.encode(self.group.inv(x), &[]), 1)]);
                continue;
            }
            // S(P) x + sum_{deg P1 < n} S(P1) P2 = 0, where x = source vertex.
            let n = labels.len();
            let mut acc = SparseVec::new();
            for (&(p1, p2), &c) in &self.coproduct[idx] {
                if self.degree_of(p1) == n {
                    continue;
                }
                let term = self.mul(&out[p1], &[(p2, 1)])?;
                sparse_axpy(f, &mut acc, c, &term);
            }
            let xinv = self.encode(self.group.inv(x), &[]);
            let s = self.mul(&acc, &[(xinv, 1)])?;
            out.push(s.into_iter().map(|(i, c)| (i, f.neg(c))).collect());
        }
        Ok(out)
    }

    pub fn coproduct(&self, idx: usize) -> &Tensor2 {
        &self.coproduct[idx]
    }

    pub fn antipode(&self, idx: usize) -> &SparseVec {
        &self.antipode[idx]
    }

    pub fn counit(&self, idx: usize) -> u64 {
        u64::from(idx < self.offsets[1])
    }

    /// Replaces the product of two basis elements by the rule's value plus
    /// `delta` times `target`. Coproduct and antipode are not recomputed.
    pub fn perturb_product(&mut self, a: usize, b: usize, target: usize, delta: u64) -> Result<()> {
        let mut v = self.rule_product(a, b)?;
        sparse_axpy(self.field(), &mut v, delta, &[(target, 1)]);
        self.overrides.insert((a, b), v);
        Ok(())
    }

    fn delta_vec(&self, v: &[(usize, u64)]) -> Tensor2 {
        let f = self.field();
        let mut out = Tensor2::new();
        for &(a, c) in v {
            for (&k, &w) in &self.coproduct[a] {
                let e = out.entry(k).or_insert(0);
                *e = f.add(*e, f.mul(c, w));
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Basis elements of each degree, all or sampled, as lists of indices.
    fn cases(&self, arity: usize, budget: Option<u64>, rng: &mut ChaCha8Rng) -> (Vec<Vec<usize>>, bool) {
        let total = self.basis_len();
        let mut all = Vec::new();
        let mut count: u64 = 0;
        let mut cur = vec![0usize; arity];
        let exhaustive_ok = (total as u64).saturating_pow(arity as u32) <= budget.unwrap_or(EXHAUSTIVE_CASES) * 4;
        if exhaustive_ok {
            loop {
                let deg: usize = cur.iter().map(|&i| self.degree_of(i)).sum();
                if deg <= self.max_degree {
                    all.push(cur.clone());
                    count += 1;
                }
                let mut k = 0;
                loop {
                    if k == arity {
                        break;
                    }
                    cur[k] += 1;
                    if cur[k] < total {
                        break;
                    }
                    cur[k] = 0;
                    k += 1;
                }
                if k == arity {
                    break;
                }
            }
            if count <= budget.unwrap_or(EXHAUSTIVE_CASES) {
                return (all, true);
            }
        }
        let samples = budget.unwrap_or(EXHAUSTIVE_CASES) as usize;
        let mut out = Vec::with_capacity(samples);
        while out.len() < samples {
            // Pick degrees first so that low-dimensional degrees are not starved.
            let mut left = self.max_degree;
            let mut t = Vec::with_capacity(arity);
            for _ in 0..arity {
                let mut d = (rng.next_u64() % (left as u64 + 1)) as usize;
                if self.degree_dim(d) == 0 {
                    d = 0;
                }
                left -= d;
                let i = self.offsets[d] + (rng.next_u64() % self.degree_dim(d) as u64) as usize;
                t.push(i);
            }
            out.push(t);
        }
        (out, false)
    }

    /// Hopf algebra axioms on basis elements of total degree at most `N`.
    /// `samples = None` checks every case when feasible.
    pub fn verify(&self, seed: u64, samples: Option<u64>) -> Report {
        let f = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (singles, ex1) = self.cases(1, samples, &mut rng);
        let (pairs, ex2) = self.cases(2, samples, &mut rng);
        let (triples, ex3) = self.cases(3, samples, &mut rng);
        let mut report = Report::new(ex1 && ex2 && ex3, Some(seed));
        let one = self.encode(0, &[]);

        let unit = report.check("unit");
        for t in &singles {
            let a = t[0];
            let ok = self.product(one, a).ok() == Some(vec![(a, 1)]) && self.product(a, one).ok() == Some(vec![(a, 1)]);
            unit.record(ok, || format!("1 * {0} or {0} * 1", self.describe(a)));
        }

        let assoc = report.check("associativity");
        for t in &triples {
            let (a, b, c) = (t[0], t[1], t[2]);
            let lhs = self.product(a, b).and_then(|ab| self.mul(&ab, &[(c, 1)]));
            let rhs = self.product(b, c).and_then(|bc| self.mul(&[(a, 1)], &bc));
            assoc.record(lhs.is_ok() && lhs == rhs, || {
                format!("({} * {}) * {}", self.describe(a), self.describe(b), self.describe(c))
            });
        }

        let bal = report.check("balanced-tensor");
        for t in &pairs {
            let (a, b) = (t[0], t[1]);
            for &g in self.group.generators() {
                let gi = self.encode(g, &[]);
                let lhs = self.product(a, gi).and_then(|ag| self.mul(&ag, &[(b, 1)]));
                let rhs = self.product(gi, b).and_then(|gb| self.mul(&[(a, 1)], &gb));
                bal.record(lhs.is_ok() && lhs == rhs, || {
                    format!(
                        "{} . g (x) {} != {} (x) g . {}",
                        self.describe(a),
                        self.describe(b),
                        self.describe(a),
                        self.describe(b)
                    )
                });
            }
        }

        let coassoc = report.check("coassociativity");
        for t in &singles {
            let a = t[0];
            let mut lhs: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
            for (&(p, q), &c) in &self.coproduct[a] {
                for (&(p1, p2), &w) in &self.coproduct[p] {
                    let e = lhs.entry((p1, p2, q)).or_insert(0);
                    *e = f.add(*e, f.mul(c, w));
                }
                for (&(q1, q2), &w) in &self.coproduct[q] {
                    let e = rhs.entry((p, q1, q2)).or_insert(0);
                    *e = f.add(*e, f.mul(c, w));
                }
            }
            lhs.retain(|_, c| *c != 0);
            rhs.retain(|_, c| *c != 0);
            coassoc.record(lhs == rhs, || self.describe(a));
        }

        let cu = report.check("counit");
        for t in &singles {
            let a = t[0];
            let mut l = SparseVec::new();
            let mut r = SparseVec::new();
            for (&(p, q), &c) in &self.coproduct[a] {
                sparse_axpy(f, &mut l, f.mul(c, self.counit(p)), &[(q, 1)]);
                sparse_axpy(f, &mut r, f.mul(c, self.counit(q)), &[(p, 1)]);
            }
            let want = vec![(a, 1)];
            cu.record(l == want && r == want, || self.describe(a));
        }

        let dm = report.check("coproduct-multiplicative");
        for t in &pairs {
            let (a, b) = (t[0], t[1]);
            let lhs = self.product(a, b).map(|ab| self.delta_vec(&ab));
            let rhs = self.mul2(&self.coproduct[a], &self.coproduct[b]);
            dm.record(lhs.is_ok() && lhs == rhs, || format!("Delta({} * {})", self.describe(a), self.describe(b)));
        }

        let anti = report.check("antipode");
        for t in &singles {
            let a = t[0];
            let mut l = SparseVec::new();
            let mut r = SparseVec::new();
            let mut ok = true;
            for (&(p, q), &c) in &self.coproduct[a] {
                match (self.mul(&self.antipode[p], &[(q, 1)]), self.mul(&[(p, 1)], &self.antipode[q])) {
                    (Ok(x), Ok(y)) => {
                        sparse_axpy(f, &mut l, c, &x);
                        sparse_axpy(f, &mut r, c, &y);
                    }
                    _ => ok = false,
                }
            }
            let want: SparseVec = if self.counit(a) == 1 { vec![(one, 1)] } else { Vec::new() };
            anti.record(ok && l == want && r == want, || format!("S * id or id * S at {}", self.describe(a)));
        }
        report
    }

    /// Arrows leaving `1` satisfy `Delta(a) = t(a) (x) a + a (x) 1`.
    pub fn verify_skew_primitive(&self) -> Report {
        let mut report = Report::new(true, None);
        let check = report.check("skew-primitivity");
        if self.max_degree == 0 {
            return report;
        }
        let one = self.encode(0, &[]);
        for l in 0..self.m {
            let a = self.encode(0, &[l]);
            let y = self.encode(self.bimodule.quiver().target(l), &[]);
            let want = Tensor2::from([((y, a), 1), ((a, one), 1)]);
            check.record(self.coproduct[a] == want, || self.describe(a));
        }
        report
    }
}

/// `|G| dim B(V)_n`: graded dimensions of the type-one Hopf algebra.
pub fn type_one_dims(
    rsr: &Rsr,
    max_degree: usize,
    nprimes: usize,
    limits: &NicholsLimits,
    seed: u64,
) -> Result<GradedDims> {
    let mut d = rsr_nichols_dims(rsr, max_degree, nprimes, limits, seed)?;
    let n = rsr.group().order() as u64;
    for x in d.dims.iter_mut() {
        *x *= n;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, DEFAULT_ORDER_CAP};
    use crate::quiver::{parse_ramification, Ramification};
    use crate::rsr::GroupContext;

    fn rsr(group: &str, ram: &str, irreps: &[(usize, Vec<usize>)]) -> Rsr {
        let g = Arc::new(parse_group(group, DEFAULT_ORDER_CAP).unwrap());
        let ctx = Arc::new(GroupContext::with_default_prime(g.clone()).unwrap());
        let r = parse_ramification(&g, ram).unwrap();
        Rsr::new(ctx, r, &BTreeMap::new(), &irreps.iter().cloned().collect()).unwrap()
    }

    #[test]
    fn s3_two_loops_degree_three() {
        let h = TruncatedHopf::from_rsr(&rsr("S3", "e:2", &[(0, vec![2])]), 3, 0).unwrap();
        assert_eq!(h.degree_dim(3), 6 * 8);
        let r = h.verify(1, None);
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(r.exhaustive);
        assert!(h.verify_skew_primitive().passed());
    }

    #[test]
    fn zero_ramification_is_group_algebra() {
        let g = Arc::new(parse_group("S3", DEFAULT_ORDER_CAP).unwrap());
        let ctx = Arc::new(GroupContext::with_default_prime(g).unwrap());
        let r = Rsr::new(ctx, Ramification::zero(), &BTreeMap::new(), &BTreeMap::new()).unwrap();
        let h = TruncatedHopf::from_rsr(&r, 2, 0).unwrap();
        assert_eq!(h.basis_len(), 6);
        assert!(h.verify(0, None).passed());
    }

    #[test]
    fn product_mutation_breaks_coproduct() {
        let mut h = TruncatedHopf::from_rsr(&rsr("S3", "(0 1):1", &[(1, vec![1])]), 2, 0).unwrap();
        let a = h.encode(0, &[0]);
        let b = h.encode(0, &[1]);
        let target = h.encode(0, &[2, 2]);
        h.perturb_product(a, b, target, 1).unwrap();
        let r = h.verify(0, None);
        assert!(!r.get("coproduct-multiplicative").unwrap().passed());
    }
}
