//! Yetter–Drinfeld modules over `kG` and their braidings.
//!
//! The coinvariant module of a Hopf bimodule is spanned by the arrows leaving
//! the identity vertex, with the adjoint action `g |> a = g . a . g^-1` and
//! the grading given by the target vertex.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bimodule::HopfBimodule;
use crate::error::{Error, Result};
use crate::field::{Fp, Matrix, SparseVec};
use crate::group::Group;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    group: Arc<Group>,
    p: u64,
    /// `action[g]` acts on column vectors: `g |> b_l = sum_m action[g][m][l] b_m`.
    action: Vec<Matrix>,
    /// Grading of each basis vector, as an element index.
    degrees: Vec<usize>,
}

impl YdModule {
    pub fn from_parts(group: Arc<Group>, p: u64, action: Vec<Matrix>, degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if action.len() != group.order() || action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DomainMismatch(format!("need {} square matrices of size {n}", group.order())));
        }
        if degrees.iter().any(|&d| d >= group.order()) {
            return Err(Error::NotInGroup("degree out of range".into()));
        }
        Ok(YdModule { group, p, action, degrees })
    }

    /// The zero module.
    pub fn zero(group: Arc<Group>, p: u64) -> Self {
        let action = (0..group.order()).map(|_| Matrix::zeros(0, 0)).collect();
        YdModule { group, p, action, degrees: Vec::new() }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn degree(&self, b: usize) -> usize {
        self.degrees[b]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Checks the action is a group homomorphism and the grading is equivariant.
    pub fn verify(&self) -> Report {
        let g = &self.group;
        let f = self.field();
        let n = g.order();
        let d = self.dim();
        let mut report = Report::new(true, None);
        let unit = report.check("unit");
        unit.record(self.action[0] == Matrix::identity(d), || "1 acts nontrivially".into());
        let mult = report.check("multiplicativity");
        for a in 0..n {
            for b in 0..n {
                let ok = self.action[g.mul(a, b)] == self.action[a].mul(&self.action[b], f);
                mult.record(ok, || {
                    format!(
                        "({} {}) |> v != {} |> ({} |> v)",
                        g.element_name(a),
                        g.element_name(b),
                        g.element_name(a),
                        g.element_name(b)
                    )
                });
            }
        }
        let eq = report.check("grading-equivariance");
        for a in 0..n {
            for l in 0..d {
                let want = g.mul(g.mul(a, self.degrees[l]), g.inv(a));
                let ok = (0..d).all(|m| self.action[a][(m, l)] == 0 || self.degrees[m] == want);
                eq.record(ok, || format!("deg({} |> b_{l}) != conjugated degree", g.element_name(a)));
            }
        }
        report
    }
}

/// Coinvariant Yetter–Drinfeld module of a Hopf bimodule.
pub fn coinvariant_yd(m: &HopfBimodule) -> YdModule {
    let q = m.quiver();
    let g = q.group().clone();
    let d = q.out_degree();
    let action = (0..g.order())
        .map(|gi| {
            let mut a = Matrix::zeros(d, d);
            for l in 0..d {
                for &(b, c) in m.right(m.left(gi, l), g.inv(gi)) {
                    a[(b, l)] = c;
                }
            }
            a
        })
        .collect();
    let degrees = (0..d).map(|l| q.target(l)).collect();
    YdModule { group: g, p: m.field().p(), action, degrees }
}

/// `c(b_k (x) b_l) = (deg(b_k) |> b_l) (x) b_k` on `V (x) V`, basis index `k * n + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    pub dim: usize,
    pub p: u64,
    /// `images[k * n + l]`: the image of `b_k (x) b_l` as a sparse vector.
    pub images: Vec<SparseVec>,
}

pub fn braiding(v: &YdModule) -> Braiding {
    let n = v.dim();
    let mut images = Vec::with_capacity(n * n);
    for k in 0..n {
        let a = v.action(v.degree(k));
        for l in 0..n {
            let img: SparseVec = (0..n).filter(|&m| a[(m, l)] != 0).map(|m| (m * n + k, a[(m, l)])).collect();
            let mut img = img;
            img.sort_unstable_by_key(|e| e.0);
            images.push(img);
        }
    }
    Braiding { dim: n, p: v.p, images }
}

impl Braiding {
    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    /// Dense matrix acting on column vectors.
    pub fn matrix(&self) -> Matrix {
        let nn = self.dim * self.dim;
        let mut m = Matrix::zeros(nn, nn);
        for (col, img) in self.images.iter().enumerate() {
            for &(row, c) in img {
                m[(row, col)] = c;
            }
        }
        m
    }

    /// Applies `c` at positions `(i, i+1)` of `V^(x)k` to a sparse vector.
    /// Tensor basis indices are base-`n` numerals, first factor most significant.
    pub fn apply_at(&self, k: usize, i: usize, v: &[(usize, u64)]) -> SparseVec {
        let f = self.field();
        let n = self.dim;
        let low = n.pow((k - i - 2) as u32);
        let mut entries = Vec::new();
        for &(t, c) in v {
            let pair = (t / low) % (n * n);
            let rest = t - pair * low;
            for &(img, w) in &self.images[pair] {
                entries.push((rest + img * low, f.mul(c, w)));
            }
        }
        crate::field::sparse_from_entries(f, entries)
    }

    /// Applies `c_{w_1} c_{w_2} ... c_{w_l}` (rightmost first).
    pub fn apply_word(&self, k: usize, word: &[usize], v: &[(usize, u64)]) -> SparseVec {
        let mut cur: SparseVec = v.to_vec();
        for &i in word.iter().rev() {
            cur = self.apply_at(k, i, &cur);
        }
        cur
    }

    /// Braid relation on `V^(x)3` and invertibility of `c`.
    pub fn verify(&self) -> Report {
        let mut report = Report::new(true, None);
        let n = self.dim;
        let braid = report.check("braid-relation");
        for t in 0..n * n * n {
            let e = [(t, 1u64)];
            let lhs = self.apply_word(3, &[0, 1, 0], &e);
            let rhs = self.apply_word(3, &[1, 0, 1], &e);
            braid.record(lhs == rhs, || format!("basis tensor {t}"));
        }
        let inv = report.check("invertibility");
        let rank = self.matrix().rank(self.field());
        inv.record(rank == n * n, || format!("rank {rank} < {}", n * n));
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, DEFAULT_ORDER_CAP};
    use alloc::vec;

    #[test]
    fn c2_sign_module() {
        let g = Arc::new(parse_group("C2", DEFAULT_ORDER_CAP).unwrap());
        let p = 5;
        let action = vec![Matrix::identity(1), Matrix::from_rows(1, 1, vec![p - 1])];
        let v = YdModule::from_parts(g, p, action, vec![1]).unwrap();
        assert!(v.verify().passed());
        let c = braiding(&v);
        assert_eq!(c.matrix().data(), [p - 1]);
        assert!(c.verify().passed());
    }

    #[test]
    fn trivial_module_braids_by_flip() {
        let g = Arc::new(parse_group("C3", DEFAULT_ORDER_CAP).unwrap());
        let action = (0..3).map(|_| Matrix::identity(2)).collect();
        let v = YdModule::from_parts(g, 7, action, vec![0, 0]).unwrap();
        let c = braiding(&v);
        for k in 0..2 {
            for l in 0..2 {
                assert_eq!(c.images[k * 2 + l], vec![(l * 2 + k, 1)]);
            }
        }
    }

    #[test]
    fn mutated_grading_fails() {
        let g = Arc::new(parse_group("S3", DEFAULT_ORDER_CAP).unwrap());
        let t = g.parse_element("(0 1)").unwrap();
        let sgn = |x: usize| if g.element(x).cycles().len() == 1 && g.element_order(x) == 2 { 12 } else { 1 };
        let action: Vec<Matrix> = (0..6).map(|x| Matrix::from_rows(1, 1, vec![sgn(x)])).collect();
        let v = YdModule::from_parts(g.clone(), 13, action, vec![t]).unwrap();
        assert!(!v.verify().get("grading-equivariance").unwrap().passed());
    }
}
