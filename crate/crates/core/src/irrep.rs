//! Irreducible matrix representations over `F_p`.
//!
//! Matrices act on row vectors, so `rho(gh) = rho(g) rho(h)`. A representation
//! with character `chi` is cut out of the regular module: the central
//! idempotent `e_chi` projects onto the `chi`-isotypic ideal, and an eigenspace
//! of left multiplication by a random group-algebra element that has dimension
//! exactly `chi(1)` is an irreducible right submodule.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::chartable::{character_table, CharTable};
use crate::error::{Error, Result};
use crate::field::{row_basis, Fp, Matrix};
use crate::group::Group;
use crate::prime::FieldPrime;

/// Attempts per seed-derived stream before giving up.
const SPIN_BUDGET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub p: u64,
    pub degree: usize,
    /// Row of the domain's canonical character table.
    pub char_index: usize,
    /// `matrices[x]` for every element index `x` of the domain group.
    pub matrices: Vec<Matrix>,
}

impl Irrep {
    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn matrix(&self, x: usize) -> &Matrix {
        &self.matrices[x]
    }

    pub fn trace(&self, x: usize) -> u64 {
        self.matrices[x].trace(self.field())
    }

    /// Checks `rho(1) = 1` and `rho(gh) = rho(g) rho(h)` for all pairs.
    pub fn is_homomorphism(&self, g: &Group) -> bool {
        let f = self.field();
        if self.matrices.len() != g.order() || self.matrices[0] != Matrix::identity(self.degree) {
            return false;
        }
        (0..g.order())
            .all(|a| (0..g.order()).all(|b| self.matrices[g.mul(a, b)] == self.matrices[a].mul(&self.matrices[b], f)))
    }
}

/// Irreducible representation for row `char_index` of the canonical table.
pub fn irrep_matrices(g: &Group, fp: &FieldPrime, char_index: usize, seed: u64) -> Result<Irrep> {
    let table = character_table(g, fp)?;
    irrep_from_table(g, &table, char_index, seed)
}

/// As [`irrep_matrices`] with a precomputed table.
pub fn irrep_from_table(g: &Group, table: &CharTable, char_index: usize, seed: u64) -> Result<Irrep> {
    if char_index >= table.len() {
        return Err(Error::InvalidRsr(format!("character index {char_index} out of range 0..{}", table.len())));
    }
    let f = table.field();
    let d = table.degrees[char_index] as usize;
    let n = g.order();
    if d == 1 {
        let matrices = (0..n).map(|x| Matrix::from_rows(1, 1, vec![table.at(g, char_index, x)])).collect();
        return Ok(Irrep { p: table.p, degree: 1, char_index, matrices });
    }

    // e_chi = (d/|G|) sum_x chi(x^-1) x
    let scale = f.mul(d as u64, f.inv(n as u64 % table.p));
    let e: Vec<u64> = (0..n).map(|x| f.mul(scale, table.at(g, char_index, g.inv(x)))).collect();
    let spanning: Vec<Vec<u64>> = (0..n).map(|h| right_mul(g, &e, h)).collect();
    let (ideal, ideal_pivots) = row_basis(f, &spanning, n);
    if ideal.len() != d * d {
        return Err(Error::Splitting(format!("isotypic component has dimension {} instead of {}", ideal.len(), d * d)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPIN_BUDGET {
        let a: Vec<u64> = (0..n).map(|_| rng.next_u64() % table.p).collect();
        let Some(w) = split_once(g, f, &a, &ideal, &ideal_pivots, d) else {
            continue;
        };
        let irrep = represent(g, f, &w, char_index, d);
        if (0..n).all(|x| irrep.trace(x) == table.at(g, char_index, x)) {
            return Ok(irrep);
        }
    }
    Err(Error::SpinFailed { char_index, attempts: SPIN_BUDGET })
}

/// `v * h` in the group algebra.
fn right_mul(g: &Group, v: &[u64], h: usize) -> Vec<u64> {
    let mut out = vec![0; v.len()];
    for (x, &c) in v.iter().enumerate() {
        if c != 0 {
            out[g.mul(x, h)] = c;
        }
    }
    out
}

/// `a * v` in the group algebra.
fn left_mul(g: &Group, f: Fp, a: &[u64], v: &[u64]) -> Vec<u64> {
    let mut out = vec![0; v.len()];
    for (y, &ay) in a.iter().enumerate() {
        if ay == 0 {
            continue;
        }
        for (x, &vx) in v.iter().enumerate() {
            if vx != 0 {
                let k = g.mul(y, x);
                out[k] = f.add(out[k], f.mul(ay, vx));
            }
        }
    }
    out
}

/// Looks for an eigenvalue of `L_a` on the ideal whose eigenspace has
/// dimension exactly `d`, returning that eigenspace in reduced echelon form.
fn split_once(
    g: &Group,
    f: Fp,
    a: &[u64],
    ideal: &[Vec<u64>],
    pivots: &[usize],
    d: usize,
) -> Option<(Vec<Vec<u64>>, Vec<usize>)> {
    let m = ideal.len();
    let n = g.order();
    // Row t holds the coordinates of a * b_t in the basis b.
    let mut x = Matrix::zeros(m, m);
    for (t, b) in ideal.iter().enumerate() {
        let ab = left_mul(g, f, a, b);
        for (u, &pc) in pivots.iter().enumerate() {
            x[(t, u)] = ab[pc];
        }
    }
    let xt = x.transpose();
    for lambda in 0..f.p() {
        let shifted = xt.shift(lambda, f);
        if m - shifted.rank(f) != d {
            continue;
        }
        let coeffs = shifted.nullspace(f);
        let vectors: Vec<Vec<u64>> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0; n];
                for (t, &ct) in c.iter().enumerate() {
                    if ct == 0 {
                        continue;
                    }
                    for k in 0..n {
                        v[k] = f.add(v[k], f.mul(ct, ideal[t][k]));
                    }
                }
                v
            })
            .collect();
        return Some(row_basis(f, &vectors, n));
    }
    None
}

fn represent(g: &Group, f: Fp, w: &(Vec<Vec<u64>>, Vec<usize>), char_index: usize, d: usize) -> Irrep {
    let (rows, pivots) = w;
    let matrices = (0..g.order())
        .map(|h| {
            let mut m = Matrix::zeros(d, d);
            for (s, ws) in rows.iter().enumerate() {
                let image = right_mul(g, ws, h);
                for (t, &pc) in pivots.iter().enumerate() {
                    m[(s, t)] = image[pc];
                }
            }
            m
        })
        .collect();
    Irrep { p: f.p(), degree: d, char_index, matrices }
}

/// Composes `r` with a homomorphism `phi` from another group into the domain
/// of `r`, given as `phi[x] = index in r's domain`. The character index is
/// re-identified in `table`, the canonical table of the new domain.
pub fn rep_twist(r: &Irrep, new_domain: &Group, phi: &[usize], table: &CharTable) -> Result<Irrep> {
    if phi.len() != new_domain.order() || phi.iter().any(|&y| y >= r.matrices.len()) {
        return Err(Error::DomainMismatch(format!(
            "map of length {} does not fit a representation on {} elements",
            phi.len(),
            r.matrices.len()
        )));
    }
    if table.p != r.p {
        return Err(Error::DomainMismatch("different primes".into()));
    }
    let matrices: Vec<Matrix> = phi.iter().map(|&y| r.matrices[y].clone()).collect();
    let f = r.field();
    let row: Vec<u64> = new_domain.classes().iter().map(|c| matrices[c.rep].trace(f)).collect();
    let char_index = table
        .index_of_row(&row)
        .ok_or_else(|| Error::DomainMismatch("twisted representation is not irreducible on the new domain".into()))?;
    Ok(Irrep { p: r.p, degree: r.degree, char_index, matrices })
}

/// Equivalence of representations of the same group, by comparing traces.
pub fn rep_equal(a: &Irrep, b: &Irrep) -> Result<bool> {
    if a.p != b.p || a.matrices.len() != b.matrices.len() {
        return Err(Error::DomainMismatch(format!(
            "representations over F_{} on {} elements and F_{} on {} elements",
            a.p,
            a.matrices.len(),
            b.p,
            b.matrices.len()
        )));
    }
    Ok(a.degree == b.degree && (0..a.matrices.len()).all(|x| a.trace(x) == b.trace(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, DEFAULT_ORDER_CAP};
    use crate::prime::choose_prime;

    #[test]
    fn c2_sign() {
        let g = parse_group("C2", DEFAULT_ORDER_CAP).unwrap();
        let fp = choose_prime(&g, 0);
        let r = irrep_matrices(&g, &fp, 1, 0).unwrap();
        assert_eq!(r.matrices[0].data(), [1]);
        assert_eq!(r.matrices[1].data(), [fp.p - 1]);
    }

    #[test]
    fn s3_two_dimensional() {
        let g = parse_group("S3", DEFAULT_ORDER_CAP).unwrap();
        let fp = choose_prime(&g, 0);
        let r = irrep_matrices(&g, &fp, 2, 11).unwrap();
        assert!(r.is_homomorphism(&g));
        let c3 = g.parse_element("(0 1 2)").unwrap();
        assert_eq!(r.trace(c3), fp.p - 1);
        assert_eq!(r, irrep_matrices(&g, &fp, 2, 11).unwrap());
    }

    #[test]
    fn s4_all_irreps() {
        let g = parse_group("S4", DEFAULT_ORDER_CAP).unwrap();
        let fp = choose_prime(&g, 0);
        let t = character_table(&g, &fp).unwrap();
        for chi in 0..t.len() {
            let r = irrep_from_table(&g, &t, chi, 3).unwrap();
            assert!(r.is_homomorphism(&g));
        }
    }

    #[test]
    fn inner_twist_is_equivalent() {
        let g = parse_group("S3", DEFAULT_ORDER_CAP).unwrap();
        let fp = choose_prime(&g, 0);
        let t = character_table(&g, &fp).unwrap();
        let r = irrep_from_table(&g, &t, 2, 5).unwrap();
        let h = g.parse_element("(0 1)").unwrap();
        let phi: Vec<usize> = (0..g.order()).map(|x| g.conj(h, x)).collect();
        let tw = rep_twist(&r, &g, &phi, &t).unwrap();
        assert_ne!(tw.matrices, r.matrices);
        assert!(rep_equal(&tw, &r).unwrap());
    }
}
