//! Character tables over `F_p` by the Burnside–Dixon class-sum method.
//!
//! The normalized characters `w_k = |K_k| chi(g_k) / chi(1)` are the common
//! eigenvectors of the class multiplication matrices. Eigenspaces are refined
//! one class matrix at a time until every space is a line.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Fp, Matrix};
use crate::group::Group;
use crate::prime::FieldPrime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub p: u64,
    pub class_sizes: Vec<usize>,
    /// `rows[i][k] = chi_i(g_k)` for the class representative `g_k`.
    pub rows: Vec<Vec<u64>>,
    pub degrees: Vec<u32>,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn value(&self, chi: usize, class: usize) -> u64 {
        self.rows[chi][class]
    }

    /// Character value at an arbitrary element of `g`.
    pub fn at(&self, g: &Group, chi: usize, x: usize) -> u64 {
        self.rows[chi][g.class_of(x)]
    }

    pub fn index_of_row(&self, values: &[u64]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == values)
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    /// Eigenvalue multiplicities of `rho(g_k)` for each class: entry `[k][j]`
    /// counts the eigenvalue `zeta_o^j` where `o` is the order of `g_k` and
    /// `zeta_o` the fixed root of unity of `fp`. These integers do not depend
    /// on the prime, which makes them a prime-independent name for a character.
    pub fn signature(&self, g: &Group, fp: &FieldPrime, chi: usize) -> Result<Vec<Vec<u32>>> {
        let f = self.field();
        let d = self.degrees[chi] as u64;
        let mut out = Vec::with_capacity(g.classes().len());
        for class in g.classes() {
            let x = class.rep;
            let o = class.element_order as u64;
            let zeta = fp.root_of_unity(o);
            let inv_o = f.inv(o % f.p());
            let mut powers = Vec::with_capacity(o as usize);
            let mut y = g.identity();
            for _ in 0..o {
                powers.push(self.at(g, chi, y));
                y = g.mul(y, x);
            }
            let mut mults = Vec::with_capacity(o as usize);
            for j in 0..o {
                // m_j = (1/o) sum_t chi(x^t) zeta^(-j t)
                let mut acc = 0;
                for (t, &v) in powers.iter().enumerate() {
                    let e = (o - (j * t as u64) % o) % o;
                    acc = f.add(acc, f.mul(v, f.pow(zeta, e)));
                }
                let m = f.mul(acc, inv_o);
                if m > d {
                    return Err(Error::Splitting(format!("eigenvalue multiplicity {m} exceeds degree {d}")));
                }
                mults.push(m as u32);
            }
            out.push(mults);
        }
        Ok(out)
    }

    pub fn index_of_signature(&self, g: &Group, fp: &FieldPrime, sig: &[Vec<u32>]) -> Result<Option<usize>> {
        for chi in 0..self.len() {
            if self.signature(g, fp, chi)? == sig {
                return Ok(Some(chi));
            }
        }
        Ok(None)
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Class multiplication coefficients: `c[i][j][k] = #{x in K_i : x^-1 g_k in K_j}`.
fn class_coefficients(g: &Group) -> Vec<Vec<Vec<u64>>> {
    let r = g.classes().len();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in g.classes().iter().enumerate() {
        let z = ck.rep;
        for (i, ci) in g.classes().iter().enumerate() {
            for &x in &ci.members {
                let y = g.mul(g.inv(x), z);
                c[i][g.class_of(y)][k] += 1;
            }
        }
    }
    c
}

/// Complete character table of `g` over the field of `fp`, in canonical order:
/// rows sorted by degree, then by values in class order.
pub fn character_table(g: &Group, fp: &FieldPrime) -> Result<CharTable> {
    let f = fp.field();
    if fp.p <= 2 * g.order() as u64 || !(fp.p - 1).is_multiple_of(g.exponent()) {
        return Err(Error::Splitting(format!("p = {} does not split the group", fp.p)));
    }
    let r = g.classes().len();
    let n = g.order() as u64;
    let coeffs = class_coefficients(g);
    let class_sizes: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();

    // Each space is a list of basis vectors (length r), kept in RREF.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 0..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = Matrix::from_row_vecs(&coeffs[i], r);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(f, &a, &space)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Splitting(format!("class matrices do not separate characters mod {}", fp.p)));
    }

    let inv_class: Vec<usize> = g.classes().iter().map(|c| g.class_of(g.inv(c.rep))).collect();
    let mut table: Vec<(u32, Vec<u64>)> = Vec::with_capacity(r);
    for space in spaces {
        let mut w = space.into_iter().next().expect("one vector");
        // Normalize so that omega(K_identity) = 1.
        let w0 = w[0];
        if w0 == 0 {
            return Err(Error::Splitting("eigenvector vanishes at the identity".into()));
        }
        let inv0 = f.inv(w0);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv0);
        }
        // chi(1)^2 = |G| / sum_k w_k w_{k'} / |K_k|
        let mut s = 0;
        for k in 0..r {
            let t = f.mul(w[k], w[inv_class[k]]);
            s = f.add(s, f.mul(t, f.inv(class_sizes[k] as u64 % fp.p)));
        }
        if s == 0 {
            return Err(Error::Splitting("degenerate norm".into()));
        }
        let d2 = f.mul(n % fp.p, f.inv(s));
        let d = (1..=isqrt(n))
            .find(|&d| (d * d) % fp.p == d2 && n.is_multiple_of(d))
            .ok_or_else(|| Error::Splitting(format!("no integer degree with square {d2}")))?;
        let row: Vec<u64> = (0..r).map(|k| f.mul(f.mul(d, w[k]), f.inv(class_sizes[k] as u64 % fp.p))).collect();
        table.push((d as u32, row));
    }
    table.sort();
    let degree_sq: u64 = table.iter().map(|(d, _)| (*d as u64) * (*d as u64)).sum();
    if degree_sq != n {
        return Err(Error::Splitting(format!("sum of squared degrees {degree_sq} != {n}")));
    }
    Ok(CharTable {
        p: fp.p,
        class_sizes,
        degrees: table.iter().map(|t| t.0).collect(),
        rows: table.into_iter().map(|t| t.1).collect(),
    })
}

/// Splits an invariant subspace (rows = basis) into eigenspaces of `a`
/// acting on column vectors.
fn split_space(f: Fp, a: &Matrix, basis: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
    let s = basis.len();
    let r = a.cols();
    let (rref, pivots) = crate::field::row_basis(f, basis, r);
    // Restricted operator X with A b_t = sum_u X[u][t] b_u.
    let mut x = Matrix::zeros(s, s);
    for t in 0..s {
        let image = a.mul_vec(&rref[t], f);
        for (u, &pc) in pivots.iter().enumerate() {
            x[(u, t)] = image[pc];
        }
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in x.eigenvalues(f) {
        let null = x.shift(lambda, f).nullspace(f);
        total += null.len();
        let vectors: Vec<Vec<u64>> = null
            .iter()
            .map(|y| {
                let mut v = vec![0; r];
                for (t, &c) in y.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for k in 0..r {
                        v[k] = f.add(v[k], f.mul(c, rref[t][k]));
                    }
                }
                v
            })
            .collect();
        out.push(crate::field::row_basis(f, &vectors, r).0);
    }
    if total != s {
        return Err(Error::Splitting(format!("class matrix not diagonalizable over F_{}", f.p())));
    }
    Ok(out)
}
