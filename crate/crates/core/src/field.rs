//! Arithmetic in `F_p` and dense matrices over it.
//!
//! Values are canonical residues in `0..p`. The modulus is kept well below
//! `2^32`, so products fit in a `u64` before reduction.

use alloc::vec;
use alloc::vec::Vec;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 31)).contains(&p));
        Fp { p }
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, v: i64) -> u64 {
        let p = self.p as i64;
        (((v % p) + p) % p) as u64
    }

    pub fn from_u64(self, v: u64) -> u64 {
        v % self.p
    }

    /// Lift to the symmetric range `(-p/2, p/2]`.
    pub fn signed(self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Sparse vector: sorted `(index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, u64)>;

/// Adds `coef * v` into `acc`, keeping `acc` sorted and free of zeros.
pub fn sparse_axpy(f: Fp, acc: &mut SparseVec, coef: u64, v: &[(usize, u64)]) {
    if coef == 0 || v.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(acc.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < v.len() {
        if j == v.len() || (i < acc.len() && acc[i].0 < v[j].0) {
            out.push(acc[i]);
            i += 1;
        } else if i == acc.len() || v[j].0 < acc[i].0 {
            out.push((v[j].0, f.mul(coef, v[j].1)));
            j += 1;
        } else {
            let c = f.add(acc[i].1, f.mul(coef, v[j].1));
            if c != 0 {
                out.push((acc[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    *acc = out;
}

/// Builds a sparse vector from unsorted entries, merging duplicates.
pub fn sparse_from_entries(f: Fp, mut entries: Vec<(usize, u64)>) -> SparseVec {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (k, c) in entries {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 = f.add(last.1, c),
            _ => out.push((k, c % f.p())),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn from_row_vecs(rows: &[Vec<u64>], cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if b != 0 {
                        out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64, f: Fp) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: u64, f: Fp) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = f.sub(m[(i, i)], lambda);
        }
        m
    }

    pub fn trace(&self, f: Fp) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self[(i, i)]))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u64], f: Fp) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in self.row(i).iter().enumerate() {
                if b != 0 {
                    out[j] = f.add(out[j], f.mul(a, b));
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u64], f: Fp) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self, f: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.mul(factor, self[(r, j)]);
                    self[(i, j)] = f.sub(self[(i, j)], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, f: Fp) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(f);
        (m, piv)
    }

    pub fn rank(&self, f: Fp) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : A x = 0}` as column vectors (returned as a list).
    pub fn nullspace(&self, f: Fp) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(r[(i, free)]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self, f: Fp) -> u64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[(i, c)] != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pivot = m[(c, c)];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for i in c + 1..n {
                let factor = f.mul(m[(i, c)], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.mul(factor, m[(c, j)]);
                    m[(i, j)] = f.sub(m[(i, j)], v);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: Fp) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let piv = aug.rref_in_place(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }

    /// Eigenvalues in `F_p` by exhaustive search over the field.
    pub fn eigenvalues(&self, f: Fp) -> Vec<u64> {
        let n = self.rows;
        let mut found = Vec::new();
        let mut total = 0;
        for lambda in 0..f.p() {
            if total >= n {
                break;
            }
            let nullity = n - self.shift(lambda, f).rank(f);
            if nullity > 0 {
                found.push(lambda);
                total += nullity;
            }
        }
        found
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = u64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Row space basis of a set of vectors, in reduced echelon form, with pivots.
pub fn row_basis(f: Fp, vectors: &[Vec<u64>], len: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    if vectors.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let m = Matrix::from_row_vecs(vectors, len);
    let (r, piv) = m.rref(f);
    let rows = (0..piv.len()).map(|i| r.row(i).to_vec()).collect();
    (rows, piv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_pow() {
        let f = Fp::new(13);
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.pow(2, 12), 1);
        assert_eq!(f.from_i64(-1), 12);
        assert_eq!(f.signed(12), -1);
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Fp::new(7);
        let m = Matrix::from_rows(2, 3, alloc::vec![1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(f), 1);
        let ns = m.nullspace(f);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v, f).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn determinant_matches_inverse() {
        let f = Fp::new(61);
        let m = Matrix::from_rows(3, 3, alloc::vec![2, 1, 0, 0, 3, 5, 1, 0, 4]);
        let det = m.determinant(f);
        assert_ne!(det, 0);
        let inv = m.inverse(f).unwrap();
        assert_eq!(m.mul(&inv, f), Matrix::identity(3));
        let singular = Matrix::from_rows(2, 2, alloc::vec![1, 2, 2, 4]);
        assert_eq!(singular.determinant(f), 0);
        assert!(singular.inverse(f).is_none());
    }

    #[test]
    fn sparse_axpy_cancels() {
        let f = Fp::new(5);
        let mut acc = alloc::vec![(1, 2), (3, 1)];
        sparse_axpy(f, &mut acc, 1, &[(1, 3), (2, 4)]);
        assert_eq!(acc, alloc::vec![(2, 4), (3, 1)]);
    }
}
