//! Graded dimensions of Nichols algebras through quantum symmetrizer ranks.
//!
//! `dim B(V)_k = rank S_k` with `S_k = sum_{sigma in Sym(k)} T_sigma`, where
//! `T_sigma` is the braid lift of `sigma` along a reduced word. The braiding
//! preserves the ordered product of degrees of a tensor, so `S_k` is
//! block diagonal and the rank is computed block by block.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bimodule::HopfBimodule;
use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::prime::choose_primes;
use crate::rsr::Rsr;
use crate::yd::{braiding, coinvariant_yd, Braiding, YdModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NicholsLimits {
    /// Largest `dim V` accepted.
    pub max_dim: usize,
    /// Largest `(dim V)^k` accepted.
    pub max_tensor_dim: usize,
}

impl Default for NicholsLimits {
    fn default() -> Self {
        NicholsLimits { max_dim: 8, max_tensor_dim: 4096 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<u64>,
    pub primes: Vec<u64>,
    /// Whether all primes produced the same dimensions.
    pub agreed: bool,
}

/// Bubble-sort reduced word of a permutation given by its image array:
/// `sigma = s_{w_1} ... s_{w_l}` as a product of adjacent transpositions.
pub fn reduced_word(images: &[usize]) -> Vec<usize> {
    let mut a = images.to_vec();
    let mut word = Vec::new();
    let n = a.len();
    for pass in 0..n {
        for i in 0..n.saturating_sub(1 + pass) {
            if a[i] > a[i + 1] {
                a.swap(i, i + 1);
                word.push(i);
            }
        }
    }
    word.reverse();
    word
}

/// All permutations of `0..k` as image arrays, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Ordered product of degrees of every basis tensor of `V^(x)k`.
fn block_keys(v: &YdModule, k: usize) -> Vec<usize> {
    let g = v.group();
    let n = v.dim();
    let total = n.pow(k as u32);
    (0..total)
        .map(|t| {
            let mut key = g.identity();
            let mut rest = t;
            let mut digits = vec![0; k];
            for d in digits.iter_mut().rev() {
                *d = rest % n;
                rest /= n;
            }
            for d in digits {
                key = g.mul(key, v.degree(d));
            }
            key
        })
        .collect()
}

/// Rank of the quantum symmetrizer on `V^(x)k`.
pub fn symmetrizer_rank(c: &Braiding, v: &YdModule, k: usize) -> u64 {
    let n = v.dim();
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let f = c.field();
    let words: Vec<Vec<usize>> = permutations(k).iter().map(|s| reduced_word(s)).collect();
    let keys = block_keys(v, k);
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (t, &key) in keys.iter().enumerate() {
        blocks.entry(key).or_default().push(t);
    }
    let mut rank = 0;
    for members in blocks.values() {
        let b = members.len();
        let mut m = Matrix::zeros(b, b);
        for (col, &t) in members.iter().enumerate() {
            for w in &words {
                for (out, coef) in c.apply_word(k, w, &[(t, 1)]) {
                    let row = members.binary_search(&out).expect("symmetrizer preserves blocks");
                    m[(row, col)] = f.add(m[(row, col)], coef);
                }
            }
        }
        rank += m.rank(f) as u64;
    }
    rank
}

/// `dim B(V)_k` for `k = 0..=max_degree` over the module's own prime.
pub fn nichols_dims(v: &YdModule, max_degree: usize, limits: &NicholsLimits) -> Result<GradedDims> {
    let n = v.dim();
    if n > limits.max_dim {
        return Err(Error::Budget(format!("dim V = {n} exceeds {}", limits.max_dim)));
    }
    let c = braiding(v);
    let mut dims = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let size = n.checked_pow(k as u32).unwrap_or(usize::MAX);
        if size > limits.max_tensor_dim {
            return Err(Error::Budget(format!("V^(x){k} has dimension {size}, above {}", limits.max_tensor_dim)));
        }
        let r = symmetrizer_rank(&c, v, k);
        dims.push(r);
        // Once a component vanishes, all higher ones do.
        if r == 0 {
            dims.resize(max_degree + 1, 0);
            break;
        }
    }
    Ok(GradedDims { dims, primes: vec![v.field().p()], agreed: true })
}

/// Nichols dimensions of the coinvariant module of an RSR over `nprimes`
/// splitting primes (the RSR's own first). Reports the entrywise maximum.
pub fn rsr_nichols_dims(
    rsr: &Rsr,
    max_degree: usize,
    nprimes: usize,
    limits: &NicholsLimits,
    seed: u64,
) -> Result<GradedDims> {
    let mut primes = vec![*rsr.prime()];
    if nprimes > 1 {
        primes.extend(choose_primes(rsr.group(), rsr.prime().p + 1, nprimes - 1));
    }
    let mut runs = Vec::new();
    for fp in &primes {
        let r = rsr.at_prime(*fp)?;
        let m = HopfBimodule::build(&r, seed)?;
        let v = coinvariant_yd(&m);
        runs.push(nichols_dims(&v, max_degree, limits)?.dims);
    }
    let agreed = runs.windows(2).all(|w| w[0] == w[1]);
    let dims = (0..=max_degree).map(|k| runs.iter().map(|d| d[k]).max().unwrap_or(0)).collect();
    Ok(GradedDims { dims, primes: primes.iter().map(|f| f.p).collect(), agreed })
}
