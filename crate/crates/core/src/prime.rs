use alloc::vec::Vec;

use crate::field::Fp;
use crate::group::Group;

/// A splitting prime for a group: `p = 1 mod exponent`, `p > 2|G|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldPrime {
    pub p: u64,
    /// Smallest generator of `F_p^*`.
    pub primitive_root: u64,
    /// Exponent `e` of the group; `zeta_e = primitive_root^((p-1)/e)`.
    pub exponent: u64,
}

impl FieldPrime {
    /// Builds the prime data for an explicit `p`, checking it splits `g`.
    pub fn for_group(g: &Group, p: u64) -> Option<FieldPrime> {
        let e = g.exponent();
        let ok = is_prime(p) && p % e == 1 % e && p > 2 * g.order() as u64;
        ok.then(|| FieldPrime { p, primitive_root: primitive_root(p), exponent: e })
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    /// The fixed primitive `order`-th root of unity; `order` must divide the exponent.
    pub fn root_of_unity(&self, order: u64) -> u64 {
        debug_assert!(self.exponent.is_multiple_of(order));
        self.field().pow(self.primitive_root, (self.p - 1) / order)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let f = Fp::new(p);
    let factors = prime_factors(p - 1);
    (2..p).find(|&g| factors.iter().all(|&q| f.pow(g, (p - 1) / q) != 1)).expect("every prime has a primitive root")
}

/// Smallest prime `p >= max(min_bound, 2|G| + 1)` with `p = 1 mod exponent(G)`.
pub fn choose_prime(g: &Group, min_bound: u64) -> FieldPrime {
    let e = g.exponent();
    let mut p = min_bound.max(2 * g.order() as u64 + 1);
    loop {
        if p % e == 1 % e && is_prime(p) {
            return FieldPrime { p, primitive_root: primitive_root(p), exponent: e };
        }
        p += 1;
    }
}

/// `count` distinct valid primes, starting at `choose_prime(g, min_bound)`.
pub fn choose_primes(g: &Group, min_bound: u64, count: usize) -> Vec<FieldPrime> {
    let mut out: Vec<FieldPrime> = Vec::with_capacity(count);
    let mut bound = min_bound;
    for _ in 0..count {
        let fp = choose_prime(g, bound);
        bound = fp.p + 1;
        out.push(fp);
    }
    out
}
