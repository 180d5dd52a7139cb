use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree - 1}` stored as its image array.
///
/// Ordering is lexicographic on the image array, which is the canonical
/// element order used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 0-based cycle notation such as `(0 1 2)(3 4)`; `e` or `()` is
    /// the identity. Commas between points are accepted.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        let mut images: Vec<u32> = (0..degree as u32).collect();
        if s == "e" || s == "1" || s.is_empty() || s == "()" {
            return Ok(Permutation { images });
        }
        let mut seen = alloc::vec![false; degree];
        let mut rest = s;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in cycle notation: {s}")));
            }
            let close = rest_trim.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s}")))?;
            let body = &rest_trim[1..close];
            let mut points = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point '{tok}' in {s}")))?;
                if v >= degree {
                    return Err(Error::Parse(format!("point {v} out of range for degree {degree}")));
                }
                if seen[v] {
                    return Err(Error::Parse(format!("point {v} repeated in {s}")));
                }
                seen[v] = true;
                points.push(v);
            }
            for k in 0..points.len() {
                images[points[k]] = points[(k + 1) % points.len()] as u32;
            }
            rest = &rest_trim[close + 1..];
        }
        Ok(Permutation { images })
    }

    /// Largest point mentioned in a cycle-notation string, if any.
    pub fn max_point(s: &str) -> Result<Option<usize>> {
        let mut max = None;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')') {
            if tok.is_empty() || tok == "e" {
                continue;
            }
            let v: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point '{tok}'")))?;
            max = Some(max.map_or(v, |m: usize| m.max(v)));
        }
        Ok(max)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles of length at least two, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Embeds into a larger degree, shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            f.write_str("(")?;
            let parts: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
            f.write_str(&parts.join(" "))?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles("(0 1 2)(3 4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::parse_cycles("e", 3).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_applies_left_first() {
        let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        // 0 -> 1 under a, then 1 -> 2 under b.
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::parse_cycles("(0 0)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 5)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1", 3).is_err());
    }
}
