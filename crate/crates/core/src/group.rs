//! Fully enumerated finite permutation groups.
//!
//! Elements are sorted by their image arrays, so the identity is always
//! element `0`. Conjugacy classes are computed eagerly and ordered by
//! `(element order, representative)`, where the representative is the
//! member with the lexicographically smallest cycle notation.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{lcm, Permutation};

/// Default cap on the order of enumerated groups.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Groups up to this order carry a dense multiplication table.
const TABLE_LIMIT: usize = 1024;

/// A conjugacy class as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub members: Vec<usize>,
    /// Member whose cycle notation is lexicographically minimal, comparing
    /// cycles as integer sequences: `(0 1)` precedes `(0 2)` and `(1 2)`.
    pub rep: usize,
    pub element_order: u32,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    name: Option<String>,
    symmetric_degree: Option<usize>,
    generators: Vec<usize>,
    elements: Vec<Permutation>,
    table: Option<Vec<u32>>,
    inverse: Vec<usize>,
    orders: Vec<u32>,
    exponent: u64,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl Group {
    /// Closes `generators` under multiplication.
    pub fn from_generators(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator {g} has degree {} but group degree is {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCap { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Permutation> = seen.into_iter().collect();
        let mut group = Self::assemble(degree, elements, None);
        group.generators = generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| group.index_of(g).expect("generator is in its closure"))
            .collect();
        group.generators.dedup();
        group.compute_classes();
        Ok(group)
    }

    /// Builds a group from a sorted, closed list of permutations (for example
    /// a centralizer). A small generating set is chosen greedily.
    pub fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut group = Self::assemble(degree, elements, None);
        let n = group.order();
        let mut covered = vec![false; n];
        covered[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        for cand in 1..n {
            if covered[cand] {
                continue;
            }
            gens.push(cand);
            // Re-close the generated subgroup.
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = group.mul(x, g);
                    if !covered[y] {
                        covered[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        group.generators = gens;
        group.compute_classes();
        group
    }

    fn assemble(degree: usize, elements: Vec<Permutation>, name: Option<String>) -> Self {
        let n = elements.len();
        let mut group = Group {
            degree,
            name,
            symmetric_degree: None,
            generators: Vec::new(),
            elements,
            table: None,
            inverse: Vec::new(),
            orders: Vec::new(),
            exponent: 1,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        if n <= TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let c = group.elements[a].compose(&group.elements[b]);
                    table[a * n + b] = group.index_of(&c).expect("closed") as u32;
                }
            }
            group.table = Some(table);
        }
        group.inverse = (0..n).map(|i| group.index_of(&group.elements[i].inverse()).expect("closed")).collect();
        group.orders = group.elements.iter().map(|e| e.order() as u32).collect();
        group.exponent = group.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));
        group
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = raw.len();
            class_of[x] = id;
            let mut members = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &self.generators {
                    let z = self.conj(g, y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjClass> = raw
            .into_iter()
            .map(|members| {
                let rep = *members.iter().min_by_key(|&&m| self.elements[m].cycles()).expect("classes are nonempty");
                ConjClass { element_order: self.orders[rep], rep, members }
            })
            .collect();
        classes.sort_by_cached_key(|c| (c.element_order, self.elements[c.rep].cycles()));
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `Some(n)` when the group was requested as the named symmetric group `Sn`.
    pub fn symmetric_degree(&self) -> Option<usize> {
        self.symmetric_degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Generator element indices (identity excluded).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => {
                let c = self.elements[a].compose(&self.elements[b]);
                self.index_of(&c).expect("group is closed")
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn center_order(&self) -> usize {
        self.classes.iter().filter(|c| c.size() == 1).count()
    }

    /// Elements commuting with `s`, as sorted indices.
    pub fn centralizer(&self, s: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mul(g, s) == self.mul(s, g)).collect()
    }

    /// Display name of an element in cycle notation.
    pub fn element_name(&self, a: usize) -> String {
        self.elements[a].to_string()
    }

    /// Parses an element in cycle notation.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let p = Permutation::parse_cycles(s, self.degree)?;
        self.index_of(&p).ok_or_else(|| Error::NotInGroup(s.to_string()))
    }
}

/// Parses a group spec: a name (`S3`, `A4`, `D4`, `C6`, `Q8`, `V4`), an
/// explicit generator list `perm:(0 1 2)(3 4);(0 1)`, or a direct product
/// such as `S3xC2` or `S3 x C2`.
pub fn parse_group(spec: &str, cap: usize) -> Result<Group> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let factors: Vec<&str> = spec.split('x').map(str::trim).collect();
    let mut parts: Vec<(usize, Vec<Permutation>)> = Vec::new();
    for f in &factors {
        parts.push(factor_generators(f)?);
    }
    let degree: usize = parts.iter().map(|p| p.0).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for (d, g) in &parts {
        gens.extend(g.iter().map(|p| p.shifted(offset, degree)));
        offset += d;
    }
    let mut group = Group::from_generators(degree, &gens, cap)?;
    group.name = Some(spec.to_string());
    if factors.len() == 1 {
        if let Some(n) = spec.strip_prefix('S').and_then(|r| r.parse::<usize>().ok()) {
            group.symmetric_degree = Some(n);
        }
    }
    Ok(group)
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    if pts.len() > 1 {
        for k in 0..pts.len() {
            images[pts[k]] = pts[(k + 1) % pts.len()] as u32;
        }
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

fn factor_generators(spec: &str) -> Result<(usize, Vec<Permutation>)> {
    if let Some(body) = spec.strip_prefix("perm:") {
        let pieces: Vec<&str> = body.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
        let mut degree = 1;
        for p in &pieces {
            if let Some(m) = Permutation::max_point(p)? {
                degree = degree.max(m + 1);
            }
        }
        let gens = pieces.iter().map(|p| Permutation::parse_cycles(p, degree)).collect::<Result<Vec<_>>>()?;
        return Ok((degree, gens));
    }
    if spec == "Q8" {
        // Regular representation of the quaternion group.
        let i = Permutation::parse_cycles("(0 1 3 6)(2 5 7 4)", 8)?;
        let j = Permutation::parse_cycles("(0 2 3 7)(1 4 6 5)", 8)?;
        return Ok((8, vec![i, j]));
    }
    if spec == "V4" || spec == "K4" {
        return factor_generators("D2");
    }
    let (kind, num) = spec.split_at(1);
    let n: usize = num.parse().map_err(|_| Error::Parse(format!("unknown group name '{spec}'")))?;
    match kind {
        "C" | "Z" => {
            if n == 0 {
                return Err(Error::Parse("C0 is not a group".into()));
            }
            Ok((n, vec![cycle(0..n, n)]))
        }
        "S" => {
            if n <= 1 {
                return Ok((1, Vec::new()));
            }
            Ok((n, vec![cycle([0, 1], n), cycle(0..n, n)]))
        }
        "A" => {
            if n <= 2 {
                return Ok((n.max(1), Vec::new()));
            }
            let long = if n % 2 == 1 { cycle(0..n, n) } else { cycle(1..n, n) };
            Ok((n, vec![cycle([0, 1, 2], n), long]))
        }
        "D" => match n {
            0 => Err(Error::Parse("D0 is not a group".into())),
            1 => Ok((2, vec![cycle([0, 1], 2)])),
            2 => {
                let a = Permutation::parse_cycles("(0 1)(2 3)", 4)?;
                let b = Permutation::parse_cycles("(0 2)(1 3)", 4)?;
                Ok((4, vec![a, b]))
            }
            _ => {
                let mut refl: Vec<u32> = (0..n as u32).collect();
                for (i, r) in refl.iter_mut().enumerate() {
                    *r = ((n - i) % n) as u32;
                }
                Ok((n, vec![cycle(0..n, n), Permutation::from_images(refl)?]))
            }
        },
        _ => Err(Error::Parse(format!("unknown group name '{spec}'"))),
    }
}
