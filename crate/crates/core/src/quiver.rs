//! Ramifications and Hopf quivers.
//!
//! Arrows from `x` to `y = x c` (with `c` in a ramified class `C`) are labeled
//! `(i, j)`: `i` picks one of the irreducible representations attached to `C`
//! and `j` a basis vector of it. Arrows are numbered densely as
//! `x * m + local`, where `m` is the out-degree of every vertex and `local`
//! enumerates `(class, position of c in the class, i, j)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::rsr::Rsr;

/// Formal sum `sum r_C C`, stored sparsely (zero coefficients are dropped).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ramification {
    coeffs: BTreeMap<usize, u32>,
}

impl Ramification {
    pub fn zero() -> Self {
        Ramification::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut r = Ramification::zero();
        for (c, n) in pairs {
            r.set(c, n);
        }
        r
    }

    pub fn set(&mut self, class: usize, count: u32) {
        if count == 0 {
            self.coeffs.remove(&class);
        } else {
            self.coeffs.insert(class, count);
        }
    }

    pub fn get(&self, class: usize) -> u32 {
        self.coeffs.get(&class).copied().unwrap_or(0)
    }

    /// Ramified classes with their coefficients, in class order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coeffs.iter().map(|(&c, &n)| (c, n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn validate(&self, g: &Group) -> Result<()> {
        match self.coeffs.keys().find(|&&c| c >= g.classes().len()) {
            Some(c) => Err(Error::InvalidRsr(format!("class index {c} out of range"))),
            None => Ok(()),
        }
    }

    /// `sum_C r_C |C|`, the out-degree of each vertex of the Hopf quiver.
    pub fn out_degree(&self, g: &Group) -> usize {
        self.support().map(|(c, n)| n as usize * g.classes()[c].size()).sum()
    }

    /// Spec string in the grammar accepted by [`parse_ramification`].
    pub fn to_spec(&self, g: &Group) -> String {
        let parts: Vec<String> =
            self.support().map(|(c, n)| format!("{}:{n}", g.element_name(g.classes()[c].rep))).collect();
        parts.join(",")
    }
}

/// Parses `"rep:count,rep:count"`, with representatives in cycle notation
/// (`e` for the identity). Each class may be named once.
pub fn parse_ramification(g: &Group, spec: &str) -> Result<Ramification> {
    let mut r = Ramification::zero();
    let mut named = BTreeMap::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (rep, count) =
            item.rsplit_once(':').ok_or_else(|| Error::Parse(format!("expected rep:count, got '{item}'")))?;
        let x = g.parse_element(rep.trim())?;
        let count: i64 = count.trim().parse().map_err(|_| Error::Parse(format!("bad count in '{item}'")))?;
        if count < 0 {
            return Err(Error::Parse(format!("negative count in '{item}'")));
        }
        let count = u32::try_from(count).map_err(|_| Error::Parse(format!("count too large in '{item}'")))?;
        let class = g.class_of(x);
        if let Some(prev) = named.insert(class, String::from(rep.trim())) {
            return Err(Error::Parse(format!("'{}' and '{prev}' name the same conjugacy class", rep.trim())));
        }
        r.set(class, count);
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId {
    /// Source vertex.
    pub x: usize,
    /// Target vertex.
    pub y: usize,
    pub class_index: usize,
    /// Slot in the list of representations attached to the class (0-based).
    pub i: usize,
    /// Basis index within the slot's representation (0-based).
    pub j: usize,
}

/// Per-class layout of the local arrow labels.
#[derive(Clone, Debug)]
pub struct QuiverClass {
    pub class_index: usize,
    pub r: u32,
    /// Class members in element order; position `q` means `x^-1 y = members[q]`.
    pub members: Vec<usize>,
    /// Degree of each slot `i`.
    pub slot_degrees: Vec<u32>,
    /// First local label of this class.
    pub offset: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalLabel {
    /// Index into [`HopfQuiver::classes`].
    pub slot_class: usize,
    pub position: usize,
    pub i: usize,
    pub j: usize,
    /// Flattened `(i, j)` within the class, in `0..r_C`.
    pub k: usize,
}

#[derive(Clone, Debug)]
pub struct HopfQuiver {
    group: Arc<Group>,
    ramification: Ramification,
    classes: Vec<QuiverClass>,
    locals: Vec<LocalLabel>,
    /// `class position lookup`: element index -> (slot class, position).
    position_of: Vec<Option<(usize, usize)>>,
}

impl HopfQuiver {
    /// Builds the quiver given, for each ramified class, the degrees of the
    /// attached representations (which must sum to `r_C`).
    pub fn new(group: Arc<Group>, ramification: Ramification, slots: &BTreeMap<usize, Vec<u32>>) -> Result<Self> {
        ramification.validate(&group)?;
        let mut classes = Vec::new();
        let mut locals = Vec::new();
        let mut position_of = alloc::vec![None; group.order()];
        for (c, r) in ramification.support() {
            let slot_degrees = slots.get(&c).cloned().unwrap_or_else(|| alloc::vec![1; r as usize]);
            let sum: u32 = slot_degrees.iter().sum();
            if sum != r {
                return Err(Error::DegreeSum { class: c, expected: r, found: sum });
            }
            let members = group.classes()[c].members.clone();
            let sc = classes.len();
            for (q, &m) in members.iter().enumerate() {
                position_of[m] = Some((sc, q));
            }
            let offset = locals.len();
            for position in 0..members.len() {
                let mut k = 0;
                for (i, &d) in slot_degrees.iter().enumerate() {
                    for j in 0..d as usize {
                        locals.push(LocalLabel { slot_class: sc, position, i, j, k });
                        k += 1;
                    }
                }
            }
            classes.push(QuiverClass { class_index: c, r, members, slot_degrees, offset });
        }
        Ok(HopfQuiver { group, ramification, classes, locals, position_of })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ramification(&self) -> &Ramification {
        &self.ramification
    }

    pub fn classes(&self) -> &[QuiverClass] {
        &self.classes
    }

    /// Arrows leaving each vertex.
    pub fn out_degree(&self) -> usize {
        self.locals.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.group.order() * self.locals.len()
    }

    pub fn local(&self, local: usize) -> &LocalLabel {
        &self.locals[local]
    }

    /// Local label index of `(class slot, position, k)`.
    pub fn local_index(&self, slot_class: usize, position: usize, k: usize) -> usize {
        let qc = &self.classes[slot_class];
        qc.offset + position * qc.r as usize + k
    }

    #[inline]
    pub fn source(&self, arrow: usize) -> usize {
        arrow / self.locals.len()
    }

    #[inline]
    pub fn target(&self, arrow: usize) -> usize {
        let m = self.locals.len();
        let l = &self.locals[arrow % m];
        self.group.mul(arrow / m, self.classes[l.slot_class].members[l.position])
    }

    pub fn arrow(&self, arrow: usize) -> ArrowId {
        let m = self.locals.len();
        let l = &self.locals[arrow % m];
        ArrowId {
            x: arrow / m,
            y: self.target(arrow),
            class_index: self.classes[l.slot_class].class_index,
            i: l.i,
            j: l.j,
        }
    }

    /// Index of the arrow from `x` to `x c`, where `c` is a ramified class
    /// member, with flattened label `k`.
    pub fn arrow_index(&self, x: usize, c: usize, k: usize) -> Option<usize> {
        let (sc, q) = self.position_of.get(c).copied().flatten()?;
        if k >= self.classes[sc].r as usize {
            return None;
        }
        Some(x * self.locals.len() + self.local_index(sc, q, k))
    }

    pub fn index_of(&self, a: &ArrowId) -> Option<usize> {
        if a.x >= self.group.order() || a.y >= self.group.order() {
            return None;
        }
        let c = self.group.mul(self.group.inv(a.x), a.y);
        let (sc, _) = self.position_of[c]?;
        let qc = &self.classes[sc];
        if qc.class_index != a.class_index || a.i >= qc.slot_degrees.len() || a.j >= qc.slot_degrees[a.i] as usize {
            return None;
        }
        let k = qc.slot_degrees[..a.i].iter().sum::<u32>() as usize + a.j;
        self.arrow_index(a.x, c, k)
    }

    /// All arrows from `x` to `y`.
    pub fn arrows_between(&self, x: usize, y: usize) -> Vec<usize> {
        let c = self.group.mul(self.group.inv(x), y);
        match self.position_of[c] {
            Some((sc, q)) => {
                let r = self.classes[sc].r as usize;
                (0..r).map(|k| x * self.locals.len() + self.local_index(sc, q, k)).collect()
            }
            None => Vec::new(),
        }
    }

    /// `(slot class, position)` of a ramified class member.
    pub fn position_of(&self, c: usize) -> Option<(usize, usize)> {
        self.position_of.get(c).copied().flatten()
    }

    /// Number of paths of length `n`: `|G| m^n`.
    pub fn path_count(&self, n: u32) -> BigUint {
        BigUint::from(self.group.order()) * BigUint::from(self.locals.len()).pow(n)
    }
}

/// Hopf quiver of an RSR, with slots labeled by its representations.
pub fn build_quiver(rsr: &Rsr) -> HopfQuiver {
    let slots: BTreeMap<usize, Vec<u32>> =
        rsr.classes().iter().map(|c| (c.class_index, c.irreps.iter().map(|&i| c.table.degrees[i]).collect())).collect();
    HopfQuiver::new(rsr.group().clone(), rsr.ramification().clone(), &slots)
        .expect("a valid RSR has consistent degree sums")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, DEFAULT_ORDER_CAP};

    #[test]
    fn parse_examples() {
        let g = parse_group("S3", DEFAULT_ORDER_CAP).unwrap();
        let r = parse_ramification(&g, "e:2").unwrap();
        assert_eq!(r.support().collect::<Vec<_>>(), [(0, 2)]);
        assert!(parse_ramification(&g, "").unwrap().is_zero());
        let r = parse_ramification(&g, "(0 1):1,(0 1 2):2").unwrap();
        assert_eq!(r.support().count(), 2);
        assert!(parse_ramification(&g, "(0 1):-1").is_err());
        assert!(parse_ramification(&g, "(0 1):1,(1 2):1").is_err());
        assert!(parse_ramification(&g, "(0 3):1").is_err());
    }

    #[test]
    fn arrow_indexing_round_trips() {
        let g = Arc::new(parse_group("S3", DEFAULT_ORDER_CAP).unwrap());
        let r = parse_ramification(&g, "(0 1):3,(0 1 2):1").unwrap();
        let slots = BTreeMap::from([(1, alloc::vec![1, 2])]);
        let q = HopfQuiver::new(g.clone(), r, &slots).unwrap();
        assert_eq!(q.out_degree(), 3 * 3 + 2);
        for a in 0..q.arrow_count() {
            let id = q.arrow(a);
            assert_eq!(q.index_of(&id), Some(a));
            assert_eq!(g.class_of(g.mul(g.inv(id.x), id.y)), id.class_index);
        }
        for x in 0..6 {
            for y in 0..6 {
                let c = g.class_of(g.mul(g.inv(x), y));
                let expect = [0, 3, 1][c];
                assert_eq!(q.arrows_between(x, y).len(), expect);
            }
        }
    }
}
