//! Ramification systems with irreducible representations (RSRs), their type,
//! isomorphism tests, and the census of isomorphism classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphism::{automorphisms, known_inner_only, AutGroup, DEFAULT_AUT_CAP};
use crate::chartable::{character_table, CharTable};
use crate::classes::ClassCtx;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::prime::{choose_prime, FieldPrime};
use crate::quiver::Ramification;

/// A group with a splitting prime and, for every class, the default context
/// (`u = u_0`) and the canonical character table of `Z_{u_0(C)}`.
#[derive(Clone, Debug)]
pub struct GroupContext {
    group: Arc<Group>,
    prime: FieldPrime,
    classes: Vec<ClassCtx>,
    tables: Vec<CharTable>,
}

impl GroupContext {
    pub fn new(group: Arc<Group>, prime: FieldPrime) -> Result<Self> {
        if FieldPrime::for_group(&group, prime.p) != Some(prime) {
            return Err(Error::Splitting(format!("p = {} is not a splitting prime for this group", prime.p)));
        }
        let classes: Vec<ClassCtx> = (0..group.classes().len()).map(|c| ClassCtx::new(&group, c)).collect();
        let tables =
            classes.iter().map(|c| character_table(c.centralizer().group(), &prime)).collect::<Result<Vec<_>>>()?;
        Ok(GroupContext { group, prime, classes, tables })
    }

    pub fn with_default_prime(group: Arc<Group>) -> Result<Self> {
        let prime = choose_prime(&group, 0);
        Self::new(group, prime)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn prime(&self) -> &FieldPrime {
        &self.prime
    }

    pub fn class_ctx(&self, class: usize) -> &ClassCtx {
        &self.classes[class]
    }

    /// Canonical character table of `Z_{u_0(C)}`.
    pub fn table(&self, class: usize) -> &CharTable {
        &self.tables[class]
    }

    /// Whether `Aut G = Inn G` is known, either by name or by search within
    /// the automorphism cap. `None` when neither applies.
    pub fn inner_only(&self) -> Option<bool> {
        if known_inner_only(&self.group) {
            return Some(true);
        }
        automorphisms(&self.group, DEFAULT_AUT_CAP).ok().map(|a| a.inner_only)
    }
}

/// The data attached to one ramified class.
#[derive(Clone, Debug)]
pub struct RsrClass {
    pub class_index: usize,
    pub r: u32,
    /// Context for the chosen `u(C)` with its default transversal.
    pub ctx: ClassCtx,
    /// Canonical character table of `Z_{u(C)}`.
    pub table: CharTable,
    /// Character indices of the attached representations, in slot order.
    pub irreps: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Rsr {
    context: Arc<GroupContext>,
    ramification: Ramification,
    classes: Vec<RsrClass>,
}

/// Per ramified class, the multiplicity of each character of `Z_{u_0(C)}`
/// in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RsrType {
    pub classes: Vec<(usize, Vec<u32>)>,
}

impl Rsr {
    /// Validated RSR. `u` may omit classes, which then use `u_0(C)`; `irreps`
    /// must list the representations of exactly the ramified classes.
    pub fn new(
        context: Arc<GroupContext>,
        ramification: Ramification,
        u: &BTreeMap<usize, usize>,
        irreps: &BTreeMap<usize, Vec<usize>>,
    ) -> Result<Self> {
        let g = context.group().clone();
        ramification.validate(&g)?;
        for &c in irreps.keys() {
            if ramification.get(c) == 0 {
                return Err(Error::InvalidRsr(format!("representations given for unramified class {c}")));
            }
        }
        for &c in u.keys() {
            if c >= g.classes().len() {
                return Err(Error::InvalidRsr(format!("class index {c} out of range")));
            }
        }
        let mut classes = Vec::new();
        for (c, r) in ramification.support() {
            let list = irreps.get(&c).cloned().unwrap_or_default();
            let (ctx, table) = match u.get(&c) {
                Some(&rep) if rep != context.class_ctx(c).rep() => {
                    if rep >= g.order() {
                        return Err(Error::NotInGroup(format!("element index {rep}")));
                    }
                    let ctx = ClassCtx::with_rep(&g, c, rep)?;
                    let table = character_table(ctx.centralizer().group(), context.prime())?;
                    (ctx, table)
                }
                _ => (context.class_ctx(c).clone(), context.table(c).clone()),
            };
            if let Some(&bad) = list.iter().find(|&&i| i >= table.len()) {
                return Err(Error::InvalidRsr(format!(
                    "class {c}: character index {bad} out of range 0..{}",
                    table.len()
                )));
            }
            let found: u32 = list.iter().map(|&i| table.degrees[i]).sum();
            if found != r {
                return Err(Error::DegreeSum { class: c, expected: r, found });
            }
            classes.push(RsrClass { class_index: c, r, ctx, table, irreps: list });
        }
        Ok(Rsr { context, ramification, classes })
    }

    /// RSR on `u_0` realizing a type; each character is repeated by its
    /// multiplicity, in canonical order.
    pub fn from_type(context: Arc<GroupContext>, ty: &RsrType) -> Result<Self> {
        let mut ram = Ramification::zero();
        let mut irreps = BTreeMap::new();
        for (c, mult) in &ty.classes {
            if *c >= context.group().classes().len() {
                return Err(Error::InvalidRsr(format!("class index {c} out of range")));
            }
            let table = context.table(*c);
            if mult.len() != table.len() {
                return Err(Error::InvalidRsr(format!(
                    "class {c}: {} multiplicities for {} characters",
                    mult.len(),
                    table.len()
                )));
            }
            let r: u32 = mult.iter().zip(&table.degrees).map(|(n, d)| n * d).sum();
            if irreps.insert(*c, Vec::new()).is_some() {
                return Err(Error::InvalidRsr(format!("class {c} listed twice")));
            }
            let list = irreps.get_mut(c).expect("just inserted");
            for (i, &n) in mult.iter().enumerate() {
                list.extend(core::iter::repeat_n(i, n as usize));
            }
            ram.set(*c, r);
        }
        irreps.retain(|_, v| !v.is_empty());
        Rsr::new(context, ram, &BTreeMap::new(), &irreps)
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.context
    }

    pub fn group(&self) -> &Arc<Group> {
        self.context.group()
    }

    pub fn prime(&self) -> &FieldPrime {
        self.context.prime()
    }

    pub fn ramification(&self) -> &Ramification {
        &self.ramification
    }

    pub fn classes(&self) -> &[RsrClass] {
        &self.classes
    }

    pub fn class(&self, class_index: usize) -> Option<&RsrClass> {
        self.classes.iter().find(|c| c.class_index == class_index)
    }

    /// `u(C)` for every ramified class.
    pub fn u(&self) -> BTreeMap<usize, usize> {
        self.classes.iter().map(|c| (c.class_index, c.ctx.rep())).collect()
    }

    pub fn irreps(&self) -> BTreeMap<usize, Vec<usize>> {
        self.classes.iter().map(|c| (c.class_index, c.irreps.clone())).collect()
    }

    /// `dim V = sum_C r_C |C|`.
    pub fn dim_v(&self) -> usize {
        self.ramification.out_degree(self.group())
    }

    /// Conjugates `u(C)` to `h^-1 u(C) h` and replaces every representation
    /// by `z' -> rho(h z' h^-1)` on the new centralizer. Classes missing from
    /// `h` are left alone.
    pub fn twist(&self, h: &BTreeMap<usize, usize>) -> Result<Rsr> {
        let g = self.group().clone();
        let mut u = self.u();
        let mut irreps = self.irreps();
        for rc in &self.classes {
            let Some(&hc) = h.get(&rc.class_index) else { continue };
            if hc >= g.order() {
                return Err(Error::NotInGroup(format!("element index {hc}")));
            }
            let new_rep = g.conj(hc, rc.ctx.rep());
            if new_rep == rc.ctx.rep() {
                // inner on the centralizer, so characters are unchanged
                continue;
            }
            let new_ctx = ClassCtx::with_rep(&g, rc.class_index, new_rep)?;
            let new_table = character_table(new_ctx.centralizer().group(), self.prime())?;
            let hinv = g.inv(hc);
            let map = |z_parent: usize| g.mul(g.mul(hc, z_parent), hinv);
            let translated = translate_characters(&rc.table, &rc.ctx, &new_table, &new_ctx, &rc.irreps, map)?;
            u.insert(rc.class_index, new_rep);
            irreps.insert(rc.class_index, translated);
        }
        Rsr::new(self.context.clone(), self.ramification.clone(), &u, &irreps)
    }

    /// Equivalent RSR with `u = u_0`.
    pub fn normalize_u(&self) -> Result<Rsr> {
        let mut h = BTreeMap::new();
        for rc in &self.classes {
            let u0 = self.context.class_ctx(rc.class_index).rep();
            let theta = rc.ctx.theta_of(u0).expect("u_0 lies in the class");
            h.insert(rc.class_index, rc.ctx.transversal()[theta]);
        }
        self.twist(&h)
    }

    pub fn rsr_type(&self) -> Result<RsrType> {
        let n = self.normalize_u()?;
        let classes = n
            .classes
            .iter()
            .map(|rc| {
                let mut m = vec![0u32; rc.table.len()];
                for &i in &rc.irreps {
                    m[i] += 1;
                }
                (rc.class_index, m)
            })
            .collect();
        Ok(RsrType { classes })
    }

    /// The same RSR over another splitting prime. Characters are matched by
    /// their eigenvalue multiplicities with respect to the fixed roots of unity.
    pub fn at_prime(&self, prime: FieldPrime) -> Result<Rsr> {
        if prime == *self.prime() {
            return Ok(self.clone());
        }
        let ctx = Arc::new(GroupContext::new(self.group().clone(), prime)?);
        let mut irreps = BTreeMap::new();
        for rc in &self.classes {
            let z = rc.ctx.centralizer().group();
            let new_table = character_table(z, &prime)?;
            let mut list = Vec::new();
            for &chi in &rc.irreps {
                let sig = rc.table.signature(z, self.prime(), chi)?;
                let idx = new_table
                    .index_of_signature(z, &prime, &sig)?
                    .ok_or_else(|| Error::Splitting(format!("no character mod {} matches character {chi}", prime.p)))?;
                list.push(idx);
            }
            irreps.insert(rc.class_index, list);
        }
        Rsr::new(ctx, self.ramification.clone(), &self.u(), &irreps)
    }
}

/// Re-identifies characters of `Z_old` as characters of `Z_new` through an
/// isomorphism given on parent elements, `map: Z_new -> Z_old`.
fn translate_characters(
    old_table: &CharTable,
    old_ctx: &ClassCtx,
    new_table: &CharTable,
    new_ctx: &ClassCtx,
    chars: &[usize],
    map: impl Fn(usize) -> usize,
) -> Result<Vec<usize>> {
    let zo = old_ctx.centralizer();
    let zn = new_ctx.centralizer();
    let reps: Vec<usize> = zn
        .group()
        .classes()
        .iter()
        .map(|k| {
            zo.from_parent(map(zn.to_parent(k.rep)))
                .ok_or_else(|| Error::DomainMismatch("map does not land in the centralizer".into()))
        })
        .collect::<Result<_>>()?;
    chars
        .iter()
        .map(|&chi| {
            let row: Vec<u64> = reps.iter().map(|&z| old_table.at(zo.group(), chi, z)).collect();
            new_table.index_of_row(&row).ok_or_else(|| Error::DomainMismatch(format!("character {chi} has no image")))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsoMode {
    /// Compare types; valid when `Aut G = Inn G`.
    AssumeInner,
    /// Search all automorphisms of `G`.
    SearchAut,
}

/// RSR isomorphism test.
pub fn isomorphic(a: &Rsr, b: &Rsr, mode: IsoMode) -> Result<bool> {
    isomorphic_with(a, b, mode, None)
}

/// As [`isomorphic`], reusing a prepared [`IsoSearch`] in
/// [`IsoMode::SearchAut`].
pub fn isomorphic_with(a: &Rsr, b: &Rsr, mode: IsoMode, search: Option<&IsoSearch>) -> Result<bool> {
    let g = a.group();
    if **g != **b.group() {
        return Err(Error::DomainMismatch("RSRs over different groups".into()));
    }
    if a.prime() != b.prime() {
        return Err(Error::DomainMismatch("RSRs over different primes".into()));
    }
    match mode {
        IsoMode::AssumeInner => {
            match a.context.inner_only() {
                Some(true) => {}
                Some(false) => return Err(Error::ModeInapplicable("the group has outer automorphisms".into())),
                None => {
                    return Err(Error::ModeInapplicable(format!(
                        "Aut G = Inn G is not known and |G| = {} exceeds the search cap",
                        g.order()
                    )))
                }
            }
            Ok(a.rsr_type()? == b.rsr_type()?)
        }
        IsoMode::SearchAut => {
            let owned;
            let search = match search {
                Some(s) => s,
                None => {
                    let aut = automorphisms(g, DEFAULT_AUT_CAP).map_err(|e| Error::ModeInapplicable(format!("{e}")))?;
                    owned = IsoSearch::new(&a.context, &aut)?;
                    &owned
                }
            };
            if search.classes != g.classes().len() {
                return Err(Error::DomainMismatch("search prepared for another group".into()));
            }
            Ok(search.types_isomorphic(&a.rsr_type()?, &b.rsr_type()?))
        }
    }
}

/// The action of a set of automorphisms on RSR types. For each automorphism
/// `phi` and class `C` it stores the class `C'` of `phi(u_0(C))` and the
/// pull-back of characters of `Z_{u_0(C')}` to characters of `Z_{u_0(C)}`.
#[derive(Clone, Debug)]
pub struct IsoSearch {
    classes: usize,
    maps: Vec<Vec<(usize, Vec<usize>)>>,
}

impl IsoSearch {
    pub fn new(ctx: &GroupContext, aut: &AutGroup) -> Result<Self> {
        let g = ctx.group();
        let k = g.classes().len();
        let mut maps = Vec::with_capacity(aut.elements.len());
        for phi in &aut.elements {
            let phi_inv = phi.inverse();
            let mut per_class = Vec::with_capacity(k);
            for c in 0..k {
                let ca = ctx.class_ctx(c);
                let image = g.class_of(phi.map[ca.rep()]);
                let cb = ctx.class_ctx(image);
                // h with phi(h^-1 u h) = u'
                let theta = ca.theta_of(phi_inv[cb.rep()]).expect("phi maps classes to classes");
                let h = ca.transversal()[theta];
                let hinv = g.inv(h);
                let (za, zb) = (ca.centralizer(), cb.centralizer());
                let reps: Vec<usize> = za
                    .group()
                    .classes()
                    .iter()
                    .map(|kc| {
                        let w = phi.map[g.mul(g.mul(hinv, za.to_parent(kc.rep)), h)];
                        zb.from_parent(w)
                            .ok_or_else(|| Error::DomainMismatch("automorphism does not map centralizers".into()))
                    })
                    .collect::<Result<_>>()?;
                let (ta, tb) = (ctx.table(c), ctx.table(image));
                let pull = (0..tb.len())
                    .map(|chi| {
                        let row: Vec<u64> = reps.iter().map(|&w| tb.at(zb.group(), chi, w)).collect();
                        ta.index_of_row(&row)
                            .ok_or_else(|| Error::DomainMismatch(format!("character {chi} has no pull-back")))
                    })
                    .collect::<Result<_>>()?;
                per_class.push((image, pull));
            }
            maps.push(per_class);
        }
        Ok(IsoSearch { classes: k, maps })
    }

    /// Whether some automorphism carries type `a` to type `b`.
    pub fn types_isomorphic(&self, a: &RsrType, b: &RsrType) -> bool {
        if a.classes.len() != b.classes.len() {
            return false;
        }
        self.maps.iter().any(|per_class| {
            a.classes.iter().all(|(c, ma)| {
                let (image, pull) = &per_class[*c];
                match b.classes.iter().find(|(cb, _)| cb == image) {
                    Some((_, mb)) => pull.iter().zip(mb).all(|(&i, &n)| ma[i] == n),
                    None => false,
                }
            })
        })
    }
}

/// Number of ways to write `r` as `sum n_i d_i` with `n_i >= 0`.
fn compositions(degrees: &[u32], r: u32) -> BigUint {
    let r = r as usize;
    let mut ways = vec![BigUint::from(0u32); r + 1];
    ways[0] = BigUint::one();
    for &d in degrees {
        let d = d as usize;
        for s in d..=r {
            let prev = ways[s - d].clone();
            ways[s] += prev;
        }
    }
    ways[r].clone()
}

/// `prod_C tau_C`, the number of isomorphism classes of RSRs on `ram` when
/// `Aut G = Inn G`.
pub fn count_classes(ctx: &GroupContext, ram: &Ramification) -> BigUint {
    ram.support().fold(BigUint::one(), |acc, (c, r)| acc * compositions(&ctx.table(c).degrees, r))
}

/// Multiplicity vectors with `sum n_i d_i = r`, in descending lexicographic order.
fn class_types(degrees: &[u32], r: u32) -> Vec<Vec<u32>> {
    fn rec(degrees: &[u32], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = left / degrees[k];
        for n in (0..=max).rev() {
            cur.push(n);
            rec(degrees, k + 1, left - n * degrees[k], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, r, &mut Vec::new(), &mut out);
    out
}

/// One type per isomorphism class, first ramified class varying slowest.
pub fn enumerate_types(ctx: &GroupContext, ram: &Ramification) -> Vec<RsrType> {
    let per_class: Vec<(usize, Vec<Vec<u32>>)> =
        ram.support().map(|(c, r)| (c, class_types(&ctx.table(c).degrees, r))).collect();
    let mut out = Vec::new();
    let mut cur: Vec<(usize, Vec<u32>)> = Vec::new();
    fn rec(per: &[(usize, Vec<Vec<u32>>)], cur: &mut Vec<(usize, Vec<u32>)>, out: &mut Vec<RsrType>) {
        match per.split_first() {
            None => out.push(RsrType { classes: cur.clone() }),
            Some(((c, options), rest)) => {
                for m in options {
                    cur.push((*c, m.clone()));
                    rec(rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(&per_class, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, DEFAULT_ORDER_CAP};
    use crate::quiver::parse_ramification;

    fn s3() -> Arc<GroupContext> {
        let g = Arc::new(parse_group("S3", DEFAULT_ORDER_CAP).unwrap());
        Arc::new(GroupContext::with_default_prime(g).unwrap())
    }

    #[test]
    fn degree_sum_enforced() {
        let ctx = s3();
        let ram = parse_ramification(ctx.group(), "e:2").unwrap();
        let ok = |v: Vec<usize>| Rsr::new(ctx.clone(), ram.clone(), &BTreeMap::new(), &BTreeMap::from([(0, v)]));
        assert!(ok(vec![2]).is_ok());
        assert!(ok(vec![0, 1]).is_ok());
        assert!(matches!(ok(vec![0]), Err(Error::DegreeSum { .. })));
    }

    #[test]
    fn census_of_two_loops() {
        let ctx = s3();
        let ram = parse_ramification(ctx.group(), "e:2").unwrap();
        assert_eq!(count_classes(&ctx, &ram), BigUint::from(4u32));
        let types = enumerate_types(&ctx, &ram);
        let m: Vec<Vec<u32>> = types.iter().map(|t| t.classes[0].1.clone()).collect();
        assert_eq!(m, [vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]);
        assert_eq!(count_classes(&ctx, &Ramification::zero()), BigUint::one());
        assert_eq!(enumerate_types(&ctx, &Ramification::zero()), [RsrType::default()]);
    }

    #[test]
    fn order_of_representations_is_irrelevant() {
        let ctx = s3();
        let ram = parse_ramification(ctx.group(), "e:2").unwrap();
        let mk =
            |v: Vec<usize>| Rsr::new(ctx.clone(), ram.clone(), &BTreeMap::new(), &BTreeMap::from([(0, v)])).unwrap();
        for mode in [IsoMode::AssumeInner, IsoMode::SearchAut] {
            assert!(isomorphic(&mk(vec![0, 1]), &mk(vec![1, 0]), mode).unwrap());
            assert!(!isomorphic(&mk(vec![0, 0]), &mk(vec![1, 1]), mode).unwrap());
        }
    }

    #[test]
    fn normalize_moves_u_to_u0() {
        let ctx = s3();
        let g = ctx.group().clone();
        let ram = parse_ramification(&g, "(0 1):1").unwrap();
        let u02 = g.parse_element("(0 2)").unwrap();
        let a = Rsr::new(ctx.clone(), ram, &BTreeMap::from([(1, u02)]), &BTreeMap::from([(1, vec![1])])).unwrap();
        let n = a.normalize_u().unwrap();
        assert_eq!(n.u()[&1], g.parse_element("(0 1)").unwrap());
        assert_eq!(n.irreps()[&1], [1]);
        assert_eq!(n.rsr_type().unwrap(), a.rsr_type().unwrap());
    }
}
