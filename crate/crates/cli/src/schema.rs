//! File formats: RSR and RSR-type JSON, reports, graded dimensions.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfquiver::{GradedDims, Group, GroupContext, Ramification, Report, Rsr, RsrType};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A class named by its index or by any member in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassRef {
    Index(usize),
    Member(String),
}

impl ClassRef {
    pub fn resolve(&self, g: &Group) -> Result<usize, CliError> {
        match self {
            ClassRef::Index(i) if *i < g.classes().len() => Ok(*i),
            ClassRef::Index(i) => Err(CliError::Input(format!("class index {i} out of range"))),
            ClassRef::Member(s) => Ok(g.class_of(g.parse_element(s)?)),
        }
    }

    /// Canonical name: the default representative of the class.
    pub fn of(g: &Group, class: usize) -> ClassRef {
        ClassRef::Member(g.element_name(g.classes()[class].rep))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UEntry {
    pub class: ClassRef,
    pub rep: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RhoEntry {
    pub class: ClassRef,
    pub irreps: Vec<usize>,
}

/// `{group, prime, u: [{class, rep}], rho: [{class, irreps}]}`. The
/// ramification is implied by the degrees in `rho`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RsrJson {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default)]
    pub u: Vec<UEntry>,
    #[serde(default)]
    pub rho: Vec<RhoEntry>,
}

impl RsrJson {
    pub fn from_rsr(group_spec: &str, rsr: &Rsr) -> Self {
        let g = rsr.group();
        let u = rsr
            .classes()
            .iter()
            .map(|c| UEntry { class: ClassRef::of(g, c.class_index), rep: g.element_name(c.ctx.rep()) })
            .collect();
        let rho = rsr
            .classes()
            .iter()
            .map(|c| RhoEntry { class: ClassRef::of(g, c.class_index), irreps: c.irreps.clone() })
            .collect();
        RsrJson { group: group_spec.to_string(), prime: Some(rsr.prime().p), u, rho }
    }

    /// Builds the RSR on a context for the same group and prime.
    pub fn to_rsr(&self, ctx: Arc<GroupContext>) -> Result<Rsr, CliError> {
        let g = ctx.group().clone();
        let mut u = BTreeMap::new();
        for e in &self.u {
            let c = e.class.resolve(&g)?;
            let rep = g.parse_element(&e.rep)?;
            if g.class_of(rep) != c {
                return Err(CliError::Input(format!("u: {} is not in class {c}", e.rep)));
            }
            if u.insert(c, rep).is_some() {
                return Err(CliError::Input(format!("u: class {c} listed twice")));
            }
        }
        let mut irreps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in &self.rho {
            let c = e.class.resolve(&g)?;
            if irreps.insert(c, e.irreps.clone()).is_some() {
                return Err(CliError::Input(format!("rho: class {c} listed twice")));
            }
        }
        let mut ram = Ramification::zero();
        for (&c, list) in &irreps {
            let table = match u.get(&c) {
                Some(&rep) => {
                    let ctx_c = hopfquiver::ClassCtx::with_rep(&g, c, rep)?;
                    hopfquiver::character_table(ctx_c.centralizer().group(), ctx.prime())?
                }
                None => ctx.table(c).clone(),
            };
            let mut r = 0u32;
            for &i in list {
                let d = table.degrees.get(i).ok_or_else(|| CliError::Input(format!("class {c}: no character {i}")))?;
                r += d;
            }
            ram.set(c, r);
        }
        u.retain(|c, _| ram.get(*c) != 0);
        irreps.retain(|_, v| !v.is_empty());
        Ok(Rsr::new(ctx, ram, &u, &irreps)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeEntry {
    pub class: ClassRef,
    pub multiplicities: Vec<u32>,
}

pub fn type_json(g: &Group, ty: &RsrType) -> Vec<TypeEntry> {
    ty.classes.iter().map(|(c, m)| TypeEntry { class: ClassRef::of(g, *c), multiplicities: m.clone() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsJson {
    pub dims: Vec<u64>,
    pub primes: Vec<u64>,
    pub agreed: bool,
}

impl From<&GradedDims> for DimsJson {
    fn from(d: &GradedDims) -> Self {
        DimsJson { dims: d.dims.clone(), primes: d.primes.clone(), agreed: d.agreed }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub passed: bool,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<CheckJson>,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        ReportJson {
            passed: r.passed(),
            exhaustive: r.exhaustive,
            seed: r.seed,
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    cases: c.cases,
                    passed: c.passed(),
                    failure: c.failure.clone(),
                })
                .collect(),
        }
    }
}
