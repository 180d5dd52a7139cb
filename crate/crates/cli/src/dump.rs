//! Structure dumps for diffing across implementations, and DOT export.

use std::fmt::Write;

use hopfquiver::{HopfBimodule, HopfQuiver, TruncatedHopf};
use serde::Serialize;

use crate::schema::ClassRef;

#[derive(Serialize)]
pub struct ArrowJson {
    pub index: usize,
    pub source: String,
    pub target: String,
    pub class: ClassRef,
    pub i: usize,
    pub j: usize,
}

#[derive(Serialize)]
pub struct BlockJson {
    pub class: ClassRef,
    pub slot: usize,
    pub generator: String,
    pub theta: usize,
    pub theta_prime: usize,
    /// `rho_i(zeta_theta(h))` row by row.
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Serialize)]
pub struct BimoduleDump {
    #[serde(rename = "tool-version")]
    pub tool_version: &'static str,
    pub prime: u64,
    pub seed: u64,
    pub arrows: Vec<ArrowJson>,
    pub blocks: Vec<BlockJson>,
}

pub fn bimodule_dump(m: &HopfBimodule, seed: u64) -> BimoduleDump {
    let q = m.quiver();
    let g = q.group();
    let arrows = (0..m.arrow_count())
        .map(|a| {
            let id = q.arrow(a);
            ArrowJson {
                index: a,
                source: g.element_name(id.x),
                target: g.element_name(id.y),
                class: ClassRef::of(g, id.class_index),
                i: id.i,
                j: id.j,
            }
        })
        .collect();
    let mut blocks = Vec::new();
    for (slot, qc) in q.classes().iter().enumerate() {
        for i in 0..qc.slot_degrees.len() {
            for &h in g.generators() {
                for theta in 0..qc.members.len() {
                    let (mat, theta_prime) = m.zeta_block(slot, i, theta, h);
                    blocks.push(BlockJson {
                        class: ClassRef::of(g, qc.class_index),
                        slot: i,
                        generator: g.element_name(h),
                        theta,
                        theta_prime,
                        matrix: (0..mat.rows()).map(|r| mat.row(r).to_vec()).collect(),
                    });
                }
            }
        }
    }
    BimoduleDump { tool_version: crate::TOOL_VERSION, prime: m.field().p(), seed, arrows, blocks }
}

#[derive(Serialize)]
pub struct ProductJson {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(usize, u64)>,
}

#[derive(Serialize)]
pub struct CoproductJson {
    pub element: usize,
    pub terms: Vec<(usize, usize, u64)>,
}

#[derive(Serialize)]
pub struct HopfDump {
    #[serde(rename = "tool-version")]
    pub tool_version: &'static str,
    pub prime: u64,
    pub seed: u64,
    pub max_degree: usize,
    pub degree_dims: Vec<usize>,
    /// Basis element names `x e_l1 e_l2 ...`, in index order.
    pub basis: Vec<String>,
    /// Products `a * b` with `deg a <= 1`, which generate the algebra.
    pub products: Vec<ProductJson>,
    pub coproducts: Vec<CoproductJson>,
    pub antipode: Vec<Vec<(usize, u64)>>,
}

pub fn hopf_dump(h: &TruncatedHopf, seed: u64) -> HopfDump {
    let n = h.basis_len();
    let mut products = Vec::new();
    for a in 0..n {
        if h.degree_of(a) > 1 {
            break;
        }
        for b in 0..n {
            if h.degree_of(a) + h.degree_of(b) > h.max_degree() {
                continue;
            }
            if let Ok(terms) = h.product(a, b) {
                products.push(ProductJson { left: a, right: b, terms });
            }
        }
    }
    HopfDump {
        tool_version: crate::TOOL_VERSION,
        prime: h.field().p(),
        seed,
        max_degree: h.max_degree(),
        degree_dims: (0..=h.max_degree()).map(|d| h.degree_dim(d)).collect(),
        basis: (0..n).map(|i| h.describe(i)).collect(),
        products,
        coproducts: (0..n)
            .map(|a| CoproductJson {
                element: a,
                terms: h.coproduct(a).iter().map(|(&(p, q), &c)| (p, q, c)).collect(),
            })
            .collect(),
        antipode: (0..n).map(|a| h.antipode(a).clone()).collect(),
    }
}

/// Quiver as a DOT digraph: vertices are element names, arrows are labeled
/// `(class, i, j)`.
pub fn quiver_dot(q: &HopfQuiver) -> String {
    let g = q.group();
    let mut s = String::from("digraph hopf_quiver {\n");
    for x in 0..g.order() {
        let _ = writeln!(s, "  \"{}\";", g.element_name(x));
    }
    for a in 0..q.arrow_count() {
        let id = q.arrow(a);
        let _ = writeln!(
            s,
            "  \"{}\" -> \"{}\" [label=\"({},{},{})\"];",
            g.element_name(id.x),
            g.element_name(id.y),
            g.element_name(g.classes()[id.class_index].rep),
            id.i,
            id.j
        );
    }
    s.push_str("}\n");
    s
}
