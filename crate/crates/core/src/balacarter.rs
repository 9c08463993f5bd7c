//! Distinguished unipotent classes as even labelings of a Dynkin diagram.
//!
//! A `{0, 2}` labeling is distinguished when the grading it defines has
//! `dim g(0) = dim g(2)`.

use crate::pseudolevi::PseudoLevi;
use crate::rootsys::{build_root_system, CartanType, RootSystem};

/// `{0, 2}` labels on the simple nodes of one irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledSubDiagram {
    pub ctype: CartanType,
    pub labels: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedClass {
    pub per_factor: Vec<LabeledSubDiagram>,
    pub dim_g0: usize,
    pub dim_g2: usize,
}

/// `(dim g(0), dim g(2))` for the grading given by labels on the simple roots.
pub fn grading_dims(rs: &RootSystem, labels: &[u8]) -> (usize, usize) {
    let mut zero = 0;
    let mut two = 0;
    for root in rs.positive_roots() {
        let level: i64 = root
            .coords()
            .iter()
            .zip(labels)
            .map(|(&c, &l)| c * l as i64)
            .sum();
        match level {
            0 => zero += 1,
            2 => two += 1,
            _ => {}
        }
    }
    (rs.rank() + 2 * zero, two)
}

pub fn is_distinguished(rs: &RootSystem, labels: &[u8]) -> bool {
    let (g0, g2) = grading_dims(rs, labels);
    g0 == g2
}

/// All distinguished `{0, 2}` labelings of `rs`, regular class first.
pub fn distinguished_labelings(rs: &RootSystem) -> Vec<Vec<u8>> {
    let r = rs.rank();
    (0u32..1 << r)
        .map(|theta| {
            (0..r)
                .map(|i| if theta >> i & 1 == 1 { 0 } else { 2 })
                .collect::<Vec<u8>>()
        })
        .filter(|labels| is_distinguished(rs, labels))
        .collect()
}

/// Distinguished labelings of the standard (Bourbaki-numbered) system.
pub fn distinguished_classes(ctype: CartanType) -> Vec<LabeledSubDiagram> {
    distinguished_labelings(&build_root_system(ctype))
        .into_iter()
        .map(|labels| LabeledSubDiagram { ctype, labels })
        .collect()
}

/// Classes of a product: one per choice of a class in every factor. The empty
/// product has exactly one class, the identity of a torus.
pub fn distinguished_classes_product(factors: &[CartanType]) -> Vec<DistinguishedClass> {
    let per: Vec<(RootSystem, Vec<LabeledSubDiagram>)> = factors
        .iter()
        .map(|&t| (build_root_system(t), distinguished_classes(t)))
        .collect();
    let mut out = vec![DistinguishedClass {
        per_factor: Vec::new(),
        dim_g0: 0,
        dim_g2: 0,
    }];
    for (rs, classes) in &per {
        out = out
            .into_iter()
            .flat_map(|partial| {
                classes.iter().map(move |c| {
                    let (g0, g2) = grading_dims(rs, &c.labels);
                    let mut next = partial.clone();
                    next.per_factor.push(c.clone());
                    next.dim_g0 += g0;
                    next.dim_g2 += g2;
                    next
                })
            })
            .collect();
    }
    out
}

/// Distinguished labelings of a pseudo-Levi, indexed by position in its base.
pub fn distinguished_on_base(pl: &PseudoLevi) -> Vec<Vec<u8>> {
    let k = pl.base.len();
    let mut out = vec![vec![0u8; k]];
    for factor in &pl.factors {
        let local = distinguished_labelings(&factor.root_system());
        out = out
            .into_iter()
            .flat_map(|partial| {
                local.iter().map(move |l| {
                    let mut next = partial.clone();
                    for (&pos, &lab) in factor.members.iter().zip(l) {
                        next[pos] = lab;
                    }
                    next
                })
            })
            .collect();
    }
    out
}
