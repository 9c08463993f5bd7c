//! From a distinguished labeling of a pseudo-Levi base to the weighted Dynkin
//! diagram of the resulting unipotent class of the ambient group.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pseudolevi::node_root;
use crate::rootsys::{pairing, to_dominant, CocharVec, NodeSet, RootSystem};

/// Labels over `S` (Bourbaki order), each in `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDiagram(Vec<u8>);

impl LabeledDiagram {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::Invariant(format!("diagram label {bad} outside {{0,1,2}}")));
        }
        Ok(LabeledDiagram(labels))
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }

    pub fn as_cochar(&self) -> CocharVec {
        CocharVec::from_ints(&self.0.iter().map(|&l| l as i64).collect::<Vec<_>>())
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The cocharacter in the span of the coroots of `R_J` pairing with each
/// node of `J` as prescribed by `labels` (given in node order).
pub fn cochar_from_labels(rs: &RootSystem, nodes: NodeSet, labels: &[u8]) -> Result<CocharVec> {
    let base: Vec<usize> = nodes.iter().map(|i| node_root(rs, i)).collect();
    cochar_from_base(rs, &base, labels)
}

/// As [`cochar_from_labels`], for a base given by root indices.
pub fn cochar_from_base(rs: &RootSystem, base: &[usize], labels: &[u8]) -> Result<CocharVec> {
    let k = base.len();
    if labels.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: labels.len(),
        });
    }
    // Row g: sum_b x_b <base_g, base_b^vee> = labels[g].
    let mut m: Vec<Vec<Rational64>> = (0..k)
        .map(|g| {
            let mut row: Vec<Rational64> = (0..k)
                .map(|b| Rational64::from_integer(rs.root_pairing(base[g], base[b])))
                .collect();
            row.push(Rational64::from_integer(labels[g] as i64));
            row
        })
        .collect();
    let x = solve(&mut m).ok_or_else(|| Error::Invariant("singular Cartan system".into()))?;

    let n = rs.rank();
    let mut lam = vec![Rational64::zero(); n];
    for (xb, &b) in x.iter().zip(base) {
        for (l, &c) in lam.iter_mut().zip(rs.coroot(b)) {
            *l += xb * c;
        }
    }
    let lam = CocharVec::new(lam);
    for root in rs.roots() {
        let p = pairing(root, &lam)?;
        if !p.is_integer() {
            return Err(Error::Invariant(format!(
                "cocharacter {lam} pairs non-integrally ({p}) with a root"
            )));
        }
    }
    Ok(lam)
}

/// Gauss-Jordan elimination on an augmented square system.
fn solve(m: &mut [Vec<Rational64>]) -> Option<Vec<Rational64>> {
    let k = m.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Rational64::one() / m[col][col];
        for v in m[col].iter_mut() {
            *v *= inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (v, p) in m[r].iter_mut().zip(pivot_row) {
                    *v -= f * p;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[k]).collect())
}

/// Weighted Dynkin diagram of `lam`: the simple-root pairings of its dominant
/// conjugate.
pub fn induced_diagram(rs: &RootSystem, lam: &CocharVec) -> Result<LabeledDiagram> {
    if lam.dim() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lam.dim(),
        });
    }
    let (dom, _) = to_dominant(rs, lam);
    let ints = dom
        .to_ints()
        .ok_or_else(|| Error::Invariant(format!("cocharacter {lam} is not integral")))?;
    if let Some(bad) = ints.iter().find(|&&l| !(0..=2).contains(&l)) {
        return Err(Error::Invariant(format!(
            "induced label {bad} outside {{0,1,2}} for {lam}"
        )));
    }
    LabeledDiagram::new(ints.into_iter().map(|l| l as u8).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    #[test]
    fn empty_base_gives_zero() {
        let g2 = rs("G2");
        let lam = cochar_from_labels(&g2, NodeSet::EMPTY, &[]).unwrap();
        assert_eq!(lam, CocharVec::zero(2));
        assert!(induced_diagram(&g2, &lam).unwrap().is_zero());
    }

    #[test]
    fn rank_one() {
        let a1 = rs("A1");
        let lam = cochar_from_labels(&a1, NodeSet::simple(1), &[2]).unwrap();
        // alpha^vee pairs 2 with alpha.
        assert_eq!(lam, CocharVec::from_ints(&[2]));
    }

    #[test]
    fn regular_class_is_all_twos() {
        let e6 = rs("E6");
        let lam = cochar_from_labels(&e6, NodeSet::simple(6), &[2; 6]).unwrap();
        assert_eq!(induced_diagram(&e6, &lam).unwrap().labels(), &[2; 6]);
    }

    #[test]
    fn g2_subregular_coincidence() {
        let g2 = rs("G2");
        let long_a2 = cochar_from_labels(&g2, NodeSet::from_nodes([1, 2]), &[2, 2]).unwrap();
        for root in g2.roots() {
            assert!(pairing(root, &long_a2).unwrap().is_integer());
        }
        let a1a1 = cochar_from_labels(&g2, NodeSet::from_nodes([0, 2]), &[2, 2]).unwrap();
        let d1 = induced_diagram(&g2, &long_a2).unwrap();
        let d2 = induced_diagram(&g2, &a1a1).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1.labels(), &[0, 2]);
    }

    #[test]
    fn bad_labels_are_faults() {
        let a2 = rs("A2");
        assert!(induced_diagram(&a2, &CocharVec::from_ints(&[3, 0])).is_err());
        assert!(cochar_from_labels(&a2, NodeSet::simple(2), &[2]).is_err());
        // Half-integral cocharacter: labels (1) on one A1 node of A2.
        assert!(cochar_from_labels(&a2, NodeSet::from_nodes([0]), &[1]).is_err());
    }
}
