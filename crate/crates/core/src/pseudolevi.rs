//! Pseudo-Levi subsystems `R_J = ZJ ∩ R` for proper subsets `J` of the
//! extended Dynkin diagram, with their torsion orders `d_J`.
//!
//! A semisimple witness realizes each one as a connected centralizer.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use rayon::prelude::*;

use crate::canon::{base_key, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::rootsys::{
    alcove_reduce, build_root_system, is_good_prime, is_prime, CartanType, CocharVec, Family,
    NodeSet, RootSet, RootSystem, RootVec,
};

/// The extended Dynkin diagram: simple roots plus `alpha_0 = -theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDiagram {
    roots: Vec<RootVec>,
    marks: Vec<i64>,
}

impl ExtendedDiagram {
    pub fn node_count(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, node: usize) -> &RootVec {
        &self.roots[node]
    }

    pub fn mark(&self, node: usize) -> i64 {
        self.marks[node]
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// `sum mark(b) * root(b)` over all nodes, which is zero.
    pub fn affine_relation(&self) -> Vec<i64> {
        let n = self.roots.len() - 1;
        (0..n)
            .map(|k| {
                self.roots
                    .iter()
                    .zip(&self.marks)
                    .map(|(r, m)| m * r.coords()[k])
                    .sum()
            })
            .collect()
    }

    /// Edges `(i, j, a_ij * a_ji)` of the diagram.
    pub fn edges(&self, rs: &RootSystem) -> Vec<(usize, usize, i64)> {
        let n = self.roots.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (ri, rj) = (node_root(rs, i), node_root(rs, j));
                let bond = rs.root_pairing(ri, rj) * rs.root_pairing(rj, ri);
                if bond != 0 {
                    out.push((i, j, bond));
                }
            }
        }
        out
    }
}

pub fn extended_diagram(rs: &RootSystem) -> ExtendedDiagram {
    let n = rs.rank();
    let mut roots: Vec<RootVec> = (0..n).map(|i| RootVec::simple(n, i)).collect();
    roots.push(rs.highest_root().neg());
    let mut marks = rs.marks().to_vec();
    marks.push(1);
    ExtendedDiagram { roots, marks }
}

/// Root index of an extended node.
pub fn node_root(rs: &RootSystem, node: usize) -> usize {
    if node == rs.rank() {
        rs.negate(rs.highest_root_index())
    } else {
        rs.simple_root_index(node)
    }
}

fn check_proper(rs: &RootSystem, nodes: NodeSet) -> Result<()> {
    let full = NodeSet::extended(rs.rank());
    if !nodes.is_subset(full) || nodes == full {
        return Err(Error::FullExtendedSet);
    }
    Ok(())
}

/// Roots of `R` in the integer span of the nodes `J`.
pub fn subsystem_closure(rs: &RootSystem, nodes: NodeSet) -> Result<RootSet> {
    check_proper(rs, nodes)?;
    let n = rs.rank();
    let marks = rs.marks();
    let missing: Vec<usize> = (0..n).filter(|&i| !nodes.contains(i)).collect();
    let mut out = RootSet::default();
    for (idx, root) in rs.roots().iter().enumerate() {
        let c = root.coords();
        let member = if nodes.contains(n) {
            // root = -x theta + (span of J ∩ S): coordinates off J are -x a_m.
            let m0 = missing[0];
            c[m0] % marks[m0] == 0 && {
                let x = c[m0] / marks[m0];
                missing.iter().all(|&m| c[m] == x * marks[m])
            }
        } else {
            missing.iter().all(|&m| c[m] == 0)
        };
        if member {
            out.insert(idx);
        }
    }
    Ok(out)
}

/// An irreducible component of a subsystem base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub ctype: CartanType,
    /// Positions into the base, ascending.
    pub members: Vec<usize>,
    /// Cartan matrix of the component in member order.
    pub cartan: Vec<Vec<i64>>,
}

impl Factor {
    pub fn root_system(&self) -> RootSystem {
        RootSystem::from_cartan(self.ctype, self.cartan.clone())
            .expect("factor Cartan matrix was validated during classification")
    }
}

/// Splits a base (root indices) into irreducible components and names each.
pub fn classify_factors(rs: &RootSystem, base: &[usize]) -> Result<Vec<Factor>> {
    let k = base.len();
    let cartan: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| rs.root_pairing(base[j], base[i])).collect())
        .collect();
    let mut seen = vec![false; k];
    let mut factors = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for b in 0..k {
                if !seen[b] && cartan[a][b] != 0 {
                    seen[b] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let block: Vec<Vec<i64>> = members
            .iter()
            .map(|&a| members.iter().map(|&b| cartan[a][b]).collect())
            .collect();
        let ctype = identify_block(&block)?;
        let sub = RootSystem::from_cartan(ctype, block.clone())?;
        if sub.num_positive() != build_root_system(ctype).num_positive() {
            return Err(Error::Invariant(format!(
                "block identified as {ctype} has {} positive roots",
                sub.num_positive()
            )));
        }
        factors.push(Factor {
            ctype,
            members,
            cartan: block,
        });
    }
    Ok(factors)
}

/// Names a connected Cartan matrix up to diagram isomorphism.
fn identify_block(c: &[Vec<i64>]) -> Result<CartanType> {
    let k = c.len();
    let bad = || Error::Invariant(format!("not a Cartan matrix of finite type: {c:?}"));
    if k == 1 {
        return CartanType::new(Family::A, 1);
    }
    let neighbours = |i: usize| (0..k).filter(move |&j| j != i && c[i][j] != 0);
    let degree: Vec<usize> = (0..k).map(|i| neighbours(i).count()).collect();
    let mut multi = None;
    for i in 0..k {
        for j in i + 1..k {
            let bond = c[i][j] * c[j][i];
            if bond > 1 {
                if multi.is_some() {
                    return Err(bad());
                }
                multi = Some((i, j, bond));
            }
        }
    }
    let edges: usize = degree.iter().sum::<usize>() / 2;
    if edges != k - 1 {
        return Err(bad());
    }
    match multi {
        Some((_, _, 3)) if k == 2 => CartanType::new(Family::G, 2),
        Some((i, j, 2)) => {
            if k == 2 {
                return CartanType::new(Family::B, 2);
            }
            if degree.iter().any(|&d| d > 2) {
                return Err(bad());
            }
            if degree[i] == 2 && degree[j] == 2 {
                return if k == 4 {
                    CartanType::new(Family::F, 4)
                } else {
                    Err(bad())
                };
            }
            // c[a][b] = 2 (a,b)/(a,a); |c[a][b]| = 2 means a is the shorter root.
            let (end, other) = if degree[i] == 1 { (i, j) } else { (j, i) };
            let end_is_short = c[end][other] == -2;
            CartanType::new(if end_is_short { Family::B } else { Family::C }, k)
        }
        Some(_) => Err(bad()),
        None => {
            let branch: Vec<usize> = (0..k).filter(|&i| degree[i] >= 3).collect();
            match branch.as_slice() {
                [] => CartanType::new(Family::A, k),
                [centre] if degree[*centre] == 3 => {
                    let mut arms: Vec<usize> = neighbours(*centre)
                        .map(|start| {
                            let (mut prev, mut cur, mut len) = (*centre, start, 1);
                            loop {
                                let next = neighbours(cur).find(|&x| x != prev);
                                match next {
                                    Some(x) => {
                                        prev = cur;
                                        cur = x;
                                        len += 1;
                                    }
                                    None => break len,
                                }
                            }
                        })
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => CartanType::new(Family::D, k),
                        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => CartanType::new(Family::E, k),
                        _ => Err(bad()),
                    }
                }
                _ => Err(bad()),
            }
        }
    }
}

/// `gcd` of the marks of the extended nodes outside `J`.
pub fn torsion_order(rs: &RootSystem, nodes: NodeSet) -> Result<i64> {
    check_proper(rs, nodes)?;
    let ext = extended_diagram(rs);
    Ok((0..ext.node_count())
        .filter(|&i| !nodes.contains(i))
        .fold(0i64, |g, i| g.gcd(&ext.mark(i))))
}

/// The subsystem `R_J` with its base `J`, factors, and `d_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoLevi {
    pub nodes: NodeSet,
    /// Root indices of the nodes of `J`, in node order.
    pub base: Vec<usize>,
    pub subsystem: RootSet,
    pub factors: Vec<Factor>,
    pub d_j: i64,
}

impl PseudoLevi {
    pub fn new(rs: &RootSystem, nodes: NodeSet) -> Result<Self> {
        let subsystem = subsystem_closure(rs, nodes)?;
        let base: Vec<usize> = nodes.iter().map(|i| node_root(rs, i)).collect();
        let factors = classify_factors(rs, &base)?;
        let d_j = torsion_order(rs, nodes)?;
        Ok(PseudoLevi {
            nodes,
            base,
            subsystem,
            factors,
            d_j,
        })
    }

    /// Sorted multiset of factor types.
    pub fn factor_types(&self) -> Vec<CartanType> {
        let mut t: Vec<CartanType> = self.factors.iter().map(|f| f.ctype).collect();
        t.sort();
        t
    }

    pub fn num_positive(&self) -> usize {
        self.subsystem.len() / 2
    }

    pub fn type_label(&self) -> String {
        type_label(&self.factor_types())
    }
}

/// `A2+A1+A1`-style label; the empty product is `T` (a torus).
pub fn type_label(types: &[CartanType]) -> String {
    if types.is_empty() {
        return "T".into();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

impl fmt::Display for PseudoLevi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (d_J = {})", self.type_label(), self.d_j)
    }
}

/// One `W`-conjugacy class of pseudo-Levi subsystems.
#[derive(Debug, Clone)]
pub struct PseudoLeviClass {
    pub rep: PseudoLevi,
    /// Every `J` whose subsystem lies in this class, ascending by mask.
    pub members: Vec<NodeSet>,
    pub key: Vec<i64>,
}

/// Proper subsets of the extended node set, subsets of `S` first.
pub fn proper_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
    let full = NodeSet::extended(rank).bits() as u32;
    (0..full).map(|b| NodeSet::from_bits(b as u16))
}

pub fn enumerate_pseudolevis(rs: &RootSystem) -> Result<Vec<PseudoLeviClass>> {
    enumerate_pseudolevis_with_budget(rs, DEFAULT_BUDGET)
}

pub fn enumerate_pseudolevis_with_budget(
    rs: &RootSystem,
    budget: u64,
) -> Result<Vec<PseudoLeviClass>> {
    let subsets: Vec<NodeSet> = proper_subsets(rs.rank()).collect();
    let built: Vec<(PseudoLevi, Vec<i64>)> = subsets
        .par_iter()
        .map(|&j| {
            let pl = PseudoLevi::new(rs, j)?;
            let key = base_key(rs, &pl.base, None, budget)?;
            Ok((pl, key))
        })
        .collect::<Result<_>>()?;

    let mut classes: Vec<PseudoLeviClass> = Vec::new();
    let mut by_key: HashMap<Vec<i64>, usize> = HashMap::new();
    for (pl, key) in built {
        match by_key.get(&key) {
            Some(&c) => {
                let class = &mut classes[c];
                if class.rep.d_j != pl.d_j {
                    return Err(Error::Invariant(format!(
                        "d_J differs within a conjugacy class: {} vs {}",
                        class.rep.nodes.display(rs.rank()),
                        pl.nodes.display(rs.rank())
                    )));
                }
                class.members.push(pl.nodes);
            }
            None => {
                by_key.insert(key.clone(), classes.len());
                classes.push(PseudoLeviClass {
                    members: vec![pl.nodes],
                    rep: pl,
                    key,
                });
            }
        }
    }
    Ok(classes)
}

/// Largest auxiliary prime tried by [`witness_element`].
pub const WITNESS_PRIME_BOUND: u64 = 1000;

/// A rational point `s` in the fundamental alcove whose integral walls are
/// exactly `J` and whose order in `V/Y` is prime to `p`. The point already
/// lies in the closed alcove, so reduction leaves it fixed.
///
/// Nodes off `J` are `alpha_1, .., alpha_r` (ascending, `alpha_0` excluded when
/// it lies off `J`). With `alpha_0` in `J` the point is
/// `(l - a_2 - .. - a_r) / (a_1 l) w_1 + (1/l)(w_2 + .. + w_r)`; otherwise `J`
/// is a Levi base and the point is `(1/l)(w_1 + .. + w_r)`. Primes `l != p`
/// are tried in increasing order.
pub fn witness_element(rs: &RootSystem, nodes: NodeSet, p: u64) -> Result<CocharVec> {
    check_proper(rs, nodes)?;
    if !is_good_prime(rs, p)? {
        return Err(Error::BadCharacteristic {
            p,
            ctype: rs.ctype().to_string(),
        });
    }
    let n = rs.rank();
    let marks = rs.marks();
    let removed: Vec<usize> = (0..n).filter(|&i| !nodes.contains(i)).collect();
    for l in (2..=WITNESS_PRIME_BOUND).filter(|&l| is_prime(l) && l != p) {
        let l = l as i64;
        let mut s = vec![Rational64::from_integer(0); n];
        if nodes.contains(n) {
            let (first, rest) = removed.split_first().expect("J is proper");
            let tail: i64 = rest.iter().map(|&i| marks[i]).sum();
            s[*first] = Rational64::new(l - tail, marks[*first] * l);
            for &i in rest {
                s[i] = Rational64::new(1, l);
            }
        } else {
            for &i in &removed {
                s[i] = Rational64::new(1, l);
            }
        }
        let s = CocharVec::new(s);
        let order = s.torus_order();
        let coprime = p == 0 || order % p as i64 != 0;
        let red = alcove_reduce(rs, &s);
        if coprime && red.point == s && red.walls == nodes {
            return Ok(s);
        }
    }
    Err(Error::SearchExhausted {
        bound: WITNESS_PRIME_BOUND,
        nodes: nodes.display(n),
    })
}

/// Whether `p` is good for every factor of the pseudo-Levi.
pub fn good_inheritance_check(rs: &RootSystem, pl: &PseudoLevi, p: u64) -> Result<bool> {
    if !is_good_prime(rs, p)? {
        return Err(Error::BadCharacteristic {
            p,
            ctype: rs.ctype().to_string(),
        });
    }
    for t in pl.factor_types() {
        if !is_good_prime(&build_root_system(t), p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Residues modulo `d_J` taken by roots in the rational span of `J`, read off
/// as `d_J * s` where the root's coordinates off `J` equal `s` times the marks.
pub fn root_residues(rs: &RootSystem, nodes: NodeSet) -> Result<BTreeSet<i64>> {
    let d = torsion_order(rs, nodes)?;
    let n = rs.rank();
    let marks = rs.marks();
    let mut out = BTreeSet::new();
    if !nodes.contains(n) {
        // Levi case: d_J = 1 and only residue 0 occurs.
        out.insert(0);
        return Ok(out);
    }
    let missing: Vec<usize> = (0..n).filter(|&i| !nodes.contains(i)).collect();
    for root in rs.roots() {
        let c = root.coords();
        let s = Rational64::new(c[missing[0]], marks[missing[0]]);
        if missing
            .iter()
            .all(|&m| Rational64::from_integer(c[m]) == s * marks[m])
        {
            let scaled = s * d;
            if scaled.is_integer() {
                out.insert(scaled.to_integer().rem_euclid(d));
            }
        }
    }
    Ok(out)
}
