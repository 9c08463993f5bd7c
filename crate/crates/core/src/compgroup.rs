//! Conjugacy classes of the component group `A(u)` for a simple adjoint group.
//!
//! Classes of `A(u)` correspond to `W`-orbits of pairs `(J, D_J)` whose
//! distinguished labeling `D_J` induces the diagram of `u`; the class has
//! element order `d_J`. The class data then pins down the group among a small
//! closed list of candidates.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::balacarter::distinguished_on_base;
use crate::canon::{base_key, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::induce::{cochar_from_base, induced_diagram, LabeledDiagram};
use crate::pseudolevi::{proper_subsets, type_label, witness_element, PseudoLevi};
use crate::rootsys::{is_good_prime, to_dominant, CartanType, CocharVec, NodeSet, RootSet, RootSystem};

/// One `W`-orbit of pairs `(J, D_J)`, i.e. one conjugacy class of some `A(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleRecord {
    pub nodes: NodeSet,
    /// Labels on the nodes of `J`, in node order.
    pub labels: Vec<u8>,
    pub lam: CocharVec,
    pub induced: LabeledDiagram,
    /// `d_J`, the order of the class.
    pub order: i64,
    pub factor_types: Vec<CartanType>,
    /// Sorted `(type, sorted labels)` per factor.
    pub factor_labels: Vec<(CartanType, Vec<u8>)>,
    pub subsystem: RootSet,
    pub key: Vec<i64>,
}

impl TripleRecord {
    pub fn type_label(&self) -> String {
        type_label(&self.factor_types)
    }

    fn invariants(&self) -> (&[(CartanType, Vec<u8>)], i64, &LabeledDiagram) {
        (&self.factor_labels, self.order, &self.induced)
    }

    pub fn describe(&self, rank: usize) -> String {
        let labels: String = self.labels.iter().map(|l| l.to_string()).collect();
        format!(
            "J = {} [{}] labels {} -> {} (order {})",
            self.nodes.display(rank),
            self.type_label(),
            if labels.is_empty() { "-".into() } else { labels },
            self.induced,
            self.order
        )
    }
}

fn records_for(rs: &RootSystem, nodes: NodeSet, budget: u64) -> Result<Vec<TripleRecord>> {
    let pl = PseudoLevi::new(rs, nodes)?;
    let mut out = Vec::new();
    for labels in distinguished_on_base(&pl) {
        let lam = cochar_from_base(rs, &pl.base, &labels)?;
        let induced = induced_diagram(rs, &lam)?;
        let mut factor_labels: Vec<(CartanType, Vec<u8>)> = pl
            .factors
            .iter()
            .map(|f| {
                let mut l: Vec<u8> = f.members.iter().map(|&m| labels[m]).collect();
                l.sort_unstable();
                (f.ctype, l)
            })
            .collect();
        factor_labels.sort();
        let key = base_key(rs, &pl.base, Some(&labels), budget)?;
        out.push(TripleRecord {
            nodes,
            labels,
            lam,
            induced,
            order: pl.d_j,
            factor_types: pl.factor_types(),
            factor_labels,
            subsystem: pl.subsystem,
            key,
        });
    }
    Ok(out)
}

/// Every pair `(J, D_J)` with `J` a proper subset of the extended nodes,
/// before any identification, ordered by `J` then by labeling.
pub fn raw_triples(rs: &RootSystem, budget: u64) -> Result<Vec<TripleRecord>> {
    let subsets: Vec<NodeSet> = proper_subsets(rs.rank()).collect();
    let per: Vec<Vec<TripleRecord>> = subsets
        .par_iter()
        .map(|&j| records_for(rs, j, budget))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

pub fn enumerate_triples(rs: &RootSystem) -> Result<Vec<TripleRecord>> {
    enumerate_triples_with_budget(rs, DEFAULT_BUDGET)
}

/// One representative per `W`-orbit of pairs, the first in `J`-mask order.
pub fn enumerate_triples_with_budget(rs: &RootSystem, budget: u64) -> Result<Vec<TripleRecord>> {
    let mut seen = HashSet::new();
    Ok(raw_triples(rs, budget)?
        .into_iter()
        .filter(|t| seen.insert(t.key.clone()))
        .collect())
}

/// Moves the subsystem of `t` so that its cocharacter becomes dominant.
fn dominant_position(rs: &RootSystem, t: &TripleRecord) -> (CocharVec, RootSet) {
    let (dom, word) = to_dominant(rs, &t.lam);
    let mut phi = t.subsystem;
    for &i in &word.word {
        phi = phi.permute(rs.reflection(i));
    }
    (dom, phi)
}

/// Simple reflections fixing a dominant cocharacter.
fn stabilizer_gens(dom: &CocharVec) -> Vec<usize> {
    dom.coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.numer() == &0)
        .map(|(i, _)| i)
        .collect()
}

/// Orbit of a root set under the parabolic subgroup generated by `gens`.
fn parabolic_orbit(
    rs: &RootSystem,
    seed: RootSet,
    gens: &[usize],
    budget: u64,
    target: Option<RootSet>,
    context: impl Fn() -> String,
) -> Result<HashSet<RootSet>> {
    let mut seen = HashSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(cur) = queue.pop_front() {
        if Some(cur) == target {
            break;
        }
        for &g in gens {
            let next = cur.permute(rs.reflection(g));
            if seen.insert(next) {
                if seen.len() as u64 > budget {
                    return Err(Error::BudgetExceeded {
                        budget,
                        context: context(),
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Whether two records lie in one `W`-orbit of pairs.
///
/// Rejects on differing invariants, then moves both cocharacters to their
/// common dominant form and searches the orbit of one subsystem under the
/// stabilizer of that cocharacter.
pub fn pairs_conjugate(
    rs: &RootSystem,
    t1: &TripleRecord,
    t2: &TripleRecord,
    budget: u64,
) -> Result<bool> {
    if t1.invariants() != t2.invariants() {
        return Ok(false);
    }
    let (dom1, phi1) = dominant_position(rs, t1);
    let (dom2, phi2) = dominant_position(rs, t2);
    if dom1 != dom2 {
        return Err(Error::Invariant("equal diagrams with unequal dominant forms".into()));
    }
    let gens = stabilizer_gens(&dom1);
    let rank = rs.rank();
    let orbit = parabolic_orbit(rs, phi1, &gens, budget, Some(phi2), || {
        format!(
            "comparing {} with {}",
            t1.describe(rank),
            t2.describe(rank)
        )
    })?;
    Ok(orbit.contains(&phi2))
}

/// Number of `W`-orbits among the given records, decided by stabilizer
/// orbits alone (independent of the canonical keys).
pub fn count_pair_orbits(rs: &RootSystem, records: &[TripleRecord], budget: u64) -> Result<usize> {
    let mut groups: BTreeMap<(Vec<(CartanType, Vec<u8>)>, i64, LabeledDiagram), Vec<usize>> =
        BTreeMap::new();
    for (i, t) in records.iter().enumerate() {
        groups
            .entry((t.factor_labels.clone(), t.order, t.induced.clone()))
            .or_default()
            .push(i);
    }
    let rank = rs.rank();
    let counts: Vec<usize> = groups
        .into_par_iter()
        .map(|(_, members)| {
            let placed: Vec<RootSet> = members
                .iter()
                .map(|&i| dominant_position(rs, &records[i]).1)
                .collect();
            let dom = records[members[0]].induced.as_cochar();
            let gens = stabilizer_gens(&dom);
            let mut assigned = vec![false; members.len()];
            let mut orbits = 0;
            for first in 0..members.len() {
                if assigned[first] {
                    continue;
                }
                orbits += 1;
                assigned[first] = true;
                if members.len() == 1 {
                    break;
                }
                let orbit = parabolic_orbit(rs, placed[first], &gens, budget, None, || {
                    format!("orbit of {}", records[members[first]].describe(rank))
                })?;
                for (a, phi) in assigned.iter_mut().zip(&placed) {
                    if orbit.contains(phi) {
                        *a = true;
                    }
                }
            }
            Ok(orbits)
        })
        .collect::<Result<_>>()?;
    Ok(counts.into_iter().sum())
}

/// Canonical keys of the subsets of `S`, for recognizing Levi subsystems.
pub struct LeviIndex(HashSet<Vec<i64>>);

impl LeviIndex {
    pub fn new(rs: &RootSystem, budget: u64) -> Result<Self> {
        let keys = (0u32..1 << rs.rank())
            .into_par_iter()
            .map(|b| {
                let base: Vec<usize> = NodeSet::from_bits(b as u16)
                    .iter()
                    .map(|i| rs.simple_root_index(i))
                    .collect();
                base_key(rs, &base, None, budget)
            })
            .collect::<Result<HashSet<_>>>()?;
        Ok(LeviIndex(keys))
    }

    /// Whether `R_J` is `W`-conjugate to the subsystem of a subset of `S`.
    pub fn contains(&self, rs: &RootSystem, nodes: NodeSet, budget: u64) -> Result<bool> {
        let pl = PseudoLevi::new(rs, nodes)?;
        Ok(self.0.contains(&base_key(rs, &pl.base, None, budget)?))
    }
}

/// Abstract groups that occur as `A(u)` for simple adjoint groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    Trivial,
    /// Cyclic of order `d >= 3`; order 2 is `ElemAb2(1)`.
    Cyclic(u32),
    ElemAb2(u32),
    Sym(u32),
}

impl GroupName {
    /// Sorted element orders of the conjugacy classes.
    pub fn fingerprint(self) -> Vec<i64> {
        let mut out = match self {
            GroupName::Trivial => vec![1],
            GroupName::Cyclic(d) => {
                let d = d as i64;
                (0..d).map(|k| d / num_integer::gcd(k, d)).collect()
            }
            GroupName::ElemAb2(k) => {
                let mut v = vec![2; (1usize << k) - 1];
                v.push(1);
                v
            }
            GroupName::Sym(3) => vec![1, 2, 3],
            GroupName::Sym(4) => vec![1, 2, 2, 3, 4],
            GroupName::Sym(5) => vec![1, 2, 2, 3, 4, 5, 6],
            GroupName::Sym(_) => Vec::new(),
        };
        out.sort_unstable();
        out
    }

    pub fn candidates() -> Vec<GroupName> {
        let mut c = vec![GroupName::Trivial];
        c.extend((3..=12).map(GroupName::Cyclic));
        c.extend((1..=8).map(GroupName::ElemAb2));
        c.extend((3..=5).map(GroupName::Sym));
        c
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => write!(f, "trivial"),
            GroupName::Cyclic(d) => write!(f, "Cyc({d})"),
            GroupName::ElemAb2(k) => write!(f, "ElemAb2({k})"),
            GroupName::Sym(n) => write!(f, "Sym({n})"),
        }
    }
}

/// The unique candidate group whose classes can be matched one to one with
/// representatives of the given orders.
///
/// A class of `A(u)` has an order dividing that of any representative, and a
/// representative of order `d_J` may map to a class of smaller order (in `E7`
/// the pair `A1+A3+A3` with `d_J = 4` gives the non-trivial class of an `S2`).
/// So a candidate matches when its class orders can be assigned bijectively to
/// the given orders with each class order dividing its representative order.
pub fn recognize_group(orders: &[i64]) -> Result<GroupName> {
    let mut sorted = orders.to_vec();
    sorted.sort_unstable();
    let unrecognized = || Error::UnrecognizedFingerprint {
        orders: sorted.clone(),
        diagram: String::new(),
    };
    if sorted.iter().filter(|&&o| o == 1).count() != 1 || sorted.iter().any(|&o| o < 1) {
        return Err(unrecognized());
    }
    let candidates = GroupName::candidates();
    if let Some(g) = candidates.iter().find(|g| g.fingerprint() == sorted) {
        return Ok(*g);
    }
    let matches: Vec<GroupName> = candidates
        .into_iter()
        .filter(|g| divisibility_matching(&g.fingerprint(), &sorted))
        .collect();
    match matches.as_slice() {
        [g] => Ok(*g),
        _ => Err(unrecognized()),
    }
}

/// Whether `class_orders[i] | reps[pi(i)]` for some bijection `pi`.
fn divisibility_matching(class_orders: &[i64], reps: &[i64]) -> bool {
    fn go(i: usize, class_orders: &[i64], reps: &[i64], used: &mut [bool]) -> bool {
        if i == class_orders.len() {
            return true;
        }
        for j in 0..reps.len() {
            if !used[j] && reps[j] % class_orders[i] == 0 {
                used[j] = true;
                if go(i + 1, class_orders, reps, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    class_orders.len() == reps.len() && go(0, class_orders, reps, &mut vec![false; reps.len()])
}

/// `A(u)` for the unipotent class with the given diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuReport {
    pub diagram: LabeledDiagram,
    /// One record per conjugacy class, sorted by order then `J`.
    pub classes: Vec<TripleRecord>,
    pub group: GroupName,
}

impl AuReport {
    pub fn orders(&self) -> Vec<i64> {
        self.classes.iter().map(|c| c.order).collect()
    }
}

pub fn component_group_report(rs: &RootSystem) -> Result<Vec<AuReport>> {
    component_group_report_with_budget(rs, DEFAULT_BUDGET)
}

/// Reports keyed by diagram, in ascending diagram order.
pub fn component_group_report_with_budget(rs: &RootSystem, budget: u64) -> Result<Vec<AuReport>> {
    let triples = enumerate_triples_with_budget(rs, budget)?;
    assemble_reports(triples)
}

fn assemble_reports(triples: Vec<TripleRecord>) -> Result<Vec<AuReport>> {
    let mut by_diagram: BTreeMap<LabeledDiagram, Vec<TripleRecord>> = BTreeMap::new();
    for t in triples {
        by_diagram.entry(t.induced.clone()).or_default().push(t);
    }
    by_diagram
        .into_iter()
        .map(|(diagram, mut classes)| {
            classes.sort_by(|a, b| {
                (a.order, a.nodes, &a.labels).cmp(&(b.order, b.nodes, &b.labels))
            });
            let orders: Vec<i64> = classes.iter().map(|c| c.order).collect();
            let group = recognize_group(&orders).map_err(|e| match e {
                Error::UnrecognizedFingerprint { orders, .. } => Error::UnrecognizedFingerprint {
                    orders,
                    diagram: diagram.to_string(),
                },
                other => other,
            })?;
            Ok(AuReport {
                diagram,
                classes,
                group,
            })
        })
        .collect()
}

/// Reports for characteristic `p`: rejects bad `p` and certifies every
/// pseudo-Levi in use by a witness of order prime to `p`.
pub fn component_group_report_in_char(
    rs: &RootSystem,
    p: u64,
    budget: u64,
) -> Result<Vec<AuReport>> {
    if !is_good_prime(rs, p)? {
        return Err(Error::BadCharacteristic {
            p,
            ctype: rs.ctype().to_string(),
        });
    }
    let triples = enumerate_triples_with_budget(rs, budget)?;
    let mut nodes: Vec<NodeSet> = triples.iter().map(|t| t.nodes).collect();
    nodes.sort();
    nodes.dedup();
    nodes
        .par_iter()
        .map(|&j| witness_element(rs, j, p).map(|_| ()))
        .collect::<Result<Vec<()>>>()?;
    assemble_reports(triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    #[test]
    fn recognition_table() {
        assert_eq!(recognize_group(&[1]).unwrap(), GroupName::Trivial);
        assert_eq!(recognize_group(&[3, 1, 2]).unwrap(), GroupName::Sym(3));
        assert_eq!(recognize_group(&[1, 2, 2, 3, 4]).unwrap(), GroupName::Sym(4));
        assert_eq!(
            recognize_group(&[1, 2, 2, 3, 4, 5, 6]).unwrap(),
            GroupName::Sym(5)
        );
        assert_eq!(recognize_group(&[1, 2]).unwrap(), GroupName::ElemAb2(1));
        assert_eq!(recognize_group(&[1, 2, 2, 2]).unwrap(), GroupName::ElemAb2(2));
        assert_eq!(recognize_group(&[1, 3, 3]).unwrap(), GroupName::Cyclic(3));
        assert_eq!(recognize_group(&[1, 2, 4, 4]).unwrap(), GroupName::Cyclic(4));
        // A representative of order 4 for the non-trivial class of S2.
        assert_eq!(recognize_group(&[1, 4]).unwrap(), GroupName::ElemAb2(1));
        assert!(recognize_group(&[1, 2, 2]).is_err());
        assert!(recognize_group(&[1, 5]).is_err());
        assert!(recognize_group(&[2, 2]).is_err());
        assert!(recognize_group(&[1, 1]).is_err());
    }

    #[test]
    fn fingerprints_are_distinct() {
        let all = GroupName::candidates();
        let prints: HashSet<Vec<i64>> = all.iter().map(|g| g.fingerprint()).collect();
        assert_eq!(prints.len(), all.len());
    }

    #[test]
    fn a1_records() {
        let a1 = rs("A1");
        let t = enumerate_triples(&a1).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|r| r.order == 1));
        assert_eq!(t[0].nodes, NodeSet::EMPTY);
        assert_eq!(t[1].nodes, NodeSet::simple(1));
    }

    #[test]
    fn g2_pipeline() {
        let g2 = rs("G2");
        let t = enumerate_triples(&g2).unwrap();
        assert_eq!(t.len(), 7);
        let reports = component_group_report(&g2).unwrap();
        assert_eq!(reports.len(), 5);
        let sub = reports.iter().find(|r| r.diagram.labels() == [0, 2]).unwrap();
        assert_eq!(sub.group, GroupName::Sym(3));
        assert_eq!(sub.orders(), vec![1, 2, 3]);
        let types: Vec<String> = sub.classes.iter().map(|c| c.type_label()).collect();
        assert_eq!(types, ["G2", "A1+A1", "A2"]);
    }

    #[test]
    fn b2_pipeline() {
        let reports = component_group_report(&rs("B2")).unwrap();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert!(r.orders().iter().all(|&o| o <= 2));
            assert!(matches!(r.group, GroupName::Trivial | GroupName::ElemAb2(1)));
        }
    }

    #[test]
    fn pairs_conjugate_examples() {
        let a2 = rs("A2");
        let raw = raw_triples(&a2, DEFAULT_BUDGET).unwrap();
        for t in &raw {
            assert!(pairs_conjugate(&a2, t, t, DEFAULT_BUDGET).unwrap());
        }
        // {a1, a0} and {a2, a0} with regular labels are both bases of R.
        let find = |j: NodeSet| raw.iter().find(|t| t.nodes == j).unwrap();
        let x = find(NodeSet::from_nodes([0, 2]));
        let y = find(NodeSet::from_nodes([1, 2]));
        assert!(pairs_conjugate(&a2, x, y, DEFAULT_BUDGET).unwrap());

        let g2 = rs("G2");
        let raw = raw_triples(&g2, DEFAULT_BUDGET).unwrap();
        let find = |j: NodeSet| raw.iter().find(|t| t.nodes == j).unwrap();
        let long_a2 = find(NodeSet::from_nodes([1, 2]));
        let a1a1 = find(NodeSet::from_nodes([0, 2]));
        assert_eq!(long_a2.induced, a1a1.induced);
        assert!(!pairs_conjugate(&g2, long_a2, a1a1, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let d4 = rs("D4");
        let raw = raw_triples(&d4, DEFAULT_BUDGET).unwrap();
        // With room for one state the search either finds its target at once
        // or must give up.
        let mut exhausted = 0;
        for a in &raw {
            for b in &raw {
                match pairs_conjugate(&d4, a, b, 1) {
                    Ok(found) => assert!(found || a.invariants() != b.invariants()),
                    Err(Error::BudgetExceeded { .. }) => exhausted += 1,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(exhausted > 0);
    }

    #[test]
    fn characteristic_gating() {
        let g2 = rs("G2");
        assert!(component_group_report_in_char(&g2, 3, DEFAULT_BUDGET).is_err());
        let r0 = component_group_report_in_char(&g2, 0, DEFAULT_BUDGET).unwrap();
        let r7 = component_group_report_in_char(&g2, 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(r0, r7);
    }
}
