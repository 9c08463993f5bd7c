//! Small-scale ground truth for tests and `--verify`, built from alcove
//! rational points, classical partitions and brute-force Weyl orbits.
//! Nothing here feeds the main pipeline.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::compgroup::{component_group_report_in_char, AuReport};
use crate::error::{Error, Result};
use crate::induce::LabeledDiagram;
use crate::pseudolevi::enumerate_pseudolevis_with_budget;
use crate::rootsys::{
    is_good_prime, CartanType, CocharVec, Family, NodeSet, RootSet, RootSystem, WeylWord,
};

/// Largest rank at which the exhaustive oracles run by default.
pub const DEFAULT_ORACLE_RANK: usize = 4;

/// Full BFS orbit of `seed` under `gens` generators acting through `act`.
pub fn brute_orbit<T, F>(seed: T, gens: usize, act: F, budget: u64) -> Result<HashSet<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, usize) -> T,
{
    let mut seen = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(cur) = queue.pop_front() {
        for g in 0..gens {
            let next = act(&cur, g);
            if !seen.contains(&next) {
                if seen.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        budget,
                        context: "brute-force orbit".into(),
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

fn reflect(rs: &RootSystem, lam: &CocharVec, i: usize) -> CocharVec {
    WeylWord { word: vec![i] }.apply_cochar(rs, lam)
}

/// `W`-orbit of a cocharacter.
pub fn cochar_orbit(rs: &RootSystem, lam: &CocharVec, budget: u64) -> Result<HashSet<CocharVec>> {
    brute_orbit(lam.clone(), rs.rank(), |v, i| reflect(rs, v, i), budget)
}

/// `W`-orbit of a root subsystem together with a cocharacter.
pub fn pair_orbit(
    rs: &RootSystem,
    subsystem: RootSet,
    lam: &CocharVec,
    budget: u64,
) -> Result<HashSet<(RootSet, CocharVec)>> {
    brute_orbit(
        (subsystem, lam.clone()),
        rs.rank(),
        |(phi, v), i| (phi.permute(rs.reflection(i)), reflect(rs, v, i)),
        budget,
    )
}

/// Sorted positive-root indices of the least element of the `W`-orbit of a
/// subsystem, memoized per orbit.
pub struct SubsystemCanonicalizer<'a> {
    rs: &'a RootSystem,
    memo: HashMap<RootSet, Vec<usize>>,
    budget: u64,
}

impl<'a> SubsystemCanonicalizer<'a> {
    pub fn new(rs: &'a RootSystem, budget: u64) -> Self {
        SubsystemCanonicalizer {
            rs,
            memo: HashMap::new(),
            budget,
        }
    }

    pub fn canonical(&mut self, phi: RootSet) -> Result<Vec<usize>> {
        if let Some(c) = self.memo.get(&phi) {
            return Ok(c.clone());
        }
        let rs = self.rs;
        let npos = rs.num_positive();
        let orbit = brute_orbit(phi, rs.rank(), |s, i| s.permute(rs.reflection(i)), self.budget)?;
        let code = orbit
            .iter()
            .map(|s| s.iter().filter(|&r| r < npos).collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        for s in orbit {
            self.memo.insert(s, code.clone());
        }
        Ok(code)
    }
}

/// Canonical codes of the subsystems `R_t` over all points `t` of the closed
/// fundamental alcove with denominator at most `max_denominator`.
pub fn alcove_pseudolevis(
    rs: &RootSystem,
    max_denominator: i64,
    budget: u64,
) -> Result<BTreeSet<Vec<usize>>> {
    let n = rs.rank();
    let marks = rs.marks();
    let mut systems: HashSet<RootSet> = HashSet::new();
    for m in 1..=max_denominator.max(1) {
        let mut k = vec![0i64; n];
        points(marks, m, 0, 0, &mut k, &mut |k| {
            let phi: RootSet = rs
                .roots()
                .iter()
                .enumerate()
                .filter(|(_, r)| {
                    let s: i64 = r.coords().iter().zip(k).map(|(a, b)| a * b).sum();
                    s.rem_euclid(m) == 0
                })
                .map(|(i, _)| i)
                .collect();
            systems.insert(phi);
        });
    }
    let mut canon = SubsystemCanonicalizer::new(rs, budget);
    systems.into_iter().map(|s| canon.canonical(s)).collect()
}

fn points(marks: &[i64], m: i64, pos: usize, used: i64, k: &mut [i64], f: &mut impl FnMut(&[i64])) {
    if pos == k.len() {
        f(k);
        return;
    }
    let mut c = 0;
    while used + c * marks[pos] <= m {
        k[pos] = c;
        points(marks, m, pos + 1, used + c * marks[pos], k, f);
        c += 1;
    }
    k[pos] = 0;
}

/// Result of growing the denominator bound until the alcove set is stable.
#[derive(Debug, Clone)]
pub struct AlcoveStabilization {
    pub classes: BTreeSet<Vec<usize>>,
    /// Denominator bound at which the returned set was computed.
    pub bound: i64,
    /// Smallest bound already giving the final set.
    pub first_stable: i64,
}

/// Starts at twice the largest mark and stops once the set has not changed for
/// `window` consecutive bounds and the bound has reached the Coxeter number.
pub fn alcove_pseudolevis_stabilized(
    rs: &RootSystem,
    window: i64,
    budget: u64,
) -> Result<AlcoveStabilization> {
    let max_mark = rs.marks().iter().copied().max().unwrap_or(1);
    let coxeter = 1 + rs.marks().iter().sum::<i64>();
    let mut q = 2 * max_mark;
    let mut current = alcove_pseudolevis(rs, q, budget)?;
    let mut first_stable = q;
    loop {
        if q >= coxeter && q - first_stable >= window {
            return Ok(AlcoveStabilization {
                classes: current,
                bound: q,
                first_stable,
            });
        }
        q += 1;
        let next = alcove_pseudolevis(rs, q, budget)?;
        if next != current {
            current = next;
            first_stable = q;
        }
    }
}

/// Canonical codes of the classes found by subset enumeration.
pub fn enumerated_codes(rs: &RootSystem, budget: u64) -> Result<Vec<Vec<usize>>> {
    let mut canon = SubsystemCanonicalizer::new(rs, budget);
    enumerate_pseudolevis_with_budget(rs, budget)?
        .iter()
        .map(|c| canon.canonical(c.rep.subsystem))
        .collect()
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, parts in decreasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn natural_dimension(family: Family, rank: usize) -> Option<usize> {
    match family {
        Family::A => Some(rank + 1),
        Family::B => Some(2 * rank + 1),
        Family::C | Family::D => Some(2 * rank),
        _ => None,
    }
}

fn admissible(family: Family, p: &Partition) -> bool {
    let constrained = |odd: bool| {
        p.parts()
            .iter()
            .filter(|&&x| (x % 2 == 1) == odd)
            .all(|&x| p.multiplicity(x) % 2 == 0)
    };
    match family {
        Family::A => true,
        Family::B | Family::D => constrained(false),
        Family::C => constrained(true),
        _ => false,
    }
}

fn very_even(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x % 2 == 0 && p.multiplicity(x) % 2 == 0)
}

/// Weighted diagrams of the classes of the given classical type, one or two
/// per admissible partition.
pub fn classical_nilpotent_classes(
    family: Family,
    rank: usize,
) -> Result<Vec<(Partition, LabeledDiagram)>> {
    let ctype = CartanType::new(family, rank)?;
    let dim = natural_dimension(family, rank).ok_or_else(|| {
        Error::Invariant(format!("{ctype} has no partition parametrization"))
    })?;
    let mut out = Vec::new();
    for p in partitions(dim) {
        if !admissible(family, &p) {
            continue;
        }
        let mut h: Vec<i64> = p
            .parts()
            .iter()
            .flat_map(|&d| (0..d).map(move |j| d as i64 - 1 - 2 * j as i64))
            .collect();
        h.sort_unstable_by(|a, b| b.cmp(a));
        let diffs = |len: usize| -> Vec<i64> { h.windows(2).take(len).map(|w| w[0] - w[1]).collect() };
        let labels: Vec<i64> = match family {
            Family::A => diffs(rank),
            Family::B => {
                let mut l = diffs(rank - 1);
                l.push(h[rank - 1]);
                l
            }
            Family::C => {
                let mut l = diffs(rank - 1);
                l.push(2 * h[rank - 1]);
                l
            }
            _ => {
                let mut l = diffs(rank - 1);
                l.push(h[rank - 2] + h[rank - 1]);
                l
            }
        };
        let labels: Vec<u8> = labels.into_iter().map(|x| x as u8).collect();
        if family == Family::D && very_even(&p) {
            let mut swapped = labels.clone();
            swapped.swap(rank - 2, rank - 1);
            out.push((p.clone(), LabeledDiagram::new(labels)?));
            out.push((p, LabeledDiagram::new(swapped)?));
        } else {
            out.push((p, LabeledDiagram::new(labels)?));
        }
    }
    Ok(out)
}

/// Partitions of distinguished classes: a single part in type A, distinct
/// odd parts in types B and D, distinct even parts in type C.
pub fn distinguished_partitions(family: Family, rank: usize) -> Result<Vec<Partition>> {
    Ok(classical_nilpotent_classes(family, rank)?
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| match family {
            Family::A => p.parts().len() == 1,
            Family::B | Family::D => {
                p.has_distinct_parts() && p.parts().iter().all(|x| x % 2 == 1)
            }
            _ => p.has_distinct_parts() && p.parts().iter().all(|x| x % 2 == 0),
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect())
}

/// The partition of the class with the given weighted diagram.
pub fn diagram_partition(
    family: Family,
    rank: usize,
    diagram: &LabeledDiagram,
) -> Result<Option<Partition>> {
    Ok(classical_nilpotent_classes(family, rank)?
        .into_iter()
        .find(|(_, d)| d == diagram)
        .map(|(p, _)| p))
}

/// Partition of the class induced from a distinguished class of the Levi
/// subsystem on `nodes` (a subset of `S` of a classical type).
///
/// Components away from the end of the diagram are general linear blocks of
/// size `k` and contribute `(k, k)`; the end component is a smaller group of the
/// same family and contributes the partition matching its labels.
pub fn levi_partition(ctype: CartanType, nodes: NodeSet, labels: &[u8]) -> Result<Option<Partition>> {
    let family = ctype.family();
    let n = ctype.rank();
    let dim = match natural_dimension(family, n) {
        Some(d) => d,
        None => return Ok(None),
    };
    let label_of: BTreeMap<usize, u8> = nodes.iter().zip(labels.iter().copied()).collect();
    let mut parts = Vec::new();

    let tail: Vec<usize> = match family {
        Family::A => Vec::new(),
        Family::D if nodes.contains(n - 2) && nodes.contains(n - 1) => {
            let mut start = n - 2;
            while start > 0 && nodes.contains(start - 1) {
                start -= 1;
            }
            (start..n).collect()
        }
        Family::D => Vec::new(),
        _ => {
            let mut t = Vec::new();
            let mut i = n;
            while i > 0 && nodes.contains(i - 1) {
                i -= 1;
                t.push(i);
            }
            t.reverse();
            t
        }
    };
    if !tail.is_empty() {
        let m = tail.len();
        let tail_labels: Vec<u8> = tail.iter().map(|i| label_of[i]).collect();
        let part = match (family, m) {
            (Family::B, 1) => Some(Partition(vec![3])),
            (Family::C, 1) => Some(Partition(vec![2])),
            (Family::D, 2) => Some(Partition(vec![3, 1])),
            (Family::D, 3) => Some(Partition(vec![5, 1])),
            _ => diagram_partition(family, m, &LabeledDiagram::new(tail_labels)?)?,
        };
        match part {
            Some(p) => parts.extend(p.0),
            None => return Ok(None),
        }
    }

    // General linear blocks: maximal runs of nodes outside the tail. In type D
    // node n-1 hangs off n-3 alongside n-2.
    let rest: Vec<usize> = nodes.iter().filter(|i| !tail.contains(i)).collect();
    let adjacent = |a: usize, b: usize| -> bool {
        let (a, b) = (a.min(b), a.max(b));
        if family == Family::D && b == n - 1 {
            return a + 3 == n;
        }
        b == a + 1
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in rest {
        match blocks.iter_mut().find(|b| b.iter().any(|&j| adjacent(i, j))) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    for b in blocks {
        let k = b.len() + 1;
        if family == Family::A {
            parts.push(k);
        } else {
            parts.extend([k, k]);
        }
    }
    let used: usize = parts.iter().sum();
    if used > dim {
        return Ok(None);
    }
    parts.extend(std::iter::repeat_n(1, dim - used));
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Some(Partition(parts)))
}

/// One named check of a `--verify` run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed,
        detail,
    }
}

/// Oracle cross-checks for one type: alcove points and partitions up to
/// `oracle_rank`, and agreement of the reports across good characteristics.
pub fn verify_reports(
    rs: &RootSystem,
    reports: &[AuReport],
    oracle_rank: usize,
    budget: u64,
) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let ctype = rs.ctype();
    if rs.rank() <= oracle_rank {
        let alcove = alcove_pseudolevis_stabilized(rs, 2, budget)?;
        let enumerated = enumerated_codes(rs, budget)?;
        let as_set: BTreeSet<Vec<usize>> = enumerated.iter().cloned().collect();
        out.push(outcome(
            "alcove-pseudolevis",
            as_set == alcove.classes && as_set.len() == enumerated.len(),
            format!(
                "{} classes by subsets, {} by alcove points (bound {}, stable from {})",
                enumerated.len(),
                alcove.classes.len(),
                alcove.bound,
                alcove.first_stable
            ),
        ));
        if natural_dimension(ctype.family(), ctype.rank()).is_some() {
            let oracle: BTreeSet<LabeledDiagram> = classical_nilpotent_classes(ctype.family(), ctype.rank())?
                .into_iter()
                .map(|(_, d)| d)
                .collect();
            let ours: BTreeSet<LabeledDiagram> = reports.iter().map(|r| r.diagram.clone()).collect();
            out.push(outcome(
                "partition-diagrams",
                oracle == ours,
                format!("{} diagrams from partitions, {} reports", oracle.len(), ours.len()),
            ));
        }
    }
    let mut reference: Option<(u64, Vec<AuReport>)> = None;
    for p in [0u64, 7, 11] {
        if !is_good_prime(rs, p)? {
            continue;
        }
        let r = component_group_report_in_char(rs, p, budget)?;
        match &reference {
            None => {
                let agrees = r == reports;
                out.push(outcome(
                    "characteristic-independence",
                    agrees,
                    format!("p = {p} against the default report"),
                ));
                reference = Some((p, r));
            }
            Some((q, base)) => out.push(outcome(
                "characteristic-independence",
                *base == r,
                format!("p = {p} against p = {q}"),
            )),
        }
    }
    Ok(out)
}
