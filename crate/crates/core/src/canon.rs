//! Canonical keys for `W`-orbits of (optionally labeled) bases of root
//! subsystems.
//!
//! A linearly independent tuple of roots `(b_0, .., b_{k-1})` is encoded by the
//! cocharacter `v = sum_m M^m b_m^vee`. With `M = 25`, two tuples are
//! `W`-conjugate entry by entry exactly when their `v` are, because coroot
//! coefficients over the simple coroots are at most 6 in absolute value and
//! base-`M` expansions with digits in `[-12, 12]` are unique. Conjugacy of `v`
//! is decided by its dominant representative.
//!
//! For an unordered base the tuple order is fixed up to diagram automorphisms
//! by taking the lexicographically least ordering of the (labeled) Cartan
//! matrix; the key is the least dominant `v` over all orderings that attain it.

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

const RADIX: i64 = 25;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Canonical key of the `W`-orbit of a base (given as root indices), with
/// optional per-node labels that conjugation must preserve.
pub fn base_key(
    rs: &RootSystem,
    base: &[usize],
    labels: Option<&[u8]>,
    budget: u64,
) -> Result<Vec<i64>> {
    let k = base.len();
    if let Some(l) = labels {
        if l.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: l.len(),
            });
        }
    }
    let cartan: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| rs.root_pairing(base[j], base[i])).collect())
        .collect();
    let label = |i: usize| labels.map_or(0, |l| l[i] as i64);

    let mut search = OrderSearch {
        k,
        cartan: &cartan,
        label: &label,
        best: None,
        leaves: Vec::new(),
        visited: 0,
        budget,
    };
    let mut order = Vec::with_capacity(k);
    let mut prefix = Vec::new();
    search.dfs(&mut order, 0u32, &mut prefix)?;
    let shape = search.best.unwrap_or_default();

    let n = rs.rank();
    let mut best_v: Option<Vec<i64>> = None;
    for ord in &search.leaves {
        let mut v = vec![0i64; n];
        let mut scale = 1i64;
        for &pos in ord {
            for (x, &c) in v.iter_mut().zip(rs.coroot(base[pos])) {
                *x += scale * c;
            }
            scale *= RADIX;
        }
        rs.dominate_ints(&mut v);
        if best_v.as_ref().is_none_or(|b| v < *b) {
            best_v = Some(v);
        }
    }
    let mut key = Vec::with_capacity(1 + shape.len() + n);
    key.push(k as i64);
    key.extend(shape);
    key.extend(best_v.unwrap_or_else(|| vec![0; n]));
    Ok(key)
}

struct OrderSearch<'a, F: Fn(usize) -> i64> {
    k: usize,
    cartan: &'a [Vec<i64>],
    label: &'a F,
    best: Option<Vec<i64>>,
    leaves: Vec<Vec<usize>>,
    visited: u64,
    budget: u64,
}

impl<F: Fn(usize) -> i64> OrderSearch<'_, F> {
    fn dfs(&mut self, order: &mut Vec<usize>, used: u32, prefix: &mut Vec<i64>) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                context: "ordering a subsystem base".into(),
            });
        }
        if order.len() == self.k {
            match &self.best {
                Some(b) if prefix == b => self.leaves.push(order.clone()),
                _ => {
                    self.best = Some(prefix.clone());
                    self.leaves = vec![order.clone()];
                }
            }
            return Ok(());
        }
        for next in 0..self.k {
            if used >> next & 1 == 1 {
                continue;
            }
            let mark = prefix.len();
            prefix.push((self.label)(next));
            for &prev in order.iter() {
                prefix.push(self.cartan[next][prev]);
                prefix.push(self.cartan[prev][next]);
            }
            let keep = match &self.best {
                Some(b) => prefix[..] <= b[..prefix.len()],
                None => true,
            };
            if keep {
                order.push(next);
                self.dfs(order, used | 1 << next, prefix)?;
                order.pop();
            }
            prefix.truncate(mark);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn simple_roots_of_a2_are_conjugate() {
        let rs = build_root_system("A2".parse().unwrap());
        let a = base_key(&rs, &[rs.simple_root_index(0)], None, DEFAULT_BUDGET).unwrap();
        let b = base_key(&rs, &[rs.simple_root_index(1)], None, DEFAULT_BUDGET).unwrap();
        let c = base_key(&rs, &[rs.highest_root_index()], None, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn short_and_long_roots_differ() {
        let rs = build_root_system("G2".parse().unwrap());
        let short = base_key(&rs, &[rs.simple_root_index(0)], None, DEFAULT_BUDGET).unwrap();
        let long = base_key(&rs, &[rs.simple_root_index(1)], None, DEFAULT_BUDGET).unwrap();
        assert_ne!(short, long);
    }

    #[test]
    fn base_order_is_irrelevant() {
        let rs = build_root_system("B3".parse().unwrap());
        let s: Vec<usize> = (0..3).map(|i| rs.simple_root_index(i)).collect();
        let a = base_key(&rs, &s, Some(&[2, 0, 2]), DEFAULT_BUDGET).unwrap();
        let b = base_key(&rs, &[s[2], s[0], s[1]], Some(&[2, 2, 0]), DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        let c = base_key(&rs, &s, Some(&[2, 2, 0]), DEFAULT_BUDGET).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn budget_is_enforced() {
        let rs = build_root_system("D4".parse().unwrap());
        let s: Vec<usize> = (0..4).map(|i| rs.simple_root_index(i)).collect();
        let err = base_key(&rs, &s, None, 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
