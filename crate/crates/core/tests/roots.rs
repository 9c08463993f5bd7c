use std::collections::BTreeSet;

use num_rational::Rational64;
use proptest::prelude::*;
use ucomp_core::oracle::cochar_orbit;
use ucomp_core::rootsys::{pairing, NodeSet};
use ucomp_core::*;

/// Roots obtained by reflecting the simple roots until nothing new appears.
fn reflection_closure(cartan: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = cartan.len();
    let mut roots: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let mut added = Vec::new();
        for beta in &roots {
            for (i, row) in cartan.iter().enumerate() {
                let c: i64 = beta.iter().zip(row).map(|(b, a)| b * a).sum();
                let mut image = beta.clone();
                image[i] -= c;
                if !roots.contains(&image) {
                    added.push(image);
                }
            }
        }
        if added.is_empty() {
            return roots;
        }
        roots.extend(added);
    }
}

fn closed_form_positive(t: CartanType) -> usize {
    let n = t.rank();
    match t.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => [36, 63, 120][n - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

#[test]
fn root_counts_match_closed_forms_and_closure() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        assert_eq!(rs.num_positive(), closed_form_positive(t), "{t}");
        let ours: BTreeSet<Vec<i64>> = rs.roots().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(ours.len(), 2 * rs.num_positive(), "{t}");
        assert_eq!(ours, reflection_closure(rs.cartan()), "{t}");
    }
}

#[test]
fn high_rank_classical_counts() {
    for n in [9, 12, 15] {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            let t = CartanType::new(f, n).unwrap();
            assert_eq!(build_root_system(t).num_positive(), closed_form_positive(t));
        }
    }
}

#[test]
fn good_prime_table() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        for p in [0u64, 2, 3, 5, 7] {
            let bad = match p {
                2 => t.family() != Family::A,
                3 => matches!(t.family(), Family::G | Family::F | Family::E),
                5 => t == "E8".parse().unwrap(),
                _ => false,
            };
            assert_eq!(is_good_prime(&rs, p).unwrap(), !bad, "{t} p={p}");
        }
    }
    let a1 = build_root_system("A1".parse().unwrap());
    assert!(matches!(is_good_prime(&a1, 4), Err(Error::NotPrime(4))));
}

#[test]
fn highest_root_is_unique_maximum() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        let theta = rs.highest_root();
        for r in rs.positive_roots() {
            assert!(r.coords().iter().zip(theta.coords()).all(|(a, b)| a <= b), "{t}");
        }
    }
}

fn small_type() -> impl Strategy<Value = CartanType> {
    prop::sample::select(
        ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "E6"]
            .iter()
            .map(|s| s.parse::<CartanType>().unwrap())
            .collect::<Vec<_>>(),
    )
}

fn rational_vec(n: usize) -> impl Strategy<Value = CocharVec> {
    prop::collection::vec((-20i64..20, 1i64..8), n)
        .prop_map(|v| CocharVec::new(v.into_iter().map(|(a, b)| Rational64::new(a, b)).collect()))
}

fn typed_vector() -> impl Strategy<Value = (CartanType, CocharVec)> {
    small_type().prop_flat_map(|t| (Just(t), rational_vec(t.rank())))
}

proptest! {
    #[test]
    fn dominant_form_is_idempotent_and_conjugate((t, lam) in typed_vector()) {
        let rs = build_root_system(t);
        let (dom, word) = to_dominant(&rs, &lam);
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(word.apply_cochar(&rs, &lam), dom.clone());
        let (again, w2) = to_dominant(&rs, &dom);
        prop_assert_eq!(again, dom.clone());
        prop_assert!(w2.is_empty());
        prop_assert_eq!(word.inverse().apply_cochar(&rs, &dom), lam);
    }

    #[test]
    fn alcove_reduction_replays((t, lam) in typed_vector()) {
        let rs = build_root_system(t);
        let red = alcove_reduce(&rs, &lam);
        prop_assert_eq!(red.replay_inverse(&rs), lam);
        prop_assert!(red.point.is_dominant());
        let ht = pairing(rs.highest_root(), &red.point).unwrap();
        prop_assert!(ht <= Rational64::from_integer(1));
        prop_assert!(red.walls != NodeSet::extended(rs.rank()));
        let again = alcove_reduce(&rs, &red.point);
        prop_assert_eq!(again.point, red.point);
        prop_assert_eq!(again.walls, red.walls);
    }
}

#[test]
fn small_orbits_have_one_dominant_member() {
    for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let rs = build_root_system(t.parse().unwrap());
        let n = rs.rank();
        for seed in 0..30i64 {
            let lam = CocharVec::new(
                (0..n)
                    .map(|i| Rational64::new((seed * 7 + i as i64 * 5) % 9 - 4, 1 + (seed + i as i64) % 3))
                    .collect(),
            );
            let orbit = cochar_orbit(&rs, &lam, 100_000).unwrap();
            let dominant: Vec<&CocharVec> = orbit.iter().filter(|v| v.is_dominant()).collect();
            assert_eq!(dominant.len(), 1, "{t} {lam}");
            assert_eq!(*dominant[0], to_dominant(&rs, &lam).0);
        }
    }
}
