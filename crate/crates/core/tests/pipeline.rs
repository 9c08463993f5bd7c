use std::collections::BTreeSet;

use proptest::prelude::*;
use ucomp_core::balacarter::distinguished_labelings;
use ucomp_core::canon::DEFAULT_BUDGET;
use ucomp_core::compgroup::{count_pair_orbits, raw_triples, LeviIndex};
use ucomp_core::oracle::{
    alcove_pseudolevis_stabilized, classical_nilpotent_classes, diagram_partition,
    distinguished_partitions, enumerated_codes, levi_partition, pair_orbit, partitions,
};
use ucomp_core::pseudolevi::{extended_diagram, root_residues};
use ucomp_core::rootsys::WeylWord;
use ucomp_core::*;

fn types(names: &[&str]) -> Vec<CartanType> {
    names.iter().map(|s| s.parse().unwrap()).collect()
}

fn classical_small() -> Vec<CartanType> {
    types(&[
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
    ])
}

#[test]
fn subset_enumeration_matches_alcove_points() {
    for t in CartanType::all_up_to_rank(4) {
        let rs = build_root_system(t);
        let stable = alcove_pseudolevis_stabilized(&rs, 2, DEFAULT_BUDGET).unwrap();
        let codes = enumerated_codes(&rs, DEFAULT_BUDGET).unwrap();
        let set: BTreeSet<Vec<usize>> = codes.iter().cloned().collect();
        assert_eq!(set.len(), codes.len(), "{t}: two classes share a code");
        assert_eq!(set, stable.classes, "{t}");
    }
}

#[test]
fn distinguished_sweep_matches_partitions() {
    for n in 1..=8 {
        let rs = build_root_system(CartanType::new(Family::A, n).unwrap());
        assert_eq!(distinguished_labelings(&rs), vec![vec![2; n]]);
        assert_eq!(distinguished_partitions(Family::A, n).unwrap().len(), 1);
    }
    for t in types(&["B2", "B3", "B4", "C2", "C3", "C4", "D4"]) {
        let rs = build_root_system(t);
        let swept: BTreeSet<Vec<u8>> = distinguished_labelings(&rs).into_iter().collect();
        let dist = distinguished_partitions(t.family(), t.rank()).unwrap();
        let from_partitions: BTreeSet<Vec<u8>> = classical_nilpotent_classes(t.family(), t.rank())
            .unwrap()
            .into_iter()
            .filter(|(p, _)| dist.contains(p))
            .map(|(_, d)| d.labels().to_vec())
            .collect();
        assert_eq!(swept, from_partitions, "{t}");
    }
}

#[test]
fn order_one_diagrams_match_partitions() {
    for t in classical_small() {
        let rs = build_root_system(t);
        let triples = enumerate_triples(&rs).unwrap();
        let ours: Vec<LabeledDiagram> = triples
            .iter()
            .filter(|r| r.order == 1)
            .map(|r| r.induced.clone())
            .collect();
        let set: BTreeSet<LabeledDiagram> = ours.iter().cloned().collect();
        assert_eq!(set.len(), ours.len(), "{t}: repeated diagram among order-one records");
        let oracle: BTreeSet<LabeledDiagram> = classical_nilpotent_classes(t.family(), t.rank())
            .unwrap()
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        assert_eq!(set, oracle, "{t}");
    }
}

#[test]
fn levi_induction_matches_partition_route() {
    for t in classical_small() {
        let rs = build_root_system(t);
        let simple = NodeSet::simple(rs.rank());
        for r in raw_triples(&rs, DEFAULT_BUDGET).unwrap() {
            if !r.nodes.is_subset(simple) {
                continue;
            }
            let expected = levi_partition(t, r.nodes, &r.labels).unwrap();
            let got = diagram_partition(t.family(), t.rank(), &r.induced).unwrap();
            assert!(expected.is_some(), "{t}: {}", r.describe(rs.rank()));
            assert_eq!(got, expected, "{t}: {}", r.describe(rs.rank()));
        }
    }
}

#[test]
fn type_a_reports_are_partitions() {
    for n in 1..=8 {
        let rs = build_root_system(CartanType::new(Family::A, n).unwrap());
        let reports = component_group_report(&rs).unwrap();
        assert_eq!(reports.len(), partitions(n + 1).len());
        for r in &reports {
            assert_eq!(r.group, GroupName::Trivial);
            assert_eq!(r.orders(), vec![1]);
        }
    }
}

#[test]
fn pairs_conjugate_agrees_with_full_orbits() {
    for t in CartanType::all_up_to_rank(3) {
        let rs = build_root_system(t);
        let raw = raw_triples(&rs, DEFAULT_BUDGET).unwrap();
        for a in &raw {
            let orbit = pair_orbit(&rs, a.subsystem, &a.lam, 1_000_000).unwrap();
            for b in &raw {
                let truth = orbit.contains(&(b.subsystem, b.lam.clone()));
                let fast = pairs_conjugate(&rs, a, b, DEFAULT_BUDGET).unwrap();
                assert_eq!(fast, truth, "{t}: {} vs {}", a.describe(t.rank()), b.describe(t.rank()));
                assert_eq!(truth, a.key == b.key, "{t}: key disagrees");
            }
        }
    }
}

#[test]
fn pairs_conjugate_is_symmetric() {
    for t in types(&["B4", "C4", "D4", "F4"]) {
        let rs = build_root_system(t);
        let raw = raw_triples(&rs, DEFAULT_BUDGET).unwrap();
        for a in &raw {
            assert!(pairs_conjugate(&rs, a, a, DEFAULT_BUDGET).unwrap());
            for b in &raw {
                let ab = pairs_conjugate(&rs, a, b, DEFAULT_BUDGET).unwrap();
                let ba = pairs_conjugate(&rs, b, a, DEFAULT_BUDGET).unwrap();
                assert_eq!(ab, ba);
                assert_eq!(ab, a.key == b.key);
            }
        }
    }
}

#[test]
fn orbit_counts_and_levi_bala_carter_data() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        let raw = raw_triples(&rs, DEFAULT_BUDGET).unwrap();
        let reports = component_group_report(&rs).unwrap();
        let classes: usize = reports.iter().map(|r| r.classes.len()).sum();
        assert_eq!(count_pair_orbits(&rs, &raw, DEFAULT_BUDGET).unwrap(), classes, "{t}");
        let levis = LeviIndex::new(&rs, DEFAULT_BUDGET).unwrap();
        for r in &reports {
            let ones: Vec<_> = r.classes.iter().filter(|c| c.order == 1).collect();
            assert_eq!(ones.len(), 1, "{t} {}", r.diagram);
            assert!(levis.contains(&rs, ones[0].nodes, DEFAULT_BUDGET).unwrap());
        }
    }
}

#[test]
fn orders_divide_marks_off_j() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        let ext = extended_diagram(&rs);
        for r in enumerate_triples(&rs).unwrap() {
            for node in 0..=rs.rank() {
                if !r.nodes.contains(node) {
                    assert_eq!(ext.mark(node) % r.order, 0, "{t}");
                }
            }
        }
    }
}

#[test]
fn every_residue_is_realized_by_a_root() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        for class in enumerate_pseudolevis(&rs).unwrap() {
            let residues = root_residues(&rs, class.rep.nodes).unwrap();
            let want: BTreeSet<i64> = (0..class.rep.d_j).collect();
            assert_eq!(residues, want, "{t} {}", class.rep.nodes.display(rs.rank()));
        }
    }
}

#[test]
fn witnesses_round_trip() {
    for t in CartanType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        for p in [0u64, 7] {
            for class in enumerate_pseudolevis(&rs).unwrap() {
                let j = class.rep.nodes;
                let s = witness_element(&rs, j, p).unwrap();
                assert_eq!(alcove_reduce(&rs, &s).walls, j, "{t}");
                if p != 0 {
                    assert_ne!(s.torus_order() % p as i64, 0);
                }
            }
        }
    }
}

fn word_and_type() -> impl Strategy<Value = (CartanType, Vec<usize>, usize)> {
    prop::sample::select(types(&["B3", "C3", "G2", "D4", "F4", "E6"])).prop_flat_map(|t| {
        (
            Just(t),
            prop::collection::vec(0..t.rank(), 0..30),
            0usize..200,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn induced_diagram_is_weyl_invariant((t, word, pick) in word_and_type()) {
        let rs = build_root_system(t);
        let raw = raw_triples(&rs, DEFAULT_BUDGET).unwrap();
        let r = &raw[pick % raw.len()];
        let moved = WeylWord { word }.apply_cochar(&rs, &r.lam);
        prop_assert_eq!(induced_diagram(&rs, &moved).unwrap(), r.induced.clone());
    }
}
