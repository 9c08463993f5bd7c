//! Component groups of centralizers of unipotent elements in simple adjoint
//! groups, computed from pseudo-Levi subsystems of the extended Dynkin diagram
//! and distinguished classes of their Levi-type factors.

pub mod balacarter;
pub mod canon;
pub mod compgroup;
pub mod error;
pub mod induce;
pub mod oracle;
pub mod pseudolevi;
pub mod rootsys;

pub use compgroup::{
    component_group_report, component_group_report_in_char, component_group_report_with_budget,
    enumerate_triples, pairs_conjugate, recognize_group, AuReport, GroupName, TripleRecord,
};
pub use error::{Error, Result};
pub use induce::{cochar_from_labels, induced_diagram, LabeledDiagram};
pub use pseudolevi::{enumerate_pseudolevis, witness_element, PseudoLevi, PseudoLeviClass};
pub use rootsys::{
    alcove_reduce, build_root_system, is_good_prime, to_dominant, CartanType, CocharVec, Family,
    NodeSet, RootSystem, RootVec,
};
