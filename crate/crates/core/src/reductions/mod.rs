//! Gadget builders for the three hardness reductions, truth-table oracles,
//! and end-to-end instance verifiers.

mod dnf;
mod lift;
mod oracle;
mod sat;
mod verify;

pub use dnf::{dnf_to_cg, falsifying_to_violation, DnfGadget};
pub use lift::{cg_lift, extract_min_generator, LiftGadget};
pub use oracle::{cnf_satisfiable, dnf_tautology, TRUTH_TABLE_CAP};
pub use sat::{assignment_to_generator, sat_to_mingen, SatGadget};
pub use verify::{
    verify_lemma31, verify_lemma31_with, verify_thm41, verify_thm41_with, verify_thm51,
    verify_thm51_with, LabeledImplication, Lemma31Report, Thm41Report, Thm51Report, WitnessReport,
};
