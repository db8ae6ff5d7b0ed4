//! End-to-end instance checks for the three reductions. Each verifier
//! recomputes both sides of the claimed equivalence with the exhaustive
//! solvers and reports every mismatch it finds instead of stopping at the first.

use serde::Serialize;

use super::{
    assignment_to_generator, cg_lift, cnf_satisfiable, dnf_tautology, dnf_to_cg,
    extract_min_generator, falsifying_to_violation, sat_to_mingen,
};
use crate::closure::respects;
use crate::error::Result;
use crate::formula::{Assignment, CnfFormula, DnfFormula};
use crate::geometry::is_convex_geometry_with;
use crate::limits::Limits;
use crate::model::{GroundSet, ImplicationBasis};
use crate::optimizer::{min_generator_with, optimum_basis_with};

/// Above this many variables the per-assignment generator cross-check is skipped.
const ASSIGNMENT_SWEEP_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledImplication {
    pub premise: Vec<String>,
    pub conclusion: Vec<String>,
}

impl LabeledImplication {
    pub fn list(basis: &ImplicationBasis) -> Vec<Self> {
        let g = basis.ground();
        basis
            .implications()
            .iter()
            .map(|imp| Self {
                premise: g.names(imp.premise),
                conclusion: g.names(imp.conclusion),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub closed: Vec<String>,
    pub x: String,
    pub y: String,
}

impl WitnessReport {
    pub fn new(ground: &GroundSet, w: &crate::geometry::AntiExchangeWitness) -> Self {
        Self {
            closed: ground.names(w.closed),
            x: ground.label(w.x).to_string(),
            y: ground.label(w.y).to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma31Report {
    pub holds: bool,
    pub num_vars: usize,
    pub num_clauses: usize,
    pub satisfying_assignment: Option<Vec<bool>>,
    pub min_generator: Vec<String>,
    pub min_generator_size: usize,
    /// For unsatisfiable formulas: whether the minimum is exactly `n + 1`.
    /// Observational only, never part of `holds`.
    pub unsat_minimum_is_n_plus_one: Option<bool>,
    pub assignments_checked: bool,
    pub failures: Vec<String>,
}

pub fn verify_lemma31(formula: &CnfFormula) -> Result<Lemma31Report> {
    verify_lemma31_with(formula, &Limits::default())
}

pub fn verify_lemma31_with(formula: &CnfFormula, limits: &Limits) -> Result<Lemma31Report> {
    let n = formula.num_vars();
    let gadget = sat_to_mingen(formula);
    let satisfying = cnf_satisfiable(formula)?;
    let min = min_generator_with(&gadget.basis, limits)?;
    let ground = gadget.basis.ground();
    let mut failures = Vec::new();

    if (min.len() == n) != satisfying.is_some() {
        failures.push(format!(
            "minimum generator has {} elements but the formula is {}",
            min.len(),
            if satisfying.is_some() {
                "satisfiable"
            } else {
                "unsatisfiable"
            }
        ));
    }
    for i in 0..n {
        if !min.contains(gadget.var_to_x[i]) && !min.contains(gadget.var_to_y[i]) {
            failures.push(format!(
                "minimum generator {} misses both x{} and y{}",
                ground.display(min),
                i + 1,
                i + 1
            ));
        }
    }

    let assignments_checked = n <= ASSIGNMENT_SWEEP_CAP;
    if assignments_checked {
        for a in Assignment::all(n) {
            let s = assignment_to_generator(&gadget, &a)?;
            let generates = gadget.basis.close(s) == ground.full();
            if generates != formula.evaluate(&a)? {
                failures.push(format!(
                    "assignment {:?}: generator test {} disagrees with evaluation",
                    a.values(),
                    generates
                ));
            }
        }
    }

    Ok(Lemma31Report {
        holds: failures.is_empty(),
        num_vars: n,
        num_clauses: formula.clauses().len(),
        unsat_minimum_is_n_plus_one: satisfying.is_none().then_some(min.len() == n + 1),
        satisfying_assignment: satisfying.map(|a| a.values().to_vec()),
        min_generator: ground.names(min),
        min_generator_size: min.len(),
        assignments_checked,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm41Report {
    pub holds: bool,
    /// False when the optimum search ran out of budget; the optimum-shape
    /// checks are then skipped.
    pub certified: bool,
    pub convex_geometry: bool,
    pub lifted: Vec<LabeledImplication>,
    pub optimum: Vec<LabeledImplication>,
    pub optimum_size: usize,
    pub extracted_generator: Option<Vec<String>>,
    pub min_generator: Vec<String>,
    pub failures: Vec<String>,
}

pub fn verify_thm41(basis: &ImplicationBasis) -> Result<Thm41Report> {
    verify_thm41_with(basis, &Limits::default())
}

pub fn verify_thm41_with(basis: &ImplicationBasis, limits: &Limits) -> Result<Thm41Report> {
    let gadget = cg_lift(basis)?;
    let lifted = &gadget.basis;
    let ground = lifted.ground();
    let mut failures = Vec::new();

    let verdict = is_convex_geometry_with(lifted, limits)?;
    if !verdict.is_convex_geometry {
        failures.push(match verdict.anti_exchange_witness {
            Some(w) => format!(
                "lift is not a convex geometry: A={}, x={}, y={}",
                ground.display(w.closed),
                ground.label(w.x),
                ground.label(w.y)
            ),
            None => "lift is not a convex geometry".to_string(),
        });
    }
    for (l, r) in gadget.left.iter().zip(&gadget.right) {
        let hull = l.union(*r);
        if !respects(lifted, hull) || lifted.close(*l) != hull {
            failures.push(format!(
                "φ({}) ≠ {}",
                ground.display(*l),
                ground.display(hull)
            ));
        }
    }

    let min = min_generator_with(basis, limits)?;
    let optimum = optimum_basis_with(lifted, limits)?;
    let mut extracted = None;
    if optimum.certified {
        if optimum.basis.cardinality() != optimum.canonical.cardinality() {
            failures.push(format!(
                "optimum has {} implications, canonical basis has {}",
                optimum.basis.cardinality(),
                optimum.canonical.cardinality()
            ));
        }
        match extract_min_generator(&gadget, &optimum) {
            Ok(s) => {
                if s.len() != min.len() {
                    failures.push(format!(
                        "extracted generator {} has {} elements, minimum is {}",
                        basis.ground().display(s),
                        s.len(),
                        min.len()
                    ));
                }
                if basis.close(s) != basis.ground().full() {
                    failures.push(format!(
                        "extracted set {} does not generate",
                        basis.ground().display(s)
                    ));
                }
                extracted = Some(basis.ground().names(s));
            }
            Err(e) => failures.push(e.to_string()),
        }
    }

    Ok(Thm41Report {
        holds: failures.is_empty(),
        certified: optimum.certified,
        convex_geometry: verdict.is_convex_geometry,
        lifted: LabeledImplication::list(lifted),
        optimum: LabeledImplication::list(&optimum.basis),
        optimum_size: optimum.size,
        extracted_generator: extracted,
        min_generator: basis.ground().names(min),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm51Report {
    pub holds: bool,
    pub tautology: bool,
    pub falsifying_assignment: Option<Vec<bool>>,
    pub convex_geometry: bool,
    /// The violation built from the falsifying assignment, when there is one.
    pub witness: Option<WitnessReport>,
    pub failures: Vec<String>,
}

pub fn verify_thm51(formula: &DnfFormula) -> Result<Thm51Report> {
    verify_thm51_with(formula, &Limits::default())
}

pub fn verify_thm51_with(formula: &DnfFormula, limits: &Limits) -> Result<Thm51Report> {
    let gadget = dnf_to_cg(formula)?;
    let basis = &gadget.basis;
    let ground = basis.ground();
    let falsifying = dnf_tautology(formula)?;
    let verdict = is_convex_geometry_with(basis, limits)?;
    let mut failures = Vec::new();

    if verdict.is_convex_geometry != falsifying.is_none() {
        failures.push(format!(
            "convex geometry = {} but tautology = {}",
            verdict.is_convex_geometry,
            falsifying.is_none()
        ));
    }

    let mut witness = None;
    if let Some(a) = &falsifying {
        let w = falsifying_to_violation(&gadget, a)?;
        let full = ground.full();
        let valid = respects(basis, w.closed)
            && w.closed != full
            && w.x != w.y
            && !w.closed.contains(w.x)
            && !w.closed.contains(w.y)
            && basis.close(w.closed.with(w.x)).contains(w.y)
            && basis.close(w.closed.with(w.y)).contains(w.x);
        if !valid {
            failures.push(format!(
                "constructed triple ({}, {}, {}) is not an anti-exchange violation",
                ground.display(w.closed),
                ground.label(w.x),
                ground.label(w.y)
            ));
        }
        witness = Some(WitnessReport::new(ground, &w));
    }

    Ok(Thm51Report {
        holds: failures.is_empty(),
        tautology: falsifying.is_none(),
        falsifying_assignment: falsifying.map(|a| a.values().to_vec()),
        convex_geometry: verdict.is_convex_geometry,
        witness,
        failures,
    })
}
