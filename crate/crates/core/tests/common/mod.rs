//! Shared generators and brute-force oracles for the integration tests.
//! The oracles work on raw bitmasks and never call the library's closure code.

#![allow(dead_code)]

use closurekit::formula::{CnfFormula, DnfFormula};
use closurekit::{ElementSet, GroundSet, Implication, ImplicationBasis};
use rand::rngs::StdRng;
use rand::Rng;

pub const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub fn ground(n: usize) -> GroundSet {
    GroundSet::new(LABELS[..n].iter().copied()).unwrap()
}

pub fn basis_from_bits(n: usize, imps: &[(u64, u64)]) -> ImplicationBasis {
    let imps = imps
        .iter()
        .map(|&(p, c)| Implication::new(ElementSet::from_bits(p), ElementSet::from_bits(c)))
        .collect();
    ImplicationBasis::new(ground(n), imps).unwrap()
}

fn nonempty_subset(rng: &mut StdRng, of: u64) -> u64 {
    debug_assert!(of != 0);
    loop {
        let s = rng.gen::<u64>() & of;
        if s != 0 {
            return s;
        }
    }
}

/// Any basis on `1..=max_n` elements: premises may be empty, conclusions are nonempty.
pub fn random_basis(rng: &mut StdRng, max_n: usize, max_imps: usize) -> ImplicationBasis {
    let n = rng.gen_range(1..=max_n);
    let full = (1u64 << n) - 1;
    let k = rng.gen_range(0..=max_imps);
    let imps: Vec<(u64, u64)> = (0..k)
        .map(|_| {
            let p = if rng.gen_bool(0.1) {
                0
            } else {
                rng.gen::<u64>() & full
            };
            (p, nonempty_subset(rng, full))
        })
        .collect();
    basis_from_bits(n, &imps)
}

/// Premises nonempty, so `φ(∅) = ∅`.
pub fn random_zero_closed_basis(
    rng: &mut StdRng,
    max_n: usize,
    max_imps: usize,
) -> ImplicationBasis {
    let n = rng.gen_range(1..=max_n);
    let full = (1u64 << n) - 1;
    let k = rng.gen_range(0..=max_imps);
    let imps: Vec<(u64, u64)> = (0..k)
        .map(|_| (nonempty_subset(rng, full), nonempty_subset(rng, full)))
        .collect();
    basis_from_bits(n, &imps)
}

/// At least one implication, every premise and conclusion nonempty and disjoint.
pub fn random_liftable_basis(rng: &mut StdRng, max_n: usize, max_imps: usize) -> ImplicationBasis {
    let n = rng.gen_range(2..=max_n);
    let full = (1u64 << n) - 1;
    let k = rng.gen_range(1..=max_imps);
    let imps: Vec<(u64, u64)> = (0..k)
        .map(|_| loop {
            let p = nonempty_subset(rng, full);
            if p != full {
                break (p, nonempty_subset(rng, full & !p));
            }
        })
        .collect();
    basis_from_bits(n, &imps)
}

pub fn respects_bits(imps: &[(u64, u64)], set: u64) -> bool {
    imps.iter().all(|&(p, c)| p & !set != 0 || c & !set == 0)
}

pub fn raw(basis: &ImplicationBasis) -> Vec<(u64, u64)> {
    basis
        .implications()
        .iter()
        .map(|i| (i.premise.bits(), i.conclusion.bits()))
        .collect()
}

/// All subsets of the ground set closed under the implications, ascending by bits.
pub fn brute_closed_sets(basis: &ImplicationBasis) -> Vec<u64> {
    let imps = raw(basis);
    let n = basis.ground().len();
    (0..1u64 << n)
        .filter(|&s| respects_bits(&imps, s))
        .collect()
}

/// Intersection of the closed supersets of `set`.
pub fn brute_closure(basis: &ImplicationBasis, set: u64) -> u64 {
    let full = basis.ground().full().bits();
    brute_closed_sets(basis)
        .into_iter()
        .filter(|&c| set & !c == 0)
        .fold(full, |acc, c| acc & c)
}

pub fn brute_closure_with(closed: &[u64], full: u64, set: u64) -> u64 {
    closed
        .iter()
        .filter(|&&c| set & !c == 0)
        .fold(full, |acc, &c| acc & c)
}

/// Equivalence checked on closed families.
pub fn brute_equivalent(a: &ImplicationBasis, b: &ImplicationBasis) -> bool {
    brute_closed_sets(a) == brute_closed_sets(b)
}

/// Satisfiable by truth table, variable values packed in the low `n` bits.
pub fn brute_sat(f: &CnfFormula) -> bool {
    (0..1u64 << f.num_vars()).any(|bits| {
        f.clauses().iter().all(|clause| {
            clause
                .iter()
                .any(|lit| ((bits >> (lit.var() - 1)) & 1 == 1) == lit.is_positive())
        })
    })
}

pub fn brute_taut(f: &DnfFormula) -> bool {
    (0..1u64 << f.num_vars()).all(|bits| {
        f.clauses().iter().any(|clause| {
            clause
                .iter()
                .all(|lit| ((bits >> (lit.var() - 1)) & 1 == 1) == lit.is_positive())
        })
    })
}

/// Every set of 1 to `width` literals over `n` variables, complementary pairs included.
pub fn all_clauses(n: usize, width: usize) -> Vec<Vec<i32>> {
    let literals: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    fn rec(
        literals: &[i32],
        width: usize,
        start: usize,
        current: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == width {
            return;
        }
        for i in start..literals.len() {
            current.push(literals[i]);
            rec(literals, width, i + 1, current, out);
            current.pop();
        }
    }
    rec(&literals, width, 0, &mut Vec::new(), &mut out);
    out
}

/// All multisets of `1..=max_m` clauses drawn from `clauses` (nondecreasing index order).
pub fn clause_multisets(clauses: &[Vec<i32>], max_m: usize) -> Vec<Vec<Vec<i32>>> {
    let mut out = Vec::new();
    fn rec(
        clauses: &[Vec<i32>],
        max_m: usize,
        start: usize,
        current: &mut Vec<Vec<i32>>,
        out: &mut Vec<Vec<Vec<i32>>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_m {
            return;
        }
        for i in start..clauses.len() {
            current.push(clauses[i].clone());
            rec(clauses, max_m, i, current, out);
            current.pop();
        }
    }
    rec(clauses, max_m, 0, &mut Vec::new(), &mut out);
    out
}

/// Rewrites a basis into an equivalent one: conclusions are split or widened
/// inside the premise closure, implied implications are added, order is shuffled.
pub fn mutate_equivalent(rng: &mut StdRng, basis: &ImplicationBasis) -> ImplicationBasis {
    let n = basis.ground().len();
    let full = (1u64 << n) - 1;
    let closure = |s: u64| brute_closure(basis, s);
    let mut imps: Vec<(u64, u64)> = Vec::new();
    for &(p, c) in &raw(basis) {
        match rng.gen_range(0..3) {
            0 => {
                // split into single-element conclusions
                for i in 0..n {
                    if c >> i & 1 == 1 {
                        imps.push((p, 1 << i));
                    }
                }
            }
            1 => {
                // widen the conclusion inside φ(p)
                let extra = rng.gen::<u64>() & closure(p);
                imps.push((p, c | extra));
            }
            _ => imps.push((p, c)),
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let p = rng.gen::<u64>() & full;
        let hull = closure(p);
        let c = rng.gen::<u64>() & hull;
        if c != 0 {
            imps.push((p, c));
        }
    }
    for i in (1..imps.len()).rev() {
        imps.swap(i, rng.gen_range(0..=i));
    }
    basis_from_bits(n, &imps)
}
