//! Command-line front end. Exit codes: 0 success or the property holds,
//! 1 the property fails, 2 usage or parse error, 3 cap or budget exceeded.
//! `--json` output follows `docs/cli-schema.json`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::basis::SystemAnalysis;
use crate::closure::{closure, enumerate_closed_sets_with};
use crate::error::Error;
use crate::formula::Formula;
use crate::geometry::is_convex_geometry_with;
use crate::io::{is_valid_label, parse_basis, parse_formula, serialize_basis};
use crate::limits::Limits;
use crate::model::{ElementSet, GroundSet, ImplicationBasis};
use crate::optimizer::{min_generator_with, optimum_basis_with};
use crate::reductions::{
    cg_lift, cnf_satisfiable, dnf_tautology, dnf_to_cg, sat_to_mingen, verify_lemma31_with,
    verify_thm41_with, verify_thm51_with, LabeledImplication, WitnessReport,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const CAP_ENV: &str = "CLOSUREKIT_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "closurekit",
    version,
    about = "Closure systems, convex geometries and implication bases"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closure of a comma-separated set of labels.
    Closure {
        #[arg(long)]
        basis: PathBuf,
        /// e.g. `a,b`; an empty string is the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Every closed set in lectic order.
    ClosedSets {
        #[arg(long)]
        basis: PathBuf,
    },
    /// Decide whether the basis presents a convex geometry.
    IsGeometry {
        #[arg(long)]
        basis: PathBuf,
        /// Print witnesses of failure.
        #[arg(long)]
        witness: bool,
    },
    /// Critical sets and the canonical basis.
    Canonical {
        #[arg(long)]
        basis: PathBuf,
    },
    /// Minimum-size equivalent basis.
    Optimum {
        #[arg(long)]
        basis: PathBuf,
        /// Candidate combinations to test before giving up certification.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Lectic-least generator of minimum cardinality.
    MinGenerator {
        #[arg(long)]
        basis: PathBuf,
    },
    /// Truth-table oracle.
    Oracle {
        problem: OracleProblem,
        #[arg(long)]
        formula: PathBuf,
    },
    /// Build a reduction gadget and write it as a basis document.
    Reduce {
        reduction: Reduction,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Check a reduction end to end on one instance.
    Verify {
        theorem: Theorem,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleProblem {
    Sat,
    Taut,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Reduction {
    #[value(name = "sat2gen")]
    SatToGen,
    #[value(name = "gen2cg")]
    GenToCg,
    #[value(name = "dnf2cg")]
    DnfToCg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Theorem {
    #[value(name = "lemma31")]
    Lemma31,
    #[value(name = "thm41")]
    Thm41,
    #[value(name = "thm51")]
    Thm51,
}

/// A failure that ends the command with a diagnostic on stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text lines, a JSON document, and the exit code.
struct Outcome {
    code: i32,
    /// Printed to stderr.
    warning: Option<String>,
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams; reads `CLOSUREKIT_CAP` from the environment.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let json = cli.json;
    let result = limits_from_env().and_then(|limits| execute(cli.command, &limits));
    match result {
        Ok(outcome) => {
            if json {
                let mut doc = outcome.json;
                if let Value::Object(map) = &mut doc {
                    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
                    map.insert("exit_code".into(), json!(outcome.code));
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                let _ = write!(out, "{}", outcome.text);
            }
            if let Some(w) = &outcome.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            if json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "exit_code": failure.code,
                    "error": failure.message,
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            }
            failure.code
        }
    }
}

fn limits_from_env() -> Result<Limits, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => {
            let cap: usize = raw.trim().parse().map_err(|_| {
                Failure::usage(format!("{CAP_ENV} must be an integer, got `{raw}`"))
            })?;
            Ok(Limits::default().with_subset_cap(cap, true)?)
        }
        Err(_) => Ok(Limits::default()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_basis(path: &Path) -> Result<ImplicationBasis, Failure> {
    parse_basis(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_formula(path: &Path) -> Result<Formula, Failure> {
    parse_formula(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_set(ground: &GroundSet, raw: &str) -> Result<ElementSet, Failure> {
    let mut set = ElementSet::empty();
    for label in raw.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        if !is_valid_label(label) {
            return Err(Failure::usage(format!("invalid label `{label}`")));
        }
        let index = ground
            .index_of(label)
            .ok_or_else(|| Failure::usage(format!("unknown element `{label}`")))?;
        set.insert(index);
    }
    Ok(set)
}

fn braces(ground: &GroundSet, set: ElementSet) -> String {
    format!("{{{}}}", ground.names(set).join(","))
}

fn implication_lines(basis: &ImplicationBasis) -> String {
    let g = basis.ground();
    basis
        .implications()
        .iter()
        .map(|imp| {
            format!(
                "{} -> {}\n",
                braces(g, imp.premise),
                braces(g, imp.conclusion)
            )
        })
        .collect()
}

fn execute(command: Command, limits: &Limits) -> Result<Outcome, Failure> {
    match command {
        Command::Closure { basis, set } => {
            let basis = load_basis(&basis)?;
            let g = basis.ground();
            let start = parse_set(g, &set)?;
            let hull = closure(&basis, start)?;
            Ok(Outcome {
                warning: None,
                code: EXIT_OK,
                text: format!("{}\n", braces(g, hull)),
                json: json!({
                    "command": "closure",
                    "set": g.names(start),
                    "closure": g.names(hull),
                }),
            })
        }
        Command::ClosedSets { basis } => {
            let basis = load_basis(&basis)?;
            let g = basis.ground();
            let family = enumerate_closed_sets_with(&basis, limits)?;
            let text: String = family
                .sets()
                .iter()
                .map(|s| format!("{}\n", braces(g, *s)))
                .collect();
            let sets: Vec<Vec<String>> = family.sets().iter().map(|s| g.names(*s)).collect();
            Ok(Outcome {
                warning: None,
                code: EXIT_OK,
                text,
                json: json!({
                    "command": "closed-sets",
                    "count": sets.len(),
                    "closed_sets": sets,
                }),
            })
        }
        Command::IsGeometry { basis, witness } => {
            let basis = load_basis(&basis)?;
            let g = basis.ground();
            let v = is_convex_geometry_with(&basis, limits)?;
            let mut text = format!(
                "convex geometry: {}\n",
                if v.is_convex_geometry { "yes" } else { "no" }
            );
            if witness && !v.is_convex_geometry {
                text.push_str(&format!(
                    "zero-closed: {}\n",
                    if v.zero_closed { "yes" } else { "no" }
                ));
                if let Some(w) = &v.anti_exchange_witness {
                    text.push_str(&format!(
                        "anti-exchange witness: A={}, x={}, y={}\n",
                        braces(g, w.closed),
                        g.label(w.x),
                        g.label(w.y)
                    ));
                }
                if let Some(a) = v.extension_witness {
                    text.push_str(&format!("extension witness: A={}\n", braces(g, a)));
                }
            }
            Ok(Outcome {
                warning: None,
                code: if v.is_convex_geometry {
                    EXIT_OK
                } else {
                    EXIT_FAILS
                },
                text,
                json: json!({
                    "command": "is-geometry",
                    "convex_geometry": v.is_convex_geometry,
                    "zero_closed": v.zero_closed,
                    "anti_exchange_witness": v.anti_exchange_witness.map(|w| WitnessReport::new(g, &w)),
                    "extension_witness": v.extension_witness.map(|a| g.names(a)),
                }),
            })
        }
        Command::Canonical { basis } => {
            let basis = load_basis(&basis)?;
            let g = basis.ground().clone();
            let analysis = SystemAnalysis::with_limits(&basis, limits)?;
            let canon = analysis.canonical_basis();
            let critical: Vec<Vec<String>> =
                analysis.critical().iter().map(|c| g.names(*c)).collect();
            Ok(Outcome {
                warning: None,
                code: EXIT_OK,
                text: implication_lines(&canon),
                json: json!({
                    "command": "canonical",
                    "critical_sets": critical,
                    "basis": LabeledImplication::list(&canon),
                    "cardinality": canon.cardinality(),
                    "size": canon.size(),
                }),
            })
        }
        Command::Optimum { basis, budget } => {
            let basis = load_basis(&basis)?;
            let limits = match budget {
                Some(b) => limits.with_node_budget(b),
                None => *limits,
            };
            let report = optimum_basis_with(&basis, &limits)?;
            let mut text = implication_lines(&report.basis);
            text.push_str(&format!("size: {}\n", report.size));
            if !report.certified {
                text.push_str("not certified: search budget exhausted\n");
            }
            Ok(Outcome {
                warning: (!report.certified)
                    .then(|| format!("search budget of {} nodes exhausted", limits.node_budget())),
                code: if report.certified {
                    EXIT_OK
                } else {
                    EXIT_LIMIT
                },
                text,
                json: json!({
                    "command": "optimum",
                    "certified": report.certified,
                    "size": report.size,
                    "cardinality": report.basis.cardinality(),
                    "search_nodes": report.search_nodes,
                    "basis": LabeledImplication::list(&report.basis),
                    "canonical_origin": report.canonical_origin,
                }),
            })
        }
        Command::MinGenerator { basis } => {
            let basis = load_basis(&basis)?;
            let g = basis.ground();
            let s = min_generator_with(&basis, limits)?;
            Ok(Outcome {
                warning: None,
                code: EXIT_OK,
                text: format!("{}\nsize: {}\n", braces(g, s), s.len()),
                json: json!({
                    "command": "min-generator",
                    "generator": g.names(s),
                    "size": s.len(),
                }),
            })
        }
        Command::Oracle { problem, formula } => {
            let formula = load_formula(&formula)?;
            let (name, holds, assignment) = match (problem, &formula) {
                (OracleProblem::Sat, Formula::Cnf(f)) => {
                    let a = cnf_satisfiable(f)?;
                    ("sat", a.is_some(), a)
                }
                (OracleProblem::Taut, Formula::Dnf(f)) => {
                    let a = dnf_tautology(f)?;
                    ("taut", a.is_none(), a)
                }
                (OracleProblem::Sat, _) => {
                    return Err(Failure::usage("sat oracle needs a `p cnf` formula"))
                }
                (OracleProblem::Taut, _) => {
                    return Err(Failure::usage("taut oracle needs a `p dnf` formula"))
                }
            };
            let values = assignment.as_ref().map(|a| a.values().to_vec());
            let rendered = values
                .as_ref()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .map(|(i, b)| format!("a{}={}", i + 1, if *b { 1 } else { 0 }))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            let text = match (name, holds) {
                ("sat", true) => format!("satisfiable: {rendered}\n"),
                ("sat", false) => "unsatisfiable\n".to_string(),
                (_, true) => "tautology\n".to_string(),
                (_, false) => format!("not a tautology: falsified by {rendered}\n"),
            };
            Ok(Outcome {
                warning: None,
                code: if holds { EXIT_OK } else { EXIT_FAILS },
                text,
                json: json!({
                    "command": "oracle",
                    "problem": name,
                    "holds": holds,
                    "assignment": values,
                }),
            })
        }
        Command::Reduce {
            reduction,
            input,
            output,
        } => {
            let (name, basis) = match reduction {
                Reduction::SatToGen => match load_formula(&input)? {
                    Formula::Cnf(f) => ("sat2gen", sat_to_mingen(&f).basis),
                    Formula::Dnf(_) => {
                        return Err(Failure::usage("sat2gen needs a `p cnf` formula"))
                    }
                },
                Reduction::DnfToCg => match load_formula(&input)? {
                    Formula::Dnf(f) => ("dnf2cg", dnf_to_cg(&f)?.basis),
                    Formula::Cnf(_) => {
                        return Err(Failure::usage("dnf2cg needs a `p dnf` formula"))
                    }
                },
                Reduction::GenToCg => ("gen2cg", cg_lift(&load_basis(&input)?)?.basis),
            };
            let document = serialize_basis(&basis);
            let text = match &output {
                Some(path) => {
                    fs::write(path, &document)
                        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    format!(
                        "wrote {} elements, {} implications to {}\n",
                        basis.ground().len(),
                        basis.cardinality(),
                        path.display()
                    )
                }
                None => document.clone(),
            };
            Ok(Outcome {
                warning: None,
                code: EXIT_OK,
                text,
                json: json!({
                    "command": "reduce",
                    "reduction": name,
                    "elements": basis.ground().len(),
                    "implications": basis.cardinality(),
                    "output": output.map(|p| p.display().to_string()),
                    "document": document,
                }),
            })
        }
        Command::Verify { theorem, input } => verify(theorem, &input, limits),
    }
}

fn verify(theorem: Theorem, input: &Path, limits: &Limits) -> Result<Outcome, Failure> {
    let (name, holds, certified, summary, report) = match theorem {
        Theorem::Lemma31 => {
            let Formula::Cnf(f) = load_formula(input)? else {
                return Err(Failure::usage("lemma31 needs a `p cnf` formula"));
            };
            let r = verify_lemma31_with(&f, limits)?;
            let summary = if r.satisfying_assignment.is_some() {
                format!(
                    "satisfiable ⇒ minimum generator has n = {} elements: {{{}}}",
                    r.num_vars,
                    r.min_generator.join(",")
                )
            } else {
                format!(
                    "unsatisfiable ⇒ minimum generator has {} > n = {} elements",
                    r.min_generator_size, r.num_vars
                )
            };
            let holds = r.holds;
            (
                "lemma31",
                holds,
                true,
                summary,
                serde_json::to_value(r).expect("json"),
            )
        }
        Theorem::Thm41 => {
            let basis = load_basis(input)?;
            let r = verify_thm41_with(&basis, limits)?;
            let mut summary = format!(
                "lift is {}a convex geometry",
                if r.convex_geometry { "" } else { "not " }
            );
            match &r.extracted_generator {
                Some(s) => summary.push_str(&format!(
                    "; optimum size {} with Y → {{{}}}, minimum generator size {}",
                    r.optimum_size,
                    s.join(","),
                    r.min_generator.len()
                )),
                None if !r.certified => summary.push_str("; optimum search not certified"),
                None => {}
            }
            let (holds, certified) = (r.holds, r.certified);
            (
                "thm41",
                holds,
                certified,
                summary,
                serde_json::to_value(r).expect("json"),
            )
        }
        Theorem::Thm51 => {
            let Formula::Dnf(f) = load_formula(input)? else {
                return Err(Failure::usage("thm51 needs a `p dnf` formula"));
            };
            let r = verify_thm51_with(&f, limits)?;
            let summary = match &r.witness {
                Some(w) => format!(
                    "not tautology ⇒ not convex geometry; witness A={{{}}}, x={}, y={}",
                    w.closed.join(","),
                    w.x,
                    w.y
                ),
                None => "tautology ⇒ convex geometry".to_string(),
            };
            let holds = r.holds;
            (
                "thm51",
                holds,
                true,
                summary,
                serde_json::to_value(r).expect("json"),
            )
        }
    };

    let failures: Vec<String> = report["failures"]
        .as_array()
        .map(|a| {
            a.iter()
                .filter_map(|v| v.as_str().map(String::from))
                .collect()
        })
        .unwrap_or_default();
    let status = if !holds {
        "FAILS"
    } else if !certified {
        "holds (optimum not certified)"
    } else {
        "holds"
    };
    let mut text = format!("{name}: {status}\n{summary}\n");
    for f in &failures {
        text.push_str(&format!("counterexample: {f}\n"));
    }
    let code = if !holds {
        EXIT_FAILS
    } else if !certified {
        EXIT_LIMIT
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        warning: (code == EXIT_LIMIT).then(|| "optimum search budget exhausted".to_string()),
        code,
        text,
        json: json!({
            "command": "verify",
            "theorem": name,
            "holds": holds,
            "certified": certified,
            "report": report,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["closurekit"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("is-geometry"));
    }

    #[test]
    fn missing_file_is_usage_error() {
        let (code, _, err) =
            run_capture(&["closure", "--basis", "/nonexistent/basis.txt", "--set", "a"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("nonexistent"));
    }
}
