use super::ParseError;
use crate::error::Error;
use crate::formula::{CnfFormula, DnfFormula, Formula, Literal};

/// Parses DIMACS `p cnf n m`, or the `p dnf n m` variant, with `0`-terminated clauses.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut header: Option<(bool, usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let Some((_, num_vars, _, _)) = header else {
            header = Some(parse_header(line, line_no)?);
            continue;
        };
        if line.starts_with('p') {
            return Err(syntax(line_no, "duplicate problem line"));
        }
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid literal `{token}`")))?;
            if value == 0 {
                if current.is_empty() {
                    return Err(ParseError::EmptyClause { line: line_no });
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if value.unsigned_abs() as usize > num_vars || value.unsigned_abs() > i32::MAX as u64 {
                return Err(ParseError::LiteralOutOfRange {
                    line: line_no,
                    literal: value,
                    num_vars,
                });
            }
            if current.is_empty() {
                current_line = line_no;
            }
            current.push(value as i32);
        }
    }

    let (is_cnf, num_vars, expected, header_line) =
        header.ok_or_else(|| syntax(text.lines().count().max(1), "missing problem line"))?;
    if !current.is_empty() {
        return Err(syntax(current_line, "clause is not terminated by 0"));
    }
    if clauses.len() != expected {
        return Err(ParseError::ClauseCountMismatch {
            expected,
            found: clauses.len(),
        });
    }
    let to_parse_error = |e: Error| syntax(header_line, e.to_string());
    Ok(if is_cnf {
        Formula::Cnf(CnfFormula::new(num_vars, clauses).map_err(to_parse_error)?)
    } else {
        Formula::Dnf(DnfFormula::new(num_vars, clauses).map_err(to_parse_error)?)
    })
}

fn parse_header(line: &str, line_no: usize) -> Result<(bool, usize, usize, usize), ParseError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [p, kind, n, m] = fields.as_slice() else {
        return Err(syntax(
            line_no,
            "expected `p cnf <vars> <clauses>` or `p dnf ...`",
        ));
    };
    if *p != "p" {
        return Err(syntax(line_no, "expected problem line"));
    }
    let is_cnf = match *kind {
        "cnf" => true,
        "dnf" => false,
        other => return Err(syntax(line_no, format!("unknown format `{other}`"))),
    };
    let n = n
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid variable count `{n}`")))?;
    let m = m
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid clause count `{m}`")))?;
    Ok((is_cnf, n, m, line_no))
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn serialize_formula(formula: &Formula) -> String {
    let kind = match formula {
        Formula::Cnf(_) => "cnf",
        Formula::Dnf(_) => "dnf",
    };
    let mut out = format!(
        "p {kind} {} {}\n",
        formula.num_vars(),
        formula.clauses().len()
    );
    for clause in formula.clauses() {
        for lit in clause {
            out.push_str(&Literal::value(*lit).to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
