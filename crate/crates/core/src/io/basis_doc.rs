use super::ParseError;
use crate::model::{ElementSet, GroundSet, Implication, ImplicationBasis};

const HEADER: &str = "elements:";

/// Labels are restricted to `[A-Za-z0-9_]+`.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses an `elements:` header followed by `<labels> -> <labels>` lines.
pub fn parse_basis(text: &str) -> Result<ImplicationBasis, ParseError> {
    let mut ground: Option<GroundSet> = None;
    let mut implications = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(g) = &ground else {
            let rest = line
                .strip_prefix(HEADER)
                .ok_or_else(|| syntax(line_no, "expected `elements:` header"))?;
            let labels: Vec<&str> = rest.split_whitespace().collect();
            if labels.is_empty() {
                return Err(syntax(line_no, "header lists no elements"));
            }
            if let Some(bad) = labels.iter().find(|l| !is_valid_label(l)) {
                return Err(syntax(line_no, format!("invalid label `{bad}`")));
            }
            ground = Some(GroundSet::new(labels.iter().copied()).map_err(|e| match e {
                crate::Error::DuplicateElement(label) => ParseError::DuplicateElement { label },
                other => syntax(line_no, other.to_string()),
            })?);
            continue;
        };

        let (premise, conclusion) = line
            .split_once("->")
            .ok_or_else(|| syntax(line_no, "expected `->`"))?;
        if conclusion.contains("->") {
            return Err(syntax(line_no, "more than one `->`"));
        }
        let premise = resolve(g, premise, line_no)?;
        let conclusion = resolve(g, conclusion, line_no)?;
        if conclusion.is_empty() {
            return Err(ParseError::EmptyConclusion { line: line_no });
        }
        implications.push(Implication::new(premise, conclusion));
    }

    let ground =
        ground.ok_or_else(|| syntax(text.lines().count().max(1), "missing `elements:` header"))?;
    Ok(ImplicationBasis::new(ground, implications).expect("validated while parsing"))
}

fn resolve(ground: &GroundSet, side: &str, line: usize) -> Result<ElementSet, ParseError> {
    let mut set = ElementSet::empty();
    for label in side.split_whitespace() {
        if !is_valid_label(label) {
            return Err(syntax(line, format!("invalid label `{label}`")));
        }
        let index = ground
            .index_of(label)
            .ok_or_else(|| ParseError::UnknownLabel {
                line,
                label: label.to_string(),
            })?;
        set.insert(index);
    }
    Ok(set)
}

pub fn serialize_basis(basis: &ImplicationBasis) -> String {
    let g = basis.ground();
    let mut out = format!("{HEADER} {}\n", g.labels().join(" "));
    for imp in basis.implications() {
        let premise = g.names(imp.premise).join(" ");
        let conclusion = g.names(imp.conclusion).join(" ");
        if premise.is_empty() {
            out.push_str(&format!("-> {conclusion}\n"));
        } else {
            out.push_str(&format!("{premise} -> {conclusion}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::CnfFormula;
    use crate::model::make_basis;
    use crate::reductions::sat_to_mingen;

    #[test]
    fn parses_simple_document() {
        let b = parse_basis("elements: a b\na -> b").unwrap();
        let want = make_basis(
            GroundSet::new(["a", "b"]).unwrap(),
            &[(vec!["a"], vec!["b"])],
        )
        .unwrap();
        assert_eq!(b, want);
    }

    #[test]
    fn comments_blank_lines_and_empty_premise() {
        let text = "# header next\n\nelements: a b c  # three\n-> a\na b -> c # rule\n";
        let b = parse_basis(text).unwrap();
        assert_eq!(b.cardinality(), 2);
        assert!(b.implications()[0].premise.is_empty());
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_basis("elements: a a\n"),
            Err(ParseError::DuplicateElement { label: "a".into() })
        );
        assert_eq!(
            parse_basis("elements: a b\n\nq -> a"),
            Err(ParseError::UnknownLabel {
                line: 3,
                label: "q".into()
            })
        );
        assert_eq!(
            parse_basis("elements: a b\na ->"),
            Err(ParseError::EmptyConclusion { line: 2 })
        );
        assert!(matches!(
            parse_basis("elements: a b\na b"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_basis("a -> b"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_basis("elements: a-b"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(parse_basis(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn serializes_sat_gadget_in_canonical_order() {
        let g = sat_to_mingen(&CnfFormula::new(2, vec![vec![1, 2]]).unwrap());
        let text = serialize_basis(&g.basis);
        assert!(text.starts_with("elements: x1 x2 y1 y2 z1 s\n"));
        assert_eq!(text.lines().count(), 1 + 7);
        assert_eq!(
            text,
            "elements: x1 x2 y1 y2 z1 s\n\
             x1 -> z1\nx2 -> z1\nz1 -> s\nx1 s -> y1\ny1 s -> x1\nx2 s -> y2\ny2 s -> x2\n"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_basis() -> impl Strategy<Value = ImplicationBasis> {
            (1usize..8).prop_flat_map(|n| {
                let mask = (1u64 << n) - 1;
                proptest::collection::vec((0..=mask, 1..=mask), 0..10).prop_map(move |imps| {
                    let g = GroundSet::new((0..n).map(|i| format!("e_{i}"))).unwrap();
                    let imps = imps
                        .into_iter()
                        .map(|(p, c)| {
                            Implication::new(ElementSet::from_bits(p), ElementSet::from_bits(c))
                        })
                        .collect();
                    ImplicationBasis::new(g, imps).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn roundtrip(b in arb_basis()) {
                prop_assert_eq!(parse_basis(&serialize_basis(&b)).unwrap(), b);
            }
        }
    }
}
