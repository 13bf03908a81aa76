//! The code-definition text format.
//!
//! ```text
//! # comments run to end of line
//! dim 2
//! sites 7
//! [stabilizers]
//! +1 XIIZYYZ
//! [gauge]
//! +1 XXIIIII, +1 ZIIIIII     # anticommuting pairs, comma separated
//! [logical]
//! +1 IIIXZZX, +1 IIIZXXI
//! [transversal]
//! +1 IIIIIII
//! +1 IIIIXYY
//! ```
//!
//! `dim` and `sites` must come first; the four sections may appear in any
//! order and may be empty. The writer emits the canonical layout (this
//! order, no comments), which re-parses byte-exactly.

use crate::code::HybridCode;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

pub fn write_code(code: &HybridCode) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", code.qudit_dim()));
    out.push_str(&format!("sites {}\n", code.num_sites()));
    out.push_str("[stabilizers]\n");
    for g in code.stabilizer().generators() {
        out.push_str(&format!("{g}\n"));
    }
    out.push_str("[gauge]\n");
    for (a, b) in code.gauge_pairs() {
        out.push_str(&format!("{a}, {b}\n"));
    }
    out.push_str("[logical]\n");
    for (a, b) in code.logical_pairs() {
        out.push_str(&format!("{a}, {b}\n"));
    }
    out.push_str("[transversal]\n");
    for t in code.transversal() {
        out.push_str(&format!("{t}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Stabilizers,
    Gauge,
    Logical,
    Transversal,
}

pub fn parse_code(text: &str) -> Result<HybridCode> {
    let mut dim: Option<u64> = None;
    let mut sites: Option<usize> = None;
    let mut section: Option<Section> = None;
    let mut stabilizers = Vec::new();
    let mut gauge = Vec::new();
    let mut logical = Vec::new();
    let mut transversal = Vec::new();

    let err = |line: usize, msg: String| Error::Parse { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim") {
            if dim.is_some() {
                return Err(err(line_no, "duplicate dim header".into()));
            }
            dim = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err(line_no, format!("bad dim value '{}'", rest.trim())))?,
            );
            continue;
        }
        if let Some(rest) = line.strip_prefix("sites") {
            if sites.is_some() {
                return Err(err(line_no, "duplicate sites header".into()));
            }
            sites = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err(line_no, format!("bad sites value '{}'", rest.trim())))?,
            );
            continue;
        }
        if line.starts_with('[') {
            section = Some(match line {
                "[stabilizers]" => Section::Stabilizers,
                "[gauge]" => Section::Gauge,
                "[logical]" => Section::Logical,
                "[transversal]" => Section::Transversal,
                other => return Err(err(line_no, format!("unknown section '{other}'"))),
            });
            continue;
        }
        let (Some(d), Some(n)) = (dim, sites) else {
            return Err(err(
                line_no,
                "dim and sites headers must precede entries".into(),
            ));
        };
        let parse_op = |tok: &str| -> Result<PauliOperator> {
            let op = PauliOperator::parse(tok, d).map_err(|e| match e {
                Error::Parse { msg, .. } => err(line_no, msg),
                other => other,
            })?;
            if op.num_sites() != n {
                return Err(err(
                    line_no,
                    format!("operator has {} sites, header says {n}", op.num_sites()),
                ));
            }
            Ok(op)
        };
        match section {
            None => return Err(err(line_no, "entry before any section header".into())),
            Some(Section::Stabilizers) => stabilizers.push(parse_op(line)?),
            Some(Section::Transversal) => transversal.push(parse_op(line)?),
            Some(sec) => {
                let Some((first, second)) = line.split_once(',') else {
                    return Err(err(
                        line_no,
                        "gauge/logical entries are comma-separated pairs".into(),
                    ));
                };
                let pair = (parse_op(first.trim())?, parse_op(second.trim())?);
                if sec == Section::Gauge {
                    gauge.push(pair);
                } else {
                    logical.push(pair);
                }
            }
        }
    }

    let dim = dim.ok_or_else(|| err(0, "missing dim header".into()))?;
    let sites = sites.ok_or_else(|| err(0, "missing sites header".into()))?;
    HybridCode::new(dim, sites, stabilizers, gauge, logical, transversal)
}

/// One serialized Pauli per line, `#` comments allowed.
pub fn parse_error_list(text: &str, dim: u64, num_sites: usize) -> Result<Vec<PauliOperator>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let op = PauliOperator::parse(line, dim).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: line_no, msg },
            other => other,
        })?;
        if op.num_sites() != num_sites {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("operator has {} sites, expected {num_sites}", op.num_sites()),
            });
        }
        out.push(op);
    }
    Ok(out)
}

/// Generator-matrix file for classical codes: one row per line, entries are
/// space-separated digits over Z_d.
pub fn parse_matrix_file(text: &str) -> Result<Vec<Vec<u64>>> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad matrix entry '{t}'"),
                })
            })
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("row has {} entries, first row has {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{
        build_bacon_shor, build_gkp18, build_motivating, build_seven_qubit_hybrid,
        classical_registry, hybridize_css,
    };

    fn assert_round_trip(code: &HybridCode) {
        let text = write_code(code);
        let back = parse_code(&text).expect("canonical text parses");
        assert_eq!(write_code(&back), text, "write∘parse∘write is identity");
        assert_eq!(back.qudit_dim(), code.qudit_dim());
        assert_eq!(back.num_sites(), code.num_sites());
        assert_eq!(back.stabilizer().generators(), code.stabilizer().generators());
        assert_eq!(back.gauge_pairs(), code.gauge_pairs());
        assert_eq!(back.logical_pairs(), code.logical_pairs());
        assert_eq!(back.transversal(), code.transversal());
    }

    #[test]
    fn round_trips_all_builders() {
        assert_round_trip(&build_seven_qubit_hybrid());
        assert_round_trip(&build_bacon_shor(3).unwrap());
        assert_round_trip(&build_gkp18());
        assert_round_trip(&build_motivating(2, 4, 2, 1).unwrap());
        let rep = classical_registry("rep3").unwrap();
        let hybrid = hybridize_css(&build_bacon_shor(4).unwrap(), &rep, &rep).unwrap();
        assert_round_trip(&hybrid);
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let text = "\n# a code\ndim 2\nsites 2   # two qubits\n\n[stabilizers]\n+1 ZI # first\n[transversal]\n+1 II\n+1 XI\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.stabilizer().generators().len(), 1);
        assert_eq!(code.sector_count(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad_token = "dim 2\nsites 2\n[stabilizers]\n+1 ZQ\n";
        match parse_code(bad_token) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad_len = "dim 2\nsites 3\n[stabilizers]\n+1 ZI\n";
        match parse_code(bad_len) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let no_header = "[stabilizers]\n+1 ZI\n";
        assert!(matches!(parse_code(no_header), Err(Error::Parse { .. })));
        let bad_pair = "dim 2\nsites 1\n[gauge]\n+1 X\n";
        match parse_code(bad_pair) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_list_and_matrix_files() {
        let errs = parse_error_list("# errors\n+1 II\n+1 XI # flip\n", 2, 2).unwrap();
        assert_eq!(errs.len(), 2);
        assert!(errs[0].is_identity());
        assert!(matches!(
            parse_error_list("+1 X\n", 2, 2),
            Err(Error::Parse { line: 1, .. })
        ));
        let m = parse_matrix_file("1 0 1\n0 1 1\n").unwrap();
        assert_eq!(m, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(matches!(
            parse_matrix_file("1 0\n1 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
