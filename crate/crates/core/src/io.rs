//! Plain-text input files.
//!
//! Two line-oriented formats are read, with `#` starting a comment and blank
//! lines ignored:
//!
//! ```text
//! graph 5        ideal 5
//! e 1 1          g 1 1
//! e 1 3          g 1 3
//! ...            ...
//! ```
//!
//! `e u v` is an edge (a loop when `u == v`) and `g i j` the generator
//! `x_i x_j`. Output is always written in the `ideal` format.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use serde::Serializer;
use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: index {index} is outside 1..={n}")]
    OutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: generator x{i}*x{j} listed twice")]
    Duplicate { line: usize, i: usize, j: usize },
    #[error("no generators given")]
    Empty,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn malformed(line: usize, message: impl Into<String>) -> InputError {
    InputError::Malformed {
        line,
        message: message.into(),
    }
}

pub fn parse_input(path: impl AsRef<Path>) -> Result<MonomialIdeal, InputError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<MonomialIdeal, InputError> {
    let mut header: Option<(&str, usize)> = None;
    let mut gens: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((kind, n)) = header else {
            let (kind, n) = match tokens.as_slice() {
                [k @ ("graph" | "ideal"), n] => (*k, *n),
                _ => return Err(malformed(line, "expected `graph <n>` or `ideal <n>`")),
            };
            let n: usize = n
                .parse()
                .map_err(|_| malformed(line, format!("bad vertex count `{n}`")))?;
            if n == 0 {
                return Err(malformed(line, "vertex count must be positive"));
            }
            header = Some((kind, n));
            continue;
        };
        let tag = if kind == "graph" { "e" } else { "g" };
        let (a, b) = match tokens.as_slice() {
            [t, a, b] if *t == tag => (*a, *b),
            _ => return Err(malformed(line, format!("expected `{tag} <i> <j>`"))),
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(line, format!("bad index `{s}`")))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        for index in [a, b] {
            if index == 0 || index > n {
                return Err(InputError::OutOfRange { line, index, n });
            }
        }
        let pair = (a.min(b), a.max(b));
        if !seen.insert(pair) {
            return Err(InputError::Duplicate {
                line,
                i: pair.0,
                j: pair.1,
            });
        }
        gens.push(pair);
    }
    let Some((_, n)) = header else {
        return Err(InputError::Empty);
    };
    if gens.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(MonomialIdeal::new(n, gens)?)
}

/// The ideal in `ideal` format, generators in sorted order.
pub fn to_ideal_format(ideal: &MonomialIdeal) -> String {
    let mut out = format!("ideal {}\n", ideal.num_vars());
    for &(i, j) in ideal.generators() {
        let _ = writeln!(out, "g {i} {j}");
    }
    out
}

/// The ideal in `graph` format.
pub fn to_graph_format(ideal: &MonomialIdeal) -> String {
    let mut out = format!("graph {}\n", ideal.num_vars());
    for &(i, j) in ideal.generators() {
        let _ = writeln!(out, "e {i} {j}");
    }
    out
}

pub(crate) fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_ideal() -> MonomialIdeal {
        MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn both_formats() {
        let g = parse_str("graph 2\ne 1 2\n").unwrap();
        assert_eq!(g, MonomialIdeal::new(2, [(1, 2)]).unwrap());
        let text =
            "# the worked example\nideal 5\ng 1 1\ng 1 3\ng 3 5  # x3x5\n\ng 5 2\ng 2 4\ng 4 1\n";
        assert_eq!(parse_str(text).unwrap(), worked_ideal());
    }

    #[test]
    fn crlf_is_accepted() {
        let i = parse_str("ideal 3\r\ng 1 2\r\ng 2 3\r\n").unwrap();
        assert_eq!(i.generators(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_str("graph 3\ne 1 4\n"),
            Err(InputError::OutOfRange {
                line: 2,
                index: 4,
                n: 3
            })
        ));
        assert!(matches!(
            parse_str("graph 3\n# c\ne 1 2\ne 2 1\n"),
            Err(InputError::Duplicate {
                line: 4,
                i: 1,
                j: 2
            })
        ));
        assert!(matches!(
            parse_str("graph 3\ng 1 2\n"),
            Err(InputError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_str("graph x\n"),
            Err(InputError::Malformed { line: 1, .. })
        ));
        assert!(matches!(parse_str("graph 3\n"), Err(InputError::Empty)));
        assert!(matches!(parse_str("# nothing\n"), Err(InputError::Empty)));
        assert!(matches!(
            parse_str("e 1 2\n"),
            Err(InputError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn writers_round_trip() {
        let i = worked_ideal();
        assert_eq!(parse_str(&to_ideal_format(&i)).unwrap(), i);
        assert_eq!(parse_str(&to_graph_format(&i)).unwrap(), i);
    }
}
