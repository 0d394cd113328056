//! The monoid text format.
//!
//! ```text
//! # comments start with '#'
//! monoid 2
//! elements 0 1
//! identity 1
//! 0 0
//! 0 1
//! ```
//!
//! Row `a` lists `a*b` for every `b`, in element order. Blank lines and
//! comment lines may appear anywhere and are not counted as rows, but line
//! numbers in errors are physical line numbers.

use thiserror::Error;

use crate::monoid::{validate_monoid, FiniteMonoid, MonoidError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    ArityMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {col}: unknown element `{name}`")]
    UnknownName {
        line: usize,
        col: usize,
        name: String,
    },
    #[error(transparent)]
    Invalid(#[from] MonoidError),
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::ArityMismatch { line, .. }
            | ParseError::UnknownName { line, .. } => Some(*line),
            ParseError::Invalid(_) => None,
        }
    }
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(k),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..k],
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next content line with its number, skipping blanks and comments.
    fn next_content(&mut self) -> Option<(usize, Vec<Token<'a>>)> {
        for (k, line) in self.inner.by_ref() {
            self.last = k + 1;
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((k + 1, tokens(line)));
        }
        None
    }

    fn expect(&mut self, keyword: &str) -> Result<(usize, Vec<Token<'a>>), ParseError> {
        match self.next_content() {
            None => Err(ParseError::Syntax {
                line: self.last + 1,
                col: 1,
                message: format!("expected `{keyword}`, found end of file"),
            }),
            Some((line, toks)) if toks[0].text == keyword => Ok((line, toks)),
            Some((line, toks)) => Err(ParseError::Syntax {
                line,
                col: toks[0].col,
                message: format!("expected `{keyword}`, found `{}`", toks[0].text),
            }),
        }
    }
}

pub fn parse_monoid_file(text: &str) -> Result<FiniteMonoid, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };

    let (line, toks) = lines.expect("monoid")?;
    if toks.len() != 2 {
        return Err(ParseError::Syntax {
            line,
            col: toks.get(2).map_or(toks[0].col, |t| t.col),
            message: "expected `monoid <order>`".to_string(),
        });
    }
    let n: usize = toks[1].text.parse().map_err(|_| ParseError::Syntax {
        line,
        col: toks[1].col,
        message: format!("`{}` is not an order", toks[1].text),
    })?;
    if n == 0 {
        return Err(MonoidError::Empty.into());
    }

    let (line, toks) = lines.expect("elements")?;
    if toks.len() - 1 != n {
        return Err(ParseError::ArityMismatch {
            line,
            expected: n,
            found: toks.len() - 1,
        });
    }
    let names: Vec<String> = toks[1..].iter().map(|t| t.text.to_string()).collect();

    let (line, toks) = lines.expect("identity")?;
    if toks.len() != 2 {
        return Err(ParseError::Syntax {
            line,
            col: toks.get(2).map_or(toks[0].col, |t| t.col),
            message: "expected `identity <name>`".to_string(),
        });
    }
    let identity = toks[1].text.to_string();
    if !names.contains(&identity) {
        return Err(ParseError::UnknownName {
            line,
            col: toks[1].col,
            name: identity,
        });
    }

    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let Some((line, toks)) = lines.next_content() else {
            return Err(ParseError::Syntax {
                line: lines.last + 1,
                col: 1,
                message: format!("expected {n} table rows, found {}", table.len()),
            });
        };
        if toks.len() != n {
            return Err(ParseError::ArityMismatch {
                line,
                expected: n,
                found: toks.len(),
            });
        }
        let row = toks
            .iter()
            .map(|t| {
                names
                    .iter()
                    .position(|x| x == t.text)
                    .ok_or_else(|| ParseError::UnknownName {
                        line,
                        col: t.col,
                        name: t.text.to_string(),
                    })
            })
            .collect::<Result<Vec<usize>, _>>()?;
        table.push(row);
    }
    if let Some((line, toks)) = lines.next_content() {
        return Err(ParseError::Syntax {
            line,
            col: toks[0].col,
            message: "unexpected content after the table".to_string(),
        });
    }
    Ok(validate_monoid(names, table, &identity)?)
}

pub fn serialize_monoid(m: &FiniteMonoid) -> String {
    let mut out = format!(
        "monoid {}\nelements {}\nidentity {}\n",
        m.order(),
        m.names().join(" "),
        m.name(m.identity())
    );
    for row in m.rows() {
        let names: Vec<&str> = row.iter().map(|&x| m.name(x)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
