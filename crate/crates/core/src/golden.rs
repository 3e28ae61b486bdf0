//! The bundled A000712 prefix and the check against it.

use thiserror::Error;

use crate::counting::{convolution_a, Count};

const A000712_DATA: &str = include_str!("../data/a000712.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("unknown sequence {0}; only A000712 is bundled")]
    UnknownSequence(String),
    #[error("requested {requested} terms but only {available} are bundled")]
    TooManyTerms { requested: usize, available: usize },
    #[error("malformed golden file at line {line}: {text}")]
    Malformed { line: usize, text: String },
}

/// Parses the bundled prefix: `#` comments, then one `index value` per line.
pub fn a000712_prefix() -> Result<Vec<Count>, GoldenError> {
    parse_terms(A000712_DATA)
}

pub fn parse_terms(data: &str) -> Result<Vec<Count>, GoldenError> {
    let mut terms = Vec::new();
    for (idx, raw) in data.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || GoldenError::Malformed {
            line: idx + 1,
            text: raw.to_owned(),
        };
        let mut fields = line.split_whitespace();
        let index: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(malformed)?;
        let value: Count = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(malformed)?;
        if index != terms.len() || fields.next().is_some() {
            return Err(malformed());
        }
        terms.push(value);
    }
    Ok(terms)
}

/// Outcome of comparing `A_0 .. A_{terms-1}` with the bundled prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCheck {
    pub sequence: String,
    pub terms: usize,
    /// First index where computed and bundled values differ.
    pub mismatch: Option<(usize, Count, Count)>,
}

impl GoldenCheck {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn check_sequence(sequence: &str, terms: usize) -> Result<GoldenCheck, GoldenError> {
    if sequence != "A000712" {
        return Err(GoldenError::UnknownSequence(sequence.to_owned()));
    }
    let golden = a000712_prefix()?;
    if terms > golden.len() {
        return Err(GoldenError::TooManyTerms {
            requested: terms,
            available: golden.len(),
        });
    }
    let mismatch = golden
        .into_iter()
        .take(terms)
        .enumerate()
        .map(|(i, expected)| (i, convolution_a(i), expected))
        .find(|(_, computed, expected)| computed != expected);
    Ok(GoldenCheck {
        sequence: sequence.to_owned(),
        terms,
        mismatch,
    })
}
