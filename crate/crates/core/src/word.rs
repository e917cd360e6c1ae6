//! Text syntax for braid words.
//!
//! Tokens are whitespace separated: `s<i>` is the atom `σ_i`, `D` is `Δ`,
//! and `1` is the identity. Any token may carry an exponent `^<int>`,
//! negative allowed: `D^-1 s1 s2^3`.

use thiserror::Error;

use crate::braid::{BraidGroup, Perm};
use crate::kernel::{Element, Garside, GarsideOps, KernelError, Letter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("atom s{index} at byte {position} is out of range for B{n}")]
    OutOfRange { index: usize, position: usize, n: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Parses and normalizes a braid word in `B_n`.
pub fn parse_braid_word(text: &str, group: &BraidGroup) -> Result<Element<Perm>, WordError> {
    let mut letters = Vec::new();
    for (position, token) in tokens(text) {
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let exp: i64 = e.parse().map_err(|_| WordError::Syntax {
                    position: position + b.len() + 1,
                    message: format!("bad exponent `{e}`"),
                })?;
                (b, exp)
            }
            None => (token, 1),
        };
        let letter = match base {
            "D" => Letter::Delta,
            "1" => continue,
            _ if base.starts_with('s') => {
                let index: usize = base[1..].parse().map_err(|_| WordError::Syntax {
                    position,
                    message: format!("bad atom `{base}`"),
                })?;
                if index == 0 || index >= group.strands() {
                    return Err(WordError::OutOfRange { index, position, n: group.strands() });
                }
                Letter::Atom(index - 1)
            }
            _ => {
                return Err(WordError::Syntax { position, message: format!("unexpected token `{base}`") })
            }
        };
        letters.push((letter, exp));
    }
    Ok(group.normalize(&letters)?)
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

/// Canonical text: `D^p` followed by an atom word for each normal-form factor.
pub fn format_braid_word(e: &Element<Perm>, group: &BraidGroup) -> String {
    let mut parts = Vec::new();
    if e.delta_power() != 0 {
        parts.push(format!("D^{}", e.delta_power()));
    }
    for &s in e.factors() {
        parts.extend(group.simple_word(s).into_iter().map(|i| format!("s{}", i + 1)));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Normal-form factors written as atom words, `σ`-style: `s2 | s2s1s3 | …`.
pub fn format_factors(e: &Element<Perm>, group: &BraidGroup) -> String {
    let mut parts = Vec::new();
    if e.delta_power() != 0 {
        parts.push(format!("D^{}", e.delta_power()));
    }
    for &s in e.factors() {
        let w: Vec<String> = group.simple_word(s).into_iter().map(|i| format!("s{}", i + 1)).collect();
        parts.push(w.join(""));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" | ")
    }
}
