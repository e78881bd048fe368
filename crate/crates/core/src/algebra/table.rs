//! Plain-text structure-constant tables.
//!
//! ```text
//! # comments start with '#'
//! basis: e1 e2 e3 f
//! [e2,e3] = e1
//! [f,e1] = 3/2*e1 - e2
//! ```
//!
//! Brackets that are not listed are zero. Without a `basis:` line the labels
//! are ordered by alphabetic prefix and then numeric suffix.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::lie::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

fn natural_key(label: &str) -> (String, u64, String) {
    let split = label
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(label.len());
    let (prefix, rest) = label.split_at(split);
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    let num = digits.parse().unwrap_or(0);
    (prefix.to_string(), num, rest.to_string())
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_')
        && !s.starts_with(|c: char| c.is_ascii_digit())
}

fn parse_rhs(rhs: &str, line: usize) -> Result<Vec<(String, Rational)>> {
    let err = |msg: &str| Error::Parse(format!("line {line}: {msg}"));
    let s: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(err("empty right-hand side"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/') {
            pieces.push(&s[start..i]);
            start = i;
        }
    }
    for piece in pieces {
        let (neg, body) = match piece.as_bytes().first() {
            Some(b'-') => (true, &piece[1..]),
            Some(b'+') => (false, &piece[1..]),
            _ => (false, piece),
        };
        let (coef, label) = match body.rsplit_once('*') {
            Some((c, l)) => (parse_rational(c)?, l),
            None => (Rational::one(), body),
        };
        if !valid_label(label) {
            return Err(err(&format!("bad term {piece:?}")));
        }
        terms.push((label.to_string(), if neg { -coef } else { coef }));
    }
    Ok(terms)
}

type RawBracket = (String, String, Vec<(String, Rational)>);

pub fn parse_table(text: &str) -> Result<LieAlgebra> {
    let mut basis: Option<Vec<String>> = None;
    let mut raw: Vec<RawBracket> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let no = no + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("basis:") {
            if basis.is_some() {
                return Err(Error::Parse(format!("line {no}: repeated basis line")));
            }
            let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
                return Err(Error::Parse(format!("line {no}: bad label {bad:?}")));
            }
            basis = Some(labels);
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {no}: expected '[a,b] = ...'")))?;
        let inner = lhs
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("line {no}: expected '[a,b]'")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("line {no}: expected '[a,b]'")))?;
        let (a, b) = (a.trim().to_string(), b.trim().to_string());
        if !valid_label(&a) || !valid_label(&b) {
            return Err(Error::Parse(format!("line {no}: bad label in {lhs:?}")));
        }
        raw.push((a, b, parse_rhs(rhs, no)?));
    }
    let labels = match basis {
        Some(b) => b,
        None => {
            let mut set = BTreeSet::new();
            for (a, b, terms) in &raw {
                set.insert(a.clone());
                set.insert(b.clone());
                set.extend(terms.iter().map(|(l, _)| l.clone()));
            }
            let mut labels: Vec<String> = set.into_iter().collect();
            labels.sort_by_key(|l| natural_key(l));
            labels
        }
    };
    let n = labels.len();
    let idx = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::Parse(format!("label {l:?} not in basis")))
    };
    let mut brackets = Vec::new();
    for (a, b, terms) in &raw {
        let mut v = vec![Rational::zero(); n];
        for (l, c) in terms {
            v[idx(l)?] += c;
        }
        brackets.push((idx(a)?, idx(b)?, v));
    }
    LieAlgebra::new(labels, brackets)
}

/// Formats `sum c_k L_k` with unit coefficients omitted.
pub fn format_combination(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_table(l: &LieAlgebra) -> String {
    let labels = l.labels();
    let mut out = format!("basis: {}\n", labels.join(" "));
    for (a, b, v) in l.brackets() {
        out.push_str(&format!(
            "[{},{}] = {}\n",
            labels[a],
            labels[b],
            format_combination(v, labels)
        ));
    }
    out
}
