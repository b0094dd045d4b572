//! Plain-text poset format, version 1:
//!
//! ```text
//! # flagposet v1
//! elements: a b c
//! a < b
//! a < c
//! ```
//!
//! Ids match `[A-Za-z0-9_]+`. Each `<id> < <id>` line declares one cover.

use super::{valid_id, Poset};
use crate::error::{Error, Result};

pub const HEADER: &str = "# flagposet v1";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(input: &str) -> Result<Poset> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, _)) => return Err(err(n, format!("expected `{HEADER}`"))),
        None => return Err(err(1, "empty input")),
    }
    let (eline, elements) = match lines.next() {
        Some((n, l)) => match l.strip_prefix("elements:") {
            Some(rest) => (n, rest.split_whitespace().collect::<Vec<_>>()),
            None => return Err(err(n, "expected `elements:` line")),
        },
        None => return Err(err(2, "missing `elements:` line")),
    };
    let mut seen = std::collections::HashSet::new();
    for e in &elements {
        if !valid_id(e) {
            return Err(err(eline, format!("invalid id `{e}`")));
        }
        if !seen.insert(*e) {
            return Err(err(eline, format!("duplicate element `{e}`")));
        }
    }

    let mut covers = Vec::new();
    let mut declared = std::collections::HashSet::new();
    for (n, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [p, "<", q] = parts[..] else {
            return Err(err(n, "expected `<id> < <id>`"));
        };
        for id in [p, q] {
            if !seen.contains(id) {
                return Err(err(n, format!("unknown id `{id}`")));
            }
        }
        if !declared.insert((p, q)) {
            return Err(err(n, format!("duplicate cover `{p} < {q}`")));
        }
        covers.push((p, q));
    }
    Poset::new(&elements, &covers)
}

/// Elements in stored order, covers sorted lexicographically by id.
pub fn write(p: &Poset) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str("elements:");
    for id in p.ids() {
        out.push(' ');
        out.push_str(id);
    }
    out.push('\n');
    let mut covers: Vec<(&str, &str)> = p.covers().map(|(a, b)| (p.id(a), p.id(b))).collect();
    covers.sort_unstable();
    for (a, b) in covers {
        out.push_str(a);
        out.push_str(" < ");
        out.push_str(b);
        out.push('\n');
    }
    out
}
