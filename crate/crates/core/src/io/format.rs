//! Line-oriented text format for structure constants.
//!
//! ```text
//! # comment
//! arity 2
//! dim 2
//! names x y
//! b 1 1 2 1
//! ```
//!
//! `b i1 .. in k c` sets `c^k_{i1..in} = c`. Indices are 1-based; `c` is an
//! integer `p` or a fraction `p/q` with `q > 0`. `arity` and `dim` must come
//! before the first `b` line.

use std::collections::HashSet;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(line: usize, key: &str, tok: Option<&str>, min: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| perr(line, format!("`{key}` needs a value")))?;
    let v: usize = tok.parse().map_err(|_| {
        perr(
            line,
            format!("`{key}` value `{tok}` is not a nonnegative integer"),
        )
    })?;
    if v < min {
        return Err(perr(
            line,
            format!("`{key}` must be at least {min}, got {v}"),
        ));
    }
    Ok(v)
}

fn digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `p` or `p/q` (optional sign on `p`, `q > 0`).
pub fn parse_rational(tok: &str) -> Option<Rational> {
    let (num, den) = match tok.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (tok, None),
    };
    let unsigned = num.strip_prefix(['+', '-']).unwrap_or(num);
    if !digits(unsigned) {
        return None;
    }
    let p: BigInt = num.parse().ok()?;
    let q: BigInt = match den {
        None => BigInt::from(1),
        Some(q) if digits(q) => q.parse().ok()?,
        Some(_) => return None,
    };
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

fn parse_index(line: usize, tok: &str, dim: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| perr(line, format!("index `{tok}` is not a positive integer")))?;
    if i == 0 || i > dim {
        return Err(perr(line, format!("index {i} out of range 1..={dim}")));
    }
    Ok(i - 1)
}

pub fn parse_algebra(text: &str) -> Result<StructureConstants> {
    let mut arity = None;
    let mut dim = None;
    let mut names: Option<Vec<String>> = None;
    let mut sc: Option<StructureConstants> = None;
    // includes zero coefficients, which the table itself drops
    let mut seen = HashSet::new();
    let mut last = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let mut toks = raw.split_whitespace();
        let Some(key) = toks.next() else { continue };
        if key.starts_with('#') {
            continue;
        }
        match key {
            "arity" | "dim" => {
                if sc.is_some() {
                    return Err(perr(line, format!("`{key}` after the first `b` line")));
                }
                let slot = if key == "arity" { &mut arity } else { &mut dim };
                if slot.is_some() {
                    return Err(perr(line, format!("`{key}` declared twice")));
                }
                *slot = Some(parse_count(
                    line,
                    key,
                    toks.next(),
                    if key == "arity" { 2 } else { 1 },
                )?);
                if toks.next().is_some() {
                    return Err(perr(line, format!("trailing tokens after `{key}`")));
                }
            }
            "names" => {
                let m = dim.ok_or_else(|| perr(line, "`names` before `dim`"))?;
                if names.is_some() {
                    return Err(perr(line, "`names` declared twice"));
                }
                let list: Vec<String> = toks.map(str::to_string).collect();
                if list.len() != m {
                    return Err(perr(
                        line,
                        format!("expected {m} names, got {}", list.len()),
                    ));
                }
                let distinct: HashSet<_> = list.iter().collect();
                if distinct.len() != m {
                    return Err(perr(line, "basis names must be distinct"));
                }
                if let Some(sc) = sc.as_mut() {
                    sc.set_basis_names(list.clone())?;
                }
                names = Some(list);
            }
            "b" => {
                let (Some(n), Some(m)) = (arity, dim) else {
                    return Err(perr(line, "`b` line before `arity` and `dim`"));
                };
                let sc = match sc.as_mut() {
                    Some(sc) => sc,
                    None => {
                        let mut fresh = StructureConstants::new(n, m)?;
                        if let Some(list) = &names {
                            fresh.set_basis_names(list.clone())?;
                        }
                        sc.insert(fresh)
                    }
                };
                let rest: Vec<&str> = toks.collect();
                if rest.len() != n + 2 {
                    return Err(perr(
                        line,
                        format!(
                            "`b` needs {n} indices, a target and a coefficient; got {} tokens",
                            rest.len()
                        ),
                    ));
                }
                let tuple = rest[..n]
                    .iter()
                    .map(|t| parse_index(line, t, m))
                    .collect::<Result<Vec<_>>>()?;
                let target = parse_index(line, rest[n], m)?;
                let coeff = parse_rational(rest[n + 1])
                    .ok_or_else(|| perr(line, format!("bad coefficient `{}`", rest[n + 1])))?;
                if !seen.insert((tuple.clone(), target)) {
                    let shown: Vec<String> = tuple.iter().map(|i| (i + 1).to_string()).collect();
                    return Err(perr(
                        line,
                        format!(
                            "duplicate constant for ({}) -> {}",
                            shown.join(" "),
                            target + 1
                        ),
                    ));
                }
                sc.insert(&tuple, target, coeff)
                    .map_err(|e| perr(line, e.to_string()))?;
            }
            other => return Err(perr(line, format!("unknown directive `{other}`"))),
        }
    }

    if let Some(sc) = sc {
        return Ok(sc);
    }
    let line = last.max(1);
    let n = arity.ok_or_else(|| perr(line, "missing `arity` header"))?;
    let m = dim.ok_or_else(|| perr(line, "missing `dim` header"))?;
    let mut sc = StructureConstants::new(n, m)?;
    if let Some(list) = names {
        sc.set_basis_names(list)?;
    }
    Ok(sc)
}

/// Canonical text: header, optional names, then one `b` line per nonzero
/// constant in lexicographic order.
pub fn render_algebra(sc: &StructureConstants) -> String {
    let mut out = String::new();
    writeln!(out, "arity {}", sc.arity()).unwrap();
    writeln!(out, "dim {}", sc.dim()).unwrap();
    if let Some(names) = sc.basis_names() {
        writeln!(out, "names {}", names.join(" ")).unwrap();
    }
    for (tuple, terms) in sc.entries() {
        for (target, c) in terms {
            out.push('b');
            for i in tuple {
                write!(out, " {}", i + 1).unwrap();
            }
            writeln!(out, " {} {}", target + 1, format_rational(c)).unwrap();
        }
    }
    out
}
