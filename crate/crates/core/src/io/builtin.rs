//! Built-in example algebras, emitted in the text format.

use std::fmt::Write;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::io::format::parse_algebra;
use crate::tuples::permutations;

/// Names accepted by [`builtin`], with parameter placeholders.
pub const BUILTIN_NAMES: [&str; 5] = [
    "ex3_3:<m>",
    "ex3_18",
    "ex3_20",
    "zero:<n>:<m>",
    "filippov:<n>",
];

/// Largest arity offered for `filippov:<n>`; the table has `(n+1)!` lines.
pub const FILIPPOV_MAX_N: usize = 6;

fn param(name: &str, tok: Option<&str>, min: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::BadBuiltinParam(format!("`{name}` needs a parameter")))?;
    let v: usize = tok
        .parse()
        .map_err(|_| Error::BadBuiltinParam(format!("`{tok}` is not a nonnegative integer")))?;
    if v < min {
        return Err(Error::BadBuiltinParam(format!(
            "{name} parameter must be at least {min}, got {v}"
        )));
    }
    Ok(v)
}

fn header(n: usize, m: usize) -> String {
    format!("arity {n}\ndim {m}\n")
}

/// `[x_i, x_1, x_1] = x_{i+1}` for `1 ≤ i < m`.
fn ex3_3(m: usize) -> String {
    let mut out = header(3, m);
    for i in 1..m {
        writeln!(out, "b {i} 1 1 {} 1", i + 1).unwrap();
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// `[e_1, .., ê_i, .., e_{n+1}] = (−1)^(n+1+i) e_i`, extended alternatingly.
fn filippov(n: usize) -> String {
    let m = n + 1;
    let mut out = header(n, m);
    let perms = permutations(n);
    let mut lines = Vec::new();
    for i in 1..=m {
        let rest: Vec<usize> = (1..=m).filter(|&k| k != i).collect();
        let base_sign = if (n + 1 + i).is_multiple_of(2) { 1 } else { -1 };
        for p in &perms {
            let sign = if inversions(p).is_multiple_of(2) {
                base_sign
            } else {
                -base_sign
            };
            let tuple: Vec<usize> = p.iter().map(|&k| rest[k]).collect();
            lines.push((tuple, i, sign));
        }
    }
    lines.sort();
    for (tuple, i, sign) in lines {
        let idx: Vec<String> = tuple.iter().map(usize::to_string).collect();
        writeln!(out, "b {} {i} {sign}", idx.join(" ")).unwrap();
    }
    out
}

/// Text of a built-in algebra.
pub fn builtin(name: &str) -> Result<String> {
    let mut parts = name.split(':');
    let head = parts.next().unwrap_or_default();
    let text = match head {
        "ex3_18" => header(2, 2) + "b 1 1 2 1\n",
        "ex3_20" => header(2, 4) + "b 1 1 3 1\nb 1 2 4 1\nb 2 1 3 1\nb 3 1 4 1\n",
        "ex3_3" => ex3_3(param(head, parts.next(), 2)?),
        "zero" => {
            let n = param(head, parts.next(), 2)?;
            let m = param(head, parts.next(), 1)?;
            header(n, m)
        }
        "filippov" => {
            let n = param(head, parts.next(), 2)?;
            if n > FILIPPOV_MAX_N {
                return Err(Error::BadBuiltinParam(format!(
                    "filippov arity must be at most {FILIPPOV_MAX_N}, got {n}"
                )));
            }
            filippov(n)
        }
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    if parts.next().is_some() {
        return Err(Error::BadBuiltinParam(format!(
            "too many parameters in `{name}`"
        )));
    }
    Ok(text)
}

pub fn builtin_algebra(name: &str) -> Result<StructureConstants> {
    parse_algebra(&builtin(name)?)
}
