//! Checker for the fundamental identity
//!
//! `[[x_1..x_n], y_2..y_n] = Σ_i [x_1..[x_i, y_2..y_n]..x_n]`
//!
//! on every basis tuple. By multilinearity this decides whether a table is a
//! Leibniz n-algebra.

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::QVector;
use crate::par::{map_range, Execution};
use crate::tuples::decode;

/// Default refusal threshold for `m^(2n-1)` tuple evaluations.
pub const DEFAULT_TUPLE_LIMIT: u128 = 10_000_000;

const BLOCK: u128 = 1 << 12;

/// A basis tuple where the identity fails. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub x_tuple: Vec<usize>,
    pub y_tuple: Vec<usize>,
    /// LHS minus RHS; never zero.
    pub defect: QVector,
}

#[derive(Clone, Debug)]
pub struct IdentityOptions {
    pub max_violations: Option<usize>,
    pub force: bool,
    pub tuple_limit: u128,
    pub exec: Execution,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        IdentityOptions {
            max_violations: None,
            force: false,
            tuple_limit: DEFAULT_TUPLE_LIMIT,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    /// Total number of `(x, y)` basis tuples, `m^(2n-1)`.
    pub total_tuples: u128,
    /// Tuples actually evaluated (less than the total after an early stop).
    pub tuples_checked: u128,
    /// Violations in lexicographic tuple order.
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn tuple_count(sc: &StructureConstants) -> Option<u128> {
    (sc.dim() as u128).checked_pow((2 * sc.arity() - 1) as u32)
}

/// LHS − RHS of the identity at basis vectors `x` (length n) and `y`
/// (length n−1).
pub fn identity_defect(sc: &StructureConstants, x: &[usize], y: &[usize]) -> QVector {
    let n = sc.arity();
    let mut out = QVector::zeros(sc.dim());
    let mut t = Vec::with_capacity(n);

    // [[x], y]
    for (k, c) in sc.bracket_basis(x) {
        t.clear();
        t.push(*k);
        t.extend_from_slice(y);
        for (target, d) in sc.bracket_basis(&t) {
            out.coords_mut()[*target] += c * d;
        }
    }
    // − Σ_i [x_1 .. [x_i, y] .. x_n]
    let mut inner = Vec::with_capacity(n);
    let mut outer = x.to_vec();
    for i in 0..n {
        inner.clear();
        inner.push(x[i]);
        inner.extend_from_slice(y);
        for (k, c) in sc.bracket_basis(&inner) {
            outer[i] = *k;
            for (target, d) in sc.bracket_basis(&outer) {
                out.coords_mut()[*target] -= c * d;
            }
        }
        outer[i] = x[i];
    }
    out
}

/// Evaluates the identity on all basis tuples in lexicographic order of
/// `(x_1..x_n, y_2..y_n)`, stopping once `max_violations` have been found.
///
/// Refuses (with [`Error::TooManyTuples`]) when `m^(2n-1)` exceeds the
/// tuple limit unless `force` is set.
pub fn check_fundamental_identity(
    sc: &StructureConstants,
    opts: &IdentityOptions,
) -> Result<IdentityReport> {
    let n = sc.arity();
    let m = sc.dim();
    let total = tuple_count(sc).ok_or(Error::TooManyTuples {
        tuples: u128::MAX,
        limit: opts.tuple_limit,
    })?;
    if total > opts.tuple_limit && !opts.force {
        return Err(Error::TooManyTuples {
            tuples: total,
            limit: opts.tuple_limit,
        });
    }
    let len = 2 * n - 1;
    let wanted = opts.max_violations.unwrap_or(usize::MAX);
    let mut violations = Vec::new();
    let mut checked = 0u128;
    let mut start = 0u128;
    while start < total && violations.len() < wanted {
        let end = (start + BLOCK).min(total);
        let found = map_range(opts.exec, start..end, |idx| {
            let t = decode(idx, len, m);
            let defect = identity_defect(sc, &t[..n], &t[n..]);
            (!defect.coords().iter().all(Zero::is_zero)).then(|| IdentityViolation {
                x_tuple: t[..n].to_vec(),
                y_tuple: t[n..].to_vec(),
                defect,
            })
        });
        for (offset, v) in found.into_iter().enumerate() {
            if let Some(v) = v {
                violations.push(v);
                if violations.len() == wanted {
                    checked = start + offset as u128 + 1;
                    break;
                }
            }
        }
        if violations.len() < wanted {
            checked = end;
        }
        start = end;
    }
    Ok(IdentityReport {
        total_tuples: total,
        tuples_checked: checked,
        violations,
    })
}

/// Convenience wrapper: `Ok(())` when the identity holds everywhere.
pub fn require_identity(sc: &StructureConstants) -> Result<()> {
    let report = check_fundamental_identity(
        sc,
        &IdentityOptions {
            max_violations: Some(1),
            ..Default::default()
        },
    )?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::IdentityViolated {
            count: report.violations.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ex3_3(m: usize) -> StructureConstants {
        let mut sc = StructureConstants::new(3, m).unwrap();
        for i in 0..m - 1 {
            sc.insert(&[i, 0, 0], i + 1, rat(1)).unwrap();
        }
        sc
    }

    #[test]
    fn example_family_passes() {
        let r = check_fundamental_identity(&ex3_3(5), &IdentityOptions::default()).unwrap();
        assert!(r.is_ok());
        assert_eq!(r.total_tuples, 3125);
        assert_eq!(r.tuples_checked, 3125);
    }

    #[test]
    fn corrupted_bracket_detected() {
        // [x,x] = y plus the bogus [y,x] = x
        let mut sc = StructureConstants::new(2, 2).unwrap();
        sc.insert(&[0, 0], 1, rat(1)).unwrap();
        sc.insert(&[1, 0], 0, rat(1)).unwrap();
        let r = check_fundamental_identity(&sc, &IdentityOptions::default()).unwrap();
        assert!(!r.is_ok());
        for v in &r.violations {
            assert!(!v.defect.is_zero());
        }
        // lexicographic order
        let keys: Vec<_> = r
            .violations
            .iter()
            .map(|v| [v.x_tuple.clone(), v.y_tuple.clone()].concat())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn early_stop_and_modes_agree() {
        let mut sc = StructureConstants::new(2, 3).unwrap();
        sc.insert(&[0, 0], 1, rat(1)).unwrap();
        sc.insert(&[1, 0], 0, rat(1)).unwrap();
        sc.insert(&[2, 1], 2, rat(3)).unwrap();
        let all_seq = check_fundamental_identity(
            &sc,
            &IdentityOptions {
                exec: Execution::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        let all_par = check_fundamental_identity(
            &sc,
            &IdentityOptions {
                exec: Execution::Parallel,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(all_seq.violations, all_par.violations);
        assert!(all_seq.violations.len() > 1);
        let first = check_fundamental_identity(
            &sc,
            &IdentityOptions {
                max_violations: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(first.violations, all_seq.violations[..1]);
        assert!(first.tuples_checked <= first.total_tuples);
    }

    #[test]
    fn soft_limit_refuses_unless_forced() {
        let sc = StructureConstants::zero(3, 4).unwrap();
        let opts = IdentityOptions {
            tuple_limit: 100,
            ..Default::default()
        };
        assert!(matches!(
            check_fundamental_identity(&sc, &opts),
            Err(Error::TooManyTuples { tuples: 1024, .. })
        ));
        let forced = IdentityOptions {
            force: true,
            ..opts
        };
        assert!(check_fundamental_identity(&sc, &forced).unwrap().is_ok());
    }
}
