//! Leibniz n-algebras given by structure constants.
//!
//! Basis indices are 0-based here; the text format and reports use 1-based
//! labels `x1..xm`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{QVector, Rational};
use crate::tuples::permutations;

/// Sparse n-linear bracket table: `[e_{i1},...,e_{in}] = Σ_k c^k e_k`.
///
/// Every stored coefficient is nonzero and targets within one tuple are
/// sorted ascending, so two tables describing the same bracket compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    arity: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, Vec<(usize, Rational)>>,
    basis_names: Option<Vec<String>>,
}

impl StructureConstants {
    pub fn new(arity: usize, dim: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidAlgebra(format!(
                "arity must be at least 2, got {arity}"
            )));
        }
        if dim < 1 {
            return Err(Error::InvalidAlgebra("dim must be at least 1".into()));
        }
        Ok(StructureConstants {
            arity,
            dim,
            table: BTreeMap::new(),
            basis_names: None,
        })
    }

    /// Algebra with every bracket zero.
    pub fn zero(arity: usize, dim: usize) -> Result<Self> {
        Self::new(arity, dim)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn set_basis_names(&mut self, names: Vec<String>) -> Result<()> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.basis_names = Some(names);
        Ok(())
    }

    /// Label of basis vector `i` (0-based): its declared name or `x{i+1}`.
    pub fn basis_label(&self, i: usize) -> String {
        match &self.basis_names {
            Some(names) => names[i].clone(),
            None => format!("x{}", i + 1),
        }
    }

    /// Records `c^target_{tuple} = coeff`. Zero coefficients are dropped;
    /// setting the same `(tuple, target)` twice is an error.
    pub fn insert(&mut self, tuple: &[usize], target: usize, coeff: Rational) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        for &i in tuple.iter().chain(std::iter::once(&target)) {
            if i >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    bound: self.dim,
                });
            }
        }
        let entry = self.table.entry(tuple.to_vec()).or_default();
        match entry.binary_search_by_key(&target, |(k, _)| *k) {
            Ok(_) => {
                return Err(Error::DuplicateConstant {
                    tuple: tuple.iter().map(|i| i + 1).collect(),
                    target: target + 1,
                })
            }
            Err(pos) => {
                if !coeff.is_zero() {
                    entry.insert(pos, (target, coeff));
                }
            }
        }
        if entry.is_empty() {
            self.table.remove(tuple);
        }
        Ok(())
    }

    /// Nonzero table rows in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &[(usize, Rational)])> {
        self.table.iter().map(|(t, v)| (t.as_slice(), v.as_slice()))
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.table.values().map(Vec::len).sum()
    }

    /// Bracket of basis vectors, as sparse `(target, coeff)` pairs.
    pub fn bracket_basis(&self, tuple: &[usize]) -> &[(usize, Rational)] {
        self.table.get(tuple).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn bracket_basis_vec(&self, tuple: &[usize]) -> QVector {
        let mut out = QVector::zeros(self.dim);
        for (k, c) in self.bracket_basis(tuple) {
            out.coords_mut()[*k] += c;
        }
        out
    }

    fn check_args(&self, args: &[QVector]) -> Result<()> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: a.dim(),
                });
            }
        }
        Ok(())
    }

    /// Multilinear bracket of arbitrary vectors.
    pub fn eval_bracket(&self, args: &[QVector]) -> Result<QVector> {
        self.check_args(args)?;
        Ok(self.eval_unchecked(args.iter()))
    }

    fn eval_unchecked<'a>(&self, args: impl Iterator<Item = &'a QVector> + Clone) -> QVector {
        let mut out = QVector::zeros(self.dim);
        'entry: for (tuple, row) in &self.table {
            let mut prod: Option<Rational> = None;
            for (arg, &i) in args.clone().zip(tuple) {
                let c = &arg.coords()[i];
                if c.is_zero() {
                    continue 'entry;
                }
                prod = Some(match prod {
                    None => c.clone(),
                    Some(p) => p * c,
                });
            }
            let prod = prod.expect("arity >= 2");
            for (k, c) in row {
                out.coords_mut()[*k] += &prod * c;
            }
        }
        out
    }

    /// `[x_1,...,x_n]_Lie`: the bracket summed over all `n!` orderings of
    /// the arguments.
    pub fn eval_lie_bracket(&self, args: &[QVector]) -> Result<QVector> {
        self.check_args(args)?;
        let mut out = QVector::zeros(self.dim);
        for perm in permutations(self.arity) {
            let v = self.eval_unchecked(perm.iter().map(|&p| &args[p]));
            out.add_assign(&v);
        }
        Ok(out)
    }

    /// The same Lie bracket by inclusion-exclusion: the bracket of
    /// `s = x_1 + ... + x_n` in every slot, minus the bracket of
    /// `x_θ(1),...,x_θ(n)` for every non-injective `θ: {1..n} -> {1..n}`.
    pub fn eval_lie_bracket_alt(&self, args: &[QVector]) -> Result<QVector> {
        self.check_args(args)?;
        let n = self.arity;
        let mut s = QVector::zeros(self.dim);
        for a in args {
            s = s.add(a)?;
        }
        let all_s: Vec<QVector> = vec![s; n];
        let mut out = self.eval_unchecked(all_s.iter());
        let minus_one = Rational::from_integer((-1).into());
        for theta in crate::tuples::all_tuples(n, n) {
            let mut seen = vec![false; n];
            let injective = theta
                .iter()
                .all(|&t| !std::mem::replace(&mut seen[t], true));
            if injective {
                continue;
            }
            let v = self.eval_unchecked(theta.iter().map(|&t| &args[t]));
            out.add_scaled(&minus_one, &v);
        }
        Ok(out)
    }

    /// Lie bracket of basis vectors.
    pub fn lie_bracket_basis(&self, tuple: &[usize]) -> QVector {
        let mut out = QVector::zeros(self.dim);
        for perm in permutations(self.arity) {
            let t: Vec<usize> = perm.iter().map(|&p| tuple[p]).collect();
            for (k, c) in self.bracket_basis(&t) {
                out.coords_mut()[*k] += c;
            }
        }
        out
    }

    /// Bracket with `v` in position `slot` and basis vectors `e_{fill[i]}`
    /// everywhere else (`fill[slot]` is ignored).
    pub fn bracket_with_slot(&self, slot: usize, v: &QVector, fill: &[usize]) -> QVector {
        let mut out = QVector::zeros(self.dim);
        let mut t = fill.to_vec();
        for (k, vk) in v.support() {
            t[slot] = k;
            for (target, c) in self.bracket_basis(&t) {
                out.coords_mut()[*target] += vk * c;
            }
        }
        out
    }

    /// Whether swapping any two adjacent arguments negates the bracket on
    /// every basis tuple.
    pub fn is_alternating(&self) -> bool {
        for (tuple, _) in self.entries() {
            let v = self.bracket_basis_vec(tuple);
            for p in 0..self.arity - 1 {
                let mut swapped = tuple.to_vec();
                swapped.swap(p, p + 1);
                let w = self.bracket_basis_vec(&swapped);
                if !v.add(&w).expect("same dim").is_zero() {
                    return false;
                }
            }
        }
        true
    }
}
