//! Exact linear algebra over the rationals.
//!
//! Every subspace is stored by its reduced row-echelon basis, so two
//! [`Subspace`] values are equal exactly when they describe the same space.
//! Pivots are chosen as the first nonzero entry scanning columns left to
//! right; no tolerances exist anywhere in this module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p` or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coordinate vector with respect to a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector `e_index` (0-based).
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn check_same(&self, other: &QVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &QVector) -> Result<QVector> {
        self.check_same(other)?;
        Ok(QVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &QVector) -> Result<QVector> {
        self.check_same(other)?;
        Ok(QVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, s: &Rational) -> QVector {
        QVector(self.0.iter().map(|a| a * s).collect())
    }

    /// `self += s * other`; panics on length mismatch.
    pub(crate) fn add_scaled(&mut self, s: &Rational, other: &QVector) {
        assert_eq!(self.dim(), other.dim());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub(crate) fn add_assign(&mut self, other: &QVector) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// Rectangular rational matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<QVector>,
    ncols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<QVector>, ncols: usize) -> Result<Self> {
        for r in &rows {
            if r.dim() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: r.dim(),
                });
            }
        }
        Ok(QMatrix { rows, ncols })
    }

    pub fn from_ints(rows: &[&[i64]], ncols: usize) -> Result<Self> {
        Self::new(rows.iter().map(|r| QVector::from_ints(r)).collect(), ncols)
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            rows: (0..n).map(|i| QVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn mul_vec(&self, v: &QVector) -> Result<QVector> {
        if v.dim() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: v.dim(),
            });
        }
        Ok(QVector(
            self.rows
                .iter()
                .map(|r| {
                    r.0.iter()
                        .zip(&v.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    pub fn rank(&self) -> usize {
        rref(self).nrows()
    }
}

/// In-place Gauss-Jordan elimination. Returns the nonzero rows of the
/// reduced form together with their pivot columns.
fn reduce_rows(mut rows: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(found, next);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next][col..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    (rows, pivots)
}

/// Reduced row-echelon form with zero rows removed.
pub fn rref(m: &QMatrix) -> QMatrix {
    let (rows, _) = reduce_rows(m.rows.iter().map(|r| r.0.clone()).collect(), m.ncols);
    QMatrix {
        rows: rows.into_iter().map(QVector).collect(),
        ncols: m.ncols,
    }
}

/// A subspace of `Q^ambient`, held in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| QVector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the coordinate axes listed in `indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut vs = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    bound: ambient,
                });
            }
            vs.push(QVector::unit(ambient, i));
        }
        span(&vs, ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; the standard basis vectors at these
    /// positions form a complement of the subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_vec(&self, v: &QVector) -> Result<()> {
        if v.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.dim(),
            });
        }
        Ok(())
    }

    fn check_sub(&self, other: &Subspace) -> Result<()> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Residual of `v` after clearing every pivot coordinate. Zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &QVector) -> Result<QVector> {
        self.check_vec(v)?;
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out.0[p].clone();
            if !c.is_zero() {
                out.add_scaled(&-c, row);
            }
        }
        Ok(out)
    }

    pub fn member(&self, v: &QVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_sub(other)?;
        for v in &other.basis {
            if !self.member(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_sub(other)?;
        let vs: Vec<QVector> = self.basis.iter().chain(&other.basis).cloned().collect();
        span(&vs, self.ambient)
    }

    /// `A ∩ B` via the kernel of `[A^T | -B^T]`: each kernel vector
    /// `(α, β)` gives the common element `Σ α_i a_i`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_sub(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let ka = self.dim();
        let kb = other.dim();
        let rows: Vec<QVector> = (0..self.ambient)
            .map(|coord| {
                let mut r = Vec::with_capacity(ka + kb);
                r.extend(self.basis.iter().map(|a| a.0[coord].clone()));
                r.extend(other.basis.iter().map(|b| -b.0[coord].clone()));
                QVector(r)
            })
            .collect();
        let system = QMatrix::new(rows, ka + kb)?;
        let sol = kernel(&system);
        let mut common = Vec::with_capacity(sol.dim());
        for s in sol.basis() {
            let mut v = QVector::zeros(self.ambient);
            for (alpha, a) in s.0[..ka].iter().zip(&self.basis) {
                v.add_scaled(alpha, a);
            }
            common.push(v);
        }
        span(&common, self.ambient)
    }

    /// Image of a vector given in this subspace's basis coordinates.
    pub fn combine(&self, coeffs: &[Rational]) -> QVector {
        let mut v = QVector::zeros(self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            v.add_scaled(c, b);
        }
        v
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// Canonical subspace spanned by `vs` inside `Q^ambient`.
pub fn span(vs: &[QVector], ambient: usize) -> Result<Subspace> {
    for v in vs {
        if v.dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.dim(),
            });
        }
    }
    let rows: Vec<Vec<Rational>> = vs
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.0.clone())
        .collect();
    let (rows, pivots) = reduce_rows(rows, ambient);
    Ok(Subspace {
        ambient,
        basis: rows.into_iter().map(QVector).collect(),
        pivots,
    })
}

/// Right null space `{v : M v = 0}`.
pub fn kernel(m: &QMatrix) -> Subspace {
    let n = m.ncols;
    let (rows, pivots) = reduce_rows(m.rows.iter().map(|r| r.0.clone()).collect(), n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vs = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = QVector::unit(n, free);
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v.0[p] = -row[free].clone();
            }
        }
        vs.push(v);
    }
    span(&vs, n).expect("kernel vectors share the column count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        span(&vs.iter().map(|c| v(c)).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn rref_examples() {
        let m = QMatrix::from_ints(&[&[2, 4], &[1, 2]], 2).unwrap();
        assert_eq!(rref(&m), QMatrix::from_ints(&[&[1, 2]], 2).unwrap());
        let m = QMatrix::from_ints(&[&[0, 1], &[1, 0]], 2).unwrap();
        assert_eq!(rref(&m), QMatrix::identity(2));
        let m = QMatrix::from_ints(&[&[1, 1, 1], &[1, 2, 3]], 3).unwrap();
        assert_eq!(
            rref(&m),
            QMatrix::from_ints(&[&[1, 0, -1], &[0, 1, 2]], 3).unwrap()
        );
        let empty = QMatrix::new(vec![], 3).unwrap();
        assert_eq!(rref(&empty).nrows(), 0);
    }

    #[test]
    fn span_examples() {
        let s = sp(&[&[1, 2], &[2, 4]], 2);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert_eq!(span(&[], 3).unwrap().dim(), 0);
        let s = sp(&[&[1, 0, 0], &[1, 1, 0]], 3);
        assert_eq!(s.basis(), &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(span(&[v(&[1, 2])], 3).is_err());
    }

    #[test]
    fn member_examples() {
        let s = sp(&[&[1, 2]], 2);
        assert!(s.member(&v(&[3, 6])).unwrap());
        assert!(!s.member(&v(&[1, 0])).unwrap());
        assert!(Subspace::zero(2).member(&v(&[0, 0])).unwrap());
        assert!(s.member(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn sum_and_intersect_examples() {
        let a = sp(&[&[1, 0]], 2);
        let b = sp(&[&[0, 1]], 2);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
        assert_eq!(a.sum(&Subspace::zero(2)).unwrap(), a);
        let c = sp(&[&[1, 1]], 2);
        let d = sp(&[&[1, -1]], 2);
        assert_eq!(c.sum(&d).unwrap().dim(), 2);
        assert_eq!(c.intersect(&d).unwrap(), Subspace::zero(2));

        let xy = sp(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let yz = sp(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(xy.intersect(&yz).unwrap(), sp(&[&[0, 1, 0]], 3));
        assert_eq!(xy.intersect(&xy).unwrap(), xy);
        assert!(xy.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&QMatrix::from_ints(&[&[1, 1]], 2).unwrap());
        assert_eq!(k, sp(&[&[1, -1]], 2));
        assert!(kernel(&QMatrix::identity(3)).is_zero());
        assert_eq!(
            kernel(&QMatrix::from_ints(&[&[1, 2, 3]], 3).unwrap()).dim(),
            2
        );
        assert_eq!(kernel(&QMatrix::new(vec![], 2).unwrap()), Subspace::full(2));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
        assert_eq!(format_rational(&ratio(-6, 3)), "-2");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn non_pivots_complement() {
        let s = sp(&[&[0, 1, 1, 0]], 4);
        assert_eq!(s.pivots(), &[1]);
        assert_eq!(s.non_pivots(), vec![0, 2, 3]);
    }
}
