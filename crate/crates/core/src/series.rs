//! Lie-center, central series, and classification flags.
//!
//! Lie-products only use non-decreasing basis fillings of slots `2..n`:
//! the Lie bracket is fully symmetric, so the position of the subspace
//! argument and the order of the remaining arguments do not matter.

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, leibnizator_details, quotient};
use crate::identity::require_identity;
use crate::linalg::{kernel, span, QMatrix, QVector, Rational, Subspace};
use crate::tuples::{all_tuples, nondecreasing_tuples};

/// Lie brackets `[e_k, e_J]_Lie` for every basis index `k` and every
/// non-decreasing filling `J` of the other `n − 1` slots.
pub struct LieTable {
    dim: usize,
    /// `rows[j][k] = [e_k, e_{J_j}]_Lie`
    rows: Vec<Vec<QVector>>,
}

impl LieTable {
    pub fn new(sc: &StructureConstants) -> Self {
        let m = sc.dim();
        let rows = nondecreasing_tuples(sc.arity() - 1, m)
            .map(|rest| {
                (0..m)
                    .map(|k| {
                        let mut t = Vec::with_capacity(sc.arity());
                        t.push(k);
                        t.extend_from_slice(&rest);
                        sc.lie_bracket_basis(&t)
                    })
                    .collect()
            })
            .collect();
        LieTable { dim: m, rows }
    }

    fn apply(&self, j: usize, v: &QVector) -> QVector {
        let mut out = QVector::zeros(self.dim);
        for (k, c) in v.support() {
            out.add_scaled(c, &self.rows[j][k]);
        }
        out
    }

    /// `[A, q, ..., q]_Lie`
    pub fn product(&self, a: &Subspace) -> Result<Subspace> {
        let mut vs = Vec::new();
        for v in a.basis() {
            for j in 0..self.rows.len() {
                let w = self.apply(j, v);
                if !w.is_zero() {
                    vs.push(w);
                }
            }
        }
        span(&vs, self.dim)
    }

    /// `{x : [x, q, ..., q]_Lie = 0}` as the kernel of the stacked maps.
    pub fn center(&self) -> Subspace {
        let m = self.dim;
        let mut rows = Vec::with_capacity(self.rows.len() * m);
        for maps in &self.rows {
            for t in 0..m {
                let row: Vec<Rational> = maps.iter().map(|col| col.coords()[t].clone()).collect();
                let row = QVector::new(row);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
        kernel(&QMatrix::new(rows, m).expect("rows have length m"))
    }
}

fn check_ambient(sc: &StructureConstants, s: &Subspace) -> Result<()> {
    if s.ambient() != sc.dim() {
        return Err(Error::DimensionMismatch {
            expected: sc.dim(),
            found: s.ambient(),
        });
    }
    Ok(())
}

pub fn lie_product_subspace(sc: &StructureConstants, a: &Subspace) -> Result<Subspace> {
    check_ambient(sc, a)?;
    LieTable::new(sc).product(a)
}

pub fn lie_center(sc: &StructureConstants) -> Subspace {
    LieTable::new(sc).center()
}

/// Repeats `step` from `first` until a term repeats, for at most `m + 1`
/// steps. The repeated term is not listed twice.
fn descend(
    first: Subspace,
    cap: usize,
    mut step: impl FnMut(&Subspace) -> Result<Subspace>,
) -> Result<Vec<Subspace>> {
    let mut terms = vec![first];
    for _ in 0..cap {
        let next = step(terms.last().unwrap())?;
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    Ok(terms)
}

/// `q^1_Lie = q`, `q^i_Lie = [q^{i-1}_Lie, q, ..., q]_Lie`.
pub fn lower_lie_series(sc: &StructureConstants) -> Result<Vec<Subspace>> {
    let table = LieTable::new(sc);
    descend(Subspace::full(sc.dim()), sc.dim() + 1, |s| table.product(s))
}

fn bracket_series(sc: &StructureConstants, all_slots: bool) -> Result<Vec<Subspace>> {
    let n = sc.arity();
    let m = sc.dim();
    let slots = if all_slots { n } else { 1 };
    descend(Subspace::full(m), m + 1, |s| {
        let mut vs = Vec::new();
        for v in s.basis() {
            for slot in 0..slots {
                for rest in all_tuples(n - 1, m) {
                    let mut fill = rest.clone();
                    fill.insert(slot, 0);
                    let b = sc.bracket_with_slot(slot, v, &fill);
                    if !b.is_zero() {
                        vs.push(b);
                    }
                }
            }
        }
        span(&vs, m)
    })
}

/// Ordinary lower central series with the previous term in the first slot:
/// `q^i = [q^{i-1}, q, ..., q]`.
pub fn lower_series(sc: &StructureConstants) -> Result<Vec<Subspace>> {
    bracket_series(sc, false)
}

/// Variant admitting the previous term in any slot.
pub fn lower_series_all_slots(sc: &StructureConstants) -> Result<Vec<Subspace>> {
    bracket_series(sc, true)
}

/// `Z_0 = 0`, `Z_{i+1}` = preimage of `Z_Lie(q/Z_i)`, until stable.
pub fn upper_lie_series(sc: &StructureConstants) -> Result<Vec<Subspace>> {
    let m = sc.dim();
    let mut terms = vec![Subspace::zero(m)];
    for _ in 0..=m {
        let last = terms.last().unwrap();
        if last.dim() == m {
            break;
        }
        let quo = quotient(sc, last)?;
        let center = lie_center(&quo.algebra);
        let lifted: Vec<QVector> = center.basis().iter().map(|c| quo.lift(c)).collect();
        let next = last.sum(&span(&lifted, m)?)?;
        if &next == last {
            break;
        }
        terms.push(next);
    }
    Ok(terms)
}

/// Dimension of the `i`-th term (1-based) of a series listed until it
/// stabilizes.
pub fn term_dim(dims: &[usize], i: usize) -> usize {
    assert!(i >= 1);
    dims.get(i - 1).copied().unwrap_or(*dims.last().unwrap())
}

/// Nilpotency class `c` with `dims[c] = 0 ≠ dims[c-1]`, if the series
/// reaches zero.
pub fn nilpotency_class(dims: &[usize]) -> Option<usize> {
    (dims.last() == Some(&0)).then(|| dims.len() - 1)
}

/// `dim q^i = m − n + 2 − i` for `2 ≤ i ≤ m − n + 2` (requires `m ≥ n`).
pub fn is_filiform_dims(dims: &[usize], n: usize, m: usize) -> bool {
    m >= n && (2..=m - n + 2).all(|i| term_dim(dims, i) == m - n + 2 - i)
}

/// `dim q^i = m + 1 − i` for `1 ≤ i ≤ m + 1`.
pub fn is_maximal_class_dims(dims: &[usize], m: usize) -> bool {
    (1..=m + 1).all(|i| term_dim(dims, i) == m + 1 - i)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassFlags {
    pub lie_abelian: bool,
    pub lie_nilpotent: bool,
    pub nilpotent: bool,
    pub lie_filiform: bool,
    pub filiform: bool,
    pub lie_maximal_class: bool,
    pub maximal_class: bool,
    pub n_lie: bool,
}

/// Subspaces behind a [`ClassificationReport`].
#[derive(Clone, Debug)]
pub struct SeriesData {
    pub lie_series: Vec<Subspace>,
    pub series: Vec<Subspace>,
    pub upper_lie_series: Vec<Subspace>,
    pub lie_center: Subspace,
    pub leibnizator: Subspace,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub arity: usize,
    pub dim: usize,
    pub lie_series_dims: Vec<usize>,
    pub series_dims: Vec<usize>,
    /// Ordinary series with the previous term allowed in every slot.
    pub series_all_slots_dims: Vec<usize>,
    pub upper_lie_series_dims: Vec<usize>,
    pub lie_center_dim: usize,
    pub leibnizator_dim: usize,
    pub leibnizator_generators_dim: usize,
    /// `dim q²_Lie`
    pub commutator_dim: usize,
    /// `dim(q²_Lie ∩ Z_Lie(q))`
    pub commutator_center_dim: usize,
    /// `dim (q/Z_Lie(q)) / (q/Z_Lie(q))²_Lie`
    pub central_quotient_abelianization_dim: usize,
    pub lie_class: Option<usize>,
    pub class: Option<usize>,
    pub flags: ClassFlags,
    pub subspaces: SeriesData,
}

impl ClassificationReport {
    pub fn leibnizator_closure_enlarged(&self) -> bool {
        self.leibnizator_dim != self.leibnizator_generators_dim
    }

    pub fn series_slot_convention_differs(&self) -> bool {
        self.series_dims != self.series_all_slots_dims
    }

    /// Lie class read off the upper series: the index where it reaches `q`.
    pub fn upper_lie_class(&self) -> Option<usize> {
        (self.upper_lie_series_dims.last() == Some(&self.dim))
            .then(|| self.upper_lie_series_dims.len() - 1)
    }
}

/// Verifies the fundamental identity, then classifies.
pub fn classify(sc: &StructureConstants) -> Result<ClassificationReport> {
    require_identity(sc)?;
    classify_unchecked(sc)
}

/// Classification without the identity check. Terms that fail to be ideals
/// (possible only when the identity fails) surface as errors.
pub fn classify_unchecked(sc: &StructureConstants) -> Result<ClassificationReport> {
    let n = sc.arity();
    let m = sc.dim();
    let table = LieTable::new(sc);
    let lie_series = descend(Subspace::full(m), m + 1, |s| table.product(s))?;
    let series = lower_series(sc)?;
    let all_slots = lower_series_all_slots(sc)?;
    let lie_center = table.center();
    let upper = upper_lie_series(sc)?;
    let leib = leibnizator_details(sc)?;

    let dims = |v: &[Subspace]| v.iter().map(Subspace::dim).collect::<Vec<_>>();
    let lie_series_dims = dims(&lie_series);
    let series_dims = dims(&series);
    let commutator = lie_series.get(1).unwrap_or(&lie_series[0]).clone();
    let commutator_center_dim = commutator.intersect(&lie_center)?.dim();

    let central_quotient_abelianization_dim = if lie_center.dim() == m {
        0
    } else {
        let quo = quotient(sc, &lie_center)?;
        let full = Subspace::full(quo.algebra.dim());
        quo.algebra.dim() - lie_product_subspace(&quo.algebra, &full)?.dim()
    };

    let lie_class = nilpotency_class(&lie_series_dims);
    let class = nilpotency_class(&series_dims);
    let flags = ClassFlags {
        lie_abelian: commutator.is_zero(),
        lie_nilpotent: lie_class.is_some(),
        nilpotent: class.is_some(),
        lie_filiform: is_filiform_dims(&lie_series_dims, n, m),
        filiform: is_filiform_dims(&series_dims, n, m),
        lie_maximal_class: is_maximal_class_dims(&lie_series_dims, m),
        maximal_class: is_maximal_class_dims(&series_dims, m),
        n_lie: leib.ideal.is_zero(),
    };

    Ok(ClassificationReport {
        arity: n,
        dim: m,
        series_all_slots_dims: dims(&all_slots),
        upper_lie_series_dims: dims(&upper),
        lie_center_dim: lie_center.dim(),
        leibnizator_dim: leib.ideal.dim(),
        leibnizator_generators_dim: leib.generators.dim(),
        commutator_dim: commutator.dim(),
        commutator_center_dim,
        central_quotient_abelianization_dim,
        lie_series_dims,
        series_dims,
        lie_class,
        class,
        flags,
        subspaces: SeriesData {
            lie_series,
            series,
            upper_lie_series: upper,
            lie_center,
            leibnizator: leib.ideal,
        },
    })
}

/// Dimensions entering the correction term `(I ∩ q²_Lie) / [I, q, ..., q]_Lie`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelativeGap {
    pub dim_intersection: usize,
    pub dim_product: usize,
    pub gap: usize,
}

pub fn relative_gap(sc: &StructureConstants, ideal: &Subspace) -> Result<RelativeGap> {
    check_ambient(sc, ideal)?;
    if !is_ideal(sc, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let table = LieTable::new(sc);
    let commutator = table.product(&Subspace::full(sc.dim()))?;
    let inter = ideal.intersect(&commutator)?;
    let prod = table.product(ideal)?;
    debug_assert!(inter.contains(&prod)?);
    Ok(RelativeGap {
        dim_intersection: inter.dim(),
        dim_product: prod.dim(),
        gap: inter.dim() - prod.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ex3_18() -> StructureConstants {
        let mut sc = StructureConstants::new(2, 2).unwrap();
        sc.insert(&[0, 0], 1, rat(1)).unwrap();
        sc
    }

    fn ex3_20() -> StructureConstants {
        let mut sc = StructureConstants::new(2, 4).unwrap();
        sc.insert(&[0, 0], 2, rat(1)).unwrap();
        sc.insert(&[0, 1], 3, rat(1)).unwrap();
        sc.insert(&[1, 0], 2, rat(1)).unwrap();
        sc.insert(&[2, 0], 3, rat(1)).unwrap();
        sc
    }

    fn ex3_3(m: usize) -> StructureConstants {
        let mut sc = StructureConstants::new(3, m).unwrap();
        for i in 0..m - 1 {
            sc.insert(&[i, 0, 0], i + 1, rat(1)).unwrap();
        }
        sc
    }

    fn coord(m: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(m, idx).unwrap()
    }

    fn dims(v: &[Subspace]) -> Vec<usize> {
        v.iter().map(Subspace::dim).collect()
    }

    #[test]
    fn lie_product_examples() {
        assert_eq!(
            lie_product_subspace(&ex3_18(), &Subspace::full(2)).unwrap(),
            coord(2, &[1])
        );
        assert_eq!(
            lie_product_subspace(&ex3_20(), &coord(4, &[2, 3])).unwrap(),
            coord(4, &[3])
        );
        assert!(lie_product_subspace(&ex3_20(), &Subspace::zero(4))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lower_series_examples() {
        assert_eq!(
            dims(&lower_lie_series(&ex3_3(5)).unwrap()),
            [5, 4, 3, 2, 1, 0]
        );
        assert_eq!(dims(&lower_lie_series(&ex3_20()).unwrap()), [4, 2, 1, 0]);
        let zero = StructureConstants::zero(2, 3).unwrap();
        assert_eq!(dims(&lower_lie_series(&zero).unwrap()), [3, 0]);

        assert_eq!(dims(&lower_series(&ex3_3(4)).unwrap()), [4, 3, 2, 1, 0]);
        assert_eq!(dims(&lower_series(&ex3_18()).unwrap()), [2, 1, 0]);
        assert_eq!(dims(&lower_series(&zero).unwrap()), [3, 0]);
    }

    #[test]
    fn center_examples() {
        assert_eq!(lie_center(&ex3_18()), coord(2, &[1]));
        assert_eq!(lie_center(&ex3_3(5)), coord(5, &[4]));
        let zero = StructureConstants::zero(3, 3).unwrap();
        assert_eq!(lie_center(&zero), Subspace::full(3));
    }

    #[test]
    fn upper_series_examples() {
        assert_eq!(dims(&upper_lie_series(&ex3_3(4)).unwrap()), [0, 1, 2, 3, 4]);
        assert_eq!(dims(&upper_lie_series(&ex3_18()).unwrap()), [0, 1, 2]);
        let zero = StructureConstants::zero(2, 3).unwrap();
        assert_eq!(dims(&upper_lie_series(&zero).unwrap()), [0, 3]);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&ex3_3(5)).unwrap();
        assert!(r.flags.lie_maximal_class && r.flags.maximal_class);
        assert_eq!(r.lie_class, Some(5));

        let r = classify(&ex3_20()).unwrap();
        assert!(r.flags.lie_filiform);
        assert_eq!(r.lie_class, Some(3));
        assert_eq!(r.subspaces.lie_center, r.subspaces.lie_series[2]);

        let r = classify(&ex3_18()).unwrap();
        assert!(!r.flags.lie_abelian);
        assert_eq!(r.lie_class, Some(2));
        assert_eq!(r.lie_center_dim, 1);
        assert_eq!(r.upper_lie_class(), Some(2));
    }

    #[test]
    fn classify_refuses_identity_failure() {
        let mut sc = ex3_18();
        sc.insert(&[1, 0], 0, rat(1)).unwrap();
        assert!(matches!(classify(&sc), Err(Error::IdentityViolated { .. })));
    }

    #[test]
    fn relative_gap_examples() {
        let g = relative_gap(&ex3_18(), &coord(2, &[1])).unwrap();
        assert_eq!((g.dim_intersection, g.dim_product, g.gap), (1, 0, 1));
        let g = relative_gap(&ex3_20(), &coord(4, &[3])).unwrap();
        assert_eq!((g.dim_intersection, g.dim_product, g.gap), (1, 0, 1));
        let g = relative_gap(&ex3_20(), &Subspace::zero(4)).unwrap();
        assert_eq!((g.dim_intersection, g.dim_product, g.gap), (0, 0, 0));
        assert!(matches!(
            relative_gap(&ex3_20(), &coord(4, &[0])),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn central_quotient_dimension_matches_formula() {
        for sc in [ex3_20(), ex3_3(5), ex3_18()] {
            let r = classify(&sc).unwrap();
            let q2 = &r.subspaces.lie_series[1];
            let formula = sc.dim() - q2.sum(&r.subspaces.lie_center).unwrap().dim();
            assert_eq!(r.central_quotient_abelianization_dim, formula);
        }
    }
}
