//! Ideals, the Leibnizator, and quotient algebras.

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{span, QMatrix, QVector, Subspace};
use crate::tuples::all_tuples;

fn check_ambient(sc: &StructureConstants, s: &Subspace) -> Result<()> {
    if s.ambient() != sc.dim() {
        return Err(Error::DimensionMismatch {
            expected: sc.dim(),
            found: s.ambient(),
        });
    }
    Ok(())
}

/// Every bracket with `v` in one slot and basis vectors in the rest.
fn slot_brackets(sc: &StructureConstants, v: &QVector) -> Vec<QVector> {
    let n = sc.arity();
    let mut out = Vec::new();
    for slot in 0..n {
        for rest in all_tuples(n - 1, sc.dim()) {
            let mut fill = Vec::with_capacity(n);
            fill.extend_from_slice(&rest[..slot]);
            fill.push(0);
            fill.extend_from_slice(&rest[slot..]);
            let b = sc.bracket_with_slot(slot, v, &fill);
            if !b.is_zero() {
                out.push(b);
            }
        }
    }
    out
}

/// Smallest subspace containing `s` that absorbs brackets with the whole
/// algebra in every slot.
pub fn ideal_closure(sc: &StructureConstants, s: &Subspace) -> Result<Subspace> {
    check_ambient(sc, s)?;
    let mut current = s.clone();
    let mut pending: Vec<QVector> = s.basis().to_vec();
    while let Some(v) = pending.pop() {
        for b in slot_brackets(sc, &v) {
            if !current.member(&b)? {
                current = current.sum(&span(std::slice::from_ref(&b), sc.dim())?)?;
                pending.push(b);
            }
        }
    }
    Ok(current)
}

pub fn is_ideal(sc: &StructureConstants, s: &Subspace) -> Result<bool> {
    check_ambient(sc, s)?;
    for v in s.basis() {
        for b in slot_brackets(sc, v) {
            if !s.member(&b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The span of brackets with two equal arguments and the ideal it
/// generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leibnizator {
    pub generators: Subspace,
    pub ideal: Subspace,
}

impl Leibnizator {
    /// Whether taking the ideal closure added anything to the generator span.
    pub fn closure_enlarged(&self) -> bool {
        self.ideal.dim() != self.generators.dim()
    }
}

/// Generators are polarized: for each pair of positions `p < q` and each
/// basis filling of the remaining slots, the brackets with `e_a` at both
/// `p` and `q`, and the sums `[..e_a..e_b..] + [..e_b..e_a..]`. Over a field
/// of characteristic zero these span exactly the brackets with a repeated
/// argument.
pub fn leibnizator_details(sc: &StructureConstants) -> Result<Leibnizator> {
    let n = sc.arity();
    let m = sc.dim();
    let mut gens = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            for rest in all_tuples(n - 2, m) {
                let mut t = Vec::with_capacity(n);
                let mut it = rest.iter();
                for slot in 0..n {
                    t.push(if slot == p || slot == q {
                        0
                    } else {
                        *it.next().unwrap()
                    });
                }
                for a in 0..m {
                    for b in a..m {
                        t[p] = a;
                        t[q] = b;
                        let mut v = sc.bracket_basis_vec(&t);
                        if a != b {
                            t[p] = b;
                            t[q] = a;
                            v.add_assign(&sc.bracket_basis_vec(&t));
                        }
                        if !v.is_zero() {
                            gens.push(v);
                        }
                    }
                }
            }
        }
    }
    let generators = span(&gens, m)?;
    let ideal = ideal_closure(sc, &generators)?;
    Ok(Leibnizator { generators, ideal })
}

pub fn leibnizator(sc: &StructureConstants) -> Result<Subspace> {
    Ok(leibnizator_details(sc)?.ideal)
}

/// `q` is n-Lie exactly when its Leibnizator vanishes.
pub fn is_n_lie(sc: &StructureConstants) -> Result<bool> {
    Ok(leibnizator(sc)?.is_zero())
}

/// `q/I` realized on the standard basis vectors at the non-pivot
/// coordinates of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructureConstants,
    /// `(m − dim I) × m` matrix of the canonical projection.
    pub projection: QMatrix,
    /// Original basis indices kept as the quotient basis, in order.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &QVector) -> Result<QVector> {
        self.projection.mul_vec(v)
    }

    /// Section of the projection: quotient coordinates placed back on the
    /// complement basis vectors.
    pub fn lift(&self, w: &QVector) -> QVector {
        let mut v = QVector::zeros(self.projection.ncols());
        for (j, c) in w.support() {
            v.coords_mut()[self.complement[j]] = c.clone();
        }
        v
    }
}

pub fn quotient(sc: &StructureConstants, ideal: &Subspace) -> Result<Quotient> {
    check_ambient(sc, ideal)?;
    if !is_ideal(sc, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let m = sc.dim();
    let complement = ideal.non_pivots();
    let k = complement.len();
    if k == 0 {
        return Err(Error::InvalidAlgebra(
            "quotient by the whole algebra has dimension 0".into(),
        ));
    }
    let mut position = vec![None; m];
    for (j, &c) in complement.iter().enumerate() {
        position[c] = Some(j);
    }
    let project = |v: &QVector| -> Result<QVector> {
        let r = ideal.reduce(v)?;
        Ok(QVector::new(
            complement.iter().map(|&c| r.coords()[c].clone()).collect(),
        ))
    };

    let columns: Vec<QVector> = (0..m)
        .map(|j| project(&QVector::unit(m, j)))
        .collect::<Result<_>>()?;
    let rows = (0..k)
        .map(|t| QVector::new(columns.iter().map(|col| col.coords()[t].clone()).collect()))
        .collect();
    let projection = QMatrix::new(rows, m)?;

    let mut algebra = StructureConstants::new(sc.arity(), k)?;
    for (tuple, _) in sc.entries() {
        let Some(qt) = tuple
            .iter()
            .map(|&i| position[i])
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let image = project(&sc.bracket_basis_vec(tuple))?;
        for (target, c) in image.support() {
            algebra.insert(&qt, target, c.clone())?;
        }
    }
    if let Some(names) = sc.basis_names() {
        algebra.set_basis_names(complement.iter().map(|&c| names[c].clone()).collect())?;
    }
    Ok(Quotient {
        algebra,
        projection,
        complement,
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

    #[test]
    fn leibnizator_examples() {
        assert_eq!(leibnizator(&ex3_18()).unwrap(), coord(2, &[1]));
        let l = leibnizator_details(&ex3_3(5)).unwrap();
        assert_eq!(l.ideal, coord(5, &[1, 2, 3, 4]));
        assert!(!l.closure_enlarged());
        let zero = StructureConstants::zero(3, 3).unwrap();
        assert!(leibnizator(&zero).unwrap().is_zero());
    }

    #[test]
    fn closure_examples() {
        let q = ex3_3(4);
        assert!(ideal_closure(&q, &Subspace::zero(4)).unwrap().is_zero());
        assert_eq!(
            ideal_closure(&q, &coord(4, &[0])).unwrap(),
            Subspace::full(4)
        );
        assert_eq!(
            ideal_closure(&ex3_20(), &coord(4, &[2])).unwrap(),
            coord(4, &[2, 3])
        );
    }

    #[test]
    fn ideal_tests() {
        let q = ex3_20();
        assert!(is_ideal(&q, &coord(4, &[2, 3])).unwrap());
        assert!(!is_ideal(&q, &coord(4, &[0])).unwrap());
        assert!(is_ideal(&q, &Subspace::zero(4)).unwrap());
        assert!(is_ideal(&q, &coord(3, &[0])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = ex3_20();
        let quo = quotient(&q, &coord(4, &[3])).unwrap();
        let mut want = StructureConstants::new(2, 3).unwrap();
        want.insert(&[0, 0], 2, rat(1)).unwrap();
        want.insert(&[1, 0], 2, rat(1)).unwrap();
        assert_eq!(quo.algebra, want);

        let quo = quotient(&q, &Subspace::zero(4)).unwrap();
        assert_eq!(quo.algebra, q);
        assert_eq!(quo.projection, QMatrix::identity(4));

        let quo = quotient(&ex3_3(4), &coord(4, &[3])).unwrap();
        assert_eq!(quo.algebra, ex3_3(3));

        assert!(matches!(
            quotient(&q, &coord(4, &[0])),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn quotient_is_homomorphism_on_basis() {
        let q = ex3_20();
        let ideal = coord(4, &[2, 3]);
        let quo = quotient(&q, &ideal).unwrap();
        for t in all_tuples(2, 4) {
            let args: Vec<QVector> = t.iter().map(|&i| QVector::unit(4, i)).collect();
            let lhs = quo.project(&q.eval_bracket(&args).unwrap()).unwrap();
            let pargs: Vec<QVector> = args.iter().map(|a| quo.project(a).unwrap()).collect();
            assert_eq!(lhs, quo.algebra.eval_bracket(&pargs).unwrap());
        }
    }

    #[test]
    fn n_lie_examples() {
        assert!(!is_n_lie(&ex3_18()).unwrap());
        assert!(is_n_lie(&StructureConstants::zero(2, 3).unwrap()).unwrap());
    }
}
