use num_bigint::BigInt;
use proptest::prelude::*;

use leibniz_core::bounds::{
    best_bounds, binom, cor_nilp, thm_general, thm_general_sum, AlgebraParams, BoundId,
};
use leibniz_core::combinatorics::{
    count_nondecreasing, enumerate_nondecreasing, figurate, pascal_identity_check, rhombus_sum,
};
use leibniz_core::io::{parse_algebra, render_algebra};
use leibniz_core::linalg::{ratio, span};
use leibniz_core::{QVector, StructureConstants};

fn table() -> impl Strategy<Value = StructureConstants> {
    (2usize..=3, 1usize..=4).prop_flat_map(|(n, m)| {
        let entry = (
            proptest::collection::vec(0..m, n),
            0..m,
            (-5i64..=5, 1i64..=4),
        );
        proptest::collection::vec(entry, 0..8).prop_map(move |entries| {
            let mut sc = StructureConstants::new(n, m).unwrap();
            for (tuple, k, (p, q)) in entries {
                if sc.bracket_basis(&tuple).iter().all(|(t, _)| *t != k) {
                    sc.insert(&tuple, k, ratio(p, q)).unwrap();
                }
            }
            sc
        })
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(sc in table()) {
        let text = render_algebra(&sc);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(render_algebra(&back), text);
        prop_assert_eq!(back, sc);
    }

    #[test]
    fn vandermonde(n in 2usize..=9, m in 1usize..=20, d in 0usize..=20) {
        prop_assert_eq!(thm_general(n, m, d), thm_general_sum(n, m, d));
    }

    #[test]
    fn nilpotent_bound_never_exceeds_general(n in 2usize..=6, m in 1usize..=20, d in 0usize..=20) {
        prop_assume!(d <= m);
        prop_assert!(cor_nilp(n, m, d) <= thm_general(n, m, d));
    }

    #[test]
    fn best_is_the_minimum(n in 2usize..=5, m in 1usize..=12, d in 0usize..=12) {
        prop_assume!(d < m);
        let p = AlgebraParams::new(n, m, d).unwrap();
        let report = best_bounds(&p);
        let best = report.best_item().unwrap().value.clone().unwrap();
        for id in BoundId::ALL {
            if let Some(v) = report.value(id) {
                prop_assert!(&best <= v);
            }
        }
    }

    #[test]
    fn pascal_closed_form(n in 2usize..=30, r in 1usize..=29) {
        prop_assume!(r < n);
        prop_assert!(pascal_identity_check(n, r).unwrap().equal);
    }

    #[test]
    fn figurate_counts_multisets(t in 1usize..=7, s in 1usize..=6) {
        let listed = enumerate_nondecreasing(t, s).unwrap();
        prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(BigInt::from(listed.len()), count_nondecreasing(t as u64, s as u64));
        prop_assert_eq!(count_nondecreasing(t as u64, s as u64), figurate(t as u64, s as u64));
    }

    #[test]
    fn rhombus_closed_form(n in 2usize..=40) {
        prop_assert_eq!(rhombus_sum(n).unwrap(), binom(2 * n as i64, n as i64) - BigInt::from(1));
    }

    #[test]
    fn subspace_dimension_formula(
        m in 1usize..=5,
        a in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..5),
        b in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..5),
    ) {
        let vecs = |rows: &[Vec<i64>]| -> Vec<QVector> {
            rows.iter().map(|r| QVector::from_ints(&r[..m])).collect()
        };
        let a = span(&vecs(&a), m).unwrap();
        let b = span(&vecs(&b), m).unwrap();
        prop_assert_eq!(
            a.sum(&b).unwrap().dim() + a.intersect(&b).unwrap().dim(),
            a.dim() + b.dim()
        );
    }
}
