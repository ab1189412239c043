//! Property tests for the exact linear algebra kernel.

use proptest::prelude::*;
use quiverhom::{FieldSpec, Matrix};

fn small_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (0usize..=4, 0usize..=4).prop_flat_map(move |(rows, cols)| {
        let field = field.clone();
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |entries| {
            Matrix::from_fn(field.clone(), rows, cols, |r, c| {
                field.integer(entries[r * cols + c])
            })
        })
    })
}

fn any_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rational()),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
    ]
}

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose(m in any_field().prop_flat_map(small_matrix)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in any_field().prop_flat_map(small_matrix)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.cols(), m.rank() + kernel.cols());
        if kernel.cols() > 0 {
            prop_assert!(m.mul(&kernel).is_zero());
            prop_assert_eq!(kernel.rank(), kernel.cols());
        }
    }

    #[test]
    fn coimage_projection_kills_the_image(m in any_field().prop_flat_map(small_matrix)) {
        let (q, dim) = m.coimage_projection();
        prop_assert_eq!(dim, m.rows() - m.rank());
        prop_assert_eq!(q.rows(), dim);
        prop_assert_eq!(q.cols(), m.rows());
        prop_assert_eq!(q.rank(), dim);
        if m.cols() > 0 {
            prop_assert!(q.mul(&m).is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent(m in any_field().prop_flat_map(small_matrix)) {
        let (r, pivots) = m.rref();
        let (again, pivots_again) = r.rref();
        prop_assert_eq!(r, again);
        prop_assert_eq!(pivots, pivots_again);
    }

    #[test]
    fn solve_returns_actual_solutions(
        (m, x) in any_field().prop_flat_map(|f| {
            (small_matrix(f.clone()), Just(f))
        }).prop_flat_map(|(m, f)| {
            let rows = m.rows();
            let cols = m.cols();
            let vec = proptest::collection::vec(-2i64..=2, cols)
                .prop_map(move |v| {
                    Matrix::from_fn(f.clone(), cols, 1, |r, _| f.integer(v[r]))
                });
            (Just(m), vec).prop_map(move |(m, x)| { let _ = rows; (m, x) })
        })
    ) {
        // b is consistent by construction, so solve must succeed and verify
        let b = m.mul(&x);
        let solution = m.solve(&b).expect("consistent system");
        prop_assert_eq!(m.mul(&solution), b);
    }

    #[test]
    fn column_space_basis_spans(m in any_field().prop_flat_map(small_matrix)) {
        let basis = m.col_space_basis();
        prop_assert_eq!(basis.rank(), m.rank());
        // every original column solves against the basis
        for c in 0..m.cols() {
            let col = Matrix::from_columns(m.field().clone(), m.rows(), &[m.column(c)]);
            prop_assert!(basis.solve(&col).is_some());
        }
    }
}
