//! Exhaustive agreement with brute-force enumeration oracles over small
//! prime fields: every matrix with at most three rows and columns over F_2
//! and F_3 is checked against rank/kernel/solve/coimage oracles that work by
//! enumerating vectors, never by elimination.

use quiverhom::{FieldSpec, Matrix, Scalar};

fn all_vectors(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn to_matrix(field: &FieldSpec, rows: usize, cols: usize, entries: &[u64]) -> Matrix {
    Matrix::from_fn(field.clone(), rows, cols, |r, c| {
        field.integer(entries[r * cols + c] as i64)
    })
}

fn column_vector(field: &FieldSpec, data: &[u64]) -> Matrix {
    Matrix::from_fn(field.clone(), data.len(), 1, |r, _| field.integer(data[r] as i64))
}

/// Rank by counting the row span: the span of the rows has exactly p^rank
/// elements.
fn rank_oracle(p: u64, rows: usize, cols: usize, entries: &[u64]) -> usize {
    let mut span: std::collections::BTreeSet<Vec<u64>> = std::collections::BTreeSet::new();
    for coeffs in all_vectors(p, rows) {
        let mut v = vec![0u64; cols];
        for (r, &coef) in coeffs.iter().enumerate() {
            for c in 0..cols {
                v[c] = (v[c] + coef * entries[r * cols + c]) % p;
            }
        }
        span.insert(v);
    }
    let mut rank = 0;
    let mut size = 1usize;
    while size < span.len() {
        size *= p as usize;
        rank += 1;
    }
    assert_eq!(size, span.len(), "row span size must be a power of p");
    rank
}

/// All solutions of m * x = b, found by trying every vector.
fn solutions_oracle(p: u64, rows: usize, cols: usize, entries: &[u64], b: &[u64]) -> Vec<Vec<u64>> {
    all_vectors(p, cols)
        .into_iter()
        .filter(|x| {
            (0..rows).all(|r| {
                let mut acc = 0u64;
                for c in 0..cols {
                    acc = (acc + entries[r * cols + c] * x[c]) % p;
                }
                acc == b[r] % p
            })
        })
        .collect()
}

fn scalar_to_u64(s: &Scalar) -> u64 {
    match s {
        Scalar::Prime(x) => *x,
        Scalar::Rational(_) => panic!("expected a prime-field scalar"),
    }
}

#[test]
fn exhaustive_small_matrices_over_f2_and_f3() {
    for p in [2u64, 3] {
        let field = FieldSpec::prime(p).unwrap();
        for rows in 0..=3usize {
            for cols in 0..=3usize {
                for entries in all_vectors(p, rows * cols) {
                    let m = to_matrix(&field, rows, cols, &entries);
                    let rank = rank_oracle(p, rows, cols, &entries);
                    assert_eq!(m.rank(), rank, "rank of {m:?} over F_{p}");

                    // kernel: the solution count of m x = 0 pins the nullity,
                    // and every basis column must be an actual solution
                    let zero = vec![0u64; rows];
                    let null_count = solutions_oracle(p, rows, cols, &entries, &zero).len();
                    let kernel = m.kernel_basis();
                    assert_eq!(kernel.cols(), cols - rank);
                    assert_eq!(null_count, (p as usize).pow(kernel.cols() as u32));
                    if kernel.cols() > 0 {
                        assert!(m.mul(&kernel).is_zero());
                        assert_eq!(kernel.rank(), kernel.cols());
                    }

                    // solve against every possible right-hand side
                    for b in all_vectors(p, rows) {
                        let solutions = solutions_oracle(p, rows, cols, &entries, &b);
                        let attempt = m.solve(&column_vector(&field, &b));
                        match attempt {
                            Some(x) => {
                                let xs: Vec<u64> =
                                    (0..cols).map(|c| scalar_to_u64(x.entry(c, 0))).collect();
                                assert!(
                                    solutions.contains(&xs),
                                    "solver returned a non-solution for {m:?}"
                                );
                            }
                            None => assert!(
                                solutions.is_empty(),
                                "solver missed a solution for {m:?}"
                            ),
                        }
                    }

                    // coimage projection: kills the image, full rank, right size
                    let (q, dim) = m.coimage_projection();
                    assert_eq!(dim, rows - rank);
                    assert_eq!(q.rank(), dim);
                    if cols > 0 {
                        assert!(q.mul(&m).is_zero());
                    }
                }
            }
        }
    }
}
