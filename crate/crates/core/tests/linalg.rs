use braidop::linalg::{
    format_rational, nullspace, parse_rational, rank, rref, solve_affine, subspace_contains,
    LinalgError, Matrix, Rational,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Rank by Bareiss elimination over `i128`.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (m, n) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..n {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

fn to_matrix(rows: &[Vec<i64>], cols: usize) -> Matrix {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect();
    Matrix::from_rows(cols, rows).unwrap()
}

fn int_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(m, n)| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), m),
        )
    })
}

#[test]
fn bareiss_oracle_sanity() {
    assert_eq!(bareiss_rank(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(bareiss_rank(&[vec![0, 1], vec![1, 0]]), 2);
    assert_eq!(bareiss_rank(&[vec![0, 0, 0]]), 0);
}

#[test]
fn inconsistent_system_is_infeasible() {
    let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
    let b = vec![Rational::one(), Rational::zero()];
    assert_eq!(solve_affine(&m, &b), Err(LinalgError::Infeasible));
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn rank_matches_fraction_free_oracle((n, rows) in int_matrix()) {
        prop_assert_eq!(rank(&to_matrix(&rows, n)), bareiss_rank(&rows));
    }

    #[test]
    fn rref_is_reduced_and_spans_the_rows((n, rows) in int_matrix()) {
        let m = to_matrix(&rows, n);
        let ech = rref(&m);
        let reduced = ech.reduced.to_rows();
        for (r, &p) in ech.pivot_cols.iter().enumerate() {
            prop_assert!(reduced[r][p].is_one());
            prop_assert!(reduced[r][..p].iter().all(|x| x.is_zero()));
            for (i, row) in reduced.iter().enumerate() {
                if i != r {
                    prop_assert!(row[p].is_zero());
                }
            }
        }
        prop_assert!(ech.pivot_cols.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(reduced[ech.rank..].iter().all(|row| row.iter().all(|x| x.is_zero())));
        let nonzero: Vec<Vec<Rational>> = reduced[..ech.rank].to_vec();
        for row in m.to_rows() {
            prop_assert!(subspace_contains(&nonzero, &row));
        }
        for row in &nonzero {
            prop_assert!(subspace_contains(&m.to_rows(), row));
        }
    }

    #[test]
    fn nullspace_is_annihilated_and_complete((n, rows) in int_matrix()) {
        let m = to_matrix(&rows, n);
        let ns = nullspace(&m);
        prop_assert_eq!(ns.len() + rank(&m), n);
        for v in &ns {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn affine_solutions_round_trip(
        (n, rows) in int_matrix(),
        x in prop::collection::vec(-4i64..=4, 6),
        t in prop::collection::vec(-3i64..=3, 6),
    ) {
        let m = to_matrix(&rows, n);
        let x: Vec<Rational> = x[..n].iter().map(|&v| Rational::from_integer(v.into())).collect();
        let b = m.mul_vec(&x).unwrap();
        let set = solve_affine(&m, &b).unwrap();
        let params: Vec<Rational> = t[..set.param_count()]
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect();
        prop_assert_eq!(m.mul_vec(&set.point(&params)).unwrap(), b);
        let offset: Vec<Rational> = x.iter().zip(&set.particular).map(|(a, p)| a - p).collect();
        prop_assert!(subspace_contains(&set.directions, &offset));
    }

    #[test]
    fn rationals_round_trip(n in any::<i64>(), d in 1i64..=i64::MAX) {
        let r = Rational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}
