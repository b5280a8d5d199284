mod common;

use common::minor_gcd;
use normcx::linalg::{smith_normal_form_with, IntMatrix, PivotOrder, Solution};
use normcx::{hermite_normal_form, kernel_basis, smith_normal_form, solve_integer};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(m, n)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, n), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_matches_minor_gcds(a in matrix_strategy(5, 5)) {
        let m = IntMatrix::from_rows(&a);
        for order in [PivotOrder::LowestIndex, PivotOrder::HighestIndex] {
            let s = smith_normal_form_with(&m, order);
            prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
            prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
            prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
            let f = s.invariant_factors();
            let mut product = BigInt::from(1);
            for k in 1..=f.len() {
                product *= &f[k - 1];
                prop_assert_eq!(product.clone(), BigInt::from(minor_gcd(&a, k)));
                if k >= 2 && !f[k - 1].is_zero() {
                    prop_assert!(f[k - 1].is_multiple_of(&f[k - 2]));
                }
            }
        }
    }

    #[test]
    fn solutions_are_exact(a in matrix_strategy(4, 6), seed in proptest::collection::vec(-4i64..=4, 4)) {
        let m = IntMatrix::from_rows(&a);
        let b: Vec<BigInt> = seed[..m.nrows()].iter().map(|&x| x.into()).collect();
        if let Solution::Integral(x) = solve_integer(&m, &b).unwrap() {
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }

    #[test]
    fn kernel_basis_spans(a in matrix_strategy(4, 6)) {
        let m = IntMatrix::from_rows(&a);
        let k = kernel_basis(&m);
        let rank = smith_normal_form(&m).rank;
        prop_assert_eq!(k.len(), m.ncols() - rank);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        // the basis spans a saturated sublattice: all invariant factors are 1
        if !k.is_empty() {
            let basis = IntMatrix::from_columns(m.ncols(), &k);
            let f = smith_normal_form(&basis).invariant_factors();
            prop_assert!(f.iter().all(|x| *x == BigInt::from(1)));
            // redundant generators leave the Hermite form unchanged
            let mut extended: Vec<Vec<BigInt>> = k.iter().map(|v| v.iter().map(|x| x * 3).collect()).collect();
            extended.extend(k.iter().cloned());
            let h1 = hermite_normal_form(&basis.transpose());
            let h2 = hermite_normal_form(&IntMatrix::from_columns(m.ncols(), &extended).transpose());
            for i in 0..h1.nrows() {
                prop_assert_eq!(h1.row(i), h2.row(i));
            }
            for i in h1.nrows()..h2.nrows() {
                prop_assert!(h2.row(i).iter().all(Zero::is_zero));
            }
        }
    }
}

#[test]
fn hermite_of_kernel_equals_for_scaled_generators() {
    let a = IntMatrix::from_rows(&[vec![1, 1, 1]]);
    let k = kernel_basis(&a);
    assert_eq!(k.len(), 2);
    let h = hermite_normal_form(&IntMatrix::from_columns(3, &k).transpose());
    assert_eq!(h, IntMatrix::from_rows(&[vec![1, 0, -1], vec![0, 1, -1]]));
}

#[test]
fn solve_reports_rational_obstruction() {
    let a = IntMatrix::from_rows(&[vec![2, 4]]);
    assert_eq!(solve_integer(&a, &[BigInt::from(3)]), Ok(Solution::NotIntegral));
    let x = solve_integer(&a, &[BigInt::from(6)]).unwrap().integral().unwrap();
    assert_eq!(a.mul_vec(&x), vec![BigInt::from(6)]);
}
