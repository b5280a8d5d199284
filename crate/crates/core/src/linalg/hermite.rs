use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form: row echelon with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`. Zero rows sink to the
/// bottom. Two matrices have the same row lattice iff their forms agree.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.nrows(), a.ncols());
    let mut h = a.clone();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m).filter(|&i| !h.get(i, c).is_zero()).min_by_key(|&i| h.get(i, c).abs());
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if !h.get(i, c).is_zero() {
                    let q = -h.get(i, c).div_floor(h.get(r, c));
                    h.add_row_multiple(i, r, &q);
                    if !h.get(i, c).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q: BigInt = -h.get(i, c).div_floor(&pivot);
            if !q.is_zero() {
                h.add_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
    h
}
