use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::IntMatrix;
use crate::error::{Error, Result};

/// Tie-break among candidate pivots of equal (minimal) absolute value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotOrder {
    /// first candidate in row-major order
    #[default]
    LowestIndex,
    /// last candidate in row-major order
    HighestIndex,
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, the diagonal
/// satisfying `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Solution {
    Integral(Vec<BigInt>),
    /// the system is inconsistent over the rationals
    NoRationalSolution,
    /// solvable over the rationals but not over the integers
    NotIntegral,
}

impl Solution {
    pub fn integral(self) -> Option<Vec<BigInt>> {
        match self {
            Solution::Integral(x) => Some(x),
            _ => None,
        }
    }
}

impl SmithDecomposition {
    /// Diagonal entries `d₁, …, d_min(m,n)`, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn solve(&self, b: &[BigInt]) -> Result<Solution> {
        let (m, n) = (self.d.nrows(), self.d.ncols());
        if b.len() != m {
            return Err(Error::Dimension { expected: m, found: b.len() });
        }
        let c = self.u.mul_vec(b);
        if c[self.rank..].iter().any(|x| !x.is_zero()) {
            return Ok(Solution::NoRationalSolution);
        }
        let mut y = vec![BigInt::zero(); n];
        for i in 0..self.rank {
            let (q, r) = c[i].div_rem(self.d.get(i, i));
            if !r.is_zero() {
                return Ok(Solution::NotIntegral);
            }
            y[i] = q;
        }
        Ok(Solution::Integral(self.v.mul_vec(&y)))
    }

    /// Columns of `V` past the rank: a lattice basis of the integer kernel.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.v.ncols()).map(|j| self.v.column(j)).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    smith_normal_form_with(a, PivotOrder::LowestIndex)
}

fn better(candidate: &BigInt, best: Option<&BigInt>, order: PivotOrder) -> bool {
    match best {
        None => true,
        Some(b) => match order {
            PivotOrder::LowestIndex => candidate < b,
            PivotOrder::HighestIndex => candidate <= b,
        },
    }
}

fn find_pivot(d: &IntMatrix, t: usize, order: PivotOrder) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, (usize, usize))> = None;
    for i in t..d.nrows() {
        for j in t..d.ncols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if better(&a, best.as_ref().map(|b| &b.0), order) {
                best = Some((a, (i, j)));
            }
        }
    }
    best.map(|b| b.1)
}

pub fn smith_normal_form_with(a: &IntMatrix, order: PivotOrder) -> SmithDecomposition {
    let (m, n) = (a.nrows(), a.ncols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&d, t, order) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let q = -d.get(i, t).div_floor(d.get(t, t));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let q = -d.get(t, j).div_floor(d.get(t, t));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }
            // a nonzero remainder is smaller than the pivot: promote it
            let mut best: Option<(BigInt, usize, bool)> = None;
            for i in t + 1..m {
                let x = d.get(i, t);
                if !x.is_zero() && better(&x.abs(), best.as_ref().map(|b| &b.0), order) {
                    best = Some((x.abs(), i, true));
                }
            }
            for j in t + 1..n {
                let x = d.get(t, j);
                if !x.is_zero() && better(&x.abs(), best.as_ref().map(|b| &b.0), order) {
                    best = Some((x.abs(), j, false));
                }
            }
            if let Some((_, k, is_row)) = best {
                if is_row {
                    d.swap_rows(t, k);
                    u.swap_rows(t, k);
                } else {
                    d.swap_cols(t, k);
                    v.swap_cols(t, k);
                }
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { u, v, d, rank: t }
}

pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Solution> {
    smith_normal_form(a).solve(b)
}

pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    smith_normal_form(a).kernel()
}
