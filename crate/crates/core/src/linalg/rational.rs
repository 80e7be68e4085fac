//! Gauss–Jordan elimination over ℚ.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RatMatrix;

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = BigRational::one() / a.get(row, col).clone();
        for j in 0..a.cols() {
            let v = a.get(row, j).clone() * inv.clone();
            a.set(row, j, v);
        }
        for i in 0..a.rows() {
            if i != row {
                let factor = -a.get(i, col).clone();
                a.add_row_multiple(i, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols()];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// The original columns at the pivot positions: a basis of the column space.
pub fn column_space_basis(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    rref(m).1.into_iter().map(|j| m.column(j)).collect()
}

/// Some `x` with `m·x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve_rational(m: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let rhs = RatMatrix::from_columns(m.rows(), &[b.to_vec()]);
    let (r, pivots) = rref(&m.hstack(&rhs));
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols()).clone();
    }
    Some(x)
}
