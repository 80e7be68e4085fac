//! Smith normal form over ℤ with unimodular change-of-basis matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `left · M · right = diagonal`, with `left` and `right` unimodular.
///
/// The inverses of both transforms are tracked alongside them. Columns of
/// `left_inverse` form a basis of ℤʳ adapted to the image of `M` (the image is
/// spanned by `dᵢ` times the first `rank` of them); the last `c − rank`
/// columns of `right` span the integer kernel of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub left_inverse: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub right_inverse: IntMatrix,
    rank: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d₁ | d₂ | … | d_rank`, all positive.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diagonal.get(i, i).clone()).collect()
    }
}

struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[target] += factor · row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
        self.u_inv.add_col_multiple(source, target, &-factor);
    }

    /// col[target] += factor · col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
        self.v_inv.add_row_multiple(source, target, &-factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Nonzero entry of least absolute value in the trailing block; ties go to
    /// the lowest row, then the lowest column.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = self.s.get(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.s.get(bi, bj).abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the diagonal. Returns false if some
    /// remainder was left and a new pivot must be chosen.
    fn eliminate(&mut self, t: usize) -> bool {
        let p = self.s.get(t, t).clone();
        let mut clean = true;
        for i in t + 1..self.s.rows() {
            let x = self.s.get(i, t).clone();
            if x.is_zero() {
                continue;
            }
            let q = x.div_floor(&p);
            self.add_row(i, t, &-q);
            clean &= self.s.get(i, t).is_zero();
        }
        for j in t + 1..self.s.cols() {
            let x = self.s.get(t, j).clone();
            if x.is_zero() {
                continue;
            }
            let q = x.div_floor(&p);
            self.add_col(j, t, &-q);
            clean &= self.s.get(t, j).is_zero();
        }
        clean
    }

    /// Finds a trailing-block entry the pivot does not divide.
    fn divisibility_defect(&self, t: usize) -> Option<usize> {
        let p = self.s.get(t, t);
        (t + 1..self.s.rows()).find(|&i| {
            (t + 1..self.s.cols()).any(|j| !self.s.get(i, j).is_multiple_of(p))
        })
    }
}

/// Computes `U·M·V = S` with `S` diagonal, `d₁ | d₂ | …`, all `dᵢ > 0`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut red = Reducer {
        s: m.clone(),
        u: IntMatrix::identity(r),
        u_inv: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
        v_inv: IntMatrix::identity(c),
    };

    let mut rank = 0;
    for t in 0..r.min(c) {
        let Some((pi, pj)) = red.pivot(t) else {
            break;
        };
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);
        loop {
            if !red.eliminate(t) {
                let (pi, pj) = red.pivot(t).expect("remainder is nonzero");
                red.swap_rows(t, pi);
                red.swap_cols(t, pj);
                continue;
            }
            match red.divisibility_defect(t) {
                Some(i) => red.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if red.s.get(t, t).is_negative() {
            red.negate_row(t);
        }
        rank += 1;
    }

    SmithDecomposition {
        left: red.u,
        left_inverse: red.u_inv,
        diagonal: red.s,
        right: red.v,
        right_inverse: red.v_inv,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(rows: &[&[i64]]) -> Vec<i64> {
        let d = smith_normal_form(&IntMatrix::from_i64_rows(rows));
        d.divisors()
            .iter()
            .map(|x| i64::try_from(x.clone()).unwrap())
            .collect()
    }

    fn check(m: &IntMatrix) {
        let d = smith_normal_form(m);
        assert_eq!(d.left.mul(m).mul(&d.right), d.diagonal);
        assert_eq!(d.left.mul(&d.left_inverse), IntMatrix::identity(m.rows()));
        assert_eq!(d.right.mul(&d.right_inverse), IntMatrix::identity(m.cols()));
    }

    #[test]
    fn single_entry() {
        assert_eq!(divisors(&[&[3]]), vec![3]);
        assert_eq!(divisors(&[&[-3]]), vec![3]);
    }

    #[test]
    fn identity_has_unit_divisors() {
        assert_eq!(divisors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
    }

    #[test]
    fn non_dividing_diagonal_is_fixed() {
        // diag(2, 3) has divisors (1, 6).
        assert_eq!(divisors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(divisors(&[&[4, 0], &[0, 6]]), vec![2, 12]);
    }

    #[test]
    fn transforms_reconstruct() {
        check(&IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        check(&IntMatrix::from_i64_rows(&[&[0, 0], &[0, 0], &[0, 5]]));
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(2, 0));
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let d = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(d.rank(), 0);
        assert!(d.divisors().is_empty());
    }
}
