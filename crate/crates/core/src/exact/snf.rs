
use super::mat::{Matrix, Scalar};

/// Smith normal form decomposition `u * m * v = d`.
///
/// `d` is diagonal with nonnegative entries satisfying the divisibility
/// chain `d1 | d2 | ...`; `u`, `v` are unimodular and `u_inv`, `v_inv`
/// their exact inverses, maintained alongside the elimination.
#[derive(Clone, Debug)]
pub struct Snf<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: Scalar> Snf<T> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Diagonal entries, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<T> {
        self.d.diagonal()
    }
}

struct Work<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: Scalar> Work<T> {
    // Every mutation keeps the invariant  u * original * v = a.
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row(i) += c * row(k)
    fn add_row(&mut self, i: usize, k: usize, c: &T) {
        self.a.add_row_multiple(i, k, c);
        self.u.add_row_multiple(i, k, c);
        let neg = T::zero() - c.clone();
        self.u_inv.add_col_multiple(k, i, &neg);
    }

    /// col(j) += c * col(k)
    fn add_col(&mut self, j: usize, k: usize, c: &T) {
        self.a.add_col_multiple(j, k, c);
        self.v.add_col_multiple(j, k, c);
        let neg = T::zero() - c.clone();
        self.v_inv.add_row_multiple(k, j, &neg);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Pivot choice: smallest nonzero absolute value in the trailing
    /// submatrix, ties broken by lowest (row, col). Deterministic.
    fn select_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(T, usize, usize)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let val = self.a[(i, j)].abs();
                if val.is_zero() {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((b, _, _)) => val < *b,
                };
                if better {
                    best = Some((val, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clear row k and column k outside the pivot, re-selecting the pivot
    /// whenever a division leaves a smaller remainder. Terminates because
    /// the pivot's absolute value strictly decreases between re-selections.
    fn clear_cross(&mut self, k: usize) {
        loop {
            let Some((pi, pj)) = self.select_pivot(k) else { return };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            let mut dirty = false;
            for i in 0..self.a.rows() {
                if i == k || self.a[(i, k)].is_zero() {
                    continue;
                }
                let q = self.a[(i, k)].div_floor(&self.a[(k, k)]);
                let c = T::zero() - q;
                self.add_row(i, k, &c);
                if !self.a[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in 0..self.a.cols() {
                if j == k || self.a[(k, j)].is_zero() {
                    continue;
                }
                let q = self.a[(k, j)].div_floor(&self.a[(k, k)]);
                let c = T::zero() - q;
                self.add_col(j, k, &c);
                if !self.a[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                return;
            }
        }
    }
}

/// Smith normal form with unimodular transforms and their inverses.
///
/// Deterministic for a fixed input: pivots are chosen by smallest nonzero
/// absolute value, then lowest index.
pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> Snf<T> {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: Matrix::identity(r),
        u_inv: Matrix::identity(r),
        v: Matrix::identity(c),
        v_inv: Matrix::identity(c),
    };

    let n = r.min(c);
    let mut k = 0;
    while k < n {
        if w.select_pivot(k).is_none() {
            break;
        }
        w.clear_cross(k);
        k += 1;
    }
    let rank = k;

    // Divisibility chain: whenever d_i does not divide d_{i+1}, fold the
    // pair with row/col operations and re-clear; each pass strictly
    // decreases d_i, so this terminates.
    loop {
        let mut fixed = true;
        for i in 0..rank.saturating_sub(1) {
            let di = w.a[(i, i)].clone();
            let dj = w.a[(i + 1, i + 1)].clone();
            if di.is_zero() || (dj.clone() % di.clone()).is_zero() {
                continue;
            }
            fixed = false;
            let one = T::one();
            w.add_row(i, i + 1, &one);
            w.clear_cross(i);
            w.clear_cross(i + 1);
        }
        if fixed {
            break;
        }
    }

    for i in 0..n {
        if w.a[(i, i)].is_negative() {
            w.negate_row(i);
        }
    }

    debug_assert!(w.a.is_diagonal());
    debug_assert_eq!(w.u.mul(m).mul(&w.v), w.a);
    debug_assert!(w.u.mul(&w.u_inv).is_identity());
    debug_assert!(w.v.mul(&w.v_inv).is_identity());

    Snf { d: w.a, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv }
}

/// One integer solution `x` of `a * x = b`, if any exists.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "rhs length must match row count");
    let snf = smith_normal_form(a);
    let w = snf.u.mul_vec(b);
    let n = a.rows().min(a.cols());
    let mut y = vec![T::zero(); a.cols()];
    for i in 0..a.rows() {
        let d = if i < n { snf.d[(i, i)].clone() } else { T::zero() };
        if d.is_zero() {
            if !w[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = w[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Does `v` lie in the lattice spanned by the columns of `b`?
pub fn lattice_contains<T: Scalar>(b: &Matrix<T>, v: &[T]) -> bool {
    solve_linear(b, v).is_some()
}
