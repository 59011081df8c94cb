use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::Signed;

/// Integer scalars the exact linear algebra is generic over.
///
/// `From<i64>` gives cheap literals; everything else is the arithmetic the
/// algorithms need. Implemented for `i64`, `i128` and `BigInt`.
pub trait Scalar:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + From<i64> + Send + Sync + 'static
{
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for num_bigint::BigInt {}

/// Dense matrix with row-major storage.
///
/// Rows or columns may be zero; entry count always equals `rows * cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Build from closure; convenient for small literal matrices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    /// Build from i64 rows; panics unless all rows have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix::from_fn(r, c, |i, j| T::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| T::zero() - self[(i, j)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * c.clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let (a, b) = (i / other.rows, i % other.rows);
            let (c, d) = (j / other.cols, j % other.cols);
            self[(a, c)].clone() * other[(b, d)].clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row(i) += c * row(j)
    pub fn add_row_multiple(&mut self, i: usize, j: usize, c: &T) {
        assert_ne!(i, j);
        for k in 0..self.cols {
            let v = self[(j, k)].clone() * c.clone();
            self[(i, k)] = self[(i, k)].clone() + v;
        }
    }

    /// col(i) += c * col(j)
    pub fn add_col_multiple(&mut self, i: usize, j: usize, c: &T) {
        assert_ne!(i, j);
        for k in 0..self.rows {
            let v = self[(k, j)].clone() * c.clone();
            self[(k, i)] = self[(k, i)].clone() + v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            self[(i, k)] = T::zero() - self[(i, k)].clone();
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            self[(k, j)] = T::zero() - self[(k, j)].clone();
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact; square only.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let pivot = (k + 1..n).find(|&i| !a[(i, k)].is_zero());
                match pivot {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = T::zero() - sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(k, k)].clone() * a[(i, j)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    // exact by the Bareiss identity
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Rank over the rationals, via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (r, c) = (a.rows, a.cols);
        let mut rank = 0;
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let pivot = (row..r).find(|&i| !a[(i, col)].is_zero());
            let Some(p) = pivot else { continue };
            a.swap_rows(p, row);
            for i in row + 1..r {
                if a[(i, col)].is_zero() {
                    continue;
                }
                // cross-multiplication keeps entries integral
                let (pv, iv) = (a[(row, col)].clone(), a[(i, col)].clone());
                for j in col..c {
                    a[(i, j)] = a[(i, j)].clone() * pv.clone() - a[(row, j)].clone() * iv.clone();
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a: Matrix<i64> = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b: Matrix<i64> = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), Matrix::from_rows(&[vec![1, 3], vec![2, 4]]));
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        let a: Matrix<i64> = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(a.det(), 6);
        let b: Matrix<i64> = Matrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(b.det(), -8);
        let c: Matrix<i64> =
            Matrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(c.det(), -3);
        let singular: Matrix<i64> =
            Matrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(singular.det(), 0);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let a: Matrix<i64> = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::<i64>::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::<i64>::identity(5).rank(), 5);
    }

    #[test]
    fn kronecker_shape_and_entries() {
        let a: Matrix<i64> = Matrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        let b: Matrix<i64> = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k[(0, 1)], 1);
        assert_eq!(k[(2, 3)], -1);
        assert_eq!(k[(3, 2)], -1);
    }
}
