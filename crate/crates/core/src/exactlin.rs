//! Dense exact linear algebra over the rationals.
//!
//! Provides the `Scalar` type (arbitrary-precision reduced fractions) and a
//! dense row-major `Matrix` with rank, kernel basis, column-space membership
//! and linear solving via exact Gauss-Jordan elimination. Pivoting is
//! deterministic (first nonzero entry, scanning top-down), so kernel bases
//! and particular solutions are reproducible across runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar: reduced numerator/denominator pair with positive
/// denominator. All field operations are exact.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parse `"p/q"` or a plain integer string into a `Scalar`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ExactLinError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ExactLinError::BadRational(text.to_string()))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ExactLinError::BadRational(text.to_string()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ExactLinError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(n, d))
}

/// Render a scalar as `"p"` or `"p/q"`, matching the input format.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Build from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer rows; convenient for fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Stack column vectors into a matrix. All columns must share a length.
    pub fn from_columns(cols: &[Vec<Scalar>]) -> Matrix {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// columns in order. First-nonzero pivoting keeps the result canonical.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j) - &factor * self.get(row, j);
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space `{v : self * v = 0}`. The basis has
    /// `cols - rank` vectors, each with a unit entry in its free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().enumerate();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, col) in &mut pivot_iter {
            pivot_of_col[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b` exactly. Returns `Ok(None)` when `b` is outside
    /// the column space, and the reduced-echelon particular solution (free
    /// variables set to zero) otherwise.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, ExactLinError> {
        if b.len() != self.rows {
            return Err(ExactLinError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let solved = self.solve_columns(&Matrix::from_columns(&[b.to_vec()]));
        Ok(solved.map(|m| m.column(0)))
    }

    /// Solve `self * X = rhs` column by column with a single elimination of
    /// the augmented matrix. Returns `None` if any column is inconsistent.
    pub fn solve_columns(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows(), "rhs row count mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols());
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols() {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let pivots = aug.rref_in_place();
        // A pivot in the rhs block means some column is inconsistent.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let rank = pivots.len();
        // Rows below the rank are zero in the coefficient block; any nonzero
        // rhs entry there certifies inconsistency.
        for i in rank..self.rows {
            for j in 0..rhs.cols() {
                if !aug.get(i, self.cols + j).is_zero() {
                    return None;
                }
            }
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols());
        for (row, &col) in pivots.iter().enumerate() {
            for j in 0..rhs.cols() {
                x.set(col, j, aug.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let inv = self.solve_columns(&Matrix::identity(self.rows))?;
        Some(inv)
    }

    /// Largest absolute numerator/denominator; handy for diagnostics.
    pub fn entry_magnitude(&self) -> BigInt {
        self.entries
            .iter()
            .map(|x| x.numer().abs().max(x.denom().abs()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent rank oracle: maximum size of a nonvanishing minor, by
    // exhaustive enumeration. Only usable for tiny matrices.
    fn rank_by_minors(m: &Matrix) -> usize {
        fn det(m: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
            if rows.is_empty() {
                return Scalar::one();
            }
            let mut acc = Scalar::zero();
            for (k, &c) in cols.iter().enumerate() {
                let sub_rows = &rows[1..];
                let sub_cols: Vec<usize> =
                    cols.iter().copied().filter(|&x| x != c).collect();
                let term = m.get(rows[0], c) * det(m, sub_rows, &sub_cols);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let n = m.rows().min(m.cols());
        for size in (1..=n).rev() {
            let row_sets = subsets(m.rows(), size);
            let col_sets = subsets(m.cols(), size);
            for rs in &row_sets {
                for cs in &col_sets {
                    if !det(m, rs, cs).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
    }

    #[test]
    fn rank_of_proportional_rows() {
        // Minor oracle: every 2x2 minor of [[1,2],[2,4]] vanishes, one 1x1
        // minor does not, so the rank is 1.
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank_by_minors(&m), 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let basis = Matrix::zeros(2, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn kernel_vectors_annihilated() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(2);
        let b = vec![int(5), int(-3)];
        assert_eq!(m.solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs() {
        let m = Matrix::zeros(2, 2);
        assert_eq!(m.solve(&[int(1), int(0)]).unwrap(), None);
    }

    #[test]
    fn solve_upper_triangular() {
        // Back substitution by hand: x2 = 1, x1 = 3 - x2 = 2.
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&[int(3), int(1)]).unwrap().unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
    }

    #[test]
    fn solve_dimension_mismatch_is_error() {
        let m = Matrix::identity(2);
        assert!(matches!(
            m.solve(&[int(1)]),
            Err(ExactLinError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn parse_and_format_scalars() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert_eq!(format_scalar(&frac(-3, 9)), "-1/3");
        assert!(matches!(
            parse_scalar("1/0"),
            Err(ExactLinError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_scalar("x"),
            Err(ExactLinError::BadRational(_))
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |vals| Matrix {
                rows: r,
                cols: c,
                entries: vals.into_iter().map(int).collect(),
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_minor_oracle(m in small_matrix()) {
            prop_assert_eq!(m.rank(), rank_by_minors(&m));
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_annihilates(m in small_matrix()) {
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solve_consistent_or_rank_jump(m in small_matrix(), b in proptest::collection::vec(-3i64..=3, 1..=4)) {
            prop_assume!(b.len() == m.rows());
            let b: Vec<Scalar> = b.into_iter().map(int).collect();
            match m.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
                None => {
                    let mut aug_cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| m.column(j)).collect();
                    aug_cols.push(b);
                    let aug = Matrix::from_columns(&aug_cols);
                    prop_assert!(aug.rank() > m.rank());
                }
            }
        }
    }
}
