//! Integer matrices: dense arbitrary-precision storage for the Smith normal
//! form engine and a sparse column-major form for boundary operators.
//!
//! Both forms export and import the plain triplet text format
//! (`triplet v1 <rows> <cols>` header, then one `row col value` line per
//! nonzero, in row-major order). Rational matrices reuse the same format with
//! `num/den` entries (see [`crate::lp::RatMatrix`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Write as _;
use thiserror::Error;

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Error from parsing the triplet text format. `line` is 1-based.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct MatrixParseError {
    pub line: usize,
    pub msg: String,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Diagonal entries, length min(rows, cols).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &x[j])
                    .fold(BigInt::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn to_sparse(&self) -> SparseIntMatrix {
        let mut s = SparseIntMatrix::new(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    let small: i64 = v.try_into().expect("entry exceeds i64 in to_sparse");
                    s.push(i, j, small);
                }
            }
        }
        s
    }

    /// Triplet text: header `triplet v1 <rows> <cols>`, then `row col value`
    /// per nonzero in row-major order.
    pub fn to_triplet_text(&self) -> String {
        let mut out = format!("triplet v1 {} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    writeln!(out, "{i} {j} {v}").unwrap();
                }
            }
        }
        out
    }

    pub fn from_triplet_text(text: &str) -> Result<Self, MatrixParseError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(MatrixParseError {
            line: 1,
            msg: "missing header".to_string(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "triplet" || parts[1] != "v1" {
            return Err(MatrixParseError {
                line: 1,
                msg: "expected header `triplet v1 <rows> <cols>`".to_string(),
            });
        }
        let rows: usize = parts[2].parse().map_err(|_| MatrixParseError {
            line: 1,
            msg: format!("bad row count `{}`", parts[2]),
        })?;
        let cols: usize = parts[3].parse().map_err(|_| MatrixParseError {
            line: 1,
            msg: format!("bad column count `{}`", parts[3]),
        })?;
        let mut m = IntMatrix::zero(rows, cols);
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(MatrixParseError {
                    line: lineno,
                    msg: "expected `row col value`".to_string(),
                });
            }
            let i: usize = fields[0].parse().map_err(|_| MatrixParseError {
                line: lineno,
                msg: format!("bad row index `{}`", fields[0]),
            })?;
            let j: usize = fields[1].parse().map_err(|_| MatrixParseError {
                line: lineno,
                msg: format!("bad column index `{}`", fields[1]),
            })?;
            let v: BigInt = fields[2].parse().map_err(|_| MatrixParseError {
                line: lineno,
                msg: format!("bad value `{}`", fields[2]),
            })?;
            if i >= rows || j >= cols {
                return Err(MatrixParseError {
                    line: lineno,
                    msg: format!("index ({i},{j}) out of bounds for {rows}x{cols}"),
                });
            }
            m.set(i, j, v);
        }
        Ok(m)
    }
}

/// Sparse integer matrix, column-major, with machine-word entries.
///
/// Boundary operators of the complexes built here have entries ±1, so i64
/// storage is lossless at construction; the elimination engine escalates to
/// arbitrary precision if intermediate growth ever overflows (see
/// [`crate::sparse`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    /// Per column: (row, value) pairs sorted by row, values nonzero.
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    /// Appends a nonzero entry; rows within a column must arrive in
    /// increasing order.
    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "entry out of bounds");
        assert!(value != 0, "zero entry pushed");
        let column = &mut self.columns[col];
        if let Some(&(last, _)) = column.last() {
            assert!(last < row, "rows must increase within a column");
        }
        column.push((row, value));
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Fraction of entries that are nonzero (0 for an empty matrix).
    pub fn fill_ratio(&self) -> f64 {
        let cells = self.rows * self.cols;
        if cells == 0 {
            0.0
        } else {
            self.nnz() as f64 / cells as f64
        }
    }

    /// Sparse product self · other (used for boundary-squared checks).
    pub fn mul_sparse(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = SparseIntMatrix::new(self.rows, other.cols);
        let mut acc: Vec<i64> = vec![0; self.rows];
        for j in 0..other.cols {
            let mut touched: Vec<usize> = Vec::new();
            for &(k, bv) in &other.columns[j] {
                for &(i, av) in &self.columns[k] {
                    if acc[i] == 0 {
                        touched.push(i);
                    }
                    acc[i] = acc[i]
                        .checked_add(av.checked_mul(bv).expect("overflow in sparse product"))
                        .expect("overflow in sparse product");
                }
            }
            touched.sort_unstable();
            for &i in &touched {
                if acc[i] != 0 {
                    out.push(i, j, acc[i]);
                }
                acc[i] = 0;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Applies the matrix to an integer vector (used for boundary of chains).
    pub fn mul_vec_big(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for &(i, v) in &self.columns[j] {
                out[i] += BigInt::from(v) * xj;
            }
        }
        out
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }
}
