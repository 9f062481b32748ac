//! Exact rational linear algebra for geometric certificates: null-space
//! bases and a phase-1 simplex feasibility solver.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense matrix over Q, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }
}

/// Basis of the exact null space of A. Rows are first scaled to integers,
/// then reduced by fraction-free (Bareiss) elimination; back-substitution
/// over Q assigns each free column a basis vector with that coordinate 1.
pub fn kernel_basis(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let (m, n) = (a.rows(), a.cols());
    // Integer row representatives of the same row space.
    let mut rows: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..n {
                let d = a.get(i, j).denom();
                lcm = num_integer::lcm(lcm, d.clone());
            }
            (0..n)
                .map(|j| {
                    let e = a.get(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();

    // Bareiss echelon: after step k the divisions by the previous pivot are
    // exact, keeping entries integral with controlled growth.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..n {
                let v = (&rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j]) / &prev;
                rows[i][j] = v;
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        pivot_cols.push(c);
        r += 1;
        if r == m {
            break;
        }
    }

    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &c in &pivot_cols {
            s[c] = true;
        }
        s
    };
    let free_cols: Vec<usize> = (0..n).filter(|&c| !pivot_set[c]).collect();

    free_cols
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &p) in pivot_cols.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in p + 1..n {
                    if !rows[i][j].is_zero() {
                        acc += Rational::from(rows[i][j].clone()) * &v[j];
                    }
                }
                v[p] = -acc / Rational::from(rows[i][p].clone());
            }
            v
        })
        .collect()
}

/// Exact linear feasibility: find y with A·y = b and y_i ≥ 0 for every
/// constrained index, or prove there is none.
#[derive(Clone, Debug)]
pub struct FeasibilityProblem {
    pub a: RatMatrix,
    pub b: Vec<Rational>,
    /// One flag per variable; false marks a free variable.
    pub nonnegative: Vec<bool>,
}

impl FeasibilityProblem {
    pub fn new(a: RatMatrix, b: Vec<Rational>, nonnegative: Vec<bool>) -> Self {
        assert_eq!(a.rows(), b.len(), "one right-hand side per row");
        assert_eq!(a.cols(), nonnegative.len(), "one sign flag per variable");
        FeasibilityProblem { a, b, nonnegative }
    }
}

/// Phase-1 simplex with Bland's rule over exact rationals. Returns a point
/// satisfying every constraint identically, or None on proven infeasibility
/// (positive phase-1 optimum). Free variables are split into differences of
/// nonnegative pairs internally.
pub fn feasible(p: &FeasibilityProblem) -> Option<Vec<Rational>> {
    let m = p.a.rows();
    let n = p.a.cols();
    assert_eq!(p.b.len(), m);
    assert_eq!(p.nonnegative.len(), n);

    // Columns of the standard-form program: one per nonnegative variable,
    // two (positive and negative part) per free variable.
    let mut col_of_var: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut split = 0usize;
    for &nonneg in &p.nonnegative {
        if nonneg {
            col_of_var.push((col_of_var.len() + split, None));
        } else {
            let base = col_of_var.len() + split;
            col_of_var.push((base, Some(base + 1)));
            split += 1;
        }
    }
    let real_cols = n + split;
    let total = real_cols + m; // plus one artificial per row

    // Tableau rows [A' | I | b] with b scaled nonnegative.
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); total + 1];
            for (var, &(cp, cn)) in col_of_var.iter().enumerate() {
                let v = p.a.get(i, var).clone();
                row[cp] = v.clone();
                if let Some(cn) = cn {
                    row[cn] = -v;
                }
            }
            row[total] = p.b[i].clone();
            if row[total].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            // The artificial joins after sign normalization so the initial
            // basic solution equals the (nonnegative) right-hand side.
            row[real_cols + i] = Rational::one();
            row
        })
        .collect();

    // Phase-1 objective: minimize the artificial sum. Reduced-cost row
    // starts at −(column sums) for real columns, 0 on artificials.
    let mut z: Vec<Rational> = (0..=total)
        .map(|j| {
            if (real_cols..total).contains(&j) {
                Rational::zero()
            } else {
                -(0..m).fold(Rational::zero(), |acc, i| acc + &t[i][j])
            }
        })
        .collect();
    let mut basis: Vec<usize> = (real_cols..total).collect();

    // Bland: entering column = smallest index with negative reduced cost.
    while let Some(e) = (0..total).find(|&j| z[j].is_negative()) {
        // Ratio test; ties resolved by the smallest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][total] / &t[i][e];
                match &leave {
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                    None => leave = Some((i, ratio)),
                }
            }
        }
        let (r, _) = leave.expect("phase-1 objective is bounded below");
        // Pivot at (r, e).
        let pv = t[r][e].clone();
        for v in t[r].iter_mut() {
            *v = v.clone() / &pv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[e].is_zero() {
                let f = row[e].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &f * p;
                    *cell -= delta;
                }
            }
        }
        if !z[e].is_zero() {
            let f = z[e].clone();
            for (cell, p) in z.iter_mut().zip(&pivot_row) {
                let delta = &f * p;
                *cell -= delta;
            }
        }
        basis[r] = e;
    }

    // Phase-1 value = −z[rhs]; positive artificial mass means infeasible.
    if !z[total].is_zero() {
        return None;
    }

    let mut x = vec![Rational::zero(); total];
    for (i, &bj) in basis.iter().enumerate() {
        x[bj] = t[i][total].clone();
    }
    let y: Vec<Rational> = col_of_var
        .iter()
        .map(|&(cp, cn)| match cn {
            Some(cn) => &x[cp] - &x[cn],
            None => x[cp].clone(),
        })
        .collect();

    // Exact substitution check: a returned point must satisfy everything
    // identically.
    let ay = p.a.mul_vec(&y);
    assert!(
        ay.iter().zip(&p.b).all(|(l, r)| l == r),
        "feasible point fails substitution"
    );
    assert!(
        y.iter()
            .zip(&p.nonnegative)
            .all(|(v, &nn)| !nn || !v.is_negative()),
        "feasible point violates a sign constraint"
    );
    Some(y)
}
