//! Smith normal form over the integers with full transform tracking.
//!
//! `smith_normal_form` returns U·M·V = D with D diagonal, d_1 | d_2 | … ≥ 0
//! and U, V unimodular; inverses of both transforms are built alongside, so
//! unimodularity is witnessed constructively. Pivoting always selects a
//! smallest-nonzero-absolute-value entry of the remaining block. All
//! arithmetic is arbitrary precision.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of [`smith_normal_form`]: `u * m * v == d`, `u * u_inv == I`,
/// `v * v_inv == I`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Transforms {
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

fn identity_vvec(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Core elimination; mutates `a` into Smith form. Row/column operations are
/// mirrored into the transforms when present (U on the left as row
/// operations, V on the right as column operations, with inverses maintained
/// by the corresponding inverse operations on the other side).
fn snf_engine(a: &mut [Vec<BigInt>], mut tr: Option<&mut Transforms>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };

    let swap_rows = |a: &mut [Vec<BigInt>], tr: &mut Option<&mut Transforms>, i: usize, k: usize| {
        a.swap(i, k);
        if let Some(t) = tr.as_deref_mut() {
            t.u.swap(i, k);
            for row in t.u_inv.iter_mut() {
                row.swap(i, k);
            }
        }
    };
    let swap_cols = |a: &mut [Vec<BigInt>], tr: &mut Option<&mut Transforms>, j: usize, l: usize| {
        for row in a.iter_mut() {
            row.swap(j, l);
        }
        if let Some(t) = tr.as_deref_mut() {
            for row in t.v.iter_mut() {
                row.swap(j, l);
            }
            t.v_inv.swap(j, l);
        }
    };
    // row i += q * row k
    #[allow(clippy::needless_range_loop)] // rows i and k alias within `a`
    let add_row = |a: &mut [Vec<BigInt>],
                   tr: &mut Option<&mut Transforms>,
                   i: usize,
                   k: usize,
                   q: &BigInt| {
        for j in 0..cols {
            let delta = q * &a[k][j];
            a[i][j] += delta;
        }
        if let Some(t) = tr.as_deref_mut() {
            for j in 0..rows {
                let delta = q * &t.u[k][j];
                t.u[i][j] += delta;
            }
            for row in t.u_inv.iter_mut() {
                let delta = q * &row[i];
                row[k] -= delta;
            }
        }
    };
    // col j += q * col l
    let add_col = |a: &mut [Vec<BigInt>],
                   tr: &mut Option<&mut Transforms>,
                   j: usize,
                   l: usize,
                   q: &BigInt| {
        for row in a.iter_mut() {
            let delta = q * &row[l];
            row[j] += delta;
        }
        if let Some(t) = tr.as_deref_mut() {
            for row in t.v.iter_mut() {
                let delta = q * &row[l];
                row[j] += delta;
            }
            for i in 0..cols {
                let delta = q * &t.v_inv[j][i];
                t.v_inv[l][i] -= delta;
            }
        }
    };
    let negate_row = |a: &mut [Vec<BigInt>], tr: &mut Option<&mut Transforms>, i: usize| {
        for v in a[i].iter_mut() {
            *v = -std::mem::take(v);
        }
        if let Some(t) = tr.as_deref_mut() {
            for v in t.u[i].iter_mut() {
                *v = -std::mem::take(v);
            }
            for row in t.u_inv.iter_mut() {
                row[i] = -std::mem::take(&mut row[i]);
            }
        }
    };

    for t in 0..rows.min(cols) {
        'pivot: loop {
            // Smallest |nonzero| entry of the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if a[i][j].abs() < a[bi][bj].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return; // remaining block is zero
            };
            if pi != t {
                swap_rows(a, &mut tr, t, pi);
            }
            if pj != t {
                swap_cols(a, &mut tr, t, pj);
            }
            if a[t][t].is_negative() {
                negate_row(a, &mut tr, t);
            }

            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = -a[i][t].div_floor(&a[t][t]);
                    add_row(a, &mut tr, i, t, &q);
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = -a[t][j].div_floor(&a[t][t]);
                    add_col(a, &mut tr, j, t, &q);
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                continue 'pivot; // a strictly smaller remainder exists; re-pivot
            }
            // Divisibility repair: d_t must divide the whole remaining block.
            for i in t + 1..rows {
                if a[i].iter().skip(t + 1).any(|x| !x.mod_floor(&a[t][t]).is_zero()) {
                    let one = BigInt::from(1);
                    add_row(a, &mut tr, t, i, &one);
                    continue 'pivot;
                }
            }
            break 'pivot;
        }
    }
}

/// Smith normal form with transforms. Postconditions (all exact):
/// `u·m·v = d`; d diagonal with nonzero entries first, each dividing the
/// next, all nonnegative; `u·u_inv = I`; `v·v_inv = I`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut tr = Transforms {
        u: identity_vvec(rows),
        u_inv: identity_vvec(rows),
        v: identity_vvec(cols),
        v_inv: identity_vvec(cols),
    };
    snf_engine(&mut a, Some(&mut tr));

    let to_matrix = |rows_data: &[Vec<BigInt>], r: usize, c: usize| {
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows_data.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    };
    SmithDecomposition {
        d: to_matrix(&a, rows, cols),
        u: to_matrix(&tr.u, rows, rows),
        u_inv: to_matrix(&tr.u_inv, rows, rows),
        v: to_matrix(&tr.v, cols, cols),
        v_inv: to_matrix(&tr.v_inv, cols, cols),
    }
}

/// Diagonal of the Smith form only, skipping transform bookkeeping.
pub fn snf_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    snf_engine(&mut a, None);
    (0..rows.min(cols)).map(|i| a[i][i].clone()).collect()
}

/// Basis of the integer kernel lattice of `m` (columns of V past the rank).
/// The basis is saturated: any integer solution of m·x = 0 is an integer
/// combination of the returned vectors.
pub fn kernel_lattice_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let dec = smith_normal_form(m);
    let rank = dec.rank();
    (rank..m.cols())
        .map(|j| (0..m.cols()).map(|i| dec.v.get(i, j).clone()).collect())
        .collect()
}

/// Solves m·x = b over the integers, or None when no integer solution exists.
pub fn integer_solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch");
    let dec = smith_normal_form(m);
    let t = dec.u.mul_vec(b);
    let mut x = vec![BigInt::zero(); m.cols()];
    let diag = dec.d.diagonal();
    for (i, ti) in t.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !ti.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ti.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            x[i] = q;
        }
    }
    Some(dec.v.mul_vec(&x))
}
