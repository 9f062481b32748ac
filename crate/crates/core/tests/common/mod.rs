//! Shared helpers for the integration tests: deterministic random
//! generators and an independent linear-feasibility oracle based on
//! basic-solution enumeration rather than the simplex method.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tvlab_core::rational::ratio;
use tvlab_core::{IntMatrix, PointConfiguration, RatMatrix, Rational, Simplex, SimplicialComplex};

pub fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let num = rng.gen_range(-100..=100);
    let den = rng.gen_range(1..=max_den.max(1));
    ratio(num, den)
}

pub fn random_points(rng: &mut ChaCha8Rng, d: usize, n: usize) -> PointConfiguration {
    let points = (0..n)
        .map(|_| (0..d).map(|_| random_rational(rng, 1)).collect())
        .collect();
    PointConfiguration::new(d, points)
}

/// Random complex covering all of its 1..=max_v vertices.
pub fn random_complex(rng: &mut ChaCha8Rng, max_v: usize) -> SimplicialComplex {
    let vc = rng.gen_range(1..=max_v);
    let mut faces: Vec<Simplex> = (0..vc).map(|v| Simplex::new(vec![v])).collect();
    for mask in 1u32..(1 << vc) {
        if mask.count_ones() >= 2 && rng.gen_bool(0.35) {
            faces.push(Simplex::new(
                (0..vc).filter(|&v| mask >> v & 1 == 1).collect(),
            ));
        }
    }
    SimplicialComplex::from_faces(vc, faces)
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, max_size: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_size);
    let cols = rng.gen_range(1..=max_size);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

/// Decides feasibility of `a x = b` with `x_j >= 0` for flagged columns by
/// enumerating basic solutions: if the system is feasible at all, it is
/// feasible at a point whose positive support uses linearly independent
/// columns, so trying every independent column subset is a complete
/// decision procedure. Free variables are eliminated first, each consuming
/// one equation.
pub fn basic_solution_feasible(a: &RatMatrix, b: &[Rational], nonneg: &[bool]) -> bool {
    let n = a.cols();
    let mut aug: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            (0..n)
                .map(|j| a.get(i, j).clone())
                .chain(std::iter::once(b[i].clone()))
                .collect()
        })
        .collect();

    // Eliminate each free variable with a pivot row; that row is then
    // always satisfiable by back-substituting the free variable, so it
    // drops out of the feasibility question.
    let mut consumed = vec![false; aug.len()];
    for j in (0..n).filter(|&j| !nonneg[j]) {
        let Some(r) = (0..aug.len()).find(|&r| !consumed[r] && !aug[r][j].is_zero()) else {
            continue;
        };
        let pivot_row = aug[r].clone();
        let pivot = pivot_row[j].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[j].is_zero() {
                let f = &row[j] / &pivot;
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = p * &f;
                    *cell = &*cell - &delta;
                }
            }
        }
        consumed[r] = true;
    }

    // Remaining rows mention only the nonnegative variables.
    let cols: Vec<usize> = (0..n).filter(|&j| nonneg[j]).collect();
    let rows: Vec<Vec<Rational>> = aug
        .into_iter()
        .zip(&consumed)
        .filter(|(_, &used)| !used)
        .map(|(row, _)| {
            cols.iter()
                .map(|&j| row[j].clone())
                .chain(std::iter::once(row[n].clone()))
                .collect()
        })
        .collect();

    let k = cols.len();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize > rows.len() {
            continue;
        }
        let support: Vec<usize> = (0..k).filter(|&j| mask >> j & 1 == 1).collect();
        if let Some(x) = solve_on_support(&rows, k, &support) {
            if x.iter().all(|v| !v.is_negative()) {
                return true;
            }
        }
    }
    false
}

/// Solves the equations restricted to the given independent support
/// columns (all other variables zero). Returns the support values when the
/// columns are independent and the system is consistent.
fn solve_on_support(rows: &[Vec<Rational>], width: usize, support: &[usize]) -> Option<Vec<Rational>> {
    let m = rows.len();
    let k = support.len();
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| {
            support
                .iter()
                .map(|&j| row[j].clone())
                .chain(std::iter::once(row[width].clone()))
                .collect()
        })
        .collect();
    let mut pivot_of_col = vec![0usize; k];
    let mut next_row = 0usize;
    for col in 0..k {
        let r = (next_row..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(next_row, r);
        let pivot = aug[next_row][col].clone();
        for cell in aug[next_row].iter_mut() {
            *cell = &*cell / &pivot;
        }
        let pivot_row = aug[next_row].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != next_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = p * &f;
                    *cell = &*cell - &delta;
                }
            }
        }
        pivot_of_col[col] = next_row;
        next_row += 1;
    }
    if aug[next_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|col| aug[pivot_of_col[col]][k].clone()).collect())
}
