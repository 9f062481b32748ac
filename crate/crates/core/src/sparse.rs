//! Sparse integral elimination for large boundary matrices.
//!
//! Boundary matrices of simplicial complexes start with all entries ±1 and
//! stay sparse, so Smith-form diagonals are computed by repeatedly
//! eliminating unit pivots (each contributes an invariant factor 1 via a
//! unimodular transform) and handing the — typically tiny — residual block
//! with no remaining unit entries to the dense arbitrary-precision engine.
//!
//! The elimination runs over `i64` with overflow checks and restarts over
//! `BigInt` if any intermediate value overflows.

use crate::matrix::{IntMatrix, SparseIntMatrix};
use crate::snf::snf_diagonal;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Scalar the elimination engine runs over. `inv` returns the multiplicative
/// inverse when the value is a pivot-eligible unit; checked ops signal
/// overflow by `None`.
trait ElimScalar: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    /// Zero in the same ring as `self` (carries the modulus for Z/p).
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl ElimScalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn zero_like(&self) -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn inv(&self) -> Option<Self> {
        match *self {
            1 => Some(1),
            -1 => Some(-1),
            _ => None,
        }
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ElimScalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Z/p element; p is prime so every nonzero value is a pivot.
#[derive(Clone, PartialEq)]
struct Fp {
    v: u64,
    p: u64,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Fp {
    fn new(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }
}

impl ElimScalar for Fp {
    fn from_i64(_v: i64) -> Self {
        unreachable!("Fp values carry their modulus and are built via Fp::new")
    }
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(Fp {
                v: pow_mod(self.v, self.p - 2, self.p),
                p: self.p,
            })
        }
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(Fp {
            v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64,
            p: self.p,
        })
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(Fp {
            v: (self.v + self.p - other.v) % self.p,
            p: self.p,
        })
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(self.v)
    }
}

struct Overflow;

struct Eliminator<S> {
    rows: Vec<HashMap<usize, S>>,
    col_support: Vec<HashSet<usize>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    /// (column support size, column); stale entries dropped lazily on pop.
    queue: BTreeSet<(usize, usize)>,
    pivots: usize,
}

impl<S: ElimScalar> Eliminator<S> {
    fn new(nrows: usize, ncols: usize, entries: impl Iterator<Item = (usize, usize, S)>) -> Self {
        let mut rows: Vec<HashMap<usize, S>> = vec![HashMap::new(); nrows];
        let mut col_support: Vec<HashSet<usize>> = vec![HashSet::new(); ncols];
        for (i, j, v) in entries {
            if v.is_zero() {
                continue;
            }
            rows[i].insert(j, v);
            col_support[j].insert(i);
        }
        let queue: BTreeSet<(usize, usize)> = col_support
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(j, s)| (s.len(), j))
            .collect();
        Eliminator {
            rows,
            col_support,
            row_alive: vec![true; nrows],
            col_alive: vec![true; ncols],
            queue,
            pivots: 0,
        }
    }

    /// Eliminates unit pivots until none remain. Columns with no unit entry
    /// leave the queue and re-enter only when a later elimination touches
    /// them, so the loop terminates with every remaining entry non-unit.
    fn run(&mut self) -> Result<(), Overflow> {
        while let Some(&(len, j)) = self.queue.iter().next() {
            self.queue.remove(&(len, j));
            if !self.col_alive[j] || self.col_support[j].len() != len || len == 0 {
                continue;
            }
            // Unit entry in column j whose row is shortest (least fill-in).
            let mut pick: Option<(usize, S)> = None;
            for &i in &self.col_support[j] {
                let v = &self.rows[i][&j];
                if let Some(inv) = v.inv() {
                    let better = match &pick {
                        None => true,
                        Some((bi, _)) => self.rows[i].len() < self.rows[*bi].len(),
                    };
                    if better {
                        pick = Some((i, inv));
                    }
                }
            }
            let Some((pi, pinv)) = pick else {
                continue; // no unit entry; leave deferred
            };
            self.eliminate(pi, j, pinv)?;
        }
        Ok(())
    }

    /// Clears column `j` with row operations off pivot row `pi`, then retires
    /// the pivot row and column. Since the cleared column meets only the
    /// pivot row afterwards, clearing the pivot row by column operations
    /// touches nothing else — retiring it is exact.
    fn eliminate(&mut self, pi: usize, j: usize, pinv: S) -> Result<(), Overflow> {
        let pivot_row: Vec<(usize, S)> = self.rows[pi].iter().map(|(l, v)| (*l, v.clone())).collect();
        let others: Vec<usize> = self.col_support[j].iter().copied().filter(|&k| k != pi).collect();
        let mut touched: HashSet<usize> = HashSet::new();
        for k in others {
            let m = self.rows[k][&j]
                .checked_mul(&pinv)
                .ok_or(Overflow)?;
            for (l, w) in &pivot_row {
                let delta = m.checked_mul(w).ok_or(Overflow)?;
                let new = match self.rows[k].get(l) {
                    Some(old) => old.checked_sub(&delta).ok_or(Overflow)?,
                    None => delta.zero_like().checked_sub(&delta).ok_or(Overflow)?,
                };
                if new.is_zero() {
                    if self.rows[k].remove(l).is_some() {
                        self.col_support[*l].remove(&k);
                        touched.insert(*l);
                    }
                } else {
                    if self.rows[k].insert(*l, new).is_none() {
                        self.col_support[*l].insert(k);
                    }
                    touched.insert(*l);
                }
            }
            debug_assert!(!self.rows[k].contains_key(&j));
        }
        for (l, _) in &pivot_row {
            self.col_support[*l].remove(&pi);
            touched.insert(*l);
        }
        self.rows[pi].clear();
        self.row_alive[pi] = false;
        self.col_alive[j] = false;
        touched.remove(&j);
        for l in touched {
            if self.col_alive[l] && !self.col_support[l].is_empty() {
                self.queue.insert((self.col_support[l].len(), l));
            }
        }
        self.pivots += 1;
        Ok(())
    }

    /// Remaining block as a dense matrix (empty when elimination was total).
    fn residual(&self) -> IntMatrix {
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&i| self.row_alive[i] && !self.rows[i].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.col_support.len())
            .filter(|&j| self.col_alive[j] && !self.col_support[j].is_empty())
            .collect();
        let col_index: HashMap<usize, usize> =
            live_cols.iter().enumerate().map(|(a, &j)| (j, a)).collect();
        let mut m = IntMatrix::zero(live_rows.len(), live_cols.len());
        for (a, &i) in live_rows.iter().enumerate() {
            for (j, v) in &self.rows[i] {
                m.set(a, col_index[j], v.to_big());
            }
        }
        m
    }
}

fn try_invariant_factors<S: ElimScalar>(m: &SparseIntMatrix) -> Result<Vec<BigInt>, Overflow> {
    let entries = (0..m.cols()).flat_map(|j| {
        m.column(j)
            .iter()
            .map(move |&(i, v)| (i, j, S::from_i64(v)))
    });
    let mut elim = Eliminator::new(m.rows(), m.cols(), entries);
    elim.run()?;
    let residual = elim.residual();
    let mut factors = vec![BigInt::one(); elim.pivots];
    factors.extend(
        snf_diagonal(&residual)
            .into_iter()
            .filter(|d| !num_traits::Zero::is_zero(d)),
    );
    Ok(factors)
}

/// Nonzero Smith-form diagonal entries of a sparse integer matrix, in
/// divisibility order. The count is the rank over Q; entries > 1 are the
/// torsion coefficients contributed by the matrix as a boundary operator.
pub fn invariant_factors_sparse(m: &SparseIntMatrix) -> Vec<BigInt> {
    match try_invariant_factors::<i64>(m) {
        Ok(f) => f,
        Err(Overflow) => try_invariant_factors::<BigInt>(m)
            .unwrap_or_else(|_| unreachable!("big-integer elimination cannot overflow")),
    }
}

/// Rank of the matrix over Q.
pub fn rank_sparse(m: &SparseIntMatrix) -> usize {
    invariant_factors_sparse(m).len()
}

/// Rank of the matrix over Z/p (p prime).
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    assert!(p >= 2, "modulus must be a prime >= 2");
    let entries = (0..m.cols()).flat_map(|j| {
        m.column(j)
            .iter()
            .map(move |&(i, v)| (i, j, Fp::new(v, p)))
    });
    let mut elim = Eliminator::new(m.rows(), m.cols(), entries);
    elim.run()
        .unwrap_or_else(|_| unreachable!("field elimination cannot overflow"));
    debug_assert!(elim.residual().is_zero(), "every nonzero Fp entry is a unit");
    elim.pivots
}
