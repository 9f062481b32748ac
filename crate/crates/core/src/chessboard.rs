//! Chessboard complexes Δ_{m,n} and their standard group actions.

use crate::action::GroupAction;
use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use itertools::Itertools;

/// Vertex label of cell (row i, column j) on an m×n board, row-major.
fn cell(i: usize, j: usize, n: usize) -> usize {
    i * n + j
}

/// The chessboard complex Δ_{m,n}: vertices are the cells of an m×n board,
/// faces are non-attacking rook placements (pairwise distinct rows and
/// columns). Every maximal placement has min(m,n) rooks, so the facet count
/// is max!/(max−min)!. Vertex labels record the 1-based (row, column) pair.
pub fn chessboard(m: usize, n: usize) -> SimplicialComplex {
    assert!(m >= 1 && n >= 1, "board must be nonempty");
    let size = m.min(n);
    let mut facets = Vec::new();
    if m <= n {
        for cols in (0..n).permutations(size) {
            facets.push(Simplex::new(
                cols.iter().enumerate().map(|(i, &j)| cell(i, j, n)).collect(),
            ));
        }
    } else {
        for rows in (0..m).permutations(size) {
            facets.push(Simplex::new(
                rows.iter().enumerate().map(|(j, &i)| cell(i, j, n)).collect(),
            ));
        }
    }
    let labels = (0..m)
        .cartesian_product(0..n)
        .map(|(i, j)| format!("r{}c{}", i + 1, j + 1))
        .collect();
    SimplicialComplex::from_maximal_faces(m * n, facets).with_labels(labels)
}

/// The standard actions on Δ_{m,n}.
pub struct ChessboardActions {
    /// Z/n rotating the columns: (i, j) ↦ (i, j+1 mod n).
    pub cyclic_columns: GroupAction,
    /// Sym_m permuting the rows (adjacent-transposition generators).
    pub symmetric_rows: GroupAction,
    /// Sym_n permuting the columns (adjacent-transposition generators).
    pub symmetric_columns: GroupAction,
}

pub fn chessboard_actions(m: usize, n: usize) -> ChessboardActions {
    let vc = m * n;
    let rotate: Vec<usize> = (0..vc)
        .map(|v| {
            let (i, j) = (v / n, v % n);
            cell(i, (j + 1) % n, n)
        })
        .collect();
    let row_swap = |a: usize| -> Vec<usize> {
        (0..vc)
            .map(|v| {
                let (i, j) = (v / n, v % n);
                let i2 = if i == a { a + 1 } else if i == a + 1 { a } else { i };
                cell(i2, j, n)
            })
            .collect()
    };
    let col_swap = |a: usize| -> Vec<usize> {
        (0..vc)
            .map(|v| {
                let (i, j) = (v / n, v % n);
                let j2 = if j == a { a + 1 } else if j == a + 1 { a } else { j };
                cell(i, j2, n)
            })
            .collect()
    };
    ChessboardActions {
        cyclic_columns: GroupAction::cyclic(n, rotate),
        symmetric_rows: GroupAction::symmetric(m, (0..m.saturating_sub(1)).map(row_swap).collect()),
        symmetric_columns: GroupAction::symmetric(
            n,
            (0..n.saturating_sub(1)).map(col_swap).collect(),
        ),
    }
}
