//! Degrees of simplicial maps relative to chosen fundamental cycles.
//!
//! All chains here index into the canonical chain basis of their complex
//! (q-faces in lexicographic order); orientation is the sorted-vertex-order
//! orientation throughout.

use crate::chain::{Chain, SimplicialChains};
use crate::chessboard::chessboard;
use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use crate::snf::{integer_solve, kernel_lattice_basis, smith_normal_form};
use crate::sparse::rank_sparse;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegreeError {
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("reference cycle does not generate infinite cyclic top homology: {0}")]
    NotAGenerator(String),
    #[error("no integer solution: {0}")]
    NoIntegerSolution(String),
}

/// Sign of the permutation sorting `values` ascending; None when two entries
/// are equal (a degenerate image).
fn sort_sign(values: &[usize]) -> Option<i64> {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return None;
            }
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Orientation class of the (n−1)×n chessboard complex: the degree-(n−2)
/// chain Σ_π sgn(π)·⟨(0,π(0)),…,(n−2,π(n−2))⟩ over all permutations π of
/// the n columns. Its boundary vanishes: the two facets sharing a given
/// (n−3)-face come from permutations differing by a transposition.
pub fn fundamental_cycle_chessboard(n: usize) -> Chain {
    assert!(n >= 3, "boards below 3 columns have no orientation class");
    let board = chessboard(n - 1, n);
    let chains = SimplicialChains::new(&board);
    let q = n - 2;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut entries: Vec<(usize, BigInt)> = Vec::new();
    // Lexicographic permutation enumeration; sign recomputed per leaf.
    fn visit(k: usize, n: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == n {
            out.push(perm.clone());
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            visit(k + 1, n, perm, out);
            perm.swap(k, i);
        }
    }
    let mut perms = Vec::new();
    visit(0, n, &mut perm, &mut perms);
    for p in perms {
        let sign = sort_sign(&p).expect("permutations have no repeats");
        let cell = Simplex::new((0..n - 1).map(|i| i * n + p[i]).collect());
        let idx = chains.index_of(q, &cell).expect("facet of the board");
        entries.push((idx, BigInt::from(sign)));
    }
    // Each facet occurs for exactly one permutation (the missing column is
    // determined), so entries are distinct.
    Chain::from_entries(q, entries)
}

/// Orientation class of the boundary of the n-simplex: Σ_k (−1)^k ⟨0,…,k̂,…,n⟩.
pub fn simplex_boundary_cycle(n: usize) -> Chain {
    assert!(n >= 1, "the boundary of a point is empty");
    let sphere = SimplicialComplex::simplex_boundary(n);
    let chains = SimplicialChains::new(&sphere);
    let entries = (0..=n).map(|k| {
        let verts: Vec<usize> = (0..=n).filter(|&v| v != k).collect();
        let idx = chains
            .index_of(n - 1, &Simplex::new(verts))
            .expect("facet of the boundary sphere");
        (idx, BigInt::from(if k % 2 == 0 { 1i64 } else { -1 }))
    });
    Chain::from_entries(n - 1, entries)
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// The integer m with f_#(zk) homologous to m·zl in the top homology of l.
///
/// The vertex map f must be simplicial (images of faces of k are faces of l,
/// possibly degenerate); zk and zl must be cycles and zl must generate an
/// infinite cyclic top homology group of l.
pub fn simplicial_map_degree(
    f: &[usize],
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    zk: &Chain,
    zl: &Chain,
) -> Result<i64, DegreeError> {
    assert_eq!(f.len(), k.vertex_count(), "one image per vertex of the source");
    if zk.degree != zl.degree {
        return Err(DegreeError::NoIntegerSolution(format!(
            "cycle degrees differ: {} vs {}",
            zk.degree, zl.degree
        )));
    }
    let q = zk.degree;
    let ck = SimplicialChains::new(k);
    let cl = SimplicialChains::new(l);
    if !ck.complex.boundary_of(zk).is_zero() {
        return Err(DegreeError::NotACycle("source chain has nonzero boundary".into()));
    }
    if !cl.complex.boundary_of(zl).is_zero() {
        return Err(DegreeError::NotACycle("reference chain has nonzero boundary".into()));
    }
    if zl.is_zero() {
        return Err(DegreeError::NotAGenerator("reference cycle is zero".into()));
    }

    // Push zk forward; degenerate images vanish, the rest reorient by the
    // sorting sign.
    let size_l = cl.complex.size(q);
    let mut pushed = vec![BigInt::zero(); size_l];
    for (&cell, coeff) in zk.coeffs.iter() {
        let src = &ck.bases[q][cell];
        let image: Vec<usize> = src.vertices().iter().map(|&v| f[v]).collect();
        let Some(sign) = sort_sign(&image) else { continue };
        let img = Simplex::new(image);
        let Some(idx) = cl.index_of(q, &img) else {
            return Err(DegreeError::NoIntegerSolution(format!(
                "the map is not simplicial into the target: image {:?} is not a face",
                img.vertices()
            )));
        };
        pushed[idx] += coeff * BigInt::from(sign);
    }

    let zl_dense = zl.to_dense(size_l);

    if cl.complex.size(q + 1) == 0 {
        // No relations above: top homology is the kernel of ∂_q itself.
        let bq = cl.complex.boundary(q);
        let nullity = size_l - rank_sparse(&bq);
        if nullity != 1 {
            return Err(DegreeError::NotAGenerator(format!(
                "top kernel has rank {nullity}, not 1"
            )));
        }
        if !content(&zl_dense).is_one() {
            return Err(DegreeError::NotAGenerator(
                "reference cycle is a proper multiple of the kernel generator".into(),
            ));
        }
        // pushed and zl both lie in a rank-1 lattice: exact componentwise ratio.
        let pivot = zl_dense.iter().position(|c| !c.is_zero()).expect("nonzero cycle");
        let (m, rem) = pushed[pivot].div_rem(&zl_dense[pivot]);
        if !rem.is_zero() {
            return Err(DegreeError::NoIntegerSolution(
                "pushforward is not an integer multiple of the reference cycle".into(),
            ));
        }
        for i in 0..size_l {
            if pushed[i] != &m * &zl_dense[i] {
                return Err(DegreeError::NoIntegerSolution(
                    "pushforward is not proportional to the reference cycle".into(),
                ));
            }
        }
        return i64::try_from(&m)
            .map_err(|_| DegreeError::NoIntegerSolution("degree exceeds the machine range".into()));
    }

    // General case: work in kernel coordinates of ∂_q, quotient by im ∂_{q+1}.
    let kernel_vectors = kernel_lattice_basis(&cl.complex.boundary(q).to_dense());
    let kr = kernel_vectors.len();
    let mut kernel = crate::matrix::IntMatrix::zero(size_l, kr);
    for (j, col) in kernel_vectors.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            kernel.set(i, j, v.clone());
        }
    }
    let coords = |v: &[BigInt]| -> Option<Vec<BigInt>> { integer_solve(&kernel, v) };
    let Some(zl_coords) = coords(&zl_dense) else {
        return Err(DegreeError::NotACycle("reference chain is outside the cycle lattice".into()));
    };
    let Some(pushed_coords) = coords(&pushed) else {
        return Err(DegreeError::NoIntegerSolution(
            "pushforward is not a cycle of the target".into(),
        ));
    };

    let bq1 = cl.complex.boundary(q + 1).to_dense();
    let mut relation_cols: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..bq1.cols() {
        let col: Vec<BigInt> = (0..bq1.rows()).map(|i| bq1.get(i, j).clone()).collect();
        relation_cols.push(coords(&col).expect("boundaries are cycles"));
    }
    let mut relations = crate::matrix::IntMatrix::zero(kr, relation_cols.len());
    for (j, col) in relation_cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            relations.set(i, j, v.clone());
        }
    }
    let dec = smith_normal_form(&relations);
    let rank = dec.rank();
    let factors = dec.invariant_factors();
    if kr - rank != 1 || factors.iter().any(|d| !d.is_one()) {
        return Err(DegreeError::NotAGenerator(format!(
            "top homology is not infinite cyclic (free rank {}, torsion present: {})",
            kr - rank,
            factors.iter().any(|d| !d.is_one())
        )));
    }
    // In the U-transformed coordinates the quotient's free part is the single
    // row past the rank.
    let u_zl = dec.u.mul_vec(&zl_coords);
    let u_pushed = dec.u.mul_vec(&pushed_coords);
    let g = &u_zl[rank];
    if !g.abs().is_one() {
        return Err(DegreeError::NotAGenerator(
            "reference class is a proper multiple of the free generator".into(),
        ));
    }
    let m = &u_pushed[rank] * g; // g = ±1, so division is multiplication
    i64::try_from(&m)
        .map_err(|_| DegreeError::NoIntegerSolution("degree exceeds the machine range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn factorial(n: usize) -> i64 {
        (1..=n as i64).product()
    }

    #[test]
    fn chessboard_cycle_is_a_cycle_with_unit_coefficients() {
        for n in 3..=5usize {
            let z = fundamental_cycle_chessboard(n);
            assert_eq!(z.coeffs.len(), factorial(n) as usize);
            assert!(z.coeffs.values().all(|c| c.abs().is_one()));
            let board = chessboard(n - 1, n);
            let chains = SimplicialChains::new(&board);
            assert!(chains.complex.boundary_of(&z).is_zero());
        }
    }

    #[test]
    fn boundary_cycle_alternates_signs() {
        let z = simplex_boundary_cycle(2);
        // Facets of ∂Δ_2 in lexicographic order: {0,1},{0,2},{1,2} with
        // signs +1 (omit 2), −1 (omit 1), +1 (omit 0).
        let dense = z.to_dense(3);
        let vals: Vec<i64> = dense.iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, -1, 1]);
        let sphere = SimplicialComplex::simplex_boundary(2);
        assert!(SimplicialChains::new(&sphere).complex.boundary_of(&z).is_zero());
    }

    #[test]
    fn column_projection_has_factorial_degree() {
        for p in [3usize, 5] {
            let k = chessboard(p - 1, p);
            let l = SimplicialComplex::simplex_boundary(p - 1);
            let f: Vec<usize> = (0..k.vertex_count()).map(|v| v % p).collect();
            let zk = fundamental_cycle_chessboard(p);
            let zl = simplex_boundary_cycle(p - 1);
            let deg = simplicial_map_degree(&f, &k, &l, &zk, &zl).unwrap();
            assert_eq!(deg, factorial(p - 1), "p={p}");
        }
    }

    #[test]
    fn identity_map_has_degree_one() {
        let l = SimplicialComplex::simplex_boundary(2);
        let z = simplex_boundary_cycle(2);
        let f: Vec<usize> = (0..3).collect();
        assert_eq!(simplicial_map_degree(&f, &l, &l, &z, &z).unwrap(), 1);
    }

    #[test]
    fn swapping_two_vertices_reverses_orientation() {
        let l = SimplicialComplex::simplex_boundary(2);
        let z = simplex_boundary_cycle(2);
        let f = vec![1usize, 0, 2];
        assert_eq!(simplicial_map_degree(&f, &l, &l, &z, &z).unwrap(), -1);
    }

    #[test]
    fn collapsing_map_has_degree_zero() {
        let l = SimplicialComplex::simplex_boundary(2);
        let z = simplex_boundary_cycle(2);
        // Not simplicial into ∂Δ_2? v ↦ 0 sends edges to a vertex:
        // degenerate images contribute 0, so the pushforward vanishes.
        let f = vec![0usize, 0, 0];
        assert_eq!(simplicial_map_degree(&f, &l, &l, &z, &z).unwrap(), 0);
    }

    #[test]
    fn non_cycles_are_rejected() {
        let l = SimplicialComplex::simplex_boundary(2);
        let z = simplex_boundary_cycle(2);
        let not_cycle = Chain::from_entries(1, [(0usize, BigInt::from(1))]);
        let f: Vec<usize> = (0..3).collect();
        assert!(matches!(
            simplicial_map_degree(&f, &l, &l, &not_cycle, &z),
            Err(DegreeError::NotACycle(_))
        ));
        assert!(matches!(
            simplicial_map_degree(&f, &l, &l, &z, &not_cycle),
            Err(DegreeError::NotACycle(_))
        ));
    }

    #[test]
    fn multiples_of_the_generator_are_rejected() {
        let l = SimplicialComplex::simplex_boundary(2);
        let z = simplex_boundary_cycle(2);
        let doubled = Chain::from_entries(
            1,
            z.coeffs.iter().map(|(&i, c)| (i, c * BigInt::from(2))),
        );
        let f: Vec<usize> = (0..3).collect();
        assert!(matches!(
            simplicial_map_degree(&f, &l, &l, &z, &doubled),
            Err(DegreeError::NotAGenerator(_))
        ));
    }

    #[test]
    fn degree_multiplies_under_composition() {
        // Rotating the triangle then projecting the board composes to the
        // projection; degrees multiply (rotation has degree 1).
        let k = chessboard(2, 3);
        let l = SimplicialComplex::simplex_boundary(2);
        let zk = fundamental_cycle_chessboard(3);
        let zl = simplex_boundary_cycle(2);
        let project: Vec<usize> = (0..6).map(|v| v % 3).collect();
        let rotate = vec![1usize, 2, 0];
        let composed: Vec<usize> = project.iter().map(|&v| rotate[v]).collect();
        let d_project = simplicial_map_degree(&project, &k, &l, &zk, &zl).unwrap();
        let d_rotate = simplicial_map_degree(&rotate, &l, &l, &zl, &zl).unwrap();
        let d_composed = simplicial_map_degree(&composed, &k, &l, &zk, &zl).unwrap();
        assert_eq!(d_composed, d_rotate * d_project);
        assert_eq!(d_project.abs(), 2);
    }

    #[test]
    fn generator_check_engages_relations_when_cells_exist_above() {
        // Solid triangle: H_1 = 0, so no 1-cycle generates an infinite
        // cyclic group and the general path reports NotAGenerator.
        let solid = SimplicialComplex::full_simplex(2);
        let chains = SimplicialChains::new(&solid);
        let z = {
            // The boundary of the 2-cell is a 1-cycle.
            let col = chains.complex.boundary(2);
            let entries = col
                .column(0)
                .iter()
                .map(|&(row, v)| (row, BigInt::from(v)));
            Chain::from_entries(1, entries)
        };
        let f: Vec<usize> = (0..3).collect();
        assert!(matches!(
            simplicial_map_degree(&f, &solid, &solid, &z, &z),
            Err(DegreeError::NotAGenerator(_))
        ));
    }
}
