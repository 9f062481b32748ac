//! Deleted joins and deleted products.
//!
//! The r-fold k-wise deleted join of K has one vertex (copy, v) per copy
//! index and vertex of K; a face is a join σ_1 * … * σ_r of faces of K
//! (empty constituents allowed) such that every k of the constituents have
//! empty common intersection — equivalently, no vertex of K appears in k or
//! more constituents. For k = 2 this is pairwise disjointness.
//!
//! The r-fold 2-wise deleted product is carried as a chain complex only: its
//! degree-q cells are ordered r-tuples of pairwise-disjoint *nonempty* faces
//! with dimensions summing to q, and the boundary follows the graded Leibniz
//! rule; a vertex factor has zero boundary (tuples with an empty slot are not
//! cells, and dropping them keeps ∂∘∂ = 0 because both removals of a
//! degree-0 factor cancel).

use crate::action::GroupAction;
use crate::chain::ChainComplex;
use crate::complex::SimplicialComplex;
use crate::matrix::SparseIntMatrix;
use crate::simplex::Simplex;
use std::collections::{HashMap, HashSet};

/// Faces of K as vertex bitmasks (vertex counts here are ≤ 64).
fn face_masks(k: &SimplicialComplex) -> HashSet<u64> {
    assert!(
        k.vertex_count() <= 64,
        "deleted constructions are bounded to 64 vertices"
    );
    let mut masks = HashSet::new();
    for f in k.facets() {
        let full: u64 = f.vertices().iter().map(|&v| 1u64 << v).sum();
        // All sub-masks of `full`, including 0 (the empty face).
        let mut sub = full;
        loop {
            masks.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    masks.insert(0);
    masks
}

/// The r-fold k-wise deleted join of K, together with the Sym_r action that
/// permutes the copies. Vertex (copy c, original v) gets label c·|V(K)| + v.
pub fn deleted_join(k: &SimplicialComplex, r: usize, kwise: usize) -> (SimplicialComplex, GroupAction) {
    assert!(r >= 2, "need at least two copies");
    assert!((2..=r).contains(&kwise), "k-wise parameter must satisfy 2 <= k <= r");
    let vc = k.vertex_count();
    let faces = face_masks(k);

    // Admissible copy-sets for one vertex: subsets of the r copies of size
    // at most k−1.
    let copy_sets: Vec<u32> = (0u32..(1 << r))
        .filter(|s| (s.count_ones() as usize) < kwise)
        .collect();

    // Depth-first enumeration over vertices; sigma[i] is the bitmask of
    // copy i's constituent so far. Prefixes of faces are faces, so a
    // constituent that leaves the face set prunes the whole subtree.
    let mut sigma = vec![0u64; r];
    let mut complete: Vec<Vec<u64>> = Vec::new();
    fn recurse(
        v: usize,
        vc: usize,
        copy_sets: &[u32],
        faces: &HashSet<u64>,
        sigma: &mut Vec<u64>,
        complete: &mut Vec<Vec<u64>>,
    ) {
        if v == vc {
            if sigma.iter().any(|&m| m != 0) {
                complete.push(sigma.clone());
            }
            return;
        }
        let bit = 1u64 << v;
        'sets: for &s in copy_sets {
            for (i, &mask) in sigma.iter().enumerate() {
                if s >> i & 1 == 1 && !faces.contains(&(mask | bit)) {
                    continue 'sets;
                }
            }
            for (i, mask) in sigma.iter_mut().enumerate() {
                if s >> i & 1 == 1 {
                    *mask |= bit;
                }
            }
            recurse(v + 1, vc, copy_sets, faces, sigma, complete);
            for (i, mask) in sigma.iter_mut().enumerate() {
                if s >> i & 1 == 1 {
                    *mask &= !bit;
                }
            }
        }
    }
    recurse(0, vc, &copy_sets, &faces, &mut sigma, &mut complete);

    // Keep the inclusion-maximal assignments: extendable means some copy can
    // absorb a further vertex without breaking the k-wise bound or K's face
    // structure.
    let maximal: Vec<Vec<u64>> = complete
        .into_iter()
        .filter(|sigma| {
            for v in 0..vc {
                let bit = 1u64 << v;
                let multiplicity = sigma.iter().filter(|&&m| m & bit != 0).count();
                if multiplicity + 1 >= kwise {
                    continue;
                }
                for &m in sigma.iter() {
                    if m & bit == 0 && faces.contains(&(m | bit)) {
                        return false;
                    }
                }
            }
            true
        })
        .collect();

    let facets: Vec<Simplex> = maximal
        .iter()
        .map(|sigma| {
            let mut verts = Vec::new();
            for (copy, &mask) in sigma.iter().enumerate() {
                for v in 0..vc {
                    if mask >> v & 1 == 1 {
                        verts.push(copy * vc + v);
                    }
                }
            }
            Simplex::new(verts)
        })
        .collect();
    let labels: Vec<String> = (0..r * vc)
        .map(|l| format!("copy{}v{}", l / vc, l % vc))
        .collect();
    let complex = SimplicialComplex::from_maximal_faces(r * vc, facets).with_labels(labels);

    // Adjacent copy transpositions generate the Sym_r action.
    let generators: Vec<Vec<usize>> = (0..r - 1)
        .map(|a| {
            (0..r * vc)
                .map(|l| {
                    let (copy, v) = (l / vc, l % vc);
                    let copy2 = if copy == a {
                        a + 1
                    } else if copy == a + 1 {
                        a
                    } else {
                        copy
                    };
                    copy2 * vc + v
                })
                .collect()
        })
        .collect();
    (complex, GroupAction::symmetric(r, generators))
}

/// Deleted product of K, carried as a chain complex with named cells.
pub struct DeletedProduct {
    pub r: usize,
    /// `cells[q]` lists the degree-q tuples in basis order (tuple-lexicographic).
    pub cells: Vec<Vec<Vec<Simplex>>>,
    pub chain: ChainComplex,
}

/// Cellular chain complex of the r-fold 2-wise deleted product of K.
pub fn deleted_product_chain(k: &SimplicialComplex, r: usize) -> DeletedProduct {
    assert!(r >= 2, "need at least two factors");
    let all_faces: Vec<Simplex> = {
        let mut faces: Vec<Simplex> = k.face_set().into_iter().collect();
        faces.sort();
        faces
    };
    let masks: Vec<u64> = all_faces
        .iter()
        .map(|s| s.vertices().iter().map(|&v| 1u64 << v).sum())
        .collect();

    // Enumerate ordered r-tuples of pairwise-disjoint faces in lexicographic
    // order (faces are already sorted), bucketed by total degree.
    let mut cells: Vec<Vec<Vec<Simplex>>> = Vec::new();
    let mut tuple: Vec<usize> = Vec::with_capacity(r);
    #[allow(clippy::too_many_arguments)] // local recursion carrying its environment
    fn recurse(
        slot: usize,
        r: usize,
        used: u64,
        degree: usize,
        all_faces: &[Simplex],
        masks: &[u64],
        tuple: &mut Vec<usize>,
        cells: &mut Vec<Vec<Vec<Simplex>>>,
    ) {
        if slot == r {
            while cells.len() <= degree {
                cells.push(Vec::new());
            }
            cells[degree].push(tuple.iter().map(|&i| all_faces[i].clone()).collect());
            return;
        }
        for i in 0..all_faces.len() {
            if masks[i] & used != 0 {
                continue;
            }
            tuple.push(i);
            recurse(
                slot + 1,
                r,
                used | masks[i],
                degree + all_faces[i].dim() as usize,
                all_faces,
                masks,
                tuple,
                cells,
            );
            tuple.pop();
        }
    }
    recurse(0, r, 0, 0, &all_faces, &masks, &mut tuple, &mut cells);

    let index: Vec<HashMap<&[Simplex], usize>> = cells
        .iter()
        .map(|bucket| {
            bucket
                .iter()
                .enumerate()
                .map(|(i, t)| (t.as_slice(), i))
                .collect()
        })
        .collect();

    let sizes: Vec<usize> = cells.iter().map(|b| b.len()).collect();
    let mut boundaries = Vec::with_capacity(cells.len());
    for q in 0..cells.len() {
        let rows = if q == 0 { 0 } else { sizes[q - 1] };
        let mut m = SparseIntMatrix::new(rows, sizes[q]);
        if q > 0 {
            for (col, cell) in cells[q].iter().enumerate() {
                let mut entries: Vec<(usize, i64)> = Vec::new();
                let mut prefix_sign = 1i64;
                for (i, factor) in cell.iter().enumerate() {
                    if factor.len() > 1 {
                        for (kth, face) in factor.boundary_faces().into_iter().enumerate() {
                            let mut target = cell.clone();
                            target[i] = face;
                            let row = index[q - 1][target.as_slice()];
                            let sign = prefix_sign * if kth % 2 == 0 { 1 } else { -1 };
                            entries.push((row, sign));
                        }
                    }
                    if factor.dim() % 2 == 1 {
                        prefix_sign = -prefix_sign;
                    }
                }
                entries.sort_unstable();
                for (row, v) in entries {
                    m.push(row, col, v);
                }
            }
        }
        boundaries.push(m);
    }
    DeletedProduct {
        r,
        chain: ChainComplex::new(sizes, boundaries),
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chessboard::chessboard;
    use crate::homology::{homology, Coefficients};
    use crate::iso::are_isomorphic;

    #[test]
    fn deleted_join_of_edge_is_four_cycle() {
        let (dj, action) = deleted_join(&SimplicialComplex::full_simplex(1), 2, 2);
        assert_eq!(dj.vertex_count(), 4);
        assert_eq!(dj.f_vector(), vec![4, 4]);
        assert_eq!(
            dj.facets(),
            &[
                Simplex::from([0, 1]),
                Simplex::from([0, 3]),
                Simplex::from([1, 2]),
                Simplex::from([2, 3]),
            ]
        );
        assert_eq!(action.generators.len(), 1);
        assert_eq!(action.generators[0], vec![2, 3, 0, 1]);
    }

    #[test]
    fn deleted_join_of_three_points_is_six_cycle() {
        let (dj, _) = deleted_join(&SimplicialComplex::isolated_points(3), 2, 2);
        assert_eq!(dj.f_vector(), vec![6, 6]);
        // Every vertex has two neighbors: a circle.
        for v in 0..6 {
            let deg = dj.facets().iter().filter(|f| f.contains_vertex(v)).count();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn deleted_join_of_points_is_chessboard() {
        for (kk, r) in [(2usize, 2usize), (3, 2), (2, 3), (3, 3), (4, 3)] {
            let (dj, _) = deleted_join(&SimplicialComplex::isolated_points(kk), r, 2);
            let board = chessboard(kk, r);
            assert_eq!(dj.f_vector(), board.f_vector(), "({kk},{r})");
            assert!(are_isomorphic(&dj, &board).unwrap().is_some(), "({kk},{r})");
        }
    }

    #[test]
    fn deleted_join_action_permutes_facets() {
        let (dj, action) = deleted_join(&SimplicialComplex::full_simplex(2), 3, 2);
        for g in &action.generators {
            for f in dj.facets() {
                let img = f.map(|v| g[v]).unwrap();
                assert!(dj.facets().binary_search(&img).is_ok());
            }
        }
    }

    #[test]
    fn three_wise_deleted_join_allows_double_covers() {
        // In the 3-fold 3-wise deleted join of a point, the vertex may lie in
        // up to two constituents.
        let point = SimplicialComplex::full_simplex(0);
        let (dj, _) = deleted_join(&point, 3, 3);
        // Facets: the vertex in exactly two of the three copies.
        assert_eq!(dj.f_vector(), vec![3, 3]);
        let (dj2, _) = deleted_join(&point, 3, 2);
        assert_eq!(dj2.f_vector(), vec![3]);
    }

    #[test]
    fn deleted_product_of_edge_is_two_points() {
        let dp = deleted_product_chain(&SimplicialComplex::full_simplex(1), 2);
        assert_eq!(dp.chain.sizes(), &[2]);
        let h = homology(&dp.chain, Coefficients::Integers).unwrap();
        assert_eq!(h.betti(0), 2);
    }

    #[test]
    fn deleted_product_of_triangle_is_a_hexagon() {
        let dp = deleted_product_chain(&SimplicialComplex::full_simplex(2), 2);
        assert_eq!(dp.chain.sizes(), &[6, 6]);
        assert!(dp.chain.validate());
        let h = homology(&dp.chain, Coefficients::Integers).unwrap();
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 1);
    }

    #[test]
    fn top_cells_count_ordered_set_partitions() {
        // Number of ordered set partitions of n labels into r nonempty
        // blocks, by inclusion-exclusion over empty blocks.
        fn surjections(n: u32, r: u64) -> u64 {
            (0..=r)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1i64 } else { -1 };
                    let choose = {
                        let mut c = 1u64;
                        for t in 0..j {
                            c = c * (r - t) / (t + 1);
                        }
                        c
                    };
                    sign * (choose as i64) * ((r - j) as i64).pow(n)
                })
                .sum::<i64>() as u64
        }
        for n in 2..=6usize {
            for r in 2..=3usize {
                if r > n {
                    continue;
                }
                let dp = deleted_product_chain(&SimplicialComplex::full_simplex(n - 1), r);
                let top = n - r; // top degree N − r + 1 with N = n − 1
                assert_eq!(
                    dp.cells[top].len() as u64,
                    surjections(n as u32, r as u64),
                    "n={n} r={r}"
                );
                assert!(dp.chain.validate(), "n={n} r={r}");
            }
        }
    }
}
