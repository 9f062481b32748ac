//! Simplicial-complex isomorphism by backtracking vertex matching.

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("complexes above 40 vertices are out of range for exact matching")]
    SizeExceeded,
}

const MAX_VERTICES: usize = 40;

/// Per-vertex invariant: the sorted dimensions of the facets containing it.
fn vertex_signatures(k: &SimplicialComplex) -> Vec<Vec<i64>> {
    let mut sig = vec![Vec::new(); k.vertex_count()];
    for f in k.facets() {
        for &v in f.vertices() {
            sig[v].push(f.dim());
        }
    }
    for s in &mut sig {
        s.sort_unstable();
    }
    sig
}

/// Vertex adjacency (shared facet membership) as bitmasks.
fn adjacency(k: &SimplicialComplex) -> Vec<u64> {
    let mut adj = vec![0u64; k.vertex_count()];
    for f in k.facets() {
        for &u in f.vertices() {
            for &v in f.vertices() {
                if u != v {
                    adj[u] |= 1 << v;
                }
            }
        }
    }
    adj
}

/// Searches for a vertex bijection carrying the facets of `a` onto the
/// facets of `b`. Returns the image list (vertex v of `a` maps to
/// `map[v]` in `b`) or None when the complexes are not isomorphic.
pub fn are_isomorphic(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Option<Vec<usize>>, IsoError> {
    if a.vertex_count() > MAX_VERTICES || b.vertex_count() > MAX_VERTICES {
        return Err(IsoError::SizeExceeded);
    }
    if a.vertex_count() != b.vertex_count() || a.f_vector() != b.f_vector() {
        return Ok(None);
    }
    let vc = a.vertex_count();
    if vc == 0 {
        return Ok(Some(Vec::new()));
    }

    let sig_a = vertex_signatures(a);
    let sig_b = vertex_signatures(b);
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(None);
        }
    }
    let adj_a = adjacency(a);
    let adj_b = adjacency(b);

    // Candidate images share the vertex signature; process the most
    // constrained vertices first.
    let candidates: Vec<Vec<usize>> = (0..vc)
        .map(|u| (0..vc).filter(|&w| sig_a[u] == sig_b[w]).collect())
        .collect();
    let mut order: Vec<usize> = (0..vc).collect();
    order.sort_by_key(|&u| (candidates[u].len(), std::cmp::Reverse(sig_a[u].len())));

    let mut map = vec![usize::MAX; vc];
    let mut used = vec![false; vc];
    // Adjacency agreement with already-mapped vertices prunes the search;
    // the facet check at a full assignment certifies the result (the search
    // keeps backtracking past adjacency-compatible maps that fail it).
    #[allow(clippy::too_many_arguments)] // local recursion carrying its environment
    fn search(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        adj_a: &[u64],
        adj_b: &[u64],
        a: &SimplicialComplex,
        b: &SimplicialComplex,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return a.facets().iter().all(|f| {
                let img = Simplex::new(f.vertices().iter().map(|&v| map[v]).collect());
                b.facets().binary_search(&img).is_ok()
            });
        }
        let u = order[depth];
        'cand: for &w in &candidates[u] {
            if used[w] {
                continue;
            }
            for &u2 in &order[..depth] {
                let w2 = map[u2];
                if (adj_a[u] >> u2 & 1) != (adj_b[w] >> w2 & 1) {
                    continue 'cand;
                }
            }
            map[u] = w;
            used[w] = true;
            if search(depth + 1, order, candidates, adj_a, adj_b, a, b, map, used) {
                return true;
            }
            map[u] = usize::MAX;
            used[w] = false;
        }
        false
    }

    if search(
        0,
        &order,
        &candidates,
        &adj_a,
        &adj_b,
        a,
        b,
        &mut map,
        &mut used,
    ) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chessboard::chessboard;

    fn cycle(n: usize) -> SimplicialComplex {
        let facets: Vec<Simplex> = (0..n).map(|i| Simplex::new(vec![i, (i + 1) % n])).collect();
        SimplicialComplex::from_faces(n, facets)
    }

    #[test]
    fn hexagons_match_across_labelings() {
        let board = chessboard(2, 3);
        let hex = cycle(6);
        let map = are_isomorphic(&board, &hex).unwrap().expect("isomorphic");
        // The image must carry facets to facets bijectively.
        let imgs: std::collections::BTreeSet<Simplex> = board
            .facets()
            .iter()
            .map(|f| Simplex::new(f.vertices().iter().map(|&v| map[v]).collect()))
            .collect();
        assert_eq!(imgs.len(), hex.facets().len());
        for f in &imgs {
            assert!(hex.facets().binary_search(f).is_ok());
        }
    }

    #[test]
    fn different_cycle_lengths_do_not_match() {
        assert_eq!(are_isomorphic(&cycle(6), &cycle(5)).unwrap(), None);
    }

    #[test]
    fn same_f_vector_different_structure() {
        // Two triangles sharing a vertex vs. a triangle plus a disjoint
        // triangle need different vertex counts, so use path vs. star:
        // both have f = [4, 3].
        let path = SimplicialComplex::from_faces(
            4,
            vec![
                Simplex::from([0, 1]),
                Simplex::from([1, 2]),
                Simplex::from([2, 3]),
            ],
        );
        let star = SimplicialComplex::from_faces(
            4,
            vec![
                Simplex::from([0, 1]),
                Simplex::from([0, 2]),
                Simplex::from([0, 3]),
            ],
        );
        assert_eq!(path.f_vector(), star.f_vector());
        assert_eq!(are_isomorphic(&path, &star).unwrap(), None);
    }

    #[test]
    fn empty_and_point_cases() {
        let empty = SimplicialComplex::from_faces(0, vec![]);
        assert_eq!(are_isomorphic(&empty, &empty).unwrap(), Some(vec![]));
        let pt = SimplicialComplex::full_simplex(0);
        assert_eq!(are_isomorphic(&pt, &pt).unwrap(), Some(vec![0]));
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = SimplicialComplex::isolated_points(41);
        assert_eq!(are_isomorphic(&big, &big), Err(IsoError::SizeExceeded));
    }

    #[test]
    fn boards_match_their_transposes() {
        for (m, n) in [(2usize, 3usize), (3, 3), (3, 4)] {
            let map = are_isomorphic(&chessboard(m, n), &chessboard(n, m))
                .unwrap()
                .expect("transpose boards are isomorphic");
            assert_eq!(map.len(), m * n);
        }
    }
}
