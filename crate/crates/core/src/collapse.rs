//! Elementary collapses and the equivariant collapse of Δ_{r,r}.

use crate::chessboard::chessboard;
use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use std::collections::BTreeSet;

/// One elementary collapse: `free_face` is properly contained in exactly one
/// face of the current complex, namely `coface`, and both are removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub free_face: Simplex,
    pub coface: Simplex,
}

/// An ordered sequence of elementary collapses. Replaying the trace against
/// its starting complex re-validates every step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseTrace {
    pub steps: Vec<CollapseStep>,
}

impl CollapseTrace {
    /// Replays the trace from `start`, checking at each step that the free
    /// face is present with the recorded coface as its unique proper coface.
    /// Returns the collapsed complex on success.
    pub fn replay(&self, start: &SimplicialComplex) -> Result<SimplicialComplex, String> {
        let mut faces: BTreeSet<Simplex> = start.face_set();
        for (n, step) in self.steps.iter().enumerate() {
            let CollapseStep { free_face, coface } = step;
            if !faces.contains(free_face) {
                return Err(format!("step {n}: free face already removed"));
            }
            if !faces.contains(coface) {
                return Err(format!("step {n}: coface already removed"));
            }
            if coface.len() != free_face.len() + 1 || !free_face.is_face_of(coface) {
                return Err(format!("step {n}: coface is not one dimension above"));
            }
            // Any face properly containing the free face either is a
            // one-vertex extension of it or contains a second such extension,
            // so checking the extensions alone is exhaustive.
            for v in 0..start.vertex_count() {
                if free_face.contains_vertex(v) {
                    continue;
                }
                let mut vs = free_face.vertices().to_vec();
                vs.push(v);
                let candidate = Simplex::new(vs);
                if candidate != *coface && faces.contains(&candidate) {
                    return Err(format!("step {n}: free face has a second coface"));
                }
            }
            faces.remove(free_face);
            faces.remove(coface);
        }
        let mut out = SimplicialComplex::from_faces(start.vertex_count(), faces);
        if let Some(labels) = start.labels() {
            out = out.with_labels(labels.to_vec());
        }
        Ok(out)
    }
}

/// Collapses Δ_{r,r} to an (r−2)-dimensional subcomplex by one elementary
/// collapse per facet: each facet of Δ_{r,r} is a perfect rook placement and
/// contains exactly one cell in the last column; dropping that cell yields a
/// free face whose unique coface is the facet itself. The collapse commutes
/// with the row action (row permutations fix columns), and the result is the
/// subcomplex of (r−2)-faces that still use the last column, together with
/// everything below them.
pub fn equivariant_collapse_chessboard(r: usize) -> (SimplicialComplex, CollapseTrace) {
    assert!(r >= 2, "need at least a 2x2 board");
    let k = chessboard(r, r);
    let last_col = r - 1;
    let mut steps = Vec::with_capacity(k.facets().len());
    for facet in k.facets() {
        let omit = facet
            .vertices()
            .iter()
            .copied()
            .find(|v| v % r == last_col)
            .expect("perfect placements meet every column");
        let free_face = Simplex::new(
            facet
                .vertices()
                .iter()
                .copied()
                .filter(|&v| v != omit)
                .collect(),
        );
        steps.push(CollapseStep {
            free_face,
            coface: facet.clone(),
        });
    }
    // Surviving top faces: (r−2)-faces that keep a last-column cell. (The
    // removed free faces are exactly those omitting the last column.)
    let survivors: Vec<Simplex> = k
        .faces_of_dim(r - 2)
        .into_iter()
        .filter(|s| s.vertices().iter().any(|&v| v % r == last_col))
        .collect();
    let mut result = SimplicialComplex::from_maximal_faces(r * r, survivors);
    if let Some(labels) = k.labels() {
        result = result.with_labels(labels.to_vec());
    }
    let trace = CollapseTrace { steps };
    debug_assert_eq!(trace.replay(&k).as_ref(), Ok(&result));
    (result, trace)
}
