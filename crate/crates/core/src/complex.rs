//! Finite abstract simplicial complexes over dense 0-based vertex labels.
//!
//! A complex is stored by its inclusion-maximal faces, kept sorted in the
//! canonical sequence-lexicographic order; all constructions relabel to a
//! dense vertex range and may retain human-readable provenance labels.

use crate::action::GroupAction;
use crate::simplex::Simplex;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

/// Error from parsing the complex text or JSON formats. `line` is 1-based.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ComplexParseError {
    pub line: usize,
    pub msg: String,
}

/// Abstract simplicial complex: `facets` are inclusion-maximal and sorted;
/// every face is a nonempty subset of some facet. Vertices not in any facet
/// do not exist as faces; constructors include every intended vertex in a
/// face. Optional `labels` record vertex provenance (row/column pairs, copy
/// indices, orbit members) and never affect structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Simplex>,
    labels: Option<Vec<String>>,
}

impl SimplicialComplex {
    /// Builds from an arbitrary face collection: drops empty and non-maximal
    /// faces, deduplicates, sorts. Panics if a label is out of range.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = Simplex>) -> Self {
        let distinct: BTreeSet<Simplex> = faces.into_iter().filter(|s| !s.is_empty()).collect();
        for s in &distinct {
            for &v in s.vertices() {
                assert!(v < vertex_count, "vertex {v} out of range {vertex_count}");
            }
        }
        // Longest first so every kept face is checked only against larger ones.
        let mut by_size: Vec<Simplex> = distinct.into_iter().collect();
        by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Simplex> = Vec::new();
        for s in by_size {
            if !kept.iter().any(|t| s.is_face_of(t)) {
                kept.push(s);
            }
        }
        kept.sort();
        SimplicialComplex {
            vertex_count,
            facets: kept,
            labels: None,
        }
    }

    /// Builds from faces already known pairwise non-nested (as produced by
    /// the deterministic constructors); skips the quadratic maximality sweep.
    pub(crate) fn from_maximal_faces(vertex_count: usize, faces: Vec<Simplex>) -> Self {
        let distinct: BTreeSet<Simplex> = faces.into_iter().filter(|s| !s.is_empty()).collect();
        let facets: Vec<Simplex> = distinct.into_iter().collect();
        debug_assert!(
            facets
                .iter()
                .all(|s| { facets.iter().filter(|t| s.is_face_of(t)).count() == 1 }),
            "faces passed as maximal are nested"
        );
        for s in &facets {
            for &v in s.vertices() {
                assert!(v < vertex_count, "vertex {v} out of range {vertex_count}");
            }
        }
        SimplicialComplex {
            vertex_count,
            facets,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Dimension of the complex; −1 when there are no faces at all.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|s| s.dim()).max().unwrap_or(-1)
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Every nonempty face, grouped by dimension (index q lists the q-faces),
    /// each group sorted lexicographically. This is the canonical chain basis
    /// order.
    pub fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let top = self.dim() as usize;
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            for s in f.nonempty_subsets() {
                sets[s.dim() as usize].insert(s);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn faces_of_dim(&self, q: usize) -> Vec<Simplex> {
        self.faces_by_dim().into_iter().nth(q).unwrap_or_default()
    }

    /// Number of q-faces for q = 0..=dim.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(|fs| fs.len()).collect()
    }

    /// All nonempty faces as a set (membership oracle for isomorphism tests).
    pub fn face_set(&self) -> BTreeSet<Simplex> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            out.extend(f.nonempty_subsets());
        }
        out
    }

    pub fn has_face(&self, s: &Simplex) -> bool {
        !s.is_empty() && self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// The standard n-dimensional simplex: one facet {0,…,n}.
    pub fn full_simplex(n: usize) -> Self {
        let facet = Simplex::new((0..=n).collect());
        SimplicialComplex::from_maximal_faces(n + 1, vec![facet])
    }

    /// n isolated vertices.
    pub fn isolated_points(n: usize) -> Self {
        let facets = (0..n).map(|v| Simplex::new(vec![v])).collect();
        SimplicialComplex::from_maximal_faces(n, facets)
    }

    /// Boundary of the n-simplex: all proper faces; n ≥ 1.
    pub fn simplex_boundary(n: usize) -> Self {
        assert!(n >= 1, "the 0-simplex has empty boundary");
        let facets = (0..=n)
            .map(|omit| Simplex::new((0..=n).filter(|&v| v != omit).collect()))
            .collect();
        SimplicialComplex::from_maximal_faces(n + 1, facets)
    }

    /// All faces of dimension ≤ k; k ≥ dim returns the complex unchanged and
    /// k = −1 empties it (vertex count is preserved either way).
    pub fn skeleton(&self, k: i64) -> Self {
        assert!(k >= -1, "skeleton dimension below -1");
        if k >= self.dim() {
            return self.clone();
        }
        let mut faces: Vec<Simplex> = Vec::new();
        let keep = (k + 1) as usize; // faces with at most this many vertices
        for f in &self.facets {
            if f.len() <= keep {
                faces.push(f.clone());
            } else {
                for combo in f.vertices().iter().copied().combinations(keep) {
                    faces.push(Simplex::new(combo));
                }
            }
        }
        let mut out = SimplicialComplex::from_faces(self.vertex_count, faces);
        out.labels = self.labels.clone();
        out
    }

    /// Join K * L: L's vertices are relabeled by an offset of K's vertex
    /// count; facets are unions of facets (empty side = the other complex).
    pub fn join(&self, other: &SimplicialComplex) -> Self {
        let offset = self.vertex_count;
        let left: Vec<Simplex> = if self.facets.is_empty() {
            vec![Simplex::empty()]
        } else {
            self.facets.clone()
        };
        let right: Vec<Simplex> = if other.facets.is_empty() {
            vec![Simplex::empty()]
        } else {
            other
                .facets
                .iter()
                .map(|s| s.map(|v| v + offset).expect("offset preserves distinctness"))
                .collect()
        };
        let mut facets = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                facets.push(a.union_disjoint(b));
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(l), Some(r)) => Some(l.iter().cloned().chain(r.iter().cloned()).collect()),
            _ => None,
        };
        let mut out =
            SimplicialComplex::from_maximal_faces(self.vertex_count + other.vertex_count, facets);
        out.labels = labels;
        out
    }

    /// Barycentric subdivision: one vertex per nonempty face (ordered by
    /// dimension, then lexicographically), one facet per maximal flag of
    /// faces. Euler characteristic is preserved.
    pub fn barycentric_subdivision(&self) -> Self {
        let faces: Vec<Simplex> = self.faces_by_dim().into_iter().flatten().collect();
        let index: std::collections::BTreeMap<&Simplex, usize> =
            faces.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut flags: Vec<Simplex> = Vec::new();
        for facet in &self.facets {
            for order in facet.vertices().iter().copied().permutations(facet.len()) {
                let mut prefix: Vec<usize> = Vec::with_capacity(order.len());
                let mut chain: Vec<usize> = Vec::with_capacity(order.len());
                for v in order {
                    prefix.push(v);
                    let face = Simplex::new(prefix.clone());
                    chain.push(index[&face]);
                }
                flags.push(Simplex::new(chain));
            }
        }
        let labels: Vec<String> = faces
            .iter()
            .map(|s| format!("face{}", s.vertices().iter().join(".")))
            .collect();
        SimplicialComplex::from_maximal_faces(faces.len(), flags).with_labels(labels)
    }

    /// Text format: header `simplicial v1 <vertex_count>`, one facet per line
    /// as sorted space-separated labels, facets in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("simplicial v1 {}\n", self.vertex_count);
        for f in &self.facets {
            writeln!(out, "{}", f.vertices().iter().join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ComplexParseError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(ComplexParseError {
            line: 1,
            msg: "missing header".to_string(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "simplicial" || parts[1] != "v1" {
            return Err(ComplexParseError {
                line: 1,
                msg: "expected header `simplicial v1 <vertex_count>`".to_string(),
            });
        }
        let vertex_count: usize = parts[2].parse().map_err(|_| ComplexParseError {
            line: 1,
            msg: format!("bad vertex count `{}`", parts[2]),
        })?;
        let mut faces = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut verts = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| ComplexParseError {
                    line: lineno,
                    msg: format!("bad vertex label `{tok}`"),
                })?;
                if v >= vertex_count {
                    return Err(ComplexParseError {
                        line: lineno,
                        msg: format!("vertex {v} out of range 0..{vertex_count}"),
                    });
                }
                verts.push(v);
            }
            verts.sort_unstable();
            if verts.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexParseError {
                    line: lineno,
                    msg: "repeated vertex in facet".to_string(),
                });
            }
            faces.push(Simplex::new(verts));
        }
        Ok(SimplicialComplex::from_faces(vertex_count, faces))
    }

    /// JSON mirror of the text format with optional labels and group action.
    pub fn to_json(&self, action: Option<&GroupAction>) -> String {
        let doc = ComplexJson {
            vertex_count: self.vertex_count,
            facets: self
                .facets
                .iter()
                .map(|s| s.vertices().to_vec())
                .collect(),
            labels: self.labels.clone(),
            action: action.cloned(),
        };
        serde_json::to_string_pretty(&doc).expect("complex serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<(Self, Option<GroupAction>), ComplexParseError> {
        let doc: ComplexJson = serde_json::from_str(text).map_err(|e| ComplexParseError {
            line: e.line(),
            msg: e.to_string(),
        })?;
        for f in &doc.facets {
            for &v in f {
                if v >= doc.vertex_count {
                    return Err(ComplexParseError {
                        line: 1,
                        msg: format!("vertex {v} out of range 0..{}", doc.vertex_count),
                    });
                }
            }
            let mut sorted = f.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexParseError {
                    line: 1,
                    msg: format!("repeated vertex in facet {f:?}"),
                });
            }
        }
        let mut k = SimplicialComplex::from_faces(
            doc.vertex_count,
            doc.facets.into_iter().map(Simplex::new),
        );
        if let Some(labels) = doc.labels {
            if labels.len() != doc.vertex_count {
                return Err(ComplexParseError {
                    line: 1,
                    msg: "label count differs from vertex count".to_string(),
                });
            }
            k.labels = Some(labels);
        }
        Ok((k, doc.action))
    }
}

/// Serialized form of a complex, optionally bundling a group action.
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<GroupAction>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximality_filter_and_order() {
        let k = SimplicialComplex::from_faces(
            3,
            vec![
                Simplex::from([0]),
                Simplex::from([0, 1]),
                Simplex::from([2]),
                Simplex::from([0, 1]),
            ],
        );
        assert_eq!(k.facets(), &[Simplex::from([0, 1]), Simplex::from([2])]);
        assert_eq!(k.f_vector(), vec![3, 1]);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn full_simplex_and_skeleton() {
        let d4 = SimplicialComplex::full_simplex(4);
        assert_eq!(d4.vertex_count(), 5);
        assert_eq!(d4.f_vector(), vec![5, 10, 10, 5, 1]);
        assert_eq!(d4.skeleton(4), d4);
        let k5 = d4.skeleton(1);
        assert_eq!(k5.f_vector(), vec![5, 10]);
        let empty = d4.skeleton(-1);
        assert!(empty.is_empty());
        assert_eq!(empty.vertex_count(), 5);
    }

    #[test]
    fn triangle_skeleton_is_three_cycle() {
        let tri = SimplicialComplex::full_simplex(2).skeleton(1);
        assert_eq!(tri, SimplicialComplex::simplex_boundary(2));
        assert_eq!(tri.f_vector(), vec![3, 3]);
    }

    #[test]
    fn join_of_point_pairs_is_four_cycle() {
        let s0 = SimplicialComplex::isolated_points(2);
        let j = s0.join(&s0);
        assert_eq!(j.vertex_count(), 4);
        assert_eq!(j.f_vector(), vec![4, 4]);
        // Edges {0,2},{0,3},{1,2},{1,3}: the 4-cycle.
        assert_eq!(
            j.facets(),
            &[
                Simplex::from([0, 2]),
                Simplex::from([0, 3]),
                Simplex::from([1, 2]),
                Simplex::from([1, 3]),
            ]
        );
    }

    #[test]
    fn join_with_empty_is_identity() {
        let k = SimplicialComplex::full_simplex(2);
        let empty = SimplicialComplex::from_faces(0, Vec::<Simplex>::new());
        assert_eq!(k.join(&empty).facets(), k.facets());
        assert_eq!(empty.join(&k).facets(), k.facets());
    }

    #[test]
    fn join_of_edges_is_tetrahedron() {
        let d1 = SimplicialComplex::full_simplex(1);
        assert_eq!(d1.join(&d1), SimplicialComplex::full_simplex(3));
    }

    #[test]
    fn subdivision_of_edge_and_triangle_boundary() {
        let sd = SimplicialComplex::full_simplex(1).barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![3, 2]);
        assert_eq!(
            sd.labels().unwrap(),
            &["face0".to_string(), "face1".to_string(), "face0.1".to_string()]
        );

        let sd = SimplicialComplex::simplex_boundary(2).barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![6, 6]); // hexagon
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        for k in [
            SimplicialComplex::full_simplex(3),
            SimplicialComplex::simplex_boundary(3),
            SimplicialComplex::isolated_points(4),
        ] {
            let chi = |c: &SimplicialComplex| -> i64 {
                c.f_vector()
                    .iter()
                    .enumerate()
                    .map(|(q, &n)| if q % 2 == 0 { n as i64 } else { -(n as i64) })
                    .sum()
            };
            assert_eq!(chi(&k.barycentric_subdivision()), chi(&k));
        }
    }

    #[test]
    fn text_round_trip_is_canonical() {
        let k = SimplicialComplex::from_faces(
            4,
            vec![Simplex::from([1, 3]), Simplex::from([0, 2]), Simplex::from([0, 1])],
        );
        let text = k.to_text();
        assert_eq!(text, "simplicial v1 4\n0 1\n0 2\n1 3\n");
        assert_eq!(SimplicialComplex::from_text(&text).unwrap(), k);
    }

    #[test]
    fn text_parse_errors_carry_line_numbers() {
        let err = SimplicialComplex::from_text("simplicial v2 3\n0 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = SimplicialComplex::from_text("simplicial v1 3\n0 9\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = SimplicialComplex::from_text("simplicial v1 3\n0 1\n2 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = SimplicialComplex::from_text("simplicial v1 3\n0 x\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn json_round_trip_with_labels() {
        let k = SimplicialComplex::isolated_points(2).with_labels(vec![
            "r1c1".to_string(),
            "r1c2".to_string(),
        ]);
        let (back, action) = SimplicialComplex::from_json(&k.to_json(None)).unwrap();
        assert_eq!(back, k);
        assert!(action.is_none());
    }
}
