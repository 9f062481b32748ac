//! Group actions on simplicial complexes and quotients by free actions.
//!
//! An action is given by generator permutations of the vertex labels. The
//! quotient construction demands genuine freeness (no vertex stabilizers, and
//! the generated group realizes the declared order) and a regular orbit map:
//! in every dimension, faces map to faces of the same dimension, face orbits
//! have full group size, and distinct orbits have distinct images — exactly
//! the conditions making f_q(K) = |G|·f_q(K/G). When regularity fails, one
//! barycentric subdivision is applied and the conditions are rechecked.

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum GroupKind {
    /// Z/order.
    Cyclic { order: usize },
    /// Sym_degree.
    Symmetric { degree: usize },
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match self {
            GroupKind::Cyclic { order } => *order,
            GroupKind::Symmetric { degree } => (1..=*degree).product(),
        }
    }
}

/// Group action on a complex: generator permutations as vertex-image tables
/// (entry v of a table is the image of vertex v).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    pub kind: GroupKind,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("action is not free: {0}")]
    NotFree(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("orbit map stays irregular after one barycentric subdivision")]
    NotRegular,
}

impl GroupAction {
    pub fn cyclic(order: usize, generator: Vec<usize>) -> Self {
        GroupAction {
            kind: GroupKind::Cyclic { order },
            generators: vec![generator],
        }
    }

    pub fn symmetric(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        GroupAction {
            kind: GroupKind::Symmetric { degree },
            generators,
        }
    }

    /// Every group element as a vertex-image table, identity first, the rest
    /// in breadth-first generation order (deterministic). Errors if a
    /// generator is not a permutation of the expected label range.
    pub fn elements(&self, vertex_count: usize) -> Result<Vec<Vec<usize>>, QuotientError> {
        for g in &self.generators {
            if g.len() != vertex_count {
                return Err(QuotientError::InvalidAction(format!(
                    "generator table has length {}, expected {vertex_count}",
                    g.len()
                )));
            }
            let mut seen = vec![false; vertex_count];
            for &img in g {
                if img >= vertex_count || seen[img] {
                    return Err(QuotientError::InvalidAction(
                        "generator is not a permutation".to_string(),
                    ));
                }
                seen[img] = true;
            }
        }
        let identity: Vec<usize> = (0..vertex_count).collect();
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(identity.clone());
        let mut order: Vec<Vec<usize>> = vec![identity];
        let mut frontier = 0;
        let cap = self.kind.order();
        while frontier < order.len() {
            let base = order[frontier].clone();
            frontier += 1;
            for g in &self.generators {
                let composed: Vec<usize> = base.iter().map(|&v| g[v]).collect();
                if known.insert(composed.clone()) {
                    order.push(composed);
                    if order.len() > cap {
                        return Err(QuotientError::InvalidAction(format!(
                            "generators produce more than the declared {cap} elements"
                        )));
                    }
                }
            }
        }
        Ok(order)
    }
}

/// Orbit partition of 0..n under the element tables; orbits are sorted by
/// minimum member and listed in that order.
fn vertex_orbits(elements: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut orbit_of: Vec<Option<usize>> = vec![None; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if orbit_of[v].is_some() {
            continue;
        }
        let idx = orbits.len();
        let members: BTreeSet<usize> = elements.iter().map(|e| e[v]).collect();
        for &m in &members {
            debug_assert!(orbit_of[m].is_none(), "orbits must be disjoint");
            orbit_of[m] = Some(idx);
        }
        orbits.push(members.into_iter().collect());
    }
    orbits
}

struct RegularityData {
    /// Orbit index of each vertex.
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

/// Checks the per-dimension orbit-counting conditions that make the quotient
/// face map regular. Returns the vertex-orbit data on success.
fn regularity(
    k: &SimplicialComplex,
    elements: &[Vec<usize>],
) -> Result<RegularityData, ()> {
    let orbits = vertex_orbits(elements, k.vertex_count());
    let mut orbit_of = vec![0usize; k.vertex_count()];
    for (idx, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            orbit_of[v] = idx;
        }
    }
    let group_size = elements.len();
    for faces in k.faces_by_dim() {
        let mut seen: BTreeSet<&Simplex> = BTreeSet::new();
        let mut orbit_count = 0usize;
        let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &faces {
            // Image in the quotient must keep all vertices distinct.
            let img: BTreeSet<usize> = s.vertices().iter().map(|&v| orbit_of[v]).collect();
            if img.len() != s.len() {
                return Err(());
            }
            images.insert(img.into_iter().collect());
            if seen.contains(s) {
                continue;
            }
            // Face orbit must have full group size (no setwise stabilizer).
            let orbit: BTreeSet<Simplex> = elements
                .iter()
                .map(|e| s.map(|v| e[v]).expect("permutations keep vertices distinct"))
                .collect();
            if orbit.len() != group_size {
                return Err(());
            }
            orbit_count += 1;
            for t in orbit {
                let owned = faces.binary_search(&t).expect("orbit stays in the complex");
                seen.insert(&faces[owned]);
            }
        }
        // Distinct orbits must have distinct images: counts line up exactly.
        if images.len() != orbit_count || orbit_count * group_size != faces.len() {
            return Err(());
        }
    }
    Ok(RegularityData { orbit_of, orbits })
}

fn build_quotient(k: &SimplicialComplex, data: &RegularityData) -> SimplicialComplex {
    let faces = k
        .facets()
        .iter()
        .map(|s| {
            Simplex::try_from_image(s.vertices().iter().map(|&v| data.orbit_of[v]).collect())
                .expect("regularity keeps facet images non-degenerate")
        })
        .collect::<Vec<_>>();
    let labels: Vec<String> = data
        .orbits
        .iter()
        .map(|orbit| format!("orbit{}", orbit.iter().join(".")))
        .collect();
    SimplicialComplex::from_faces(data.orbits.len(), faces).with_labels(labels)
}

/// Quotient of a complex by a free group action. The action must realize its
/// declared group order and fix no vertex; if the orbit map is irregular the
/// complex is barycentrically subdivided once (homeomorphic, so homology and
/// Euler characteristic are unchanged) before taking the quotient.
pub fn quotient_complex(
    k: &SimplicialComplex,
    action: &GroupAction,
) -> Result<SimplicialComplex, QuotientError> {
    let elements = action.elements(k.vertex_count())?;
    let declared = action.kind.order();
    if elements.len() != declared {
        return Err(QuotientError::NotFree(format!(
            "declared group order {declared} but generators produce {} elements",
            elements.len()
        )));
    }
    // Automorphism check: every generator must carry facets to facets.
    for g in &action.generators {
        for f in k.facets() {
            let img = f
                .map(|v| g[v])
                .expect("permutations keep vertices distinct");
            if k.facets().binary_search(&img).is_err() {
                return Err(QuotientError::InvalidAction(format!(
                    "generator does not preserve the complex: facet {:?} maps to a non-facet",
                    f.vertices()
                )));
            }
        }
    }
    // Vertex freeness for every nonidentity element.
    for e in elements.iter().skip(1) {
        if let Some(v) = (0..k.vertex_count()).find(|&v| e[v] == v) {
            return Err(QuotientError::NotFree(format!(
                "vertex {v} is fixed by a nonidentity element"
            )));
        }
    }

    if let Ok(data) = regularity(k, &elements) {
        return Ok(build_quotient(k, &data));
    }
    // One subdivision; vertices of sd(K) are faces of K, the action is the
    // induced one on faces.
    let sd = k.barycentric_subdivision();
    let faces: Vec<Simplex> = k.faces_by_dim().into_iter().flatten().collect();
    let index: BTreeMap<&Simplex, usize> = faces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let induced: Vec<Vec<usize>> = elements
        .iter()
        .map(|e| {
            faces
                .iter()
                .map(|s| {
                    let img = s.map(|v| e[v]).expect("permutations keep vertices distinct");
                    index[&img]
                })
                .collect()
        })
        .collect();
    match regularity(&sd, &induced) {
        Ok(data) => Ok(build_quotient(&sd, &data)),
        Err(()) => Err(QuotientError::NotRegular),
    }
}
