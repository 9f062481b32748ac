//! Abstract simplices over integer vertex labels.

/// A simplex stored as a strictly increasing vertex list; sorted order is the
/// positive orientation. The empty simplex (dimension −1) is allowed; types
/// that exclude it enforce that themselves.
///
/// The derived ordering is lexicographic on the vertex sequence, which is the
/// canonical face order used everywhere: `{0} < {0,1} < {0,2} < {1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    /// Canonicalizes by sorting. Panics on repeated vertices — constructions
    /// are expected to produce genuine vertex sets; potentially degenerate
    /// images go through [`Simplex::try_from_image`].
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        assert!(
            vertices.windows(2).all(|w| w[0] < w[1]),
            "repeated vertex in simplex {vertices:?}"
        );
        Simplex { vertices }
    }

    /// Sorts and checks for collisions; None when the image is degenerate.
    pub fn try_from_image(mut vertices: Vec<usize>) -> Option<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Simplex { vertices })
    }

    pub fn empty() -> Self {
        Simplex { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.vertices.len() as i64 - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Subset test; both sides sorted, so a single merge pass suffices.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Codimension-1 faces in the boundary order: the k-th face omits the
    /// k-th vertex and carries sign (−1)^k.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        (0..self.vertices.len())
            .map(|k| {
                let mut vs = self.vertices.clone();
                vs.remove(k);
                Simplex { vertices: vs }
            })
            .collect()
    }

    /// All nonempty subsets, in no particular order.
    pub fn nonempty_subsets(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u64..(1u64 << n) {
            let vs: Vec<usize> = (0..n)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| self.vertices[b])
                .collect();
            out.push(Simplex { vertices: vs });
        }
        out
    }

    /// Disjoint union as a simplex; panics if the vertex sets overlap.
    pub fn union_disjoint(&self, other: &Simplex) -> Simplex {
        let mut vs = self.vertices.clone();
        vs.extend_from_slice(&other.vertices);
        Simplex::new(vs)
    }

    /// Vertex-wise relabeling; the image must again be non-degenerate.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Option<Simplex> {
        Simplex::try_from_image(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

impl From<&[usize]> for Simplex {
    fn from(vs: &[usize]) -> Self {
        Simplex::new(vs.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Simplex {
    fn from(vs: [usize; N]) -> Self {
        Simplex::new(vs.to_vec())
    }
}
