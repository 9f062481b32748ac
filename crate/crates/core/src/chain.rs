//! Chain complexes of free abelian groups with fixed ordered bases.

use crate::complex::SimplicialComplex;
use crate::matrix::SparseIntMatrix;
use crate::simplex::Simplex;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Graded boundary data: `sizes[q]` is the rank of C_q and `boundaries[q]`
/// maps C_q → C_{q−1} (with `boundaries[0]` the unique map to the zero
/// group). Constructors guarantee ∂∘∂ = 0-compatible dimensions; the
/// composite itself is checked by [`ChainComplex::validate`].
#[derive(Clone, Debug)]
pub struct ChainComplex {
    sizes: Vec<usize>,
    boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    pub fn new(sizes: Vec<usize>, boundaries: Vec<SparseIntMatrix>) -> Self {
        assert_eq!(sizes.len(), boundaries.len(), "one boundary per degree");
        for q in 0..sizes.len() {
            assert_eq!(boundaries[q].cols(), sizes[q], "boundary domain at {q}");
            let target = if q == 0 { 0 } else { sizes[q - 1] };
            assert_eq!(boundaries[q].rows(), target, "boundary codomain at {q}");
        }
        ChainComplex { sizes, boundaries }
    }

    /// Degree of the top graded piece; −1 for the zero complex.
    pub fn top_degree(&self) -> i64 {
        self.sizes.len() as i64 - 1
    }

    pub fn size(&self, q: usize) -> usize {
        self.sizes.get(q).copied().unwrap_or(0)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// ∂_q; degrees above the top return an empty matrix of matching shape.
    pub fn boundary(&self, q: usize) -> SparseIntMatrix {
        match self.boundaries.get(q) {
            Some(m) => m.clone(),
            None => {
                let rows = if q == 0 { 0 } else { self.size(q - 1) };
                SparseIntMatrix::new(rows, 0)
            }
        }
    }

    /// ∂_q without copying; None above the top degree.
    pub fn boundary_opt(&self, q: usize) -> Option<&SparseIntMatrix> {
        self.boundaries.get(q)
    }

    /// Exact check that every composite ∂_{q} ∘ ∂_{q+1} vanishes.
    pub fn validate(&self) -> bool {
        for q in 1..self.boundaries.len() {
            if !self.boundaries[q - 1]
                .mul_sparse(&self.boundaries[q])
                .is_zero()
            {
                return false;
            }
        }
        true
    }

    /// Boundary of a chain; the zero chain in degree q−1 when q = 0.
    pub fn boundary_of(&self, chain: &Chain) -> Chain {
        let q = chain.degree;
        if q == 0 {
            return Chain::zero(0);
        }
        let m = &self.boundaries[q];
        assert_eq!(m.cols(), self.sizes[q]);
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&col, c) in &chain.coeffs {
            for &(row, v) in m.column(col) {
                let entry = coeffs.entry(row).or_insert_with(BigInt::zero);
                *entry += c * v;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Chain {
            degree: q - 1,
            coeffs,
        }
    }
}

/// Element of C_q: finitely many basis cells with nonzero integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: BTreeMap<usize, BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_entries(degree: usize, entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (cell, c) in entries {
            if !c.is_zero() {
                let slot = coeffs.entry(cell).or_insert_with(BigInt::zero);
                *slot += c;
            }
        }
        coeffs.retain(|_, v: &mut BigInt| !v.is_zero());
        Chain { degree, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficient vector against a basis of the given size.
    pub fn to_dense(&self, size: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); size];
        for (&cell, c) in &self.coeffs {
            assert!(cell < size, "chain cell outside basis");
            v[cell] = c.clone();
        }
        v
    }
}

/// Simplicial chain complex of a complex, over the canonical bases: the
/// q-cells are the q-faces in lexicographic order, and ∂ uses the
/// sorted-vertex-order orientation.
pub struct SimplicialChains {
    pub complex: ChainComplex,
    pub bases: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

impl SimplicialChains {
    pub fn new(k: &SimplicialComplex) -> Self {
        let bases = k.faces_by_dim();
        let index: Vec<BTreeMap<Simplex, usize>> = bases
            .iter()
            .map(|faces| {
                faces
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let mut boundaries = Vec::with_capacity(bases.len());
        for q in 0..bases.len() {
            let rows = if q == 0 { 0 } else { sizes[q - 1] };
            let mut m = SparseIntMatrix::new(rows, sizes[q]);
            if q > 0 {
                for (col, s) in bases[q].iter().enumerate() {
                    let mut entries: Vec<(usize, i64)> = s
                        .boundary_faces()
                        .iter()
                        .enumerate()
                        .map(|(kth, t)| {
                            let row = index[q - 1][t];
                            let sign = if kth % 2 == 0 { 1 } else { -1 };
                            (row, sign)
                        })
                        .collect();
                    entries.sort_unstable();
                    for (row, v) in entries {
                        m.push(row, col, v);
                    }
                }
            }
            boundaries.push(m);
        }
        SimplicialChains {
            complex: ChainComplex::new(sizes, boundaries),
            bases,
            index,
        }
    }

    pub fn index_of(&self, q: usize, s: &Simplex) -> Option<usize> {
        self.index.get(q).and_then(|m| m.get(s)).copied()
    }
}
