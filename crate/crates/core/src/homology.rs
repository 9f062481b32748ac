//! Integral and mod-p homology of chain complexes, homological connectivity,
//! and Euler characteristics.
//!
//! Over Z, betti_q = rank C_q − rank ∂_q − rank ∂_{q+1} and the torsion of
//! H_q is read off the Smith invariant factors of ∂_{q+1}; over Z/p the same
//! rank formula applies with field ranks and no torsion. Boundary ranks are
//! computed by the sparse unit-pivot engine, so only the degrees actually
//! inspected are paid for.

use crate::chain::{ChainComplex, SimplicialChains};
use crate::complex::SimplicialComplex;
use crate::sparse::{invariant_factors_sparse, rank_mod_p};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    /// Z/p for a prime p.
    ModP(u64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary composite is nonzero: the data is not a chain complex")]
    InvalidComplex,
}

/// Homology of one degree: free rank and torsion coefficients (each > 1,
/// each dividing the next; empty over a field).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
}

/// Homology in every degree 0..=top, serialized as a JSON array of
/// `{"degree": q, "betti": b, "torsion": [...]}` objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologySummary {
    pub groups: Vec<DegreeHomology>,
}

impl HomologySummary {
    pub fn betti(&self, q: usize) -> usize {
        self.groups.get(q).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, q: usize) -> &[u64] {
        self.groups.get(q).map_or(&[], |g| &g.torsion)
    }

    /// Reduced betti numbers: one less in degree 0, unchanged above.
    pub fn reduced_betti(&self, q: usize) -> usize {
        let b = self.betti(q);
        if q == 0 {
            b.saturating_sub(1)
        } else {
            b
        }
    }

    /// True when the reduced homology group H̃_q vanishes.
    pub fn reduced_vanishes(&self, q: usize) -> bool {
        self.reduced_betti(q) == 0 && self.torsion(q).is_empty()
    }
}

fn torsion_from_factors(factors: &[BigInt]) -> Vec<u64> {
    factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| u64::try_from(d).expect("torsion coefficient exceeds u64"))
        .collect()
}

/// Homology of a chain complex. Fails with `InvalidComplex` when some
/// composite ∂∘∂ is nonzero.
pub fn homology(c: &ChainComplex, coefficients: Coefficients) -> Result<HomologySummary, HomologyError> {
    if !c.validate() {
        return Err(HomologyError::InvalidComplex);
    }
    let n = c.sizes().len();
    let mut groups = Vec::with_capacity(n);
    match coefficients {
        Coefficients::Integers => {
            // factors[q] for ∂_q; the map out of degree 0 is zero.
            let factors: Vec<Vec<BigInt>> = (0..=n)
                .map(|q| match c.boundary_opt(q) {
                    Some(m) if q > 0 => invariant_factors_sparse(m),
                    _ => Vec::new(),
                })
                .collect();
            for q in 0..n {
                let rank_in = factors[q].len();
                let rank_out = factors[q + 1].len();
                groups.push(DegreeHomology {
                    degree: q,
                    betti: c.size(q) - rank_in - rank_out,
                    torsion: torsion_from_factors(&factors[q + 1]),
                });
            }
        }
        Coefficients::ModP(p) => {
            let ranks: Vec<usize> = (0..=n)
                .map(|q| match c.boundary_opt(q) {
                    Some(m) if q > 0 => rank_mod_p(m, p),
                    _ => 0,
                })
                .collect();
            for q in 0..n {
                groups.push(DegreeHomology {
                    degree: q,
                    betti: c.size(q) - ranks[q] - ranks[q + 1],
                    torsion: Vec::new(),
                });
            }
        }
    }
    Ok(HomologySummary { groups })
}

/// Homology of a simplicial complex over its canonical chain bases.
pub fn homology_of_complex(
    k: &SimplicialComplex,
    coefficients: Coefficients,
) -> HomologySummary {
    homology(&SimplicialChains::new(k).complex, coefficients)
        .expect("simplicial boundaries always satisfy del-del = 0")
}

/// Σ_q (−1)^q f_q over nonempty faces.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(q, &n)| if q % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Homological connectivity: `Value(c)` is the largest c ≤ dim K with
/// reduced integral homology vanishing in all degrees ≤ c; `All` when every
/// reduced group up to dim K vanishes; `Value(-1)` when K is disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    All,
    Value(i64),
}

impl Connectivity {
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Connectivity::All => true,
            Connectivity::Value(v) => *v >= bound,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::All => write!(f, "ALL"),
            Connectivity::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Ranks and torsion flags of ∂_1..∂_{limit}, computed incrementally.
struct AscendingRanks<'a> {
    chains: &'a ChainComplex,
    factors: Vec<Vec<BigInt>>,
}

impl<'a> AscendingRanks<'a> {
    fn new(chains: &'a ChainComplex) -> Self {
        AscendingRanks {
            chains,
            factors: vec![Vec::new()], // ∂_0 = 0
        }
    }

    fn factors(&mut self, q: usize) -> &[BigInt] {
        while self.factors.len() <= q {
            let next = self.factors.len();
            let f = match self.chains.boundary_opt(next) {
                Some(m) => invariant_factors_sparse(m),
                None => Vec::new(),
            };
            self.factors.push(f);
        }
        &self.factors[q]
    }

    fn rank(&mut self, q: usize) -> usize {
        self.factors(q).len()
    }

    /// Reduced H̃_q = 0 over Z?
    fn reduced_vanishes(&mut self, q: usize) -> bool {
        let size = self.chains.size(q);
        let betti = size - self.rank(q) - self.rank(q + 1);
        let reduced = if q == 0 { betti - 1 } else { betti };
        reduced == 0 && self.factors(q + 1).iter().all(|d| d.is_one())
    }
}

/// True when reduced integral homology of K vanishes in every degree ≤ c.
/// Only boundary ranks up to degree min(c, dim K)+1 are computed, so large
/// complexes can be certified highly connected without touching their top
/// boundary matrices. K must be nonempty when c ≥ 0.
pub fn reduced_vanishes_up_to(k: &SimplicialComplex, c: i64) -> bool {
    if c < 0 {
        return true;
    }
    assert!(!k.is_empty(), "connectivity of the empty complex is not defined");
    let cap = c.min(k.dim()) as usize;
    let chains = SimplicialChains::new(k);
    let mut ranks = AscendingRanks::new(&chains.complex);
    (0..=cap).all(|q| ranks.reduced_vanishes(q))
}

/// See [`Connectivity`]. K must be nonempty.
pub fn homological_connectivity(k: &SimplicialComplex) -> Connectivity {
    assert!(!k.is_empty(), "connectivity of the empty complex is not defined");
    let dim = k.dim() as usize;
    let chains = SimplicialChains::new(k);
    let mut ranks = AscendingRanks::new(&chains.complex);
    for q in 0..=dim {
        if !ranks.reduced_vanishes(q) {
            return Connectivity::Value(q as i64 - 1);
        }
    }
    Connectivity::All
}
