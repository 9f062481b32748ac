//! Machine-checkable partition certificates: r pairwise-disjoint vertex
//! sets, a common point, and exact convex coefficients placing that point in
//! every part's hull.

use crate::points::PointConfiguration;
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("vertex {0} appears in two parts")]
    OverlappingParts(usize),
    #[error("vertex {0} is outside the configuration")]
    IndexOutOfRange(usize),
    #[error("part {0} has {1} coefficients for {2} vertices")]
    CoefficientArity(usize, usize, usize),
    #[error("part {0} has a negative coefficient")]
    NegativeCoefficient(usize),
    #[error("part {0} coefficients sum to {1}, not 1")]
    CoefficientSum(usize, String),
    #[error("common point has {0} coordinates in dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("part {0} combination misses the common point")]
    CommonPointMismatch(usize),
}

/// Certificate that r disjoint faces have intersecting images: part i's
/// convex combination with the stated coefficients equals the common point,
/// exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    /// Vertex indices per part, each sorted ascending.
    pub parts: Vec<Vec<usize>>,
    pub point: Vec<Rational>,
    /// Convex coefficients per part, aligned with the part's vertex order.
    pub coefficients: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    parts: Vec<Vec<usize>>,
    point: Vec<String>,
    coefficients: Vec<Vec<String>>,
}

impl PartitionCertificate {
    /// Exact verification of all certificate invariants against the
    /// configuration it speaks about.
    pub fn verify(&self, p: &PointConfiguration) -> Result<(), CertificateError> {
        let d = p.dimension();
        if self.point.len() != d {
            return Err(CertificateError::DimensionMismatch(self.point.len(), d));
        }
        let mut seen = vec![false; p.len()];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(CertificateError::EmptyPart(i));
            }
            for &v in part {
                if v >= p.len() {
                    return Err(CertificateError::IndexOutOfRange(v));
                }
                if seen[v] {
                    return Err(CertificateError::OverlappingParts(v));
                }
                seen[v] = true;
            }
        }
        if self.coefficients.len() != self.parts.len() {
            return Err(CertificateError::CoefficientArity(
                self.coefficients.len(),
                self.coefficients.len(),
                self.parts.len(),
            ));
        }
        for (i, (part, coeffs)) in self.parts.iter().zip(&self.coefficients).enumerate() {
            if coeffs.len() != part.len() {
                return Err(CertificateError::CoefficientArity(
                    i,
                    coeffs.len(),
                    part.len(),
                ));
            }
            if coeffs.iter().any(|c| c.is_negative()) {
                return Err(CertificateError::NegativeCoefficient(i));
            }
            let sum: Rational = coeffs.iter().fold(Rational::zero(), |a, b| a + b);
            if !sum.is_one() {
                return Err(CertificateError::CoefficientSum(
                    i,
                    format_rational(&sum),
                ));
            }
            for c in 0..d {
                let combo: Rational = part
                    .iter()
                    .zip(coeffs)
                    .map(|(&v, l)| l * &p.point(v)[c])
                    .fold(Rational::zero(), |a, b| a + b);
                if combo != self.point[c] {
                    return Err(CertificateError::CommonPointMismatch(i));
                }
            }
        }
        Ok(())
    }

    /// JSON with rationals rendered as `num/den` strings and fixed key
    /// order: parts, point, coefficients.
    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            parts: self.parts.clone(),
            point: self.point.iter().map(format_rational).collect(),
            coefficients: self
                .coefficients
                .iter()
                .map(|cs| cs.iter().map(format_rational).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: CertificateJson =
            serde_json::from_str(text).map_err(|e| e.to_string())?;
        let point = doc
            .point
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let coefficients = doc
            .coefficients
            .iter()
            .map(|cs| cs.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PartitionCertificate {
            parts: doc.parts,
            point,
            coefficients,
        })
    }
}
