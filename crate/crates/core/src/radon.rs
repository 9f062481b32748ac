//! Radon partitions of d+2 points via the homogeneous kernel system.

use crate::certificate::PartitionCertificate;
use crate::lp::{kernel_basis, RatMatrix};
use crate::points::PointConfiguration;
use crate::rational::Rational;
use crate::tverberg::TverbergError;
use num_traits::{Signed, Zero};

/// Splits d+2 points into two parts with intersecting hulls.
///
/// A nonzero solution a of the (d+1)×(d+2) system {Σ a_i x_i = 0, Σ a_i = 0}
/// exists by dimension count; the strictly-positive indices and the
/// strictly-negative indices each give a convex combination of the same
/// point after normalizing by A = Σ_{a_i>0} a_i. Zero coefficients join
/// neither part.
pub fn radon_partition(p: &PointConfiguration) -> Result<PartitionCertificate, TverbergError> {
    let d = p.dimension();
    let n = p.len();
    if n != d + 2 {
        return Err(TverbergError::BadArity {
            expected: d + 2,
            found: n,
        });
    }

    let mut a = RatMatrix::zero(d + 1, n);
    for j in 0..n {
        for c in 0..d {
            a.set(c, j, p.point(j)[c].clone());
        }
        a.set(d, j, Rational::from_integer(1.into()));
    }
    let basis = kernel_basis(&a);
    let mut v = basis
        .into_iter()
        .next()
        .expect("d+2 columns and d+1 rows leave a nontrivial kernel");
    // Sign-normalize: first nonzero coordinate positive.
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }

    let pos: Vec<usize> = (0..n).filter(|&i| v[i].is_positive()).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| v[i].is_negative()).collect();
    debug_assert!(!pos.is_empty() && !neg.is_empty(), "kernel row sums to zero");

    let total: Rational = pos.iter().map(|&i| v[i].clone()).fold(Rational::zero(), |x, y| x + y);
    let point: Vec<Rational> = (0..d)
        .map(|c| {
            pos.iter()
                .map(|&i| &v[i] / &total * &p.point(i)[c])
                .fold(Rational::zero(), |x, y| x + y)
        })
        .collect();
    let pos_coeffs: Vec<Rational> = pos.iter().map(|&i| &v[i] / &total).collect();
    let neg_coeffs: Vec<Rational> = neg.iter().map(|&i| -(&v[i] / &total)).collect();

    let cert = PartitionCertificate {
        parts: vec![pos, neg],
        point,
        coefficients: vec![pos_coeffs, neg_coeffs],
    };
    cert.verify(p).expect("radon certificates verify by construction");
    Ok(cert)
}
