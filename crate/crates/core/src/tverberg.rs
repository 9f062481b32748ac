//! Exact Tverberg-partition search over rational point configurations:
//! unconstrained, skeleton-bounded, rainbow, and equal-coefficient variants,
//! plus the witness configurations that admit no partition and the
//! pigeonhole audits used by the constrained variants.

use crate::certificate::PartitionCertificate;
use crate::lp::{feasible, FeasibilityProblem, RatMatrix};
use crate::points::{Coloring, PointConfiguration};
use crate::rational::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TverbergError {
    #[error("expected {expected} points, found {found}")]
    BadArity { expected: usize, found: usize },
    #[error("parts overlap at vertex {0}")]
    OverlappingParts(usize),
    #[error("inconsistent search constraints: {0}")]
    InconsistentConstraints(String),
    #[error("about {0} candidate families exceed the exhaustive-search budget")]
    SizeExceeded(u128),
}

/// Restrictions on the faces an admissible partition may use.
#[derive(Clone, Debug, Default)]
pub struct SearchConstraints {
    /// Parts may use at most this many +1 vertices (skeleton restriction).
    pub max_face_dimension: Option<usize>,
    /// Parts must be rainbow: at most one vertex per color class.
    pub rainbow: Option<Coloring>,
    /// Per color class, coefficients must agree across parts (needs rainbow).
    pub equal_coefficients: bool,
}

/// A point in every part's hull, with the convex coefficients realizing it
/// per part.
type PointWithCoefficients = (Vec<Rational>, Vec<Vec<Rational>>);

/// Position of one convex coefficient: (part index, slot within the part).
type CoefficientSlot = (usize, usize);

/// One exact common point of the parts' convex hulls, with the convex
/// coefficients realizing it per part; None when the hulls have empty
/// intersection.
pub fn intersection_point(
    p: &PointConfiguration,
    parts: &[Vec<usize>],
) -> Result<Option<PointWithCoefficients>, TverbergError> {
    let mut seen = vec![false; p.len()];
    for part in parts {
        assert!(!part.is_empty(), "parts must be nonempty");
        for &v in part {
            assert!(v < p.len(), "vertex {v} outside the configuration");
            if seen[v] {
                return Err(TverbergError::OverlappingParts(v));
            }
            seen[v] = true;
        }
    }
    Ok(common_point(p, parts, &[], &[]))
}

/// Feasibility encoding shared by all searches. Variables: one convex
/// coefficient per part member, then the d coordinates of the common point
/// (free). Equalities: each part's coefficients sum to 1; each part's
/// combination equals the common point coordinatewise; one row per
/// coefficient tie (λ_a = λ_b) and per forced zero.
fn common_point(
    p: &PointConfiguration,
    parts: &[Vec<usize>],
    ties: &[(CoefficientSlot, CoefficientSlot)],
    zeros: &[CoefficientSlot],
) -> Option<PointWithCoefficients> {
    let d = p.dimension();
    let r = parts.len();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0usize, |acc, part| {
            let o = *acc;
            *acc += part.len();
            Some(o)
        })
        .collect();
    let lambda_count: usize = parts.iter().map(|p| p.len()).sum();
    let cols = lambda_count + d;
    let rows = r + r * d + ties.len() + zeros.len();

    let mut a = RatMatrix::zero(rows, cols);
    let mut b = vec![Rational::zero(); rows];
    for (i, part) in parts.iter().enumerate() {
        for j in 0..part.len() {
            a.set(i, offsets[i] + j, rat(1));
        }
        b[i] = rat(1);
        for c in 0..d {
            let row = r + i * d + c;
            for (j, &v) in part.iter().enumerate() {
                a.set(row, offsets[i] + j, p.point(v)[c].clone());
            }
            a.set(row, lambda_count + c, rat(-1));
        }
    }
    for (t, &((i1, j1), (i2, j2))) in ties.iter().enumerate() {
        let row = r + r * d + t;
        a.set(row, offsets[i1] + j1, rat(1));
        a.set(row, offsets[i2] + j2, rat(-1));
    }
    for (z, &(i, j)) in zeros.iter().enumerate() {
        let row = r + r * d + ties.len() + z;
        a.set(row, offsets[i] + j, rat(1));
    }

    let mut nonneg = vec![true; cols];
    for flag in nonneg.iter_mut().skip(lambda_count) {
        *flag = false;
    }
    let y = feasible(&FeasibilityProblem::new(a, b, nonneg))?;
    let point = y[lambda_count..].to_vec();
    let coefficients: Vec<Vec<Rational>> = parts
        .iter()
        .zip(&offsets)
        .map(|(part, &o)| y[o..o + part.len()].to_vec())
        .collect();
    Some((point, coefficients))
}

/// Tverberg partition of 2r−1 points on the line, directly from the sorted
/// order: r−1 nested value intervals around the median index, plus the
/// median itself.
pub fn tverberg_line(
    values: &[Rational],
    r: usize,
) -> Result<PartitionCertificate, TverbergError> {
    assert!(r >= 1, "at least one part");
    if values.len() != 2 * r - 1 {
        return Err(TverbergError::BadArity {
            expected: 2 * r - 1,
            found: values.len(),
        });
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b])); // stable: ties keep index order
    let median = values[order[r - 1]].clone();

    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(r);
    let mut coefficients: Vec<Vec<Rational>> = Vec::with_capacity(r);
    for j in 0..r - 1 {
        let lo = order[j];
        let hi = order[2 * r - 2 - j];
        // t·v_lo + (1−t)·v_hi = median; constant intervals take t = 1.
        let (vl, vh) = (&values[lo], &values[hi]);
        let t = if vl == vh {
            Rational::one()
        } else {
            (vh - &median) / (vh - vl)
        };
        let mut pair = vec![(lo, t.clone()), (hi, Rational::one() - &t)];
        pair.sort_by_key(|&(v, _)| v);
        parts.push(pair.iter().map(|&(v, _)| v).collect());
        coefficients.push(pair.into_iter().map(|(_, c)| c).collect());
    }
    parts.push(vec![order[r - 1]]);
    coefficients.push(vec![Rational::one()]);

    let cert = PartitionCertificate {
        parts,
        point: vec![median],
        coefficients,
    };
    let config = PointConfiguration::new(1, values.iter().map(|v| vec![v.clone()]).collect());
    cert.verify(&config)
        .expect("line certificates verify by construction");
    Ok(cert)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SupportMode {
    /// No coefficient coupling.
    Plain,
    /// All parts carry identical color supports; coefficients tied per color.
    Identical,
    /// Arbitrary rainbow supports; colors missing from any part are forced
    /// to coefficient zero everywhere.
    Padded,
}

struct Search<'a> {
    p: &'a PointConfiguration,
    r: usize,
    max_size: usize,
    color_of: Vec<Option<usize>>,
    rainbow: Option<&'a Coloring>,
    mode: SupportMode,
    used: Vec<bool>,
    parts: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// Bounding boxes of the completed parts' hulls must share a point;
    /// their hulls lie inside them, so an empty box intersection rules out
    /// every extension of this family prefix.
    fn boxes_intersect(&self) -> bool {
        let d = self.p.dimension();
        for c in 0..d {
            let mut lo: Option<Rational> = None;
            let mut hi: Option<Rational> = None;
            for part in &self.parts {
                let mut pmin = self.p.point(part[0])[c].clone();
                let mut pmax = pmin.clone();
                for &v in &part[1..] {
                    let x = &self.p.point(v)[c];
                    if *x < pmin {
                        pmin = x.clone();
                    }
                    if *x > pmax {
                        pmax = x.clone();
                    }
                }
                lo = Some(match lo {
                    Some(l) => l.max(pmin),
                    None => pmin,
                });
                hi = Some(match hi {
                    Some(h) => h.min(pmax),
                    None => pmax,
                });
            }
            if let (Some(l), Some(h)) = (&lo, &hi) {
                if l > h {
                    return false;
                }
            }
        }
        true
    }

    fn support(&self, part: &[usize]) -> Vec<usize> {
        let mut s: Vec<usize> = part.iter().filter_map(|&v| self.color_of[v]).collect();
        s.sort_unstable();
        s
    }

    /// Whether the just-finished part is allowed to complete under the
    /// support discipline.
    fn completion_allowed(&self) -> bool {
        if self.mode != SupportMode::Identical || self.parts.len() <= 1 {
            return true;
        }
        self.support(&self.parts[0]) == self.support(self.parts.last().unwrap())
    }

    fn admits(&self, part: &[usize], v: usize) -> bool {
        if self.used[v] || part.len() >= self.max_size {
            return false;
        }
        match (&self.rainbow, self.color_of[v]) {
            (Some(_), Some(color)) => !part
                .iter()
                .any(|&u| self.color_of[u] == Some(color)),
            _ => true,
        }
    }

    /// Starts parts at every admissible minimum above `min_floor`, in order.
    fn place_parts(&mut self, min_floor: Option<usize>) -> Option<PartitionCertificate> {
        if self.parts.len() == self.r {
            return self.test_family();
        }
        if !self.boxes_intersect() {
            return None;
        }
        let n = self.p.len();
        let needed = self.r - self.parts.len();
        let start = min_floor.map_or(0, |m| m + 1);
        for m in start..n {
            if self.used[m] {
                continue;
            }
            // Future parts all start above m; count the room left.
            let room = (m..n).filter(|&v| !self.used[v]).count();
            if room < needed {
                break;
            }
            if !self.admits(&[], m) {
                continue;
            }
            self.used[m] = true;
            self.parts.push(vec![m]);
            let hit = self.grow(m);
            self.parts.pop();
            self.used[m] = false;
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    /// Lexicographic face enumeration: the current part is tried as
    /// complete, then extended by each larger unused admissible vertex.
    fn grow(&mut self, part_min: usize) -> Option<PartitionCertificate> {
        if self.completion_allowed() {
            if let Some(hit) = self.place_parts(Some(part_min)) {
                return Some(hit);
            }
        }
        let n = self.p.len();
        let last = *self.parts.last().unwrap().last().unwrap();
        for v in last + 1..n {
            let ok = {
                let part = self.parts.last().unwrap();
                self.admits(part, v)
            };
            if !ok {
                continue;
            }
            self.used[v] = true;
            self.parts.last_mut().unwrap().push(v);
            let hit = self.grow(part_min);
            self.parts.last_mut().unwrap().pop();
            self.used[v] = false;
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    fn test_family(&mut self) -> Option<PartitionCertificate> {
        if !self.boxes_intersect() {
            return None;
        }
        let mut ties: Vec<((usize, usize), (usize, usize))> = Vec::new();
        let mut zeros: Vec<(usize, usize)> = Vec::new();
        if self.mode != SupportMode::Plain {
            let classes = self.rainbow.expect("coupled modes carry a coloring").classes();
            for color in 0..classes.len() {
                let reps: Vec<(usize, usize)> = self
                    .parts
                    .iter()
                    .enumerate()
                    .filter_map(|(i, part)| {
                        part.iter()
                            .position(|&v| self.color_of[v] == Some(color))
                            .map(|j| (i, j))
                    })
                    .collect();
                if reps.len() == self.r {
                    for &later in &reps[1..] {
                        ties.push((reps[0], later));
                    }
                } else if !reps.is_empty() {
                    debug_assert!(
                        self.mode == SupportMode::Padded,
                        "identical supports admit no partial colors"
                    );
                    zeros.extend(reps);
                }
            }
        }
        let (point, coefficients) = common_point(self.p, &self.parts, &ties, &zeros)?;
        Some(PartitionCertificate {
            parts: self.parts.clone(),
            point,
            coefficients,
        })
    }
}

/// First Tverberg partition in canonical order, or None after exhausting
/// every admissible family. Families are ordered by sorting parts by their
/// minimum vertex and comparing the part sequences lexicographically.
pub fn tverberg_search(
    p: &PointConfiguration,
    r: usize,
    constraints: &SearchConstraints,
) -> Result<Option<PartitionCertificate>, TverbergError> {
    assert!(r >= 2, "searching for at least two parts");
    if constraints.equal_coefficients && constraints.rainbow.is_none() {
        return Err(TverbergError::InconsistentConstraints(
            "equal coefficients are defined per color class and need a coloring".into(),
        ));
    }
    if let Some(coloring) = &constraints.rainbow {
        if !coloring.partitions(p.len()) {
            return Err(TverbergError::InconsistentConstraints(format!(
                "coloring does not partition the {} vertices",
                p.len()
            )));
        }
    }
    let color_of: Vec<Option<usize>> = (0..p.len())
        .map(|v| constraints.rainbow.as_ref().and_then(|c| c.color_of(v)))
        .collect();
    let max_size = constraints
        .max_face_dimension
        .map_or(p.len(), |k| k + 1);
    if max_size == 0 {
        return Err(TverbergError::InconsistentConstraints(
            "skeleton bound leaves no usable faces".into(),
        ));
    }

    let modes: &[SupportMode] = if constraints.equal_coefficients {
        &[SupportMode::Identical, SupportMode::Padded]
    } else {
        &[SupportMode::Plain]
    };
    for &mode in modes {
        let mut search = Search {
            p,
            r,
            max_size,
            color_of: color_of.clone(),
            rainbow: constraints.rainbow.as_ref(),
            mode,
            used: vec![false; p.len()],
            parts: Vec::new(),
        };
        if let Some(cert) = search.place_parts(None) {
            cert.verify(p).expect("search certificates verify by construction");
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// The configuration admitting no r-part partition: each of the d+1 points
/// 0, e_1, …, e_d repeated r−1 times, indexed block by block.
pub fn witness_configuration(d: usize, r: usize) -> PointConfiguration {
    assert!(d >= 1 && r >= 2);
    let points = (0..(d + 1) * (r - 1))
        .map(|i| {
            let block = i / (r - 1);
            (1..=d)
                .map(|c| if c == block { rat(1) } else { rat(0) })
                .collect()
        })
        .collect();
    PointConfiguration::new(d, points)
}

/// Number of unordered families of r disjoint nonempty parts over n labeled
/// vertices (vertices may stay unused): surjection-style inclusion-exclusion
/// over empty parts, divided by r!.
fn family_count(n: usize, r: usize) -> BigInt {
    let mut total = BigInt::zero();
    let mut choose = BigInt::one();
    for j in 0..=r {
        let term = &choose * BigInt::from((r + 1 - j) as u64).pow(n as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        choose = choose * BigInt::from((r - j) as u64) / BigInt::from((j + 1) as u64);
    }
    let mut rfact = BigInt::one();
    for k in 2..=r {
        rfact *= BigInt::from(k as u64);
    }
    total / rfact
}

/// True when the unconstrained search proves no Tverberg partition exists.
/// Refuses configurations whose candidate-family count exceeds 10^7.
pub fn verify_no_partition(p: &PointConfiguration, r: usize) -> Result<bool, TverbergError> {
    let count = family_count(p.len(), r);
    if count > BigInt::from(10_000_000u64) {
        let approx = u128::try_from(&count).unwrap_or(u128::MAX);
        return Err(TverbergError::SizeExceeded(approx));
    }
    Ok(tverberg_search(p, r, &SearchConstraints::default())?.is_none())
}

/// Symbolic evaluation of the two pigeonhole inequalities behind the
/// constrained searches, for N = (d+2)(r−1) points-plus-one setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingAudit {
    pub d: usize,
    pub r: usize,
    pub k: usize,
    /// Ambient simplex dimension N = (d+2)(r−1).
    pub ambient_dimension: usize,
    /// r(k+2): the least total vertex count if every part avoided sk_k.
    pub skeleton_lhs: usize,
    /// N+2: the vertex budget that total would have to fit inside.
    pub skeleton_rhs: usize,
    /// Whether r(k+2) ≥ N+2 forces some part into the k-skeleton.
    pub skeleton_forced: bool,
    /// The least k the skeleton argument supports: ⌈(r−1)d/r⌉.
    pub skeleton_bound: usize,
    /// 2r−1: the color-class size cap.
    pub color_lhs: usize,
    /// 2r: the least class size if every part met the class twice.
    pub color_rhs: usize,
    /// Whether 2r−1 < 2r forces some part to meet each class at most once.
    pub color_forced: bool,
}

pub fn counting_audit(d: usize, r: usize, k: usize) -> CountingAudit {
    assert!(d >= 1 && r >= 1 && k >= 1, "parameters are positive");
    let ambient = (d + 2) * (r - 1);
    let skeleton_lhs = r * (k + 2);
    let skeleton_rhs = ambient + 2;
    CountingAudit {
        d,
        r,
        k,
        ambient_dimension: ambient,
        skeleton_lhs,
        skeleton_rhs,
        skeleton_forced: skeleton_lhs >= skeleton_rhs,
        skeleton_bound: ((r - 1) * d).div_ceil(r),
        color_lhs: 2 * r - 1,
        color_rhs: 2 * r,
        color_forced: 2 * r - 1 < 2 * r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn config_1d(values: &[i64]) -> PointConfiguration {
        PointConfiguration::new(1, values.iter().map(|&v| vec![rat(v)]).collect())
    }

    fn config_2d(points: &[(i64, i64)]) -> PointConfiguration {
        PointConfiguration::new(
            2,
            points.iter().map(|&(x, y)| vec![rat(x), rat(y)]).collect(),
        )
    }

    #[test]
    fn line_midpoint() {
        let cert = tverberg_line(&[rat(0), rat(1), rat(2)], 2).unwrap();
        assert_eq!(cert.parts, vec![vec![0, 2], vec![1]]);
        assert_eq!(cert.point, vec![rat(1)]);
    }

    #[test]
    fn line_three_parts() {
        let values = vec![rat(3), rat(1), rat(4), rat(1), rat(5)];
        let cert = tverberg_line(&values, 3).unwrap();
        assert_eq!(cert.parts, vec![vec![1, 4], vec![2, 3], vec![0]]);
        assert_eq!(cert.point, vec![rat(3)]);
        assert_eq!(cert.coefficients[0], vec![ratio(1, 2), ratio(1, 2)]);
        // Part {2,3} sorted: vertex 2 (value 4) carries 2/3? t on the low
        // value 1 is (4−3)/(4−1) = 1/3, so vertex 3 gets 1/3 and vertex 2
        // gets... t·1 + (1−t)·4 = 3 with t = 1/3: lo coefficient 1/3 on
        // vertex 3, hi 2/3 on vertex 2.
        assert_eq!(cert.coefficients[1], vec![ratio(2, 3), ratio(1, 3)]);
    }

    #[test]
    fn line_constant_values_degenerate() {
        let cert = tverberg_line(&vec![rat(0); 5], 3).unwrap();
        assert_eq!(cert.point, vec![rat(0)]);
        assert_eq!(cert.parts.len(), 3);
    }

    #[test]
    fn line_arity_is_checked() {
        assert_eq!(
            tverberg_line(&[rat(0), rat(1)], 2),
            Err(TverbergError::BadArity {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn intersection_of_witness_halves() {
        let p = witness_configuration(2, 3);
        let hit = intersection_point(&p, &[vec![0, 2, 4], vec![1, 3, 5]])
            .unwrap()
            .expect("the two copies of the triangle intersect");
        let (point, coeffs) = hit;
        assert_eq!(point.len(), 2);
        assert_eq!(coeffs.len(), 2);
    }

    #[test]
    fn intersection_of_separated_segments_is_absent() {
        let p = config_1d(&[0, 1, 2, 3]);
        let hit = intersection_point(&p, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(hit.is_none());
    }

    #[test]
    fn overlapping_parts_are_rejected() {
        let p = config_1d(&[0, 1, 2]);
        assert_eq!(
            intersection_point(&p, &[vec![0, 1], vec![1, 2]]),
            Err(TverbergError::OverlappingParts(1))
        );
    }

    #[test]
    fn coincident_points_give_singleton_parts() {
        let p = config_2d(&[(1, 1), (1, 1), (1, 1), (0, 0), (5, 0), (0, 5), (9, 9)]);
        let cert = tverberg_search(&p, 3, &SearchConstraints::default())
            .unwrap()
            .expect("three coincident points");
        assert_eq!(cert.parts, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cert.point, vec![rat(1), rat(1)]);
    }

    #[test]
    fn search_agrees_with_radon_on_small_inputs() {
        use crate::radon::radon_partition;
        let p = config_2d(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let cert = tverberg_search(&p, 2, &SearchConstraints::default())
            .unwrap()
            .expect("d+2 points always split");
        assert_eq!(cert.verify(&p), Ok(()));
        assert!(radon_partition(&p).is_ok());
    }

    #[test]
    fn skeleton_constraint_bounds_part_sizes() {
        let p = config_1d(&[0, 0, 0, 0]);
        let constraints = SearchConstraints {
            max_face_dimension: Some(0),
            ..Default::default()
        };
        let cert = tverberg_search(&p, 2, &constraints).unwrap().unwrap();
        assert!(cert.parts.iter().all(|part| part.len() == 1));
    }

    #[test]
    fn rainbow_constraint_limits_color_use() {
        // Lovász-style setting: three color pairs around the origin.
        let p = config_2d(&[(1, 0), (-1, 0), (0, 1), (0, -1), (2, 2), (-2, -2)]);
        let coloring = Coloring::new(vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let constraints = SearchConstraints {
            rainbow: Some(coloring.clone()),
            ..Default::default()
        };
        let cert = tverberg_search(&p, 2, &constraints)
            .unwrap()
            .expect("a rainbow Radon pair exists");
        for part in &cert.parts {
            for color in coloring.classes() {
                let used = part.iter().filter(|v| color.contains(v)).count();
                assert!(used <= 1, "part {part:?} doubles a color");
            }
        }
        assert_eq!(cert.verify(&p), Ok(()));
    }

    #[test]
    fn equal_coefficients_reproduce_the_balanced_split() {
        // Classes {0@0, 1@2} and {2@1, 3@3} on the line.
        let p = config_1d(&[0, 2, 1, 3]);
        let coloring = Coloring::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let constraints = SearchConstraints {
            rainbow: Some(coloring),
            equal_coefficients: true,
            ..Default::default()
        };
        let cert = tverberg_search(&p, 2, &constraints)
            .unwrap()
            .expect("the balanced split exists");
        assert_eq!(cert.parts, vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(cert.point, vec![ratio(3, 2)]);
        assert_eq!(cert.coefficients[0], vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(cert.coefficients[1], vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn equal_coefficients_without_coloring_is_inconsistent() {
        let p = config_1d(&[0, 1, 2]);
        let constraints = SearchConstraints {
            equal_coefficients: true,
            ..Default::default()
        };
        assert!(matches!(
            tverberg_search(&p, 2, &constraints),
            Err(TverbergError::InconsistentConstraints(_))
        ));
    }

    #[test]
    fn partial_coloring_is_inconsistent() {
        let p = config_1d(&[0, 1, 2]);
        let constraints = SearchConstraints {
            rainbow: Some(Coloring::new(vec![vec![0, 1]]).unwrap()),
            ..Default::default()
        };
        assert!(matches!(
            tverberg_search(&p, 2, &constraints),
            Err(TverbergError::InconsistentConstraints(_))
        ));
    }

    #[test]
    fn witness_points_repeat_in_blocks() {
        let p = witness_configuration(2, 3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.point(0), &[rat(0), rat(0)]);
        assert_eq!(p.point(1), &[rat(0), rat(0)]);
        assert_eq!(p.point(2), &[rat(1), rat(0)]);
        assert_eq!(p.point(3), &[rat(1), rat(0)]);
        assert_eq!(p.point(4), &[rat(0), rat(1)]);
        assert_eq!(p.point(5), &[rat(0), rat(1)]);
        assert_eq!(witness_configuration(1, 2).points(), &[vec![rat(0)], vec![rat(1)]]);
        let p32 = witness_configuration(3, 2);
        assert_eq!(p32.len(), 4);
        assert_eq!(p32.point(3), &[rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn witness_configurations_admit_no_partition() {
        assert_eq!(verify_no_partition(&witness_configuration(2, 3), 3), Ok(true));
        assert_eq!(verify_no_partition(&witness_configuration(1, 4), 4), Ok(true));
        assert_eq!(verify_no_partition(&witness_configuration(3, 2), 2), Ok(true));
    }

    #[test]
    fn one_more_point_restores_the_partition() {
        // (d+1)(r−1)+1 generic points: Tverberg's theorem applies.
        let p = config_2d(&[(0, 0), (7, 1), (3, 9), (10, 6), (1, 5), (8, 8), (5, 3)]);
        assert_eq!(verify_no_partition(&p, 3), Ok(false));
    }

    #[test]
    fn family_counts_match_closed_forms() {
        for (n, r, expected) in [
            (6usize, 3usize, 350u64),
            (6, 4, 140),
            (4, 2, 25),
            (4, 3, 10),
            (3, 2, 6),
        ] {
            assert_eq!(family_count(n, r), BigInt::from(expected), "n={n} r={r}");
        }
    }

    #[test]
    fn oversized_enumerations_are_refused() {
        let p = config_1d(&[0; 30]);
        assert!(matches!(
            verify_no_partition(&p, 5),
            Err(TverbergError::SizeExceeded(_))
        ));
    }

    #[test]
    fn audit_examples() {
        let a = counting_audit(2, 2, 1);
        assert_eq!(a.ambient_dimension, 4);
        assert_eq!((a.skeleton_lhs, a.skeleton_rhs), (6, 6));
        assert!(a.skeleton_forced);
        assert_eq!(a.skeleton_bound, 1);
        assert!(a.color_forced);

        let b = counting_audit(2, 3, 2);
        assert_eq!((b.skeleton_lhs, b.skeleton_rhs), (12, 10));
        assert!(b.skeleton_forced);

        let c = counting_audit(2, 3, 1);
        assert_eq!((c.skeleton_lhs, c.skeleton_rhs), (9, 10));
        assert!(!c.skeleton_forced);
        assert_eq!(c.skeleton_bound, 2);
    }
}
