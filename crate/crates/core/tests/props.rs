//! Property tests for the structural invariants of the kernel types:
//! randomized inputs, exact assertions.

mod common;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::basic_solution_feasible;
use tvlab_core::homology::homology_of_complex;
use tvlab_core::rational::ratio;
use tvlab_core::{
    chessboard, deleted_join, euler_characteristic, feasible, kernel_basis, radon_partition,
    smith_normal_form, tverberg_line, tverberg_search, Coefficients, FeasibilityProblem,
    IntMatrix, PartitionCertificate, PointConfiguration, RatMatrix, Rational, SearchConstraints,
    Simplex, SimplicialComplex,
};

// ------------------------------------------------------------- strategies

fn complex_strategy(max_v: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_v).prop_flat_map(|vc| {
        proptest::collection::vec(proptest::bool::weighted(0.35), 1usize << vc).prop_map(
            move |flags| {
                let mut faces: Vec<Simplex> = (0..vc).map(|v| Simplex::new(vec![v])).collect();
                for (mask, &keep) in flags.iter().enumerate() {
                    if keep && (mask as u32).count_ones() >= 2 {
                        faces.push(Simplex::new(
                            (0..vc).filter(|&v| mask >> v & 1 == 1).collect(),
                        ));
                    }
                }
                SimplicialComplex::from_faces(vc, faces)
            },
        )
    })
}

fn int_matrix_strategy(max_size: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_size, 1..=max_size).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
            .prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn rational_strategy(num_bound: i64, den_bound: i64) -> impl Strategy<Value = Rational> {
    (-num_bound..=num_bound, 1..=den_bound).prop_map(|(n, d)| ratio(n, d))
}

fn points_strategy(d: usize, n: usize) -> impl Strategy<Value = PointConfiguration> {
    proptest::collection::vec(
        proptest::collection::vec(rational_strategy(50, 8), d),
        n,
    )
    .prop_map(move |points| PointConfiguration::new(d, points))
}

// ------------------------------------------------------------- properties

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The Euler characteristic equals the alternating sum of the Betti
    /// numbers; torsion never contributes.
    #[test]
    fn euler_characteristic_is_alternating_betti_sum(k in complex_strategy(6)) {
        let summary = homology_of_complex(&k, Coefficients::Integers);
        let mut alternating = 0i64;
        for q in 0..=(k.dim().max(0) as usize) {
            let term = summary.betti(q) as i64;
            alternating += if q % 2 == 0 { term } else { -term };
        }
        prop_assert_eq!(euler_characteristic(&k), alternating);
    }

    /// Smith decompositions reconstruct the input through unimodular
    /// factors and produce a nonnegative divisibility chain.
    #[test]
    fn smith_decomposition_reconstructs_and_divides(m in int_matrix_strategy(5, 12)) {
        let dec = smith_normal_form(&m);
        prop_assert_eq!(dec.u.mul(&m).mul(&dec.v), dec.d.clone());
        prop_assert_eq!(dec.u.mul(&dec.u_inv), IntMatrix::identity(m.rows()));
        prop_assert_eq!(dec.v.mul(&dec.v_inv), IntMatrix::identity(m.cols()));
        prop_assert!(dec.u.determinant().abs().is_one());
        prop_assert!(dec.v.determinant().abs().is_one());
        let diag = dec.d.diagonal();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert!(i == j || dec.d.get(i, j).is_zero());
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_zero() || w[1].is_zero());
            prop_assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
        for d in &diag {
            prop_assert!(!d.is_negative());
        }
    }

    /// Every kernel basis vector is nonzero and annihilated by the matrix,
    /// and the basis is at least as large as the rank bound demands.
    #[test]
    fn kernel_basis_vectors_are_annihilated(
        rows in proptest::collection::vec(
            proptest::collection::vec(rational_strategy(6, 2), 5), 1..=4usize)
    ) {
        let cols = rows[0].len();
        let a = RatMatrix::from_rows(&rows);
        let basis = kernel_basis(&a);
        prop_assert!(basis.len() >= cols.saturating_sub(a.rows()));
        for v in &basis {
            prop_assert!(v.iter().any(|c| !c.is_zero()));
            prop_assert!(a.mul_vec(v).iter().all(|c| c.is_zero()));
        }
    }

    /// Radon partitions exist for any d+2 points and verify exactly, and
    /// their certificates survive a JSON round trip.
    #[test]
    fn radon_certificates_verify_and_roundtrip(
        (d, pts) in (1..=4usize).prop_flat_map(|d| (Just(d), points_strategy(d, d + 2)))
    ) {
        let _ = d;
        let cert = radon_partition(&pts).expect("d+2 points always split");
        prop_assert!(cert.verify(&pts).is_ok());
        prop_assert_eq!(cert.parts.len(), 2);
        let back = PartitionCertificate::from_json(&cert.to_json()).expect("round trip");
        prop_assert_eq!(back.parts, cert.parts);
        prop_assert_eq!(back.point, cert.point);
        prop_assert_eq!(back.coefficients, cert.coefficients);
    }

    /// On 2r-1 points of a line with small repeated values, the direct
    /// sorted-order construction and the exhaustive search agree that a
    /// partition exists, and both certificates verify.
    #[test]
    fn line_partition_agrees_with_exhaustive_search(
        (r, values) in (2..=4usize)
            .prop_flat_map(|r| (Just(r), proptest::collection::vec(0i64..=3, 2 * r - 1)))
    ) {
        let rationals: Vec<Rational> = values.iter().map(|&v| ratio(v, 1)).collect();
        let pts = PointConfiguration::new(1, rationals.iter().map(|v| vec![v.clone()]).collect());
        let direct = tverberg_line(&rationals, r).expect("arity matches");
        prop_assert!(direct.verify(&pts).is_ok());
        prop_assert_eq!(direct.parts.len(), r);
        let searched = tverberg_search(&pts, r, &SearchConstraints::default())
            .expect("unconstrained search never errors");
        let searched = searched.expect("search agrees a partition exists");
        prop_assert!(searched.verify(&pts).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Simplex feasibility verdicts agree with basic-solution enumeration,
    /// and any returned point satisfies the system exactly.
    #[test]
    fn feasibility_agrees_with_basic_solution_enumeration(
        (rows, b, nonneg) in (1..=3usize, 1..=4usize).prop_flat_map(|(m, n)| (
            proptest::collection::vec(
                proptest::collection::vec(rational_strategy(4, 3), n), m),
            proptest::collection::vec(rational_strategy(4, 3), m),
            proptest::collection::vec(any::<bool>(), n),
        ))
    ) {
        let a = RatMatrix::from_rows(&rows);
        let oracle = basic_solution_feasible(&a, &b, &nonneg);
        let problem = FeasibilityProblem::new(a, b, nonneg);
        let verdict = feasible(&problem);
        prop_assert_eq!(verdict.is_some(), oracle);
        if let Some(x) = verdict {
            prop_assert_eq!(problem.a.mul_vec(&x), problem.b);
            for (v, &flag) in x.iter().zip(&problem.nonnegative) {
                prop_assert!(!flag || !v.is_negative());
            }
        }
    }
}

// ------------------------------------------------- deterministic families

/// Facets of the m x n board are exactly the maximal non-attacking rook
/// placements: n!/(n-m)! of them for m <= n, each with distinct rows and
/// distinct columns.
#[test]
fn chessboard_facets_are_rook_placements() {
    for m in 1..=6usize {
        for n in m..=6usize {
            let board = chessboard(m, n);
            let falling: usize = (n - m + 1..=n).product();
            assert_eq!(board.facets().len(), falling, "m = {m}, n = {n}");
            for facet in board.facets() {
                assert_eq!(facet.len(), m);
                let rows: std::collections::HashSet<_> =
                    facet.vertices().iter().map(|v| v / n).collect();
                let cols: std::collections::HashSet<_> =
                    facet.vertices().iter().map(|v| v % n).collect();
                assert_eq!(rows.len(), m, "repeated row in {facet:?}");
                assert_eq!(cols.len(), m, "repeated column in {facet:?}");
            }
        }
    }
}

/// The 2-wise deleted join of a full simplex keeps its dimension and
/// multiplies the vertex count by the number of factors.
#[test]
fn deleted_join_of_simplex_has_expected_shape() {
    for n in 0..=3usize {
        for r in 2..=4usize {
            let (dj, action) = deleted_join(&SimplicialComplex::full_simplex(n), r, 2);
            assert_eq!(dj.vertex_count(), r * (n + 1), "n = {n}, r = {r}");
            assert_eq!(dj.dim(), n as i64, "n = {n}, r = {r}");
            assert_eq!(action.generators.len(), r - 1);
        }
    }
}
