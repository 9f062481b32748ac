//! Verification suites behind `tvlab verify`. Every suite is a fixed list
//! of checks; randomized checks derive their generator from the base seed
//! and the check id, so reports are byte-identical for equal seeds and
//! independent of `--jobs` and completion order.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::time::Instant;

use tvlab_core::homology::homology_of_complex;
use tvlab_core::rational::ratio;
use tvlab_core::{
    are_isomorphic, chessboard, chessboard_actions, deleted_join, deleted_product_chain,
    equivariant_collapse_chessboard, euler_characteristic, feasible, fundamental_cycle_chessboard,
    homology, quotient_complex, radon_partition, reduced_vanishes_up_to, simplex_boundary_cycle,
    simplicial_map_degree, smith_normal_form, tverberg_search, verify_no_partition,
    witness_configuration, Coefficients, Coloring, FeasibilityProblem, HomologySummary, IntMatrix,
    PartitionCertificate, PointConfiguration, RatMatrix, Rational, SearchConstraints, Simplex,
    SimplicialChains, SimplicialComplex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    ChessboardConnectivity,
    DeletedJoinIso,
    DeletedProductConnectivity,
    DegreeFactorial,
    RadonRandom,
    TverbergRandom,
    WitnessNone,
    Colored,
    Soberon,
    Collapse,
    QuotientEuler,
    SnfProps,
    LpOracle,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::ChessboardConnectivity => "chessboard-connectivity",
            SuiteName::DeletedJoinIso => "deleted-join-iso",
            SuiteName::DeletedProductConnectivity => "deleted-product-connectivity",
            SuiteName::DegreeFactorial => "degree-factorial",
            SuiteName::RadonRandom => "radon-random",
            SuiteName::TverbergRandom => "tverberg-random",
            SuiteName::WitnessNone => "witness-none",
            SuiteName::Colored => "colored",
            SuiteName::Soberon => "soberon",
            SuiteName::Collapse => "collapse",
            SuiteName::QuotientEuler => "quotient-euler",
            SuiteName::SnfProps => "snf-props",
            SuiteName::LpOracle => "lp-oracle",
        }
    }
}

pub struct SuiteConfig {
    pub seed: u64,
    pub jobs: usize,
    pub timing: bool,
    pub primes: Vec<usize>,
    pub dense_rationals: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub parameters: Value,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn human_table(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut rows: Vec<[String; 4]> = vec![[
            "id".into(),
            "pass".into(),
            "expected".into(),
            "observed".into(),
        ]];
        for c in &self.checks {
            rows.push([
                c.id.clone(),
                if c.pass { "ok".into() } else { "FAIL".into() },
                c.expected.to_string(),
                c.observed.to_string(),
            ]);
        }
        let mut width = [0usize; 4];
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = format!(
            "suite {}: {} ({} checks, seed {})\n",
            self.suite,
            verdict,
            self.checks.len(),
            self.seed
        );
        for (i, row) in rows.iter().enumerate() {
            let mut line = String::new();
            for (w, cell) in width.iter().zip(row) {
                line.push_str(&format!("{cell:<w$}  "));
            }
            out.push_str(line.trim_end());
            if let Some(ms) = self.checks.get(i.wrapping_sub(1)).and_then(|c| c.elapsed_ms) {
                if i > 0 {
                    out.push_str(&format!("  {ms}ms"));
                }
            }
            out.push('\n');
        }
        out
    }
}

type CheckFn = Box<dyn Fn(&mut ChaCha8Rng) -> (Value, bool) + Send + Sync>;

struct Check {
    id: String,
    parameters: Value,
    expected: Value,
    run: CheckFn,
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn rng_for(seed: u64, id: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(fnv1a(id)))
}

pub fn run(name: SuiteName, config: &SuiteConfig) -> anyhow::Result<Report> {
    let dense = config.dense_rationals;
    let checks = match name {
        SuiteName::ChessboardConnectivity => chessboard_connectivity_checks(),
        SuiteName::DeletedJoinIso => deleted_join_iso_checks(),
        SuiteName::DeletedProductConnectivity => deleted_product_checks(),
        SuiteName::DegreeFactorial => degree_factorial_checks(&config.primes),
        SuiteName::RadonRandom => radon_random_checks(dense),
        SuiteName::TverbergRandom => tverberg_random_checks(dense),
        SuiteName::WitnessNone => witness_none_checks(),
        SuiteName::Colored => colored_checks(dense),
        SuiteName::Soberon => soberon_checks(dense),
        SuiteName::Collapse => collapse_checks(),
        SuiteName::QuotientEuler => quotient_euler_checks(),
        SuiteName::SnfProps => snf_props_checks(),
        SuiteName::LpOracle => lp_oracle_checks(dense),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()?;
    let seed = config.seed;
    let timing = config.timing;
    let records: Vec<CheckRecord> = pool.install(|| {
        checks
            .par_iter()
            .map(|check| {
                let mut rng = rng_for(seed, &check.id);
                let start = Instant::now();
                let (observed, pass) = (check.run)(&mut rng);
                CheckRecord {
                    id: check.id.clone(),
                    parameters: check.parameters.clone(),
                    expected: check.expected.clone(),
                    observed,
                    pass,
                    elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
                }
            })
            .collect()
    });
    Ok(Report {
        suite: name.as_str().to_string(),
        seed: config.seed,
        pass: records.iter().all(|r| r.pass),
        checks: records,
    })
}

// ---------------------------------------------------------------- helpers

fn random_rational(rng: &mut ChaCha8Rng, dense: bool) -> Rational {
    let num = rng.gen_range(-100..=100);
    let den = if dense { rng.gen_range(1..=10) } else { 1 };
    ratio(num, den)
}

fn random_points(rng: &mut ChaCha8Rng, d: usize, n: usize, dense: bool) -> PointConfiguration {
    let points = (0..n)
        .map(|_| (0..d).map(|_| random_rational(rng, dense)).collect())
        .collect();
    PointConfiguration::new(d, points)
}

/// Random complex covering all of its 1..=max_v vertices.
fn random_complex(rng: &mut ChaCha8Rng, max_v: usize) -> SimplicialComplex {
    let vc = rng.gen_range(1..=max_v);
    let mut faces: Vec<Simplex> = (0..vc).map(|v| Simplex::new(vec![v])).collect();
    for mask in 1u32..(1 << vc) {
        if mask.count_ones() >= 2 && rng.gen_bool(0.35) {
            faces.push(Simplex::new(
                (0..vc).filter(|&v| mask >> v & 1 == 1).collect(),
            ));
        }
    }
    SimplicialComplex::from_faces(vc, faces)
}

fn summaries_agree(a: &HomologySummary, b: &HomologySummary) -> bool {
    let top = a.groups.len().max(b.groups.len());
    (0..top).all(|q| a.betti(q) == b.betti(q) && a.torsion(q) == b.torsion(q))
}

fn is_rainbow(cert: &PartitionCertificate, coloring: &Coloring) -> bool {
    cert.parts.iter().all(|part| {
        let mut seen = std::collections::HashSet::new();
        part.iter()
            .all(|&v| seen.insert(coloring.color_of(v).expect("coloring covers all vertices")))
    })
}

/// Per color class, the coefficient (0 when the class is absent from the
/// part) must agree across all parts.
fn has_equal_class_coefficients(cert: &PartitionCertificate, coloring: &Coloring) -> bool {
    let per_part: Vec<HashMap<usize, Rational>> = cert
        .parts
        .iter()
        .zip(&cert.coefficients)
        .map(|(part, coeffs)| {
            part.iter()
                .zip(coeffs)
                .map(|(&v, c)| (coloring.color_of(v).expect("covered"), c.clone()))
                .collect()
        })
        .collect();
    let zero = Rational::zero();
    (0..coloring.classes().len()).all(|class| {
        let first = per_part[0].get(&class).unwrap_or(&zero);
        per_part.iter().all(|m| m.get(&class).unwrap_or(&zero) == first)
    })
}

// ----------------------------------------------------------------- suites

/// Reduced homology of every board up to 7x7 vanishes through degree
/// min(m, n, floor((m+n+1)/3)) - 2.
fn chessboard_connectivity_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for m in 1..=7usize {
        for n in 1..=7usize {
            let bound = m.min(n).min((m + n + 1) / 3) as i64 - 2;
            checks.push(Check {
                id: format!("chessboard-{m}-{n}"),
                parameters: json!({"m": m, "n": n, "vanishing_bound": bound}),
                expected: json!(true),
                run: Box::new(move |_| {
                    let ok = reduced_vanishes_up_to(&chessboard(m, n), bound);
                    (json!(ok), ok)
                }),
            });
        }
    }
    checks
}

fn deleted_join_iso_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // Fixed family: the r-fold 2-wise deleted join of the n-simplex is the
    // (n+1)-fold join of r isolated points.
    for n in 0..=3usize {
        for r in 2..=3usize {
            checks.push(Check {
                id: format!("simplex-join-n{n}-r{r}"),
                parameters: json!({"n": n, "r": r}),
                expected: json!(true),
                run: Box::new(move |_| {
                    let (lhs, _) = deleted_join(&SimplicialComplex::full_simplex(n), r, 2);
                    let mut rhs = SimplicialComplex::isolated_points(r);
                    for _ in 0..n {
                        rhs = rhs.join(&SimplicialComplex::isolated_points(r));
                    }
                    let shape_ok =
                        lhs.vertex_count() == r * (n + 1) && lhs.dim() == n as i64;
                    let iso = are_isomorphic(&lhs, &rhs)
                        .expect("within the size bound")
                        .is_some();
                    (json!(shape_ok && iso), shape_ok && iso)
                }),
            });
        }
    }
    // Random family: deleting after joining matches joining the deletions.
    for i in 0..42usize {
        checks.push(Check {
            id: format!("join-distributes-{i:02}"),
            parameters: json!({"instance": i, "max_vertices": 4}),
            expected: json!(true),
            run: Box::new(move |rng| {
                let k = random_complex(rng, 4);
                let l = random_complex(rng, 4);
                let r = rng.gen_range(2..=3usize);
                let (lhs, _) = deleted_join(&k.join(&l), r, 2);
                let (dk, _) = deleted_join(&k, r, 2);
                let (dl, _) = deleted_join(&l, r, 2);
                let rhs = dk.join(&dl);
                let iso = are_isomorphic(&lhs, &rhs)
                    .expect("within the size bound")
                    .is_some();
                (json!(iso), iso)
            }),
        });
    }
    checks
}

/// Ordered tuples of pairwise-disjoint nonempty subsets of an (nv-1)-simplex:
/// every slot nonempty, by inclusion-exclusion.
fn product_cell_count(nv: u32, r: u32) -> i128 {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for j in 0..=r {
        let ways = i128::from(r + 1 - j).pow(nv);
        total += if j % 2 == 0 { binom * ways } else { -binom * ways };
        binom = binom * i128::from(r - j) / i128::from(j + 1);
    }
    total
}

fn deleted_product_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for r in 2..=4usize {
        for nv in r..=9usize {
            let cells = product_cell_count(nv as u32, r as u32);
            if cells > 20_000 {
                continue;
            }
            let n = nv - 1;
            checks.push(Check {
                id: format!("product-n{n}-r{r}"),
                parameters: json!({"simplex_dim": n, "r": r, "cells": cells as i64}),
                expected: json!(true),
                run: Box::new(move |_| {
                    let dp = deleted_product_chain(&SimplicialComplex::full_simplex(n), r);
                    let summary = homology(&dp.chain, Coefficients::Integers)
                        .expect("deleted products are chain complexes");
                    let top = nv - r;
                    let mut ok = summary.torsion(top).is_empty();
                    if n >= r {
                        for q in 0..=(n - r) {
                            ok &= summary.reduced_vanishes(q);
                        }
                    }
                    (json!(ok), ok)
                }),
            });
        }
    }
    checks
}

fn degree_factorial_checks(primes: &[usize]) -> Vec<Check> {
    primes
        .iter()
        .map(|&p| {
            let expected: i64 = (1..=(p as i64 - 1)).product();
            Check {
                id: format!("degree-p{p}"),
                parameters: json!({"p": p, "rows": p - 1, "columns": p}),
                expected: json!(expected),
                run: Box::new(move |_| {
                    let board = chessboard(p - 1, p);
                    let target = SimplicialComplex::simplex_boundary(p - 1);
                    let f: Vec<usize> = (0..board.vertex_count()).map(|v| v % p).collect();
                    match simplicial_map_degree(
                        &f,
                        &board,
                        &target,
                        &fundamental_cycle_chessboard(p),
                        &simplex_boundary_cycle(p - 1),
                    ) {
                        Ok(d) => (json!(d.abs()), d.abs() == expected),
                        Err(e) => (json!(e.to_string()), false),
                    }
                }),
            }
        })
        .collect()
}

fn radon_random_checks(dense: bool) -> Vec<Check> {
    (1..=5usize)
        .map(|d| Check {
            id: format!("radon-d{d}"),
            parameters: json!({"d": d, "points": d + 2, "configs": 200}),
            expected: json!(200),
            run: Box::new(move |rng| {
                let mut verified = 0;
                for _ in 0..200 {
                    let pts = random_points(rng, d, d + 2, dense);
                    if let Ok(cert) = radon_partition(&pts) {
                        if cert.verify(&pts).is_ok() && cert.parts.len() == 2 {
                            verified += 1;
                        }
                    }
                }
                (json!(verified), verified == 200)
            }),
        })
        .collect()
}

fn tverberg_random_checks(dense: bool) -> Vec<Check> {
    [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)]
        .into_iter()
        .map(|(d, r)| {
            let n = (d + 1) * (r - 1) + 1;
            Check {
                id: format!("tverberg-d{d}-r{r}"),
                parameters: json!({"d": d, "r": r, "points": n, "configs": 100}),
                expected: json!(100),
                run: Box::new(move |rng| {
                    let mut verified = 0;
                    for _ in 0..100 {
                        let pts = random_points(rng, d, n, dense);
                        let found = tverberg_search(&pts, r, &SearchConstraints::default())
                            .expect("unconstrained search");
                        if let Some(cert) = found {
                            if cert.verify(&pts).is_ok() && cert.parts.len() == r {
                                verified += 1;
                            }
                        }
                    }
                    (json!(verified), verified == 100)
                }),
            }
        })
        .collect()
}

fn witness_none_checks() -> Vec<Check> {
    [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)]
        .into_iter()
        .map(|(d, r)| Check {
            id: format!("witness-d{d}-r{r}"),
            parameters: json!({"d": d, "r": r, "points": (d + 1) * (r - 1)}),
            expected: json!(true),
            run: Box::new(move |_| {
                let pts = witness_configuration(d, r);
                match verify_no_partition(&pts, r) {
                    Ok(none) => (json!(none), none),
                    Err(e) => (json!(e.to_string()), false),
                }
            }),
        })
        .collect()
}

fn rainbow_search_check(
    id: String,
    parameters: Value,
    configs: usize,
    d: usize,
    r: usize,
    classes: Vec<Vec<usize>>,
    dense: bool,
) -> Check {
    let n: usize = classes.iter().map(Vec::len).sum();
    Check {
        id,
        parameters,
        expected: json!(configs),
        run: Box::new(move |rng| {
            let coloring = Coloring::new(classes.clone()).expect("disjoint classes");
            let constraints = SearchConstraints {
                rainbow: Some(coloring.clone()),
                ..SearchConstraints::default()
            };
            let mut verified = 0;
            for _ in 0..configs {
                let pts = random_points(rng, d, n, dense);
                let found = tverberg_search(&pts, r, &constraints).expect("rainbow search");
                if let Some(cert) = found {
                    if cert.verify(&pts).is_ok() && is_rainbow(&cert, &coloring) {
                        verified += 1;
                    }
                }
            }
            (json!(verified), verified == configs)
        }),
    }
}

fn colored_checks(dense: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    // d+1 color pairs in R^d always admit a rainbow Radon partition.
    for d in 1..=3usize {
        let classes: Vec<Vec<usize>> = (0..=d).map(|i| vec![2 * i, 2 * i + 1]).collect();
        checks.push(rainbow_search_check(
            format!("rainbow-pairs-d{d}"),
            json!({"d": d, "r": 2, "classes": d + 1, "class_size": 2, "configs": 100}),
            100,
            d,
            2,
            classes,
            dense,
        ));
    }
    // Seven points in the plane, three classes of size at most three, two
    // rainbow parts.
    checks.push(rainbow_search_check(
        "weak-colored-d2-r2".into(),
        json!({"d": 2, "r": 2, "class_sizes": [3, 2, 2], "configs": 100}),
        100,
        2,
        2,
        vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]],
        dense,
    ));
    // Seven points in the plane, classes of size at most two, three rainbow
    // parts.
    checks.push(rainbow_search_check(
        "optimal-colored-d2-r3".into(),
        json!({"d": 2, "r": 3, "class_sizes": [2, 2, 2, 1], "configs": 100}),
        100,
        2,
        3,
        vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6]],
        dense,
    ));
    checks
}

fn soberon_checks(dense: bool) -> Vec<Check> {
    [(1, 2), (2, 2), (1, 3)]
        .into_iter()
        .map(|(d, r)| {
            let classes_count = (r - 1) * d + 1;
            let classes: Vec<Vec<usize>> = (0..classes_count)
                .map(|i| (i * r..(i + 1) * r).collect())
                .collect();
            let n = r * classes_count;
            Check {
                id: format!("equal-coeffs-d{d}-r{r}"),
                parameters: json!({
                    "d": d, "r": r, "classes": classes_count, "class_size": r,
                    "points": n, "configs": 50
                }),
                expected: json!(50),
                run: Box::new(move |rng| {
                    let coloring = Coloring::new(classes.clone()).expect("disjoint classes");
                    let constraints = SearchConstraints {
                        rainbow: Some(coloring.clone()),
                        equal_coefficients: true,
                        ..SearchConstraints::default()
                    };
                    let mut verified = 0;
                    for _ in 0..50 {
                        let pts = random_points(rng, d, n, dense);
                        let found =
                            tverberg_search(&pts, r, &constraints).expect("consistent constraints");
                        if let Some(cert) = found {
                            if cert.verify(&pts).is_ok()
                                && is_rainbow(&cert, &coloring)
                                && has_equal_class_coefficients(&cert, &coloring)
                            {
                                verified += 1;
                            }
                        }
                    }
                    (json!(verified), verified == 50)
                }),
            }
        })
        .collect()
}

fn collapse_checks() -> Vec<Check> {
    (2..=5usize)
        .map(|r| Check {
            id: format!("collapse-r{r}"),
            parameters: json!({"r": r, "expected_dim": r - 2}),
            expected: json!(true),
            run: Box::new(move |_| {
                let board = chessboard(r, r);
                let (sub, trace) = equivariant_collapse_chessboard(r);
                let dim_ok = sub.dim() == r as i64 - 2;
                let replay_ok = trace
                    .replay(&board)
                    .map(|k| k.facets() == sub.facets())
                    .unwrap_or(false);
                let homology_ok = summaries_agree(
                    &homology_of_complex(&board, Coefficients::Integers),
                    &homology_of_complex(&sub, Coefficients::Integers),
                );
                let ok = dim_ok && replay_ok && homology_ok;
                (
                    json!({
                        "dim": sub.dim(),
                        "replay": replay_ok,
                        "homology_matches": homology_ok
                    }),
                    ok,
                )
            }),
        })
        .collect()
}

fn quotient_euler_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for p in [3usize, 5] {
        for k in 1..p {
            checks.push(Check {
                id: format!("quotient-k{k}-p{p}"),
                parameters: json!({"rows": k, "columns": p, "group_order": p}),
                expected: json!(true),
                run: Box::new(move |_| {
                    let board = chessboard(k, p);
                    let action = chessboard_actions(k, p).cyclic_columns;
                    match quotient_complex(&board, &action) {
                        Ok(q) => {
                            let chi = euler_characteristic(&board);
                            let chi_q = euler_characteristic(&q);
                            let ok = chi == p as i64 * chi_q;
                            (json!({"chi": chi, "chi_quotient": chi_q}), ok)
                        }
                        Err(e) => (json!(e.to_string()), false),
                    }
                }),
            });
        }
    }
    checks
}

fn is_diagonal(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

fn divisibility_chain(diag: &[BigInt]) -> bool {
    for w in diag.windows(2) {
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
        if !w[1].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    diag.iter().all(|d| !d.is_negative())
}

fn random_int_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

fn snf_props_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for batch in 0..5usize {
        checks.push(Check {
            id: format!("snf-random-{batch}"),
            parameters: json!({"matrices": 100, "max_size": 8, "entry_bound": 9}),
            expected: json!(100),
            run: Box::new(move |rng| {
                let mut good = 0;
                for _ in 0..100 {
                    let m = random_int_matrix(rng);
                    let dec = smith_normal_form(&m);
                    let product_ok = dec.u.mul(&m).mul(&dec.v) == dec.d;
                    let shape_ok = is_diagonal(&dec.d) && divisibility_chain(&dec.d.diagonal());
                    let u_ok = dec.u.mul(&dec.u_inv) == IntMatrix::identity(m.rows())
                        && dec.u.determinant().abs().is_one();
                    let v_ok = dec.v.mul(&dec.v_inv) == IntMatrix::identity(m.cols())
                        && dec.v.determinant().abs().is_one();
                    if product_ok && shape_ok && u_ok && v_ok {
                        good += 1;
                    }
                }
                (json!(good), good == 100)
            }),
        });
    }
    checks.push(Check {
        id: "boundary-composite-zero".into(),
        parameters: json!({
            "complexes": "chessboards to 4x4, deleted joins and products of small simplices, collapses"
        }),
        expected: json!(true),
        run: Box::new(|_| {
            let mut all = true;
            for m in 1..=4usize {
                for n in 1..=4usize {
                    all &= SimplicialChains::new(&chessboard(m, n)).complex.validate();
                }
            }
            for n in 1..=2usize {
                for r in 2..=3usize {
                    let (dj, _) = deleted_join(&SimplicialComplex::full_simplex(n), r, 2);
                    all &= SimplicialChains::new(&dj).complex.validate();
                }
            }
            for n in 1..=4usize {
                all &= deleted_product_chain(&SimplicialComplex::full_simplex(n), 2)
                    .chain
                    .validate();
            }
            for r in 2..=4usize {
                let (sub, _) = equivariant_collapse_chessboard(r);
                all &= SimplicialChains::new(&sub).complex.validate();
            }
            (json!(all), all)
        }),
    });
    checks
}

// Fourier-Motzkin elimination: a complete feasibility decision independent
// of the simplex implementation. An inequality (coeffs, rhs, history)
// means coeffs . x <= rhs, where history is the bitset of original
// inequalities it combines. After k eliminations any row combining more
// than k+1 originals is implied by the others (Kohler's criterion), so it
// is dropped; this bounds the blowup even when no two derived rows
// coincide, as with denominator-rich random entries.
fn fm_feasible(a: &RatMatrix, b: &[Rational], nonneg: &[bool]) -> bool {
    let n = a.cols();
    let mut ineqs: Vec<(Vec<Rational>, Rational, u32)> = Vec::new();
    for (i, rhs) in b.iter().enumerate() {
        let row: Vec<Rational> = (0..n).map(|j| a.get(i, j).clone()).collect();
        let neg: Vec<Rational> = row.iter().map(|v| -v.clone()).collect();
        ineqs.push((row, rhs.clone(), 0));
        ineqs.push((neg, -rhs.clone(), 0));
    }
    for (j, &flag) in nonneg.iter().enumerate() {
        if flag {
            let mut row = vec![Rational::zero(); n];
            row[j] = -Rational::one();
            ineqs.push((row, Rational::zero(), 0));
        }
    }
    assert!(ineqs.len() <= 32, "history bitsets are u32");
    for (id, ineq) in ineqs.iter_mut().enumerate() {
        ineq.2 = 1 << id;
    }
    let mut eliminated = 0usize;
    let mut remaining: Vec<usize> = (0..n).collect();
    while let Some(pick) = remaining.iter().copied().min_by_key(|&v| {
        let pos = ineqs.iter().filter(|(c, _, _)| c[v].is_positive()).count();
        let neg = ineqs.iter().filter(|(c, _, _)| c[v].is_negative()).count();
        pos * neg
    }) {
        remaining.retain(|&v| v != pick);
        eliminated += 1;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for ineq in ineqs {
            if ineq.0[pick].is_positive() {
                pos.push(ineq);
            } else if ineq.0[pick].is_negative() {
                neg.push(ineq);
            } else {
                next.push(ineq);
            }
        }
        for (pc, pb, ph) in &pos {
            for (nc, nb, nh) in &neg {
                let history = ph | nh;
                if history.count_ones() as usize > eliminated + 1 {
                    continue;
                }
                let (alpha, beta) = (-nc[pick].clone(), pc[pick].clone());
                let coeffs: Vec<Rational> = (0..n)
                    .map(|k| &pc[k] * &alpha + &nc[k] * &beta)
                    .collect();
                let rhs = pb * &alpha + nb * &beta;
                next.push((coeffs, rhs, history));
            }
        }
        // Dedup after scaling each row by its first nonzero coefficient;
        // rows are ordered smallest-history-first so the kept copy is the
        // one most likely to survive future Kohler filtering.
        next.sort_by_key(|(_, _, h)| h.count_ones());
        let mut seen = std::collections::BTreeSet::new();
        ineqs = next
            .into_iter()
            .filter(|(coeffs, rhs, _)| {
                let scale = coeffs
                    .iter()
                    .find(|c| !c.is_zero())
                    .map(|c| c.clone().abs())
                    .unwrap_or_else(Rational::one);
                let key: Vec<String> = coeffs
                    .iter()
                    .map(|c| (c / &scale).to_string())
                    .chain(std::iter::once((rhs / &scale).to_string()))
                    .collect();
                seen.insert(key)
            })
            .collect();
    }
    ineqs.iter().all(|(_, rhs, _)| !rhs.is_negative())
}

fn lp_oracle_checks(dense: bool) -> Vec<Check> {
    (0..4usize)
        .map(|batch| Check {
            id: format!("lp-random-{batch}"),
            parameters: json!({"systems": 50, "max_rows": 4, "max_vars": 6}),
            expected: json!(50),
            run: Box::new(move |rng| {
                let mut agreed = 0;
                for _ in 0..50 {
                    let rows = rng.gen_range(1..=4);
                    let cols = rng.gen_range(1..=6);
                    let small = |rng: &mut ChaCha8Rng| {
                        let num = rng.gen_range(-5..=5);
                        let den = if dense { rng.gen_range(1..=4) } else { 1 };
                        ratio(num, den)
                    };
                    let a = RatMatrix::from_rows(
                        &(0..rows)
                            .map(|_| (0..cols).map(|_| small(rng)).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    );
                    let b: Vec<Rational> = (0..rows).map(|_| small(rng)).collect();
                    let nonneg: Vec<bool> = (0..cols).map(|_| rng.gen_bool(0.7)).collect();
                    let oracle = fm_feasible(&a, &b, &nonneg);
                    let problem = FeasibilityProblem::new(a, b, nonneg);
                    let verdict = feasible(&problem).is_some();
                    if verdict == oracle {
                        agreed += 1;
                    }
                }
                (json!(agreed), agreed == 50)
            }),
        })
        .collect()
}
