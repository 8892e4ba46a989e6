//! End-to-end acceptance suite. Each test prints a single pass line for its
//! criterion; run with `--nocapture` to see them all.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sparsegeom::corpus::{example1, fig3_left, fig3_right, k4_geometry, triangle_geometry};
use sparsegeom::engine::{run_extraction, run_recognition, run_recognition_with, EngineOptions};
use sparsegeom::game::ViolationWitness;
use sparsegeom::generate::{construct_tight_geometry, random_geometry};
use sparsegeom::geometry::IncidenceGeometry;
use sparsegeom::hypergraph::{
    derive_params, hypergraph_is_sparse, hypergraph_is_tight, hypergraph_to_geometry, Hypergraph,
};
use sparsegeom::oracle::{
    brute_force_verdict, max_sparse_subset, verify_block_closure, verify_matroid_pairwise,
    OracleBounds,
};
use sparsegeom::{SparsityParams, Status};

fn rods() -> SparsityParams {
    SparsityParams::new(2, 2, 3, 3).unwrap()
}

/// Every already-normalized valid tuple with lambda <= 2, k1, k2 <= 3, l <= 4.
fn normalized_tuples() -> Vec<SparsityParams> {
    let mut out = Vec::new();
    for lambda in 1..=2u32 {
        for k1 in 0..=3u32 {
            for k2 in 0..=3u32 {
                for l in 0..=4u32 {
                    if let Ok(p) = SparsityParams::new(lambda, k1, k2, l) {
                        if p.as_tuple() == (lambda, k1, k2, l) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All incidence patterns on grids up to 3 x 3, including the full 2^9 set
/// on the 3 x 3 grid itself.
fn pattern_corpus() -> Vec<IncidenceGeometry> {
    let mut out = Vec::new();
    for np in 1..=3usize {
        for nl in 1..=3usize {
            let cells = np * nl;
            for mask in 0u32..(1 << cells) {
                let incidences: Vec<(usize, usize)> = (0..cells)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i / nl, i % nl))
                    .collect();
                out.push(IncidenceGeometry::from_indices(np, nl, incidences).unwrap());
            }
        }
    }
    out
}

/// Recompute the witness inequality from the geometry alone:
/// lambda * |I ∩ (A x B)| >= k1|A| + k2|B| - l + 1.
fn witness_valid(g: &IncidenceGeometry, p: &SparsityParams, w: &ViolationWitness) -> bool {
    if w.points.is_empty() || w.lines.is_empty() {
        return false;
    }
    let induced = g
        .incidences()
        .iter()
        .filter(|&&(pt, ln)| w.points.contains(&pt) && w.lines.contains(&ln))
        .count() as i64;
    let bound = p.k1() as i64 * w.points.len() as i64 + p.k2() as i64 * w.lines.len() as i64
        - p.l() as i64;
    p.lambda() as i64 * induced >= bound + 1
        && w.deficit as i64 == p.lambda() as i64 * induced - bound
}

/// All graphs on up to `max_n` vertices, as vertex count + edge list.
fn all_graphs(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push((n, edges));
        }
    }
    out
}

fn graph_hypergraph(n: usize, edges: &[(usize, usize)]) -> Hypergraph {
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let named: Vec<Vec<String>> = edges
        .iter()
        .map(|&(u, v)| vec![vertices[u].clone(), vertices[v].clone()])
        .collect();
    Hypergraph::from_names(vertices, &named).unwrap()
}

#[test]
fn c01_example1_reproduction() {
    let start = Instant::now();
    let v = run_recognition(&example1(), rods()).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(v.status, Status::SparseNotTight);
    assert_eq!(v.remaining_pebbles, 4);
    // all 6 multigraph edges accepted: 2*2 + 3*2 - 2*3 = 4 pebbles consumed
    assert!(v.witness.is_none());
    assert!(
        elapsed.as_micros() < 1000,
        "took {elapsed:?}, budget 1 ms"
    );
    println!("criterion 1 (example 1 reproduction): pass");
}

#[test]
fn c02_figure3_reproduction() {
    for g in [fig3_left(), fig3_right()] {
        let v = run_recognition(&g, rods()).unwrap();
        assert_eq!(v.status, Status::Tight);
        assert_eq!(v.remaining_pebbles, 3);
    }
    println!("criterion 2 (figure 3 reproduction): pass");
}

#[test]
fn c03_example2_exchange_violation() {
    let r = verify_matroid_pairwise(&fig3_left(), &fig3_right(), &rods()).unwrap();
    assert!(
        !r.exchange_violations.is_empty(),
        "expected at least one failed exchange between the two tight sets"
    );
    println!("criterion 3 (example 2 exchange violation): pass");
}

#[test]
fn c04_oracle_equivalence() {
    let start = Instant::now();
    let bounds = OracleBounds::default();
    let mut checked = 0usize;
    for p in normalized_tuples() {
        for g in pattern_corpus() {
            let engine = run_recognition(&g, p).unwrap();
            let oracle = brute_force_verdict(&g, &p, &bounds).unwrap();
            assert_eq!(
                engine.status,
                oracle.status,
                "disagreement for params {p} on {}",
                g.to_json()
            );
            if engine.status != Status::NotSparse {
                assert_eq!(engine.remaining_pebbles, oracle.remaining_pebbles);
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "corpus of {checked} took {elapsed:?}, budget 60 s"
    );
    println!("criterion 4 (oracle equivalence, {checked} instances): pass");
}

#[test]
fn c05_greedy_extraction_optimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(1105);
    let bounds = OracleBounds::default();
    for round in 0..200u64 {
        let n = rng.gen_range(1..=4usize);
        let m = rng.gen_range(1..=4usize);
        let density = rng.gen_range(0.15..0.55);
        let g = random_geometry(n, m, density, 0xA5A5 ^ round);
        let (k1, k2) = loop {
            let k1 = rng.gen_range(0..=3u32);
            let k2 = rng.gen_range(0..=3u32);
            if k1 + k2 > 0 {
                break (k1, k2);
            }
        };
        let l = rng.gen_range(0..=k1 + k2 - 1);
        let p = SparsityParams::new(1, k1, k2, l).unwrap();
        let v = run_extraction(&g, p).unwrap();
        let greedy = v.accepted.unwrap();
        let optimum = max_sparse_subset(&g, &p, &bounds).unwrap();
        assert_eq!(
            greedy.len(),
            optimum.len(),
            "round {round}: greedy {} vs optimum {} for {p} on {}",
            greedy.len(),
            optimum.len(),
            g.to_json()
        );
        let sub = g.restrict_incidences(&greedy);
        let check = brute_force_verdict(&sub, &p, &bounds).unwrap();
        assert_ne!(check.status, Status::NotSparse);
    }
    println!("criterion 5 (greedy extraction optimality, 200 rounds): pass");
}

#[test]
fn c06_hypergraph_correspondence() {
    // named anchors first
    let p23 = derive_params(2, 3, 2, None).unwrap();
    let tri = run_recognition(&triangle_geometry(), p23).unwrap();
    assert_eq!(tri.status, Status::Tight);
    let k4 = run_recognition(&k4_geometry(), p23).unwrap();
    assert_eq!(k4.status, Status::NotSparse);

    let mut checked = 0usize;
    for (n, edges) in all_graphs(4) {
        let h = graph_hypergraph(n, &edges);
        let g = hypergraph_to_geometry(&h);
        for (k, l) in [(2u32, 3u32), (1, 1), (2, 2)] {
            let p = derive_params(k, l, 2, None).unwrap();
            let v = run_recognition(&g, p).unwrap();
            assert_eq!(
                hypergraph_is_sparse(&h, k, l),
                v.status != Status::NotSparse,
                "sparsity mismatch for ({k},{l}) on n={n}, edges={edges:?}"
            );
            assert_eq!(
                hypergraph_is_tight(&h, k, l),
                v.status == Status::Tight,
                "tightness mismatch for ({k},{l}) on n={n}, edges={edges:?}"
            );
            checked += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for _ in 0..50 {
        let n = rng.gen_range(3..=5usize);
        let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<Vec<String>> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push(vec![
                            vertices[a].clone(),
                            vertices[b].clone(),
                            vertices[c].clone(),
                        ]);
                    }
                }
            }
        }
        let h = Hypergraph::from_names(vertices, &edges).unwrap();
        let g = hypergraph_to_geometry(&h);
        let p = derive_params(1, 1, 3, None).unwrap();
        let v = run_recognition(&g, p).unwrap();
        assert_eq!(hypergraph_is_sparse(&h, 1, 1), v.status != Status::NotSparse);
        assert_eq!(hypergraph_is_tight(&h, 1, 1), v.status == Status::Tight);
        checked += 1;
    }
    println!("criterion 6 (hypergraph correspondence, {checked} instances): pass");
}

#[test]
fn c07_invariant_fuzzing() {
    let tuples = normalized_tuples();
    let mut rng = ChaCha8Rng::seed_from_u64(7007);
    for round in 0..1000u64 {
        let n = rng.gen_range(1..=4usize);
        let m = rng.gen_range(1..=4usize);
        let density = rng.gen_range(0.1..0.9);
        let g = random_geometry(n, m, density, 0x1779 ^ round);
        let p = tuples[rng.gen_range(0..tuples.len())];
        let opts = EngineOptions {
            debug_invariants: true,
            seed: round,
        };
        // any invariant violation surfaces as Err here
        run_recognition_with(&g, p, &opts)
            .unwrap_or_else(|e| panic!("round {round}: {e} for {p} on {}", g.to_json()));
    }
    println!("criterion 7 (invariant fuzzing, 1000 games): pass");
}

#[test]
fn c08_witness_validity() {
    let mut witnesses = 0usize;
    for p in normalized_tuples() {
        for g in pattern_corpus() {
            let v = run_recognition(&g, p).unwrap();
            if v.status == Status::NotSparse {
                let w = v.witness.expect("NotSparse verdicts carry a witness");
                assert!(
                    witness_valid(&g, &p, &w),
                    "invalid witness for {p} on {}",
                    g.to_json()
                );
                witnesses += 1;
            }
        }
    }
    for (n, edges) in all_graphs(4) {
        let h = graph_hypergraph(n, &edges);
        let g = hypergraph_to_geometry(&h);
        for (k, l) in [(2u32, 3u32), (1, 1), (2, 2)] {
            let p = derive_params(k, l, 2, None).unwrap();
            let v = run_recognition(&g, p).unwrap();
            if v.status == Status::NotSparse {
                let w = v.witness.expect("NotSparse verdicts carry a witness");
                assert!(witness_valid(&g, &p, &w));
                witnesses += 1;
            }
        }
    }
    assert!(witnesses > 0, "corpus produced no NotSparse verdicts at all");
    println!("criterion 8 (witness validity, {witnesses} witnesses): pass");
}

#[test]
fn c09_generator_soundness() {
    let mut built = 0usize;
    for k1 in 0..=3u32 {
        for k2 in 0..=3u32 {
            if k1 + k2 == 0 {
                continue;
            }
            for l in 0..=k1 + k2 - 1 {
                let p = SparsityParams::new(1, k1, k2, l).unwrap();
                for n in 1..=8usize {
                    for m in 1..=8usize {
                        let (ni, mi) = (n as i64, m as i64);
                        let feasible = ni >= k2 as i64
                            && mi >= k1 as i64
                            && ni * mi >= k1 as i64 * ni + k2 as i64 * mi - l as i64
                            // a k1 = 0 line holds at most k2 - l incidences
                            // (dually for k2 = 0), ruling out l > 0 beyond
                            // a single line (point)
                            && !(k1 == 0 && l > 0 && m > 1)
                            && !(k2 == 0 && l > 0 && n > 1);
                        if !feasible {
                            continue;
                        }
                        let g = construct_tight_geometry(&p, n, m).unwrap_or_else(|e| {
                            panic!("{p} with n={n}, m={m}: {e}")
                        });
                        assert_eq!(g.n_points(), n);
                        assert_eq!(g.n_lines(), m);
                        let v = run_recognition(&g, p).unwrap();
                        assert_eq!(v.status, Status::Tight, "{p} with n={n}, m={m}");
                        built += 1;
                    }
                }
            }
        }
    }
    println!("criterion 9 (generator soundness, {built} constructions): pass");
}

#[test]
fn c10_block_closure() {
    let bounds = OracleBounds::default();
    let mut checked = 0usize;
    for p in normalized_tuples() {
        for g in pattern_corpus() {
            if run_recognition(&g, p).unwrap().status == Status::NotSparse {
                continue;
            }
            let r = verify_block_closure(&g, &p, &bounds).unwrap();
            assert!(
                r.counterexamples.is_empty(),
                "closure failure for {p} on {}: {:?}",
                g.to_json(),
                r.counterexamples
            );
            checked += 1;
        }
    }
    println!("criterion 10 (block closure, {checked} sparse instances): pass");
}

#[test]
fn performance_proxy_large_instance() {
    // 100 points, 101 lines under (1,2,3,3): 2*100 + 3*101 - 3 = 500 incidences
    let p = SparsityParams::new(1, 2, 3, 3).unwrap();
    let g = construct_tight_geometry(&p, 100, 101).unwrap();
    assert_eq!(g.n_incidences(), 500);
    let start = Instant::now();
    let v = run_recognition(&g, p).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(v.status, Status::Tight);
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!("performance proxy (500-incidence check in {elapsed:?}): pass");
}

#[test]
fn witness_support_types_are_consistent() {
    // the witness sets index into the geometry; spot-check on K4
    let v = run_recognition(&k4_geometry(), rods()).unwrap();
    let w = v.witness.unwrap();
    let all_points: BTreeSet<usize> = (0..4).collect();
    assert_eq!(w.points, all_points);
}
