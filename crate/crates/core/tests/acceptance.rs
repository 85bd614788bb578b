//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trienum::cliquewidth::{binarize_decomposition, cw_enumerate};
use trienum::deletion::DeletionSet;
use trienum::forest::feedback_edge_number;
use trienum::generate;
use trienum::hardness::{build_gp_gadget, verify_gadget};
use trienum::kernels::{dtdd_kernelize, fes_kernelize, Advice, EnumAdviceKernel};
use trienum::oracle::{enumerate_edge_intersect, enumerate_triples};
use trienum::solvers::{solve_degeneracy, solve_fes};
use trienum::triangle::within_triangle_bound;
use trienum::{Graph, Vertex};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Criterion 1: every applicable solver equals the brute-force oracle.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut instances = gnp_instances(500, &mut rng);
    instances.extend(structured_instances(&mut rng));
    for inst in &instances {
        check_solvers(&inst.graph).map_err(|e| format!("{}: {e}", inst.name))?;
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}, budget 120 s"));
    }
    Ok(format!("{} instances in {elapsed:.2?}", instances.len()))
}

/// The 200 kernel instances shared by criteria 2 and 3: trees with up to
/// ten chords for the feedback-edge kernel, degenerate graphs with up to
/// eight apices for the deletion-set kernel.
fn kernel_instances() -> Vec<(String, Graph, EnumAdviceKernel)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut out = Vec::new();
    for i in 0..100 {
        let n = rng.gen_range(3..=80);
        let g = generate::tree_with_chords(n, i % 11, &mut rng);
        let kernel = fes_kernelize(&g);
        out.push((format!("tree+chords#{i}"), g, kernel));
    }
    for i in 0..100 {
        let n = rng.gen_range(3..=60);
        let d = rng.gen_range(0..=3);
        let apexes = i % 9;
        let g = generate::with_apexes(&generate::random_degenerate(n, d, &mut rng), apexes);
        let ds = DeletionSet::new(
            (n..n + apexes).collect(),
            trienum::deletion::TargetClass::Degenerate(d),
        );
        let kernel = dtdd_kernelize(&g, &ds).expect("apices form a deletion set");
        out.push((format!("degenerate{d}+{apexes}apex#{i}"), g, kernel));
    }
    out
}

/// Criterion 2: exact size bounds of both kernels and of the advice.
fn kernel_bounds(instances: &[(String, Graph, EnumAdviceKernel)]) -> Outcome {
    for (name, g, kernel) in instances {
        let k = kernel.param_in;
        let (nv, ne) = (kernel.graph.vertex_count(), kernel.graph.edge_count());
        match &kernel.advice {
            Advice::Triangles(a) => {
                if k != feedback_edge_number(g) || k > 10 {
                    return Err(format!("{name}: parameter {k}"));
                }
                if nv > 2 * k + 3 || ne > k + 3 || a.triangles.len() > 2 * k {
                    return Err(format!(
                        "{name}: k={k} vertices={nv} edges={ne} advice={}",
                        a.triangles.len()
                    ));
                }
            }
            Advice::Dtdd(_) => {
                if k > 8 || nv > k + (1 << k) + 3 {
                    return Err(format!("{name}: |D|={k} vertices={nv}"));
                }
            }
        }
        if !kernel.bounds_hold() {
            return Err(format!("{name}: {:?}", kernel.checks));
        }
    }
    Ok(format!("{} kernels", instances.len()))
}

/// Criterion 3: kernel triangle iff input triangle; expansions disjoint and
/// complete.
fn advice_axioms(instances: &[(String, Graph, EnumAdviceKernel)]) -> Outcome {
    for (name, g, kernel) in instances {
        check_kernel(g, kernel).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} kernels", instances.len()))
}

/// Criterion 4: gadget sizes and structural bounds.
fn gadget() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut graphs = Vec::new();
    for i in 0..50 {
        let n = rng.gen_range(1..=40);
        let g = match i % 5 {
            // triangle-free
            0 => generate::complete_bipartite(n / 2 + 1, n - n / 2),
            1 => generate::cycle(n.max(4)),
            // disconnected
            2 => generate::disjoint_union(&generate::gnp(n, 0.3, &mut rng), &generate::complete(4)),
            3 => Graph::empty(n),
            _ => generate::gnp(n, 0.4, &mut rng),
        };
        graphs.push(g);
    }
    let (mut with, mut without, mut disconnected) = (0, 0, 0);
    for g in &graphs {
        let report = verify_gadget(&build_gp_gadget(g), g);
        if !report.all_ok() {
            return Err(format!("{g:?}\n{report}"));
        }
        if report.input_has_triangle {
            with += 1;
        } else {
            without += 1;
        }
        if g.component_count() > 1 {
            disconnected += 1;
        }
    }
    Ok(format!(
        "{} graphs ({with} with triangles, {without} triangle-free, {disconnected} disconnected)",
        graphs.len()
    ))
}

/// At most five earlier neighbors per vertex, three on average.
fn sparse_degenerate(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs = Vec::with_capacity(3 * n);
    let mut earlier: Vec<Vertex> = Vec::new();
    for v in 0..n {
        let k = rng.gen_range(1..=5).min(v);
        for &u in earlier.choose_multiple(rng, k) {
            pairs.push((u, v));
        }
        earlier.push(v);
    }
    graph_from_pairs(n, pairs)
}

/// Criterion 5: timing on large sparse inputs, counts exact.
fn scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = sparse_degenerate(100_000, &mut rng);
    let start = Instant::now();
    let t = solve_degeneracy(&g);
    let degeneracy_time = start.elapsed();
    let reference = enumerate_edge_intersect(&g);
    if t.len() != reference.len() {
        return Err(format!(
            "degeneracy {} vs edge-intersect {}",
            t.len(),
            reference.len()
        ));
    }
    if degeneracy_time > Duration::from_secs(5) {
        return Err(format!("degeneracy took {degeneracy_time:?}, budget 5 s"));
    }

    let tree = generate::tree_with_chords(100_000, 100, &mut rng);
    let start = Instant::now();
    let f = solve_fes(&tree);
    let fes_time = start.elapsed();
    let reference = enumerate_edge_intersect(&tree);
    if f.len() != reference.len() {
        return Err(format!(
            "fes {} vs edge-intersect {}",
            f.len(),
            reference.len()
        ));
    }
    if fes_time > Duration::from_secs(2) {
        return Err(format!("fes took {fes_time:?}, budget 2 s"));
    }
    Ok(format!(
        "degeneracy n={} m={} #T={} in {degeneracy_time:.2?}; fes n={} m={} #T={} in {fes_time:.2?}",
        g.vertex_count(),
        g.edge_count(),
        t.len(),
        tree.vertex_count(),
        tree.edge_count(),
        f.len()
    ))
}

/// Criterion 6: clique-width DP on random expressions.
fn cliquewidth() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..100 {
        let leaves = rng.gen_range(1..=40);
        let width = rng.gen_range(1..=4);
        let e = generate::random_kexpression(leaves, width, &mut rng);
        let g = e.evaluate();
        let dec = binarize_decomposition(&e);
        if dec.max_class_count() > width as usize {
            return Err(format!(
                "#{i}: {} classes with width {width}",
                dec.max_class_count()
            ));
        }
        let oracle = enumerate_triples(&g).map_err(|e| e.to_string())?;
        if !cw_enumerate(&e).set_eq(&oracle) {
            return Err(format!("#{i}: {e}"));
        }
    }
    Ok("100 expressions".into())
}

/// Criterion 7: #T <= m^{3/2} on every instance used above.
fn global_bound(kernels: &[(String, Graph, EnumAdviceKernel)]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut graphs: Vec<Graph> = gnp_instances(500, &mut rng)
        .into_iter()
        .map(|i| i.graph)
        .collect();
    graphs.extend(structured_instances(&mut rng).into_iter().map(|i| i.graph));
    graphs.extend(kernels.iter().map(|(_, g, _)| g.clone()));
    let dense = [generate::complete(60), generate::complete(200)];
    for g in graphs.iter().chain(&dense) {
        let count = enumerate_edge_intersect(g).len();
        if !within_triangle_bound(count, g.edge_count()) {
            return Err(format!("{count} triangles with m={}", g.edge_count()));
        }
    }
    Ok(format!("{} graphs", graphs.len() + dense.len()))
}

fn main() -> ExitCode {
    let kernels = kernel_instances();
    let criteria: Vec<Criterion> = vec![
        ("1 oracle equivalence", Box::new(oracle_equivalence)),
        (
            "2 exact kernel bounds",
            Box::new(|| kernel_bounds(&kernels)),
        ),
        ("3 enum-advice axioms", Box::new(|| advice_axioms(&kernels))),
        ("4 gadget formulas and bounds", Box::new(gadget)),
        ("5 scaling sanity", Box::new(scaling)),
        ("6 clique-width DP", Box::new(cliquewidth)),
        (
            "7 triangle count bound",
            Box::new(|| global_bound(&kernels)),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
