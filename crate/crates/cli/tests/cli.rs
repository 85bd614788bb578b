use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;
use trienum::{generate, parse_edge_list_str, Graph, TriangleSet};
use trienum_cli::{bench_table, CliError, Runner};

const K4: &str = "0 1\n1 2\n0 2\n0 3\n1 3\n2 3\n";
const K3: &str = "0 1\n1 2\n0 2\n";

fn trienum(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trienum"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn setup(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in files {
        fs::write(dir.path().join(name), body).unwrap();
    }
    dir
}

#[test]
fn count_only() {
    let dir = setup(&[("k4.edges", K4)]);
    let o = trienum(
        &["triangles", "k4.edges", "--algo=fes", "--count-only"],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn sorted_output_is_identical_across_algorithms() {
    let dir = setup(&[("k4.edges", K4), ("k.set", "0\n1\n")]);
    let algos = [
        "brute",
        "edge",
        "degeneracy",
        "fes",
        "dtdd",
        "dtdd-maxdeg",
        "bipartite",
        "chordal",
        "cograph",
        "cliquewidth",
    ];
    let mut outputs = Vec::new();
    for algo in algos {
        let mut args = vec!["triangles", "k4.edges", "--sorted"];
        let flag = format!("--algo={algo}");
        args.push(&flag);
        if algo == "bipartite" {
            args.push("--deletion-set=k.set");
        }
        let o = trienum(&args, dir.path());
        assert!(
            o.status.success(),
            "{algo}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        outputs.push(stdout(&o));
    }
    assert_eq!(outputs[0], "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    assert!(outputs.iter().all(|o| o == &outputs[0]));
}

#[test]
fn output_uses_input_labels() {
    let dir = setup(&[(
        "g.edges",
        "# labels need not be dense\n10 20\n20 30\n30 10\n30 7\n",
    )]);
    let o = trienum(&["triangles", "g.edges", "--algo=degeneracy"], dir.path());
    assert_eq!(stdout(&o), "10 20 30\n");
}

#[test]
fn kernelize_writes_three_files() {
    let dir = setup(&[("k3.edges", K3)]);
    let o = trienum(&["kernelize", "k3.edges", "--param=fes"], dir.path());
    assert!(o.status.success());
    let meta = fs::read_to_string(dir.path().join("k3.meta")).unwrap();
    assert!(meta.contains("vertices=5 bound=5 ok"), "{meta}");
    assert!(meta.contains("verdict=ok"));
    let advice = fs::read_to_string(dir.path().join("k3.advice")).unwrap();
    assert!(advice.contains("[triangles]\n0 1 2\n"), "{advice}");
    let kernel =
        parse_edge_list_str(&fs::read_to_string(dir.path().join("k3.kernel.edges")).unwrap())
            .unwrap();
    assert_eq!(kernel.edge_count(), 4);
}

#[test]
fn kernelize_dtdd_lists_modules() {
    let dir = setup(&[("s.edges", "0 1\n0 2\n0 3\n1 2\n"), ("d.set", "0\n")]);
    let o = trienum(
        &[
            "kernelize",
            "s.edges",
            "--param=dtdd",
            "--deletion-set=d.set",
            "--d=1",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let advice = fs::read_to_string(dir.path().join("s.advice")).unwrap();
    assert!(advice.contains("[modules]\n1: 1 2 3\n"), "{advice}");
    let meta = fs::read_to_string(dir.path().join("s.meta")).unwrap();
    assert!(
        meta.contains("param_in=1") && meta.contains("param_out=3"),
        "{meta}"
    );
}

#[test]
fn gadget_with_verification() {
    let dir = setup(&[("k3.edges", K3)]);
    let o = trienum(&["gadget", "k3.edges", "--verify"], dir.path());
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("diameter: 2 (≤3)"), "{text}");
    assert!(text.contains("triangle_equiv: true"));
    let g = parse_edge_list_str(&fs::read_to_string(dir.path().join("k3.gadget.edges")).unwrap())
        .unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (15, 42));
}

#[test]
fn params_lines() {
    let dir = setup(&[
        ("k4.edges", K4),
        ("p4.edges", "0 1\n1 2\n2 3\n"),
        ("c6.edges", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"),
    ]);
    let line = |f: &str| stdout(&trienum(&["params", f], dir.path()));
    assert!(line("k4.edges")
        .starts_with("n=4 m=6 delta=3 degeneracy=3 fes=3 bipartite=no chordal=yes cograph=yes"));
    let p4 = line("p4.edges");
    assert!(p4.contains("fes=0") && p4.contains("cograph=no"), "{p4}");
    let c6 = line("c6.edges");
    assert!(c6.contains("bipartite=yes") && c6.contains("fes=1"), "{c6}");
}

#[test]
fn bench_rows_agree() {
    let dir = setup(&[("k4.edges", K4)]);
    let o = trienum(&["bench", "k4.edges", "--reps=1"], dir.path());
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.ends_with("\t4")), "{text}");
    assert!(text.contains("# skipped bipartite: no --deletion-set given"));
}

#[test]
fn bench_on_a_large_sparse_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = generate::random_degenerate(100_000, 3, &mut rng);
    let dir = setup(&[("big.edges", &g.to_edge_list_string())]);
    let o = trienum(
        &["bench", "big.edges", "--algos=degeneracy,edge", "--reps=1"],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(counts.len(), 2);
    assert_eq!(counts[0], counts[1]);
}

#[test]
fn faulty_algorithm_is_caught() {
    let g = generate::complete(4);
    let runners = vec![
        Runner {
            name: "edge".into(),
            run: Box::new(|g: &Graph| Ok(trienum::oracle::enumerate_edge_intersect(g))),
        },
        Runner {
            name: "faulty".into(),
            run: Box::new(|g: &Graph| {
                let mut t: Vec<_> = trienum::oracle::enumerate_edge_intersect(g).into_vec();
                t.pop();
                Ok(t.into_iter().collect::<TriangleSet>())
            }),
        },
    ];
    match bench_table(&g, &runners, 1) {
        Err(e @ CliError::CountMismatch { .. }) => {
            assert_eq!(e.exit_code(), 3);
            assert!(e.to_string().contains("1 2 3"), "{e}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn kexpression_input() {
    let triangle = "eta(1,2,u(rho(2,1,eta(1,2,u(v(1),v(2)))),v(2)))\n";
    let dir = setup(&[("t.kexpr", triangle), ("k3.edges", K3), ("k4.edges", K4)]);
    let o = trienum(
        &["triangles", "--algo=cliquewidth", "--kexpr=t.kexpr"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "0 1 2\n");
    let o = trienum(
        &[
            "triangles",
            "k3.edges",
            "--algo=cliquewidth",
            "--kexpr=t.kexpr",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o), "0 1 2\n");
    let o = trienum(
        &[
            "triangles",
            "k4.edges",
            "--algo=cliquewidth",
            "--kexpr=t.kexpr",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = setup(&[
        ("k4.edges", K4),
        ("loop.edges", "0 1\n2 2\n"),
        ("p4.edges", "0 1\n1 2\n2 3\n"),
        ("bad.set", "3\n"),
        ("bad.kexpr", "eta(1,1,v(1))"),
    ]);
    let code = |args: &[&str]| trienum(args, dir.path()).status.code();
    assert_eq!(
        code(&["triangles", "k4.edges", "--algo=fes", "--kexpr=x"]),
        Some(1)
    );
    assert_eq!(code(&["triangles", "k4.edges"]), Some(1));
    assert_eq!(
        code(&["triangles", "missing.edges", "--algo=edge"]),
        Some(1)
    );
    assert_eq!(
        code(&["triangles", "k4.edges", "--algo=edge", "--d=2"]),
        Some(1)
    );
    assert_eq!(code(&["triangles", "loop.edges", "--algo=edge"]), Some(2));
    assert_eq!(
        code(&["triangles", "p4.edges", "--algo=cliquewidth"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "triangles",
            "k4.edges",
            "--algo=dtdd",
            "--deletion-set=bad.set",
            "--d=1"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["triangles", "k4.edges", "--algo=bipartite"]),
        Some(2)
    );
    assert_eq!(
        code(&["triangles", "--algo=cliquewidth", "--kexpr=bad.kexpr"]),
        Some(2)
    );
    assert_eq!(code(&["triangles", "k4.edges", "--algo=edge"]), Some(0));
}

#[test]
fn precondition_witness_uses_labels() {
    let dir = setup(&[("g.edges", "10 20\n20 30\n30 10\n")]);
    let o = trienum(&["triangles", "g.edges", "--algo=bipartite"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("odd cycle") && err.contains("10") && err.contains("30"),
        "{err}"
    );
}

#[test]
fn out_dir_is_respected() {
    let dir = setup(&[("k3.edges", K3)]);
    let out = dir.path().join("out");
    fs::create_dir(&out).unwrap();
    let out_flag = format!("--out-dir={}", out.display());
    assert!(trienum(&["gadget", "k3.edges", &out_flag], dir.path())
        .status
        .success());
    assert!(PathBuf::from(&out).join("k3.gadget.edges").exists());
}
