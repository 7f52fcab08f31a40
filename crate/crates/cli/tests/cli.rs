use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mwbis::bench::BenchRow;
use mwbis::format::parse_graph;
use mwbis::record::RunRecord;
use mwbis::verify::{TrialRecord, VerifySummary};
use num_rational::Ratio;
use tempfile::TempDir;

fn mwbis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwbis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_s = path.to_str().unwrap().to_owned();
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path_s]);
    let o = mwbis(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    path_s
}

fn solve(args: &[&str]) -> RunRecord {
    let mut full = vec!["solve"];
    full.extend_from_slice(args);
    let o = mwbis(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_str(stdout(&o).trim()).unwrap()
}

#[test]
fn generated_files_have_expected_shapes() {
    let dir = TempDir::new().unwrap();
    let tight = generate(dir.path(), "tight.txt", &["tight", "--k", "4", "--x", "5"]);
    let text = fs::read_to_string(&tight).unwrap();
    assert!(text.lines().any(|l| l == "c family tight k=4 x=5"));
    assert_eq!(parse_graph(&text).unwrap().graph.n(), 22);

    let gap = generate(dir.path(), "gap.txt", &["gap", "--k", "3"]);
    let g = parse_graph(&fs::read_to_string(&gap).unwrap())
        .unwrap()
        .graph;
    assert_eq!((g.n(), g.m()), (22, 21));
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    assert_eq!(degrees[21], 7);
    assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 7);
    assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 14);

    let o = mwbis(&[
        "generate", "regular", "--n", "12", "--r", "8", "--seed", "7",
    ]);
    let g = parse_graph(&stdout(&o)).unwrap().graph;
    assert_eq!(g.m(), 48);
    assert_eq!(g.regular_degree(), Some(8));
}

#[test]
fn generate_is_deterministic_and_validates() {
    let a = mwbis(&[
        "generate",
        "bipartite",
        "--n-a",
        "5",
        "--n-b",
        "6",
        "--weights",
        "uniform",
        "--seed",
        "9",
    ]);
    let b = mwbis(&[
        "generate",
        "bipartite",
        "--n-a",
        "5",
        "--n-b",
        "6",
        "--weights",
        "uniform",
        "--seed",
        "9",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\nw 1 "));

    let o = mwbis(&["generate", "tight", "--k", "3", "--x", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let o = mwbis(&["generate", "tight", "--k", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--x"));
}

#[test]
fn solve_methods_on_named_instances() {
    let dir = TempDir::new().unwrap();
    let gap = generate(dir.path(), "gap.txt", &["gap", "--k", "3"]);
    let exact = solve(&["-i", &gap, "--k", "3"]);
    assert_eq!(exact.value, 9.0);
    assert!(exact.proven_optimal);
    assert_eq!(exact.instance.weights, "degree");
    assert!(exact.vertices.iter().all(|&v| (1..=22).contains(&v)));

    let lp = solve(&["-i", &gap, "--k", "3", "--method", "lp"]);
    assert!(lp.value >= 35.0 / 3.0 - 1e-9);
    let details = lp.lp.unwrap();
    assert_eq!(details.exact_objective.as_deref(), Some("35/3"));
    assert!(details.max_violation <= 1e-9);

    let tight = generate(dir.path(), "tight.txt", &["tight", "--k", "4", "--x", "5"]);
    assert_eq!(
        solve(&["-i", &tight, "--k", "4", "--method", "greedy"]).value,
        14.0
    );
    assert_eq!(solve(&["-i", &tight, "--k", "4"]).value, 20.0);
    for coloring in ["natural", "degeneracy"] {
        let c = solve(&[
            "-i",
            &tight,
            "--k",
            "4",
            "--method",
            "color",
            "--coloring",
            coloring,
        ]);
        assert!(2.0 * c.value >= 20.0);
    }
    let t = solve(&["-i", &tight, "--k", "4", "--method", "truncate"]);
    assert!(t.vertices.len() <= 4);
}

#[test]
fn truncate_with_explicit_set() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("tri.txt");
    fs::write(
        &path,
        "p mwbis 4 4\nw 1 1\nw 2 2\nw 3 3\nw 4 5\ne 1 2\ne 2 3\ne 3 1\ne 3 4\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let r = solve(&["-i", p, "--k", "1", "--method", "truncate", "--set", "2,4"]);
    assert_eq!((r.value, r.vertices.clone()), (5.0, vec![4]));

    let o = mwbis(&[
        "solve", "-i", p, "--k", "1", "--method", "truncate", "--set", "1,2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = mwbis(&["solve", "-i", p, "--k", "1", "--method", "truncate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("odd cycle"));
}

#[test]
fn user_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let tri = dir.path().join("tri.txt");
    fs::write(&tri, "c triangle\np mwbis 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
    let o = mwbis(&[
        "solve",
        "-i",
        tri.to_str().unwrap(),
        "--k",
        "2",
        "--method",
        "greedy",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("odd cycle 1 - 2 - 3"), "{}", stderr(&o));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "p mwbis 3 1\n\ne 1 4\n").unwrap();
    let o = mwbis(&["solve", "-i", bad.to_str().unwrap(), "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = mwbis(&["solve", "-i", "/nonexistent/graph.txt", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn node_limit_exits_three_with_best_record() {
    let dir = TempDir::new().unwrap();
    let p = generate(
        dir.path(),
        "bp.txt",
        &[
            "bipartite",
            "--n-a",
            "30",
            "--n-b",
            "30",
            "--edge-prob",
            "0.3",
            "--weights",
            "uniform",
            "--seed",
            "3",
        ],
    );
    let o = mwbis(&["solve", "-i", &p, "--k", "10", "--node-limit", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let r: RunRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(!r.proven_optimal);
    assert!(r.vertices.len() <= 10);
}

#[test]
fn lp_dump_has_all_sections() {
    let dir = TempDir::new().unwrap();
    let gap = generate(dir.path(), "gap.txt", &["gap", "--k", "2"]);
    let dump = dir.path().join("gap.lp");
    solve(&["-i", &gap, "--k", "2", "--lp-dump", dump.to_str().unwrap()]);
    let text = fs::read_to_string(dump).unwrap();
    let headers: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(headers[1..], ["Maximize", "Subject To", "Bounds", "End"]);
    assert!(text.contains(" budget: "));
    assert_eq!(text.matches(" clique").count(), 6);
}

#[test]
fn verify_reduction_records() {
    let o = mwbis(&[
        "verify-reduction",
        "--n",
        "12",
        "--k",
        "5",
        "--trials",
        "20",
        "--seed",
        "11",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 21);
    for line in &lines[..20] {
        let t: TrialRecord = serde_json::from_str(line).unwrap();
        assert!(t.equivalent);
        assert_eq!((t.n, t.k, t.r, t.m, t.x, t.target), (12, 5, 8, 48, 18, 166));
    }
    let s: VerifySummary = serde_json::from_str(lines[20]).unwrap();
    assert_eq!((s.equivalent, s.mismatches, s.skipped), (20, 0, 0));

    assert_eq!(
        mwbis(&["verify-reduction", "--n", "10", "--k", "3", "--trials", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        mwbis(&["verify-reduction", "--n", "12", "--k", "6", "--trials", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        mwbis(&["verify-reduction", "--n", "30", "--k", "3", "--trials", "1"])
            .status
            .code(),
        Some(3)
    );
}

fn bench(args: &[&str]) -> Vec<BenchRow> {
    let mut full = vec!["bench"];
    full.extend_from_slice(args);
    let o = mwbis(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    csv::Reader::from_reader(o.stdout.as_slice())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

#[test]
fn bench_tight_ratios_are_exact() {
    let rows = bench(&["--corpus", "tight", "--methods", "greedy"]);
    let greedy: Vec<&BenchRow> = rows
        .iter()
        .filter(|r| r.row == "instance" && r.method == "greedy")
        .collect();
    assert_eq!(greedy.len(), 12);
    for r in greedy {
        let x: i64 = r.params.rsplit("x=").next().unwrap().parse().unwrap();
        let expected = Ratio::new(1, 2) + Ratio::new(1, x);
        assert_eq!(
            r.ratio_exact.as_deref(),
            Some(expected.to_string().as_str())
        );
    }
    let summary = rows.iter().find(|r| r.row == "summary").unwrap();
    assert_eq!(summary.min_ratio, Some(0.52));
}

#[test]
fn bench_gap_stays_under_formula() {
    let rows = bench(&["--corpus", "gap", "--methods", "lp"]);
    let lp: Vec<&BenchRow> = rows
        .iter()
        .filter(|r| r.row == "instance" && r.method == "lp")
        .collect();
    assert_eq!(lp.len(), 4);
    for r in lp {
        let k = r.k.unwrap() as i64;
        let bound = k * k * k;
        let den = 2 * bound - 3 * k * k + 3 * k - 1;
        assert!(r.ratio.unwrap() <= bound as f64 / den as f64 + 1e-6);
        assert_eq!(
            r.ratio_exact.as_deref(),
            Some(Ratio::new(bound, den).to_string().as_str())
        );
    }
}

#[test]
fn bench_bipartite_greedy_guarantee_and_jobs() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("b.csv");
    let o = mwbis(&[
        "bench",
        "--corpus",
        "bipartite",
        "--count",
        "60",
        "--methods",
        "greedy,lp",
        "--jobs",
        "2",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows: Vec<BenchRow> = csv::Reader::from_path(&out)
        .unwrap()
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    let greedy = rows
        .iter()
        .find(|r| r.row == "summary" && r.method == "greedy")
        .unwrap();
    assert!(greedy.min_ratio.unwrap() >= 0.5);
    let lp = rows
        .iter()
        .find(|r| r.row == "summary" && r.method == "lp")
        .unwrap();
    assert!(lp.min_ratio.unwrap() <= 1.0 + 1e-12);
    assert!(rows.iter().all(|r| r.status == "ok" || r.row == "summary"));

    let serial = bench(&[
        "--corpus",
        "bipartite",
        "--count",
        "60",
        "--methods",
        "greedy,lp",
    ]);
    let strip = |rs: &[BenchRow]| -> Vec<(Option<usize>, String, Option<f64>)> {
        rs.iter()
            .map(|r| (r.instance, r.method.clone(), r.value))
            .collect()
    };
    assert_eq!(strip(&rows), strip(&serial));
}
