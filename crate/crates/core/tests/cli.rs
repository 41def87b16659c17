use std::process::{Command, Output};

const G181: &str = "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)";

fn fqgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn predict_f181_example() {
    let o = fqgraph(&["predict", "-q", "181", "-f", G181]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(
        s.contains("vertices: 181, components: 5, fixed points: 3"),
        "{s}"
    );
    assert!(s.contains("1 x cyc(8, T) with |T| = 9"), "{s}");
}

#[test]
fn predict_json_round_trips() {
    let o = fqgraph(&["predict", "-q", "181", "-f", G181, "--format", "json"]);
    let s = stdout(&o);
    let g: fqgraph::GraphSummary = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::to_string_pretty(&g).unwrap() + "\n", s);
    assert_eq!(g.vertex_count(), 181);
}

#[test]
fn predict_not_nice_exits_two_with_witnesses() {
    let o = fqgraph(&["predict", "-q", "97", "-f", "x^6*(x^24-1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("witnesses: 22, 75"), "{}", stderr(&o));
}

#[test]
fn predict_identity() {
    let o = fqgraph(&["predict", "-q", "13", "-f", "x"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("13 x cyc(1, T) with |T| = 1"));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["predict", "-q", "181", "-f", "x^"][..],
        &["predict", "-q", "15", "-f", "x"][..],
        &["predict", "-q", "7", "-f", "x+1"][..],
        &["verify", "-q", "9", "--modulus", "1,1,1", "-f", "x"][..],
        &["tree", "--v", "1,2"][..],
        &["predict", "-q", "7"][..],
    ] {
        assert_eq!(fqgraph(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn verify_reports() {
    let o = fqgraph(&["verify", "-q", "181", "-f", G181, "--format", "json"]);
    let s = stdout(&o);
    let r = fqgraph::report::VerificationReport::from_json(&s).unwrap();
    assert_eq!(r.isomorphic, Some(true));
    assert_eq!(r.to_json() + "\n", s);

    let o = fqgraph(&["verify", "-q", "97", "-f", "x^6*(x^24-1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle only"));

    let o = fqgraph(&["verify", "-q", "13", "-f", "x^2"]);
    let s = stdout(&o);
    assert!(
        s.contains("method: Monomial") && s.contains("isomorphic: true"),
        "{s}"
    );
}

#[test]
fn verify_extension_field() {
    let o = fqgraph(&[
        "verify",
        "-q",
        "3^2",
        "--modulus",
        "1,0,1",
        "-f",
        "x^3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = fqgraph::report::VerificationReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.field.degree, 2);
    assert_eq!(r.oracle.vertex_count(), 9);
    assert_eq!(r.isomorphic, Some(true));
}

#[test]
fn analyze_lists_psi() {
    let o = fqgraph(&["analyze", "-q", "181", "-f", G181]);
    let s = stdout(&o);
    assert!(
        s.contains("psi_f(59) = 42") && s.contains("psi_f(42) = 0"),
        "{s}"
    );
    assert!(s.contains("ell = 18, rep_exp = 3"), "{s}");
}

#[test]
fn tree_sizes() {
    let s = stdout(&fqgraph(&["tree", "--v", "3,3,1"]));
    assert!(s.contains("size: 9"));
    assert!(stdout(&fqgraph(&["tree", "--v", "1"])).contains("size: 1"));
    assert!(stdout(&fqgraph(&["tree", "--v", "3,3,1", "--k", "2"])).contains("size: 13"));
}

#[test]
fn export_dot_oracle_and_prediction() {
    let s = stdout(&fqgraph(&["export-dot", "-q", "181", "-f", G181]));
    assert_eq!(s.matches(" -> ").count(), 181);
    assert_eq!(
        s.lines()
            .filter(|l| l.trim_end().ends_with(';') && !l.contains("->"))
            .count(),
        181
    );
    let p = stdout(&fqgraph(&[
        "export-dot",
        "-q",
        "181",
        "-f",
        G181,
        "--mode",
        "prediction",
    ]));
    assert_eq!(p.matches(" -> ").count(), 181);
    assert_eq!(
        p.matches("cyclic=true").count(),
        s.matches("cyclic=true").count()
    );

    let dir = std::env::temp_dir().join(format!("fqgraph-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = fqgraph(&[
        "export-dot",
        "-q",
        "97",
        "-f",
        "x^6*(x^24-1)",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("15 [cyclic=true") && written.contains("94 [cyclic=true"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn search_nice_finds_f181_map_and_is_deterministic() {
    let args = [
        "search-nice",
        "-q",
        "181",
        "--n",
        "15",
        "--m",
        "5",
        "--h",
        "98*x^4+68*x^3+68*x^2-6*x-31",
    ];
    let s = stdout(&fqgraph(&args));
    assert!(
        s.contains("q=181 n=15 m=5 f = 98*x^159+68*x^123+68*x^87+175*x^51+150*x^15\n"),
        "{s}"
    );
    let sampled = [
        "search-nice",
        "-q",
        "31",
        "--seed",
        "7",
        "--deg-max",
        "2",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&fqgraph(&sampled)), stdout(&fqgraph(&sampled)));
    let trivial = stdout(&fqgraph(&["search-nice", "-q", "2"]));
    assert!(
        trivial.contains("f = x\n") && trivial.contains("1 m-nice"),
        "{trivial}"
    );
}

#[test]
fn corpus_small_run() {
    let o = fqgraph(&["corpus", "--q-max", "31", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instances"], v["passed"]);
    assert!(v["instances"].as_u64().unwrap() > 10);
}
