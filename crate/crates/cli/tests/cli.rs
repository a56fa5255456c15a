use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tri_inscribe::geom::triangle_in_polygon;
use tri_inscribe_cli::{parse_polygon_file, JsonReport};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inscribe-tri")).args(args).output().unwrap()
}

fn solve(args: &[&str]) -> JsonReport {
    let out = run(&[&["solve"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn square_fixed_orientation() {
    let sq = golden("square.poly");
    let r = solve(&["--variant", "convex-ab-fixed", "--alpha", "90", "--beta", "45", "--degrees", "--input", path(&sq)]);
    assert!((r.area - 0.5).abs() < 1e-9, "{}", r.area);
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.method, "exact");
    let poly = parse_polygon_file(&sq).unwrap();
    assert!(triangle_in_polygon(&poly, &r.triangle(), poly.tolerance()));
}

#[test]
fn json_round_trips_and_reinscribes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let file = golden("simple_n20_seed7.poly");
    let status = run(&[
        "solve", "--variant", "simple-ab-rot", "--alpha", "50", "--beta", "70", "--degrees", "--samples", "64",
        "--input", path(&file), "--json-out", path(&out),
    ]);
    assert!(status.status.success());
    assert!(status.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let r: JsonReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::from_str::<JsonReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
    assert_eq!(r.samples_used, Some(64));
    let poly = parse_polygon_file(&file).unwrap();
    assert!(triangle_in_polygon(&poly, &r.triangle(), poly.tolerance()));
    assert!((r.alpha - 50f64.to_radians()).abs() < 1e-9);
    assert!((r.beta - 70f64.to_radians()).abs() < 1e-9);
}

#[test]
fn comments_and_blank_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c.poly");
    std::fs::write(&f, "# header\n\n0 0\n# mid\n1 0\n1 1\n   \n0 1\n").unwrap();
    let r = solve(&["--variant", "convex-ab-rot", "--alpha", "45", "--beta", "45", "--degrees", "--input", path(&f)]);
    assert!((r.area - 0.5).abs() < 1e-9);
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.poly");
    std::fs::write(&rep, "0 0\n1 0\n1 1\n1 0\n0 1\n").unwrap();
    let out = run(&["solve", "--variant", "simple-ab-axis", "--alpha", "1", "--beta", "1", "--input", path(&rep)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("vertex 3") && err.lines().count() == 1, "{err}");

    let bad = dir.path().join("bad.poly");
    std::fs::write(&bad, "0 0\n1 0\nfoo 1\n").unwrap();
    let out = run(&["solve", "--variant", "simple-ab-axis", "--alpha", "1", "--beta", "1", "--input", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let l = golden("lshape.poly");
    let out = run(&["solve", "--variant", "convex-a-rot", "--alpha", "1", "--input", path(&l)]);
    assert_eq!(out.status.code(), Some(2));
    // Reflex vertex (1, 1) is on input line 5, vertex index 3.
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 3"));

    let sq = golden("square.poly");
    for args in [
        &["--variant", "convex-ab-rot", "--alpha", "1"][..],
        &["--variant", "convex-a-fptas", "--alpha", "1"],
        &["--variant", "convex-a-axis", "--alpha", "1", "--beta", "1"],
        &["--variant", "convex-ab-axis", "--alpha", "1", "--beta", "1"],
        &["--variant", "convex-ab-fptas", "--alpha", "1", "--beta", "1", "--eps", "1.5"],
        &["--variant", "simple-a-axis", "--alpha", "4"],
    ] {
        let out = run(&[&["solve", "--input", path(&sq)], args].concat());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn fptas_close_to_exact_on_200_gon() {
    let f = golden("convex_n200_seed3.poly");
    let common = ["--alpha", "60", "--beta", "60", "--degrees", "--input", path(&f)];
    let approx = solve(&[&["--variant", "convex-ab-fptas", "--eps", "0.1"][..], &common].concat());
    let exact = solve(&[&["--variant", "convex-ab-rot"][..], &common].concat());
    assert!(approx.area >= 0.9 * exact.area, "{} vs {}", approx.area, exact.area);
    assert!(approx.area <= exact.area * (1.0 + 1e-9));
    assert_eq!(approx.method, "fptas");
}

#[test]
fn lshape_svg_has_two_paths() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let l = golden("lshape.poly");
    solve(&["--variant", "simple-a-axis", "--alpha", "60", "--degrees", "--input", path(&l), "--svg-out", path(&svg)]);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 2);
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
}

#[test]
fn degrees_match_radians() {
    let f = golden("convex_n8_seed1.poly");
    let deg = solve(&["--variant", "convex-ab-rot", "--alpha", "50", "--beta", "62.5", "--degrees", "--input", path(&f)]);
    let (a, b) = (50f64.to_radians().to_string(), 62.5f64.to_radians().to_string());
    let rad = solve(&["--variant", "convex-ab-rot", "--alpha", &a, "--beta", &b, "--input", path(&f)]);
    assert_eq!(deg.triangle, rad.triangle);
    assert_eq!(deg.area, rad.area);
}

#[test]
fn bench_csv() {
    let out = run(&["bench", "--suite", "convex", "--sizes"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "variant,n,seed,area,wall_time,candidates\n");

    let out = run(&["bench", "--suite", "fixtures", "--sizes", "4,8", "--variants", "convex-ab-rot,convex-a-axis"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("convex-ab-rot,4,1,"));
    assert!(rows[3].starts_with("convex-a-axis,8,1,"));
}

#[test]
fn thread_cap_env() {
    let sq = golden("square.poly");
    let args = ["solve", "--variant", "convex-a-fptas", "--alpha", "1", "--eps", "0.2", "--input", path(&sq)];
    let out = Command::new(env!("CARGO_BIN_EXE_inscribe-tri")).args(args).env("INSCRIBE_TRI_THREADS", "1").output().unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_inscribe-tri")).args(args).env("INSCRIBE_TRI_THREADS", "zero").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_round_trips_through_parser() {
    let out = run(&["gen", "--suite", "simple", "--n", "20", "--seed", "7"]);
    assert!(out.status.success());
    let stored = std::fs::read_to_string(golden("simple_n20_seed7.poly")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), stored);
}
