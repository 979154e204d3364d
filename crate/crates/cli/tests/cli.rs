//! End-to-end tests driving the compiled binary: exit codes, summary
//! lines, JSON shape, orbit CSV, and the verify subcommand.

use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_hyperfract"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: output.status.code().expect("no signal"),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

fn summary_field(stdout: &str, key: &str) -> String {
    stdout
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("summary missing {key}= in {stdout:?}"))
        .to_string()
}

fn bounded_fraction(stdout: &str) -> f64 {
    summary_field(stdout, "bounded_fraction")
        .parse()
        .expect("fraction parses")
}

#[test]
fn mandelbrot_analytic_render_reports_area_fraction() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.ppm");
    let r = run(&[
        "mandelbrot",
        "--region", "-2.5", "2.5", "-2.5", "2.5",
        "--size", "512", "512",
        "--mode", "analytic",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    let fraction = bounded_fraction(&r.stdout);
    assert!((fraction - 0.10125).abs() < 0.005, "fraction {fraction}");
    assert_eq!(summary_field(&r.stdout, "variant"), "component");
    assert_eq!(summary_field(&r.stdout, "depth"), "1000");

    let bytes = std::fs::read(&out).unwrap();
    assert!(bytes.starts_with(b"P6\n512 512\n255\n"));
    assert_eq!(bytes.len(), 15 + 3 * 512 * 512);
}

#[test]
fn modulus_variant_keeps_diagonal_pixels() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.ppm");
    let out = out.to_str().unwrap();
    let base = [
        "mandelbrot", "--size", "64", "64", "--mode", "analytic", "--out", out,
    ];
    let component = run(&base);
    let modulus = run(&[&base[..], &["--variant", "modulus"]].concat());
    assert_eq!(component.code, 0);
    assert_eq!(modulus.code, 0);
    assert_eq!(summary_field(&modulus.stdout, "variant"), "modulus");
    assert!(
        bounded_fraction(&modulus.stdout) > bounded_fraction(&component.stdout),
        "diagonal pixel centers should enlarge the modulus verdict"
    );
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["mandelbrot"],
        &["mandelbrot", "--format", "ppm"],
        &["julia", "--a", "0", "--b", "0"],
        &["mandelbrot", "--format", "json", "--out", "x.json"],
        &["mandelbrot", "--region", "2", "-2", "-2", "2", "--out", "x.ppm"],
        &["mandelbrot", "--size", "0", "32", "--out", "x.ppm"],
        &["classify", "--a", "bogus", "--b", "0"],
        &["classify", "--a", "1"],
        &["orbit", "--x", "0", "--y", "0", "--a", "0", "--b", "0", "--n", "-1"],
        &["no-such-command"],
    ];
    for args in cases {
        let r = run(args);
        assert_eq!(r.code, 2, "expected usage error for {args:?}: {}", r.stderr);
    }
}

#[test]
fn unwritable_output_exits_1() {
    let r = run(&[
        "mandelbrot",
        "--size", "8", "8",
        "--mode", "analytic",
        "--out", "/no/such/dir/m.ppm",
    ]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("/no/such/dir/m.ppm"), "stderr: {}", r.stderr);
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["mandelbrot", "--help"]).code, 0);
}

#[test]
fn classify_emits_stable_json() {
    let r = run(&["classify", "--a", "0", "--b", "0.25"]);
    assert_eq!(r.code, 0);
    let line = r.stdout.trim();
    let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
    assert_eq!(v["a"], 0.0);
    assert_eq!(v["b"], 0.25);
    assert_eq!(v["c1"], -0.25);
    assert_eq!(v["c2"], 0.25);
    assert_eq!(v["in_mandelbrot_component"], true);
    assert_eq!(v["julia_class"], "connected-rectangle");
    assert!(v["half_widths"].is_array());

    let keys = [
        "\"a\":",
        "\"b\":",
        "\"c1\":",
        "\"c2\":",
        "\"in_mandelbrot_component\":",
        "\"in_mandelbrot_modulus\":",
        "\"julia_class\":",
        "\"half_widths\":",
    ];
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| line.find(k).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
    assert!(
        positions.windows(2).all(|w| w[0] < w[1]),
        "field order drifted: {line}"
    );
}

#[test]
fn classify_covers_the_documented_probes() {
    let diag = run(&["classify", "--a", "1", "--b", "1"]);
    let v: serde_json::Value = serde_json::from_str(diag.stdout.trim()).unwrap();
    assert_eq!(v["in_mandelbrot_component"], false);
    assert_eq!(v["in_mandelbrot_modulus"], true);
    assert_eq!(v["c1"], 0.0);

    let cantor = run(&["classify", "--a", "-2.5", "--b", "0"]);
    let v: serde_json::Value = serde_json::from_str(cantor.stdout.trim()).unwrap();
    assert_eq!(v["julia_class"], "cantor-dust");
    assert!(v["half_widths"].is_null());

    let origin = run(&["classify", "--a", "0", "--b", "0"]);
    let v: serde_json::Value = serde_json::from_str(origin.stdout.trim()).unwrap();
    assert_eq!(v["half_widths"], serde_json::json!([1.0, 1.0]));
}

#[test]
fn orbit_matches_hand_iteration() {
    let r = run(&["orbit", "--x", "0", "--y", "0", "--a", "-2", "--b", "0", "--n", "3"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let x_column: Vec<&str> = lines
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(x_column, ["0", "-2", "2", "2"]);

    let zeros = run(&["orbit", "--x", "0", "--y", "0", "--a", "0", "--b", "0", "--n", "2"]);
    assert_eq!(
        zeros.stdout.lines().collect::<Vec<_>>(),
        ["0,0,0,0,0", "1,0,0,0,0", "2,0,0,0,0"]
    );
}

#[test]
fn orbit_lines_satisfy_the_coordinate_change() {
    let r = run(&[
        "orbit",
        "--x", "0.5", "--y", "0.25", "--a", "-1", "--b", "0.5", "--n", "6",
    ]);
    assert_eq!(r.code, 0);
    for (step, line) in r.stdout.lines().enumerate() {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[0], step as f64);
        let (x, y, u, v) = (fields[1], fields[2], fields[3], fields[4]);
        assert_eq!(u, x - y, "X = x - y failed at step {step}");
        assert_eq!(v, x + y, "Y = x + y failed at step {step}");
    }
}

#[test]
fn julia_summary_reports_the_class() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("j.ppm");
    let out = out.to_str().unwrap();

    let rect = run(&[
        "julia", "--a", "0", "--b", "0", "--mode", "analytic",
        "--size", "64", "64", "--out", out,
    ]);
    assert_eq!(rect.code, 0);
    assert_eq!(summary_field(&rect.stdout, "class"), "connected-rectangle");
    assert_eq!(summary_field(&rect.stdout, "half_u"), "1");
    assert_eq!(summary_field(&rect.stdout, "half_v"), "1");

    let empty = run(&[
        "julia", "--a", "0.3", "--b", "0", "--size", "64", "64", "--out", out,
    ]);
    assert_eq!(summary_field(&empty.stdout, "class"), "empty");
    assert_eq!(bounded_fraction(&empty.stdout), 0.0);

    let mixed = run(&[
        "julia", "--a", "-1.25", "--b", "1.25", "--size", "64", "64", "--out", out,
    ]);
    assert_eq!(summary_field(&mixed.stdout, "class"), "disconnected-mixed");
    assert_eq!(summary_field(&mixed.stdout, "connected_axis"), "Y");
}

#[test]
fn summary_fraction_matches_the_written_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.csv");
    let r = run(&[
        "mandelbrot",
        "--size", "32", "32",
        "--depth", "200",
        "--format", "csv",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);

    let text = std::fs::read_to_string(&out).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,x,y,escaped,step"));
    let mut total = 0u64;
    let mut bounded = 0u64;
    for line in lines {
        total += 1;
        match line.split(',').nth(4) {
            Some("false") => bounded += 1,
            Some("true") => {}
            other => panic!("bad escaped column {other:?} in {line}"),
        }
    }
    assert_eq!(total, 32 * 32);
    let recounted = bounded as f64 / total as f64;
    assert_eq!(bounded_fraction(&r.stdout), recounted);
}

#[test]
fn verify_passes_at_defaults() {
    let r = run(&["verify"]);
    assert_eq!(r.code, 0, "stdout: {}\nstderr: {}", r.stdout, r.stderr);
    assert!(r.stdout.contains("verify: 8 passed, 0 failed, 0 skipped"));
    assert!(!r.stdout.contains("[FAIL]"));
}

#[test]
fn verify_fails_on_shallow_depth() {
    let r = run(&["verify", "--depth", "1", "--size", "128", "128"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stdout.contains("[FAIL] oracle-agreement"),
        "stdout: {}",
        r.stdout
    );
}

#[test]
fn verify_skips_area_checks_below_minimum_resolution() {
    let r = run(&["verify", "--size", "16", "16"]);
    assert_eq!(r.code, 0, "stdout: {}", r.stdout);
    for name in ["mandelbrot-area", "julia-area-origin", "julia-area-minus-two"] {
        assert!(
            r.stdout.contains(&format!("[skip] {name}")),
            "missing skip for {name}: {}",
            r.stdout
        );
    }
    assert!(r.stdout.contains("0 failed"));
}

#[test]
fn render_outputs_are_reproducible_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.ppm");
    let second = dir.path().join("b.ppm");
    for out in [&first, &second] {
        let r = run(&[
            "mandelbrot",
            "--size", "48", "48",
            "--depth", "300",
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(r.code, 0);
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
    assert!(Path::new(&first).exists());
}
