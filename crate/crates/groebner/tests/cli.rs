//! End-to-end checks of the command-line surface: exit codes, output
//! contracts, and agreement between the two algorithms.

use std::path::Path;
use std::process::Command;

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_groebner"))
        .args(args)
        .output()
        .expect("failed to launch the CLI binary")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn both_algorithms_print_identical_reduced_bases() {
    for bench in ["cyclic:3", "cyclic:4", "katsura:3", "katsura:4"] {
        let ssg = run_cli(&["gb", "--bench", bench]);
        let buch = run_cli(&["gb", "--bench", bench, "--algorithm", "buchberger"]);
        assert!(ssg.status.success() && buch.status.success());
        assert_eq!(stdout(&ssg), stdout(&buch), "{bench}: algorithms disagree");
    }
}

#[test]
fn raw_output_contains_the_final_increment_seeds() {
    // For {x^2 - y, xy - 1} the final increment seeds the previous basis
    // {x^2 - y} verbatim, one zero from its head seed, and produces
    // xy - 1 and y^2 - x. The raw set is exactly these, sorted ascending.
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("sys.txt");
    std::fs::write(&sys, "ring 32003 grevlex x y\nx^2 - y\nx*y - 1\n").unwrap();
    let raw = stdout(&run_cli(&["gb", sys.to_str().unwrap(), "--raw"]));
    assert_eq!(
        raw,
        "ring 32003 grevlex x y\n0\ny^2 + 32002*x\nx*y + 32002\nx^2 + 32002*y\n"
    );

    // Larger runs keep zeros for every discovered syzygy.
    let raw = stdout(&run_cli(&["gb", "--bench", "cyclic:4", "--raw"]));
    let reduced = stdout(&run_cli(&["gb", "--bench", "cyclic:4"]));
    assert!(raw.lines().any(|l| l == "0"), "raw output shows no zeros");
    assert!(raw.lines().count() > reduced.lines().count());
}

#[test]
fn invariant_checked_runs_succeed_from_the_cli() {
    for bench in ["cyclic:3", "katsura:3"] {
        let out = run_cli(&["gb", "--bench", bench, "--check-invariants", "--certify"]);
        assert!(out.status.success());
        assert!(stdout(&out).contains("# certify: pass"));
    }
}

#[test]
fn verify_accepts_a_correct_basis_and_rejects_a_wrong_one() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("sys.txt");
    std::fs::write(&sys, "ring 32003 grevlex x y\nx^2 - y\nx*y - 1\n").unwrap();

    let basis_text = stdout(&run_cli(&["gb", sys.to_str().unwrap()]));
    let good = dir.path().join("good.txt");
    std::fs::write(&good, &basis_text).unwrap();
    let ok = run_cli(&["verify", sys.to_str().unwrap(), good.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("gb-check: pass"));

    // The input generators alone are not a Gröbner basis.
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "ring 32003 grevlex x y\nx^2 - y\nx*y - 1\n").unwrap();
    let fail = run_cli(&["verify", sys.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(2));
    assert!(stdout(&fail).contains("gb-check: fail"));

    // A basis of a different ideal fails ideal equality.
    let other = dir.path().join("other.txt");
    std::fs::write(&other, "ring 32003 grevlex x y\nx\ny\n").unwrap();
    let fail = run_cli(&["verify", sys.to_str().unwrap(), other.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(2));
    assert!(stdout(&fail).contains("ideal-equality: fail"));
}

#[test]
fn usage_and_io_errors_exit_1() {
    assert_eq!(run_cli(&["gb", "missing.txt"]).status.code(), Some(1));
    assert_eq!(run_cli(&["gb"]).status.code(), Some(1));
    assert_eq!(
        run_cli(&["gb", "a.txt", "--bench", "cyclic:3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run_cli(&["gb", "--bench", "cyclic:1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run_cli(&["gb", "--bench", "nosuch:3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run_cli(&["gb", "--bench", "cyclic:3:4"]).status.code(),
        Some(1)
    );
    assert_eq!(run_cli(&["nosuchcommand"]).status.code(), Some(1));
    assert_eq!(run_cli(&["--help"]).status.code(), Some(0));
}

#[test]
fn certify_and_invariant_flags_reject_the_oracle_algorithm() {
    let out = run_cli(&[
        "gb",
        "--bench",
        "cyclic:3",
        "--algorithm",
        "buchberger",
        "--certify",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stats_counters_are_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stats.json");
    for extra in [&[][..], &["--algorithm", "buchberger"][..]] {
        let mut args = vec![
            "gb",
            "--bench",
            "katsura:3",
            "--stats",
            path.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        assert!(run_cli(&args).status.success());
        let value: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let get = |k: &str| {
            value[k]
                .as_u64()
                .unwrap_or_else(|| panic!("missing key {k}"))
        };
        assert!(get("pairs_pruned") <= get("pairs_generated"));
        assert!(get("basis_size_reduced") <= get("basis_size_raw"));
        assert!(value["wall_time"].is_f64());
    }
}

#[test]
fn unit_ideals_collapse_to_one() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("unit.txt");
    std::fs::write(&sys, "ring 7 grevlex x\nx\nx + 1\n").unwrap();
    let out = run_cli(&["gb", sys.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ring 7 grevlex x\n1\n");
}

#[test]
fn random_bench_respects_the_seed() {
    let a = stdout(&run_cli(&[
        "gb", "--bench", "random:3", "--seed", "42", "--verify",
    ]));
    let b = stdout(&run_cli(&[
        "gb", "--bench", "random:3", "--seed", "42", "--verify",
    ]));
    let c = stdout(&run_cli(&[
        "gb", "--bench", "random:3", "--seed", "43", "--verify",
    ]));
    assert_eq!(a, b);
    assert!(a.contains("gb-check: pass"));
    assert!(c.contains("gb-check: pass"));
    assert_ne!(a, c, "different seeds should give different systems");
}

#[test]
fn mismatched_ring_headers_are_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("sys.txt");
    let bas = dir.path().join("bas.txt");
    std::fs::write(&sys, "ring 7 grevlex x y\nx\n").unwrap();
    std::fs::write(&bas, "ring 32003 grevlex x y\nx\n").unwrap();
    let out = run_cli(&["verify", sys.to_str().unwrap(), bas.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zero_generator_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("zero.txt");
    std::fs::write(&sys, "ring 32003 lex x\nx - x\nx\n").unwrap();
    let out = run_cli(&["gb", sys.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ring 32003 lex x\nx\n");
    assert!(Path::new(sys.to_str().unwrap()).exists());
}
