use std::process::{Command, Output};

fn equihom(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equihom"))
        .args(args)
        .env("EQUIHOM_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn homology_of_m37() {
    let dir = tempfile::tempdir().unwrap();
    let o = equihom(&["homology", "--p", "3", "--n", "7"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "b~_-1 = 0\nb~_0 = 0\nb~_1 = 36\n");
    let o = equihom(
        &["equivariant", "--p", "3", "--n", "7", "--degree", "1"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "H~_1\tbetti 36\ts[5,1,1] + s[3,3,1]\n");
}

#[test]
fn json_output_is_stable_across_threads_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str| {
        stdout(&equihom(
            &[
                "--format",
                "json",
                "--threads",
                threads,
                "equivariant",
                "--p",
                "3",
                "--n",
                "9",
            ],
            dir.path(),
        ))
    };
    let first = run("1");
    assert!(first.starts_with("{\"complex\":\"M_3(9)\""));
    let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(parsed["degrees"].as_array().unwrap().len(), 4);
    assert_eq!(run("4"), first);
    assert_eq!(run("1"), first);
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        equihom(&["formula", "bogus"], dir.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        equihom(
            &["homology", "--complex", "pcycle", "--p", "4", "--n", "8"],
            dir.path()
        )
        .status
        .code(),
        Some(2)
    );
    let o = equihom(
        &["homology", "--complex", "quillen", "--p", "3", "--n", "12"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-large"));
}

#[test]
fn verification_commands_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let o = equihom(&["verify-table"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("12/12 rows match\n"));
    let o = equihom(&["verify-conjecture", "--p", "3", "--k", "2"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("difference f = 0"));
    let o = equihom(&["cross-check", "--suite", "carre"], dir.path());
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn formulas_print_schur_expansions() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        stdout(&equihom(&["formula", "fp", "--p", "3"], dir.path())),
        "s[3]\n"
    );
    assert_eq!(
        stdout(&equihom(
            &["formula", "euler-poincare", "--p", "3", "--n", "6"],
            dir.path()
        )),
        "-s[4,2]\n"
    );
}
