//! End-to-end tests of the `galtab` binary (exit codes, environment cap,
//! byte determinism) and the text/structured content cross-check.

use std::process::Command;

use galtab::cli::render_both;

fn galtab(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_galtab"))
        .args(args)
        .env_remove("GALTAB_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

#[test]
fn binary_exit_codes() {
    let ok = galtab(&["table", "S3"]);
    assert_eq!(ok.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&ok.stdout);
    assert!(stdout.contains("ch2") && stdout.contains("-1"));

    let domain = galtab(&["table", "S99"]);
    assert_eq!(domain.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&domain.stderr),
        "error: builtin parameter 99 out of supported range for family S\n"
    );

    let usage = galtab(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));

    let help = galtab(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn element_cap_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_galtab"))
        .args(["table", "S5"])
        .env("GALTAB_MAX_ELEMENTS", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("element cap of 10"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn binary_byte_determinism() {
    for args in [
        &["table", "A5"][..],
        &["galois", "A5", "--format", "structured"][..],
        &["pairs", "Q8"][..],
        &["cover", "dihedral", "6", "--ell", "5"][..],
    ] {
        let a = galtab(args);
        let b = galtab(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

// Every leaf value of the structured record must appear verbatim in the
// text rendering of the same command.
#[test]
fn structured_and_text_carry_the_same_content() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["galtab", "table", "S3"],
        vec!["galtab", "table", "Q8"],
        vec!["galtab", "table", "A5"],
        vec!["galtab", "galois", "A5", "--ell", "7"],
        vec!["galtab", "galois", "Z5"],
        vec!["galtab", "pairs", "S3"],
        vec!["galtab", "braid", "S3", "--word", "s1 s2'", "--pair", "(1 2 3),(1 2)"],
        vec!["galtab", "cover", "cyclic", "6", "--ell", "5"],
        vec!["galtab", "cover", "dihedral", "3", "--ell", "5"],
        vec!["galtab", "tuples", "S3", "--n", "2"],
    ];
    for argv in commands {
        let (record, text) = render_both(argv.clone()).expect("command succeeds");
        for (path, value) in record.leaves() {
            assert!(
                text.contains(&value),
                "command {argv:?}: structured leaf {path}={value} missing from text:\n{text}"
            );
        }
    }
}

#[test]
fn structured_rows_carry_exact_golden_values() {
    use galtab::cyclo::CycNumber;
    let out = galtab(&["table", "A5", "--format", "structured"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let golden = |ks: [i64; 2]| {
        let mut acc = CycNumber::one(5).unwrap();
        for k in ks {
            acc = &acc + &CycNumber::root_of_unity(5, k).unwrap();
        }
        acc.embed(30).unwrap().terms_string()
    };
    let plus = golden([1, 4]);
    let minus = golden([2, 3]);
    for value in [&plus, &minus] {
        let found = stdout
            .lines()
            .filter(|l| l.starts_with("rows.1.") || l.starts_with("rows.2."))
            .any(|l| l.ends_with(&format!("={value}")));
        assert!(found, "missing exact value {value} in:\n{stdout}");
    }
    assert!(stdout.contains("exponent=30"));
    assert!(stdout.contains("degrees.0=1"));
}
