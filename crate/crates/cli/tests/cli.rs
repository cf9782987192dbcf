use std::io::Write;
use std::process::{Command, Output, Stdio};

use charmorph_cli::record::Record;

fn charmorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charmorph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Record> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad line {l}: {e}")))
        .collect()
}

fn verdicts(rs: &[Record]) -> Vec<(String, String)> {
    rs.iter()
        .filter_map(|r| match r {
            Record::Check { check, verdict, .. } => Some((check.clone(), verdict.clone())),
            _ => None,
        })
        .collect()
}

#[test]
fn example1_char_passes_hom_fails() {
    let o = charmorph(&[
        "check",
        "--fixture",
        "example1",
        "--a",
        "1",
        "--b",
        "1",
        "--checks",
        "char,hom",
    ]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("char: pass"), "{text}");
    assert!(text.contains("hom: fail"), "{text}");
    assert!(text.contains("[0 2; 0 0]"), "{text}");
}

#[test]
fn diag_hom_passes_everything() {
    let o = charmorph(&[
        "check",
        "--fixture",
        "diag_hom",
        "--d",
        "3",
        "--dim",
        "3",
        "--checks",
        "hom,char,minchar,nc",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn roots_check_over_cyclotomic_field() {
    let pass = charmorph(&[
        "check",
        "--fixture",
        "diag_hom",
        "--mult",
        "2,1",
        "--field",
        "cyclotomic:3",
        "--checks",
        "roots",
        "--n",
        "3",
    ]);
    assert_eq!(code(&pass), 0, "{}", stdout(&pass));
    let fail = charmorph(&[
        "check",
        "--fixture",
        "example1",
        "--field",
        "cyclotomic:4",
        "--checks",
        "roots",
        "--n",
        "4",
    ]);
    assert_eq!(code(&fail), 1);
}

#[test]
fn jsonl_round_trips_verdicts() {
    let o = charmorph(&[
        "check",
        "--fixture",
        "example1",
        "--checks",
        "hom,char,minchar,nc",
        "--classify",
        "--output",
        "jsonl",
    ]);
    assert_eq!(code(&o), 1);
    let rs = records(&o);
    assert_eq!(
        verdicts(&rs),
        [
            ("hom", "fail"),
            ("char", "pass"),
            ("minchar", "fail"),
            ("nc", "fail")
        ]
        .map(|(a, b)| (a.to_string(), b.to_string()))
    );
    for (line, r) in stdout(&o).lines().zip(&rs) {
        assert_eq!(serde_json::to_string(r).unwrap(), line);
    }
    assert!(rs.iter().any(|r| matches!(
        r,
        Record::Classification { irreducibility, witness: Some(w), .. }
            if irreducibility == "reducible" && w == &vec![vec!["1".to_string(), "0".to_string()]]
    )));
}

#[test]
fn example2_is_irreducible_non_homomorphism() {
    let o = charmorph(&[
        "check",
        "--fixture",
        "example2",
        "--checks",
        "char,hom",
        "--classify",
        "--output",
        "jsonl",
    ]);
    assert_eq!(code(&o), 1);
    let rs = records(&o);
    assert!(rs.contains(&Record::Classification {
        generated_dimension: 9,
        irreducibility: "irreducible".into(),
        certificate: Some("generated_dimension 9".into()),
        witness: None,
    }));
}

#[test]
fn fixture_document_round_trips_through_check() {
    let doc = charmorph(&["fixtures", "example2"]);
    assert_eq!(code(&doc), 0);
    let mut child = Command::new(env!("CARGO_BIN_EXE_charmorph"))
        .args([
            "check", "--input", "-", "--checks", "char,hom", "--output", "jsonl",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&doc.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 1);
    assert_eq!(
        verdicts(&records(&o)),
        vec![
            ("char".into(), "pass".into()),
            ("hom".into(), "fail".into())
        ]
    );
}

#[test]
fn field_override_reinterprets_document() {
    let dir = std::env::temp_dir().join(format!("charmorph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e2.txt");
    std::fs::write(&path, charmorph(&["fixtures", "example2"]).stdout).unwrap();
    let p = path.to_str().unwrap();
    // characteristic 2 cannot hold the entries 1/2
    assert_eq!(
        code(&charmorph(&["check", "--input", p, "--field", "gf:2"])),
        2
    );
    let o = charmorph(&["check", "--input", p, "--field", "gf:7", "--checks", "char"]);
    assert_eq!(code(&o), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn precondition_and_usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["check", "--fixture", "example1", "--checks", "roots"],
        &[
            "check",
            "--fixture",
            "example1",
            "--checks",
            "roots",
            "--n",
            "3",
        ],
        &[
            "check",
            "--fixture",
            "diag_hom",
            "--d",
            "3",
            "--dim",
            "3",
            "--field",
            "gf:3",
            "--checks",
            "nc",
        ],
        &["check", "--fixture", "example1", "--a", "1", "--b", "-1"],
        &["check", "--fixture", "example2", "--field", "gf:2"],
        &["check", "--fixture", "nope"],
        &["check", "--input", "/nonexistent/charmorph.txt"],
        &["check", "--fixture", "example1", "--checks", "hom,bogus"],
        &[
            "search", "--field", "gf:3", "--d", "2", "--dim", "2", "--mode", "sideways",
        ],
        &["search", "--field", "gf:3", "--d", "3", "--dim", "3"],
        &["search", "--field", "rational", "--d", "2", "--dim", "1"],
        &["lemma", "--n", "1"],
        &["check"],
        &[],
    ];
    for args in cases {
        let o = charmorph(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stdout(&o));
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_document_reports_position() {
    let dir = std::env::temp_dir().join(format!("charmorph-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "field rational\nd 1\ndim 2\nmatrix 1\n1 0 0\n0 1\n").unwrap();
    let o = charmorph(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 5"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_small_cases() {
    let o = charmorph(&[
        "search", "--field", "gf:3", "--d", "2", "--dim", "1", "--output", "jsonl",
    ]);
    assert_eq!(code(&o), 0);
    let rs = records(&o);
    let alphas: Vec<_> = rs
        .iter()
        .filter_map(|r| match r {
            Record::SearchResult { alphas, is_hom, .. } => {
                assert!(is_hom);
                Some(alphas.iter().map(|m| m[0][0].clone()).collect::<Vec<_>>())
            }
            _ => None,
        })
        .collect();
    assert_eq!(alphas, vec![vec!["0", "1"], vec!["1", "0"]]);
    assert!(matches!(
        rs.last(),
        Some(Record::SearchSummary {
            examined: 9,
            characteristic: 2,
            distinct: 2,
            ..
        })
    ));
}

#[test]
fn search_output_is_deterministic() {
    let args = [
        "search", "--field", "gf:3", "--d", "2", "--dim", "2", "--output", "jsonl",
    ];
    let a = charmorph(&args);
    let b = charmorph(&args);
    assert_eq!(a.stdout, b.stdout);
    let random = [
        "search", "--field", "gf:5", "--d", "2", "--dim", "2", "--mode", "random", "--budget",
        "2000", "--seed", "9",
    ];
    assert_eq!(charmorph(&random).stdout, charmorph(&random).stdout);
}

#[test]
fn lemma_reports_only_degenerate_counterexamples() {
    // The ratio statement fails exactly when a = c = 0 (both ratios are 0),
    // which the verifier reports and flags.
    let o = charmorph(&["lemma", "--n", "12", "--output", "jsonl"]);
    assert_eq!(code(&o), 1);
    let rs = records(&o);
    let count = rs
        .iter()
        .filter(|r| {
            matches!(
                r,
                Record::LemmaCounterexample {
                    degenerate: true,
                    ..
                }
            )
        })
        .count();
    assert_eq!(count, 11 * 10);
    assert!(matches!(
        rs.last(),
        Some(Record::LemmaSummary {
            counterexamples: 110,
            degenerate: 110,
            ..
        })
    ));
    assert_eq!(code(&charmorph(&["lemma", "--n", "2"])), 0);
}

#[test]
fn fixtures_listing() {
    let o = charmorph(&["fixtures"]);
    assert_eq!(stdout(&o), "example1\nexample2\ndiag_hom\n");
}
