use std::fs;
use std::process::{Command, Output};

fn latdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn delta_examples() {
    for (diagram, expected) in [
        ("0,0;1,0", "x2 − x1"),
        ("0,0;0,0", "0"),
        ("0,0;2,0", "x2^2/2 − x1^2/2"),
        ("1,0;0,0", "−x2 + x1"),
    ] {
        let out = latdet(&["delta", "--diagram", diagram]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(code(&latdet(&["delta", "--diagram", "0,0;x"])), 2);
    assert_eq!(
        code(&latdet(&[
            "apply",
            "--op",
            "s",
            "--param",
            "1,2",
            "--diagram",
            "1,0"
        ])),
        2
    );
    assert_eq!(
        code(&latdet(&[
            "apply",
            "--op",
            "q",
            "--param",
            "1",
            "--diagram",
            "1,0"
        ])),
        2
    );
    assert_eq!(
        code(&latdet(&[
            "psi",
            "--tableau",
            "1,2|3",
            "--shape-lambda",
            "3"
        ])),
        2
    );
    assert_eq!(code(&latdet(&["frobnicate"])), 2);
}

#[test]
fn apply_examples() {
    let out = latdet(&[
        "apply",
        "--op",
        "p",
        "--param",
        "1",
        "--axis",
        "x",
        "--diagram",
        "1,0",
    ]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "+1 * [0,0]"));

    let schur = latdet(&[
        "apply",
        "--op",
        "s",
        "--param",
        "1,1",
        "--diagram",
        "2,0;2,1",
        "--expand",
    ]);
    let elem = latdet(&[
        "apply",
        "--op",
        "e",
        "--param",
        "2",
        "--diagram",
        "2,0;2,1",
        "--expand",
    ]);
    assert_eq!(code(&schur), 0);
    assert_eq!(stdout(&schur), stdout(&elem));
    assert!(stdout(&schur).contains("\n= "));

    let y = latdet(&[
        "apply",
        "--op",
        "h",
        "--param",
        "1",
        "--axis",
        "y",
        "--diagram",
        "0,0;0,2",
    ]);
    let x = latdet(&[
        "apply",
        "--op",
        "h",
        "--param",
        "1",
        "--axis",
        "x",
        "--diagram",
        "0,0;2,0",
    ]);
    let mirrored: Vec<String> = stdout(&x)
        .lines()
        .map(|line| {
            let (c, d) = line.split_once(" * ").unwrap();
            let cells: Vec<String> = d
                .trim_matches(|ch| ch == '[' || ch == ']')
                .split(';')
                .map(|cell| {
                    let (p, q) = cell.split_once(',').unwrap();
                    format!("{q},{p}")
                })
                .collect();
            format!("{c} * [{}]", cells.join(";"))
        })
        .collect();
    assert_eq!(stdout(&y), mirrored.join("\n"));
}

#[test]
fn verify_exit_codes() {
    let ok = latdet(&[
        "verify",
        "--op",
        "s",
        "--param",
        "2,1",
        "--diagram",
        "0,0;1,0;0,1;2,0",
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).starts_with("MATCH"));
    let bad = latdet(&[
        "verify",
        "--op",
        "s",
        "--param",
        "2",
        "--diagram",
        "1,0;2,0",
        "--stage-order",
        "left-to-right",
    ]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("witness"));
}

#[test]
fn psi_output() {
    let out = latdet(&["psi", "--tableau", "1,2|3", "--shape-lambda", "2,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Ψ(T)     = 1,2|3  FIXED"));

    let out = latdet(&[
        "psi",
        "--tableau",
        "7,8,10|3,9|4,5,6,8",
        "--shape-lambda",
        "3,3,3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("w        = "));
    assert!(text.contains("Ψ(Ψ(T)) = T: true"));
}

#[test]
fn tableaux_listing() {
    let out = latdet(&["tableaux", "--shape", "2", "--n", "2"]);
    assert_eq!(stdout(&out), "1|1\n1|2\n2|2\ncount: 3");
    let out = latdet(&["--json", "tableaux", "--shape", "2,1", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 8);
}

#[test]
fn hilbert_table() {
    let out = latdet(&["hilbert", "--ferrers", "2,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("total\t6"));
    let out = latdet(&["--json", "hilbert", "--diagram", "0,0;1,0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["total"], 2);
}

#[test]
fn suite_runs() {
    let smoke = latdet(&["suite", "--operators", "s", "--max-weight", "1"]);
    assert_eq!(code(&smoke), 0);
    assert!(stdout(&smoke).contains("failed: 0"));

    let mutated = latdet(&["suite", "--operators", "s", "--mutate-stage-order"]);
    assert_eq!(code(&mutated), 1);
    assert!(stdout(&mutated).contains("first failure"));

    let dir = std::env::temp_dir().join(format!("latdet-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.conf");
    fs::write(
        &good,
        "max_cells=2\nbox_rows=2\nbox_cols=2\noperators=p,e\naxes=x\n",
    )
    .unwrap();
    let out = latdet(&["--json", "suite", "--config", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["total"], 10 * 6);

    let bad = dir.join("bad.conf");
    fs::write(&bad, "max_cells=two\n").unwrap();
    assert_eq!(
        code(&latdet(&["suite", "--config", bad.to_str().unwrap()])),
        2
    );
    assert_eq!(
        code(&latdet(&["suite", "--config", "/nonexistent/latdet.conf"])),
        2
    );
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn printed_values_reparse() {
    let out = latdet(&[
        "apply",
        "--op",
        "s",
        "--param",
        "2,1",
        "--diagram",
        "0,0;1,0;2,0;0,1",
        "--expand",
    ]);
    let text = stdout(&out);
    let (sum, poly) = text.split_once("\n= ").unwrap();
    let sum: lattice_det::SignedDiagramSum = sum.parse().unwrap();
    let poly = lattice_det::Polynomial::parse(poly, 4).unwrap();
    assert_eq!(lattice_det::operators::expand(&sum, 4).unwrap(), poly);
}
