use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorbit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn row<'a>(text: &'a str, first: &str) -> Vec<&'a str> {
    let line = text
        .lines()
        .find(|l| l.split_whitespace().next() == Some(first))
        .unwrap_or_else(|| panic!("no row {first} in\n{text}"));
    line.split_whitespace().collect()
}

fn value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with("  ")))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn serial_table_at_n4() {
    let t = stdout(&["tables", "--id", "serial", "--n", "4"]);
    assert_eq!(&row(&t, "B4")[2..5], ["9", "8", "7"]);
    assert_eq!(&row(&t, "C4")[2..5], ["8", "8", "8"]);
    assert_eq!(&row(&t, "D5")[2..5], ["10", "9", "8"]);
    assert_eq!(&row(&t, "A4")[3..6], ["5", "5", "5"]);
}

#[test]
fn sporadic_table_rows() {
    let t = stdout(&["tables", "--id", "sporadic"]);
    let e7 = row(&t, "E7");
    assert_eq!(&e7[2..6], ["56", "28", "0", "sympl"]);
    let g2 = row(&t, "G2");
    assert_eq!(&g2[2..6], ["7", "6", "5", "orth"]);
}

#[test]
fn csv_and_json_agree_with_text() {
    let csv = stdout(&["--format", "csv", "tables", "--id", "serial", "--n", "4"]);
    assert!(
        csv.lines().any(|l| l.starts_with("B4,w1,9,8,7,orth")),
        "{csv}"
    );
    let json = stdout(&["--format", "json", "tables", "--id", "serial", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let b4 = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["algebra"] == "B4")
        .unwrap();
    assert_eq!(b4["delta"], 7);
}

#[test]
fn output_is_byte_stable() {
    let args = ["tables", "--id", "oracle", "--max-rank", "3"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_eq!(
        stdout(&args),
        stdout(&[
            "--sequential",
            "tables",
            "--id",
            "oracle",
            "--max-rank",
            "3"
        ])
    );
}

#[test]
fn e6_secant_cone() {
    let t = stdout(&["tables", "--id", "secant-cone", "--g", "E6"]);
    let dims: Vec<&str> = t
        .lines()
        .filter(|l| l.starts_with("E6 "))
        .map(|l| l.split_whitespace().nth(5).unwrap())
        .collect();
    assert_eq!(dims, ["22", "32", "40", "42"]);
    assert_eq!(row(&t, "E6").len(), 8);
    assert!(t
        .lines()
        .any(|l| l.contains("2A1") && l.contains("tilde") && l.contains("E6/F4")));
}

#[test]
fn pairs_table_has_six_rows() {
    let t = stdout(&["tables", "--id", "pairs"]);
    let rows = t.lines().filter(|l| l.trim_end().ends_with(" ok")).count();
    assert_eq!(rows, 6);
    assert_eq!(&row(&t, "1")[1..4], ["E6/F4", "26", "22"]);
}

#[test]
fn defects_of_small_modules() {
    for (args, delta) in [
        (["defect", "G", "2", "--weight", "1,0"], "5"),
        (["defect", "A", "1", "--weight", "3"], "0"),
        (["defect", "A", "2", "--weight", "1,1"], "1"),
    ] {
        let t = stdout(&args);
        assert_eq!(value(&t, "delta"), delta, "{args:?}");
    }
    let t = stdout(&["defect", "A", "2", "--weight", "1,1"]);
    assert_eq!(value(&t, "dim CS"), "7");
    assert_eq!(value(&t, "CS fills V"), "no");
}

#[test]
fn bourbaki_numbering_permutes_weights() {
    // Bourbaki node 2 of E6 carries the adjoint module
    let dim = |args: &[&str]| value(&stdout(args), "dim V").to_string();
    assert_eq!(
        dim(&[
            "--numbering",
            "bourbaki",
            "defect",
            "E",
            "6",
            "--weight",
            "0,1,0,0,0,0"
        ]),
        "78"
    );
    assert_eq!(dim(&["defect", "E", "6", "--weight", "0,1,0,0,0,0"]), "351");
    let b = stdout(&[
        "--numbering",
        "bourbaki",
        "--format",
        "csv",
        "tables",
        "--id",
        "sporadic",
    ]);
    let p = stdout(&["--format", "csv", "tables", "--id", "sporadic"]);
    assert_ne!(b, p);
    assert_eq!(b.lines().count(), p.lines().count());
}

#[test]
fn classify_matches_the_expected_lists() {
    let t = stdout(&["classify"]);
    let g1 = t.lines().filter(|l| l.contains(" g1 ")).count();
    let g0 = t.lines().filter(|l| l.contains(" g0 ")).count();
    assert_eq!((g1, g0), (6, 2), "{t}");
    assert!(t.lines().skip(3).all(|l| l.trim_end().ends_with("yes")));
    let c = stdout(&["classify", "--show-criterion", "--max-rank", "4"]);
    assert!(c.lines().any(|l| l.starts_with("B3/A3 ")));
}

#[test]
fn verify_single_pair_writes_report() {
    let dir = std::env::temp_dir().join(format!("minorbit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let p = path.to_str().unwrap();
    let t = stdout(&[
        "verify",
        "--pair",
        "so8-so7",
        "--samples",
        "3",
        "--check",
        "matrix",
        "--report",
        p,
    ]);
    assert!(t.contains(&format!("report written to {p}")));
    assert!(t.lines().any(|l| l.contains("partition(b) = tilde")));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["failures"], 0);
    assert_eq!(
        v["matrix"]["pairs"][0]["samples"].as_array().unwrap().len(),
        3
    );
    let s = stdout(&["verify", "--check", "orbit-saturation", "--report", p]);
    assert_eq!(
        s.lines()
            .filter(|l| l.starts_with("orbit-saturation"))
            .count(),
        6
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_dump() {
    let csv = stdout(&["--format", "csv", "catalog", "--max-rank", "4"]);
    assert!(csv.lines().any(|l| l.starts_with("F4/B4,")));
    assert!(csv
        .lines()
        .any(|l| l.starts_with("A3/C2,") && l.ends_with("yes,no")));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["tables", "--id", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["defect", "G", "2", "--weight", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["defect", "H", "2", "--weight", "1,0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["classify", "--max-rank", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--pair", "e6-f4"]).status.code(), Some(2));
    let capped = run(&[
        "defect",
        "E",
        "8",
        "--weight",
        "1,0,0,0,0,0,0,0",
        "--cap",
        "100",
    ]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("dimension 248 exceeds the cap 100"));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn corrupted_fixture_exits_with_one() {
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data");
    let dir = std::env::temp_dir().join(format!("minorbit-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for f in ["orbits.txt", "pairs.txt", "involutions.txt", "modules.txt"] {
        let mut text = std::fs::read_to_string(format!("{src}/{f}")).unwrap();
        if f == "modules.txt" {
            // G2 on w1 with a wrong δ
            text = text.replace("| 7    | 6    | 5    | orth", "| 7    | 6    | 4    | orth");
        }
        std::fs::write(dir.join(f), text).unwrap();
    }
    let out = Command::new(env!("CARGO_BIN_EXE_minorbit"))
        .env("MINORBIT_DATA_DIR", &dir)
        .args(["tables", "--id", "sporadic"])
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("G2"));
}
