use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_affine-signature"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn point_reports_wall_pairing() {
    let (code, out, _) = run(&["point", "1/8,1/4"]);
    assert_eq!(code, 0);
    assert!(out.contains("on walls [1]"));
    assert!(out.contains("q_1 half-integer <-> g_2 = 0"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn point_json_renders_rationals() {
    let (code, out, _) = run(&["point", "1/3,1/3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], serde_json::json!(["1/3", "0", "-1/3"]));
    assert_eq!(v["check"]["gamma"], serde_json::json!([0, 0, 0]));
    assert_eq!(v["check"]["pass"], serde_json::json!(true));
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(run(&["point", "1/2,1/2"]).0, 2);
    assert_eq!(run(&["point", "abc"]).0, 2);
    assert_eq!(run(&["theorem1", "--N", "1"]).0, 2);
    assert_eq!(run(&["theorem1", "--trials", "0"]).0, 2);
    assert_eq!(run(&["zuber", "--N", "5", "--level", "60"]).0, 2);
    assert_eq!(run(&["graph", "--N", "3", "--level", "0"]).0, 2);
}

#[test]
fn graph_dump_and_dot() {
    let (code, out, _) = run(&["graph", "--N", "2", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "1: (1) → (2)\n1: (2) → (1)\n1: (2) → (3)\n1: (3) → (2)\n"
    );
    let (code, out, _) = run(&["graph", "--N", "3", "--level", "1", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("->").count(), 6);
}

#[test]
fn theorem1_json_is_reproducible_across_thread_modes() {
    let args = [
        "theorem1",
        "--N",
        "3,4",
        "--trials",
        "40",
        "--boundary-fraction",
        "1/2",
        "--seed",
        "77",
        "--format",
        "json",
    ];
    let (c1, a, _) = run(&args);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let (c2, b, _) = run(&seq);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.contains("\"schema_version\": 1"));
}

#[test]
fn zuber_csv_rows() {
    let (code, out, _) = run(&["zuber", "--N", "2", "--levels", "1..10", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    for (idx, row) in rows.iter().enumerate() {
        let h = idx + 3;
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[4..7], [(h - 1).to_string(), "0".into(), "0".into()]);
        assert_eq!(*fields.last().unwrap(), "true");
    }
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempdir();
    let cfg = dir.join("campaign.conf");
    std::fs::write(&cfg, "# smoke\nN=2,3\ntrials=5\nseed=3\n").unwrap();
    let out_path = dir.join("report.json");
    let (code, _, _) = run(&[
        "theorem1",
        "--config",
        cfg.to_str().unwrap(),
        "--trials",
        "2",
        "--format",
        "json",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(v["config"]["trials"], serde_json::json!(2));
    assert_eq!(v["config"]["n_values"], serde_json::json!([2, 3]));
    assert_eq!(v["totals"]["cases"], serde_json::json!(4));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("affine-signature-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
