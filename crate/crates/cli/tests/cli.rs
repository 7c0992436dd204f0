use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn granulab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_granulab"))
        .args(args)
        .env_remove("GRANULAB_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[track_caller]
fn ok(args: &[&str]) -> String {
    let out = granulab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[track_caller]
fn status(args: &[&str]) -> i32 {
    granulab(args).status.code().expect("exited normally")
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn scalar_product() {
    assert_eq!(ok(&["eval", "T2", "--scalar", "0.3", "0.8"]), "0.24\n");
}

#[test]
fn min_is_idempotent_on_labels() {
    let v = json(&ok(&[
        "eval",
        "T3",
        "maybe",
        "maybe",
        "--termset",
        "L1",
        "--format",
        "json",
    ]));
    assert_eq!(v["label"], "maybe");
    assert!(v["distance"].as_f64().unwrap() < 1e-12);
}

#[test]
fn bounded_conjunction_of_unlikely_is_impossible() {
    // Both supports lie in [0, 0.35], where max(0, a + b - 1) is 0.
    let v = json(&ok(&[
        "eval", "T1", "unlikely", "unlikely", "--format", "json",
    ]));
    assert_eq!(v["label"], "impossible");
    assert_eq!(v["support"], serde_json::json!([0.0, 0.0]));
}

#[test]
fn eval_csv_lists_levels() {
    let csv = ok(&[
        "eval",
        "T2",
        "maybe",
        "likely",
        "--resolution",
        "11",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "level,lo,hi");
    assert_eq!(lines.len(), 12);
    assert!(lines[11].starts_with("1,"));
}

#[test]
fn eval_rejects_discontinuous_fuzzy_and_bad_operands() {
    assert_eq!(status(&["eval", "T0", "maybe", "maybe"]), 3);
    assert_eq!(status(&["eval", "T2", "maybe", "sometimes"]), 3);
    assert_eq!(status(&["eval", "T2", "maybe"]), 2);
    assert_eq!(status(&["eval", "T2", "--scalar", "1.5", "0.2"]), 3);
    assert_eq!(status(&["eval", "Tbogus", "--scalar", "0.5", "0.2"]), 3);
}

#[test]
fn termset_list_and_show() {
    let list = ok(&["termset", "list"]);
    for name in ["L1", "L2", "L3"] {
        assert!(list.contains(&format!("| {name} |")), "{list}");
    }
    let csv = ok(&["termset", "show", "L1", "--format", "csv"]);
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let expected = [
        ["impossible", "0", "0", "0", "0"],
        ["unlikely", "0", "0.25", "0", "0.1"],
        ["maybe", "0.4", "0.6", "0.1", "0.1"],
        ["likely", "0.75", "1", "0.1", "0"],
        ["certain", "1", "1", "0", "0"],
    ];
    assert_eq!(rows.len(), 5);
    for (row, want) in rows.iter().zip(expected) {
        assert_eq!(row[..5], want);
    }
}

#[test]
fn unknown_termset_fails() {
    let out = granulab(&["termset", "show", "bogus"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn termset_json_round_trips_and_svg_plots() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l2.json");
    let p = path.to_str().unwrap();
    ok(&["termset", "show", "L2", "--format", "json", "--out", p]);
    assert_eq!(
        ok(&["termset", "show", p, "--format", "csv"]),
        ok(&["termset", "show", "L2", "--format", "csv"])
    );
    let svg = ok(&["termset", "show", "L3", "--format", "svg"]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("extremely_likely"));
}

#[test]
fn compare_with_itself_is_zero() {
    let v = json(&ok(&[
        "compare",
        "--tnorm",
        "T2",
        "--tnorm",
        "T2",
        "--termset",
        "L2",
    ]));
    assert_eq!(v["count"], 0);
    assert_eq!(v["percent"], 0.0);
    assert_eq!(v["cells"], 45);
    assert_eq!(status(&["compare", "--tnorm", "T2"]), 2);
}

#[test]
fn compare_extremes_differ() {
    let v = json(&ok(&[
        "compare",
        "--tnorm",
        "T1",
        "--tnorm",
        "T3",
        "--termset",
        "L1",
    ]));
    assert!(v["count"].as_u64().unwrap() > 0);
}

#[test]
fn classes_at_full_tolerance_is_one() {
    let v = json(&ok(&[
        "classes",
        "--threshold",
        "1.0",
        "--termset",
        "L3",
        "--format",
        "json",
    ]));
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["classes"][0].as_array().unwrap().len(), 9);
}

#[test]
fn classes_at_zero_tolerance_separates_distinct_tables() {
    let v = json(&ok(&[
        "classes",
        "--threshold",
        "0%",
        "--tnorm",
        "T1",
        "--tnorm",
        "T3",
        "--termset",
        "L1",
        "--format",
        "json",
    ]));
    assert_eq!(v["classes"], serde_json::json!([["T1"], ["T3"]]));
}

#[test]
fn invalid_thresholds() {
    assert_eq!(status(&["classes", "--threshold", "1.5"]), 3);
    assert_eq!(status(&["classes", "--threshold", "half"]), 2);
}

#[test]
fn closure_formats() {
    let csv = ok(&[
        "closure",
        "--tnorm",
        "T3",
        "--termset",
        "L1",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "T3,impossible,unlikely,maybe,likely,certain");
    // min(x, x) is x, so the diagonal reproduces each label.
    for (i, line) in lines[1..].iter().enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[i + 1], cells[0]);
    }
    let v = json(&ok(&["closure", "--tnorm", "T2", "--format", "json"]));
    assert_eq!(v["cells"].as_array().unwrap().len(), 5);
    assert_eq!(status(&["closure", "--tnorm", "T2", "--format", "svg"]), 2);
    assert_eq!(status(&["closure", "--tnorm", "T0"]), 3);
}

#[test]
fn axioms_pass_and_flag_ladder_equality() {
    let text = ok(&["axioms", "Tsc(p=-1)"]);
    assert!(text.contains("equals T1"), "{text}");
    assert!(text.contains("result: pass"));
    let v = json(&ok(&["axioms", "T2", "--grid", "11", "--format", "json"]));
    assert_eq!(v["passes"], true);
    assert_eq!(v["equals"], serde_json::json!(["T2"]));
}

#[test]
fn axioms_usage_and_violation_codes() {
    assert_eq!(status(&["axioms", "T2", "--grid", "1"]), 2);
    // A zero tolerance is violated by the rounding in Frank's logarithms.
    assert_eq!(
        status(&["axioms", "Frank(theta=0.5)", "--tolerance", "0"]),
        5
    );
}

#[test]
fn weights_flag_and_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(
        &cfg,
        r#"{"weight_centroid": 0.7, "weight_area": 0.3, "termset": "L2"}"#,
    )
    .unwrap();
    let via_file = Command::new(env!("CARGO_BIN_EXE_granulab"))
        .args(["closure", "--tnorm", "T2", "--format", "csv"])
        .env("GRANULAB_CONFIG", &cfg)
        .output()
        .unwrap();
    assert!(via_file.status.success());
    let via_flags = ok(&[
        "closure",
        "--tnorm",
        "T2",
        "--termset",
        "L2",
        "--weights",
        "0.7,0.3",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&via_file), via_flags);

    assert_eq!(
        status(&["--config", "/nonexistent/cfg.json", "termset", "list"]),
        4
    );
    fs::write(&cfg, r#"{"weight_centroid": -1}"#).unwrap();
    assert_eq!(
        status(&[
            "--config",
            cfg.to_str().unwrap(),
            "closure",
            "--tnorm",
            "T2"
        ]),
        3
    );
    assert_eq!(status(&["closure", "--tnorm", "T2", "--weights", "0.7"]), 2);
}

#[test]
fn unwritable_output_is_an_io_error() {
    assert_eq!(
        status(&["termset", "show", "L1", "--out", "/nonexistent/dir/x.md"]),
        4
    );
}

#[test]
fn unknown_subcommand_is_usage() {
    assert_eq!(status(&["bogus"]), 2);
}

fn files_under(dir: &Path, ext: &str) -> usize {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            if p.is_dir() {
                files_under(&p, ext)
            } else {
                usize::from(p.extension().is_some_and(|e| e == ext))
            }
        })
        .sum()
}

#[test]
fn experiment_writes_every_table_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let first = ok(&[
        "experiment",
        "--preset",
        "paper",
        "--out",
        a.to_str().unwrap(),
    ]);
    let second = ok(&[
        "experiment",
        "--preset",
        "paper",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(first, second);
    assert_eq!(files_under(&a, "csv"), 27);
    assert_eq!(files_under(&a, "md"), 28);
    for rel in ["report.json", "summary.md", "L2/Tsc_p_m0.5.csv"] {
        assert_eq!(
            fs::read(a.join(rel)).unwrap(),
            fs::read(b.join(rel)).unwrap(),
            "{rel}"
        );
    }
    let report = json(&fs::read_to_string(a.join("report.json")).unwrap());
    assert_eq!(report["termsets"].as_array().unwrap().len(), 3);
    assert_eq!(
        report["termsets"][1]["partitions"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        status(&[
            "experiment",
            "--preset",
            "nope",
            "--out",
            a.to_str().unwrap()
        ]),
        2
    );
}
