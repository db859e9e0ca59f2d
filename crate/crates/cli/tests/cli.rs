use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mheight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mheight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn goldens() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["gen", "--family", "dual-dodecahedral"],
            "gen_dual_dodecahedral.json",
        ),
        (
            &[
                "profile",
                "--family",
                "dual-icosahedral",
                "--method",
                "closed",
            ],
            "profile_dual_icosahedral_closed.json",
        ),
        (
            &[
                "profile",
                "--family",
                "dual-polygonal",
                "--n",
                "6",
                "--method",
                "closed",
                "--format",
                "csv",
            ],
            "profile_dual_polygonal_6.csv",
        ),
        (
            &[
                "capability",
                "--family",
                "dual-icosahedral",
                "--ratio",
                "6.5",
            ],
            "capability_dual_icosahedral.json",
        ),
    ];
    for (args, file) in cases {
        let out = mheight(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), golden(file), "{args:?}");
    }
}

#[test]
fn lp_profile_reproduces_the_icosahedral_table() {
    let out = mheight(&["profile", "--family", "dual-icosahedral", "--method", "lp"]);
    assert!(out.status.success());
    let doc = json(&out);
    let values: Vec<&Value> = doc["heights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| &h["value"])
        .collect();
    let s5 = 5f64.sqrt();
    for (v, want) in values.iter().zip([s5, s5, 2.0 + s5]) {
        assert!((v.as_f64().unwrap() - want).abs() < 1e-9 * want);
    }
    assert_eq!(values[3], "inf");
    assert_eq!(values[4], "inf");
}

#[test]
fn last_polygonal_height_is_infinite() {
    let out = mheight(&[
        "height",
        "--family",
        "dual-polygonal",
        "--n",
        "3",
        "--m",
        "2",
        "--method",
        "lp",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], "inf");
}

#[test]
fn search_method_approaches_the_closed_value() {
    let out = mheight(&[
        "height",
        "--family",
        "dual-icosahedral",
        "--m",
        "3",
        "--method",
        "search",
    ]);
    let v = json(&out)["value"].as_f64().unwrap();
    assert!((v - (2.0 + 5f64.sqrt())).abs() < 1e-4);
}

#[test]
fn cross_check_suite_passes() {
    let out = mheight(&["verify", "--suite", "cross-check", "--samples", "0"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let doc = json(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 12);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "--suite",
        "dode-ranks",
        "--samples",
        "300",
        "--seed",
        "11",
    ];
    let (a, b) = (mheight(&args), mheight(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = mheight(&[
        "verify",
        "--suite",
        "dode-ranks",
        "--samples",
        "300",
        "--seed",
        "12",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn capability_spec_report() {
    let out = mheight(&[
        "capability",
        "--family",
        "dual-dodecahedral",
        "--tau",
        "1",
        "--sigma",
        "0",
        "--delta",
        "1",
        "--Delta",
        "7",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["feasible"], true);
    assert_eq!(doc["spec"]["Delta"], 7.0);

    let out = mheight(&[
        "capability",
        "--family",
        "dual-dodecahedral",
        "--tau",
        "1",
        "--sigma",
        "0",
        "--delta",
        "1",
        "--Delta",
        "5",
    ]);
    assert_eq!(json(&out)["feasible"], false);
}

#[test]
fn domain_errors_exit_one_with_json() {
    for args in [
        &[
            "height",
            "--family",
            "dual-polygonal",
            "--n",
            "3",
            "--m",
            "5",
            "--method",
            "closed",
        ][..],
        &["gen", "--family", "dual-polygonal"],
        &[
            "capability",
            "--family",
            "dual-icosahedral",
            "--tau",
            "0",
            "--sigma",
            "0",
            "--delta",
            "1",
            "--Delta",
            "9",
        ],
        &[
            "height",
            "--family",
            "dual-icosahedral",
            "--m",
            "2",
            "--method",
            "search",
            "--resolution",
            "1",
        ],
    ] {
        let out = mheight(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert_eq!(json(&out)["error"]["kind"], "invalid-parameter", "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[
            "height",
            "--family",
            "dual-icosahedral",
            "--m",
            "3",
            "--bogus",
        ][..],
        &[
            "profile",
            "--family",
            "dual-icosahedral",
            "--method",
            "search",
        ],
        &["capability", "--family", "dual-icosahedral", "--tau", "1"],
        &[
            "capability",
            "--family",
            "dual-icosahedral",
            "--ratio",
            "7",
            "--tau",
            "1",
        ],
        &["frobnicate"],
    ] {
        let out = mheight(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}
