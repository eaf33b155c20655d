//! End-to-end tests of the `ged` binary: exit codes, report shapes, parsing
//! diagnostics, and the documented flag behavior.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

static NEXT_FIXTURE: AtomicU32 = AtomicU32::new(0);

fn fixture(content: &str) -> PathBuf {
    let n = NEXT_FIXTURE.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!("ged-cli-{}-{n}.csv", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ged"))
        .args(args)
        .env_remove("GED_SEED")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("exact"));
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    // unknown flag
    let p = fixture("0,0\n1,0\n");
    let out = run(&["exact", "--p", p.to_str().unwrap(), "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    // missing required --q
    let out = run(&["exact", "--p", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // conflicting formats
    let out = run(&[
        "exact", "--p", p.to_str().unwrap(), "--q", p.to_str().unwrap(), "--json", "--tsv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn data_errors_exit_two() {
    let good = fixture("0,0\n1,0\n");
    let good_path = good.to_str().unwrap();

    // unreadable file
    let out = run(&["exact", "--p", good_path, "--q", "/ged-no-such-file.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains("/ged-no-such-file.csv"));

    // arity mismatch names the offending line
    let bad = fixture("0,0\n1\n");
    let out = run(&["exact", "--p", good_path, "--q", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_text(&out);
    assert!(err.contains(":2:"), "line number missing: {err}");

    // non-numeric coordinate
    let bad = fixture("0,0\n1,zap\n");
    let out = run(&["exact", "--p", good_path, "--q", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains(":2:"));

    // file with no data rows
    let empty = fixture("# only a comment\n\n");
    let out = run(&["exact", "--p", good_path, "--q", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // downstream validation surfaces as a data error
    let out = run(&["banded", "--p", good_path, "--q", good_path, "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["exact", "--p", good_path, "--q", good_path, "--gap-penalty", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let p = fixture("# header\n\n0.5,1.5\n");
    let q = fixture("0.5,1.5\n");
    let out = run(&["exact", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["n"], 1);
    assert_eq!(report["cost"], 0.0);
}

#[test]
fn identical_files_give_zero_cost_and_full_matching() {
    let p = fixture("0,0\n1,0\n2,1\n3,1\n");
    let out = run(&["exact", "--p", p.to_str().unwrap(), "--q", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["cost"], 0.0);
    assert_eq!(report["matched_pairs"].as_array().unwrap().len(), 4);
    assert!(report["gaps_p"].as_array().unwrap().is_empty());
    assert!(report["gaps_q"].as_array().unwrap().is_empty());
    assert_eq!(report["band_exceeded"], false);
}

#[test]
fn band_exceeded_reports_and_still_exits_zero() {
    // the sequences are far apart, so the optimum drops every point: cost 4
    let p = fixture("0,0\n1,0\n");
    let q = fixture("100,0\n101,0\n");
    let (p, q) = (p.to_str().unwrap().to_owned(), q.to_str().unwrap().to_owned());

    let out = run(&["exact", "--p", &p, "--q", &q]);
    assert_eq!(stdout_json(&out)["cost"], 4.0);

    let out = run(&["banded", "--p", &p, "--q", &q, "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["band_exceeded"], true);
    assert!(report["cost"].is_null());
    assert!(stderr_text(&out).contains("--k"));

    // a band that admits the optimum returns it exactly
    let out = run(&["banded", "--p", &p, "--q", &q, "--k", "4"]);
    let report = stdout_json(&out);
    assert_eq!(report["band_exceeded"], false);
    assert_eq!(report["cost"], 4.0);
}

#[test]
fn seed_env_variable_is_a_fallback_for_the_flag() {
    let p = fixture("0,0\n1,0\n2,0\n3,0\n4,1\n5,1\n6,1\n7,1\n");
    let q = fixture("0,0.05\n1,0\n2,0.1\n13,0\n4,1.05\n5,1\n6,0.9\n7,1\n");
    let args =
        ["approx-sqrt", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap()];

    let with_flag = {
        let mut full = args.to_vec();
        full.extend(["--seed", "7"]);
        run(&full)
    };
    assert_eq!(with_flag.status.code(), Some(0));

    let with_env = Command::new(env!("CARGO_BIN_EXE_ged"))
        .args(args)
        .env("GED_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(with_env.status.code(), Some(0));
    assert_eq!(with_flag.stdout, with_env.stdout);

    // the flag wins over the environment
    let both = Command::new(env!("CARGO_BIN_EXE_ged"))
        .args(args)
        .args(["--seed", "7"])
        .env("GED_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(with_flag.stdout, both.stdout);

    // an unparsable GED_SEED is a data error
    let bad = Command::new(env!("CARGO_BIN_EXE_ged"))
        .args(args)
        .env("GED_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("GED_SEED"));
}

#[test]
fn approx_reports_carry_seed_guess_and_iteration() {
    // identical inputs take the trivial shortcut: no guessing happened,
    // so the randomized provenance fields stay absent
    let p = fixture("0,0\n1,0\n2,0\n3,0\n");
    let pp = p.to_str().unwrap();
    let out = run(&["approx-sqrt", "--p", pp, "--q", pp, "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["algorithm"], "approx-sqrt");
    assert_eq!(report["seed"], 5);
    assert_eq!(report["cost"], 0.0);
    assert!(report.get("guess").is_none());
    assert!(report.get("iteration").is_none());

    // an outlier defeats the shortcut and forces the guess loop
    let q = fixture("0,0\n1,0\n80,75\n3,0\n");
    let out = run(&["approx-sqrt", "--p", pp, "--q", q.to_str().unwrap(), "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["seed"], 5);
    assert!(report["guess"].is_number());
    assert!(report["iteration"].is_number());
    assert!(report["cost"].as_f64().unwrap() > 0.0);
}

#[test]
fn tsv_format_emits_tab_separated_lines() {
    let p = fixture("0,0\n1,0\n");
    let out = run(&["exact", "--p", p.to_str().unwrap(), "--q", p.to_str().unwrap(), "--tsv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algorithm\texact"));
    assert!(text.lines().any(|l| l == "cost\t0"));
    assert!(text.lines().any(|l| l.starts_with("pair\t1\t1\t")));
}

#[test]
fn timing_flag_adds_wall_time() {
    let p = fixture("0,0\n1,0\n");
    let pp = p.to_str().unwrap();
    let out = run(&["exact", "--p", pp, "--q", pp]);
    assert!(stdout_json(&out).get("wall_time_ms").is_none());
    let out = run(&["exact", "--p", pp, "--q", pp, "--timing"]);
    assert!(stdout_json(&out)["wall_time_ms"].is_number());
}

#[test]
fn unequal_lengths_warn_and_charge_the_tail_as_gaps() {
    let p = fixture("0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n");
    let q = fixture("0,0\n1,0\n2,0\n3,0\n");
    let out = run(&[
        "approx-sqrt", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap(), "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_text(&out).contains("lengths differ"));
    let report = stdout_json(&out);
    // identical prefix matches for free; the two extra points cost a gap each
    assert_eq!(report["n"], 6);
    assert_eq!(report["m"], 4);
    assert_eq!(report["cost"], 2.0);
    assert_eq!(report["gaps_p"], serde_json::json!([5, 6]));
    assert_eq!(report["gaps_q"], serde_json::json!([]));
}

#[test]
fn alpha_outside_the_recommended_range_warns_but_runs() {
    let p = fixture("0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n6,0\n7,0\n");
    let pp = p.to_str().unwrap();
    let out = run(&[
        "approx-alpha", "--p", pp, "--q", pp, "--alpha", "50", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_text(&out).contains("recommended range"));
    assert_eq!(stdout_json(&out)["cost"], 0.0);
}

#[test]
fn compare_prints_a_ratio_table_bounded_below_by_one() {
    let p = fixture("0,0\n1,0\n2,0\n3,1\n4,1\n5,1\n6,2\n7,2\n");
    let q = fixture("0,0.1\n1,0\n2,0.1\n30,0\n4,1.1\n5,1\n6,1.9\n7,2\n");
    let out = run(&[
        "compare", "--p", p.to_str().unwrap(), "--q", q.to_str().unwrap(), "--seed", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["algorithm"], "exact");
    assert_eq!(rows[0]["ratio"], 1.0);
    assert_eq!(rows[1]["algorithm"], "approx-sqrt");
    assert_eq!(rows[2]["algorithm"], "approx-alpha");
    for row in rows {
        assert!(row["ratio"].as_f64().unwrap() >= 1.0 - 1e-9);
    }
    assert!(report["alpha"].as_f64().unwrap() > 0.0);
}

#[test]
fn bench_reports_median_ratios_per_size() {
    let out = run(&["bench", "--sizes", "16,24", "--reps", "2", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 16);
    assert_eq!(rows[1]["n"], 24);
    for row in rows {
        assert!(row["exact_cost_median"].as_f64().unwrap() >= 0.0);
        assert!(row["sqrt_ratio_median"].as_f64().unwrap() >= 1.0 - 1e-9);
        assert!(row["alpha_ratio_median"].as_f64().unwrap() >= 1.0 - 1e-9);
        // timing columns appear only on request
        assert!(row.get("exact_ms_median").is_none());
    }
}
