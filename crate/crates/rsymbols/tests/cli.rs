use std::process::Command;

use rsymbols::cli::{run, Document, Outcome, EXIT_GUARD, EXIT_OK, EXIT_USAGE};

fn rsym(args: &[&str]) -> Outcome {
    run(std::iter::once("rsym").chain(args.iter().copied()))
}

fn doc(args: &[&str]) -> Document {
    let o = rsym(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    Document::from_json(&o.stdout).unwrap()
}

#[test]
fn symplectic_rank_two_table_is_seven_by_seven() {
    let d = doc(&["kostka", "--preset", "sp", "--n", "2", "--no-cache"]);
    assert_eq!(d.kind, "kostka");
    let t = d.table("Kt_plus").unwrap();
    assert_eq!((t.rows.len(), t.cols.len()), (7, 7));
    assert!(d.table("Kt_minus").is_some());
}

#[test]
fn rank_zero_is_one_by_one_identity() {
    let d = doc(&["kostka", "--n", "0", "--r", "1", "--e", "0", "--s", "0", "--no-cache"]);
    let t = d.table("Kt_plus").unwrap();
    assert_eq!(t.text, vec![vec!["1".to_string()]]);
}

#[test]
fn chartable_rank_one_r_two() {
    let d = doc(&["chartable", "--n", "1", "--r", "2", "--no-cache"]);
    let t = d.table("characters").unwrap();
    assert_eq!(t.text, vec![vec!["1", "1"], vec!["1", "-1"]]);
}

#[test]
fn green_gl_two() {
    let d = doc(&["green", "--gl", "--n", "2", "--no-cache"]);
    let t = d.table("Q").unwrap();
    assert_eq!(t.rows.len(), 2);
    assert!(t.text.iter().flatten().any(|c| c == "1 + t"));
}

#[test]
fn verify_passes_on_symplectic_presets() {
    for n in ["0", "1", "2"] {
        let d = doc(&["verify", "--preset", "sp", "--n", n, "--multi", "--no-cache"]);
        let t = d.table("checks").unwrap();
        assert!(t.text.iter().all(|row| row[0] == "PASS"), "n={n}: {:?}", t.text);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(rsym(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["kostka", "--n", "1", "--bogus"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["kostka", "--preset", "sp", "--n", "1", "--r", "2"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["kostka", "--n", "2", "--r", "2", "--defects", "1,0,0"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["green", "--sp", "--n", "1", "--q", "6", "--no-cache"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["green", "--sp", "--n", "1", "--q", "2", "--congruence", "4", "--no-cache"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["kostka", "--preset", "sp", "--n", "3", "--max-n", "2", "--no-cache"]).code, EXIT_GUARD);
    assert_eq!(rsym(&["kostka", "--preset", "sp", "--n", "4", "--multi", "--no-cache"]).code, EXIT_GUARD);
    assert_eq!(rsym(&["symbols", "--n", "3", "--r", "3", "--e", "1", "--s", "1,1,0", "--alpha", "2", "--no-cache"]).code, EXIT_USAGE);
    assert_eq!(rsym(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_forwards_exit_status() {
    let bin = env!("CARGO_BIN_EXE_rsym");
    let ok = Command::new(bin).args(["symbols", "--preset", "sp", "--n", "1", "--no-cache"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("\"kind\": \"symbols\""));
    let bad = Command::new(bin).args(["kostka"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        &["kostka", "--preset", "sp", "--n", "2", "--no-cache"][..],
        &["chartable", "--n", "2", "--r", "3", "--no-cache"],
        &["kostka", "--preset", "sp", "--n", "1", "--multi", "--no-cache"],
        &["green", "--sp", "--n", "2", "--q", "3", "--no-cache"],
    ] {
        let bytes = rsym(args).stdout;
        assert_eq!(Document::from_json(&bytes).unwrap().to_json(), bytes, "{args:?}");
    }
}

#[test]
fn cache_hit_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for fmt in ["json", "csv"] {
        let args = ["hl", "--preset", "sp", "--n", "2", "--format", fmt];
        let cold = rsym(&[&args[..], &["--no-cache"]].concat()).stdout;
        let first = rsym(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
        let entries = std::fs::read_dir(dir.path()).unwrap().count();
        let second = rsym(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
        assert_eq!(cold, first);
        assert_eq!(cold, second);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), entries);
    }
    let files: Vec<String> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(files.len(), 2);
    assert!(files.iter().any(|f| f.ends_with(".json")) && files.iter().any(|f| f.ends_with(".csv")));
}

#[test]
fn cache_keys_separate_tie_breaks() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    rsym(&["kostka", "--preset", "sp", "--n", "1", "--cache-dir", cache]);
    rsym(&["kostka", "--preset", "sp", "--n", "1", "--tie-break", "reversed", "--cache-dir", cache]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.csv");
    let o = rsym(&["kostka", "--preset", "gl", "--n", "3", "--format", "csv", "--no-cache", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("table,row,row_label,col,col_label,value\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 9);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["symbols", "--preset", "sp", "--n", "3", "--no-cache"][..],
        &["kostka", "--n", "2", "--r", "3", "--e", "1", "--alpha", "1", "--defects", "1,0,0;3,0,1;3,1,0", "--no-cache"],
        &["green", "--sp", "--n", "2", "--q", "2", "--congruence", "7", "--no-cache", "--format", "csv"],
    ] {
        let first = rsym(args);
        assert_eq!(first.code, EXIT_OK, "{args:?}: {}", first.stderr);
        assert_eq!(first.stdout, rsym(args).stdout, "{args:?}");
    }
}
