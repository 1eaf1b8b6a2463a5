//! Driving the command-line front end in process, with a throwaway cache.

use rsymbols::cli::{run, Document};

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let cache = dir.path().to_str().expect("utf-8 path");
    let args = ["rsym", "kostka", "--preset", "sp", "--n", "2", "--cache-dir", cache];
    let cold = run(args);
    let warm = run(args);
    println!("exit {}, cached bytes identical: {}", cold.code, cold.stdout == warm.stdout);
    let doc = Document::from_json(&cold.stdout).expect("valid document");
    for table in &doc.tables {
        println!("{}: {}×{}", table.name, table.rows.len(), table.cols.len());
    }
    let csv = run(["rsym", "verify", "--preset", "sp", "--n", "1", "--format", "csv", "--no-cache"]);
    print!("{}", String::from_utf8_lossy(&csv.stdout));
}
