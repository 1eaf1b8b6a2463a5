//! Green polynomials Q^λ_μ(t) of GL_n as Σ_λ χ^λ(w_μ) K̃_{λν}(t).

use rsymbols::green::green_gl;

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let g = green_gl(n).expect("Green polynomials");
    let cols: Vec<String> = g.labels.iter().map(ToString::to_string).collect();
    println!("{:>10} | {}", "w \\ ν", cols.join(" | "));
    for (i, mu) in g.labels.iter().enumerate() {
        let row: Vec<String> = (0..g.labels.len()).map(|j| g.q.get(i, j).to_string()).collect();
        println!("{:>10} | {}", mu.to_string(), row.join(" | "));
    }
}
