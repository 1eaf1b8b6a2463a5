//! Modified Kostka functions K̃± from the block factorization of Ω, without
//! building Hall–Littlewood functions.

use rsymbols::lusztig_shoji::kostka_one_param;
use rsymbols::symbols::symplectic_defects;

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let (config, defects) = symplectic_defects(n, false);
    let k = kostka_one_param(n, &config, &defects).expect("Kostka functions");
    let t = &k.table;
    for i in 0..t.len() {
        let row: Vec<String> = (0..t.len()).map(|j| k.modified_plus().get(i, j).to_string()).collect();
        println!("{:<16} a={}  {}", t.symbols[i].to_string(), t.a_values[i], row.join(" | "));
    }
    let (kp, km) = k.unmodified();
    println!("K+ == K-: {}", kp == km);
}
