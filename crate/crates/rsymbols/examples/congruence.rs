//! Y-coefficients of the Sp_2n Green functions at q and q^r agree modulo r.

use rsymbols::green::{congruence_check, GreenError};

fn main() {
    for n in 1..=2 {
        for q in [2u64, 3, 4, 5] {
            for r in [3u32, 5, 7] {
                match congruence_check(n, q, r, false) {
                    Ok(rep) => println!("n={n} q={q} r={r}: {} entries, all congruent: {}", rep.entries.len(), rep.all_pass()),
                    Err(GreenError::InvalidPrime(why)) => println!("n={n} q={q} r={r}: skipped ({why})"),
                    Err(e) => println!("n={n} q={q} r={r}: error {e}"),
                }
            }
        }
    }
}
