//! Multi-parameter Kostka functions in Q(t_1, t_2) and their specialization at
//! t_1 = t_2 = t.

use rsymbols::lusztig_shoji::{kostka_multi_param, kostka_one_param};
use rsymbols::symbols::symplectic_defects;

fn main() {
    let n = 1;
    let (config, defects) = symplectic_defects(n, false);
    let multi = kostka_multi_param(n, &config, &defects).expect("multi-parameter solution");
    let t = &multi.table;
    for i in 0..t.len() {
        for j in 0..t.len() {
            println!("K+[{}, {}] = {}", t.symbols[i], t.symbols[j], multi.result.p_plus.get(i, j));
        }
    }
    let one = kostka_one_param(n, &config, &defects).expect("one-parameter solution");
    let (kp, _) = one.unmodified();
    let specialized = multi.result.p_plus.try_map(&2, |e| e.specialize_diagonal()).expect("no pole on the diagonal");
    println!("specializes to the one-parameter K+: {}", specialized == kp);
}
