//! Hall–Littlewood functions P± for Sp_2n, expanded in the Schur basis, and the
//! Kostka functions read off from the transition matrix.

use rsymbols::hall_littlewood::{construct_hl, kostka_via_transition, one_parameter, verify_characterization};
use rsymbols::lusztig_shoji::build_table;
use rsymbols::symbols::{symplectic_defects, TieBreak};

fn main() {
    let n = 2;
    let (config, defects) = symplectic_defects(n, false);
    let table = build_table(n, &config, &defects, TieBreak::Default).expect("symplectic table");
    let hl = construct_hl(&table, &one_parameter(2)).expect("Hall-Littlewood basis");
    for (i, s) in table.symbols.iter().enumerate() {
        let terms: Vec<String> = (0..table.len())
            .filter(|&j| !hl.u_plus.get(i, j).to_string().eq("0"))
            .map(|j| format!("({}) s{}", hl.u_plus.get(i, j), table.symbols[j]))
            .collect();
        println!("P+{s} = {}", terms.join(" + "));
    }
    let (kp, _) = kostka_via_transition(&hl);
    println!("\nK+ (rows Λ, columns Λ′):");
    for i in 0..table.len() {
        let row: Vec<String> = (0..table.len()).map(|j| kp.get(i, j).to_string()).collect();
        println!("  {:<14} {}", table.symbols[i].to_string(), row.join("  "));
    }
    println!("characterization holds: {}", verify_characterization(&hl).all_pass());
}
