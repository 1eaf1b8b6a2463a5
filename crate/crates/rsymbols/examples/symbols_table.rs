//! The symbol table for Sp_2n: a-values, defects and similarity classes, and a
//! comparison of the class count with the number of unipotent classes.

use rsymbols::combinatorics::partitions;
use rsymbols::lusztig_shoji::build_table;
use rsymbols::symbols::{symplectic_defects, TieBreak};

/// Partitions of 2n in which every odd part has even multiplicity.
fn unipotent_classes(n: u32) -> usize {
    partitions(2 * n)
        .iter()
        .filter(|p| p.multiplicities().iter().all(|&(part, m)| part % 2 == 0 || m % 2 == 0))
        .count()
}

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let (config, defects) = symplectic_defects(n, false);
    let table = build_table(n, &config, &defects, TieBreak::Default).expect("symplectic table");
    println!("Sp_{} : {} symbols", 2 * n, table.len());
    for (c, range) in table.classes.iter().enumerate() {
        for i in range.clone() {
            let s = &table.symbols[i];
            println!("  class {c:>2}  a={:<2} defect={}  {}  from {}", table.a_values[i], s.defect, s, s.source);
        }
    }
    for n in 0..=4 {
        let (config, defects) = symplectic_defects(n, false);
        let t = build_table(n, &config, &defects, TieBreak::Default).expect("symplectic table");
        println!("n={n}: {} similarity classes, {} unipotent classes", t.classes.len(), unipotent_classes(n));
    }
}
