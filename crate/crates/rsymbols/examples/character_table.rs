//! Character table of W_{n,r} = S_n ⋉ (Z/r)^n with class sizes.

use rsymbols::wreath::character_table;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse().expect("integer argument"));
    let n = args.next().unwrap_or(2) as u32;
    let r = args.next().unwrap_or(2) as usize;
    let ct = character_table(n, r);
    println!("W_{{{n},{r}}}: {} classes", ct.classes.len());
    let header: Vec<String> = ct.classes.iter().map(|c| format!("{} (#{})", c.ty, c.size)).collect();
    println!("{:>16} | {}", "", header.join(" | "));
    for (label, row) in ct.labels.iter().zip(&ct.values) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("{:>16} | {}", label.to_string(), cells.join(" | "));
    }
}
