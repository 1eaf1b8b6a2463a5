//! Green functions of Sp_2n in the Y-basis, their values at t = q, and the
//! observed degrees of K against a(Λ′) − a(Λ).

use num_bigint::BigInt;
use rsymbols::green::green_sp;

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let g = green_sp(n, false).expect("Green functions");
    let t = &g.table;
    let q = BigInt::from(3);
    let values = g.evaluate(&q).expect("integral values");
    for (b, vals) in g.blocks.iter().zip(&values) {
        println!("defect {} (n′ = {}, cusp a = {})", b.defect, b.n_prime, b.cusp_a);
        for (w, (row, vrow)) in b.w_types.iter().zip(b.coeffs.iter().zip(vals)) {
            for ((&y, c), v) in b.y_indices.iter().zip(row).zip(vrow) {
                println!("  w={w:<12} Y{:<16} {c:<24} at q={q}: {v}", t.symbols[y].to_string());
            }
        }
    }

    let k = rsymbols::lusztig_shoji::kostka_one_param(n, &t.config, &t.defects).expect("Kostka functions");
    let (kp, _) = k.unmodified();
    let mut tally: std::collections::BTreeMap<String, (usize, usize)> = Default::default();
    for i in 0..t.len() {
        for j in 0..t.len() {
            let Some(deg) = kp.get(i, j).as_poly().and_then(|p| p.degree()) else { continue };
            if i == j {
                continue;
            }
            let e = tally.entry(t.symbols[i].defect.to_string()).or_default();
            e.1 += 1;
            e.0 += usize::from(deg as i64 == t.a_values[j] as i64 - t.a_values[i] as i64);
        }
    }
    for (d, (matched, total)) in tally {
        println!("defect {d}: off-diagonal nonzero K entries with deg = a(Λ′) − a(Λ): {matched} of {total}");
    }
}
