//! The kernel Ω(x, y; t) truncated at degree n, against its q⁺ ⊗ m expansion,
//! and the one-parameter power-sum diagonal.

use rsymbols::algebra::{Field, RatFunc};
use rsymbols::combinatorics::multipartitions;
use rsymbols::hall_littlewood::one_parameter;
use rsymbols::symfunc::{basis_matrix, kernel_omega, power_sum, BiSym, Basis, SymPoly};

fn main() {
    let (n, r) = (2, 2);
    let params = one_parameter(r);
    let ro = r as u32;
    let omega = kernel_omega(n, &params);

    let qp = basis_matrix(Basis::QPlus, n, &params);
    let m = basis_matrix(Basis::M, n, &params);
    let mut sum = BiSym::zero(r, &ro);
    for i in 0..qp.rows() {
        let a = SymPoly::from_m_coords(n, r, &ro, qp.row(i));
        let b = SymPoly::from_m_coords(n, r, &ro, m.row(i));
        sum = sum.add(&BiSym::tensor(&a, &b));
    }
    println!("Σ q+ ⊗ m = Ω in degree {n}: {}", sum == omega);

    let mut diag = BiSym::zero(r, &ro);
    for l in multipartitions(n, r) {
        let p = power_sum::<RatFunc>(&l, &ro);
        let z = l.z_t();
        println!("  z_{l}(t) = {z}");
        diag = diag.add(&BiSym::tensor(&p.scale(&z.inv().expect("nonzero")), &p.map(&ro, Field::conj)));
    }
    println!("Σ z(t)⁻¹ p ⊗ conj p = Ω in degree {n}: {}", diag == omega);
}
