//! Truncated checks of the kernel Ω(x, y; t) against its expansions in the
//! symmetric-function bases. Each check panics on the first mismatch.

use rsymbols::algebra::{Field, Mat, RatFunc};
use rsymbols::combinatorics::multipartitions;
use rsymbols::hall_littlewood::{construct_hl, one_parameter};
use rsymbols::lusztig_shoji::z_pair;
use rsymbols::symbols::SymbolTable;
use rsymbols::symfunc::{basis_matrix, kernel_omega, power_sum, schur_sym, BiSym, Basis, SymPoly};

pub fn rows_as_sym<F: Field>(m: &Mat<F>, n: u32, r: usize, ctx: &F::Ctx) -> Vec<SymPoly<F>> {
    (0..m.rows()).map(|i| SymPoly::from_m_coords(n, r, ctx, m.row(i))).collect()
}

pub fn sum_tensors<F: Field>(pairs: impl IntoIterator<Item = (SymPoly<F>, SymPoly<F>)>, r: usize, ctx: &F::Ctx) -> BiSym<F> {
    pairs.into_iter().fold(BiSym::zero(r, ctx), |acc, (a, b)| acc.add(&BiSym::tensor(&a, &b)))
}

pub fn conj<F: Field>(f: &SymPoly<F>, ctx: &F::Ctx) -> SymPoly<F> {
    f.map(ctx, Field::conj)
}

pub fn check_q_m<F: Field>(n: u32, params: &[F]) {
    let r = params.len();
    let ctx = params[0].ctx();
    let omega = kernel_omega(n, params);
    let qp = rows_as_sym(&basis_matrix(Basis::QPlus, n, params), n, r, &ctx);
    let qm = rows_as_sym(&basis_matrix(Basis::QMinus, n, params), n, r, &ctx);
    let m = rows_as_sym(&basis_matrix(Basis::M, n, params), n, r, &ctx);
    assert_eq!(sum_tensors(qp.iter().cloned().zip(m.iter().cloned()), r, &ctx), omega, "q+ m, n={n} r={r}");
    assert_eq!(sum_tensors(m.into_iter().zip(qm), r, &ctx), omega, "m q-, n={n} r={r}");
}

pub fn check_power_sums<F: Field>(n: u32, params: &[F]) {
    let r = params.len();
    let ctx = params[0].ctx();
    let labels = multipartitions(n, r);
    let ps: Vec<SymPoly<F>> = labels.iter().map(|l| power_sum(l, &ctx)).collect();
    let mut pairs = Vec::new();
    for (a, la) in labels.iter().enumerate() {
        for (b, lb) in labels.iter().enumerate() {
            // x carries the column merge of the array, y the row merge
            let z = z_pair(lb, la, params);
            if !z.is_zero() {
                pairs.push((ps[a].scale(&z), conj(&ps[b], &ctx)));
            }
        }
    }
    assert_eq!(sum_tensors(pairs, r, &ctx), kernel_omega(n, params), "z_pair expansion, n={n} r={r}");
}

/// Σ_Λ P⁺_Λ(x) Q⁻_Λ(y) and Σ_Λ Q⁺_Λ(x) P⁻_Λ(y) per defect, against Ω in degree n′.
pub fn check_hl_kernel<F: Field>(table: &SymbolTable, params: &[F]) {
    let r = params.len();
    let ctx = params[0].ctx();
    let hl = construct_hl(table, params).unwrap();
    let (qp, qm) = (hl.q_plus(), hl.q_minus());
    for d in table.present_defects() {
        let np = table.n_prime(&d);
        let idx = table.indices_of_defect(&d);
        let schur: Vec<SymPoly<F>> = idx.iter().map(|&i| schur_sym(&table.symbols[i].source, &ctx)).collect();
        let expand = |m: &Mat<F>, i: usize| {
            idx.iter().zip(&schur).fold(SymPoly::zero(r, &ctx), |acc, (&j, s)| acc.add(&s.scale(m.get(i, j))))
        };
        let omega = kernel_omega(np, params);
        let left = sum_tensors(idx.iter().map(|&i| (expand(&hl.u_plus, i), expand(&qm, i))), r, &ctx);
        let right = sum_tensors(idx.iter().map(|&i| (expand(&qp, i), expand(&hl.u_minus, i))), r, &ctx);
        assert_eq!(left, omega, "P+ Q-, n={} d={d}", table.n);
        assert_eq!(right, omega, "Q+ P-, n={} d={d}", table.n);
    }
}


/// Ω at t₀ = (t, …, t) as Σ z_λ(t)⁻¹ p_λ(x) conj p_λ(y).
pub fn check_diagonal_power_sums(n: u32, r: usize) {
    let params = one_parameter(r);
    let ro = r as u32;
    let pairs = multipartitions(n, r).into_iter().map(|l| {
        let p = power_sum::<RatFunc>(&l, &ro);
        (p.scale(&l.z_t().inv().unwrap()), conj(&p, &ro))
    });
    assert_eq!(sum_tensors(pairs, r, &ro), kernel_omega(n, &params), "n={n} r={r}");
}

/// Ω at t = 0 as Σ s_λ(x) s_λ(y).
pub fn check_schur_cauchy(n: u32, r: usize) {
    let ro = r as u32;
    let params = vec![RatFunc::zero(&ro); r];
    let pairs = multipartitions(n, r).into_iter().map(|l| (schur_sym(&l, &ro), schur_sym(&l, &ro)));
    assert_eq!(sum_tensors(pairs, r, &ro), kernel_omega(n, &params), "n={n} r={r}");
}
