//! Hall–Littlewood functions attached to a symbol table, built by two-sided
//! Gram–Schmidt against the form of `symfunc`, and the Kostka functions they define.

use crate::algebra::{AlgebraError, Cyclotomic, Field, Mat, MultiCtx, MultiRatFunc, ParamField, RatFunc};
use crate::symbols::SymbolTable;
use crate::symfunc::{basis_matrix, expand_in, schur_gram, Basis, SymPoly};

/// t_k = t for all k.
pub fn one_parameter(r: usize) -> Vec<RatFunc> {
    vec![RatFunc::t(r as u32); r]
}

/// Independent t_1, ..., t_r.
pub fn multi_parameter(r: usize) -> Vec<MultiRatFunc> {
    let ctx = MultiCtx { order: r as u32, nvars: r };
    (0..r).map(|k| MultiRatFunc::var(&ctx, k)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HlError {
    #[error("degenerate Gram block at class {class} (symbols {symbols:?})")]
    DegenerateGram { class: usize, symbols: Vec<usize> },
    #[error("parameter count {got} does not match r = {want}")]
    Params { got: usize, want: usize },
}

#[derive(Clone, Debug)]
pub struct HLBasis<F: Field> {
    pub table: SymbolTable,
    pub params: Vec<F>,
    /// Row Λ: coefficients of P⁺_Λ on s_Λ′.
    pub u_plus: Mat<F>,
    pub u_minus: Mat<F>,
    /// B = (⟨P⁺_Λ, P⁻_Λ′⟩), block diagonal along classes (and defects).
    pub gram: Mat<F>,
    /// B⁻¹ blockwise, entries b_{Λ,Λ′}.
    pub gram_inv: Mat<F>,
}

fn dot<F: Field>(a: &[F], b: &[F], ctx: &F::Ctx) -> F {
    a.iter().zip(b).fold(F::zero(ctx), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.add(&x.mul(y)) })
}

/// Runs the construction; symbols are processed in table order.
pub fn construct_hl<F: Field>(table: &SymbolTable, params: &[F]) -> Result<HLBasis<F>, HlError> {
    let r = table.config.r;
    if params.len() != r {
        return Err(HlError::Params { got: params.len(), want: r });
    }
    let ctx = params[0].ctx();
    let n = table.len();
    let class_of = table.class_of();
    let mut u_plus = Mat::zeros(&ctx, n, n);
    let mut u_minus = Mat::zeros(&ctx, n, n);
    let mut gram = Mat::zeros(&ctx, n, n);
    let mut gram_inv = Mat::zeros(&ctx, n, n);

    for d in table.present_defects() {
        let idx = table.indices_of_defect(&d);
        let np = table.n_prime(&d);
        let labels = crate::combinatorics::multipartitions(np, r);
        let pos: Vec<usize> =
            idx.iter().map(|&i| labels.iter().position(|l| *l == table.symbols[i].source).expect("source label")).collect();
        let sg = schur_gram(np, params);
        let m = idx.len();
        let g = Mat::from_fn(&ctx, m, m, |a, b| sg.get(pos[a], pos[b]).clone());

        // Local classes: runs of equal table class.
        let mut runs: Vec<std::ops::Range<usize>> = Vec::new();
        for a in 0..m {
            match runs.last_mut() {
                Some(run) if class_of[idx[run.start]] == class_of[idx[a]] => run.end = a + 1,
                _ => runs.push(a..a + 1),
            }
        }

        let mut up: Vec<Vec<F>> = Vec::with_capacity(m);
        let mut um: Vec<Vec<F>> = Vec::with_capacity(m);
        // up[a]·G and G·um[b]ᵀ
        let mut up_g: Vec<Vec<F>> = Vec::with_capacity(m);
        let mut g_um: Vec<Vec<F>> = Vec::with_capacity(m);
        let mut binv_local: Vec<Mat<F>> = Vec::new();

        for (ci, run) in runs.iter().enumerate() {
            for i in run.clone() {
                let mut p = vec![F::zero(&ctx); m];
                p[i] = F::one(&ctx);
                let mut q = p.clone();
                for (cj, prev) in runs[..ci].iter().enumerate() {
                    let binv = &binv_local[cj];
                    let v: Vec<F> = prev.clone().map(|l| g_um[l][i].clone()).collect();
                    let w: Vec<F> = prev.clone().map(|l| up_g[l][i].clone()).collect();
                    for (kk, k) in prev.clone().enumerate() {
                        // d⁺ = −v B⁻¹, d⁻ = −B⁻¹ w
                        let dp = dot(&v, &(0..v.len()).map(|j| binv.get(j, kk).clone()).collect::<Vec<_>>(), &ctx).neg();
                        let dm = dot(binv.row(kk), &w, &ctx).neg();
                        if !dp.is_zero() {
                            for (x, y) in p.iter_mut().zip(&up[k]) {
                                *x = x.add(&dp.mul(y));
                            }
                        }
                        if !dm.is_zero() {
                            for (x, y) in q.iter_mut().zip(&um[k]) {
                                *x = x.add(&dm.mul(y));
                            }
                        }
                    }
                }
                up_g.push((0..m).map(|j| dot(&p, &(0..m).map(|a| g.get(a, j).clone()).collect::<Vec<_>>(), &ctx)).collect());
                g_um.push((0..m).map(|a| dot(g.row(a), &q, &ctx)).collect());
                up.push(p);
                um.push(q);
            }
            let b = Mat::from_fn(&ctx, run.len(), run.len(), |x, y| dot(&up_g[run.start + x], &um[run.start + y], &ctx));
            let binv = b.inverse().map_err(|_| HlError::DegenerateGram {
                class: class_of[idx[run.start]],
                symbols: run.clone().map(|a| idx[a]).collect(),
            })?;
            let rows: Vec<usize> = run.clone().map(|a| idx[a]).collect();
            gram.set_block(&rows, &rows, &b);
            gram_inv.set_block(&rows, &rows, &binv);
            binv_local.push(binv);
        }
        for a in 0..m {
            for b in 0..m {
                u_plus.set(idx[a], idx[b], up[a][b].clone());
                u_minus.set(idx[a], idx[b], um[a][b].clone());
            }
        }
    }
    Ok(HLBasis { table: table.clone(), params: params.to_vec(), u_plus, u_minus, gram, gram_inv })
}

impl<F: Field> HLBasis<F> {
    /// ⟨s_Λ, s_Λ′⟩ over the whole table, zero across defects.
    pub fn schur_form(&self) -> Mat<F> {
        let ctx = self.params[0].ctx();
        let n = self.table.len();
        let r = self.table.config.r;
        let mut out = Mat::zeros(&ctx, n, n);
        for d in self.table.present_defects() {
            let idx = self.table.indices_of_defect(&d);
            let np = self.table.n_prime(&d);
            let labels = crate::combinatorics::multipartitions(np, r);
            let pos: Vec<usize> =
                idx.iter().map(|&i| labels.iter().position(|l| *l == self.table.symbols[i].source).unwrap()).collect();
            let sg = schur_gram(np, &self.params);
            let block = Mat::from_fn(&ctx, idx.len(), idx.len(), |a, b| sg.get(pos[a], pos[b]).clone());
            out.set_block(&idx, &idx, &block);
        }
        out
    }

    /// Row Λ: coefficients of Q⁺_Λ on s.
    pub fn q_plus(&self) -> Mat<F> {
        self.gram_inv.mul(&self.u_plus).expect("square")
    }

    /// Row Λ: coefficients of Q⁻_Λ = Σ b_{Λ′Λ} P⁻_Λ′ on s.
    pub fn q_minus(&self) -> Mat<F> {
        self.gram_inv.transpose().mul(&self.u_minus).expect("square")
    }

    /// K± with s_Λ = Σ K±_{Λ,Λ′} P±_Λ′.
    pub fn kostka(&self) -> (Mat<F>, Mat<F>) {
        (self.u_plus.inverse().expect("unitriangular"), self.u_minus.inverse().expect("unitriangular"))
    }
}

pub fn kostka_via_transition<F: Field>(hl: &HLBasis<F>) -> (Mat<F>, Mat<F>) {
    hl.kostka()
}

/// K̃_{Λ,Λ′}(t) = t^{a(Λ′)} K_{Λ,Λ′}(t⁻¹).
pub fn modified_kostka(k: &Mat<RatFunc>, a_values: &[u64]) -> Mat<RatFunc> {
    let r = *k.ctx();
    Mat::from_fn(&r, k.rows(), k.cols(), |i, j| {
        let e = k.get(i, j);
        if e.is_zero() {
            e.clone()
        } else {
            RatFunc::t_pow(r, a_values[j] as i64).mul(&e.invert_variable())
        }
    })
}

/// Inverse of `modified_kostka`: K(t) = t^{a(Λ′)} K̃(t⁻¹).
pub fn unmodified_kostka(kt: &Mat<RatFunc>, a_values: &[u64]) -> Mat<RatFunc> {
    modified_kostka(kt, a_values)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    /// Per symbol: (P⁺ passes, P⁻ passes).
    pub results: Vec<(bool, bool)>,
    pub skipped: Option<String>,
}

impl CharacterizationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|&(a, b)| a && b)
    }
}

/// Support conditions of the q±-expansion and the s-expansion of each P±_Λ.
pub fn verify_characterization<F: Field>(hl: &HLBasis<F>) -> CharacterizationReport {
    let t = &hl.table;
    let ctx = hl.params[0].ctx();
    let n = t.len();
    if hl.params.iter().all(Field::is_zero) {
        return CharacterizationReport { results: vec![], skipped: Some("parameters specialized to zero".into()) };
    }
    let class_of = t.class_of();
    let r = t.config.r;
    // c±: coefficients of P± on q±, computed per defect.
    let mut c_plus = Mat::zeros(&ctx, n, n);
    let mut c_minus = Mat::zeros(&ctx, n, n);
    for d in t.present_defects() {
        let idx = t.indices_of_defect(&d);
        let np = t.n_prime(&d);
        let labels = crate::combinatorics::multipartitions(np, r);
        let pos: Vec<usize> = idx.iter().map(|&i| labels.iter().position(|l| *l == t.symbols[i].source).unwrap()).collect();
        let s_rows = basis_matrix(Basis::S, np, &hl.params);
        for (sign, u, c) in [(Basis::QPlus, &hl.u_plus, &mut c_plus), (Basis::QMinus, &hl.u_minus, &mut c_minus)] {
            for &i in &idx {
                let mut f = SymPoly::zero(r, &ctx);
                for (b, &j) in idx.iter().enumerate() {
                    let coef = u.get(i, j);
                    if !coef.is_zero() {
                        let row = SymPoly::from_m_coords(np, r, &ctx, s_rows.row(pos[b]));
                        f = f.add(&row.scale(coef));
                    }
                }
                let coords = expand_in(&f, sign, np, &hl.params);
                for (b, &j) in idx.iter().enumerate() {
                    c.set(i, j, coords[pos[b]].clone());
                }
            }
        }
    }
    let check = |u: &Mat<F>, c: &Mat<F>, i: usize| -> bool {
        let ci = class_of[i];
        for (j, &cj) in class_of.iter().enumerate() {
            let same = cj == ci;
            // s-expansion: only Λ′ ⪯ Λ or Λ′ ∼ Λ, identity on the class.
            if j > i && !same && !u.get(i, j).is_zero() {
                return false;
            }
            if same && *u.get(i, j) != if i == j { F::one(&ctx) } else { F::zero(&ctx) } {
                return false;
            }
            // q-expansion: only Λ′ ⪰ Λ or Λ′ ∼ Λ.
            if j < i && !same && !c.get(i, j).is_zero() {
                return false;
            }
        }
        true
    };
    let mut results: Vec<(bool, bool)> = (0..n).map(|i| (check(&hl.u_plus, &c_plus, i), check(&hl.u_minus, &c_minus, i))).collect();
    for range in &t.classes {
        let rs: Vec<usize> = range.clone().collect();
        let okp = c_plus.submatrix(&rs, &rs).inverse().is_ok();
        let okm = c_minus.submatrix(&rs, &rs).inverse().is_ok();
        for &i in &rs {
            results[i].0 &= okp;
            results[i].1 &= okm;
        }
    }
    CharacterizationReport { results, skipped: None }
}

/// Every entry specializes at t = 0; `r` is the cyclotomic order.
pub fn pole_free_at_zero<F: ParamField>(m: &Mat<F>, r: u32) -> Result<Mat<Cyclotomic>, AlgebraError> {
    m.try_map(&r, |e| e.at_zero())
}
