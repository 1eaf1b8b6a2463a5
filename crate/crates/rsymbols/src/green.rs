//! Green functions: the transition X± from power sums to Hall–Littlewood
//! functions, classical Green polynomials of GL_n, symplectic generalized
//! Green functions in the Y-basis, and their congruences modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Cyclotomic, Field, Mat, RatFunc};
use crate::combinatorics::MultiPartition;
use crate::lusztig_shoji::{build_table, kostka_one_param_table, Guards, LsError, OneParamKostka};
use crate::symbols::{symplectic_defects, Defect, SymbolConfig, SymbolTable, TieBreak};
use crate::wreath::{character_table, gw_polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GreenError {
    #[error("invalid prime: {0}")]
    InvalidPrime(String),
    #[error("invalid q: {0}")]
    InvalidQ(String),
    #[error("coefficient {0} has a pole at the evaluation point")]
    Pole(String),
    #[error(transparent)]
    Ls(#[from] LsError),
}

/// X(0): χ^{μ}(w_λ) for Λ = Λ(λ), Λ′ = Λ(μ) of the same defect, zero across defects.
pub fn character_block_matrix(table: &SymbolTable) -> Mat<Cyclotomic> {
    let r = table.config.r;
    let ro = r as u32;
    let mut out = Mat::zeros(&ro, table.len(), table.len());
    for d in table.present_defects() {
        let ct = character_table(table.n_prime(&d), r);
        let idx = table.indices_of_defect(&d);
        let chi_pos = |i: usize| ct.labels.iter().position(|l| *l == table.symbols[i].source).expect("character label");
        let class_pos = |i: usize| ct.classes.iter().position(|c| c.ty == table.symbols[i].source).expect("class label");
        for &i in &idx {
            for &j in &idx {
                out.set(i, j, ct.values[chi_pos(j)][class_pos(i)].clone());
            }
        }
    }
    out
}

/// X± = X(0) K±, returned as (X₊, X₋).
pub fn x_matrix(k: &OneParamKostka) -> (Mat<RatFunc>, Mat<RatFunc>) {
    let ro = k.table.config.r as u32;
    let x0 = character_block_matrix(&k.table).map(&ro, |c| RatFunc::constant(c.clone()));
    let (kp, km) = k.unmodified();
    (x0.mul(&kp).expect("square"), x0.mul(&km).expect("square"))
}

/// Classical Green polynomials Q_{μ,ν}(t), both indices over the partitions of n.
#[derive(Clone, Debug)]
pub struct GreenGl {
    pub n: u32,
    pub labels: Vec<MultiPartition>,
    pub q: Mat<RatFunc>,
}

impl GreenGl {
    pub fn get(&self, mu: &MultiPartition, nu: &MultiPartition) -> Option<&RatFunc> {
        let i = self.labels.iter().position(|l| l == mu)?;
        let j = self.labels.iter().position(|l| l == nu)?;
        Some(self.q.get(i, j))
    }
}

/// Q_{μ,ν}(t) = Σ_λ χ^λ(w_μ) K̃_{λ,ν}(t).
pub fn green_gl(n: u32) -> Result<GreenGl, GreenError> {
    let config = SymbolConfig::classical();
    let table = build_table(n, &config, &[Defect::zero(1)], TieBreak::Default)?;
    let k = kostka_one_param_table(&table, &Guards::default())?;
    let kt = k.modified_plus();
    let ct = character_table(n, 1);
    let pos: Vec<usize> =
        ct.labels.iter().map(|l| table.symbols.iter().position(|s| s.source == *l).expect("symbol per partition")).collect();
    let q = Mat::from_fn(&1, ct.classes.len(), ct.labels.len(), |mu, nu| {
        let mut acc = RatFunc::zero(&1);
        for (lam, row) in ct.values.iter().enumerate() {
            let chi = &row[mu];
            if !chi.is_zero() {
                acc = acc.add(&RatFunc::constant(chi.clone()).mul(kt.get(pos[lam], pos[nu])));
            }
        }
        acc
    });
    Ok(GreenGl { n, labels: ct.labels.clone(), q })
}

/// One cuspidal datum of a symplectic table.
#[derive(Clone, Debug)]
pub struct GreenBlock {
    pub defect: Defect,
    pub n_prime: u32,
    /// a-value of the rank f(d) symbol of this defect.
    pub cusp_a: u64,
    /// Types w ∈ 𝒫_{n′,2}.
    pub w_types: Vec<MultiPartition>,
    /// Table indices of the Y-basis labels Λ′, in table order.
    pub y_indices: Vec<usize>,
    /// coeffs[w][k] is the coefficient of Y_{y_indices[k]}.
    pub coeffs: Vec<Vec<RatFunc>>,
}

#[derive(Clone, Debug)]
pub struct GreenSp {
    pub table: SymbolTable,
    pub blocks: Vec<GreenBlock>,
}

impl GreenSp {
    /// Every coefficient at t = q.
    pub fn evaluate(&self, q: &BigInt) -> Result<Vec<Vec<Vec<BigRational>>>, GreenError> {
        let x = BigRational::from_integer(q.clone());
        self.blocks
            .iter()
            .map(|b| {
                b.coeffs
                    .iter()
                    .map(|row| row.iter().map(|c| c.eval_rational(&x).map_err(|_| GreenError::Pole(c.render()))).collect())
                    .collect()
            })
            .collect()
    }
}

/// Q^G for each defect d and type w: Σ_Λ χ^Λ(w) t^{a(Λ)−a(cusp(d))} t^{−a(Λ)} K̃_{Λ,Λ′}(t) on Y_{Λ′}.
pub fn green_sp(n: u32, bad_characteristic: bool) -> Result<GreenSp, GreenError> {
    let (config, defects) = symplectic_defects(n, bad_characteristic);
    let table = build_table(n, &config, &defects, TieBreak::Default)?;
    green_sp_table(&table)
}

pub fn green_sp_table(table: &SymbolTable) -> Result<GreenSp, GreenError> {
    let k = kostka_one_param_table(table, &Guards::default())?;
    let kt = k.modified_plus();
    let r = table.config.r;
    let ro = r as u32;
    let mut blocks = Vec::new();
    for d in table.present_defects() {
        let np = table.n_prime(&d);
        let ct = character_table(np, r);
        let idx = table.indices_of_defect(&d);
        let cusp_a = table.cusp(&d).a_value();
        let norm = RatFunc::t_pow(ro, -(cusp_a as i64));
        let chi_pos: Vec<usize> =
            idx.iter().map(|&i| ct.labels.iter().position(|l| *l == table.symbols[i].source).expect("character label")).collect();
        let coeffs = (0..ct.classes.len())
            .map(|w| {
                idx.iter()
                    .map(|&j| {
                        let mut acc = RatFunc::zero(&ro);
                        for (a, &i) in idx.iter().enumerate() {
                            let chi = &ct.values[chi_pos[a]][w];
                            let e = kt.get(i, j);
                            if !chi.is_zero() && !e.is_zero() {
                                acc = acc.add(&RatFunc::constant(chi.clone()).mul(e));
                            }
                        }
                        acc.mul(&norm)
                    })
                    .collect()
            })
            .collect();
        blocks.push(GreenBlock {
            defect: d.clone(),
            n_prime: np,
            cusp_a,
            w_types: ct.classes.iter().map(|c| c.ty.clone()).collect(),
            y_indices: idx,
            coeffs,
        });
    }
    Ok(GreenSp { table: table.clone(), blocks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceEntry {
    pub defect: Defect,
    pub w: MultiPartition,
    pub y_index: usize,
    pub at_q: BigRational,
    pub at_q_r: BigRational,
    /// Residues mod the prime, with denominators inverted.
    pub residue_q: BigInt,
    pub residue_q_r: BigInt,
}

impl CongruenceEntry {
    pub fn ok(&self) -> bool {
        self.residue_q == self.residue_q_r
    }
}

#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub n: u32,
    pub q: BigInt,
    pub rprime: u32,
    pub entries: Vec<CongruenceEntry>,
}

impl CongruenceReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(CongruenceEntry::ok)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn is_prime_power(q: &BigInt) -> bool {
    let Ok(q) = u64::try_from(q) else { return false };
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q ≥ 2");
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

fn residue(x: &BigRational, p: &BigInt) -> Option<BigInt> {
    let den = x.denom().mod_floor(p);
    if den.is_zero() {
        return None;
    }
    // p is prime, so den^{p−2} inverts den.
    let inv = den.modpow(&(p - 2u32), p);
    Some((x.numer() * inv).mod_floor(p))
}

/// Evaluates a coefficient at an integer point.
pub type Evaluator<'a> = &'a dyn Fn(&RatFunc, &BigInt) -> Option<BigRational>;

pub fn exact_eval(f: &RatFunc, x: &BigInt) -> Option<BigRational> {
    f.eval_rational(&BigRational::from_integer(x.clone())).ok()
}

pub fn congruence_check(n: u32, q: u64, rprime: u32, bad_characteristic: bool) -> Result<CongruenceReport, GreenError> {
    let g = green_sp(n, bad_characteristic)?;
    congruence_check_with(&g, &BigInt::from(q), rprime, &exact_eval)
}

/// Compares each Y-coefficient at q and at q^{rprime} modulo rprime.
pub fn congruence_check_with(g: &GreenSp, q: &BigInt, rprime: u32, eval: Evaluator<'_>) -> Result<CongruenceReport, GreenError> {
    if !is_prime_power(q) {
        return Err(GreenError::InvalidQ(format!("{q} is not a prime power")));
    }
    if !is_prime(rprime as u64) {
        return Err(GreenError::InvalidPrime(format!("{rprime} is not prime")));
    }
    let p = BigInt::from(rprime);
    let qr = num_traits::pow(q.clone(), rprime as usize);
    let order = gw_polynomial(g.table.n, 2).eval_rational(&BigRational::from_integer(qr.clone()));
    if (order.numer() % &p).is_zero() {
        return Err(GreenError::InvalidPrime(format!("{rprime} divides the group order at q^{rprime} = {qr}")));
    }
    let mut entries = Vec::new();
    for b in &g.blocks {
        for (w, row) in b.w_types.iter().zip(&b.coeffs) {
            for (&y, c) in b.y_indices.iter().zip(row) {
                let pole = || GreenError::Pole(c.render());
                let at_q = eval(c, q).ok_or_else(pole)?;
                let at_q_r = eval(c, &qr).ok_or_else(pole)?;
                let residue_q = residue(&at_q, &p).ok_or_else(pole)?;
                let residue_q_r = residue(&at_q_r, &p).ok_or_else(pole)?;
                entries.push(CongruenceEntry { defect: b.defect.clone(), w: w.clone(), y_index: y, at_q, at_q_r, residue_q, residue_q_r });
            }
        }
    }
    Ok(CongruenceReport { n: g.table.n, q: q.clone(), rprime, entries })
}

/// Whether every entry of t^{−a(Λ)} K̃_{Λ,Λ′} is 1 on the diagonal and 0 across defects.
pub fn normal_form_holds(k: &OneParamKostka) -> bool {
    let t = &k.table;
    let ro = t.config.r as u32;
    let kt = k.modified_plus();
    (0..t.len()).all(|i| {
        let s = RatFunc::t_pow(ro, -(t.a_values[i] as i64));
        (0..t.len()).all(|j| {
            let v = kt.get(i, j).mul(&s);
            if i == j {
                v.is_one()
            } else if t.symbols[i].defect != t.symbols[j].defect {
                v.is_zero()
            } else {
                true
            }
        })
    })
}
