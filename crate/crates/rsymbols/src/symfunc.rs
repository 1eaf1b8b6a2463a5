//! Symmetric functions in r colored alphabets.
//!
//! A [`SymPoly`] stores coordinates in the monomial basis m_λ, which is faithful
//! for any number of variables per color at least the degree. Products use
//! the integer structure constants of the m-basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;

use crate::algebra::{Cyclotomic, Field, Mat};
use crate::combinatorics::{multipartitions, partitions, MultiPartition, Partition};

/// Classical m_λ·m_μ = Σ c_ν m_ν.
fn classical_m_product(l: &Partition, m: &Partition) -> Arc<Vec<(Partition, u64)>> {
    type Cache = Mutex<HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (l.clone(), m.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    for nu in partitions(l.size() + m.size()) {
        if nu.len() > l.len() + m.len() || nu.len() < l.len().max(m.len()) {
            continue;
        }
        let c = count_splittings(&nu, l, m);
        if c > 0 {
            out.push((nu, c));
        }
    }
    let v = Arc::new(out);
    cache.lock().unwrap().insert(key, v.clone());
    v
}

/// Number of vectors β ≤ ν with sort(β) = λ and sort(ν − β) = μ.
fn count_splittings(nu: &Partition, l: &Partition, m: &Partition) -> u64 {
    fn counts(p: &Partition, len: usize) -> BTreeMap<u32, u32> {
        let mut c = BTreeMap::new();
        for &x in p.parts() {
            *c.entry(x).or_insert(0) += 1;
        }
        *c.entry(0).or_insert(0) += (len - p.len()) as u32;
        c
    }
    fn go(i: usize, nu: &[u32], lc: &mut BTreeMap<u32, u32>, mc: &mut BTreeMap<u32, u32>) -> u64 {
        if i == nu.len() {
            return 1;
        }
        let vals: Vec<u32> = lc.iter().filter(|(_, &c)| c > 0).map(|(&v, _)| v).collect();
        let mut total = 0;
        for a in vals {
            if a > nu[i] {
                continue;
            }
            let b = nu[i] - a;
            if mc.get(&b).copied().unwrap_or(0) == 0 {
                continue;
            }
            *lc.get_mut(&a).unwrap() -= 1;
            *mc.get_mut(&b).unwrap() -= 1;
            total += go(i + 1, nu, lc, mc);
            *lc.get_mut(&a).unwrap() += 1;
            *mc.get_mut(&b).unwrap() += 1;
        }
        total
    }
    let len = nu.len();
    if l.len() > len || m.len() > len {
        return 0;
    }
    go(0, nu.parts(), &mut counts(l, len), &mut counts(m, len))
}

/// Colored m_λ·m_μ, color by color.
fn m_product(l: &MultiPartition, m: &MultiPartition) -> Vec<(MultiPartition, u64)> {
    let mut acc: Vec<(Vec<Partition>, u64)> = vec![(vec![], 1)];
    for k in 0..l.r() {
        let prod = classical_m_product(l.comp(k), m.comp(k));
        let mut next = Vec::with_capacity(acc.len() * prod.len());
        for (pre, c) in &acc {
            for (nu, d) in prod.iter() {
                let mut v = pre.clone();
                v.push(nu.clone());
                next.push((v, c * d));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(v, c)| (MultiPartition::new(v), c)).collect()
}

/// Classical Kostka number K_{λμ}; μ may be any composition.
pub fn kostka_number(l: &Partition, mu: &[u32]) -> u64 {
    type Cache = Mutex<HashMap<(Partition, Vec<u32>), u64>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mu: Vec<u32> = mu.iter().copied().filter(|&x| x > 0).collect();
    if l.size() != mu.iter().sum::<u32>() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let key = (l.clone(), mu.clone());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let last = *mu.last().unwrap();
    let rest = &mu[..mu.len() - 1];
    let mut total = 0;
    for nu in horizontal_strip_removals(l, last) {
        total += kostka_number(&nu, rest);
    }
    cache.lock().unwrap().insert(key, total);
    total
}

/// Partitions ν ⊆ λ with λ/ν a horizontal strip of size k.
fn horizontal_strip_removals(l: &Partition, k: u32) -> Vec<Partition> {
    fn go(i: usize, left: u32, l: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == l.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let next = l.get(i + 1).copied().unwrap_or(0);
        let max_remove = (l[i] - next).min(left);
        for x in 0..=max_remove {
            cur.push(l[i] - x);
            go(i + 1, left - x, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, l.parts(), &mut Vec::new(), &mut out);
    out
}

/// A symmetric function with coefficients in F, in m-basis coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct SymPoly<F: Field> {
    r: usize,
    ctx: F::Ctx,
    terms: BTreeMap<MultiPartition, F>,
}

impl<F: Field> SymPoly<F> {
    pub fn zero(r: usize, ctx: &F::Ctx) -> Self {
        SymPoly { r, ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(r: usize, ctx: &F::Ctx) -> Self {
        Self::monomial(&MultiPartition::empty(r), F::one(ctx))
    }

    /// c·m_λ.
    pub fn monomial(l: &MultiPartition, c: F) -> Self {
        let ctx = c.ctx();
        let mut p = Self::zero(l.r(), &ctx);
        if !c.is_zero() {
            p.terms.insert(l.clone(), c);
        }
        p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: &MultiPartition) -> F {
        self.terms.get(l).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    fn add_term(&mut self, l: MultiPartition, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&l) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&l);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(l, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::from_int(&self.ctx, -1)))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.r, &self.ctx);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.r, &self.ctx);
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                let ab = a.mul(b);
                for (nu, c) in m_product(l, m) {
                    out.add_term(nu, ab.mul(&F::from_int(&self.ctx, c as i64)));
                }
            }
        }
        out
    }

    /// Homogeneous component of degree n.
    pub fn degree_part(&self, n: u32) -> Self {
        SymPoly {
            r: self.r,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Coordinates on m_λ for λ in `multipartitions(n, r)` order.
    pub fn m_coords(&self, n: u32) -> Vec<F> {
        multipartitions(n, self.r).iter().map(|l| self.coeff(l)).collect()
    }

    pub fn from_m_coords(n: u32, r: usize, ctx: &F::Ctx, coords: &[F]) -> Self {
        let mut out = Self::zero(r, ctx);
        for (l, c) in multipartitions(n, r).into_iter().zip(coords) {
            out.add_term(l, c.clone());
        }
        out
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> SymPoly<G> {
        let mut out = SymPoly::zero(self.r, ctx);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }
}

/// m_λ.
pub fn monomial_sym<F: Field>(l: &MultiPartition, ctx: &F::Ctx) -> SymPoly<F> {
    SymPoly::monomial(l, F::one(ctx))
}

/// s_λ = Π_k s_{λ^{(k)}}, via products of Kostka numbers.
pub fn schur_sym<F: Field>(l: &MultiPartition, ctx: &F::Ctx) -> SymPoly<F> {
    let mut out = SymPoly::zero(l.r(), ctx);
    for mu in multipartitions(l.size(), l.r()) {
        if mu.sizes() != l.sizes() {
            continue;
        }
        let k: u64 = (0..l.r()).map(|c| kostka_number(l.comp(c), mu.comp(c).parts())).product();
        if k > 0 {
            out.add_term(mu, F::from_int(ctx, k as i64));
        }
    }
    out
}

fn single_color(r: usize, k: usize, p: Partition) -> MultiPartition {
    let mut v = vec![Partition::empty(); r];
    v[k] = p;
    MultiPartition::new(v)
}

/// p_s of the single alphabet x^{(j)} (0-based color).
pub fn power_sum_plain<F: Field>(s: u32, j: usize, r: usize, ctx: &F::Ctx) -> SymPoly<F> {
    monomial_sym(&single_color(r, j, Partition::new(vec![s])), ctx)
}

/// p^{(k)}_s = Σ_j ζ^{(k−1)(j−1)} p_s(x^{(j)}), with k 0-based here.
pub fn power_sum_colored<F: Field>(s: u32, k: usize, r: usize, ctx: &F::Ctx) -> SymPoly<F> {
    let mut out = SymPoly::zero(r, ctx);
    for j in 0..r {
        let z = Cyclotomic::zeta_pow(r as u32, (k * j) as i64);
        out = out.add(&power_sum_plain(s, j, r, ctx).scale(&F::from_cyclotomic(ctx, &z)));
    }
    out
}

/// p_λ = Π_{k,i} p^{(k)}_{λ^{(k)}_i}.
pub fn power_sum<F: Field>(l: &MultiPartition, ctx: &F::Ctx) -> SymPoly<F> {
    let mut out = SymPoly::one(l.r(), ctx);
    for k in 0..l.r() {
        for &s in l.comp(k).parts() {
            out = out.mul(&power_sum_colored(s, k, l.r(), ctx));
        }
    }
    out
}

/// e_a(x^{(j)}).
pub fn elementary<F: Field>(a: u32, j: usize, r: usize, ctx: &F::Ctx) -> SymPoly<F> {
    monomial_sym(&single_color(r, j, Partition::new(vec![1; a as usize])), ctx)
}

/// h_b(x^{(j)}).
pub fn complete<F: Field>(b: u32, j: usize, r: usize, ctx: &F::Ctx) -> SymPoly<F> {
    let mut out = SymPoly::zero(r, ctx);
    for p in partitions(b) {
        out.add_term(single_color(r, j, p), F::one(ctx));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Coefficients of u^0..u^max of Π_i (1 − t u x_i^{(k∓1)}) / (1 − u x_i^{(k)}),
/// with k 0-based and `t` the parameter attached to the numerator.
pub fn q_series<F: Field>(k: usize, sign: Sign, max_degree: u32, r: usize, t: &F) -> Vec<SymPoly<F>> {
    let ctx = t.ctx();
    let other = match sign {
        Sign::Plus => (k + r - 1) % r,
        Sign::Minus => (k + 1) % r,
    };
    let num: Vec<SymPoly<F>> =
        (0..=max_degree).map(|a| elementary(a, other, r, &ctx).scale(&t.neg().pow(a))).collect();
    let den: Vec<SymPoly<F>> = (0..=max_degree).map(|b| complete(b, k, r, &ctx)).collect();
    (0..=max_degree as usize)
        .map(|s| {
            let mut acc = SymPoly::zero(r, &ctx);
            for a in 0..=s {
                acc = acc.add(&num[a].mul(&den[s - a]));
            }
            acc
        })
        .collect()
}

/// q^±_λ = Π_{k,i} q^{(k)}_{λ^{(k)}_i,±}(x; t_{k−c}), c = 1 for +, 0 for −.
/// `params[k]` is the parameter of (0-based) color k.
pub fn q_pm<F: Field>(l: &MultiPartition, sign: Sign, params: &[F]) -> SymPoly<F> {
    let r = l.r();
    assert_eq!(params.len(), r, "one parameter per color");
    let ctx = params[0].ctx();
    let mut out = SymPoly::one(r, &ctx);
    for k in 0..r {
        let Some(&top) = l.comp(k).parts().first() else { continue };
        let t = match sign {
            Sign::Plus => &params[(k + r - 1) % r],
            Sign::Minus => &params[k],
        };
        let series = q_series(k, sign, top, r, t);
        for &s in l.comp(k).parts() {
            out = out.mul(&series[s as usize]);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    S,
    P,
    QPlus,
    QMinus,
}

/// Rows: images of the basis elements labeled by `multipartitions(n, r)`, in m-coordinates.
pub fn basis_matrix<F: Field>(basis: Basis, n: u32, params: &[F]) -> Mat<F> {
    let r = params.len();
    let ctx = params[0].ctx();
    let labels = multipartitions(n, r);
    let rows: Vec<Vec<F>> = labels
        .iter()
        .map(|l| {
            let f = match basis {
                Basis::M => monomial_sym(l, &ctx),
                Basis::S => schur_sym(l, &ctx),
                Basis::P => power_sum(l, &ctx),
                Basis::QPlus => q_pm(l, Sign::Plus, params),
                Basis::QMinus => q_pm(l, Sign::Minus, params),
            };
            f.m_coords(n)
        })
        .collect();
    Mat::from_rows(&ctx, rows)
}

/// Coordinates of a degree-n function in the given basis.
pub fn expand_in<F: Field>(f: &SymPoly<F>, basis: Basis, n: u32, params: &[F]) -> Vec<F> {
    let m = basis_matrix(basis, n, params);
    let inv = m.inverse().expect("basis images are independent");
    row_times(&f.m_coords(n), &inv)
}

pub(crate) fn row_times<F: Field>(v: &[F], m: &Mat<F>) -> Vec<F> {
    let ctx = m.ctx();
    (0..m.cols())
        .map(|j| {
            let mut acc = F::zero(ctx);
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc = acc.add(&x.mul(m.get(i, j)));
                }
            }
            acc
        })
        .collect()
}

/// The bilinear form on degree-n functions with ⟨q⁺_λ, m_μ⟩ = δ.
pub struct Form<F: Field> {
    pub n: u32,
    pub r: usize,
    /// M(q⁺, m)^{-1}
    mq_inv: Mat<F>,
}

impl<F: Field> Form<F> {
    pub fn new(n: u32, params: &[F]) -> Self {
        let mq = basis_matrix(Basis::QPlus, n, params);
        Form { n, r: params.len(), mq_inv: mq.inverse().expect("q+ images are independent") }
    }

    /// ⟨f, g⟩ from m-coordinates.
    pub fn pair(&self, f: &[F], g: &[F]) -> F {
        let fq = row_times(f, &self.mq_inv);
        let ctx = self.mq_inv.ctx();
        fq.iter().zip(g).fold(F::zero(ctx), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    pub fn scalar_product(&self, f: &SymPoly<F>, g: &SymPoly<F>) -> F {
        self.pair(&f.m_coords(self.n), &g.m_coords(self.n))
    }

    /// Gram matrix of the basis whose m-coordinates are the rows of `b`.
    pub fn gram(&self, b: &Mat<F>) -> Mat<F> {
        b.mul(&self.mq_inv).and_then(|x| x.mul(&b.transpose())).expect("square")
    }
}

/// ⟨s_λ, s_μ⟩ over `multipartitions(n, r)`.
pub fn schur_gram<F: Field>(n: u32, params: &[F]) -> Mat<F> {
    let form = Form::new(n, params);
    form.gram(&basis_matrix(Basis::S, n, params))
}

/// A function of two alphabets x, y in m(x)⊗m(y) coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct BiSym<F: Field> {
    r: usize,
    ctx: F::Ctx,
    terms: BTreeMap<(MultiPartition, MultiPartition), F>,
}

impl<F: Field> BiSym<F> {
    pub fn zero(r: usize, ctx: &F::Ctx) -> Self {
        BiSym { r, ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(r: usize, ctx: &F::Ctx) -> Self {
        let mut b = Self::zero(r, ctx);
        b.terms.insert((MultiPartition::empty(r), MultiPartition::empty(r)), F::one(ctx));
        b
    }

    /// f(x)·g(y).
    pub fn tensor(f: &SymPoly<F>, g: &SymPoly<F>) -> Self {
        let mut out = Self::zero(f.r, &f.ctx);
        for (a, x) in f.terms() {
            for (b, y) in g.terms() {
                out.add_term((a.clone(), b.clone()), x.mul(y));
            }
        }
        out
    }

    fn add_term(&mut self, k: (MultiPartition, MultiPartition), c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.r, &self.ctx);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.mul(c));
        }
        out
    }

    /// Product, dropping terms whose x-degree exceeds `max_deg`.
    pub fn mul_truncated(&self, other: &Self, max_deg: u32) -> Self {
        let mut out = Self::zero(self.r, &self.ctx);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                if a.size() + c.size() > max_deg {
                    continue;
                }
                let xy = x.mul(y);
                let left = m_product(a, c);
                let right = m_product(b, d);
                for (nu, p) in &left {
                    for (mu, q) in &right {
                        out.add_term((nu.clone(), mu.clone()), xy.mul(&F::from_int(&self.ctx, (p * q) as i64)));
                    }
                }
            }
        }
        out
    }

    /// Terms of x-degree n.
    pub fn degree_part(&self, n: u32) -> Self {
        BiSym {
            r: self.r,
            ctx: self.ctx.clone(),
            terms: self.terms.iter().filter(|((a, _), _)| a.size() == n).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiPartition, MultiPartition), &F)> {
        self.terms.iter()
    }
}

/// Degree-n part of Π_k Π_{i,j} (1 − t_k x^{(k)}_i y^{(k+1)}_j)/(1 − x^{(k)}_i y^{(k)}_j),
/// computed as exp of Σ_k Σ_s (p_s(x^{(k)}) p_s(y^{(k)}) − t_k^s p_s(x^{(k)}) p_s(y^{(k+1)}))/s.
pub fn kernel_omega<F: Field>(n: u32, params: &[F]) -> BiSym<F> {
    let r = params.len();
    let ctx = params[0].ctx();
    let mut log = BiSym::zero(r, &ctx);
    for s in 1..=n {
        let inv_s = F::from_rational(&ctx, &BigRational::new(1.into(), s.into()));
        for (k, tk) in params.iter().enumerate() {
            let px = power_sum_plain::<F>(s, k, r, &ctx);
            let diag = BiSym::tensor(&px, &power_sum_plain(s, k, r, &ctx));
            let off = BiSym::tensor(&px, &power_sum_plain(s, (k + 1) % r, r, &ctx)).scale(&tk.pow(s).neg());
            log = log.add(&diag.add(&off).scale(&inv_s));
        }
    }
    let mut total = BiSym::one(r, &ctx);
    let mut term = BiSym::one(r, &ctx);
    for j in 1..=n {
        let inv_j = F::from_rational(&ctx, &BigRational::new(1.into(), j.into()));
        term = term.mul_truncated(&log, n).scale(&inv_j);
        total = total.add(&term);
    }
    total.degree_part(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatFunc;

    fn mp(v: Vec<Vec<u32>>) -> MultiPartition {
        MultiPartition::from_vecs(v)
    }

    #[test]
    fn schur_examples() {
        let s1 = schur_sym::<Cyclotomic>(&mp(vec![vec![1], vec![]]), &2);
        assert_eq!(s1, monomial_sym(&mp(vec![vec![1], vec![]]), &2));
        let s2 = schur_sym::<Cyclotomic>(&mp(vec![vec![2], vec![]]), &2);
        let want = monomial_sym::<Cyclotomic>(&mp(vec![vec![2], vec![]]), &2).add(&monomial_sym(&mp(vec![vec![1, 1], vec![]]), &2));
        assert_eq!(s2, want);
        assert_eq!(monomial_sym::<Cyclotomic>(&MultiPartition::empty(2), &2), SymPoly::one(2, &2));
    }

    #[test]
    fn m_products() {
        // m_1·m_1 = m_2 + 2 m_11
        let p = Partition::new(vec![1]);
        let prod = classical_m_product(&p, &p);
        assert_eq!(*prod, vec![(Partition::new(vec![2]), 1), (Partition::new(vec![1, 1]), 2)]);
        // m_1·m_11 = m_21 + 3 m_111
        let q = Partition::new(vec![1, 1]);
        let prod = classical_m_product(&p, &q);
        assert_eq!(*prod, vec![(Partition::new(vec![2, 1]), 1), (Partition::new(vec![1, 1, 1]), 3)]);
    }

    #[test]
    fn kostka_numbers() {
        let l = Partition::new(vec![2, 1]);
        assert_eq!(kostka_number(&l, &[1, 1, 1]), 2);
        assert_eq!(kostka_number(&l, &[2, 1]), 1);
        assert_eq!(kostka_number(&l, &[3]), 0);
        assert_eq!(kostka_number(&Partition::new(vec![3, 2]), &[2, 2, 1]), 2);
    }

    #[test]
    fn colored_power_sums() {
        let a = power_sum_colored::<Cyclotomic>(1, 1, 2, &2);
        let want = power_sum_plain::<Cyclotomic>(1, 0, 2, &2).sub(&power_sum_plain(1, 1, 2, &2));
        assert_eq!(a, want);
    }

    #[test]
    fn q_series_first_order() {
        let t = RatFunc::t(2);
        let q = q_series(0, Sign::Plus, 1, 2, &t);
        assert_eq!(q[0], SymPoly::one(2, &2));
        let want = power_sum_plain::<RatFunc>(1, 0, 2, &2).sub(&power_sum_plain(1, 1, 2, &2).scale(&t));
        assert_eq!(q[1], want);
        let t1 = RatFunc::t(1);
        let q1 = q_series(0, Sign::Plus, 1, 1, &t1);
        let one = RatFunc::from_int(&1, 1);
        assert_eq!(q1[1], power_sum_plain::<RatFunc>(1, 0, 1, &1).scale(&one.sub(&t1)));
    }

    #[test]
    fn form_duality() {
        let t = RatFunc::t(2);
        let params = vec![t.clone(), t];
        let form = Form::new(2, &params);
        let labels = multipartitions(2, 2);
        for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate() {
                let m = monomial_sym::<RatFunc>(b, &2);
                let qm = q_pm(b, Sign::Minus, &params);
                let want = RatFunc::from_int(&2, i64::from(i == j));
                assert_eq!(form.scalar_product(&q_pm(a, Sign::Plus, &params), &m), want);
                assert_eq!(form.scalar_product(&monomial_sym(a, &2), &qm), want);
            }
        }
    }
}
