//! Sparse multivariate polynomials in t_1..t_k over Q(ζ_r) with graded
//! lexicographic term order, and their fractions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::cyclotomic::Cyclotomic;
use super::field::{AlgebraError, Field};
use super::ratfunc::RatFunc;
use super::unipoly::{join_terms, render_term, UniPoly};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Mono, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero(r: u32, nvars: usize) -> Self {
        MultiPoly { nvars, order: r, terms: BTreeMap::new() }
    }

    pub fn constant(c: Cyclotomic, nvars: usize) -> Self {
        let mut p = Self::zero(c.order(), nvars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(r: u32, nvars: usize) -> Self {
        Self::constant(Cyclotomic::one(r), nvars)
    }

    /// The variable t_{i+1}.
    pub fn var(r: u32, nvars: usize, i: usize) -> Self {
        Self::term(Cyclotomic::one(r), {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e
        })
    }

    pub fn term(c: Cyclotomic, exps: Vec<u32>) -> Self {
        let mut p = Self::zero(c.order(), exps.len());
        if !c.is_zero() {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn leading(&self) -> Option<(&Mono, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Mono, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(self.order, self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = Mono(m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect());
                out.add_term(m, c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn mul_term(&self, m: &Mono, c: &Cyclotomic) -> Self {
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (Mono(m1.0.iter().zip(&m.0).map(|(a, b)| a + b).collect()), c1.mul(c)))
                .collect(),
        }
    }

    /// Exact quotient; errors if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (lm, lc) = other.leading().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let mut q = Self::zero(self.order, self.nvars);
        let mut rem = self.clone();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Err(AlgebraError::Inexact);
            }
            let tm = Mono(m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect());
            let tc = c.mul(&lc_inv);
            rem = rem.sub(&other.mul_term(&tm, &tc));
            q.add_term(tm, tc);
        }
        Ok(q)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    fn max_var(&self) -> Option<usize> {
        (0..self.nvars).rev().find(|&i| self.terms.keys().any(|m| m.0[i] > 0))
    }

    /// Coefficients with respect to variable v, index = degree in v.
    fn split(&self, v: usize) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.0[v] as usize;
            if out.len() <= d {
                out.resize(d + 1, Self::zero(self.order, self.nvars));
            }
            let mut e = m.0.clone();
            e[v] = 0;
            out[d].add_term(Mono(e), c.clone());
        }
        out
    }

    fn join(parts: &[MultiPoly], v: usize, r: u32, nvars: usize) -> Self {
        let mut out = Self::zero(r, nvars);
        for (d, p) in parts.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut e = m.0.clone();
                e[v] += d as u32;
                out.add_term(Mono(e), c.clone());
            }
        }
        out
    }

    fn content(parts: &[MultiPoly]) -> MultiPoly {
        let mut g = parts[0].clone();
        for p in &parts[1..] {
            if g.is_constant() && !g.is_zero() {
                break;
            }
            g = g.gcd(p);
        }
        g
    }

    /// Greatest common divisor, normalized to leading coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let one = Self::one(self.order, self.nvars);
        if self.is_constant() || other.is_constant() {
            return one;
        }
        let v = self.max_var().max(other.max_var()).expect("non-constant");
        let a = self.split(v);
        let b = other.split(v);
        let ca = Self::content(&a);
        let cb = Self::content(&b);
        let c = ca.gcd(&cb);
        if a.len() == 1 || b.len() == 1 {
            return c;
        }
        let mut pa: Vec<MultiPoly> = a.iter().map(|x| x.div_exact(&ca).unwrap()).collect();
        let mut pb: Vec<MultiPoly> = b.iter().map(|x| x.div_exact(&cb).unwrap()).collect();
        if pa.len() < pb.len() {
            std::mem::swap(&mut pa, &mut pb);
        }
        while pb.len() > 1 {
            let rem = prem(&pa, &pb);
            pa = pb;
            if rem.iter().all(|x| x.is_zero()) {
                pb = vec![];
                break;
            }
            let cr = Self::content(&rem);
            pb = rem.iter().map(|x| x.div_exact(&cr).unwrap()).collect();
            while pb.last().is_some_and(|x| x.is_zero()) {
                pb.pop();
            }
            // keep the scalars small: leading coefficient's leading scalar = 1
            let lc = pb.last().and_then(|x| x.leading()).map(|(_, c)| c.inv().expect("nonzero"));
            if let Some(lc) = lc {
                pb = pb.iter().map(|x| x.scale(&lc)).collect();
            }
        }
        let g = if pb.is_empty() { Self::join(&pa, v, self.order, self.nvars) } else { one };
        c.mul(&g).monic()
    }

    pub fn conjugate(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conjugate())).collect(),
        }
    }

    /// Substitute t_k ↦ values[k].
    pub fn substitute(&self, values: &[UniPoly]) -> UniPoly {
        assert_eq!(values.len(), self.nvars, "assignment must cover every variable");
        let mut cache: Vec<Vec<UniPoly>> = values.iter().map(|v| vec![UniPoly::one(v.order()), v.clone()]).collect();
        let mut acc = UniPoly::zero(self.order);
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                while cache[k].len() <= e as usize {
                    let next = cache[k].last().unwrap().mul(&values[k]);
                    cache[k].push(next);
                }
                t = t.mul(&cache[k][e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mon: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                .collect();
            terms.push(render_term(c, &mon.join("*")));
        }
        join_terms(terms)
    }
}

/// Pseudo-remainder of a by b as polynomials in the split variable.
fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        if lcr.is_zero() {
            r.pop();
            continue;
        }
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = x.mul(lcb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[j + shift] = r[j + shift].sub(&bj.mul(&lcr));
        }
        r.pop();
    }
    while r.last().is_some_and(|x| x.is_zero()) {
        r.pop();
    }
    r
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.order, self.render())
    }
}

/// Context of a multivariate rational function: (cyclotomic order, variable count).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultiCtx {
    pub order: u32,
    pub nvars: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiRatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl MultiRatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (r, n) = (num.order(), num.nvars());
        if num.is_zero() {
            return Ok(MultiRatFunc { num, den: MultiPoly::one(r, n) });
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g)?, den.div_exact(&g)?)
            }
        };
        let lc = den.leading().expect("nonzero").1.inv()?;
        Ok(MultiRatFunc { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let (r, n) = (p.order(), p.nvars());
        MultiRatFunc { num: p, den: MultiPoly::one(r, n) }
    }

    /// Numerator and denominator known coprime; only the scaling is normalized.
    fn from_reduced(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.inv().expect("nonzero");
        MultiRatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn var(ctx: &MultiCtx, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(ctx.order, ctx.nvars, i))
    }

    pub fn constant(c: Cyclotomic, nvars: usize) -> Self {
        Self::from_poly(MultiPoly::constant(c, nvars))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Exact substitution t_k ↦ values[k]; errors if the denominator vanishes.
    pub fn specialize(&self, values: &[UniPoly]) -> Result<RatFunc, AlgebraError> {
        let d = self.den.substitute(values);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        RatFunc::new(self.num.substitute(values), d)
    }

    /// Substitute t_k ↦ t for every k.
    pub fn specialize_diagonal(&self) -> Result<RatFunc, AlgebraError> {
        let t = UniPoly::t(self.num.order());
        self.specialize(&vec![t; self.num.nvars()])
    }

    /// Value at t = 0.
    pub fn at_zero(&self) -> Result<Cyclotomic, AlgebraError> {
        let z = UniPoly::zero(self.num.order());
        let f = self.specialize(&vec![z; self.num.nvars()])?;
        f.at_zero()
    }

    pub fn render(&self) -> String {
        if self.is_polynomial() {
            return self.num.render();
        }
        format!("({})/({})", self.num.render(), self.den.render())
    }
}

impl Field for MultiRatFunc {
    type Ctx = MultiCtx;

    fn ctx(&self) -> MultiCtx {
        MultiCtx { order: self.num.order(), nvars: self.num.nvars() }
    }
    fn zero(ctx: &MultiCtx) -> Self {
        Self::from_poly(MultiPoly::zero(ctx.order, ctx.nvars))
    }
    fn one(ctx: &MultiCtx) -> Self {
        Self::from_poly(MultiPoly::one(ctx.order, ctx.nvars))
    }
    fn from_rational(ctx: &MultiCtx, q: &BigRational) -> Self {
        Self::constant(Cyclotomic::from_rational(ctx.order, q.clone()), ctx.nvars)
    }
    fn from_cyclotomic(ctx: &MultiCtx, c: &Cyclotomic) -> Self {
        assert_eq!(ctx.order, c.order(), "cyclotomic order mismatch");
        Self::constant(c.clone(), ctx.nvars)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.is_polynomial() && other.is_polynomial() {
            let den = &self.den;
            let num = self.num.mul(&other.den).add(&other.num.mul(den));
            return MultiRatFunc::new(num, den.mul(&other.den)).expect("nonzero");
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
        let g = self.den.gcd(&other.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d).add(&other.num.mul(&b));
        if num.is_zero() {
            return Self::zero(&self.ctx());
        }
        let h = if g.is_constant() { g.clone() } else { num.gcd(&g) };
        let (num, g) = if h.is_constant() { (num, g) } else { (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides")) };
        Self::from_reduced(num, b.mul(&d).mul(&g))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx());
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_reduced(self.num.mul(&other.num), self.den.mul(&other.den));
        }
        // cross-cancel: (a/b)(c/d) with gcd(a, d) and gcd(c, b) removed
        let g1 = if other.den.is_constant() { MultiPoly::one(self.num.order(), self.num.nvars()) } else { self.num.gcd(&other.den) };
        let g2 = if self.den.is_constant() { MultiPoly::one(self.num.order(), self.num.nvars()) } else { other.num.gcd(&self.den) };
        let q = |x: &MultiPoly, g: &MultiPoly| if g.is_constant() { x.clone() } else { x.div_exact(g).expect("gcd divides") };
        Self::from_reduced(q(&self.num, &g1).mul(&q(&other.num, &g2)), q(&self.den, &g2).mul(&q(&other.den, &g1)))
    }
    fn neg(&self) -> Self {
        MultiRatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        MultiRatFunc::new(self.den.clone(), self.num.clone())
    }
    fn conj(&self) -> Self {
        MultiRatFunc::new(self.num.conjugate(), self.den.conjugate()).expect("nonzero")
    }
}

impl fmt::Debug for MultiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiRatFunc({})", self.render())
    }
}

impl fmt::Display for MultiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CTX: MultiCtx = MultiCtx { order: 1, nvars: 2 };

    fn t(i: usize) -> MultiRatFunc {
        MultiRatFunc::var(&CTX, i)
    }

    fn c(n: i64) -> MultiRatFunc {
        MultiRatFunc::from_int(&CTX, n)
    }

    #[test]
    fn gcd_of_products() {
        let a = t(0).sub(&t(1)).num().clone();
        let b = t(0).add(&c(1)).num().clone();
        let x = a.mul(&b);
        let y = a.mul(&t(1).add(&c(2)).num().clone());
        assert_eq!(x.gcd(&y), a.monic());
    }

    #[test]
    fn fraction_cancels() {
        let a = t(0).mul(&t(0)).sub(&t(1).mul(&t(1)));
        let b = t(0).sub(&t(1));
        assert_eq!(a.div(&b).unwrap(), t(0).add(&t(1)));
    }

    #[test]
    fn specialize_examples() {
        let tt = UniPoly::t(1);
        let f = t(0).sub(&t(1)).mul(&MultiRatFunc::from_rational(&CTX, &BigRational::new(1.into(), 2.into())));
        assert!(f.specialize(&[tt.clone(), tt.clone()]).unwrap().is_zero());
        let g = t(0).mul(&t(1));
        assert_eq!(g.specialize(&[tt.clone(), tt.clone()]).unwrap(), RatFunc::from_poly(tt.mul(&tt)));
        let h = t(0).sub(&t(1)).inv().unwrap();
        assert_eq!(h.specialize(&[tt.clone(), tt]), Err(AlgebraError::Pole));
    }

    #[test]
    fn canonical_after_common_factor() {
        let f = t(0).add(&c(3)).div(&t(1).sub(&c(1))).unwrap();
        let k = t(0).mul(&t(1)).add(&c(5));
        let g = MultiRatFunc::new(f.num().mul(k.num()), f.den().mul(k.num())).unwrap();
        assert_eq!(f, g);
    }
}
