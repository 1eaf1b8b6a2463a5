//! Dense univariate polynomials in t over Q(ζ_r).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::cyclotomic::Cyclotomic;
use super::field::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    order: u32,
    /// index = degree; no trailing zeros
    coeffs: Vec<Cyclotomic>,
}

impl UniPoly {
    pub fn zero(r: u32) -> Self {
        UniPoly { order: r, coeffs: vec![] }
    }

    pub fn one(r: u32) -> Self {
        Self::constant(Cyclotomic::one(r))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_coeffs(c.order(), vec![c])
    }

    /// The monomial c·t^d.
    pub fn monomial(c: Cyclotomic, d: usize) -> Self {
        let r = c.order();
        let mut v = vec![Cyclotomic::zero(r); d];
        v.push(c);
        Self::from_coeffs(r, v)
    }

    /// The variable t.
    pub fn t(r: u32) -> Self {
        Self::monomial(Cyclotomic::one(r), 1)
    }

    pub fn from_coeffs(r: u32, mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { order: r, coeffs }
    }

    pub fn from_ints(r: u32, v: &[i64]) -> Self {
        Self::from_coeffs(r, v.iter().map(|&x| Cyclotomic::from_int(r, x)).collect())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Cyclotomic {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Cyclotomic::one(self.order)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Cyclotomic> {
        self.coeffs.last()
    }

    /// Lowest degree with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(self.order, v)
    }

    pub fn neg(&self) -> Self {
        UniPoly { order: self.order, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut v = vec![Cyclotomic::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(self.order, v)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Cyclotomic::zero(self.order); d];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { order: self.order, coeffs: v }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divrem(&self, other: &Self) -> Result<(Self, Self), AlgebraError> {
        let db = other.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = other.coeffs[db].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(self.order), self.clone()));
        }
        let mut q = vec![Cyclotomic::zero(self.order); rem.len() - db];
        for i in (0..q.len()).rev() {
            let c = rem[i + db].mul(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(b));
            }
            q[i] = c;
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(self.order, q), Self::from_coeffs(self.order, rem)))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Exact evaluation at a rational point; panics if a coefficient is not rational.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.as_rational().expect("rational coefficient");
        }
        acc
    }

    /// Compose with another polynomial: self(p(t)).
    pub fn compose(&self, p: &Self) -> Self {
        let mut acc = Self::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(p).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// t^deg · self(1/t) for the given `deg` >= degree.
    pub fn reversed(&self, deg: usize) -> Self {
        let mut v = vec![Cyclotomic::zero(self.order); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[deg - i] = c.clone();
        }
        Self::from_coeffs(self.order, v)
    }

    pub fn conjugate(&self) -> Self {
        UniPoly { order: self.order, coeffs: self.coeffs.iter().map(|c| c.conjugate()).collect() }
    }

    /// Integer coefficients, if every coefficient is a rational integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.as_integer()).collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Human-readable form in ascending degree, e.g. `1 + 2*t + t^2`.
    pub fn render_in(&self, var: &str) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(render_term(c, &mon));
        }
        join_terms(terms)
    }

    pub fn render(&self) -> String {
        self.render_in("t")
    }
}

/// Render c·mon as (is_negative, text without the leading sign).
pub(crate) fn render_term(c: &Cyclotomic, mon: &str) -> (bool, String) {
    if c.is_compound() {
        let body = format!("({})", c.render());
        return (false, if mon.is_empty() { body } else { format!("{body}*{mon}") });
    }
    let neg = c.is_negative_rational()
        || (!c.is_rational() && c.coeffs().iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigRational::zero()));
    let a = if neg { c.neg() } else { c.clone() };
    let s = if mon.is_empty() {
        a.render()
    } else if a == Cyclotomic::one(a.order()) {
        mon.to_string()
    } else {
        format!("{}*{mon}", a.render())
    };
    (neg, s)
}

pub(crate) fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, s)) in terms.into_iter().enumerate() {
        if k == 0 {
            if neg {
                out.push('-');
            }
            out.push_str(&s);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&s);
        }
    }
    out
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.order, self.render())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
