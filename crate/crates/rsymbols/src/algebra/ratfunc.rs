//! Univariate rational functions in t over Q(ζ_r), kept in lowest terms with
//! a monic denominator so equal values have identical representations.

use std::fmt;

use num_rational::BigRational;

use super::cyclotomic::Cyclotomic;
use super::field::{AlgebraError, Field};
use super::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let r = num.order();
        if num.is_zero() {
            return Ok(RatFunc { num, den: UniPoly::one(r) });
        }
        if den.degree() == Some(0) {
            let c = den.coeffs()[0].inv()?;
            return Ok(RatFunc { num: num.scale(&c), den: UniPoly::one(r) });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lc = den.lc().expect("nonzero").inv()?;
        num = num.scale(&lc);
        den = den.scale(&lc);
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let r = p.order();
        RatFunc { num: p, den: UniPoly::one(r) }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn t(r: u32) -> Self {
        Self::from_poly(UniPoly::t(r))
    }

    /// t^k for any integer k.
    pub fn t_pow(r: u32, k: i64) -> Self {
        let m = UniPoly::monomial(Cyclotomic::one(r), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc { num: UniPoly::one(r), den: m }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Polynomial with rational-integer coefficients.
    pub fn is_integral_polynomial(&self) -> bool {
        self.is_polynomial() && self.num.integer_coeffs().is_some()
    }

    /// f(1/t).
    pub fn invert_variable(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let d = dn.max(dd);
        RatFunc::new(self.num.reversed(d), self.den.reversed(d)).expect("nonzero denominator")
    }

    /// Value at a point of Q(ζ); errors at a pole.
    pub fn eval(&self, x: &Cyclotomic) -> Result<Cyclotomic, AlgebraError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval(x).mul(&d.inv()?))
    }

    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval_rational(x);
        if d == BigRational::from_integer(0.into()) {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval_rational(x) / d)
    }

    /// Value at t = 0, if there is no pole there.
    pub fn at_zero(&self) -> Result<Cyclotomic, AlgebraError> {
        self.eval(&Cyclotomic::zero(self.order()))
    }

    pub fn render(&self) -> String {
        if self.is_polynomial() {
            return self.num.render();
        }
        let wrap = |p: &UniPoly| {
            if p.is_monomial() && p.coeffs().iter().all(|c| c.is_zero() || c.as_integer().is_some()) {
                p.render()
            } else {
                format!("({})", p.render())
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Field for RatFunc {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.order()
    }
    fn zero(ctx: &u32) -> Self {
        Self::from_poly(UniPoly::zero(*ctx))
    }
    fn one(ctx: &u32) -> Self {
        Self::from_poly(UniPoly::one(*ctx))
    }
    fn from_rational(ctx: &u32, q: &BigRational) -> Self {
        Self::constant(Cyclotomic::from_rational(*ctx, q.clone()))
    }
    fn from_cyclotomic(ctx: &u32, c: &Cyclotomic) -> Self {
        assert_eq!(*ctx, c.order(), "cyclotomic order mismatch");
        Self::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            if self.is_polynomial() {
                return Self::from_poly(self.num.add(&other.num));
            }
            return RatFunc::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den)).expect("nonzero")
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.order());
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let div = |a: &UniPoly, g: &UniPoly| if g.degree() == Some(0) { a.clone() } else { a.divrem(g).unwrap().0 };
        let num = div(&self.num, &g1).mul(&div(&other.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&other.den, &g1));
        RatFunc::new(num, den).expect("nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn conj(&self) -> Self {
        RatFunc::new(self.num.conjugate(), self.den.conjugate()).expect("nonzero")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]({})", self.order(), self.render())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UniPoly {
        UniPoly::from_ints(1, v)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(p(&[1, 1])));
    }

    #[test]
    fn zero_numerator() {
        let f = RatFunc::new(UniPoly::zero(1), p(&[2, 0, 0, 1])).unwrap();
        assert_eq!(f.num(), &UniPoly::zero(1));
        assert_eq!(f.den(), &UniPoly::one(1));
    }

    #[test]
    fn zero_denominator_errors() {
        assert_eq!(RatFunc::new(p(&[1]), UniPoly::zero(1)), Err(AlgebraError::ZeroDenominator));
    }

    #[test]
    fn monic_denominator() {
        let f = RatFunc::new(p(&[2]), p(&[2, 4])).unwrap();
        assert!(f.den().lc().unwrap().is_one_value());
        assert_eq!(f.render(), "(1/2)/(1/2 + t)");
    }

    #[test]
    fn invert_variable() {
        let f = RatFunc::from_poly(p(&[0, 1]));
        assert_eq!(f.invert_variable(), RatFunc::t_pow(1, -1));
        let g = RatFunc::new(p(&[1, 2]), p(&[0, 0, 1])).unwrap();
        assert_eq!(g.invert_variable(), RatFunc::from_poly(p(&[0, 2, 1])));
    }
}
