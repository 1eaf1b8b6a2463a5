use std::fmt::Debug;

use num_rational::BigRational;
use thiserror::Error;

use super::cyclotomic::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at specialization point")]
    Pole,
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("inexact division")]
    Inexact,
}

/// A field whose elements carry enough context (cyclotomic order, number of
/// variables) to build their own zero and one.
pub trait Field: Clone + PartialEq + Debug {
    type Ctx: Clone + Debug + PartialEq;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Self;
    /// Embed a scalar of Q(ζ_r); the orders must agree.
    fn from_cyclotomic(ctx: &Self::Ctx, c: &Cyclotomic) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;
    /// Complex conjugation, acting on the cyclotomic scalars only.
    fn conj(&self) -> Self;

    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rational(ctx, &BigRational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Scalars of Q(ζ_r)(t) or Q(ζ_r)(t_1..t_r): fields that admit t = 0 and a printed form.
pub trait ParamField: Field {
    fn at_zero(&self) -> Result<Cyclotomic, AlgebraError>;
    fn render(&self) -> String;
    fn to_json(&self) -> serde_json::Value;
}

impl ParamField for Cyclotomic {
    fn at_zero(&self) -> Result<Cyclotomic, AlgebraError> {
        Ok(self.clone())
    }
    fn render(&self) -> String {
        Cyclotomic::render(self)
    }
    fn to_json(&self) -> serde_json::Value {
        super::json::cyclotomic_to_json(self)
    }
}

impl ParamField for super::RatFunc {
    fn at_zero(&self) -> Result<Cyclotomic, AlgebraError> {
        super::RatFunc::at_zero(self)
    }
    fn render(&self) -> String {
        super::RatFunc::render(self)
    }
    fn to_json(&self) -> serde_json::Value {
        super::json::ratfunc_to_json(self)
    }
}

impl ParamField for super::MultiRatFunc {
    fn at_zero(&self) -> Result<Cyclotomic, AlgebraError> {
        super::MultiRatFunc::at_zero(self)
    }
    fn render(&self) -> String {
        super::MultiRatFunc::render(self)
    }
    fn to_json(&self) -> serde_json::Value {
        super::json::multiratfunc_to_json(self)
    }
}
