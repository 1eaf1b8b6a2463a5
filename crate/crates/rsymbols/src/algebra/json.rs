//! JSON forms of the exact types.
//!
//! * rational: integer number when integral and within i64, otherwise the string `"p/q"` (or `"p"`)
//! * cyclotomic: `{"order": r, "coeffs": [rational; φ(r)]}`
//! * polynomial: `{"order": r, "coeffs": [c_0, c_1, ...]}`, each `c_i` a rational or,
//!   when irrational, the array of its φ(r) coordinates
//! * rational function: `{"num": polynomial, "den": polynomial}`
//! * multivariate polynomial: `{"order": r, "nvars": k, "terms": [[[e_1..e_k], c], ...]}` in ascending term order

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::cyclotomic::{fmt_rational, Cyclotomic};
use super::multipoly::{MultiPoly, MultiRatFunc};
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;

#[derive(Debug, thiserror::Error)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

fn bad(what: &str) -> JsonError {
    JsonError(what.to_string())
}

pub fn rational_to_json(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.to_integer().to_i64() {
            return json!(i);
        }
    }
    Value::String(fmt_rational(q))
}

pub fn rational_from_json(v: &Value) -> Result<BigRational, JsonError> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())).ok_or_else(|| bad("integer out of range")),
        Value::String(s) => {
            let (n, d) = s.split_once('/').unwrap_or((s, "1"));
            let n: BigInt = n.trim().parse().map_err(|_| bad("rational numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad("rational denominator"))?;
            if d == BigInt::from(0) {
                return Err(bad("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        _ => Err(bad("rational")),
    }
}

pub fn cyclotomic_to_json(z: &Cyclotomic) -> Value {
    json!({"order": z.order(), "coeffs": z.coeffs().iter().map(rational_to_json).collect::<Vec<_>>()})
}

fn order_of(v: &Value) -> Result<u32, JsonError> {
    v.get("order").and_then(Value::as_u64).map(|r| r as u32).filter(|&r| r >= 1).ok_or_else(|| bad("order"))
}

pub fn cyclotomic_from_json(v: &Value) -> Result<Cyclotomic, JsonError> {
    let r = order_of(v)?;
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("coeffs"))?;
    let raw = coeffs.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(Cyclotomic::reduce(&raw, r))
}

fn scalar_to_json(c: &Cyclotomic) -> Value {
    match c.as_rational() {
        Some(q) => rational_to_json(&q),
        None => Value::Array(c.coeffs().iter().map(rational_to_json).collect()),
    }
}

fn scalar_from_json(v: &Value, r: u32) -> Result<Cyclotomic, JsonError> {
    match v {
        Value::Array(a) => {
            let raw = a.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
            Ok(Cyclotomic::reduce(&raw, r))
        }
        _ => Ok(Cyclotomic::from_rational(r, rational_from_json(v)?)),
    }
}

pub fn unipoly_to_json(p: &UniPoly) -> Value {
    json!({"order": p.order(), "coeffs": p.coeffs().iter().map(scalar_to_json).collect::<Vec<_>>()})
}

pub fn unipoly_from_json(v: &Value) -> Result<UniPoly, JsonError> {
    let r = order_of(v)?;
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("coeffs"))?;
    let cs = coeffs.iter().map(|c| scalar_from_json(c, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::from_coeffs(r, cs))
}

pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    json!({"num": unipoly_to_json(f.num()), "den": unipoly_to_json(f.den())})
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc, JsonError> {
    let num = unipoly_from_json(v.get("num").ok_or_else(|| bad("num"))?)?;
    let den = unipoly_from_json(v.get("den").ok_or_else(|| bad("den"))?)?;
    RatFunc::new(num, den).map_err(|e| JsonError(e.to_string()))
}

pub fn multipoly_to_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(m, c)| json!([m.0, scalar_to_json(c)])).collect();
    json!({"order": p.order(), "nvars": p.nvars(), "terms": terms})
}

pub fn multipoly_from_json(v: &Value) -> Result<MultiPoly, JsonError> {
    let r = order_of(v)?;
    let k = v.get("nvars").and_then(Value::as_u64).ok_or_else(|| bad("nvars"))? as usize;
    let mut p = MultiPoly::zero(r, k);
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
        let exps: Vec<u32> = t
            .get(0)
            .and_then(Value::as_array)
            .ok_or_else(|| bad("exponents"))?
            .iter()
            .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(|| bad("exponent")))
            .collect::<Result<_, _>>()?;
        if exps.len() != k {
            return Err(bad("exponent length"));
        }
        let c = scalar_from_json(t.get(1).ok_or_else(|| bad("coefficient"))?, r)?;
        p = p.add(&MultiPoly::term(c, exps));
    }
    Ok(p)
}

pub fn multiratfunc_to_json(f: &MultiRatFunc) -> Value {
    json!({"num": multipoly_to_json(f.num()), "den": multipoly_to_json(f.den())})
}

pub fn multiratfunc_from_json(v: &Value) -> Result<MultiRatFunc, JsonError> {
    let num = multipoly_from_json(v.get("num").ok_or_else(|| bad("num"))?)?;
    let den = multipoly_from_json(v.get("den").ok_or_else(|| bad("den"))?)?;
    MultiRatFunc::new(num, den).map_err(|e| JsonError(e.to_string()))
}

/// Types with a documented JSON form.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Cyclotomic {
    fn to_json(&self) -> Value {
        cyclotomic_to_json(self)
    }
}

impl ToJson for UniPoly {
    fn to_json(&self) -> Value {
        unipoly_to_json(self)
    }
}

impl ToJson for RatFunc {
    fn to_json(&self) -> Value {
        ratfunc_to_json(self)
    }
}

impl ToJson for MultiRatFunc {
    fn to_json(&self) -> Value {
        multiratfunc_to_json(self)
    }
}
