//! Elements of the cyclotomic field Q(ζ_r), stored as residues modulo the
//! r-th cyclotomic polynomial Φ_r.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{AlgebraError, Field};

struct CycloData {
    /// Φ_r coefficients, low degree first, monic.
    phi: Vec<BigInt>,
    /// ζ^j reduced mod Φ_r for 0 <= j < r.
    powers: Vec<Vec<BigRational>>,
}

fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    q
}

fn cyclotomic_poly(r: u32) -> Vec<BigInt> {
    // x^r - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![BigInt::zero(); r as usize + 1];
    p[0] = -BigInt::one();
    p[r as usize] = BigInt::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            p = poly_div_exact_int(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn reduce_vec(mut a: Vec<BigRational>, phi: &[BigInt]) -> Vec<BigRational> {
    let deg = phi.len() - 1;
    if a.len() > deg {
        for i in (deg..a.len()).rev() {
            let c = std::mem::replace(&mut a[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if !pj.is_zero() {
                    a[i - deg + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
    }
    a.resize(deg, BigRational::zero());
    a
}

fn data(r: u32) -> Arc<CycloData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&r) {
        return d.clone();
    }
    let phi = cyclotomic_poly(r);
    let powers = (0..r as usize)
        .map(|j| {
            let mut v = vec![BigRational::zero(); j + 1];
            v[j] = BigRational::one();
            reduce_vec(v, &phi)
        })
        .collect();
    let d = Arc::new(CycloData { phi, powers });
    cache.lock().unwrap().insert(r, d.clone());
    d
}

/// Euler's totient, the degree of Φ_r.
pub fn euler_phi(r: u32) -> usize {
    (1..=r).filter(|k| k.gcd(&r) == 1).count()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn zero(r: u32) -> Self {
        assert!(r >= 1, "cyclotomic order must be positive");
        Cyclotomic { order: r, coeffs: vec![BigRational::zero(); euler_phi(r)] }
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(r, BigRational::one())
    }

    pub fn from_rational(r: u32, q: BigRational) -> Self {
        let mut z = Self::zero(r);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(r: u32, n: i64) -> Self {
        Self::from_rational(r, BigRational::from_integer(n.into()))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(r: u32, k: i64) -> Self {
        let j = k.rem_euclid(r as i64) as usize;
        Cyclotomic { order: r, coeffs: data(r).powers[j].clone() }
    }

    /// Canonical residue of Σ raw[i] ζ^i.
    pub fn reduce(raw: &[BigRational], r: u32) -> Self {
        assert!(r >= 1, "cyclotomic order must be positive");
        let d = data(r);
        Cyclotomic { order: r, coeffs: reduce_vec(raw.to_vec(), &d.phi) }
    }

    pub fn reduce_ints(raw: &[i64], r: u32) -> Self {
        let v: Vec<BigRational> = raw.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        Self::reduce(&v, r)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len();
        if n == 1 {
            return Cyclotomic { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: reduce_vec(prod, &data(self.order).phi) }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclotomic { order: self.order, coeffs: vec![self.coeffs[0].recip()] });
        }
        // extended Euclid in Q[x]: find u with u*a ≡ 1 (mod Φ_r)
        let phi: Vec<BigRational> =
            data(self.order).phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while !(r1.len() == 1) {
            let (q, rem) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].recip();
        let u: Vec<BigRational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::reduce(&u, self.order))
    }

    /// Complex conjugate: ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        let d = data(self.order);
        let r = self.order as usize;
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&d.powers[(r - i) % r]) {
                *o += a * p;
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        Field::pow(self, e)
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![BigRational::zero()], trim(rem));
    }
    let lc = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] / &lc;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    rem.truncate(db.max(1));
    (trim(q), trim(rem))
}

impl Field for Cyclotomic {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.order
    }
    fn zero(ctx: &u32) -> Self {
        Cyclotomic::zero(*ctx)
    }
    fn one(ctx: &u32) -> Self {
        Cyclotomic::one(*ctx)
    }
    fn from_rational(ctx: &u32, q: &BigRational) -> Self {
        Cyclotomic::from_rational(*ctx, q.clone())
    }
    fn from_cyclotomic(ctx: &u32, c: &Cyclotomic) -> Self {
        assert_eq!(*ctx, c.order, "cyclotomic order mismatch");
        c.clone()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        Cyclotomic::inv(self)
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Cyclotomic {
    /// Human-readable form using `z` for ζ, e.g. `1 + 2*z`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let s = if mon.is_empty() {
                fmt_rational(c)
            } else if c.is_one() {
                mon
            } else if (-c).is_one() {
                format!("-{mon}")
            } else {
                format!("{}*{mon}", fmt_rational(c))
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        out
    }

    /// True when the rendered form needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }

    pub fn is_one_value(&self) -> bool {
        *self == Cyclotomic::one(self.order)
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|z| z.to_i64())
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_negative())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.order, self.render())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_degrees() {
        for r in 1..=12 {
            assert_eq!(cyclotomic_poly(r).len() - 1, euler_phi(r));
        }
        assert_eq!(cyclotomic_poly(4), vec![1.into(), 0.into(), 1.into()]);
    }

    #[test]
    fn zeta_r2_is_minus_one() {
        assert_eq!(Cyclotomic::zeta_pow(2, 1), Cyclotomic::from_int(2, -1));
    }

    #[test]
    fn zeta_squared_r4() {
        let z = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(z.mul(&z), Cyclotomic::from_int(4, -1));
        assert_eq!(Cyclotomic::reduce_ints(&[0, 0, 1], 4), Cyclotomic::from_int(4, -1));
    }

    #[test]
    fn zeta_times_inverse_power() {
        for r in 1..=9 {
            let a = Cyclotomic::zeta_pow(r, 1);
            let b = Cyclotomic::zeta_pow(r, r as i64 - 1);
            assert_eq!(a.mul(&b), Cyclotomic::one(r));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(Cyclotomic::zeta_pow(4, 1).conjugate(), Cyclotomic::zeta_pow(4, 3));
        let r = Cyclotomic::from_rational(5, q(3, 7));
        assert_eq!(r.conjugate(), r);
        let a = Cyclotomic::reduce_ints(&[1, 1], 3);
        assert_eq!(a.conjugate(), Cyclotomic::one(3).add(&Cyclotomic::zeta_pow(3, 2)));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Cyclotomic::zero(3).inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Cyclotomic::reduce(&[q(1, 2), q(-3, 1), q(2, 5), q(1, 1)], 5);
        assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic::one(5));
        let b = Cyclotomic::reduce_ints(&[2, 1], 6);
        assert_eq!(b.mul(&b.inv().unwrap()), Cyclotomic::one(6));
    }

    #[test]
    fn render_forms() {
        assert_eq!(Cyclotomic::reduce_ints(&[1, -2], 3).render(), "1 - 2*z");
        assert_eq!(Cyclotomic::zero(3).render(), "0");
    }
}
