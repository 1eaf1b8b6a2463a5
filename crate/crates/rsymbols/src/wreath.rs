//! The groups W_{n,r} = S_n ⋉ (Z/rZ)^n: classes, characters, reflection
//! determinants and Poincaré polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Cyclotomic, Field, Mat, RatFunc, UniPoly};
use crate::combinatorics::{multipartitions, MultiPartition};
use crate::symfunc::{basis_matrix, Basis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDatum {
    pub ty: MultiPartition,
    pub centralizer: BigInt,
    pub size: BigInt,
}

/// |W_{n,r}| = r^n n!.
pub fn group_order(n: u32, r: usize) -> BigInt {
    let mut o = num_traits::pow(BigInt::from(r as u64), n as usize);
    for i in 1..=n {
        o *= i;
    }
    o
}

pub fn class_data(n: u32, r: usize) -> Vec<ClassDatum> {
    let order = group_order(n, r);
    multipartitions(n, r)
        .into_iter()
        .map(|ty| {
            let z = ty.z();
            let size = &order / &z;
            ClassDatum { ty, centralizer: z, size }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub n: u32,
    pub r: usize,
    /// Character labels χ^μ.
    pub labels: Vec<MultiPartition>,
    pub classes: Vec<ClassDatum>,
    /// values[μ][λ] = χ^μ(w_λ)
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    /// Degrees χ(1), read from the identity class.
    pub fn degrees(&self) -> Vec<BigInt> {
        let id = self.classes.iter().position(|c| c.ty.comp(0).parts().iter().all(|&p| p == 1) && c.ty.comp(0).size() == self.n);
        let id = id.expect("identity class present");
        self.values.iter().map(|row| row[id].as_integer().expect("integer degree")).collect()
    }

    /// X(0) as a matrix: rows indexed by classes λ, columns by characters μ.
    pub fn class_by_character(&self) -> Mat<Cyclotomic> {
        let r = self.r as u32;
        Mat::from_fn(&r, self.classes.len(), self.labels.len(), |i, j| self.values[j][i].clone())
    }
}

/// χ^μ(w_λ) as the coefficient of s_μ in p_λ.
pub fn character_table(n: u32, r: usize) -> Arc<CharacterTable> {
    type Cache = Mutex<HashMap<(u32, usize), Arc<CharacterTable>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(n, r)) {
        return t.clone();
    }
    let ro = r as u32;
    let params = vec![Cyclotomic::zero(ro); r];
    let ks = basis_matrix(Basis::S, n, &params);
    let p = basis_matrix(Basis::P, n, &params);
    let x = p.mul(&ks.inverse().expect("unitriangular")).expect("square");
    let labels = multipartitions(n, r);
    let classes = class_data(n, r);
    let values = (0..labels.len()).map(|mu| (0..classes.len()).map(|l| x.get(l, mu).clone()).collect()).collect();
    let t = Arc::new(CharacterTable { n, r, labels, classes, values });
    cache.lock().unwrap().insert((n, r), t.clone());
    t
}

/// det(t·id − w_λ) = Π_k Π_j (t^{λ^{(k)}_j} − ζ^{k−1}).
pub fn det_reflection(l: &MultiPartition) -> UniPoly {
    let r = l.r() as u32;
    let mut acc = UniPoly::one(r);
    for k in 0..l.r() {
        for &p in l.comp(k).parts() {
            let f = UniPoly::monomial(Cyclotomic::one(r), p as usize).sub(&UniPoly::constant(Cyclotomic::zeta_pow(r, k as i64)));
            acc = acc.mul(&f);
        }
    }
    acc
}

/// det_V(w_λ) = Π over cycles of (−1)^{ℓ−1} ζ^{k−1}.
pub fn det_v(l: &MultiPartition) -> Cyclotomic {
    let r = l.r() as u32;
    let mut acc = Cyclotomic::one(r);
    for k in 0..l.r() {
        for &p in l.comp(k).parts() {
            let sign = if p % 2 == 0 { -1 } else { 1 };
            acc = acc.mul(&Cyclotomic::zeta_pow(r, k as i64).scale(&BigRational::from_integer(sign.into())));
        }
    }
    acc
}

/// P_W(t) = Π_{i=1..n} (t^{ir} − 1)/(t − 1).
pub fn poincare(n: u32, r: usize) -> UniPoly {
    let ro = r as u32;
    let mut acc = UniPoly::one(ro);
    for i in 1..=n as usize {
        let f = UniPoly::from_coeffs(ro, vec![Cyclotomic::one(ro); i * r]);
        acc = acc.mul(&f);
    }
    acc
}

/// Number of reflections, rn(n+1)/2 − n.
pub fn nstar(n: u32, r: usize) -> u32 {
    (r as u32) * n * (n + 1) / 2 - n
}

/// 𝔾_W(t) = (t − 1)^n t^{N*} P_W(t).
pub fn gw_polynomial(n: u32, r: usize) -> UniPoly {
    let ro = r as u32;
    UniPoly::from_ints(ro, &[-1, 1]).pow(n).mul(&poincare(n, r)).shift(nstar(n, r) as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WreathError {
    #[error("not a character: graded multiplicity {0} is not an integer polynomial")]
    NotACharacter(String),
    #[error("class function has {got} values, expected {want}")]
    Length { got: usize, want: usize },
}

/// R(f) = (t−1)^n P_W(t) |W|^{-1} Σ_w det_V(w) f(w) / det(t − w), f given per class.
pub fn graded_multiplicity(f: &[Cyclotomic], n: u32, r: usize) -> Result<UniPoly, WreathError> {
    let classes = class_data(n, r);
    if f.len() != classes.len() {
        return Err(WreathError::Length { got: f.len(), want: classes.len() });
    }
    let ro = r as u32;
    let mut sum = RatFunc::zero(&ro);
    for (c, v) in classes.iter().zip(f) {
        if v.is_zero() {
            continue;
        }
        let w = RatFunc::from_cyclotomic(&ro, &det_v(&c.ty).mul(v));
        let inv_z = RatFunc::from_rational(&ro, &BigRational::new(1.into(), c.centralizer.clone()));
        let d = RatFunc::new(UniPoly::one(ro), det_reflection(&c.ty)).expect("nonzero determinant");
        sum = sum.add(&w.mul(&inv_z).mul(&d));
    }
    let pref = RatFunc::from_poly(UniPoly::from_ints(ro, &[-1, 1]).pow(n).mul(&poincare(n, r)));
    let res = pref.mul(&sum);
    if !res.is_integral_polynomial() {
        return Err(WreathError::NotACharacter(res.render()));
    }
    Ok(res.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: u32, v: i64) -> Cyclotomic {
        Cyclotomic::from_int(r, v)
    }

    #[test]
    fn class_data_examples() {
        let d = class_data(1, 2);
        assert_eq!(d.iter().map(|x| x.size.clone()).collect::<Vec<_>>(), vec![1.into(), 1.into()]);
        let d = class_data(2, 2);
        assert_eq!(d.len(), 5);
        assert_eq!(d.iter().map(|x| x.size.clone()).sum::<BigInt>(), 8.into());
    }

    #[test]
    fn small_tables() {
        let t = character_table(1, 2);
        assert_eq!(t.values, vec![vec![c(2, 1), c(2, 1)], vec![c(2, 1), c(2, -1)]]);
        let s2 = character_table(2, 1);
        assert_eq!(s2.values, vec![vec![c(1, 1), c(1, 1)], vec![c(1, -1), c(1, 1)]]);
        assert_eq!(character_table(1, 1).values, vec![vec![c(1, 1)]]);
    }

    #[test]
    fn det_examples() {
        let l = |v: Vec<Vec<u32>>| MultiPartition::from_vecs(v);
        assert_eq!(det_reflection(&l(vec![vec![1], vec![]])), UniPoly::from_ints(2, &[-1, 1]));
        assert_eq!(det_reflection(&l(vec![vec![], vec![1]])), UniPoly::from_ints(2, &[1, 1]));
        assert_eq!(det_reflection(&l(vec![vec![1, 1], vec![]])), UniPoly::from_ints(2, &[1, -2, 1]));
    }

    #[test]
    fn poincare_family() {
        assert_eq!(poincare(1, 2), UniPoly::from_ints(2, &[1, 1]));
        assert_eq!(poincare(2, 2), UniPoly::from_ints(2, &[1, 2, 2, 2, 1]));
        assert_eq!(poincare(0, 3), UniPoly::one(3));
        assert_eq!(nstar(1, 1), 0);
        assert_eq!(nstar(2, 2), 4);
        assert_eq!(nstar(1, 2), 1);
        assert_eq!(gw_polynomial(1, 2), UniPoly::from_ints(2, &[0, -1, 0, 1]));
        assert_eq!(gw_polynomial(0, 3), UniPoly::one(3));
        assert_eq!(gw_polynomial(1, 1), UniPoly::from_ints(1, &[-1, 1]));
    }

    #[test]
    fn graded_multiplicity_z2() {
        let triv = vec![c(2, 1), c(2, 1)];
        let sgn = vec![c(2, 1), c(2, -1)];
        assert_eq!(graded_multiplicity(&triv, 1, 2).unwrap(), UniPoly::one(2));
        assert_eq!(graded_multiplicity(&sgn, 1, 2).unwrap(), UniPoly::t(2));
        assert!(graded_multiplicity(&[c(2, 0), c(2, 0)], 1, 2).unwrap().is_zero());
        assert!(graded_multiplicity(&[c(2, 1), c(2, 0)], 1, 2).is_err());
    }

    #[test]
    fn orthogonality_r3() {
        for (n, r) in [(2u32, 3usize), (2, 4), (3, 2)] {
            let t = character_table(n, r);
            let ro = r as u32;
            for a in 0..t.labels.len() {
                for b in 0..t.labels.len() {
                    let mut s = Cyclotomic::zero(ro);
                    for (l, cl) in t.classes.iter().enumerate() {
                        let inv = Cyclotomic::from_rational(ro, BigRational::new(1.into(), cl.centralizer.clone()));
                        s = s.add(&t.values[a][l].mul(&t.values[b][l].conjugate()).mul(&inv));
                    }
                    assert_eq!(s, c(ro, (a == b) as i64), "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn coinvariants_regular() {
        for (n, r) in [(2u32, 3usize), (2, 2), (3, 1)] {
            let t = character_table(n, r);
            let ro = r as u32;
            let mut total = UniPoly::zero(ro);
            for (mu, deg) in t.degrees().iter().enumerate() {
                let g = graded_multiplicity(&t.values[mu], n, r).unwrap();
                total = total.add(&g.scale(&Cyclotomic::from_rational(ro, BigRational::from_integer(deg.clone()))));
            }
            assert_eq!(total, poincare(n, r));
            let dbar: Vec<_> = t.classes.iter().map(|cl| det_v(&cl.ty).conjugate()).collect();
            assert_eq!(graded_multiplicity(&dbar, n, r).unwrap(), UniPoly::one(ro).shift(nstar(n, r) as usize));
        }
    }
}
