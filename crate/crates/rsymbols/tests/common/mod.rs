//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's own Kostka, character or Hall–Littlewood code.

#![allow(dead_code)]

pub mod kernel;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rsymbols::algebra::{Cyclotomic, RatFunc, UniPoly};
use rsymbols::combinatorics::{MultiPartition, Partition};

/// All partitions of n, parts descending.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Semistandard tableaux of shape `shape` and content `content`, as rows.
pub fn ssyt(shape: &[u32], content: &[u32]) -> Vec<Vec<Vec<u32>>> {
    // Fill letters 1, 2, ... one at a time as horizontal strips.
    fn go(shape: &[u32], content: &[u32], letter: usize, cur: &[Vec<u32>], out: &mut Vec<Vec<Vec<u32>>>) {
        if letter == content.len() {
            if cur.iter().map(Vec::len).collect::<Vec<_>>() == shape.iter().map(|&x| x as usize).collect::<Vec<_>>() {
                out.push(cur.to_vec());
            }
            return;
        }
        let lens: Vec<usize> = cur.iter().map(Vec::len).collect();
        let mut add = vec![0usize; shape.len()];
        strips(shape, &lens, content[letter] as usize, 0, &mut add, &mut |add| {
            let mut next = cur.to_vec();
            for (i, &a) in add.iter().enumerate() {
                next[i].extend(std::iter::repeat_n(letter as u32 + 1, a));
            }
            go(shape, content, letter + 1, &next, out);
        });
    }
    fn strips(shape: &[u32], lens: &[usize], left: usize, row: usize, add: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if row == shape.len() {
            if left == 0 {
                f(add);
            }
            return;
        }
        // a horizontal strip may not extend past the row above's old length
        let cap_above = if row == 0 { usize::MAX } else { lens[row - 1] };
        let max = (shape[row] as usize - lens[row]).min(cap_above.saturating_sub(lens[row])).min(left);
        for a in 0..=max {
            add[row] = a;
            strips(shape, lens, left - a, row + 1, add, f);
        }
        add[row] = 0;
    }
    let mut out = Vec::new();
    go(shape, content, 0, &vec![Vec::new(); shape.len()], &mut out);
    out
}

/// Charge of a word with partition content.
pub fn charge(word: &[u32]) -> u64 {
    let mut w: Vec<Option<u32>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0u64;
    while w.iter().any(Option::is_some) {
        let n = w.len();
        let mut pos = (0..n).rev().find(|&i| w[i] == Some(1)).expect("letter 1 present");
        w[pos] = None;
        let mut index = 0u64;
        let mut letter = 2;
        loop {
            let left = (0..pos).rev().find(|&i| w[i] == Some(letter));
            let found = match left {
                Some(p) => Some(p),
                None => {
                    let wrapped = (pos + 1..n).rev().find(|&i| w[i] == Some(letter));
                    if wrapped.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(p) = found else { break };
            total += index;
            w[p] = None;
            pos = p;
            letter += 1;
        }
    }
    total
}

/// K_{λμ}(t) = Σ_T t^{charge(T)}, reading rows bottom to top.
pub fn kostka_charge(lam: &[u32], mu: &[u32]) -> UniPoly {
    let mut coeffs: Vec<i64> = Vec::new();
    for t in ssyt(lam, mu) {
        let word: Vec<u32> = t.iter().rev().flatten().copied().collect();
        let c = charge(&word) as usize;
        if coeffs.len() <= c {
            coeffs.resize(c + 1, 0);
        }
        coeffs[c] += 1;
    }
    UniPoly::from_ints(1, &coeffs)
}

pub fn n_stat(mu: &[u32]) -> u64 {
    mu.iter().enumerate().map(|(i, &m)| i as u64 * m as u64).sum()
}

/// K̃_{λμ}(t) = t^{n(μ)} K_{λμ}(1/t).
pub fn modified_kostka_charge(lam: &[u32], mu: &[u32]) -> RatFunc {
    let k = RatFunc::from_poly(kostka_charge(lam, mu));
    if k.is_zero_value() {
        return k;
    }
    RatFunc::t_pow(1, n_stat(mu) as i64).mul_value(&k.invert_variable())
}

trait RatFuncExt {
    fn is_zero_value(&self) -> bool;
    fn mul_value(&self, other: &Self) -> Self;
}

impl RatFuncExt for RatFunc {
    fn is_zero_value(&self) -> bool {
        self.num().is_zero()
    }
    fn mul_value(&self, other: &Self) -> Self {
        RatFunc::new(self.num().mul(other.num()), self.den().mul(other.den())).unwrap()
    }
}

fn beta(p: &[u32], len: usize) -> Vec<i64> {
    (0..len).map(|i| p.get(i).copied().unwrap_or(0) as i64 + (len - 1 - i) as i64).collect()
}

fn from_beta(b: &[i64]) -> Vec<u32> {
    let mut b = b.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    b.iter().enumerate().map(|(i, &x)| (x - (len - 1 - i) as i64) as u32).filter(|&x| x > 0).collect()
}

/// Partitions obtained by removing an ℓ-border strip, with the strip's height.
pub fn remove_strips(p: &[u32], l: u32) -> Vec<(Vec<u32>, u32)> {
    let len = p.len() + l as usize;
    let b = beta(p, len);
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        let y = x - l as i64;
        if y < 0 || b.contains(&y) {
            continue;
        }
        let height = b.iter().filter(|&&z| z > y && z < x).count() as u32;
        let mut nb = b.clone();
        nb[i] = y;
        out.push((from_beta(&nb), height));
    }
    out
}

/// χ^μ(w_λ) for W_{n,r} by the Murnaghan–Nakayama rule: a cycle of length ℓ and
/// color k removes an ℓ-strip from some component j with weight (−1)^{ht} ζ^{jk}.
pub fn mn_character(mu: &[Vec<u32>], cycles: &[(u32, usize)], r: u32) -> Cyclotomic {
    fn go(mu: &mut Vec<Vec<u32>>, cycles: &[(u32, usize)], r: u32, memo: &mut BTreeMap<(Vec<Vec<u32>>, usize), Cyclotomic>) -> Cyclotomic {
        if cycles.is_empty() {
            return if mu.iter().all(Vec::is_empty) { Cyclotomic::one(r) } else { Cyclotomic::zero(r) };
        }
        let key = (mu.clone(), cycles.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let (l, k) = cycles[0];
        let mut acc = Cyclotomic::zero(r);
        for j in 0..mu.len() {
            for (rest, ht) in remove_strips(&mu[j], l) {
                let saved = std::mem::replace(&mut mu[j], rest);
                let sub = go(mu, &cycles[1..], r, memo);
                mu[j] = saved;
                let w = Cyclotomic::zeta_pow(r, (j * k) as i64);
                let term = sub.mul(&w);
                acc = if ht % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        memo.insert(key, acc.clone());
        acc
    }
    go(&mut mu.to_vec(), cycles, r, &mut BTreeMap::new())
}

pub fn cycles_of(l: &MultiPartition) -> Vec<(u32, usize)> {
    (0..l.r()).flat_map(|k| l.comp(k).parts().iter().map(move |&p| (p, k))).collect()
}

pub fn components(l: &MultiPartition) -> Vec<Vec<u32>> {
    (0..l.r()).map(|k| l.comp(k).parts().to_vec()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Class sizes of W_{n,r} counted by enumerating every element (σ, c).
pub fn enumerate_classes(n: usize, r: usize) -> BTreeMap<MultiPartition, BigInt> {
    let mut out = BTreeMap::new();
    for sigma in permutations(n) {
        let total = r.pow(n as u32);
        for code in 0..total {
            let colors: Vec<usize> = (0..n).map(|i| (code / r.pow(i as u32)) % r).collect();
            let mut seen = vec![false; n];
            let mut comps = vec![Vec::new(); r];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                let (mut len, mut col, mut x) = (0u32, 0usize, s);
                while !seen[x] {
                    seen[x] = true;
                    len += 1;
                    col += colors[x];
                    x = sigma[x];
                }
                comps[col % r].push(len);
            }
            let ty = MultiPartition::new(comps.into_iter().map(Partition::new).collect());
            *out.entry(ty).or_insert_with(|| BigInt::from(0)) += 1;
        }
    }
    out
}

pub fn mp(v: Vec<Vec<u32>>) -> MultiPartition {
    MultiPartition::from_vecs(v)
}

pub fn poly(v: &[i64]) -> RatFunc {
    RatFunc::from_poly(UniPoly::from_ints(1, v))
}
