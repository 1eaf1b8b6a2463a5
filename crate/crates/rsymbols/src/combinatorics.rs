//! Partitions, r-partitions and r×r arrays of partitions.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{Cyclotomic, Field, RatFunc, UniPoly};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// λ_i with 1-based i, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// n(λ) = Σ (i−1) λ_i.
    pub fn n_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Pairs (part value, multiplicity), largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// Dominance order: partial sums of `self` bounded by those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool, SizeMismatch> {
        if self.size() != other.size() {
            return Err(SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Order of the centralizer in S_n of a permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (v, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(v) * BigInt::from(k);
            }
        }
        z
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("partition sizes differ: {0} vs {1}")]
pub struct SizeMismatch(pub u32, pub u32);

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of n in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
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

/// Number of partitions of n.
pub fn partition_count(n: u32) -> usize {
    partitions(n).len()
}

/// An r-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition(components)
    }

    pub fn from_vecs(v: Vec<Vec<u32>>) -> Self {
        MultiPartition(v.into_iter().map(Partition::new).collect())
    }

    pub fn empty(r: usize) -> Self {
        MultiPartition(vec![Partition::empty(); r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// 0-based component k (color k+1).
    pub fn comp(&self, k: usize) -> &Partition {
        &self.0[k]
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// Total number of parts.
    pub fn len(&self) -> usize {
        self.0.iter().map(Partition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.0.iter().map(Partition::size).collect()
    }

    /// Componentwise dominance.
    pub fn dominated_by(&self, other: &MultiPartition) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.dominated_by(b).unwrap_or(false))
    }

    /// Centralizer order in W_{n,r}: r^{l} Π z_{λ^{(k)}}.
    pub fn z(&self) -> BigInt {
        let r = BigInt::from(self.r() as u64);
        let mut z = num_traits::pow(r, self.len());
        for p in &self.0 {
            z *= p.z();
        }
        z
    }

    /// z_λ(t) = z_λ Π_k Π_j (1 − ζ^{k−1} t^{λ_j^{(k)}})^{-1}.
    pub fn z_t(&self) -> RatFunc {
        let r = self.r() as u32;
        let mut den = UniPoly::one(r);
        for (k, p) in self.0.iter().enumerate() {
            for &part in p.parts() {
                let f = UniPoly::one(r).sub(&UniPoly::monomial(Cyclotomic::zeta_pow(r, k as i64), part as usize));
                den = den.mul(&f);
            }
        }
        let z = RatFunc::from_rational(&r, &num_rational::BigRational::from_integer(self.z()));
        z.mul(&RatFunc::new(UniPoly::one(r), den).expect("nonzero product"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// Compositions of n into r nonnegative parts, reverse lexicographic.
pub fn compositions(n: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All r-partitions of n: size vectors in reverse lexicographic order, then
/// components in partition order with the first component varying slowest.
pub fn multipartitions(n: u32, r: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for sizes in compositions(n, r) {
        let mut acc: Vec<Vec<Partition>> = vec![vec![]];
        for &s in &sizes {
            let ps = partitions(s);
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    ps.iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(MultiPartition));
    }
    out
}

/// An r×r array of partitions ξ^{(i,j)}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartitionArray {
    r: usize,
    cells: Vec<Partition>,
}

impl PartitionArray {
    pub fn new(r: usize, cells: Vec<Partition>) -> Self {
        assert_eq!(cells.len(), r * r);
        PartitionArray { r, cells }
    }

    /// 0-based cell (i, j).
    pub fn cell(&self, i: usize, j: usize) -> &Partition {
        &self.cells[i * self.r + j]
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> u32 {
        self.cells.iter().map(Partition::size).sum()
    }

    /// Ξ′ with Ξ′^{(k)} = ∪_j ξ^{(k,j)}.
    pub fn row_merge(&self) -> MultiPartition {
        MultiPartition(
            (0..self.r)
                .map(|i| (0..self.r).fold(Partition::empty(), |acc, j| acc.union(self.cell(i, j))))
                .collect(),
        )
    }

    /// Ξ″ with Ξ″^{(k)} = ∪_i ξ^{(i,k)}.
    pub fn col_merge(&self) -> MultiPartition {
        MultiPartition(
            (0..self.r)
                .map(|j| (0..self.r).fold(Partition::empty(), |acc, i| acc.union(self.cell(i, j))))
                .collect(),
        )
    }

    /// z_Ξ = r^{l(Ξ)} Π z_{ξ^{(i,j)}}.
    pub fn z(&self) -> BigInt {
        let mut z = num_traits::pow(BigInt::from(self.r as u64), self.cells.iter().map(Partition::len).sum());
        for c in &self.cells {
            z *= c.z();
        }
        z
    }

    /// Every array whose row merge is `lam` and column merge is `mu`.
    pub fn with_merges(lam: &MultiPartition, mu: &MultiPartition) -> Vec<PartitionArray> {
        let r = lam.r();
        assert_eq!(r, mu.r());
        if lam.size() != mu.size() {
            return vec![];
        }
        // per part value v: distribute multiplicities of v in lam^{(i)} over columns j
        let mut values: Vec<u32> = lam.components().iter().flat_map(|p| p.parts().iter().copied()).collect();
        values.sort_unstable();
        values.dedup();
        let mut mu_values: Vec<u32> = mu.components().iter().flat_map(|p| p.parts().iter().copied()).collect();
        mu_values.sort_unstable();
        mu_values.dedup();
        if values != mu_values {
            return vec![];
        }
        let mut tables_per_value: Vec<(u32, Vec<Vec<u32>>)> = Vec::new();
        for &v in &values {
            let rows: Vec<u32> = (0..r).map(|k| count_of(lam.comp(k), v)).collect();
            let cols: Vec<u32> = (0..r).map(|k| count_of(mu.comp(k), v)).collect();
            let tabs = contingency_tables(&rows, &cols);
            if tabs.is_empty() {
                return vec![];
            }
            tables_per_value.push((v, tabs));
        }
        let mut out = vec![vec![Vec::<u32>::new(); r * r]];
        for (v, tabs) in &tables_per_value {
            let mut next = Vec::new();
            for cells in &out {
                for t in tabs {
                    let mut c = cells.clone();
                    for (idx, &cnt) in t.iter().enumerate() {
                        c[idx].extend(std::iter::repeat_n(*v, cnt as usize));
                    }
                    next.push(c);
                }
            }
            out = next;
        }
        out.into_iter().map(|cells| PartitionArray::new(r, cells.into_iter().map(Partition::new).collect())).collect()
    }
}

fn count_of(p: &Partition, v: u32) -> u32 {
    p.parts().iter().filter(|&&x| x == v).count() as u32
}

/// Nonnegative integer matrices (row-major) with the given row and column sums.
pub fn contingency_tables(rows: &[u32], cols: &[u32]) -> Vec<Vec<u32>> {
    fn go(i: usize, rows: &[u32], cols: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == rows.len() {
            if cols.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let ncol = cols.len();
        fill(i, 0, rows[i], rows, cols, cur, out, ncol);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(i: usize, j: usize, left: u32, rows: &[u32], cols: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, ncol: usize) {
        if j + 1 == ncol {
            if left <= cols[j] {
                cols[j] -= left;
                cur.push(left);
                go(i + 1, rows, cols, cur, out);
                cur.pop();
                cols[j] += left;
            }
            return;
        }
        for x in 0..=left.min(cols[j]) {
            cols[j] -= x;
            cur.push(x);
            fill(i, j + 1, left - x, rows, cols, cur, out, ncol);
            cur.pop();
            cols[j] += x;
        }
    }
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return vec![];
    }
    if cols.is_empty() {
        return if rows.is_empty() { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(0, rows, &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out
}
