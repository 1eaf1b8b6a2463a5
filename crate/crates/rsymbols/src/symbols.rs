//! r-symbols: rows of integers with prescribed gaps, taken up to shift.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{multipartitions, MultiPartition, Partition};

/// How the pair sum in the a-function runs over entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairConvention {
    /// Unordered pairs of distinct positions.
    #[default]
    Unordered,
    /// All ordered pairs of positions, diagonal included.
    Ordered,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolConfig {
    pub r: usize,
    pub e: u32,
    pub s: Vec<u32>,
    pub alpha: usize,
    #[serde(default, skip_serializing_if = "is_default_pairs")]
    pub pairs: PairConvention,
}

fn is_default_pairs(p: &PairConvention) -> bool {
    *p == PairConvention::Unordered
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed symbol: {0}")]
    Malformed(String),
    #[error("defect {0} is not attached to this configuration")]
    Defect(Defect),
}

impl SymbolConfig {
    pub fn new(r: usize, e: u32, s: Vec<u32>, alpha: usize) -> Result<Self, SymbolError> {
        let c = SymbolConfig { r, e, s, alpha, pairs: PairConvention::Unordered };
        c.validate()?;
        Ok(c)
    }

    /// r = 1, e = 0, s = (0): the classical case.
    pub fn classical() -> Self {
        SymbolConfig { r: 1, e: 0, s: vec![0], alpha: 0, pairs: PairConvention::Unordered }
    }

    pub fn validate(&self) -> Result<(), SymbolError> {
        if self.r == 0 {
            return Err(SymbolError::Config("r must be positive".into()));
        }
        if self.s.len() != self.r {
            return Err(SymbolError::Config(format!("s has {} entries, expected r = {}", self.s.len(), self.r)));
        }
        if let Some(&bad) = self.s.iter().find(|&&sk| sk > self.e) {
            return Err(SymbolError::Config(format!("s_k = {bad} exceeds e = {}", self.e)));
        }
        if self.alpha >= self.r {
            return Err(SymbolError::Config(format!("alpha = {} must be below r = {}", self.alpha, self.r)));
        }
        Ok(())
    }

    /// m• = (m+1, …, m+1, m, …, m) with alpha copies of m+1.
    pub fn m_bullet(&self, m: usize) -> Vec<usize> {
        (0..self.r).map(|k| if k < self.alpha { m + 1 } else { m }).collect()
    }

    fn d_bullet(&self) -> Vec<i64> {
        (0..self.r).map(|k| i64::from(k < self.alpha)).collect()
    }

    /// d′ = d − d• normalized to minimum 0, if the defect belongs to this configuration.
    pub fn d_prime(&self, d: &Defect) -> Result<Vec<usize>, SymbolError> {
        if d.0.len() != self.r {
            return Err(SymbolError::Defect(d.clone()));
        }
        let diff: Vec<i64> = d.0.iter().zip(self.d_bullet()).map(|(&x, b)| x as i64 - b).collect();
        let mn = *diff.iter().min().unwrap();
        let dp: Vec<usize> = diff.iter().map(|&x| (x - mn) as usize).collect();
        if dp.iter().sum::<usize>() % self.r != 0 {
            return Err(SymbolError::Defect(d.clone()));
        }
        Ok(dp)
    }

    /// The rank offset f(d).
    pub fn f_of_defect(&self, d: &Defect) -> Result<u32, SymbolError> {
        let dp = self.d_prime(d)?;
        Ok(f_from_d_prime(&dp, self.alpha))
    }

    /// Every defect with f(d) ≤ n, in lexicographic order.
    pub fn defects_up_to(&self, n: u32) -> Vec<Defect> {
        let bound = |k: usize| {
            let mut x = 0usize;
            while f_single(x + 1, k < self.alpha) <= n {
                x += 1;
            }
            x
        };
        let bounds: Vec<usize> = (0..self.r).map(bound).collect();
        let mut out = Vec::new();
        let mut cur = vec![0usize; self.r];
        loop {
            if cur.iter().min() == Some(&0) && cur.iter().sum::<usize>() % self.r == 0 && f_from_d_prime(&cur, self.alpha) <= n {
                let raw: Vec<i64> = cur.iter().zip(self.d_bullet()).map(|(&x, b)| x as i64 + b).collect();
                out.push(Defect::normalize(&raw));
            }
            let mut k = 0;
            loop {
                if k == self.r {
                    out.sort();
                    out.dedup();
                    return out;
                }
                if cur[k] < bounds[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

fn f_single(x: usize, first: bool) -> u32 {
    let x = x as u32;
    if first {
        x * x.saturating_sub(1) / 2
    } else {
        x * (x + 1) / 2
    }
}

fn f_from_d_prime(dp: &[usize], alpha: usize) -> u32 {
    dp.iter().enumerate().map(|(k, &x)| f_single(x, k < alpha)).sum()
}

/// Row-length differences up to a common shift, with minimum 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Defect(pub Vec<usize>);

impl Defect {
    pub fn normalize(raw: &[i64]) -> Self {
        let mn = raw.iter().copied().min().unwrap_or(0);
        Defect(raw.iter().map(|&x| (x - mn) as usize).collect())
    }

    pub fn zero(r: usize) -> Self {
        Defect(vec![0; r])
    }
}

impl fmt::Debug for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub type Rows = Vec<Vec<u32>>;

/// Λ⁰(m): row k is s_k + (m_k−1)e ≥ … ≥ s_k + e ≥ s_k.
pub fn lambda_zero(m: &[usize], config: &SymbolConfig) -> Rows {
    m.iter()
        .enumerate()
        .map(|(k, &mk)| (0..mk).rev().map(|i| config.s[k] + i as u32 * config.e).collect())
        .collect()
}

/// One shift: every entry gains e and s_k is appended to row k.
pub fn shift_rows(rows: &Rows, config: &SymbolConfig) -> Rows {
    rows.iter()
        .enumerate()
        .map(|(k, row)| {
            let mut v: Vec<u32> = row.iter().map(|a| a + config.e).collect();
            v.push(config.s[k]);
            v
        })
        .collect()
}

fn shift_rows_by(rows: &Rows, config: &SymbolConfig, times: usize) -> Rows {
    let mut out = rows.clone();
    for _ in 0..times {
        out = shift_rows(&out, config);
    }
    out
}

fn check_rows(rows: &Rows, config: &SymbolConfig) -> Result<(), SymbolError> {
    if rows.len() != config.r {
        return Err(SymbolError::Malformed(format!("{} rows, expected {}", rows.len(), config.r)));
    }
    for (k, row) in rows.iter().enumerate() {
        for w in row.windows(2) {
            if w[0] < w[1] + config.e {
                return Err(SymbolError::Malformed(format!("row {} has gap below e = {}", k + 1, config.e)));
            }
        }
        if let Some(&last) = row.last() {
            if last < config.s[k] {
                return Err(SymbolError::Malformed(format!("row {} ends below s_{} = {}", k + 1, k + 1, config.s[k])));
            }
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub config: SymbolConfig,
    pub rows: Rows,
    pub defect: Defect,
    pub rank: u32,
    pub source: MultiPartition,
}

impl Symbol {
    /// Λ(λ) = φ(Λ⁰(m•) + λ), stored at the level m = |λ|.
    pub fn of(lam: &MultiPartition, d: &Defect, config: &SymbolConfig) -> Result<Symbol, SymbolError> {
        config.validate()?;
        if lam.r() != config.r {
            return Err(SymbolError::Config(format!("multipartition has {} components, expected {}", lam.r(), config.r)));
        }
        let dp = config.d_prime(d)?;
        let m = lam.size() as usize;
        let mb = config.m_bullet(m);
        let base = lambda_zero(&mb, config);
        let rows = base
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let mut v: Vec<u32> =
                    row.iter().enumerate().map(|(j, a)| a + lam.comp(k).part(j + 1) + dp[k] as u32 * config.e).collect();
                v.extend((0..dp[k]).rev().map(|i| config.s[k] + i as u32 * config.e));
                v
            })
            .collect();
        let rank = lam.size() + f_from_d_prime(&dp, config.alpha);
        Ok(Symbol { config: config.clone(), rows, defect: d.clone(), rank, source: lam.clone() })
    }

    /// Recover the symbol, defect and rank from raw rows.
    pub fn from_rows(rows: Rows, config: &SymbolConfig) -> Result<Symbol, SymbolError> {
        config.validate()?;
        check_rows(&rows, config)?;
        let lam = rpartition_of(&rows, config)?;
        let lens: Vec<i64> = rows.iter().map(|r| r.len() as i64).collect();
        let d = Defect::normalize(&lens);
        let dp = config.d_prime(&d)?;
        let rank = lam.size() + f_from_d_prime(&dp, config.alpha);
        Ok(Symbol { config: config.clone(), rows, defect: d, rank, source: lam })
    }

    pub fn shift(&self) -> Symbol {
        Symbol { rows: shift_rows(&self.rows, &self.config), ..self.clone() }
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows after shifting up to `total` entries.
    pub fn rows_at(&self, total: usize) -> Rows {
        let n = self.entry_count();
        assert!(total >= n && (total - n).is_multiple_of(self.config.r), "level {total} unreachable from {n}");
        shift_rows_by(&self.rows, &self.config, (total - n) / self.config.r)
    }

    /// Sorted (descending) multiset of entries at the given level.
    pub fn entries_at(&self, total: usize) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows_at(total).into_iter().flatten().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn a_value(&self) -> u64 {
        a_value(&self.rows, &self.config)
    }

    pub fn is_similar(&self, other: &Symbol) -> bool {
        let level = self.entry_count().max(other.entry_count());
        self.entries_at(level) == other.entries_at(level)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", rows.join(" "))
    }
}

/// ψ: lift to the smallest m• level containing the rows, then subtract Λ⁰(m•).
pub fn rpartition_of(rows: &Rows, config: &SymbolConfig) -> Result<MultiPartition, SymbolError> {
    check_rows(rows, config)?;
    let total: usize = rows.iter().map(Vec::len).sum();
    if total % config.r != config.alpha % config.r {
        return Err(SymbolError::Malformed(format!(
            "total entry count {total} is not congruent to alpha = {} mod {}",
            config.alpha, config.r
        )));
    }
    let db = config.d_bullet();
    let m = rows.iter().zip(&db).map(|(row, b)| row.len() as i64 - b).max().unwrap_or(0).max(0) as usize;
    let mb = config.m_bullet(m);
    let mut comps = Vec::with_capacity(config.r);
    for (k, row) in rows.iter().enumerate() {
        let dpp = mb[k] - row.len();
        let mut lifted: Vec<u32> = row.iter().map(|b| b + dpp as u32 * config.e).collect();
        lifted.extend((0..dpp).rev().map(|i| config.s[k] + i as u32 * config.e));
        let parts: Vec<u32> =
            lifted.iter().enumerate().map(|(j, a)| a - (config.s[k] + (mb[k] - 1 - j) as u32 * config.e)).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymbolError::Malformed(format!("row {} does not encode a partition", k + 1)));
        }
        comps.push(Partition::new(parts));
    }
    Ok(MultiPartition::new(comps))
}

/// θ(λ)^{(k)}_j = λ^{(k)}_j + max(d′_k + δ_k − j, 0).
pub fn theta_map(lam: &MultiPartition, d: &Defect, config: &SymbolConfig) -> Result<MultiPartition, SymbolError> {
    let dp = config.d_prime(d)?;
    let comps = (0..config.r)
        .map(|k| {
            let delta = usize::from(k >= config.alpha);
            let stair = dp[k] + delta;
            let len = lam.comp(k).len().max(stair.saturating_sub(1));
            Partition::new(
                (1..=len).map(|j| lam.comp(k).part(j) + stair.saturating_sub(j) as u32).collect(),
            )
        })
        .collect();
    Ok(MultiPartition::new(comps))
}

fn pair_sum(mut entries: Vec<u32>, conv: PairConvention) -> i64 {
    entries.sort_unstable_by(|a, b| b.cmp(a));
    let unordered: i64 = entries.iter().enumerate().map(|(j, &x)| j as i64 * x as i64).sum();
    match conv {
        PairConvention::Unordered => unordered,
        PairConvention::Ordered => 2 * unordered + entries.iter().map(|&x| x as i64).sum::<i64>(),
    }
}

/// The a-function of raw rows with total entry count ≡ alpha mod r. It can be
/// negative when some s_k > 0 makes Λ⁰(m•) fail to minimize the pair sum.
pub fn a_value_signed(rows: &Rows, config: &SymbolConfig) -> i64 {
    let total: usize = rows.iter().map(Vec::len).sum();
    assert!(total >= config.alpha && (total - config.alpha).is_multiple_of(config.r), "entry count {total} not ≡ alpha mod r");
    let m = (total - config.alpha) / config.r;
    let base = lambda_zero(&config.m_bullet(m), config);
    pair_sum(rows.iter().flatten().copied().collect(), config.pairs) - pair_sum(base.into_iter().flatten().collect(), config.pairs)
}

/// The a-function; panics if negative. Tables reject such configurations up front.
pub fn a_value(rows: &Rows, config: &SymbolConfig) -> u64 {
    u64::try_from(a_value_signed(rows, config)).expect("negative a-value")
}

pub fn similar(a: &Symbol, b: &Symbol) -> bool {
    a.is_similar(b)
}

/// Legal orders differ only in how classes of equal a-value are arranged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    /// Classes of equal a by (smallest defect, entry multiset) ascending.
    #[default]
    Default,
    /// The same key descending.
    Reversed,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymbolTable {
    pub config: SymbolConfig,
    pub n: u32,
    pub defects: Vec<Defect>,
    pub symbols: Vec<Symbol>,
    pub a_values: Vec<u64>,
    /// Similarity classes as index intervals in table order.
    pub classes: Vec<Range<usize>>,
    pub tie_break: TieBreak,
}

impl SymbolTable {
    pub fn build(n: u32, config: &SymbolConfig, defects: &[Defect], tie_break: TieBreak) -> Result<Self, SymbolError> {
        config.validate()?;
        let mut ds = defects.to_vec();
        ds.sort();
        ds.dedup();
        let mut syms = Vec::new();
        for d in &ds {
            let f = config.f_of_defect(d)?;
            if f > n {
                continue;
            }
            for lam in multipartitions(n - f, config.r) {
                let sym = Symbol::of(&lam, d, config)?;
                let a = a_value_signed(&sym.rows, config);
                if a < 0 {
                    return Err(SymbolError::Config(format!("symbol {sym} has a-value {a}; a must be nonnegative on the table")));
                }
                syms.push(sym);
            }
        }
        let level = syms.iter().map(Symbol::entry_count).max().unwrap_or(0);
        let mut groups: BTreeMap<Vec<u32>, Vec<Symbol>> = BTreeMap::new();
        for s in syms {
            groups.entry(s.entries_at(level)).or_default().push(s);
        }
        let mut classes: Vec<(u64, Defect, Vec<u32>, Vec<Symbol>)> = groups
            .into_iter()
            .map(|(key, mut members)| {
                members.sort_by(|x, y| (&x.defect, x.rows_at(level)).cmp(&(&y.defect, y.rows_at(level))));
                let a = members[0].a_value();
                debug_assert!(members.iter().all(|m| m.a_value() == a));
                (a, members[0].defect.clone(), key, members)
            })
            .collect();
        classes.sort_by(|x, y| {
            let k = (&x.1, &x.2).cmp(&(&y.1, &y.2));
            y.0.cmp(&x.0).then(match tie_break {
                TieBreak::Default => k,
                TieBreak::Reversed => k.reverse(),
            })
        });
        let mut symbols = Vec::new();
        let mut a_values = Vec::new();
        let mut ranges = Vec::new();
        for (a, _, _, members) in classes {
            let start = symbols.len();
            for m in members {
                symbols.push(m);
                a_values.push(a);
            }
            ranges.push(start..symbols.len());
        }
        Ok(SymbolTable { config: config.clone(), n, defects: ds, symbols, a_values, classes: ranges, tie_break })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Class index of every symbol.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        for (c, r) in self.classes.iter().enumerate() {
            for i in r.clone() {
                out[i] = c;
            }
        }
        out
    }

    /// Table indices of the symbols of defect d, in table order.
    pub fn indices_of_defect(&self, d: &Defect) -> Vec<usize> {
        (0..self.len()).filter(|&i| &self.symbols[i].defect == d).collect()
    }

    /// Defects with at least one symbol in the table.
    pub fn present_defects(&self) -> Vec<Defect> {
        self.defects.iter().filter(|d| self.symbols.iter().any(|s| &s.defect == *d)).cloned().collect()
    }

    /// n′ = n − f(d).
    pub fn n_prime(&self, d: &Defect) -> u32 {
        self.n - self.config.f_of_defect(d).expect("defect in table")
    }

    /// The symbol of defect d with smallest rank, f(d).
    pub fn cusp(&self, d: &Defect) -> Symbol {
        Symbol::of(&MultiPartition::empty(self.config.r), d, &self.config).expect("defect in table")
    }
}

/// Configuration and defect set for Sp_{2n}.
pub fn symplectic_defects(n: u32, bad_characteristic: bool) -> (SymbolConfig, Vec<Defect>) {
    let config = if bad_characteristic {
        SymbolConfig { r: 2, e: 4, s: vec![0, 2], alpha: 1, pairs: PairConvention::Unordered }
    } else {
        SymbolConfig { r: 2, e: 2, s: vec![0, 1], alpha: 1, pairs: PairConvention::Unordered }
    };
    let mut ds = Vec::new();
    let mut d = 1;
    loop {
        let mut any = false;
        for cand in [Defect(vec![d, 0]), Defect(vec![0, d])] {
            if config.f_of_defect(&cand).is_ok_and(|f| f <= n) {
                ds.push(cand);
                any = true;
            }
        }
        if !any {
            break;
        }
        d += 2;
    }
    ds.sort();
    (config, ds)
}
