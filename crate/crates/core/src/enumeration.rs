//! Brute-force generators and counters for the partition families used
//! throughout the crate. These are the ground truth every closed form is
//! checked against.
//!
//! Partitions are produced in decreasing lexicographic order by an iterative
//! depth-first search (no recursion) that only ever proposes parts allowed by
//! the filter, so restricted families are generated without visiting the
//! whole partition lattice.

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::Coefficient;

/// A non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` into non-increasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of parts equal to the smallest part (0 for the empty partition).
    pub fn smallest_multiplicity(&self) -> usize {
        smallest_multiplicity(&self.parts)
    }

    /// Largest part minus smallest part.
    pub fn difference(&self) -> Option<u32> {
        Some(self.largest()? - self.smallest()?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

fn smallest_multiplicity(parts: &[u32]) -> usize {
    match parts.last() {
        Some(&s) => parts.iter().rev().take_while(|&&p| p == s).count(),
        None => 0,
    }
}

/// A part of an overpartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

/// A partition in which the first occurrence of each distinct value may be
/// overlined. Within a run of equal values the overlined copy comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    /// Accepts `(value, overlined)` pairs and puts them in canonical order.
    /// Returns `None` for zero values or a value overlined twice.
    pub fn new(parts: impl IntoIterator<Item = (u32, bool)>) -> Option<Self> {
        let mut parts: Vec<OverPart> = parts
            .into_iter()
            .map(|(value, overlined)| OverPart { value, overlined })
            .collect();
        if parts.iter().any(|p| p.value == 0) {
            return None;
        }
        parts.sort_by(|a, b| b.value.cmp(&a.value).then(b.overlined.cmp(&a.overlined)));
        for w in parts.windows(2) {
            if w[0].value == w[1].value && w[1].overlined {
                return None;
            }
        }
        Some(Self { parts })
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn values(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.value).collect()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Overlined and plain copies of the smallest value count together.
    pub fn smallest_multiplicity(&self) -> usize {
        smallest_multiplicity(&self.values())
    }

    pub fn difference(&self) -> Option<u32> {
        Some(self.parts.first()?.value - self.parts.last()?.value)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.overlined {
                    format!("{}\u{0304}", p.value)
                } else {
                    p.value.to_string()
                }
            })
            .collect();
        f.write_str(&s.join("+"))
    }
}

/// Independent, composable restrictions on a partition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionFilter {
    /// Every part is at least this large.
    pub min_part: Option<u32>,
    /// The smallest part occurs at least this many times.
    pub smallest_mult_min: Option<u32>,
    /// Largest part minus smallest part equals this.
    pub exact_diff: Option<u32>,
    /// No part is divisible by this modulus.
    pub excluded_modulus: Option<u32>,
}

impl PartitionFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn min_part(mut self, m: u32) -> Self {
        self.min_part = Some(m);
        self
    }

    pub fn smallest_mult(mut self, m: u32) -> Self {
        self.smallest_mult_min = Some(m);
        self
    }

    pub fn diff(mut self, d: u32) -> Self {
        self.exact_diff = Some(d);
        self
    }

    pub fn regular(mut self, l: u32) -> Self {
        assert!(l >= 2, "regularity modulus must be at least 2");
        self.excluded_modulus = Some(l);
        self
    }

    fn part_allowed(&self, v: u32) -> bool {
        v >= self.min_part.unwrap_or(1) && self.excluded_modulus.is_none_or(|l| !v.is_multiple_of(l))
    }

    /// The empty partition passes `min_part` and `excluded_modulus` vacuously
    /// and fails the multiplicity and difference constraints.
    pub fn matches(&self, parts: &[u32]) -> bool {
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
            return false;
        }
        if !parts.iter().all(|&v| self.part_allowed(v)) {
            return false;
        }
        if let Some(m) = self.smallest_mult_min {
            if parts.is_empty() || smallest_multiplicity(parts) < m as usize {
                return false;
            }
        }
        if let Some(d) = self.exact_diff {
            match (parts.first(), parts.last()) {
                (Some(&hi), Some(&lo)) if hi - lo == d => {}
                _ => return false,
            }
        }
        true
    }
}

/// Stream of the partitions of `n` passing a filter, in decreasing
/// lexicographic order.
pub struct Partitions {
    n: u32,
    filter: PartitionFilter,
    parts: Vec<u32>,
    rem: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32, filter: PartitionFilter) -> Self {
        Self {
            n,
            filter,
            parts: Vec::new(),
            rem: n,
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, pos: usize) -> u32 {
        let lo = self.filter.min_part.unwrap_or(1).max(1);
        match self.filter.exact_diff {
            Some(d) if pos == 0 => lo + d,
            Some(d) => lo.max(self.parts[0] - d),
            None => lo,
        }
    }

    fn largest_allowed(&self, lo: u32, hi: u32) -> Option<u32> {
        if lo > hi {
            return None;
        }
        (lo..=hi).rev().find(|&v| self.filter.part_allowed(v))
    }

    /// Greedily appends the largest admissible parts; true when the sum is hit.
    fn fill(&mut self) -> bool {
        while self.rem > 0 {
            let hi = self.rem.min(*self.parts.last().unwrap_or(&self.n));
            let lo = self.lower_bound(self.parts.len());
            match self.largest_allowed(lo, hi) {
                Some(v) => {
                    self.parts.push(v);
                    self.rem -= v;
                }
                None => return false,
            }
        }
        true
    }

    /// Replaces the deepest part that can shrink with its next candidate.
    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.parts.pop() {
            self.rem += v;
            let lo = self.lower_bound(self.parts.len());
            if v > lo {
                if let Some(w) = self.largest_allowed(lo, v - 1) {
                    self.parts.push(w);
                    self.rem -= w;
                    return true;
                }
            }
        }
        false
    }

    fn accept(&self) -> bool {
        self.filter.matches(&self.parts)
    }

    /// Moves to the next qualifying partition; readable through
    /// [`Partitions::current`].
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.fill() && self.accept() {
                return true;
            }
        }
        loop {
            if !self.backtrack() {
                self.done = true;
                self.parts.clear();
                return false;
            }
            if self.fill() && self.accept() {
                return true;
            }
        }
    }

    pub fn current(&self) -> &[u32] {
        &self.parts
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().then(|| Partition {
            parts: self.parts.clone(),
        })
    }
}

/// Partitions of `n` passing `f`; empty for negative `n`.
pub fn gen_partitions(n: i64, f: PartitionFilter) -> Partitions {
    let mut it = Partitions::new(n.max(0) as u32, f);
    if n < 0 {
        it.done = true;
    }
    it
}

/// Visits every qualifying partition without allocating per item.
pub fn for_each_partition(n: i64, f: PartitionFilter, mut visit: impl FnMut(&[u32])) {
    let mut it = gen_partitions(n, f);
    while it.advance() {
        visit(it.current());
    }
}

fn count_filtered(n: i64, f: PartitionFilter) -> u64 {
    let mut it = gen_partitions(n, f);
    let mut c = 0u64;
    while it.advance() {
        c += 1;
    }
    c
}

/// Stream of overpartitions whose underlying partition passes the filter.
pub struct Overpartitions {
    inner: Partitions,
    base: Vec<u32>,
    run_starts: Vec<usize>,
    mask: u64,
    has_base: bool,
}

impl Iterator for Overpartitions {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        if !self.has_base || self.mask >> self.run_starts.len() != 0 {
            if !self.inner.advance() {
                return None;
            }
            self.base = self.inner.current().to_vec();
            self.run_starts = (0..self.base.len())
                .filter(|&i| i == 0 || self.base[i] != self.base[i - 1])
                .collect();
            self.mask = 0;
            self.has_base = true;
        }
        let mut parts: Vec<OverPart> = self
            .base
            .iter()
            .map(|&value| OverPart {
                value,
                overlined: false,
            })
            .collect();
        for (bit, &i) in self.run_starts.iter().enumerate() {
            parts[i].overlined = self.mask >> bit & 1 == 1;
        }
        self.mask += 1;
        Some(Overpartition { parts })
    }
}

/// Overpartitions of `n` passing `f`. Filters see part values only, so an
/// overlined part and a plain part of the same value count together.
pub fn gen_overpartitions(n: i64, f: PartitionFilter) -> Overpartitions {
    Overpartitions {
        inner: gen_partitions(n, f),
        base: Vec::new(),
        run_starts: Vec::new(),
        mask: 0,
        has_base: false,
    }
}

/// Each partition with `d` distinct values carries `2^d` overline patterns.
fn count_over_filtered(n: i64, f: PartitionFilter) -> Coefficient {
    let mut total = BigInt::zero();
    let mut batch = 0u64;
    for_each_partition(n, f, |parts| {
        let distinct = 1 + parts.windows(2).filter(|w| w[0] != w[1]).count() as u32;
        let distinct = if parts.is_empty() { 0 } else { distinct };
        batch += 1u64 << distinct;
        if batch > u64::MAX >> 2 {
            total += batch;
            batch = 0;
        }
    });
    total + batch
}

static P_MEMO: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

fn pentagonal_step(table: &[BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    let mut acc = BigInt::zero();
    let mut k = 1usize;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > n {
            break;
        }
        let g2 = k * (3 * k + 1) / 2;
        let mut term = table[n - g1].clone();
        if g2 <= n {
            term += &table[n - g2];
        }
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
        k += 1;
    }
    acc
}

/// `p(n)` by the pentagonal-number recurrence; `p(n) = 0` for `n < 0`.
pub fn count_p(n: i64) -> Coefficient {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    if let Some(v) = P_MEMO.read().expect("p(n) memo poisoned").get(n) {
        return v.clone();
    }
    let mut table = P_MEMO.write().expect("p(n) memo poisoned");
    while table.len() <= n {
        let next = pentagonal_step(&table, table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Current contents of the `p(n)` memo table, indexed by `n`.
pub fn p_memo_snapshot() -> Vec<BigInt> {
    P_MEMO.read().expect("p(n) memo poisoned").clone()
}

/// Seeds the memo table with `p(0), p(1), ...`. Every entry is checked
/// against the recurrence; on the first mismatch nothing is stored and the
/// offending index is returned.
pub fn preload_p(values: &[BigInt]) -> Result<(), usize> {
    for (n, v) in values.iter().enumerate() {
        if pentagonal_step(&values[..n], n) != *v {
            return Err(n);
        }
    }
    let mut table = P_MEMO.write().expect("p(n) memo poisoned");
    if values.len() > table.len() {
        *table = values.to_vec();
    }
    Ok(())
}

/// `profile[m]` is the number of partitions of `n` whose smallest part occurs
/// at least `m` times, for `0 <= m <= n` (so `profile[m] = a_m(n)` for `m >= 1`).
pub fn smallest_multiplicity_profile(n: i64) -> Vec<u64> {
    let n = n.max(0) as usize;
    let mut hist = vec![0u64; n + 1];
    for_each_partition(n as i64, PartitionFilter::none(), |p| {
        hist[smallest_multiplicity(p)] += 1;
    });
    let mut acc = 0;
    for m in (0..=n).rev() {
        acc += hist[m];
        hist[m] = acc;
    }
    hist
}

/// `p(n,t)`: partitions of `n` with largest minus smallest part equal to `t`.
pub fn count_p_fixed_diff(n: i64, t: u32) -> Coefficient {
    count_filtered(n, PartitionFilter::none().diff(t)).into()
}

/// `a_m(n)`: partitions of `n` whose smallest part occurs at least `m` times.
pub fn count_a(m: u32, n: i64) -> Coefficient {
    count_filtered(n, PartitionFilter::none().smallest_mult(m)).into()
}

/// `a_m(n, d)`: as [`count_a`] with largest minus smallest part equal to `d`.
pub fn count_a_diff(m: u32, n: i64, d: u32) -> Coefficient {
    count_filtered(n, PartitionFilter::none().smallest_mult(m).diff(d)).into()
}

/// How the smallest-part condition in `Q_{l,k}(n)` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QConvention {
    /// Smallest part at least `k`; the empty partition counts once.
    #[default]
    AtLeast,
    /// Smallest part exactly `k`; the empty partition does not count.
    Exactly,
}

/// `Q_{l,k}(n)`: partitions of `n - l(k-1)` with the given smallest-part rule.
pub fn count_q(l: u32, k: u32, n: i64, convention: QConvention) -> Coefficient {
    let target = n - l as i64 * (k as i64 - 1);
    if target < 0 {
        return BigInt::zero();
    }
    match convention {
        QConvention::AtLeast => count_p_star(k, target),
        QConvention::Exactly => {
            let mut c = 0u64;
            for_each_partition(target, PartitionFilter::none().min_part(k), |p| {
                if p.last() == Some(&k) {
                    c += 1;
                }
            });
            c.into()
        }
    }
}

/// `p*_m(n)`: partitions of `n` with every part at least `m`; `p*_m(0) = 1`.
pub fn count_p_star(m: u32, n: i64) -> Coefficient {
    count_filtered(n, PartitionFilter::none().min_part(m)).into()
}

/// `p̄(n)`
pub fn count_pbar(n: i64) -> Coefficient {
    count_over_filtered(n, PartitionFilter::none())
}

/// `p̄(n,t)`
pub fn count_pbar_diff(n: i64, t: u32) -> Coefficient {
    count_over_filtered(n, PartitionFilter::none().diff(t))
}

/// `ā_m(n)`
pub fn count_abar(m: u32, n: i64) -> Coefficient {
    count_over_filtered(n, PartitionFilter::none().smallest_mult(m))
}

/// `ā_m(n,d)`
pub fn count_abar_diff(m: u32, n: i64, d: u32) -> Coefficient {
    count_over_filtered(n, PartitionFilter::none().smallest_mult(m).diff(d))
}

/// Membership test for the set counted by `ū(n)`:
///
/// 1. no plain (non-overlined) part equal to 1;
/// 2. the smallest part is overlined and is the only part of its value;
/// 3. at least two parts, and the two largest are equal, or consecutive with
///    the second largest overlined.
pub fn is_ubar(op: &Overpartition) -> bool {
    let parts = op.parts();
    if parts.len() < 2 || parts.iter().any(|p| p.value == 1 && !p.overlined) {
        return false;
    }
    let last = parts[parts.len() - 1];
    if !last.overlined || parts[parts.len() - 2].value == last.value {
        return false;
    }
    let (first, second) = (parts[0], parts[1]);
    first.value == second.value || (first.value == second.value + 1 && second.overlined)
}

/// `ū(n)`, by filtering the overpartition stream through [`is_ubar`].
pub fn count_ubar(n: i64) -> Coefficient {
    gen_overpartitions(n, PartitionFilter::none())
        .filter(is_ubar)
        .count()
        .into()
}

/// `b_l(n)`: partitions of `n` with no part divisible by `l`.
pub fn count_breg(l: u32, n: i64) -> Coefficient {
    count_filtered(n, PartitionFilter::none().regular(l)).into()
}

/// `b_l(n,t)`
pub fn count_breg_diff(l: u32, n: i64, t: u32) -> Coefficient {
    count_filtered(n, PartitionFilter::none().regular(l).diff(t)).into()
}

/// `a_{m(l)}(n)`
pub fn count_areg(m: u32, l: u32, n: i64) -> Coefficient {
    count_filtered(n, PartitionFilter::none().regular(l).smallest_mult(m)).into()
}

/// `a_{m(l)}(n,k)`
pub fn count_areg_diff(m: u32, l: u32, n: i64, k: u32) -> Coefficient {
    count_filtered(n, PartitionFilter::none().regular(l).smallest_mult(m).diff(k)).into()
}
