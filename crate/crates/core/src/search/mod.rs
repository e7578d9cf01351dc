//! Exhaustive search for nontrivial binary equicorrelationality classes.
//!
//! Two binary sequences of the same length are equicorrelational exactly
//! when their autocorrelations `C(1..n-1)` agree. The search buckets one
//! representative per trivial class by that key; every bucket with two or
//! more representatives is a nontrivial class whose volume is the bucket
//! size.
//!
//! Work is split into shards by the outer `k` terms on each end of the
//! sequence. Those terms alone fix `C(n-1), ..., C(n-k)`, so shards that
//! differ in these values can never share a class; each shard is bucketed
//! independently and the results are concatenated.

pub mod binary;
pub mod checkpoint;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use binary::{autocorr_bits, is_canonical_bits, low_mask};
pub use binary::{canonical_count, enumerate_canonical, BinarySeq};
use checkpoint::{RunHeader, ShardRecord};

pub const DEFAULT_CEILING: usize = 30;

/// Longest length whose key packs exactly into a `u128`.
const RADIX_KEY_MAX_LEN: usize = 33;

const MAX_PREFIX_BITS: usize = 6;

/// `C(1), ..., C(n-1)` of a binary sequence of length `n`; `C(0) = n` and
/// negative shifts are implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AutocorrKey {
    pub values: Vec<i32>,
}

impl AutocorrKey {
    pub fn of(f: &BinarySeq) -> Self {
        Self { values: f.autocorrelations() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NontrivialClass {
    pub key: AutocorrKey,
    /// Canonical representatives, one per trivial class, sorted.
    pub members: Vec<BinarySeq>,
}

impl NontrivialClass {
    fn from_members(mut members: Vec<BinarySeq>) -> Self {
        members.sort();
        Self {
            key: AutocorrKey::of(&members[0]),
            members,
        }
    }

    pub fn volume(&self) -> usize {
        self.members.len()
    }
}

/// Frequencies of volumes of the nontrivial classes of one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeDistribution {
    pub length: usize,
    /// `(volume, count)`, ascending volume.
    pub entries: Vec<(usize, usize)>,
    pub equivocal: bool,
}

impl VolumeDistribution {
    pub fn from_classes(length: usize, classes: &[NontrivialClass]) -> Self {
        let mut by_volume: BTreeMap<usize, usize> = BTreeMap::new();
        for c in classes {
            *by_volume.entry(c.volume()).or_default() += 1;
        }
        let entries: Vec<(usize, usize)> = by_volume.into_iter().collect();
        Self {
            length,
            equivocal: !entries.is_empty(),
            entries,
        }
    }

    /// `n1 [v1] + n2 [v2] + ...`; empty for an unequivocal length.
    pub fn notation(&self) -> String {
        self.entries
            .iter()
            .map(|(v, n)| format!("{n} [{v}]"))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the `n [v] + ...` notation; whitespace around `[` is optional.
    pub fn parse_notation(length: usize, text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            literal: text.to_string(),
            reason: reason.to_string(),
        };
        let mut by_volume: BTreeMap<usize, usize> = BTreeMap::new();
        let trimmed = text.trim();
        if !trimmed.is_empty() && trimmed != "(none)" {
            for term in trimmed.split('+') {
                let (count, rest) = term.split_once('[').ok_or_else(|| bad("missing `[`"))?;
                let volume = rest.trim().strip_suffix(']').ok_or_else(|| bad("missing `]`"))?;
                let count: usize = count.trim().parse().map_err(|_| bad("bad count"))?;
                let volume: usize = volume.trim().parse().map_err(|_| bad("bad volume"))?;
                *by_volume.entry(volume).or_default() += count;
            }
        }
        let entries: Vec<(usize, usize)> = by_volume.into_iter().collect();
        Ok(Self {
            length,
            equivocal: !entries.is_empty(),
            entries,
        })
    }
}

impl fmt::Display for VolumeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            f.write_str("(none)")
        } else {
            f.write_str(&self.notation())
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    pub ceiling: usize,
    /// Allow lengths above `ceiling`.
    pub force: bool,
    pub checkpoint_dir: Option<PathBuf>,
    /// Stop after this many newly computed shards, leaving the run
    /// incomplete (used to exercise resumption).
    pub max_new_shards: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            threads: None,
            ceiling: DEFAULT_CEILING,
            force: false,
            checkpoint_dir: None,
            max_new_shards: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub n: usize,
    pub prefix_bits: usize,
    pub shards: usize,
    pub shards_done: usize,
    /// Canonical representatives examined across completed shards.
    pub canonical: u64,
    /// Sorted by first member.
    pub classes: Vec<NontrivialClass>,
}

impl SearchOutcome {
    pub fn is_complete(&self) -> bool {
        self.shards_done == self.shards
    }

    pub fn distribution(&self) -> VolumeDistribution {
        VolumeDistribution::from_classes(self.n, &self.classes)
    }
}

/// Outer-term configurations sharing one value of `C(n-k..n-1)`.
struct Shard {
    outer: Vec<u64>,
}

struct ShardPlan {
    n: usize,
    k: usize,
    shards: Vec<Shard>,
}

impl ShardPlan {
    fn new(n: usize) -> Self {
        let k = (n / 2).min(MAX_PREFIX_BITS);
        let mut groups: BTreeMap<Vec<i32>, Vec<u64>> = BTreeMap::new();
        for prefix in (0..1u64 << k).filter(|p| p & 1 == 0) {
            for suffix in 0..1u64 << k {
                let outer = prefix | (suffix << (n - k));
                let tail: Vec<i32> = (1..=k).map(|s| autocorr_bits(outer, n, n - s)).collect();
                groups.entry(tail).or_default().push(outer);
            }
        }
        Self {
            n,
            k,
            shards: groups.into_values().map(|outer| Shard { outer }).collect(),
        }
    }

    fn header(&self) -> RunHeader {
        RunHeader {
            n: self.n,
            prefix_bits: self.k,
            shards: self.shards.len(),
        }
    }
}

/// Exact encodings of the autocorrelation key of a packed sequence.
trait KeyCodec: Sync {
    type Code: Ord + Send;
    fn encode(&self, bits: u64) -> Self::Code;
}

/// Mixed-radix code: `(C(s) + n - s) / 2` lies in `[0, n - s]`, and the
/// product of the radices is `n!`, which fits in 128 bits for `n <= 33`.
struct RadixCodec {
    n: usize,
}

impl KeyCodec for RadixCodec {
    type Code = u128;

    #[inline]
    fn encode(&self, bits: u64) -> u128 {
        let n = self.n;
        let mut code = 0u128;
        for s in 1..n {
            let overlap = n - s;
            let disagree = ((bits ^ (bits >> s)) & low_mask(overlap)).count_ones() as u128;
            // (C(s) + overlap) / 2 = overlap - disagree
            code = code * (overlap as u128 + 1) + (overlap as u128 - disagree);
        }
        code
    }
}

struct WideCodec {
    n: usize,
}

impl KeyCodec for WideCodec {
    type Code = Box<[i8]>;

    fn encode(&self, bits: u64) -> Box<[i8]> {
        (1..self.n)
            .map(|s| autocorr_bits(bits, self.n, s) as i8)
            .collect()
    }
}

fn run_shard<C: KeyCodec>(codec: &C, plan: &ShardPlan, id: usize) -> ShardRecord {
    let (n, k) = (plan.n, plan.k);
    let middle = n - 2 * k;
    let mut entries: Vec<(C::Code, u64)> = Vec::new();
    let mut canonical = 0u64;
    for &outer in &plan.shards[id].outer {
        for mid in 0..1u64 << middle {
            let bits = outer | (mid << k);
            if bits & 1 != 0 || !is_canonical_bits(bits, n) {
                continue;
            }
            canonical += 1;
            entries.push((codec.encode(bits), bits));
        }
    }
    entries.sort_unstable();
    let mut classes = Vec::new();
    let mut start = 0;
    while start < entries.len() {
        let mut end = start + 1;
        while end < entries.len() && entries[end].0 == entries[start].0 {
            end += 1;
        }
        if end - start >= 2 {
            let mut members: Vec<BinarySeq> = entries[start..end]
                .iter()
                .map(|(_, bits)| BinarySeq::from_raw(*bits, n))
                .collect();
            members.sort();
            classes.push(members);
        }
        start = end;
    }
    ShardRecord { shard: id, canonical, classes }
}

fn check_length(n: usize, opts: &SearchOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    if n > 64 {
        return Err(Error::TooLong(n));
    }
    if n > opts.ceiling && !opts.force {
        return Err(Error::AboveCeiling { n, ceiling: opts.ceiling });
    }
    Ok(())
}

fn compute_shards(plan: &ShardPlan, ids: &[usize], on_done: &(dyn Fn(&ShardRecord) -> Result<()> + Sync)) -> Result<Vec<ShardRecord>> {
    fn go<C: KeyCodec>(
        codec: &C,
        plan: &ShardPlan,
        ids: &[usize],
        on_done: &(dyn Fn(&ShardRecord) -> Result<()> + Sync),
    ) -> Result<Vec<ShardRecord>> {
        ids.par_iter()
            .map(|&id| {
                let rec = run_shard(codec, plan, id);
                on_done(&rec)?;
                Ok(rec)
            })
            .collect()
    }
    if plan.n <= RADIX_KEY_MAX_LEN {
        go(&RadixCodec { n: plan.n }, plan, ids, on_done)
    } else {
        go(&WideCodec { n: plan.n }, plan, ids, on_done)
    }
}

/// Runs (or resumes, when a checkpoint directory is given) the search for
/// length `n`.
pub fn search(n: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_length(n, opts)?;
    let plan = ShardPlan::new(n);
    let header = plan.header();

    let mut done: BTreeMap<usize, ShardRecord> = BTreeMap::new();
    if let Some(dir) = &opts.checkpoint_dir {
        checkpoint::prepare_dir(dir, &header)?;
        done = checkpoint::load_completed(dir, &header)?;
    }
    let mut todo: Vec<usize> = (0..plan.shards.len()).filter(|id| !done.contains_key(id)).collect();
    if let Some(limit) = opts.max_new_shards {
        todo.truncate(limit);
    }

    let dir = opts.checkpoint_dir.clone();
    let persist = move |rec: &ShardRecord| -> Result<()> {
        match &dir {
            Some(d) => checkpoint::write_shard(d, &header, rec),
            None => Ok(()),
        }
    };
    let fresh = match opts.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            pool.install(|| compute_shards(&plan, &todo, &persist))?
        }
        None => compute_shards(&plan, &todo, &persist)?,
    };
    for rec in fresh {
        done.insert(rec.shard, rec);
    }

    let shards_done = done.len();
    let canonical = done.values().map(|r| r.canonical).sum();
    let mut classes: Vec<NontrivialClass> = done
        .into_values()
        .flat_map(|r| r.classes)
        .map(NontrivialClass::from_members)
        .collect();
    classes.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    Ok(SearchOutcome {
        n,
        prefix_bits: plan.k,
        shards: plan.shards.len(),
        shards_done,
        canonical,
        classes,
    })
}

/// Every nontrivial class of length `n`, members in canonical form.
pub fn find_nontrivial_classes(n: usize) -> Result<Vec<NontrivialClass>> {
    find_nontrivial_classes_with(n, &SearchOptions::default())
}

pub fn find_nontrivial_classes_with(n: usize, opts: &SearchOptions) -> Result<Vec<NontrivialClass>> {
    let out = search(n, opts)?;
    if !out.is_complete() {
        return Err(Error::Precondition("search stopped before all shards completed".into()));
    }
    Ok(out.classes)
}

pub fn volume_distribution(n: usize) -> Result<VolumeDistribution> {
    volume_distribution_with(n, &SearchOptions::default())
}

pub fn volume_distribution_with(n: usize, opts: &SearchOptions) -> Result<VolumeDistribution> {
    Ok(VolumeDistribution::from_classes(n, &find_nontrivial_classes_with(n, opts)?))
}

pub fn is_unequivocal(n: usize) -> Result<bool> {
    is_unequivocal_with(n, &SearchOptions::default())
}

pub fn is_unequivocal_with(n: usize, opts: &SearchOptions) -> Result<bool> {
    Ok(!volume_distribution_with(n, opts)?.equivocal)
}

/// Brute-force bucketing of every canonical sequence by its full key, kept
/// independent of the sharded path for cross-checks.
pub fn brute_force_classes(n: usize) -> Result<Vec<NontrivialClass>> {
    let mut buckets: BTreeMap<AutocorrKey, Vec<BinarySeq>> = BTreeMap::new();
    for f in enumerate_canonical(n)? {
        buckets.entry(AutocorrKey::of(&f)).or_default().push(f);
    }
    let mut classes: Vec<NontrivialClass> = buckets
        .into_values()
        .filter(|m| m.len() >= 2)
        .map(NontrivialClass::from_members)
        .collect();
    classes.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    Ok(classes)
}

/// Whether a class contains a palindrome or antipalindrome.
pub fn contains_generalized_palindrome(class: &NontrivialClass) -> bool {
    class
        .members
        .iter()
        .any(|m| m.is_palindrome() || m.is_antipalindrome())
}

/// Checks that equivocal lengths propagate to their multiples over a set of
/// computed lengths; returns the offending `(m, n)` pairs.
pub fn divisor_monotonicity_violations(equivocal: &BTreeMap<usize, bool>) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (&m, &eq_m) in equivocal {
        if !eq_m {
            continue;
        }
        for (&n, &eq_n) in equivocal {
            if n > m && n % m == 0 && !eq_n {
                bad.push((m, n));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn sharded_matches_brute_force() {
        for n in 1..=14 {
            let fast = find_nontrivial_classes(n).unwrap();
            let slow = brute_force_classes(n).unwrap();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn canonical_total_matches_closed_form() {
        for n in [1, 2, 5, 12, 17] {
            let out = search(n, &SearchOptions::default()).unwrap();
            assert_eq!(out.canonical, canonical_count(n));
            assert!(out.is_complete());
        }
    }

    #[test]
    fn shards_separate_by_tail() {
        let plan = ShardPlan::new(16);
        let mut seen = HashSet::new();
        for s in &plan.shards {
            for &o in &s.outer {
                assert!(seen.insert(o));
            }
        }
        assert_eq!(seen.len(), 1 << (2 * plan.k - 1));
    }

    #[test]
    fn notation_round_trip() {
        let d = VolumeDistribution::parse_notation(27, "348 [2] + 1 [4]").unwrap();
        assert_eq!(d.entries, vec![(2, 348), (4, 1)]);
        assert_eq!(d.notation(), "348 [2] + 1 [4]");
        let tight = VolumeDistribution::parse_notation(41, "4[2]").unwrap();
        assert_eq!(tight.notation(), "4 [2]");
        let none = VolumeDistribution::parse_notation(8, "").unwrap();
        assert!(!none.equivocal);
        assert_eq!(none.to_string(), "(none)");
        assert!(VolumeDistribution::parse_notation(3, "2 [x]").is_err());
    }

    #[test]
    fn ceiling_guard() {
        let opts = SearchOptions { ceiling: 10, ..Default::default() };
        assert!(matches!(search(11, &opts), Err(Error::AboveCeiling { .. })));
        assert!(matches!(search(0, &opts), Err(Error::EmptyLength)));
    }

    #[test]
    fn known_small_lengths() {
        assert!(is_unequivocal(8).unwrap());
        let d9 = volume_distribution(9).unwrap();
        assert_eq!(d9.notation(), "1 [2]");
        assert_eq!(volume_distribution(12).unwrap().notation(), "8 [2]");
    }
}
