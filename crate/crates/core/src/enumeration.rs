//! Exhaustive enumeration of sock patterns and the brute-force counts built on it.
//!
//! Patterns of length `n` are restricted-growth strings. Counting splits the
//! space by RGS prefix of length `min(n, 6)` and sums subtree histograms, so
//! results do not depend on how rayon schedules the work.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sock::{Sock, SockMultiset, SockPattern, SockSequence};
use crate::sorter::{AbaSorter, StackSorter};

const SPLIT_PREFIX_LEN: usize = 6;

/// Default refusal threshold for [`find_periodic`].
pub const DEFAULT_ARRANGEMENT_CAP: u64 = 1_000_000;

/// Restricted-growth strings of a fixed length in lexicographic order,
/// optionally restricted to those extending a fixed prefix.
#[derive(Clone, Debug)]
pub struct PatternStream {
    fixed: usize,
    current: Option<Vec<Sock>>,
    // prefix_max[i] = max of current[..i], or -1 when i = 0
    prefix_max: Vec<i64>,
}

impl PatternStream {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(&[], n).expect("empty prefix is valid")
    }

    /// All RGS of length `n` that start with `prefix`.
    pub fn with_prefix(prefix: &[Sock], n: usize) -> Result<Self> {
        if prefix.len() > n || !crate::sock::is_restricted_growth(prefix) {
            return Err(Error::InvalidArgument(
                "prefix must be a restricted-growth string no longer than n".into(),
            ));
        }
        let mut current = prefix.to_vec();
        current.resize(n, Sock(0));
        let mut prefix_max = vec![-1i64; n + 1];
        for i in 0..n {
            prefix_max[i + 1] = prefix_max[i].max(current[i].0 as i64);
        }
        Ok(Self {
            fixed: prefix.len(),
            current: Some(current),
            prefix_max,
        })
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let n = cur.len();
        let lo = self.fixed.max(1);
        for i in (lo..n).rev() {
            if (cur[i].0 as i64) <= self.prefix_max[i] {
                cur[i].0 += 1;
                self.prefix_max[i + 1] = self.prefix_max[i].max(cur[i].0 as i64);
                cur[i + 1..].fill(Sock(0));
                let m = self.prefix_max[i + 1];
                self.prefix_max[i + 2..].fill(m);
                return;
            }
        }
        self.current = None;
    }

    /// Visits each remaining pattern without allocating.
    pub fn for_each_slice<F: FnMut(&[Sock])>(mut self, mut f: F) {
        while let Some(cur) = self.current.as_deref() {
            f(cur);
            self.advance();
        }
    }
}

impl Iterator for PatternStream {
    type Item = SockPattern;

    fn next(&mut self) -> Option<SockPattern> {
        let out = self.current.clone()?;
        self.advance();
        Some(SockPattern::from_rgs_unchecked(out))
    }
}

pub fn patterns_of_length(n: usize) -> PatternStream {
    PatternStream::new(n)
}

/// Bell numbers `B_0..=B_max`.
pub fn bell_numbers(max: usize) -> Vec<BigUint> {
    let mut bells = vec![BigUint::from(1u32)];
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty row").clone());
        for v in &row {
            let sum = next.last().expect("nonempty") + v;
            next.push(sum);
        }
        bells.push(next[0].clone());
        row = next;
    }
    bells.truncate(max + 1);
    bells
}

fn histogram<F>(n: usize, key: F) -> BTreeMap<usize, u64>
where
    F: Fn(&mut AbaSorter, &[Sock]) -> Option<usize> + Sync,
{
    let prefixes: Vec<SockPattern> = patterns_of_length(n.min(SPLIT_PREFIX_LEN)).collect();
    prefixes
        .par_iter()
        .map_init(AbaSorter::new, |sorter, prefix| {
            let mut local = BTreeMap::new();
            PatternStream::with_prefix(prefix.socks(), n)
                .expect("prefix is an RGS")
                .for_each_slice(|p| {
                    if let Some(k) = key(sorter, p) {
                        *local.entry(k).or_insert(0u64) += 1;
                    }
                });
            local
        })
        .reduce(BTreeMap::new, merge_histograms)
}

fn merge_histograms(mut a: BTreeMap<usize, u64>, b: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn rgs_distinct(p: &[Sock]) -> usize {
    p.iter().map(|s| s.0 as usize + 1).max().unwrap_or(0)
}

/// Patterns of length `n` sorted by at most `k` foot-sorting passes, by
/// number of distinct socks.
pub fn count_sortable_refined(n: usize, k: usize) -> BTreeMap<usize, u64> {
    histogram(n, |sorter, p| sorter.depth(p, k).map(|_| rgs_distinct(p)))
}

/// Patterns of length `n` sorted by at most `k` foot-sorting passes.
/// `count_sortable(n, 1)` is `s(n)`.
pub fn count_sortable(n: usize, k: usize) -> u64 {
    count_sortable_refined(n, k).values().sum()
}

/// Counts `s(n, r)` for a range of lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub k: usize,
    pub entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    r: usize,
    count: u64,
}

impl CountTable {
    pub fn build(max_len: usize, k: usize) -> Self {
        let mut entries = BTreeMap::new();
        for n in 1..=max_len {
            for (r, c) in count_sortable_refined(n, k) {
                entries.insert((n, r), c);
            }
        }
        Self { k, entries }
    }

    pub fn entry(&self, n: usize, r: usize) -> u64 {
        self.entries.get(&(n, r)).copied().unwrap_or(0)
    }

    pub fn marginals(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(n, _), &c) in &self.entries {
            *out.entry(n).or_insert(0) += c;
        }
        out
    }

    pub fn marginal(&self, n: usize) -> u64 {
        self.entries
            .range((n, 0)..=(n, usize::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,count\n");
        for (&(n, r), &c) in &self.entries {
            writeln!(out, "{n},{r},{c}").expect("write to String");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<CountRow> = self
            .entries
            .iter()
            .map(|(&(n, r), &count)| CountRow { n, r, count })
            .collect();
        let marginals: BTreeMap<String, u64> = self
            .marginals()
            .into_iter()
            .map(|(n, c)| (n.to_string(), c))
            .collect();
        serde_json::json!({ "k": self.k, "rows": rows, "marginals": marginals })
    }
}

/// Histogram of foot-sorting depth over all patterns of one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthProfile {
    pub n: usize,
    pub histogram: BTreeMap<usize, u64>,
}

impl DepthProfile {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }

    pub fn max_depth(&self) -> Option<usize> {
        self.histogram.keys().next_back().copied()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,depth,count\n");
        for (d, c) in &self.histogram {
            writeln!(out, "{},{d},{c}", self.n).expect("write to String");
        }
        out
    }
}

pub fn depth_profile(n: usize) -> DepthProfile {
    let histogram = histogram(n, |sorter, p| {
        Some(
            sorter
                .depth(p, rgs_distinct(p))
                .expect("every pattern sorts within its distinct-sock count"),
        )
    });
    DepthProfile { n, histogram }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    pub period: usize,
    /// Lexicographically least member.
    pub representative: SockSequence,
    pub members: Vec<SockSequence>,
    pub sorted: bool,
}

/// Periodic points of φ_σ on one multiset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub sigma: SockPattern,
    pub multiset: SockMultiset,
    pub states: usize,
    pub cycles: Vec<CycleInfo>,
    /// Longest number of passes before an orbit entered its cycle.
    pub max_transient_observed: usize,
    /// Starts whose orbit did not close within `max_transient + max_period` passes.
    pub unresolved_starts: usize,
}

impl CycleReport {
    pub fn is_complete(&self) -> bool {
        self.unresolved_starts == 0
    }

    pub fn unsorted_cycles(&self) -> impl Iterator<Item = &CycleInfo> {
        self.cycles.iter().filter(|c| !c.sorted)
    }

    pub fn cycle_containing(&self, p: &SockSequence) -> Option<&CycleInfo> {
        self.cycles.iter().find(|c| c.members.contains(p))
    }
}

pub fn find_periodic(
    sigma: &SockPattern,
    multiset: &SockMultiset,
    max_period: usize,
    max_transient: usize,
) -> Result<CycleReport> {
    find_periodic_capped(
        sigma,
        multiset,
        max_period,
        max_transient,
        DEFAULT_ARRANGEMENT_CAP,
    )
}

#[derive(Clone, Copy)]
enum Fate {
    Unknown,
    OnCycle,
    Transient(usize),
}

/// Iterates φ_σ from every arrangement of `multiset` and records each cycle
/// with its minimal period. Sorted arrangements are terminal, as in
/// [`iterate`](crate::sorter::iterate), so each is its own period-1 cycle.
pub fn find_periodic_capped(
    sigma: &SockPattern,
    multiset: &SockMultiset,
    max_period: usize,
    max_transient: usize,
    cap: u64,
) -> Result<CycleReport> {
    let machine = StackSorter::new(sigma.clone())?;
    let size = multiset.arrangement_count();
    if size.to_u64().is_none_or(|s| s > cap) {
        return Err(Error::TooLarge {
            size: size.to_string(),
            cap,
        });
    }
    let states: Vec<SockSequence> = multiset.arrangements().collect();
    let index: HashMap<&SockSequence, usize> =
        states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let image: Vec<usize> = states
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            if s.is_sorted() {
                i
            } else {
                index[&machine.apply(s)]
            }
        })
        .collect();

    let budget = max_transient.saturating_add(max_period);
    let mut fate = vec![Fate::Unknown; states.len()];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max_transient_observed = 0;
    let mut unresolved = 0;
    for start in 0..states.len() {
        if !matches!(fate[start], Fate::Unknown) {
            continue;
        }
        let mut path = vec![start];
        let mut position: HashMap<usize, usize> = HashMap::from([(start, 0)]);
        let resolved = loop {
            if path.len() > budget {
                break false;
            }
            let next = image[*path.last().expect("nonempty path")];
            match fate[next] {
                Fate::OnCycle => {
                    for (i, &s) in path.iter().enumerate() {
                        fate[s] = Fate::Transient(path.len() - i);
                    }
                    break true;
                }
                Fate::Transient(t) => {
                    for (i, &s) in path.iter().enumerate() {
                        fate[s] = Fate::Transient(t + path.len() - i);
                    }
                    break true;
                }
                Fate::Unknown => {}
            }
            if let Some(&at) = position.get(&next) {
                let members = path[at..].to_vec();
                for &s in &members {
                    fate[s] = Fate::OnCycle;
                }
                for (i, &s) in path[..at].iter().enumerate() {
                    fate[s] = Fate::Transient(at - i);
                }
                cycles.push(members);
                break true;
            }
            position.insert(next, path.len());
            path.push(next);
        };
        if !resolved {
            unresolved += 1;
        }
    }
    for f in &fate {
        if let Fate::Transient(t) = f {
            max_transient_observed = max_transient_observed.max(*t);
        }
    }

    let mut cycles: Vec<CycleInfo> = cycles
        .into_iter()
        .map(|ids| {
            let members: Vec<SockSequence> = ids.iter().map(|&i| states[i].clone()).collect();
            let representative = members.iter().min().expect("nonempty cycle").clone();
            CycleInfo {
                period: members.len(),
                sorted: members.iter().all(SockSequence::is_sorted),
                representative,
                members,
            }
        })
        .collect();
    cycles.sort_by(|a, b| a.representative.cmp(&b.representative));

    Ok(CycleReport {
        sigma: sigma.clone(),
        multiset: multiset.clone(),
        states: states.len(),
        cycles,
        max_transient_observed,
        unresolved_starts: unresolved,
    })
}
