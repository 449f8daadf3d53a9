//! Socks, sock sequences, sock patterns and set partitions.
//!
//! A [`Sock`] is a non-negative integer identity. Letters `a`, `b`, `c`, ...
//! are only a rendering convention for ids `0`, `1`, `2`, ...; sequences that
//! use ids beyond `z` render in token form (`s0,s27,s0`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A single sock.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sock(pub u32);

impl Sock {
    pub fn id(self) -> u32 {
        self.0
    }

    /// The letter rendering, if the id is in `0..26`.
    pub fn letter(self) -> Option<char> {
        (self.0 < 26).then(|| (b'a' + self.0 as u8) as char)
    }
}

impl fmt::Display for Sock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "s{}", self.0),
        }
    }
}

/// A finite sequence of socks.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SockSequence(Vec<Sock>);

impl SockSequence {
    pub fn new(socks: Vec<Sock>) -> Self {
        Self(socks)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Self(ids.into_iter().map(Sock).collect())
    }

    pub fn socks(&self) -> &[Sock] {
        &self.0
    }

    pub fn into_socks(self) -> Vec<Sock> {
        self.0
    }

    pub fn ids(&self) -> Vec<u32> {
        self.0.iter().map(|s| s.0).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Sock> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sock> {
        self.0.iter()
    }

    /// Renames socks so that first occurrences read `a, b, c, ...`.
    pub fn standardize(&self) -> SockPattern {
        SockPattern(SockSequence(standardize_slice(&self.0)))
    }

    pub fn is_standardized(&self) -> bool {
        is_restricted_growth(&self.0)
    }

    /// True when every sock's occurrences form one contiguous run.
    pub fn is_sorted(&self) -> bool {
        is_sorted_slice(&self.0)
    }

    pub fn reverse(&self) -> SockSequence {
        SockSequence(self.0.iter().rev().copied().collect())
    }

    pub fn distinct_socks(&self) -> BTreeSet<Sock> {
        self.0.iter().copied().collect()
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct_socks().len()
    }

    /// 1-based positions at which `sock` occurs.
    pub fn occurrence_indices(&self, sock: Sock) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == sock)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn to_set_partition(&self) -> SetPartition {
        let mut blocks: BTreeMap<Sock, Vec<usize>> = BTreeMap::new();
        for (i, &s) in self.0.iter().enumerate() {
            blocks.entry(s).or_default().push(i + 1);
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        SetPartition {
            n: self.len(),
            blocks,
        }
    }

    /// Non-consecutive containment of `sigma`.
    pub fn contains(&self, sigma: &SockPattern) -> bool {
        contains(&self.0, sigma.socks())
    }

    pub fn avoids(&self, sigma: &SockPattern) -> bool {
        !self.contains(sigma)
    }

    pub fn concat(&self, other: &SockSequence) -> SockSequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SockSequence(v)
    }
}

impl From<Vec<Sock>> for SockSequence {
    fn from(v: Vec<Sock>) -> Self {
        Self(v)
    }
}

impl FromIterator<Sock> for SockSequence {
    fn from_iter<I: IntoIterator<Item = Sock>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SockSequence {
    type Item = &'a Sock;
    type IntoIter = std::slice::Iter<'a, Sock>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for SockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|s| s.0 < 26) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            for (i, s) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "s{}", s.0)?;
            }
            Ok(())
        }
    }
}

impl FromStr for SockSequence {
    type Err = Error;

    /// Accepts a word over `[a-z]` or comma-separated `s<digits>` tokens.
    fn from_str(text: &str) -> Result<Self> {
        if text.starts_with('s') && text.len() > 1 && text.as_bytes()[1].is_ascii_digit() {
            return parse_tokens(text);
        }
        text.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'a'..='z' => Ok(Sock(c as u32 - 'a' as u32)),
                _ => Err(Error::Parse {
                    position: i + 1,
                    message: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SockSequence)
    }
}

fn parse_tokens(text: &str) -> Result<SockSequence> {
    let mut socks = Vec::new();
    let mut offset = 1;
    for token in text.split(',') {
        let bad = |message: String| Error::Parse {
            position: offset,
            message,
        };
        let digits = token
            .strip_prefix('s')
            .ok_or_else(|| bad(format!("token {token:?} must start with 's'")))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(format!("malformed token {token:?}")));
        }
        let id = digits
            .parse::<u32>()
            .map_err(|e| bad(format!("token {token:?}: {e}")))?;
        socks.push(Sock(id));
        offset += token.len() + 1;
    }
    Ok(SockSequence(socks))
}

/// A standardized sock sequence (restricted-growth form).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SockPattern(SockSequence);

impl SockPattern {
    /// Wraps `seq`, which must already be standardized.
    pub fn new(seq: SockSequence) -> Result<Self> {
        if seq.is_standardized() {
            Ok(Self(seq))
        } else {
            Err(Error::InvalidArgument(format!(
                "{seq} is not in restricted-growth form"
            )))
        }
    }

    pub(crate) fn from_rgs_unchecked(ids: Vec<Sock>) -> Self {
        debug_assert!(is_restricted_growth(&ids));
        Self(SockSequence(ids))
    }

    pub fn as_sequence(&self) -> &SockSequence {
        &self.0
    }

    pub fn into_sequence(self) -> SockSequence {
        self.0
    }

    /// Standardized reversal.
    pub fn reversed(&self) -> SockPattern {
        self.0.reverse().standardize()
    }
}

impl Deref for SockPattern {
    type Target = SockSequence;

    fn deref(&self) -> &SockSequence {
        &self.0
    }
}

impl fmt::Display for SockPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SockPattern {
    type Err = Error;

    /// Parses any sequence and standardizes it.
    fn from_str(text: &str) -> Result<Self> {
        Ok(text.parse::<SockSequence>()?.standardize())
    }
}

/// A set partition of `{1, ..., n}`; blocks sorted by minimum, entries ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of `{1, ..., n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in b {
                if i == 0 || i > n {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!("index {i} repeated")));
                }
            }
        }
        if let Some(gap) = (1..=n).find(|&i| !seen[i]) {
            return Err(Error::InvalidPartition(format!("index {gap} not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The standardized sequence whose occurrence sets are these blocks.
    pub fn to_pattern(&self) -> SockPattern {
        let mut ids = vec![Sock(0); self.n];
        for (label, block) in self.blocks.iter().enumerate() {
            for &i in block {
                ids[i - 1] = Sock(label as u32);
            }
        }
        SockPattern::from_rgs_unchecked(ids)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, i) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `{{1,2,4},{3,6},{5}}`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| bad(0, "expected outer braces"))?;
        let mut blocks = Vec::new();
        let mut rest = inner;
        let mut pos = 1;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| bad(pos, "expected '{'"))?;
            let close = body.find('}').ok_or_else(|| bad(pos, "unclosed block"))?;
            let block = body[..close]
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| bad(pos, "bad index")))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = &body[close + 1..];
            pos += close + 2;
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
                pos += 1;
            }
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

/// A multiset of socks with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SockMultiset {
    counts: BTreeMap<Sock, usize>,
}

impl SockMultiset {
    pub fn new(counts: BTreeMap<Sock, usize>) -> Result<Self> {
        if let Some((s, _)) = counts.iter().find(|(_, &c)| c == 0) {
            return Err(Error::InvalidArgument(format!(
                "sock {s} has multiplicity 0"
            )));
        }
        Ok(Self { counts })
    }

    pub fn from_sequence(seq: &SockSequence) -> Self {
        let mut counts = BTreeMap::new();
        for &s in seq {
            *counts.entry(s).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &BTreeMap<Sock, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, sock: Sock) -> usize {
        self.counts.get(&sock).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// `(sum of counts)! / prod(count!)`.
    pub fn arrangement_count(&self) -> BigUint {
        let factorial = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
        let denom = self
            .counts
            .values()
            .fold(BigUint::one(), |acc, &c| acc * factorial(c));
        factorial(self.total()) / denom
    }

    /// The arrangement with socks in ascending id order.
    pub fn sorted_sequence(&self) -> SockSequence {
        self.counts
            .iter()
            .flat_map(|(&s, &c)| std::iter::repeat_n(s, c))
            .collect()
    }

    /// Every distinct arrangement exactly once, in lexicographic order.
    pub fn arrangements(&self) -> Arrangements {
        Arrangements {
            next: Some(self.sorted_sequence().into_socks()),
        }
    }
}

impl fmt::Display for SockMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}:{c}")?;
        }
        Ok(())
    }
}

impl FromStr for SockMultiset {
    type Err = Error;

    /// Parses `a:2,b:2`.
    fn from_str(text: &str) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut offset = 1;
        for entry in text.split(',') {
            let bad = |message: String| Error::Parse {
                position: offset,
                message,
            };
            let (name, count) = entry
                .split_once(':')
                .ok_or_else(|| bad(format!("entry {entry:?} is not letter:count")))?;
            let sock = match name.parse::<SockSequence>() {
                Ok(seq) if seq.len() == 1 => seq.socks()[0],
                _ => return Err(bad(format!("bad sock name {name:?}"))),
            };
            let count: usize = count
                .parse()
                .map_err(|_| bad(format!("bad count {count:?}")))?;
            if count == 0 {
                return Err(bad(format!("sock {sock} has multiplicity 0")));
            }
            if counts.insert(sock, count).is_some() {
                return Err(bad(format!("sock {sock} listed twice")));
            }
            offset += entry.len() + 1;
        }
        Ok(Self { counts })
    }
}

macro_rules! serde_via_text {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(deserializer)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    )*};
}

serde_via_text!(SockSequence, SockPattern, SetPartition, SockMultiset);

/// Lexicographic stream of multiset arrangements.
pub struct Arrangements {
    next: Option<Vec<Sock>>,
}

impl Iterator for Arrangements {
    type Item = SockSequence;

    fn next(&mut self) -> Option<SockSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(SockSequence(current))
    }
}

fn next_permutation(v: &mut [Sock]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub(crate) fn standardize_slice(socks: &[Sock]) -> Vec<Sock> {
    let mut names: Vec<(Sock, Sock)> = Vec::new();
    socks
        .iter()
        .map(|&s| match names.iter().find(|(from, _)| *from == s) {
            Some(&(_, to)) => to,
            None => {
                let to = Sock(names.len() as u32);
                names.push((s, to));
                to
            }
        })
        .collect()
}

pub(crate) fn is_restricted_growth(socks: &[Sock]) -> bool {
    let mut next = 0u32;
    for s in socks {
        if s.0 > next {
            return false;
        }
        if s.0 == next {
            next += 1;
        }
    }
    true
}

pub(crate) fn is_sorted_slice(socks: &[Sock]) -> bool {
    let mut closed: Vec<Sock> = Vec::new();
    for w in socks.windows(2) {
        if w[0] != w[1] {
            if closed.contains(&w[1]) {
                return false;
            }
            closed.push(w[0]);
        }
    }
    true
}

/// Does `seq` contain the restricted-growth pattern `sigma` as a (not
/// necessarily consecutive) subsequence, up to renaming?
pub fn contains(seq: &[Sock], sigma: &[Sock]) -> bool {
    let mut assign = vec![None; pattern_alphabet(sigma)];
    embed(seq, sigma, 0, 0, &mut assign)
}

/// Containment where `sigma[0]` must be matched by `seq[0]`.
pub fn contains_anchored(seq: &[Sock], sigma: &[Sock]) -> bool {
    match (seq.first(), sigma.first()) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(&head), Some(&s0)) => {
            if sigma.len() > seq.len() {
                return false;
            }
            let mut assign = vec![None; pattern_alphabet(sigma)];
            assign[s0.0 as usize] = Some(head);
            embed(seq, sigma, 1, 1, &mut assign)
        }
    }
}

fn pattern_alphabet(sigma: &[Sock]) -> usize {
    sigma.iter().map(|s| s.0 as usize + 1).max().unwrap_or(0)
}

// Backtracking over injective partial assignments pattern-letter -> sock.
fn embed(
    seq: &[Sock],
    sigma: &[Sock],
    from: usize,
    matched: usize,
    assign: &mut [Option<Sock>],
) -> bool {
    if matched == sigma.len() {
        return true;
    }
    let remaining = sigma.len() - matched;
    if seq.len() < from + remaining {
        return false;
    }
    let letter = sigma[matched].0 as usize;
    for i in from..=seq.len() - remaining {
        let s = seq[i];
        match assign[letter] {
            Some(t) => {
                if s == t && embed(seq, sigma, i + 1, matched + 1, assign) {
                    return true;
                }
            }
            None => {
                if assign.contains(&Some(s)) {
                    continue;
                }
                assign[letter] = Some(s);
                let found = embed(seq, sigma, i + 1, matched + 1, assign);
                assign[letter] = None;
                if found {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SockSequence {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> SockPattern {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(seq("bbadb").standardize().to_string(), "aabca");
        assert_eq!(seq("cacc").standardize().to_string(), "abaa");
        assert_eq!(seq("").standardize().to_string(), "");
    }

    #[test]
    fn set_partition_examples() {
        assert_eq!(
            seq("aabacb").to_set_partition().to_string(),
            "{{1,2,4},{3,6},{5}}"
        );
        assert_eq!(seq("a").to_set_partition().to_string(), "{{1}}");
        assert_eq!(seq("abab").to_set_partition().to_string(), "{{1,3},{2,4}}");
        // depends only on the pattern
        assert_eq!(
            seq("ccdcbd").to_set_partition(),
            seq("aabacb").to_set_partition()
        );
    }

    #[test]
    fn from_set_partition_examples() {
        let sp: SetPartition = "{{1,2,4},{3,6},{5}}".parse().unwrap();
        assert_eq!(sp.to_pattern().to_string(), "aabacb");
        let sp = SetPartition::new(1, vec![vec![1]]).unwrap();
        assert_eq!(sp.to_pattern().to_string(), "a");
        let sp = SetPartition::new(2, vec![vec![2], vec![1]]).unwrap();
        assert_eq!(sp.to_pattern().to_string(), "ab");
    }

    #[test]
    fn malformed_partitions_rejected() {
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 5]]).is_err());
        assert!("{{1,2},{2}}".parse::<SetPartition>().is_err());
    }

    #[test]
    fn sortedness() {
        assert!(seq("cbbaa").is_sorted());
        assert!(!seq("abab").is_sorted());
        assert!(seq("").is_sorted());
        assert!(!seq("aba").is_sorted());
        assert!(seq("aaab").is_sorted());
    }

    #[test]
    fn reverse_and_counts() {
        assert_eq!(seq("abcabc").reverse().to_string(), "cbacba");
        assert_eq!(seq("aa").reverse().to_string(), "aa");
        assert_eq!(seq("").reverse().to_string(), "");
        assert_eq!(seq("aabacb").distinct_count(), 3);
        assert_eq!(seq("aaaa").distinct_count(), 1);
        assert_eq!(seq("").distinct_count(), 0);
    }

    #[test]
    fn occurrence_index_sets() {
        let p = seq("aabacb");
        assert_eq!(p.occurrence_indices(Sock(0)), BTreeSet::from([1, 2, 4]));
        assert!(p.occurrence_indices(Sock(3)).is_empty());
        assert_eq!(seq("a").occurrence_indices(Sock(0)), BTreeSet::from([1]));
    }

    #[test]
    fn containment_examples() {
        assert!(seq("aba").contains(&pat("aba")));
        assert!(!seq("aabb").contains(&pat("aba")));
        assert!(seq("abcabc").contains(&pat("abab")));
        assert!(seq("").contains(&pat("")));
        assert!(!seq("").contains(&pat("a")));
        // renaming must be injective
        assert!(!seq("aaaa").contains(&pat("ab")));
        assert!(!seq("abab").contains(&pat("aaa")));
    }

    #[test]
    fn anchored_containment() {
        assert!(contains_anchored(seq("acba").socks(), pat("aba").socks()));
        assert!(!contains_anchored(seq("baa").socks(), pat("aba").socks()));
        assert!(!contains_anchored(seq("abcb").socks(), pat("aba").socks()));
    }

    #[test]
    fn arrangements_of_multiset() {
        let m: SockMultiset = "a:2,b:2".parse().unwrap();
        let all: Vec<String> = m.arrangements().map(|s| s.to_string()).collect();
        assert_eq!(all, ["aabb", "abab", "abba", "baab", "baba", "bbaa"]);
        let m: SockMultiset = "a:1".parse().unwrap();
        assert_eq!(m.arrangements().count(), 1);
        let m: SockMultiset = "a:3".parse().unwrap();
        let all: Vec<String> = m.arrangements().map(|s| s.to_string()).collect();
        assert_eq!(all, ["aaa"]);
        assert_eq!(m.to_string(), "a:3");
    }

    #[test]
    fn multiset_parse_errors() {
        assert!("a:0".parse::<SockMultiset>().is_err());
        assert!("a2".parse::<SockMultiset>().is_err());
        assert!("a:2,a:1".parse::<SockMultiset>().is_err());
        assert!("ab:2".parse::<SockMultiset>().is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(seq("abcab").ids(), vec![0, 1, 2, 0, 1]);
        assert_eq!(seq("s0,s1,s0").ids(), vec![0, 1, 0]);
        assert_eq!(seq("s0,s1,s0").to_string(), "aba");
        assert_eq!(seq("s0,s30").to_string(), "s0,s30");
        match "aB!".parse::<SockSequence>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("s0,x1".parse::<SockSequence>().is_err());
        assert!("s0,s".parse::<SockSequence>().is_err());
    }

    #[test]
    fn pattern_requires_rgs() {
        assert!(SockPattern::new(seq("ba")).is_err());
        assert!(SockPattern::new(seq("abac")).is_ok());
        assert_eq!(pat("bab").to_string(), "aba");
        assert_eq!(pat("abca").reversed().to_string(), "abca");
        assert_eq!(pat("aab").reversed().to_string(), "abb");
    }
}
