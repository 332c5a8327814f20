//! Permutations, pattern containment, the increasing-subsequence statistics
//! `tau_k`, the star product, and exhaustive enumeration of avoidance
//! classes.  The enumerator is the brute-force oracle behind every
//! generating-function identity in [`crate::formulas`].

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::{Error, Result, DEFAULT_ENUM_LIMIT};

/// A permutation of `{1, ..., n}` in one-line notation.  `n = 0` is the
/// empty permutation, which belongs to every avoidance class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    /// Validates that `entries` is a rearrangement of `1..=n`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &v in &entries {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidInput(format!(
                    "entries are not a permutation of 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn empty() -> Self {
        Permutation { entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The pattern (rank sequence) of a sequence of distinct integers.
    ///
    /// `type_of(&[2, 8, 6, 9])` is `1324`: each entry is replaced by its
    /// rank within the sequence.
    pub fn type_of(subseq: &[u32]) -> Result<Self> {
        let mut sorted: Vec<u32> = subseq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(
                "pattern type undefined: duplicate entries".into(),
            ));
        }
        let entries = subseq
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
            .collect();
        Ok(Permutation { entries })
    }

    /// Number of subsequences of `self` whose type equals `sigma`, exact.
    ///
    /// Positions are chosen left to right; a partial choice is abandoned as
    /// soon as it stops being order-isomorphic to the corresponding prefix
    /// of `sigma`.
    pub fn count_occurrences(&self, sigma: &Permutation) -> BigInt {
        assert!(!sigma.is_empty(), "pattern must be nonempty");
        let mut total = BigInt::zero();
        let mut chosen = Vec::with_capacity(sigma.len());
        count_rec(&self.entries, &sigma.entries, 0, &mut chosen, &mut total);
        total
    }

    /// True iff `self` contains at least one subsequence of type `sigma`.
    pub fn contains(&self, sigma: &Permutation) -> bool {
        assert!(!sigma.is_empty(), "pattern must be nonempty");
        let mut chosen = Vec::with_capacity(sigma.len());
        contains_rec(&self.entries, &sigma.entries, 0, &mut chosen)
    }

    /// True iff `self` avoids every pattern in `set`; short-circuits.
    pub fn is_avoiding(&self, set: &PatternSet) -> bool {
        set.patterns().iter().all(|sigma| !self.contains(sigma))
    }

    /// `tau_k`: the number of increasing subsequences of length `k`.
    /// `tau_0 = 0` by convention and `tau_1` is the length.
    pub fn tau(&self, k: usize) -> BigInt {
        if k == 0 || k > self.len() {
            return BigInt::zero();
        }
        self.stat_vector(k).values[k - 1].clone()
    }

    /// `(tau_1, ..., tau_K)` computed in a single dynamic program:
    /// `c_j(i)` counts increasing subsequences of length `j` ending at
    /// position `i`, with `c_j(i) = sum c_{j-1}(i')` over earlier, smaller
    /// entries.
    pub fn stat_vector(&self, cutoff: usize) -> StatVector {
        let n = self.len();
        let mut values = vec![BigInt::zero(); cutoff];
        if cutoff == 0 {
            return StatVector { values };
        }
        // ending[i] holds c_j(i) for the current subsequence length j.
        let mut ending = vec![BigInt::one(); n];
        values[0] = BigInt::from(n);
        for j in 2..=cutoff.min(n) {
            let mut next = vec![BigInt::zero(); n];
            for i in 0..n {
                let mut acc = BigInt::zero();
                for i2 in 0..i {
                    if self.entries[i2] < self.entries[i] {
                        acc += &ending[i2];
                    }
                }
                next[i] = acc;
            }
            ending = next;
            values[j - 1] = ending.iter().sum();
        }
        StatVector { values }
    }

    /// Total number of nonempty increasing subsequences, `sum_k tau_k`.
    pub fn m_statistic(&self) -> BigInt {
        self.stat_vector(self.len()).values.iter().sum()
    }

    /// Number of pairs `i < j` with `pi(i) < pi(j)`; equals `tau_2`.
    pub fn noninversions(&self) -> BigInt {
        self.tau(2)
    }

    /// Star product: relabel `self` into the top values (keeping its type),
    /// splice in the maximum, and append the tail of `other`.
    ///
    /// Writing `n = |self| + |other|`, the left block is `self` shifted up
    /// by `|other| - 1` with its smallest entry replaced by the first entry
    /// of `other`; then comes `n`; then `other` without its first entry.
    pub fn star(&self, other: &Permutation) -> Result<Permutation> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::InvalidInput(
                "star product requires nonempty operands".into(),
            ));
        }
        let n1 = self.len() as u32;
        let n2 = other.len() as u32;
        let mut entries = Vec::with_capacity((n1 + n2) as usize);
        for &v in &self.entries {
            if v == 1 {
                entries.push(other.entries[0]);
            } else {
                entries.push(v + n2 - 1);
            }
        }
        entries.push(n1 + n2);
        entries.extend_from_slice(&other.entries[1..]);
        Ok(Permutation { entries })
    }

    /// Prepend a new maximum: `pi` of length `n` becomes `(n + 1, pi)`.
    /// Preserves membership in the class; `tau_1` grows by one and all
    /// higher `tau_k` are unchanged.
    pub fn prepend_max(&self) -> Permutation {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(self.len() as u32 + 1);
        entries.extend_from_slice(&self.entries);
        Permutation { entries }
    }

    /// Invert the two maps above on the avoidance class.
    ///
    /// A class permutation beginning with its maximum came from
    /// [`Permutation::prepend_max`]; otherwise it is a unique star product.
    /// The factors are the type of the prefix before the maximum and the
    /// subsequence formed by the smallest `n - i` values.
    ///
    /// Only defined on permutations avoiding 1243 and 2143 of length at
    /// least 2: the split needs exactly one of the small values to sit left
    /// of the maximum, which can fail outside the class.
    pub fn decompose(&self) -> Result<Decomposition> {
        let n = self.len() as u32;
        if n < 2 {
            return Err(Error::UndefinedDecomposition(
                "decomposition requires length >= 2".into(),
            ));
        }
        if self.entries[0] == n {
            return Ok(Decomposition::Prepend(Permutation {
                entries: self.entries[1..].to_vec(),
            }));
        }
        let pos = self.entries.iter().position(|&v| v == n).unwrap();
        let i = pos as u32; // max sits at position i + 1 (1-based)
        let small = n - i; // factor sizes: i and n - i
        let left_small = self.entries[..pos].iter().filter(|&&v| v <= small).count();
        if left_small != 1 {
            return Err(Error::UndefinedDecomposition(format!(
                "{left_small} of the values 1..={small} appear left of the maximum; \
                 expected exactly 1 (input not in the class)"
            )));
        }
        let first = Permutation::type_of(&self.entries[..pos])?;
        let second_entries: Vec<u32> = self
            .entries
            .iter()
            .copied()
            .filter(|&v| v <= small)
            .collect();
        let second = Permutation { entries: second_entries };
        Ok(Decomposition::Star(first, second))
    }
}

/// Result of [`Permutation::decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// The permutation was `(n, rest)`.
    Prepend(Permutation),
    /// The permutation was `first * second`.
    Star(Permutation, Permutation),
}

fn count_rec(
    entries: &[u32],
    sigma: &[u32],
    start: usize,
    chosen: &mut Vec<u32>,
    total: &mut BigInt,
) {
    let j = chosen.len();
    if j == sigma.len() {
        *total += 1;
        return;
    }
    for i in start..entries.len() {
        let v = entries[i];
        if prefix_isomorphic(chosen, sigma, v, j) {
            chosen.push(v);
            count_rec(entries, sigma, i + 1, chosen, total);
            chosen.pop();
        }
    }
}

fn contains_rec(entries: &[u32], sigma: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let j = chosen.len();
    if j == sigma.len() {
        return true;
    }
    for i in start..entries.len() {
        let v = entries[i];
        if prefix_isomorphic(chosen, sigma, v, j) {
            chosen.push(v);
            if contains_rec(entries, sigma, i + 1, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Would placing value `v` in pattern slot `j` keep the chosen values
/// order-isomorphic to `sigma[..=j]`?
#[inline]
fn prefix_isomorphic(chosen: &[u32], sigma: &[u32], v: u32, j: usize) -> bool {
    chosen
        .iter()
        .zip(sigma)
        .all(|(&u, &s)| (u < v) == (s < sigma[j]))
}

/// A finite set of forbidden patterns.  The empty set forbids nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(mut patterns: Vec<Permutation>) -> Result<Self> {
        if patterns.iter().any(Permutation::is_empty) {
            return Err(Error::InvalidInput("patterns must be nonempty".into()));
        }
        patterns.sort();
        patterns.dedup();
        Ok(PatternSet { patterns })
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    /// `{1243, 2143}`, the ambient class of the whole crate.
    pub fn schroder() -> Self {
        PatternSet::new(vec![
            Permutation::new(vec![1, 2, 4, 3]).unwrap(),
            Permutation::new(vec![2, 1, 4, 3]).unwrap(),
        ])
        .unwrap()
    }

    /// The ambient class with extra forbidden patterns.
    pub fn schroder_with(extra: &[Permutation]) -> Self {
        let mut all = PatternSet::schroder().patterns;
        all.extend_from_slice(extra);
        PatternSet::new(all).unwrap()
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn union(&self, other: &PatternSet) -> PatternSet {
        let mut all = self.patterns.clone();
        all.extend_from_slice(&other.patterns);
        PatternSet::new(all).unwrap()
    }
}

/// The pattern `1 2 ... k`.
pub fn increasing_pattern(k: usize) -> Permutation {
    Permutation::identity(k)
}

/// The pattern `2 1 3 4 ... k` (requires `k >= 2`).
pub fn pattern_213k(k: usize) -> Permutation {
    assert!(k >= 2);
    let mut e: Vec<u32> = vec![2, 1];
    e.extend(3..=k as u32);
    Permutation::new(e).unwrap()
}

/// The pattern `2 3 1 4 5 ... k` (requires `k >= 3`).
pub fn pattern_2314k(k: usize) -> Permutation {
    assert!(k >= 3);
    let mut e: Vec<u32> = vec![2, 3, 1];
    e.extend(4..=k as u32);
    Permutation::new(e).unwrap()
}

/// The pattern `3 2 1 4 5 ... k` (requires `k >= 3`).
pub fn pattern_3214k(k: usize) -> Permutation {
    assert!(k >= 3);
    let mut e: Vec<u32> = vec![3, 2, 1];
    e.extend(4..=k as u32);
    Permutation::new(e).unwrap()
}

/// Append the next value `|pi| + 1` at the end.  Preserves the ambient
/// class: the appended entry is a trailing maximum, and neither 1243 nor
/// 2143 ends with its maximum.
pub fn append_max(pi: &Permutation) -> Permutation {
    let mut e = pi.entries().to_vec();
    e.push(pi.len() as u32 + 1);
    Permutation { entries: e }
}

/// Structural conditions under which a star product of two 321-avoiding
/// class permutations again avoids 321 (with `|pi2| >= 2`):
/// one operand begins with 1, the values `2..=|pi1|` appear in increasing
/// order in `pi1`, and `pi2` is increasing after its first entry.
pub fn star_preserves_321(pi1: &Permutation, pi2: &Permutation) -> bool {
    let begins_with_one = pi1.entries()[0] == 1 || pi2.entries()[0] == 1;
    let upper_increasing = {
        let mut last = 0u32;
        let mut ok = true;
        for &v in pi1.entries() {
            if v >= 2 {
                if v < last {
                    ok = false;
                    break;
                }
                last = v;
            }
        }
        ok
    };
    let tail_increasing = pi2.entries()[1..].windows(2).all(|w| w[0] < w[1]);
    begins_with_one && upper_increasing && tail_increasing
}

/// The `tau` vector `(tau_1, ..., tau_K)` of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatVector {
    pub values: Vec<BigInt>,
}

/// Streaming enumeration of `S_n(R)` in lexicographic one-line order.
///
/// Backtracking over positions with incremental pruning: a prefix is
/// extended by value `v` only if no forbidden pattern gains an occurrence
/// ending at the new position.  Capped at [`DEFAULT_ENUM_LIMIT`] unless a
/// limit is given explicitly.
pub fn enumerate_class(n: usize, set: &PatternSet) -> Result<ClassIter> {
    enumerate_class_with_limit(n, set, DEFAULT_ENUM_LIMIT)
}

/// As [`enumerate_class`] with an explicit size cap.
pub fn enumerate_class_with_limit(n: usize, set: &PatternSet, limit: usize) -> Result<ClassIter> {
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    Ok(ClassIter {
        n: n as u32,
        patterns: set.patterns.iter().map(|p| p.entries.clone()).collect(),
        prefix: Vec::with_capacity(n),
        used: 0,
        next_try: 1,
        emitted_empty: false,
        done: false,
    })
}

/// Convenience: collect the whole class.
pub fn class_members(n: usize, set: &PatternSet) -> Result<Vec<Permutation>> {
    Ok(enumerate_class(n, set)?.collect())
}

/// Convenience: class size as a big integer.
pub fn class_size(n: usize, set: &PatternSet) -> Result<BigInt> {
    let mut count = BigInt::zero();
    for _ in enumerate_class(n, set)? {
        count += 1;
    }
    Ok(count)
}

pub struct ClassIter {
    n: u32,
    patterns: Vec<Vec<u32>>,
    prefix: Vec<u32>,
    used: u64,
    next_try: u32,
    emitted_empty: bool,
    done: bool,
}

impl ClassIter {
    /// Does some pattern occur in `prefix + [v]` with the occurrence ending
    /// at the new entry?
    fn creates_occurrence(&self, v: u32) -> bool {
        self.patterns
            .iter()
            .any(|sigma| extends_to_occurrence(&self.prefix, v, sigma))
    }
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Permutation::empty());
        }
        loop {
            // Try to extend the current prefix with the next candidate value.
            let mut v = self.next_try;
            let mut placed = false;
            while v <= self.n {
                if self.used & (1 << v) == 0 && !self.creates_occurrence(v) {
                    placed = true;
                    break;
                }
                v += 1;
            }
            if placed {
                self.prefix.push(v);
                self.used |= 1 << v;
                self.next_try = 1;
                if self.prefix.len() == self.n as usize {
                    let result = Permutation { entries: self.prefix.clone() };
                    let last = self.prefix.pop().unwrap();
                    self.used &= !(1 << last);
                    self.next_try = last + 1;
                    return Some(result);
                }
            } else {
                match self.prefix.pop() {
                    Some(last) => {
                        self.used &= !(1 << last);
                        self.next_try = last + 1;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Is there an occurrence of `sigma` in `prefix + [v]` whose last element is
/// the new value `v`?  Chooses earlier slots left to right, pruning on
/// prefix isomorphism and on each value's required relation to `v`.
fn extends_to_occurrence(prefix: &[u32], v: u32, sigma: &[u32]) -> bool {
    let m = sigma.len();
    if m == 1 {
        return true;
    }
    if prefix.len() + 1 < m {
        return false;
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(m - 1);
    extends_rec(prefix, v, sigma, 0, &mut chosen)
}

fn extends_rec(prefix: &[u32], v: u32, sigma: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let j = chosen.len();
    let m = sigma.len();
    if j == m - 1 {
        return true;
    }
    // Not enough room left for the remaining slots.
    let needed = (m - 1) - j;
    if prefix.len() < start + needed {
        return false;
    }
    for i in start..prefix.len() {
        let u = prefix[i];
        if (u < v) == (sigma[j] < sigma[m - 1]) && prefix_isomorphic(chosen, sigma, u, j) {
            chosen.push(u);
            if extends_rec(prefix, v, sigma, i + 1, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    /// Contiguous digits when every entry is a single digit, otherwise
    /// space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma- or space-separated entries, or contiguous digits for
    /// lengths up to 9 (e.g. `836791425`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let entries: Vec<u32> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad entry {p:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidInput(
                    "digit shorthand only valid for length <= 9".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}
