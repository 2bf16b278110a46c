//! Permutations in one-line notation, involutions, classical pattern
//! containment, the reverse/complement symmetries and the decomposition into
//! connected components.
//!
//! Everything here is 1-indexed: position `i` of a permutation of length `n`
//! holds `σ(i) ∈ {1, …, n}`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates `values` as a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in values.iter().enumerate() {
            let position = idx + 1;
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange {
                    value: v.into(),
                    position,
                    len: n,
                });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::DuplicateValue { value: v, position });
            }
        }
        Ok(Self { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    /// The permutation order-isomorphic to `seq` (which must have distinct
    /// entries).
    pub fn standardize(seq: &[u32]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is outside `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn is_involution(&self) -> bool {
        self.first_non_involutive_point().is_none()
    }

    fn first_non_involutive_point(&self) -> Option<usize> {
        (1..=self.len()).find(|&i| self.at(self.at(i)) != i)
    }

    /// `σ_r(i) = σ(n+1-i)`.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { values }
    }

    /// `σ_c(i) = n+1-σ(i)`.
    pub fn complement(&self) -> Self {
        let top = self.len() as u32 + 1;
        Self {
            values: self.values.iter().map(|&v| top - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Self {
        let top = self.len() as u32 + 1;
        Self {
            values: self.values.iter().rev().map(|&v| top - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u32 + 1;
        }
        Self { values }
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Pattern) -> bool {
        self.find_pattern(pattern).is_some()
    }

    /// The lexicographically first index tuple `i₁ < … < i_k` (1-based) whose
    /// values form an occurrence of `pattern`, if any.
    pub fn find_pattern(&self, pattern: &Pattern) -> Option<Vec<usize>> {
        let k = pattern.len();
        if k > self.len() {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        if self.extend_occurrence(pattern.values(), 0, &mut chosen) {
            Some(chosen.into_iter().map(|i| i + 1).collect())
        } else {
            None
        }
    }

    // Depth-first search over index prefixes. A candidate is kept only if
    // its value sits in the same relative order against every already chosen
    // value as the pattern letter does against the earlier pattern letters.
    fn extend_occurrence(&self, pattern: &[u32], start: usize, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - depth;
        let target = pattern[depth];
        for i in start..=self.len() - remaining {
            let v = self.values[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&j, &p)| (self.values[j] < v) == (p < target));
            if !consistent {
                continue;
            }
            chosen.push(i);
            if self.extend_occurrence(pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|p| !self.contains(p))
    }

    /// Restrictions of `σ` to the blocks of its finest interval decomposition,
    /// each renormalized to `{1, …, m}`.
    pub fn connected_components(&self) -> Vec<Permutation> {
        let mut components = Vec::new();
        let mut start = 0;
        let mut running_max = 0;
        for (idx, &v) in self.values.iter().enumerate() {
            running_max = running_max.max(v as usize);
            if running_max == idx + 1 {
                let offset = start as u32;
                components.push(Permutation {
                    values: self.values[start..=idx]
                        .iter()
                        .map(|&x| x - offset)
                        .collect(),
                });
                start = idx + 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Direct sum: `other` is shifted up by `self.len()` and appended.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let offset = self.len() as u32;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + offset));
        Permutation { values }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Space-separated decimal integers; the empty string is the empty
/// permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .enumerate()
            .map(|(idx, token)| {
                let position = idx + 1;
                token
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInteger {
                        token: token.to_string(),
                        position,
                    })
                    .and_then(|v| {
                        u32::try_from(v).map_err(|_| Error::ValueOutOfRange {
                            value: v,
                            position,
                            len: 0,
                        })
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// A permutation known to satisfy `τ(τ(i)) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Involution(Permutation);

impl Involution {
    pub fn new(p: Permutation) -> Result<Self> {
        match p.first_non_involutive_point() {
            Some(position) => Err(Error::NotAnInvolution { position }),
            None => Ok(Self(p)),
        }
    }

    pub(crate) fn from_permutation_unchecked(p: Permutation) -> Self {
        debug_assert!(p.is_involution());
        Self(p)
    }

    pub fn identity(n: usize) -> Self {
        Self(Permutation::identity(n))
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    /// Positions `i` with `τ(i) > i`, increasing.
    pub fn excedances(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) > i).collect()
    }

    /// Positions `i` with `τ(i) < i`, increasing.
    pub fn deficiencies(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) < i).collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn reverse_complement(&self) -> Involution {
        Involution(self.0.reverse_complement())
    }

    /// Whether `τ(i) + τ(n+1-i) = n+1` for every `i`.
    pub fn is_centrosymmetric(&self) -> bool {
        let n = self.len();
        (1..=n).all(|i| self.at(i) + self.at(n + 1 - i) == n + 1)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        (1..=self.len()).all(|i| self.at(i) != i)
    }
}

impl Deref for Involution {
    type Target = Permutation;

    fn deref(&self) -> &Permutation {
        &self.0
    }
}

impl TryFrom<Permutation> for Involution {
    type Error = Error;

    fn try_from(p: Permutation) -> Result<Self> {
        Involution::new(p)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Involution::new(s.parse()?)
    }
}

/// A permutation used as a forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Self {
        Self(p)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn inverse(&self) -> Pattern {
        Pattern(self.0.inverse())
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern(self.0.reverse_complement())
    }
}

impl Deref for Pattern {
    type Target = Permutation;

    fn deref(&self) -> &Permutation {
        &self.0
    }
}

impl From<Permutation> for Pattern {
    fn from(p: Permutation) -> Self {
        Self(p)
    }
}

/// Compact form (`4321`) when every letter is a single digit, otherwise the
/// space-separated one-line form.
impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in self.values() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            self.0.fmt(f)
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(char::is_whitespace) {
            return Ok(Pattern(s.parse()?));
        }
        let values = s
            .chars()
            .enumerate()
            .map(|(idx, ch)| {
                ch.to_digit(10).ok_or(Error::InvalidInteger {
                    token: ch.to_string(),
                    position: idx + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pattern(Permutation::new(values)?))
    }
}

/// A deduplicated list of patterns, kept in first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PatternSet(Vec<Pattern>);

impl PatternSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Pattern) -> bool {
        if self.0.contains(&p) {
            false
        } else {
            self.0.push(p);
            true
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Pattern> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.0.contains(p)
    }

    /// Parses comma-separated patterns, e.g. `4321,132`.
    pub fn parse_list(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl FromIterator<Pattern> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Pattern>>(iter: I) -> Self {
        let mut set = PatternSet::new();
        for p in iter {
            set.insert(p);
        }
        set
    }
}

impl<'a> IntoIterator for &'a PatternSet {
    type Item = &'a Pattern;
    type IntoIter = std::slice::Iter<'a, Pattern>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
