//! Permutations in one-line notation, pattern containment, and generators
//! for full symmetric groups and pattern-avoidance classes.
//!
//! All words are 1-based: a permutation of size `r` is a rearrangement of
//! `1..=r`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest `r` for which a full scan of the symmetric group is allowed.
pub const BRUTE_FORCE_MAX_R: usize = 9;

/// Largest `r` for which the Catalan-sized 132-avoider generator is allowed.
pub const AV132_MAX_R: usize = 14;

/// A permutation of `{1..r}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let r = word.len();
        if r == 0 {
            return Err(Error::NotAPermutation("word is empty".into()));
        }
        let mut seen = vec![false; r];
        for &v in &word {
            if v < 1 || v > r {
                return Err(Error::NotAPermutation(format!(
                    "value {v} out of range 1..={r}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::NotAPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { word })
    }

    pub fn from_slice(word: &[usize]) -> Result<Self> {
        Self::new(word.to_vec())
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 1-based position of `value` in the word.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.word.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Number of descents, i.e. positions `i` with `w(i) > w(i+1)`.
    pub fn descent_count(&self) -> usize {
        self.word.windows(2).filter(|p| p[0] > p[1]).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A nonempty collection of patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Permutation>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        Ok(Self { patterns })
    }

    pub fn from_words(words: &[&[usize]]) -> Result<Self> {
        Self::new(
            words
                .iter()
                .map(|w| Permutation::from_slice(w))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn contains_132(&self) -> bool {
        self.patterns.iter().any(|p| p.word() == [1, 3, 2])
    }

    /// `{132, 4321, 3214}`: the image class of the forest-web bijection.
    pub fn forest_image_class() -> Self {
        Self::from_words(&[&[1, 3, 2], &[4, 3, 2, 1], &[3, 2, 1, 4]]).unwrap()
    }

    /// `{321, 2143, 3124}`: the equinumerous class counted by OEIS A116731.
    pub fn cummings_class() -> Self {
        Self::from_words(&[&[3, 2, 1], &[2, 1, 4, 3], &[3, 1, 2, 4]]).unwrap()
    }

    /// `{132}` alone.
    pub fn av_132() -> Self {
        Self::from_words(&[&[1, 3, 2]]).unwrap()
    }
}

/// True iff some subsequence of `w` is in the same relative order as `p`.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    slice_contains_pattern(w.word(), p.word())
}

pub(crate) fn slice_contains_pattern(w: &[usize], p: &[usize]) -> bool {
    if p.len() > w.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(p.len());
    search(w, p, &mut chosen, 0)
}

fn search(w: &[usize], p: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
    if chosen.len() == p.len() {
        return true;
    }
    let remaining = p.len() - chosen.len();
    for i in start..=w.len().saturating_sub(remaining) {
        let j = chosen.len();
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(t, &it)| (w[it] < w[i]) == (p[t] < p[j]));
        if consistent {
            chosen.push(i);
            if search(w, p, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True iff `w` avoids every pattern in `ps`.
pub fn avoids_all(w: &Permutation, ps: &PatternSet) -> bool {
    ps.patterns().iter().all(|p| !contains_pattern(w, p))
}

fn slice_avoids_all(w: &[usize], ps: &PatternSet) -> bool {
    ps.patterns()
        .iter()
        .all(|p| !slice_contains_pattern(w, p.word()))
}

fn check_bound(r: usize, ps: &PatternSet) -> Result<()> {
    if r == 0 {
        return Err(Error::SizeLimitExceeded { r, max: 0 });
    }
    let max = if ps.contains_132() {
        AV132_MAX_R
    } else {
        BRUTE_FORCE_MAX_R
    };
    if r > max {
        return Err(Error::SizeLimitExceeded { r, max });
    }
    Ok(())
}

/// All members of `S_r` avoiding every pattern in `ps`, sorted
/// lexicographically by one-line word.
///
/// Sets containing 132 route through the Catalan-sized 132-avoider generator
/// (bound [`AV132_MAX_R`]); anything else scans the full symmetric group
/// (bound [`BRUTE_FORCE_MAX_R`]).
pub fn enumerate_avoiders(r: usize, ps: &PatternSet) -> Result<Vec<Permutation>> {
    check_bound(r, ps)?;
    let mut out = if ps.contains_132() {
        let cache = av132_words_upto(r.saturating_sub(1));
        let mut out = Vec::new();
        for_each_132_avoider_with(r, &cache, |word| {
            if slice_avoids_all(word, ps) {
                out.push(Permutation::from_word_unchecked(word.to_vec()));
            }
        });
        out
    } else {
        (1..=r)
            .permutations(r)
            .filter(|word| slice_avoids_all(word, ps))
            .map(Permutation::from_word_unchecked)
            .collect()
    };
    out.sort();
    Ok(out)
}

/// Cardinality of [`enumerate_avoiders`] without materializing the class.
pub fn count_avoiders(r: usize, ps: &PatternSet) -> Result<u64> {
    check_bound(r, ps)?;
    if ps.contains_132() {
        let cache = av132_words_upto(r.saturating_sub(1));
        Ok(count_132_route(r, &cache, ps))
    } else {
        Ok(count_brute_route(r, ps))
    }
}

#[cfg(feature = "parallel")]
fn count_brute_route(r: usize, ps: &PatternSet) -> u64 {
    let words: Vec<Vec<usize>> = (1..=r).permutations(r).collect();
    words
        .par_iter()
        .filter(|word| slice_avoids_all(word, ps))
        .count() as u64
}

#[cfg(not(feature = "parallel"))]
fn count_brute_route(r: usize, ps: &PatternSet) -> u64 {
    (1..=r)
        .permutations(r)
        .filter(|word| slice_avoids_all(word, ps))
        .count() as u64
}

#[cfg(feature = "parallel")]
fn count_132_route(r: usize, cache: &[Vec<Vec<u8>>], ps: &PatternSet) -> u64 {
    if r == 0 {
        return 0;
    }
    (1..=r)
        .into_par_iter()
        .map(|m| {
            cache[m - 1]
                .par_iter()
                .map(|u| {
                    let mut buf = vec![0usize; r];
                    let mut n = 0u64;
                    for v in &cache[r - m] {
                        assemble(u, v, r, m, &mut buf);
                        if slice_avoids_all(&buf, ps) {
                            n += 1;
                        }
                    }
                    n
                })
                .sum::<u64>()
        })
        .sum()
}

#[cfg(not(feature = "parallel"))]
fn count_132_route(r: usize, cache: &[Vec<Vec<u8>>], ps: &PatternSet) -> u64 {
    let mut n = 0u64;
    for_each_132_avoider_with(r, cache, |word| {
        if slice_avoids_all(word, ps) {
            n += 1;
        }
    });
    n
}

/// Writes `u (shifted up by r-m) · r · v` into `buf`.
fn assemble(u: &[u8], v: &[u8], r: usize, m: usize, buf: &mut [usize]) {
    for (i, &x) in u.iter().enumerate() {
        buf[i] = x as usize + (r - m);
    }
    buf[m - 1] = r;
    for (i, &x) in v.iter().enumerate() {
        buf[m + i] = x as usize;
    }
}

/// All 132-avoiding words of each size `0..=n`, via the split-at-maximum
/// decomposition: everything left of the maximum is larger than everything
/// right of it, and both sides are again 132-avoiding.
fn av132_words_upto(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut cache: Vec<Vec<Vec<u8>>> = vec![vec![vec![]]];
    for k in 1..=n {
        let mut words = Vec::new();
        for m in 1..=k {
            for u in &cache[m - 1] {
                for v in &cache[k - m] {
                    let mut w = Vec::with_capacity(k);
                    w.extend(u.iter().map(|&x| x + (k - m) as u8));
                    w.push(k as u8);
                    w.extend_from_slice(v);
                    words.push(w);
                }
            }
        }
        cache.push(words);
    }
    cache
}

/// Streams every 132-avoider of size `r`, using `cache` for sizes `< r`.
fn for_each_132_avoider_with<F: FnMut(&[usize])>(r: usize, cache: &[Vec<Vec<u8>>], mut f: F) {
    if r == 0 {
        return;
    }
    let mut buf = vec![0usize; r];
    for m in 1..=r {
        for u in &cache[m - 1] {
            for v in &cache[r - m] {
                assemble(u, v, r, m, &mut buf);
                f(&buf);
            }
        }
    }
}
