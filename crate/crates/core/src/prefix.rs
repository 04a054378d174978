//! Finite words over `{0, …, n−1}`, prefix codes, and the clopen subsets of
//! Cantor space they generate.
//!
//! Letters print as `a, b, c, …`; the empty word prints as `ε`. A code is
//! written as a sum of words (`"aa+aba+b"`), and the empty code as `0`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const MAX_PRINTABLE_ARITY: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    arity: usize,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(arity: usize, letters: Vec<u8>) -> Result<Self> {
        check_arity(arity)?;
        if let Some(&l) = letters.iter().find(|&&l| l as usize >= arity) {
            return Err(Error::InvalidWord(format!("letter {l} outside an alphabet of size {arity}")));
        }
        Ok(Word { arity, letters })
    }

    pub fn empty(arity: usize) -> Self {
        Word {
            arity,
            letters: Vec::new(),
        }
    }

    /// Parses `"aba"`; `""` and `"ε"` give the empty word.
    pub fn parse(arity: usize, text: &str) -> Result<Self> {
        check_arity(arity)?;
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Self::empty(arity));
        }
        let letters = text
            .chars()
            .map(|c| {
                let l = (c as u32).wrapping_sub('a' as u32) as usize;
                if c.is_ascii_lowercase() && l < arity {
                    Ok(l as u8)
                } else {
                    Err(Error::InvalidWord(format!("{c:?} is not a letter of an alphabet of size {arity}")))
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { arity, letters })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            arity: self.arity,
            letters,
        }
    }

    pub fn push(&self, letter: u8) -> Word {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word {
            arity: self.arity,
            letters,
        }
    }

    /// The suffix `w` with `self = prefix · w`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.letters.strip_prefix(prefix.letters.as_slice()).map(|rest| Word {
            arity: self.arity,
            letters: rest.to_vec(),
        })
    }

    pub fn truncate(&self, len: usize) -> Word {
        Word {
            arity: self.arity,
            letters: self.letters[..len.min(self.len())].to_vec(),
        }
    }

    /// All words of length `r`, lexicographically.
    pub fn all_of_length(arity: usize, r: usize) -> Vec<Word> {
        let mut out = vec![Word::empty(arity)];
        for _ in 0..r {
            out = out
                .iter()
                .flat_map(|w| (0..arity as u8).map(move |l| w.push(l)))
                .collect();
        }
        out
    }

    /// `Σ_k letter_k · n^(k−1)`: the first letter is least significant.
    pub fn colex_index(&self) -> usize {
        self.letters
            .iter()
            .rev()
            .fold(0, |acc, &l| acc * self.arity + l as usize)
    }

    pub fn from_colex_index(arity: usize, len: usize, mut index: usize) -> Word {
        let letters = (0..len)
            .map(|_| {
                let l = (index % arity) as u8;
                index /= arity;
                l
            })
            .collect();
        Word { arity, letters }
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if (2..=MAX_PRINTABLE_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(Error::InvalidWord(format!("alphabet size {arity} must lie in 2..=26")))
    }
}

fn same_arity(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch(a, b))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for &l in &self.letters {
            write!(f, "{}", (b'a' + l) as char)?;
        }
        Ok(())
    }
}

pub fn prefix_comparable(x: &Word, y: &Word) -> Result<bool> {
    same_arity(x.arity, y.arity)?;
    Ok(x.is_prefix_of(y) || y.is_prefix_of(x))
}

/// A finite antichain for the prefix order, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrefixCode {
    arity: usize,
    words: Vec<Word>,
}

impl PrefixCode {
    pub fn new(arity: usize, words: Vec<Word>) -> Result<Self> {
        check_arity(arity)?;
        for w in &words {
            same_arity(arity, w.arity)?;
        }
        let mut words = words;
        words.sort();
        words.dedup();
        // In lexicographic order a prefix sorts immediately before some
        // extension of it, so adjacent pairs suffice.
        if let Some(p) = words.windows(2).find(|p| p[0].is_prefix_of(&p[1])) {
            return Err(Error::NotPrefixCode(format!("{} is a prefix of {}", p[0], p[1])));
        }
        Ok(PrefixCode { arity, words })
    }

    fn from_sorted_unchecked(arity: usize, words: Vec<Word>) -> Self {
        PrefixCode { arity, words }
    }

    pub fn empty(arity: usize) -> Self {
        PrefixCode {
            arity,
            words: Vec::new(),
        }
    }

    /// `{ε}`, generating the whole space.
    pub fn full(arity: usize) -> Self {
        PrefixCode {
            arity,
            words: vec![Word::empty(arity)],
        }
    }

    /// Parses `"aa+aba+b"`; `"0"` is the empty code.
    pub fn parse(arity: usize, text: &str) -> Result<Self> {
        check_arity(arity)?;
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Self::empty(arity));
        }
        let words = text
            .split('+')
            .map(|w| Word::parse(arity, w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, words)
    }

    /// The shortest elements of `words` under the prefix order: the prefix
    /// code generating the same clopen set.
    pub fn max_of(arity: usize, words: &[Word]) -> Result<Self> {
        check_arity(arity)?;
        for w in words {
            same_arity(arity, w.arity)?;
        }
        let mut sorted = words.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut kept: Vec<Word> = Vec::new();
        for w in sorted {
            if !kept.last().is_some_and(|k| k.is_prefix_of(&w)) {
                kept.push(w);
            }
        }
        Ok(PrefixCode::from_sorted_unchecked(arity, kept))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Length of the longest word (0 for the empty code).
    pub fn length(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Sum of word lengths.
    pub fn weight(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    pub fn is_uniform(&self) -> bool {
        self.words.iter().all(|w| w.len() == self.length())
    }

    /// `Σ n^(−|x|)`.
    pub fn bernoulli(&self) -> BigRational {
        let n = BigInt::from(self.arity);
        self.words
            .iter()
            .map(|w| BigRational::new(BigInt::one(), n.pow(w.len() as u32)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn is_maximal(&self) -> bool {
        self.bernoulli().is_one()
    }

    /// Independent check: every word of length `length()` has a prefix in
    /// the code.
    pub fn is_maximal_oracle(&self) -> bool {
        Word::all_of_length(self.arity, self.length())
            .iter()
            .all(|w| self.words.iter().any(|x| x.is_prefix_of(w)))
    }

    /// Replaces `u` by the block `u · A^r`.
    pub fn extend(&self, u: &Word, r: usize) -> Result<Self> {
        same_arity(self.arity, u.arity)?;
        if r == 0 {
            return Err(Error::Precondition("extension depth must be at least 1".into()));
        }
        if !self.contains(u) {
            return Err(Error::Precondition(format!("{u} is not in the code")));
        }
        let mut words: Vec<Word> = self.words.iter().filter(|w| *w != u).cloned().collect();
        words.extend(Word::all_of_length(self.arity, r).iter().map(|s| u.concat(s)));
        words.sort();
        Ok(PrefixCode::from_sorted_unchecked(self.arity, words))
    }

    /// Replaces the block `u · A^r` by `u`.
    pub fn reduce(&self, u: &Word, r: usize) -> Result<Self> {
        same_arity(self.arity, u.arity)?;
        if r == 0 {
            return Err(Error::Precondition("reduction depth must be at least 1".into()));
        }
        let block: Vec<Word> = Word::all_of_length(self.arity, r).iter().map(|s| u.concat(s)).collect();
        if !block.iter().all(|w| self.contains(w)) {
            return Err(Error::Precondition(format!("{u}·A^{r} is not contained in the code")));
        }
        let mut words: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !(u.is_prefix_of(w) && w.len() == u.len() + r))
            .cloned()
            .collect();
        words.push(u.clone());
        words.sort();
        Ok(PrefixCode::from_sorted_unchecked(self.arity, words))
    }

    /// Every applicable reduction `(u, r)`, ordered by `u` then `r`.
    pub fn reductions(&self) -> Vec<(Word, usize)> {
        let mut out = BTreeSet::new();
        for w in &self.words {
            for r in 1..=w.len() {
                let u = w.truncate(w.len() - r);
                if self.reduce(&u, r).is_ok() {
                    out.insert((u, r));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Depth-1 reductions applied until none remains.
    pub fn minimize(&self) -> Self {
        let mut code = self.clone();
        loop {
            let parent = code.words.iter().find_map(|w| {
                let u = w.truncate(w.len().checked_sub(1)?);
                code.reduce(&u, 1).ok()
            });
            match parent {
                Some(next) => code = next,
                None => return code,
            }
        }
    }

    /// The uniform code of length `r` generating the same clopen set.
    pub fn uniformize(&self, r: usize) -> Result<Self> {
        if r < self.length() {
            return Err(Error::Precondition(format!(
                "cannot uniformize to length {r} below the code length {}",
                self.length()
            )));
        }
        let mut words: Vec<Word> = self
            .words
            .iter()
            .flat_map(|u| {
                Word::all_of_length(self.arity, r - u.len())
                    .into_iter()
                    .map(move |s| u.concat(&s))
            })
            .collect();
        words.sort();
        Ok(PrefixCode::from_sorted_unchecked(self.arity, words))
    }

    /// The words of length `l ≥ length()` lying in the generated clopen set.
    pub fn cylinders_at(&self, l: usize) -> Result<BTreeSet<Word>> {
        Ok(self.uniformize(l)?.words.into_iter().collect())
    }

    pub fn clopen_equal(&self, other: &Self) -> Result<bool> {
        same_arity(self.arity, other.arity)?;
        Ok(self.minimize() == other.minimize())
    }

    pub fn clopen_subset(&self, other: &Self) -> Result<bool> {
        same_arity(self.arity, other.arity)?;
        let l = self.length().max(other.length());
        Ok(self.cylinders_at(l)?.is_subset(&other.cylinders_at(l)?))
    }

    /// The codes of the clopen sets `X ∩ Y`, `X ∪ Y` and `X \ Y`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.set_op(other, |a, b| a.intersection(b).cloned().collect())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.set_op(other, |a, b| a.union(b).cloned().collect())
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.set_op(other, |a, b| a.difference(b).cloned().collect())
    }

    fn set_op(
        &self,
        other: &Self,
        op: impl Fn(&BTreeSet<Word>, &BTreeSet<Word>) -> Vec<Word>,
    ) -> Result<Self> {
        same_arity(self.arity, other.arity)?;
        let l = self.length().max(other.length());
        let words = op(&self.cylinders_at(l)?, &other.cylinders_at(l)?);
        Ok(PrefixCode::from_sorted_unchecked(self.arity, words).minimize())
    }
}

impl fmt::Display for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("0");
        }
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Every prefix code whose words have length at most `max_len`.
pub fn all_codes(arity: usize, max_len: usize) -> Result<Vec<PrefixCode>> {
    check_arity(arity)?;
    fn below(arity: usize, node: &Word, remaining: usize) -> Vec<Vec<Word>> {
        if remaining == 0 {
            return vec![Vec::new(), vec![node.clone()]];
        }
        let mut combos: Vec<Vec<Word>> = vec![Vec::new()];
        for l in 0..arity as u8 {
            let child = below(arity, &node.push(l), remaining - 1);
            combos = combos
                .iter()
                .flat_map(|c| {
                    child.iter().map(move |d| {
                        let mut v = c.clone();
                        v.extend_from_slice(d);
                        v
                    })
                })
                .collect();
        }
        combos.push(vec![node.clone()]);
        combos
    }
    Ok(below(arity, &Word::empty(arity), max_len)
        .into_iter()
        .map(|mut words| {
            words.sort();
            PrefixCode::from_sorted_unchecked(arity, words)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    fn code(s: &str) -> PrefixCode {
        PrefixCode::parse(2, s).unwrap()
    }

    #[test]
    fn comparability_and_max() {
        assert!(prefix_comparable(&w("a"), &w("ab")).unwrap());
        assert!(!prefix_comparable(&w("ab"), &w("ba")).unwrap());
        assert!(prefix_comparable(&w("bab"), &w("")).unwrap());
        assert_eq!(
            PrefixCode::max_of(2, &[w("a"), w("ab"), w("b")]).unwrap(),
            code("a+b")
        );
        assert!(prefix_comparable(&w("a"), &Word::parse(3, "a").unwrap()).is_err());
        assert!(PrefixCode::parse(2, "a+ab").is_err());
    }

    #[test]
    fn maximality() {
        assert!(code("a+b").is_maximal());
        assert!(code("aa+ab+b").is_maximal());
        assert!(!code("aa+b").is_maximal());
        assert_eq!(code("aa+b").bernoulli(), BigRational::new(3.into(), 4.into()));
        assert!(!code("aa+b").is_maximal_oracle());
        assert!(code("ε").is_maximal() && code("ε").is_maximal_oracle());
        assert!(!code("0").is_maximal() && !code("0").is_maximal_oracle());
    }

    #[test]
    fn extension_and_reduction() {
        let x = code("aa+aba+b");
        let y = x.extend(&w("b"), 2).unwrap().extend(&w("aa"), 1).unwrap();
        assert_eq!(y.to_string(), "aaa+aab+aba+baa+bab+bba+bbb");
        assert_eq!(code("aa+ab+b").reduce(&w("a"), 1).unwrap(), code("a+b"));
        assert_eq!(x.extend(&w("b"), 2).unwrap().reduce(&w("b"), 2).unwrap(), x);
        assert!(x.extend(&w("ab"), 1).is_err());
        assert!(x.reduce(&w("a"), 1).is_err());
    }

    #[test]
    fn uniformization() {
        assert_eq!(code("a").uniformize(2).unwrap(), code("aa+ab"));
        let x = code("aa+aba+b");
        let u = x.uniformize(3).unwrap();
        assert_eq!(u.len(), 7);
        assert_eq!(u.to_string(), "aaa+aab+aba+baa+bab+bba+bbb");
        assert_eq!(code("ab+ba").uniformize(2).unwrap(), code("ab+ba"));
        assert!(x.uniformize(2).is_err());
    }

    #[test]
    fn minimization() {
        assert_eq!(code("aa+ab+b").minimize(), code("ε"));
        assert_eq!(code("aa+ab").minimize(), code("a"));
        assert_eq!(code("aa+b").minimize(), code("aa+b"));
        assert_eq!(code("aa+ab+b").minimize().weight(), 0);
        assert_eq!(code("0").minimize(), code("0"));
    }

    #[test]
    fn clopen_relations() {
        assert!(code("a").clopen_equal(&code("aa+ab")).unwrap());
        assert_eq!(code("aa+aba+b").bernoulli(), BigRational::new(7.into(), 8.into()));
        assert!(code("aa").clopen_subset(&code("a")).unwrap());
        assert!(!code("a").clopen_subset(&code("aa")).unwrap());
        assert_eq!(code("a").union(&code("b")).unwrap(), code("ε"));
        assert_eq!(code("a").intersection(&code("ab+b")).unwrap(), code("ab"));
        assert_eq!(code("ε").difference(&code("aa")).unwrap(), code("ab+b"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(code("b+aa+aba").to_string(), "aa+aba+b");
        assert_eq!(code("0").to_string(), "0");
        assert_eq!(code("ε").to_string(), "ε");
        assert!(Word::parse(2, "abc").is_err());
        assert_eq!(Word::parse(3, "abc").unwrap().letters(), &[0, 1, 2]);
    }

    #[test]
    fn colex_indices() {
        assert_eq!(w("ab").colex_index(), 2);
        assert_eq!(w("ba").colex_index(), 1);
        for (i, x) in (0..8).map(|i| (i, Word::from_colex_index(2, 3, i))) {
            assert_eq!(x.colex_index(), i);
        }
    }

    #[test]
    fn code_counts() {
        let counts: Vec<usize> = (0..=3).map(|l| all_codes(2, l).unwrap().len()).collect();
        assert_eq!(counts, [2, 5, 26, 677]);
        assert_eq!(all_codes(3, 1).unwrap().len(), 1 + 8);
    }
}
