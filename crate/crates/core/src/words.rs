//! Ordered alphabets, words, scattered-subword counting, projections,
//! Parikh vectors and anagram enumeration.
//!
//! Letters are identified by their index in the ordered alphabet; index order
//! is letter order. Glyphs only matter when a word is parsed or printed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 8;

/// A totally ordered finite alphabet `a_1 < a_2 < ... < a_s`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet whose letter order is the order of `glyphs`.
    pub fn new(glyphs: impl IntoIterator<Item = char>) -> Result<Self> {
        let glyphs: Vec<char> = glyphs.into_iter().collect();
        if glyphs.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if glyphs.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "{} letters, at most {MAX_ALPHABET} are supported",
                glyphs.len()
            )));
        }
        for (i, g) in glyphs.iter().enumerate() {
            if glyphs[..i].contains(g) {
                return Err(Error::InvalidAlphabet(format!("letter {g:?} repeated")));
            }
            if *g == '-' || g.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!("{g:?} cannot be a letter")));
            }
        }
        Ok(Alphabet { glyphs })
    }

    /// Parses an ordered glyph string such as `"abc"` (meaning `a < b < c`).
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    /// The first `size` lowercase latin letters.
    pub fn latin(size: usize) -> Result<Self> {
        Self::new(('a'..='z').take(size))
    }

    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn glyph(&self, letter: u8) -> char {
        self.glyphs[letter as usize]
    }

    pub fn index_of(&self, glyph: char) -> Option<u8> {
        self.glyphs
            .iter()
            .position(|&g| g == glyph)
            .map(|i| i as u8)
    }

    /// Parses a word written in this alphabet's glyphs. The empty string is λ.
    pub fn word(&self, s: &str) -> Result<Word> {
        s.chars()
            .map(|c| self.index_of(c).ok_or(Error::UnknownLetter(c)))
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    pub fn render(&self, w: &Word) -> String {
        w.0.iter().map(|&l| self.glyph(l)).collect()
    }

    /// Fails unless every letter of `w` belongs to this alphabet.
    pub fn check(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&l| l as usize >= self.size()) {
            Some(&index) => Err(Error::LetterOutOfRange {
                index,
                size: self.size(),
            }),
            None => Ok(()),
        }
    }

    pub fn all_letters(&self) -> LetterSet {
        LetterSet::full(self.size())
    }

    /// The contiguous ascending word `a_i a_{i+1} ... a_j` (0-based, inclusive).
    pub fn run(&self, first: u8, last: u8) -> Word {
        assert!(first <= last && (last as usize) < self.size());
        Word((first..=last).collect())
    }

    /// The sub-alphabet induced by `letters`, in the inherited order.
    pub fn restrict(&self, letters: LetterSet) -> Result<Alphabet> {
        Alphabet::new(letters.iter().map(|l| self.glyph(l)))
    }

    /// Parses a glyph string naming a subset of this alphabet.
    pub fn letter_set(&self, s: &str) -> Result<LetterSet> {
        let mut set = LetterSet::EMPTY;
        for c in s.chars() {
            set.insert(self.index_of(c).ok_or(Error::UnknownLetter(c))?);
        }
        Ok(set)
    }

    pub fn render_set(&self, set: LetterSet) -> String {
        set.iter().map(|l| self.glyph(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.glyphs.iter().try_for_each(|g| write!(f, "{g}"))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for (i, g) in self.glyphs.iter().enumerate() {
            if i > 0 {
                write!(f, "<")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<String> for Alphabet {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Alphabet::parse(&s)
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.to_string()
    }
}

/// A subset of letters, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(u8);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn full(size: usize) -> Self {
        debug_assert!(size <= MAX_ALPHABET);
        LetterSet(((1u16 << size) - 1) as u8)
    }

    pub fn from_letters(letters: impl IntoIterator<Item = u8>) -> Self {
        let mut s = LetterSet::EMPTY;
        for l in letters {
            s.insert(l);
        }
        s
    }

    pub fn insert(&mut self, letter: u8) {
        self.0 |= 1 << letter;
    }

    pub fn contains(self, letter: u8) -> bool {
        letter < 8 && self.0 & (1 << letter) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Letters in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..8u8).filter(move |&l| self.contains(l))
    }

    /// Position of `letter` within the set's induced order.
    pub fn rank(self, letter: u8) -> Option<u8> {
        self.contains(letter)
            .then(|| (self.0 & ((1u16 << letter) - 1) as u8).count_ones() as u8)
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite word, stored as a sequence of letter indices.
///
/// The derived ordering is lexicographic by letter index, the canonical order
/// used wherever a deterministic choice is needed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    /// The empty word λ.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Occurrences of each letter index, up to [`MAX_ALPHABET`].
    pub fn letter_histogram(&self) -> [u64; MAX_ALPHABET] {
        let mut h = [0; MAX_ALPHABET];
        for &l in &self.0 {
            h[l as usize] += 1;
        }
        h
    }

    /// Number of positions at which two equal-length words differ.
    pub fn hamming(&self, other: &Word) -> Option<usize> {
        (self.len() == other.len())
            .then(|| self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }
}

impl fmt::Debug for Word {
    // Latin glyphs, which is what every preset uses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&l| (b'a' + l) as char).collect();
        write!(f, "Word({s:?})")
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Word {
        Word(v.to_vec())
    }
}

/// `|w|_u`: the number of occurrences of `u` as a scattered subword of `w`.
///
/// Standard prefix dynamic program, kept as a single rolling row. Overflow of
/// the 64-bit count is an error.
pub fn count_subword(w: &Word, u: &Word) -> Result<u64> {
    let u = u.letters();
    if u.len() > w.len() {
        return Ok(0);
    }
    // row[j] = occurrences of u[..j] in the prefix of w read so far
    let mut row = vec![0u64; u.len() + 1];
    row[0] = 1;
    for &letter in w.letters() {
        for j in (1..=u.len()).rev() {
            if u[j - 1] == letter {
                row[j] = row[j]
                    .checked_add(row[j - 1])
                    .ok_or(Error::Overflow("counting subword occurrences"))?;
            }
        }
    }
    Ok(row[u.len()])
}

/// The projective morphism `π_Γ`: deletes every letter outside `gamma` and
/// re-indexes the survivors against `gamma`'s induced order.
pub fn project(w: &Word, gamma: LetterSet) -> Word {
    Word(w.0.iter().filter_map(|&l| gamma.rank(l)).collect())
}

/// Per-letter occurrence counts `(|w|_{a_1}, ..., |w|_{a_s})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParikhVector(Vec<u64>);

impl ParikhVector {
    pub fn new(counts: Vec<u64>) -> Self {
        ParikhVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Sum of the counts, i.e. the length of every word with this vector.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Number of words with this vector, `None` on overflow.
    pub fn multinomial(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        let mut placed: u64 = 0;
        for &c in &self.0 {
            for k in 1..=c {
                placed += 1;
                // acc * placed / k stays integral: acc * C(placed, k) / C(placed-1, k-1)
                acc = u64::try_from(acc as u128 * placed as u128 / k as u128).ok()?;
            }
        }
        Some(acc)
    }
}

pub fn parikh_vector(alphabet: &Alphabet, w: &Word) -> ParikhVector {
    let h = w.letter_histogram();
    ParikhVector(h[..alphabet.size()].to_vec())
}

/// Lexicographic enumeration of every word with a given Parikh vector.
#[derive(Debug, Clone)]
pub struct Anagrams {
    next: Option<Vec<u8>>,
}

impl Iterator for Anagrams {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word(current))
    }
}

// Classic in-place successor; false when `v` is the last permutation.
fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = v.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every word with Parikh vector `v`, each once, in lexicographic order.
///
/// Fails when the class is larger than `limits.max_states` or the words longer
/// than `limits.max_word_len`.
pub fn anagrams(v: &ParikhVector, limits: &Limits) -> Result<Anagrams> {
    let len = v.total() as usize;
    if len > limits.max_word_len {
        return Err(Error::WordTooLong {
            len,
            limit: limits.max_word_len,
        });
    }
    match v.multinomial() {
        Some(n) if n <= limits.max_states as u64 => {}
        _ => {
            return Err(Error::CapExceeded {
                limit: limits.max_states,
                context: "enumerating an anagram class",
            })
        }
    }
    let first: Vec<u8> = v
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(l, &c)| std::iter::repeat_n(l as u8, c as usize))
        .collect();
    Ok(Anagrams { next: Some(first) })
}

/// All Parikh vectors of words of length `len` over `size` letters, in
/// lexicographic order of the counts.
pub fn parikh_vectors_of_length(size: usize, len: u64) -> Vec<ParikhVector> {
    fn go(size: usize, left: u64, prefix: &mut Vec<u64>, out: &mut Vec<ParikhVector>) {
        if prefix.len() + 1 == size {
            prefix.push(left);
            out.push(ParikhVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for c in 0..=left {
            prefix.push(c);
            go(size, left - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, len, &mut Vec::with_capacity(size), &mut out);
    out
}

/// Number of words of length at most `max_len` over `size` letters, `None` on
/// overflow.
pub fn words_up_to(size: usize, max_len: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_len {
        total = total.checked_add(layer)?;
        layer = layer.checked_mul(size as u64)?;
    }
    Some(total)
}

/// All words of length exactly `len`, lexicographically.
pub fn words_of_length(size: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (size as u64).pow(len as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (k % size as u64) as u8;
            k /= size as u64;
        }
        Word(v)
    })
}
