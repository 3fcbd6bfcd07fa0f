//! Binary words over `{a, b}`, their symmetry predicates, and the order-4
//! group generated by reversal and letter complement.
//!
//! A [`Word`] packs its letters into a single `u64`. The leftmost letter is
//! the most significant of the `len` meaningful bits and `a` is encoded as 0,
//! so for words of equal length the packed value orders words exactly like
//! the lexicographic order with `a < b`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest word that fits in the packed representation.
pub const MAX_WORD_LEN: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
}

impl Letter {
    #[inline]
    pub fn complement(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    #[inline]
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    #[inline]
    fn bit(self) -> u64 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    #[inline]
    fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryClass {
    Palindrome,
    Antipalindrome,
    /// Both conditions hold; only the empty word.
    Both,
    Neither,
}

impl SymmetryClass {
    pub fn is_symmetric(self) -> bool {
        self != SymmetryClass::Neither
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryClass::Palindrome => "Palindrome",
            SymmetryClass::Antipalindrome => "Antipalindrome",
            SymmetryClass::Both => "Both",
            SymmetryClass::Neither => "Neither",
        };
        f.write_str(s)
    }
}

/// An immutable binary word of at most [`MAX_WORD_LEN`] letters.
///
/// Bits above `len` are always zero, so the derived `Eq`/`Hash` are sound.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word {
    bits: u64,
    len: u8,
}

#[inline]
fn mask(len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

impl Word {
    pub const fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    /// Builds a word from its packed encoding. Bits above `len` must be zero.
    pub fn from_bits(bits: u64, len: usize) -> Result<Word> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                length: len,
                max: MAX_WORD_LEN,
            });
        }
        if bits & !mask(len) != 0 {
            return Err(Error::WordTooLong {
                length: 64 - bits.leading_zeros() as usize,
                max: len,
            });
        }
        Ok(Word {
            bits,
            len: len as u8,
        })
    }

    /// Packed encoding without validation; callers guarantee the invariants.
    #[inline]
    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Word {
        debug_assert!(len <= MAX_WORD_LEN && bits & !mask(len) == 0);
        Word {
            bits,
            len: len as u8,
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut bits = 0u64;
        let mut len = 0usize;
        for letter in letters {
            len += 1;
            if len > MAX_WORD_LEN {
                return Err(Error::WordTooLong {
                    length: len,
                    max: MAX_WORD_LEN,
                });
            }
            bits = (bits << 1) | letter.bit();
        }
        Ok(Word::from_bits_unchecked(bits, len))
    }

    /// `letter` repeated `count` times.
    pub fn repeat(letter: Letter, count: usize) -> Result<Word> {
        Word::from_letters(std::iter::repeat_n(letter, count))
    }

    pub fn concat(self, other: Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                length: len,
                max: MAX_WORD_LEN,
            });
        }
        Ok(Word::from_bits_unchecked(
            (self.bits << other.len()) | other.bits,
            len,
        ))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed encoding, first letter most significant.
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Letter at 1-based `position`.
    ///
    /// # Panics
    /// If `position` is not in `1..=len`.
    #[inline]
    pub fn letter(&self, position: usize) -> Letter {
        assert!(
            (1..=self.len()).contains(&position),
            "position {position} out of range for length {}",
            self.len
        );
        Letter::from_bit(self.bits >> (self.len() - position))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (1..self.len() + 1).map(move |p| self.letter(p))
    }

    /// Letters as 0/1 bytes, leftmost first. Used by the DP kernels.
    #[inline]
    pub(crate) fn to_bytes(self, out: &mut [u8; MAX_WORD_LEN]) -> &[u8] {
        let n = self.len();
        for (i, slot) in out.iter_mut().take(n).enumerate() {
            *slot = ((self.bits >> (n - 1 - i)) & 1) as u8;
        }
        &out[..n]
    }

    pub fn count(&self, letter: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match letter {
            Letter::A => self.len() - ones,
            Letter::B => ones,
        }
    }

    #[inline]
    pub fn reverse(self) -> Word {
        if self.len == 0 {
            return self;
        }
        Word::from_bits_unchecked(self.bits.reverse_bits() >> (64 - self.len()), self.len())
    }

    #[inline]
    pub fn complement(self) -> Word {
        Word::from_bits_unchecked(self.bits ^ mask(self.len()), self.len())
    }

    pub fn symmetry_class(self) -> SymmetryClass {
        let pal = self == self.reverse();
        let anti = self == self.reverse().complement();
        match (pal, anti) {
            (true, true) => SymmetryClass::Both,
            (true, false) => SymmetryClass::Palindrome,
            (false, true) => SymmetryClass::Antipalindrome,
            (false, false) => SymmetryClass::Neither,
        }
    }

    #[inline]
    pub fn is_symmetric(self) -> bool {
        let rev = self.reverse();
        self == rev || self == rev.complement()
    }

    /// `{w, reverse(w), complement(w), reverse(complement(w))}` without
    /// duplicates, in that order of first appearance.
    pub fn orbit(self) -> Vec<Word> {
        let mut out = Vec::with_capacity(4);
        for w in [
            self,
            self.reverse(),
            self.complement(),
            self.reverse().complement(),
        ] {
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    /// Orbit element with the smallest packed value.
    #[inline]
    pub fn canonical_form(self) -> Word {
        let rev = self.reverse();
        let bits = self
            .bits
            .min(rev.bits)
            .min(self.complement().bits)
            .min(rev.complement().bits);
        Word::from_bits_unchecked(bits, self.len())
    }

    #[inline]
    pub fn is_canonical(self) -> bool {
        let m = mask(self.len());
        let rev = self.reverse().bits;
        self.bits <= rev && self.bits <= self.bits ^ m && self.bits <= rev ^ m
    }

    /// The word with the letter at 1-based `position` removed.
    pub fn delete(self, position: usize) -> Result<Word> {
        let n = self.len();
        if !(1..=n).contains(&position) {
            return Err(Error::InvalidPosition {
                position,
                length: n,
            });
        }
        let shift = n - position;
        let low = self.bits & mask(shift);
        let high = self.bits >> (shift + 1);
        Ok(Word::from_bits_unchecked((high << shift) | low, n - 1))
    }

    /// Removes every listed 1-based position. Positions may come in any order.
    pub fn remove_positions(self, positions: &[usize]) -> Result<Word> {
        let n = self.len();
        let mut drop = 0u64;
        for &p in positions {
            if !(1..=n).contains(&p) {
                return Err(Error::InvalidPosition {
                    position: p,
                    length: n,
                });
            }
            drop |= 1 << (n - p);
        }
        Ok(self.keep_mask(!drop & mask(n)))
    }

    /// Subsequence formed by the letters whose packed bit is set in `keep`.
    #[inline]
    pub(crate) fn keep_mask(self, keep: u64) -> Word {
        let mut bits = 0u64;
        let mut len = 0usize;
        let mut rest = keep & mask(self.len());
        while rest != 0 {
            let top = 63 - rest.leading_zeros() as usize;
            bits = (bits << 1) | ((self.bits >> top) & 1);
            len += 1;
            rest &= !(1u64 << top);
        }
        Word::from_bits_unchecked(bits, len)
    }

    /// The word without its first and last letters; empty if `len < 2`.
    pub fn inner(self) -> Word {
        if self.len() < 2 {
            return Word::empty();
        }
        let n = self.len() - 2;
        Word::from_bits_unchecked((self.bits >> 1) & mask(n), n)
    }

    /// All words of length `len`, in increasing packed order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 32, "refusing to enumerate 2^{len} words");
        (0..1u64 << len).map(move |bits| Word::from_bits_unchecked(bits, len))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    /// Only `a` and `b`.
    #[default]
    Letters,
    /// `a`/`b`, plus `0` as `a` and `1` as `b`.
    LettersOrDigits,
}

pub fn parse_word(text: &str) -> Result<Word> {
    parse_word_with(text, Alphabet::Letters)
}

pub fn parse_word_with(text: &str, alphabet: Alphabet) -> Result<Word> {
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        let letter = match (c, alphabet) {
            ('a', _) | ('0', Alphabet::LettersOrDigits) => Letter::A,
            ('b', _) | ('1', Alphabet::LettersOrDigits) => Letter::B,
            _ => {
                return Err(Error::InvalidLetter {
                    position: i + 1,
                    character: c,
                })
            }
        };
        letters.push(letter);
    }
    Word::from_letters(letters)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Word> {
        parse_word(&s)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            f.write_str(if l == Letter::A { "a" } else { "b" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter words first, then lexicographic (`a < b`).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}
