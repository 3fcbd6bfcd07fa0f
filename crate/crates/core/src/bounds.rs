//! The extremal word family `b^{n+1} (ab)^n b^{2n+1+α} a^{2n+1+β}` and the
//! closed-form bounds on `S_d(n)`.
//!
//! Integer parts are floors toward negative infinity. The only in-scope
//! argument where the sign matters is the inner term of the lower bound at
//! `n = 2`, and floor and truncation both give 0 there.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subseq::sd;
use crate::word::{Letter, Word, MAX_WORD_LEN};

/// Admissible `(α, β)` pairs for the construction.
pub const CONSTRUCTION_PAIRS: [(u32, u32); 7] =
    [(0, 0), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (4, 2)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: u32,
    pub alpha: u32,
    pub beta: u32,
}

impl ConstructionParams {
    pub fn new(n: u32, alpha: u32, beta: u32) -> Result<Self> {
        if !CONSTRUCTION_PAIRS.contains(&(alpha, beta)) {
            return Err(Error::InvalidPair { alpha, beta });
        }
        Ok(ConstructionParams { n, alpha, beta })
    }

    /// `7n + 3 + α + β`.
    pub fn word_len(&self) -> usize {
        (7 * self.n + 3 + self.alpha + self.beta) as usize
    }

    fn validate(&self) -> Result<()> {
        ConstructionParams::new(self.n, self.alpha, self.beta).map(|_| ())
    }
}

pub fn build_word(p: ConstructionParams) -> Result<Word> {
    p.validate()?;
    if p.word_len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong {
            length: p.word_len(),
            max: MAX_WORD_LEN,
        });
    }
    let n = p.n as usize;
    let (alpha, beta) = (p.alpha as usize, p.beta as usize);
    let mut letters = Vec::with_capacity(p.word_len());
    letters.extend(std::iter::repeat_n(Letter::B, n + 1));
    for _ in 0..n {
        letters.extend([Letter::A, Letter::B]);
    }
    letters.extend(std::iter::repeat_n(Letter::B, 2 * n + 1 + alpha));
    letters.extend(std::iter::repeat_n(Letter::A, 2 * n + 1 + beta));
    Word::from_letters(letters)
}

/// `3n + 1 + floor((α + β) / 3)`.
pub fn lemma4_bound(p: ConstructionParams) -> Result<usize> {
    p.validate()?;
    Ok((3 * p.n + 1 + (p.alpha + p.beta) / 3) as usize)
}

/// `floor((n + 2 floor((n - 3) / 7)) / 3)` for `n >= 2`.
pub fn theorem_lower_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Domain {
            what: "theorem_lower_bound",
            n: n as i64,
            min: 2,
        });
    }
    let n = n as i64;
    let inner = (n - 3).div_euclid(7);
    Ok((n + 2 * inner).div_euclid(3) as usize)
}

/// `floor(n / 2)`: deleting every `a` (or every `b`) leaves a palindrome.
pub fn theorem_upper_bound(n: usize) -> usize {
    n / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    /// With `k`, the decomposition `n = 7t + 3 + k`, `0 <= k <= 6`; absent for `n < 3`.
    pub t: Option<usize>,
    pub k: Option<usize>,
}

pub fn bounds_row(n: usize) -> Result<BoundsRow> {
    let lower = theorem_lower_bound(n)?;
    let (t, k) = if n >= 3 {
        (Some((n - 3) / 7), Some((n - 3) % 7))
    } else {
        (None, None)
    };
    Ok(BoundsRow {
        n,
        lower,
        upper: theorem_upper_bound(n),
        t,
        k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma4Check {
    pub params: ConstructionParams,
    pub word: Word,
    pub length: usize,
    pub bound: usize,
    pub computed: usize,
    pub passed: bool,
}

/// Evaluates `S_d` on every construction word with `0 <= n <= n_max`.
///
/// A triple passes when `computed >= bound`, or `computed == bound` when
/// `check_equality` is set.
pub fn verify_lemma4(n_max: u32, check_equality: bool) -> Result<Vec<Lemma4Check>> {
    let longest = 7 * n_max as usize + 3 + 6;
    if longest > MAX_WORD_LEN {
        return Err(Error::LengthBudgetExceeded {
            what: "construction word",
            length: longest,
            limit: MAX_WORD_LEN,
        });
    }
    let mut out = Vec::with_capacity(7 * (n_max as usize + 1));
    for n in 0..=n_max {
        for &(alpha, beta) in &CONSTRUCTION_PAIRS {
            let params = ConstructionParams::new(n, alpha, beta)?;
            let word = build_word(params)?;
            let bound = lemma4_bound(params)?;
            let computed = sd(word).value;
            let passed = if check_equality {
                computed == bound
            } else {
                computed >= bound
            };
            out.push(Lemma4Check {
                params,
                word,
                length: word.len(),
                bound,
                computed,
                passed,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn params(n: u32, a: u32, b: u32) -> ConstructionParams {
        ConstructionParams::new(n, a, b).unwrap()
    }

    #[test]
    fn build_examples() {
        let w = build_word(params(1, 0, 0)).unwrap();
        assert_eq!(w, parse_word("bbabbbbaaa").unwrap());
        assert_eq!(w.len(), 10);
        assert_eq!(build_word(params(1, 4, 2)).unwrap().len(), 16);
        assert_eq!(
            ConstructionParams::new(1, 5, 0),
            Err(Error::InvalidPair { alpha: 5, beta: 0 })
        );
        let forged = ConstructionParams {
            n: 1,
            alpha: 5,
            beta: 5,
        };
        assert!(build_word(forged).is_err());
        assert!(lemma4_bound(forged).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(lemma4_bound(params(1, 0, 0)).unwrap(), 4);
        assert_eq!(lemma4_bound(params(1, 4, 2)).unwrap(), 6);
        assert_eq!(lemma4_bound(params(0, 0, 0)).unwrap(), 1);
    }

    #[test]
    fn theorem_bound_examples() {
        assert_eq!(theorem_lower_bound(10).unwrap(), 4);
        assert_eq!(theorem_lower_bound(20).unwrap(), 8);
        assert_eq!(theorem_lower_bound(2).unwrap(), 0);
        // Truncation toward zero gives the same value at n = 2.
        let n = std::hint::black_box(2i64);
        assert_eq!((n + 2 * ((n - 3) / 7)) / 3, 0);
        assert_eq!((n + 2 * (n - 3).div_euclid(7)).div_euclid(3), 0);
        assert!(matches!(theorem_lower_bound(1), Err(Error::Domain { .. })));
        assert_eq!(theorem_upper_bound(10), 5);
        assert_eq!(theorem_upper_bound(1), 0);
        assert_eq!(theorem_upper_bound(7), 3);
    }

    #[test]
    fn length_identity() {
        for n in 0..=5 {
            for &(a, b) in &CONSTRUCTION_PAIRS {
                let p = params(n, a, b);
                assert_eq!(build_word(p).unwrap().len(), (7 * n + 3 + a + b) as usize);
            }
        }
    }

    #[test]
    fn bound_consistency_and_decomposition() {
        for n in 2..=24 {
            assert!(theorem_lower_bound(n).unwrap() <= theorem_upper_bound(n));
        }
        for n in 3..=100 {
            let row = bounds_row(n).unwrap();
            let (t, k) = (row.t.unwrap(), row.k.unwrap());
            assert_eq!(n, 7 * t + 3 + k);
            assert!(k <= 6);
            assert_eq!(row.lower, 3 * t + 1 + k / 3, "n={n}");
        }
        assert_eq!(bounds_row(2).unwrap().t, None);
    }

    #[test]
    fn pair_preconditions() {
        for &(a, b) in &CONSTRUCTION_PAIRS {
            let q = (a + b) / 3;
            assert!(q <= b);
            assert!(q + b <= a, "({a},{b})");
        }
    }

    #[test]
    fn verify_examples() {
        let r = verify_lemma4(1, true).unwrap();
        assert_eq!(r.len(), 14);
        assert!(r.iter().all(|c| c.passed));
        let r = verify_lemma4(4, true).unwrap();
        assert_eq!(r.len(), 35);
        assert!(r.iter().all(|c| c.passed && c.computed == c.bound));
        let r = verify_lemma4(0, false).unwrap();
        assert_eq!(r.len(), 7);
        assert!(r.iter().all(|c| c.passed));
        assert!(verify_lemma4(8, true).is_err());
    }
}
